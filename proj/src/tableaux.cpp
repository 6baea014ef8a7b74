#include "schurtwirl/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurtwirl {

int Partition::box_count() const {
    return std::accumulate(rows.begin(), rows.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows[i]);
    }
    return s + "]";
}

bool StandardTableau::is_standard() const {
    int t = shape.box_count();
    std::vector<bool> seen(t + 1, false);
    if ((int)entries.size() != (int)shape.rows.size()) return false;
    for (size_t r = 0; r < entries.size(); ++r) {
        if ((int)entries[r].size() != shape.rows[r]) return false;
        for (size_t c = 0; c < entries[r].size(); ++c) {
            int v = entries[r][c];
            if (v < 1 || v > t || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && entries[r][c - 1] >= v) return false;
            if (r > 0 && entries[r - 1][c] >= v) return false;
        }
    }
    return true;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& row : entries) w.insert(w.end(), row.begin(), row.end());
    return w;
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left,
                    std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int t, int d) {
    if (t < 1 || d < 1) throw std::invalid_argument("enumerate_partitions: t and d must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending first parts give lexicographically decreasing output directly.
    partitions_rec(t, t, d, cur, out);
    return out;
}

std::int64_t weyl_dimension(const Partition& p, int d) {
    if ((int)p.rows.size() > d)
        throw std::invalid_argument("weyl_dimension: partition has more rows than d");
    // Hook-content form of the same product; gcd reduction keeps the
    // intermediate fractions in 64-bit range even for large d.
    std::vector<int> col_len(p.rows.empty() ? 0 : p.rows[0], 0);
    for (int len : p.rows)
        for (int c = 0; c < len; ++c) ++col_len[c];
    std::int64_t num = 1, den = 1;
    for (size_t r = 0; r < p.rows.size(); ++r)
        for (int c = 0; c < p.rows[r]; ++c) {
            num *= d + c - (int)r;
            den *= (p.rows[r] - c - 1) + (col_len[c] - (int)r - 1) + 1;
            std::int64_t g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    return num / den;
}

std::int64_t hook_dimension(const Partition& p) {
    int t = p.box_count();
    std::vector<int> col_len(p.rows.empty() ? 0 : p.rows[0], 0);
    for (int len : p.rows)
        for (int c = 0; c < len; ++c) ++col_len[c];
    // t! / prod hooks, dividing as we go to avoid overflow for t <= 20.
    std::int64_t result = 1;
    std::vector<std::int64_t> hooks;
    for (size_t r = 0; r < p.rows.size(); ++r)
        for (int c = 0; c < p.rows[r]; ++c)
            hooks.push_back((p.rows[r] - c - 1) + (col_len[c] - (int)r - 1) + 1);
    std::sort(hooks.rbegin(), hooks.rend());
    std::int64_t num = 1;
    for (int k = 1; k <= t; ++k) num *= k;
    for (auto h : hooks) num /= h;
    result = num;
    return result;
}

namespace {

void tableaux_rec(const Partition& shape, int next, int t,
                  std::vector<std::vector<int>>& cells,
                  std::vector<int>& fill_count,
                  std::vector<StandardTableau>& out) {
    if (next > t) {
        out.push_back(StandardTableau{shape, cells});
        return;
    }
    for (size_t r = 0; r < shape.rows.size(); ++r) {
        int c = fill_count[r];
        if (c >= shape.rows[r]) continue;
        if (r > 0 && fill_count[r - 1] <= c) continue;  // column constraint
        cells[r][c] = next;
        ++fill_count[r];
        tableaux_rec(shape, next + 1, t, cells, fill_count, out);
        --fill_count[r];
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& p) {
    int t = p.box_count();
    std::vector<std::vector<int>> cells;
    for (int len : p.rows) cells.emplace_back(len, 0);
    std::vector<int> fill_count(p.rows.size(), 0);
    std::vector<StandardTableau> out;
    tableaux_rec(p, 1, t, cells, fill_count, out);
    // Normal tableau reads 1..t row-major, which is also the lexicographic
    // minimum of the reading words, so a plain sort puts it first.
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return a.reading_word() < b.reading_word();
              });
    return out;
}

}  // namespace schurtwirl
