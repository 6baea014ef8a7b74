#include "schurtwirl/permops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace schurtwirl {

long tensor_dim(int d, int t, long capacity) {
    long n = 1;
    for (int k = 0; k < t; ++k) {
        n *= d;
        if (n > capacity)
            throw CapacityError("tensor dimension d^t exceeds capacity cap " +
                                std::to_string(capacity));
    }
    return n;
}

bool Permutation::is_valid() const {
    int t = size();
    std::vector<bool> seen(t + 1, false);
    for (int v : images) {
        if (v < 1 || v > t || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::identity(int t) {
    Permutation p;
    p.images.resize(t);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(size());
    for (int k = 1; k <= size(); ++k) inv.images[apply(k) - 1] = k;
    return inv;
}

Permutation Permutation::compose(const Permutation& q) const {
    Permutation r;
    r.images.resize(size());
    for (int k = 1; k <= size(); ++k) r.images[k - 1] = apply(q.apply(k));
    return r;
}

std::vector<Permutation> all_permutations(int t) {
    std::vector<int> w(t);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{w});
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

// Basis index of |v_1 ... v_t>, factor 1 most significant.
long basis_index(const std::vector<int>& digits, int d) {
    long idx = 0;
    for (int v : digits) idx = idx * d + v;
    return idx;
}

std::vector<int> basis_digits(long idx, int d, int t) {
    std::vector<int> digits(t);
    for (int k = t - 1; k >= 0; --k) {
        digits[k] = (int)(idx % d);
        idx /= d;
    }
    return digits;
}

// target row of column idx under O_p
long permuted_index(const Permutation& pinv, long idx, int d, int t) {
    auto v = basis_digits(idx, d, t);
    std::vector<int> w(t);
    for (int k = 1; k <= t; ++k) w[k - 1] = v[pinv.apply(k) - 1];
    return basis_index(w, d);
}

// A += s * O_p without materializing O_p.
void add_permutation_scaled(Matrix& A, const Permutation& p, double s, int d, int t) {
    Permutation pinv = p.inverse();
    long n = A.cols();
    for (long idx = 0; idx < n; ++idx)
        A(permuted_index(pinv, idx, d, t), idx) += s;
}

}  // namespace

Matrix permutation_matrix_direct(const Permutation& p, int d, int t, long capacity) {
    if (!p.is_valid() || p.size() != t)
        throw std::invalid_argument("permutation_matrix_direct: invalid permutation");
    long n = tensor_dim(d, t, capacity);
    Matrix M = Matrix::Zero(n, n);
    add_permutation_scaled(M, p, 1.0, d, t);
    return M;
}

std::vector<Matrix> gellmann_generators(int d) {
    std::vector<Matrix> gens;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix sym = Matrix::Zero(d, d);
            sym(j, k) = sym(k, j) = 1.0;
            gens.push_back(sym);
            Matrix asym = Matrix::Zero(d, d);
            asym(j, k) = Complex(0, -1);
            asym(k, j) = Complex(0, 1);
            gens.push_back(asym);
        }
    for (int l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        double norm = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -l * norm;
        gens.push_back(diag);
    }
    return gens;
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// 1 x ... x op_i x ... x op_k x ... x 1 with op at 1-based slots i and k.
Matrix two_slot_embed(const Matrix& op_i, const Matrix& op_k, int i, int k, int d, int t) {
    Matrix out = Matrix::Identity(1, 1);
    for (int slot = 1; slot <= t; ++slot) {
        if (slot == i)
            out = kron(out, op_i);
        else if (slot == k)
            out = kron(out, op_k);
        else
            out = kron(out, Matrix::Identity(d, d));
    }
    return out;
}

}  // namespace

Matrix transposition_matrix_gellmann(int i, int k, int d, int t) {
    if (i == k) throw std::invalid_argument("transposition requires i != k");
    if (i > k) std::swap(i, k);
    if (i < 1 || k > t) throw std::invalid_argument("transposition slots out of range");
    long n = tensor_dim(d, t);
    Matrix M = Matrix::Identity(n, n) / (double)d;
    for (const Matrix& g : gellmann_generators(d))
        M += 0.5 * two_slot_embed(g, g, i, k, d, t);
    return M;
}

Matrix permutation_matrix_product(const Permutation& p, int d, int t) {
    if (!p.is_valid() || p.size() != t)
        throw std::invalid_argument("permutation_matrix_product: invalid permutation");
    // Bubble-sort the one-line notation; recorded adjacent swaps factor p.
    std::vector<int> w = p.images;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < t; ++j)
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                swaps.push_back(j + 1);  // transposition (j+1, j+2)
                moved = true;
            }
    }
    long n = tensor_dim(d, t);
    // p = tau_last o ... o tau_first, so multiply left-to-right in reverse.
    Matrix M = Matrix::Identity(n, n);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
        M = M * transposition_matrix_gellmann(*it, *it + 1, d, t);
    return M;
}

namespace {

// All permutations of {1..t} that permute entries only within the given
// disjoint cell groups (rows or columns of a tableau).
std::vector<Permutation> stabilizer_group(const std::vector<std::vector<int>>& groups, int t) {
    std::vector<Permutation> result{Permutation::identity(t)};
    for (const auto& cells : groups) {
        if (cells.size() < 2) continue;
        std::vector<int> perm(cells.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Permutation> extended;
        do {
            Permutation q = Permutation::identity(t);
            for (size_t a = 0; a < cells.size(); ++a)
                q.images[cells[a] - 1] = cells[perm[a]];
            for (const auto& base : result) extended.push_back(q.compose(base));
        } while (std::next_permutation(perm.begin(), perm.end()));
        result = std::move(extended);
    }
    return result;
}

int permutation_sign(const Permutation& p) {
    int t = p.size();
    std::vector<bool> seen(t + 1, false);
    int sign = 1;
    for (int k = 1; k <= t; ++k) {
        if (seen[k]) continue;
        int len = 0, j = k;
        while (!seen[j]) {
            seen[j] = true;
            j = p.apply(j);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

Matrix young_symmetrizer(const StandardTableau& tab, int d) {
    if (!tab.is_standard()) throw std::invalid_argument("young_symmetrizer: tableau not standard");
    int t = tab.shape.box_count();
    long n = tensor_dim(d, t);

    std::vector<std::vector<int>> row_cells;
    for (const auto& row : tab.entries) row_cells.push_back(row);
    std::vector<std::vector<int>> col_cells;
    int ncols = tab.shape.rows.empty() ? 0 : tab.shape.rows[0];
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> col;
        for (const auto& row : tab.entries)
            if (c < (int)row.size()) col.push_back(row[c]);
        col_cells.push_back(col);
    }

    auto row_group = stabilizer_group(row_cells, t);
    auto col_group = stabilizer_group(col_cells, t);

    Matrix Y = Matrix::Zero(n, n);
    for (const auto& pr : row_group)
        for (const auto& pc : col_group)
            add_permutation_scaled(Y, pr.compose(pc), permutation_sign(pc), d, t);
    Y /= (double)(row_group.size() * col_group.size());
    return Y;
}

}  // namespace schurtwirl
