#include "schurtwirl/matrixio.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace schurtwirl {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix container missing rows/cols/entries");
    long rows = j["rows"].get<long>();
    long cols = j["cols"].get<long>();
    const json& entries = j["entries"];
    if ((long)entries.size() != rows)
        throw ParseError("matrix container: row count mismatch");
    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if ((long)row.size() != cols)
            throw ParseError("matrix container: column count mismatch");
        for (long jcol = 0; jcol < cols; ++jcol) {
            const json& e = row[jcol];
            if (!e.is_array() || e.size() != 2)
                throw ParseError("matrix container: entry is not an [re, im] pair");
            m(i, jcol) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

}  // namespace

void write_matrix(std::ostream& out, const Matrix& m) {
    // nlohmann serializes doubles at max_digits10, which round-trips exactly.
    out << matrix_to_json(m).dump(1) << "\n";
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(out, m);
}

Matrix read_matrix(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    return read_matrix(in);
}

void write_beta_csv(std::ostream& out, const BetaTable& table) {
    out << "block,partition,D_L,D_V,D,beta,ratio\n";
    out << std::setprecision(17);
    for (size_t k = 0; k < table.size(); ++k) {
        const BetaRow& r = table[k];
        out << (k + 1) << "," << r.partition.to_string() << "," << r.dim_gl << ","
            << r.dim_sym << "," << r.dim() << "," << r.beta << "," << r.ratio() << "\n";
    }
}

std::string cache_dir() {
    if (const char* env = std::getenv("SCHURTWIRL_CACHE_DIR")) return env;
    return (std::filesystem::temp_directory_path() / "schurtwirl-cache").string();
}

std::string cache_path(int d, int t) {
    std::ostringstream name;
    name << "basis-d" << d << "-t" << t << "-v" << kLibraryVersion << ".json";
    return (std::filesystem::path(cache_dir()) / name.str()).string();
}

void write_basis_cache(const std::string& path, const SchurDecomposition& basis) {
    json blocks = json::array();
    for (const SchurBlock& b : basis.blocks)
        blocks.push_back({{"partition", b.partition.rows},
                          {"dim_gl", b.dim_gl},
                          {"dim_sym", b.dim_sym},
                          {"vectors", matrix_to_json(b.vectors)}});
    json j{{"version", kLibraryVersion}, {"d", basis.d}, {"t", basis.t},
           {"blocks", std::move(blocks)}};
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write basis cache: " + path);
    out << j.dump() << "\n";
}

bool read_basis_cache(const std::string& path, int d, int t, SchurDecomposition& basis) {
    std::ifstream in(path);
    if (!in) return false;
    json j;
    try {
        in >> j;
        if (j.at("version") != kLibraryVersion || j.at("d") != d || j.at("t") != t)
            return false;
        SchurDecomposition dec;
        dec.d = d;
        dec.t = t;
        for (const json& jb : j.at("blocks")) {
            SchurBlock b;
            b.partition.rows = jb.at("partition").get<std::vector<int>>();
            b.dim_gl = jb.at("dim_gl").get<long>();
            b.dim_sym = jb.at("dim_sym").get<long>();
            b.vectors = matrix_from_json(jb.at("vectors"));
            dec.blocks.push_back(std::move(b));
        }
        basis = std::move(dec);
        return true;
    } catch (const std::exception&) {
        return false;  // stale or corrupt cache; caller rebuilds
    }
}

SchurDecomposition load_schur_basis(int d, int t, bool use_cache, long capacity) {
    std::string path = cache_path(d, t);
    if (use_cache) {
        SchurDecomposition cached;
        if (read_basis_cache(path, d, t, cached)) return cached;
    }
    SchurDecomposition basis = build_schur_basis(d, t, capacity);
    if (use_cache) {
        try {
            write_basis_cache(path, basis);
        } catch (const std::exception&) {
            // cache is best-effort
        }
    }
    return basis;
}

}  // namespace schurtwirl
