#ifndef SCHURTWIRL_MATRIXIO_HPP
#define SCHURTWIRL_MATRIXIO_HPP

#include <iosfwd>
#include <string>

#include "schurtwirl/common.hpp"
#include "schurtwirl/schurbasis.hpp"
#include "schurtwirl/twirl.hpp"

namespace schurtwirl {

inline constexpr const char* kLibraryVersion = "1.0.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON container {"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}.
// Doubles are printed with 17 significant digits so write-then-read is
// bit-identical.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

void write_beta_csv(std::ostream& out, const BetaTable& table);

// Schur basis disk cache, keyed by (d, t, library version).
std::string cache_dir();  // honors SCHURTWIRL_CACHE_DIR
std::string cache_path(int d, int t);
void write_basis_cache(const std::string& path, const SchurDecomposition& basis);
bool read_basis_cache(const std::string& path, int d, int t, SchurDecomposition& basis);

// Build or load from cache.
SchurDecomposition load_schur_basis(int d, int t, bool use_cache = true,
                                    long capacity = kDefaultCapacity);

}  // namespace schurtwirl

#endif
