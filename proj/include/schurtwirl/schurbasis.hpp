#ifndef SCHURTWIRL_SCHURBASIS_HPP
#define SCHURTWIRL_SCHURBASIS_HPP

#include <vector>

#include "schurtwirl/common.hpp"
#include "schurtwirl/permops.hpp"
#include "schurtwirl/tableaux.hpp"

namespace schurtwirl {

// One isotypic block of the Schur basis.  vectors has d^t rows and
// D_L * D_V columns; column (lambda-1)*D_L + (m-1) holds |i,m,lambda>.
struct SchurBlock {
    Partition partition;
    long dim_gl;   // D_L, dimension of the GL(d) irrep
    long dim_sym;  // D_V, multiplicity / dimension of the S_t irrep
    Matrix vectors;

    long total_dim() const { return dim_gl * dim_sym; }
    // 1-based m in 1..D_L, lambda in 1..D_V.
    Vector vec(long m, long lambda) const {
        return vectors.col((lambda - 1) * dim_gl + (m - 1));
    }
};

struct SchurDecomposition {
    int d = 0;
    int t = 0;
    std::vector<SchurBlock> blocks;

    long dim() const;  // d^t

    // Operator bases.  Block index i is 1-based; m, lambda 1-based.
    Matrix pi_full(int i, long m1, long l1, int j, long m2, long l2) const;
    Matrix pi_lambda(int i, long l1, long l2) const;
    Matrix pi_m(int i, long m1, long m2) const;
    Matrix pi_block(int i) const;

    const SchurBlock& block(int i) const;
};

// Coefficient tables of an operator in both Schur operator bases.
// m_tables[k](m1,m2) = Tr(X pi_m(k,m1,m2)^dag), likewise lambda_tables.
struct SchurCoefficients {
    std::vector<Matrix> m_tables;
    std::vector<Matrix> lambda_tables;
    double m_residual = 0;       // max-entry error of the m-basis expansion
    double lambda_residual = 0;  // max-entry error of the lambda-basis expansion
};

// Appendix-style construction: normal-tableau symmetrizer column space,
// candidates O_{p_lambda}|i,m,1>, then an equivariant (m-uniform) mixing by
// the inverse square root of the lambda-sector Gram matrix.
SchurDecomposition build_schur_basis(int d, int t, long capacity = kDefaultCapacity);

SchurCoefficients decompose_in_schur(const Matrix& X, const SchurDecomposition& basis);

}  // namespace schurtwirl

#endif
