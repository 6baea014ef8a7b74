#include "schurtwirl/schurbasis.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace schurtwirl {

long SchurDecomposition::dim() const { return tensor_dim(d, t); }

const SchurBlock& SchurDecomposition::block(int i) const {
    if (i < 1 || i > (int)blocks.size())
        throw std::out_of_range("block index out of range");
    return blocks[i - 1];
}

Matrix SchurDecomposition::pi_full(int i, long m1, long l1, int j, long m2, long l2) const {
    const SchurBlock& bi = block(i);
    const SchurBlock& bj = block(j);
    if (m1 < 1 || m1 > bi.dim_gl || l1 < 1 || l1 > bi.dim_sym ||
        m2 < 1 || m2 > bj.dim_gl || l2 < 1 || l2 > bj.dim_sym)
        throw std::out_of_range("pi_full index out of range");
    return bi.vec(m1, l1) * bj.vec(m2, l2).adjoint();
}

Matrix SchurDecomposition::pi_lambda(int i, long l1, long l2) const {
    const SchurBlock& b = block(i);
    if (l1 < 1 || l1 > b.dim_sym || l2 < 1 || l2 > b.dim_sym)
        throw std::out_of_range("pi_lambda index out of range");
    Matrix out = Matrix::Zero(dim(), dim());
    for (long m = 1; m <= b.dim_gl; ++m)
        out += b.vec(m, l1) * b.vec(m, l2).adjoint();
    return out;
}

Matrix SchurDecomposition::pi_m(int i, long m1, long m2) const {
    const SchurBlock& b = block(i);
    if (m1 < 1 || m1 > b.dim_gl || m2 < 1 || m2 > b.dim_gl)
        throw std::out_of_range("pi_m index out of range");
    Matrix out = Matrix::Zero(dim(), dim());
    for (long l = 1; l <= b.dim_sym; ++l)
        out += b.vec(m1, l) * b.vec(m2, l).adjoint();
    return out;
}

Matrix SchurDecomposition::pi_block(int i) const {
    const SchurBlock& b = block(i);
    return b.vectors * b.vectors.adjoint();
}

namespace {

// Permutation sending the normal tableau's entry at each cell to the entry
// of tab at the same cell.
Permutation cell_map_permutation(const StandardTableau& normal, const StandardTableau& tab) {
    int t = tab.shape.box_count();
    Permutation p = Permutation::identity(t);
    for (size_t r = 0; r < normal.entries.size(); ++r)
        for (size_t c = 0; c < normal.entries[r].size(); ++c)
            p.images[normal.entries[r][c] - 1] = tab.entries[r][c];
    return p;
}

Matrix inverse_sqrt_hermitian(const Matrix& g, double min_eig_floor) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    if (es.eigenvalues().minCoeff() < min_eig_floor)
        throw ConstructionError("lambda-sector Gram matrix numerically singular");
    RealVector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    return es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

SchurDecomposition build_schur_basis(int d, int t, long capacity) {
    if (d < 2 || t < 1) throw std::invalid_argument("build_schur_basis: need d >= 2, t >= 1");
    long n = tensor_dim(d, t, capacity);

    SchurDecomposition dec;
    dec.d = d;
    dec.t = t;

    for (const Partition& p : enumerate_partitions(t, d)) {
        long dim_gl = weyl_dimension(p, d);
        long dim_sym = hook_dimension(p);
        auto tableaux = standard_tableaux(p);

        Matrix Y = young_symmetrizer(tableaux[0], d);
        Eigen::JacobiSVD<Matrix> svd(Y, Eigen::ComputeThinU);
        double cutoff = 1e-10 * svd.singularValues()(0);
        long rank = 0;
        while (rank < svd.singularValues().size() && svd.singularValues()(rank) > cutoff) ++rank;
        if (rank != dim_gl)
            throw ConstructionError("symmetrizer rank " + std::to_string(rank) +
                                    " does not match Weyl dimension " + std::to_string(dim_gl) +
                                    " for partition " + p.to_string());
        Matrix base = svd.matrixU().leftCols(dim_gl);  // columns are |i,m,1>

        // Candidates per lambda sector: O_{p_lambda} applied to all m at once.
        std::vector<Matrix> cand(dim_sym);
        cand[0] = base;
        for (long l = 1; l < dim_sym; ++l) {
            Permutation pl = cell_map_permutation(tableaux[0], tableaux[l]);
            cand[l] = permutation_matrix_direct(pl, d, t, capacity) * base;
        }

        // Schur's lemma makes the candidate Gram factor as delta_mm' * g;
        // average over m and mix sectors uniformly by g^{-1/2}.
        Matrix gram(dim_sym, dim_sym);
        for (long a = 0; a < dim_sym; ++a)
            for (long b = 0; b < dim_sym; ++b)
                gram(a, b) = (cand[a].adjoint() * cand[b]).trace() / (double)dim_gl;
        Matrix mix = inverse_sqrt_hermitian(gram, 1e-8);

        SchurBlock block;
        block.partition = p;
        block.dim_gl = dim_gl;
        block.dim_sym = dim_sym;
        block.vectors.resize(n, dim_gl * dim_sym);
        for (long l = 0; l < dim_sym; ++l) {
            Matrix sector = Matrix::Zero(n, dim_gl);
            for (long a = 0; a < dim_sym; ++a) sector += cand[a] * mix(a, l);
            block.vectors.middleCols(l * dim_gl, dim_gl) = sector;
        }
        dec.blocks.push_back(std::move(block));
    }
    return dec;
}

SchurCoefficients decompose_in_schur(const Matrix& X, const SchurDecomposition& basis) {
    long n = basis.dim();
    if (X.rows() != n || X.cols() != n)
        throw std::invalid_argument("decompose_in_schur: dimension mismatch");

    SchurCoefficients out;
    Matrix recon_m = Matrix::Zero(n, n);
    Matrix recon_l = Matrix::Zero(n, n);

    for (const SchurBlock& b : basis.blocks) {
        Matrix C = b.vectors.adjoint() * X * b.vectors;
        Matrix mt = Matrix::Zero(b.dim_gl, b.dim_gl);
        Matrix lt = Matrix::Zero(b.dim_sym, b.dim_sym);
        for (long l = 0; l < b.dim_sym; ++l)
            mt += C.block(l * b.dim_gl, l * b.dim_gl, b.dim_gl, b.dim_gl);
        for (long l1 = 0; l1 < b.dim_sym; ++l1)
            for (long l2 = 0; l2 < b.dim_sym; ++l2)
                lt(l1, l2) += C.block(l1 * b.dim_gl, l2 * b.dim_gl, b.dim_gl, b.dim_gl).trace();

        // Expansion coefficients carry 1/D_V (m basis) and 1/D_L (lambda basis).
        Matrix Cm = Matrix::Zero(b.total_dim(), b.total_dim());
        Matrix Cl = Matrix::Zero(b.total_dim(), b.total_dim());
        for (long l = 0; l < b.dim_sym; ++l)
            Cm.block(l * b.dim_gl, l * b.dim_gl, b.dim_gl, b.dim_gl) = mt / (double)b.dim_sym;
        for (long l1 = 0; l1 < b.dim_sym; ++l1)
            for (long l2 = 0; l2 < b.dim_sym; ++l2)
                Cl.block(l1 * b.dim_gl, l2 * b.dim_gl, b.dim_gl, b.dim_gl) +=
                    lt(l1, l2) / (double)b.dim_gl * Matrix::Identity(b.dim_gl, b.dim_gl);
        recon_m += b.vectors * Cm * b.vectors.adjoint();
        recon_l += b.vectors * Cl * b.vectors.adjoint();

        out.m_tables.push_back(std::move(mt));
        out.lambda_tables.push_back(std::move(lt));
    }
    out.m_residual = max_abs(X - recon_m);
    out.lambda_residual = max_abs(X - recon_l);
    return out;
}

}  // namespace schurtwirl
