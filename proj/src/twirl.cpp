#include "schurtwirl/twirl.hpp"

#include <cmath>
#include <stdexcept>

namespace schurtwirl {

void DensityState::validate(bool allow_subnormalized, double tol) const {
    if (matrix.rows() != matrix.cols())
        throw std::domain_error("density state must be square");
    if (max_abs(matrix - matrix.adjoint()) > tol)
        throw std::domain_error("density state not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol)
        throw std::domain_error("density state not positive semidefinite");
    double tr = trace();
    if (tr <= 0 || tr > 1.0 + tol)
        throw std::domain_error("density state trace out of range");
    if (!allow_subnormalized && std::abs(tr - 1.0) > tol)
        throw std::domain_error("density state is subnormalized");
}

namespace {

enum class TwirlKind { Unitary, Symmetric };

// Both closed forms act block-by-block on the Schur coefficient matrix
// C = B^dag rho B:  the unitary twirl keeps the lambda-lambda structure and
// averages over m, the symmetric twirl keeps m-m structure and averages over
// lambda.  scale[k] multiplies the whole block (1 for the plain twirls).
Matrix twirl_impl(const Matrix& rho, const SchurDecomposition& basis, TwirlKind kind,
                  const std::vector<double>& scale) {
    long n = basis.dim();
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("twirl: dimension mismatch");
    Matrix out = Matrix::Zero(n, n);
    for (size_t k = 0; k < basis.blocks.size(); ++k) {
        const SchurBlock& b = basis.blocks[k];
        Matrix C = b.vectors.adjoint() * rho * b.vectors;
        Matrix Cp = Matrix::Zero(b.total_dim(), b.total_dim());
        if (kind == TwirlKind::Unitary) {
            for (long l1 = 0; l1 < b.dim_sym; ++l1)
                for (long l2 = 0; l2 < b.dim_sym; ++l2) {
                    Complex coeff =
                        C.block(l1 * b.dim_gl, l2 * b.dim_gl, b.dim_gl, b.dim_gl).trace() /
                        (double)b.dim_gl;
                    Cp.block(l1 * b.dim_gl, l2 * b.dim_gl, b.dim_gl, b.dim_gl) =
                        coeff * Matrix::Identity(b.dim_gl, b.dim_gl);
                }
        } else {
            Matrix mt = Matrix::Zero(b.dim_gl, b.dim_gl);
            for (long l = 0; l < b.dim_sym; ++l)
                mt += C.block(l * b.dim_gl, l * b.dim_gl, b.dim_gl, b.dim_gl);
            mt /= (double)b.dim_sym;
            for (long l = 0; l < b.dim_sym; ++l)
                Cp.block(l * b.dim_gl, l * b.dim_gl, b.dim_gl, b.dim_gl) = mt;
        }
        out += scale[k] * (b.vectors * Cp * b.vectors.adjoint());
    }
    return out;
}

std::vector<double> unit_scales(const SchurDecomposition& basis) {
    return std::vector<double>(basis.blocks.size(), 1.0);
}

std::vector<double> beta_scales(const BetaTable& beta, const SchurDecomposition& basis, int m) {
    if (beta.size() != basis.blocks.size())
        throw std::invalid_argument("beta table does not match basis");
    std::vector<double> s(beta.size());
    for (size_t k = 0; k < beta.size(); ++k) s[k] = std::pow(beta[k].ratio(), m);
    return s;
}

}  // namespace

DensityState unitary_twirl(const DensityState& rho, const SchurDecomposition& basis) {
    return {twirl_impl(rho.matrix, basis, TwirlKind::Unitary, unit_scales(basis))};
}

DensityState symmetric_twirl(const DensityState& rho, const SchurDecomposition& basis) {
    return {twirl_impl(rho.matrix, basis, TwirlKind::Symmetric, unit_scales(basis))};
}

Matrix abelian_integral(const MeasureSpec& measure, int d, int t) {
    if (d != 2)
        throw std::invalid_argument("built-in abelian integral is d = 2 only; "
                                    "supply a diagonal family for d > 2");
    long n = tensor_dim(2, t);
    // Diagonal entry for a basis state with j factors |1> is int x^{-4j} dmu.
    std::vector<double> moment(t + 1);
    for (int j = 0; j <= t; ++j)
        moment[j] = integrate([j](double x) { return std::pow(x, -4.0 * j); }, measure);
    Matrix a = Matrix::Zero(n, n);
    for (long idx = 0; idx < n; ++idx) {
        int ones = 0;
        for (long v = idx; v > 0; v >>= 1) ones += (int)(v & 1);
        a(idx, idx) = moment[ones];
    }
    return a;
}

Matrix abelian_integral(const std::vector<std::pair<RealVector, double>>& family, int t) {
    if (family.empty()) throw std::invalid_argument("empty diagonal family");
    long d = family.front().first.size();
    long n = tensor_dim((int)d, t);
    Matrix a = Matrix::Zero(n, n);
    for (const auto& [diag, w] : family) {
        if (diag.size() != d) throw std::invalid_argument("inconsistent family dimensions");
        RealVector sq = diag.cwiseProduct(diag);
        for (long idx = 0; idx < n; ++idx) {
            double entry = 1.0;
            long rem = idx;
            for (int slot = 0; slot < t; ++slot) {
                entry *= sq[rem % d];
                rem /= d;
            }
            a(idx, idx) += w * entry;
        }
    }
    return a;
}

std::vector<Complex> twirl_of_collective(const Matrix& alpha, const SchurDecomposition& basis) {
    if (alpha.rows() != basis.d || alpha.cols() != basis.d)
        throw std::invalid_argument("collective operator must be d x d");
    Eigen::JacobiSVD<Matrix> svd(alpha);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * sv(0))
        throw std::domain_error("collective operator is numerically singular");

    Matrix power = kron_power(alpha, basis.t);
    std::vector<Complex> coeffs;
    Matrix block_form = Matrix::Zero(basis.dim(), basis.dim());
    for (size_t k = 0; k < basis.blocks.size(); ++k) {
        const SchurBlock& b = basis.blocks[k];
        Complex ak = (b.vectors.adjoint() * power * b.vectors).trace();
        coeffs.push_back(ak);
        block_form += ak / (double)b.total_dim() * (b.vectors * b.vectors.adjoint());
    }
    Matrix twirled = twirl_impl(power, basis, TwirlKind::Unitary, unit_scales(basis));
    if (max_abs(twirled - block_form) > 1e-10)
        throw ConstructionError("collective twirl is not block-scalar");
    return coeffs;
}

BetaTable beta_coefficients(const Matrix& abelian, const SchurDecomposition& basis) {
    BetaTable table;
    for (const SchurBlock& b : basis.blocks) {
        BetaRow row;
        row.partition = b.partition;
        row.dim_gl = b.dim_gl;
        row.dim_sym = b.dim_sym;
        row.beta = (b.vectors.adjoint() * abelian * b.vectors).trace().real();
        table.push_back(row);
    }
    return table;
}

DensityState slocc_twirl(const DensityState& rho, const BetaTable& beta,
                         const SchurDecomposition& basis) {
    return {twirl_impl(rho.matrix, basis, TwirlKind::Unitary, beta_scales(beta, basis, 1))};
}

DensityState slocc_twirl_iterated(const DensityState& rho, const BetaTable& beta,
                                  const SchurDecomposition& basis, int m) {
    if (m < 1) throw std::invalid_argument("iteration count must be positive");
    return {twirl_impl(rho.matrix, basis, TwirlKind::Unitary, beta_scales(beta, basis, m))};
}

double mean_success_probability(const DensityState& rho, const BetaTable& beta,
                                const SchurDecomposition& basis) {
    if (beta.size() != basis.blocks.size())
        throw std::invalid_argument("beta table does not match basis");
    double p = 0;
    for (size_t k = 0; k < beta.size(); ++k) {
        const SchurBlock& b = basis.blocks[k];
        double weight = (b.vectors.adjoint() * rho.matrix * b.vectors).trace().real();
        p += beta[k].ratio() * weight;
    }
    return p;
}

std::pair<DensityState, double> postselect_block(const DensityState& rho, int k,
                                                 const SchurDecomposition& basis) {
    const SchurBlock& b = basis.block(k);
    Matrix C = b.vectors.adjoint() * rho.matrix * b.vectors;
    double block_trace = C.trace().real();
    if (block_trace <= 1e-12)
        throw std::domain_error("postselection impossible: negligible block weight");
    Matrix projected = b.vectors * C * b.vectors.adjoint();
    return {{projected / block_trace}, block_trace / rho.trace()};
}

}  // namespace schurtwirl
