#ifndef SCHURTWIRL_TWIRL_HPP
#define SCHURTWIRL_TWIRL_HPP

#include <utility>
#include <vector>

#include "schurtwirl/common.hpp"
#include "schurtwirl/measures.hpp"
#include "schurtwirl/schurbasis.hpp"

namespace schurtwirl {

// d^t x d^t operator; subnormalized traces are allowed since SLOCC
// averaging is trace non-increasing.
struct DensityState {
    Matrix matrix;

    double trace() const { return matrix.trace().real(); }
    // Hermiticity, positivity and trace bounds; throws std::domain_error.
    void validate(bool allow_subnormalized = true, double tol = 1e-10) const;
};

struct BetaRow {
    Partition partition;
    long dim_gl, dim_sym;
    long dim() const { return dim_gl * dim_sym; }
    double beta;
    double ratio() const { return beta / (double)dim(); }
};

using BetaTable = std::vector<BetaRow>;

// Haar average over collective unitaries, in closed form.
DensityState unitary_twirl(const DensityState& rho, const SchurDecomposition& basis);

// Average over all subsystem permutations, in closed form.
DensityState symmetric_twirl(const DensityState& rho, const SchurDecomposition& basis);

// A = int (A_n^{x t})^2 dmu.  Built-in d = 2 family diag(1, x^{-2}).
Matrix abelian_integral(const MeasureSpec& measure, int d, int t);

// User-supplied diagonal family for d > 2: (normalized diagonal, weight) pairs.
Matrix abelian_integral(const std::vector<std::pair<RealVector, double>>& family, int t);

// Coefficients a_k = Tr(a^{x t} Pi_k) of the twirl of a collective operator;
// checks that the twirl is block-scalar against the full closed form.
std::vector<Complex> twirl_of_collective(const Matrix& alpha, const SchurDecomposition& basis);

BetaTable beta_coefficients(const Matrix& abelian, const SchurDecomposition& basis);

// Closed-form SLOCC twirl: block k of the unitary twirl scaled by beta_k/D^k.
DensityState slocc_twirl(const DensityState& rho, const BetaTable& beta,
                         const SchurDecomposition& basis);

// m applications in one step: scale factors (beta_k/D^k)^m.
DensityState slocc_twirl_iterated(const DensityState& rho, const BetaTable& beta,
                                  const SchurDecomposition& basis, int m);

// <p_M> = sum_k (beta_k/D^k) Tr(rho Pi_k) = Tr(slocc_twirl(rho)).
double mean_success_probability(const DensityState& rho, const BetaTable& beta,
                                const SchurDecomposition& basis);

// Projection onto block k, renormalized, with its success weight.
std::pair<DensityState, double> postselect_block(const DensityState& rho, int k,
                                                 const SchurDecomposition& basis);

}  // namespace schurtwirl

#endif
