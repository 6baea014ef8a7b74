#ifndef SCHURTWIRL_MONTECARLO_HPP
#define SCHURTWIRL_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "schurtwirl/common.hpp"
#include "schurtwirl/measures.hpp"

namespace schurtwirl {

// Reproducible generator: identical (seed, stream) give identical sequences.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Haar-distributed U(d) element: complex Ginibre matrix, QR, and the phase
// fix from the diagonal of the triangular factor.
Matrix haar_unitary(int d, std::mt19937_64& rng);

// Haar U(d) sample projected to determinant 1.
Matrix haar_special_unitary(int d, std::mt19937_64& rng);

// Collective operator (K A_n(x) K')^{x t} with K, K' Haar on SU(d) and x
// drawn from the measure.  Built-in filtering family is d = 2.
Matrix sample_slocc(const MeasureSpec& measure, int d, int t, std::mt19937_64& rng);

// (1/N) sum of M rho M^dag over sampled collective operators M, accumulated
// with a fixed pairwise-tree reduction so results are bitwise reproducible.
Matrix empirical_twirl(const Matrix& rho, const std::function<Matrix(std::mt19937_64&)>& sampler,
                       long n_samples, std::mt19937_64& rng);

// Exact (1/t!) sum over all permutation operators; oracle for the closed form.
Matrix brute_symmetric_twirl(const Matrix& rho, int d, int t);

// p_M(rho) = Tr(M^{x t} rho M^{dag x t}) / ||M||^{2t} for det-1 M.
double success_probability(const Matrix& m, const Matrix& rho, int t);

}  // namespace schurtwirl

#endif
