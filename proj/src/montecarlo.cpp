#include "schurtwirl/montecarlo.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "schurtwirl/permops.hpp"

namespace schurtwirl {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{(std::uint32_t)(seed & 0xffffffffu), (std::uint32_t)(seed >> 32),
                      (std::uint32_t)(stream & 0xffffffffu), (std::uint32_t)(stream >> 32)};
    return std::mt19937_64(seq);
}

Matrix haar_unitary(int d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("haar_unitary: d must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Without the phase fix the QR map is not Haar.
    for (int j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

Matrix haar_special_unitary(int d, std::mt19937_64& rng) {
    Matrix u = haar_unitary(d, rng);
    Complex det = u.determinant();
    double theta = std::arg(det);
    return u * std::polar(1.0, -theta / d);
}

Matrix sample_slocc(const MeasureSpec& measure, int d, int t, std::mt19937_64& rng) {
    Matrix k1 = haar_special_unitary(d, rng);
    Matrix k2 = haar_special_unitary(d, rng);
    double x = sample(measure, rng);
    Matrix single = k1 * filtering_matrix(x, d) * k2;
    return kron_power(single, t);
}

Matrix empirical_twirl(const Matrix& rho, const std::function<Matrix(std::mt19937_64&)>& sampler,
                       long n_samples, std::mt19937_64& rng) {
    if (n_samples < 1) throw std::invalid_argument("empirical_twirl: need at least one sample");
    // Binary-counter accumulation: levels[i] holds a sum of 2^i samples, so
    // the reduction tree is fixed regardless of how N factors.
    std::vector<Matrix> levels;
    for (long s = 0; s < n_samples; ++s) {
        Matrix m = sampler(rng);
        Matrix acc = m * rho * m.adjoint();
        size_t lvl = 0;
        while (lvl < levels.size() && levels[lvl].size() != 0) {
            acc += levels[lvl];
            levels[lvl].resize(0, 0);
            ++lvl;
        }
        if (lvl == levels.size()) levels.emplace_back();
        levels[lvl] = std::move(acc);
    }
    Matrix total = Matrix::Zero(rho.rows(), rho.cols());
    for (const Matrix& part : levels)
        if (part.size() != 0) total += part;
    return total / (double)n_samples;
}

Matrix brute_symmetric_twirl(const Matrix& rho, int d, int t) {
    if (t > 6) throw CapacityError("brute_symmetric_twirl: t! enumeration limited to t <= 6");
    long n = tensor_dim(d, t);
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("brute_symmetric_twirl: dimension mismatch");
    Matrix out = Matrix::Zero(n, n);
    auto perms = all_permutations(t);
    for (const Permutation& p : perms) {
        Matrix op = permutation_matrix_direct(p, d, t);
        out += op * rho * op.transpose();
    }
    return out / (double)perms.size();
}

double success_probability(const Matrix& m, const Matrix& rho, int t) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * sv(0))
        throw std::domain_error("success_probability: singular operator");
    Matrix collective = kron_power(m / sv(0), t);
    return (collective * rho * collective.adjoint()).trace().real();
}

}  // namespace schurtwirl
