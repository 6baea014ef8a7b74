#ifndef SCHURTWIRL_COMMON_HPP
#define SCHURTWIRL_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace schurtwirl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr long kDefaultCapacity = 1024;

// d^t with overflow/capacity guard.
long tensor_dim(int d, int t, long capacity = kDefaultCapacity);

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& msg, double estimate)
        : std::runtime_error(msg), estimate(estimate) {}
    double estimate;
};

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_power(const Matrix& a, int t);

inline double operator_norm(const Matrix& m) {
    return m.jacobiSvd().singularValues()(0);
}

}  // namespace schurtwirl

#endif
