#include "schurtwirl/common.hpp"

namespace schurtwirl {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix kron_power(const Matrix& a, int t) {
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < t; ++k) out = kron(out, a);
    return out;
}

}  // namespace schurtwirl
