#ifndef SCHURTWIRL_MEASURES_HPP
#define SCHURTWIRL_MEASURES_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schurtwirl/common.hpp"

namespace schurtwirl {

// Normalized probability measure on the filtering parameter x in [1, inf).
class MeasureSpec {
  public:
    enum class Kind { Dirac, TruncatedExponential, Tabulated };

    static MeasureSpec dirac(double x0);
    // e^{-x} dx on [1, inf), normalized.
    static MeasureSpec truncated_exponential();
    // Discrete measure; weights are normalized on construction.
    static MeasureSpec tabulated(std::vector<double> nodes, std::vector<double> weights);

    // Parse "dirac:<x0>", "exp" or "table:<csv-path>" (rows "x,weight").
    static MeasureSpec parse(const std::string& spec);

    Kind kind() const { return kind_; }
    double dirac_point() const { return x0_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    std::string describe() const;

  private:
    MeasureSpec() = default;
    Kind kind_ = Kind::Dirac;
    double x0_ = 1.0;
    std::vector<double> nodes_, weights_;
};

// Integral of f against the measure.  Truncated exponential uses adaptive
// Simpson on [1, X_max] with e^{-X_max} < 1e-14 and tolerance 1e-12.
double integrate(const std::function<double(double)>& f, const MeasureSpec& measure);

double sample(const MeasureSpec& measure, std::mt19937_64& rng);

// Normalized filtering matrix diag(1, x^{-2}) at d = 2; the underlying
// special-linear matrix is diag(x, 1/x).
Matrix filtering_matrix(double x, int d = 2);

}  // namespace schurtwirl

#endif
