#include "schurtwirl/measures.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurtwirl {

MeasureSpec MeasureSpec::dirac(double x0) {
    if (x0 < 1.0) throw std::invalid_argument("dirac measure requires x0 >= 1");
    MeasureSpec m;
    m.kind_ = Kind::Dirac;
    m.x0_ = x0;
    return m;
}

MeasureSpec MeasureSpec::truncated_exponential() {
    MeasureSpec m;
    m.kind_ = Kind::TruncatedExponential;
    return m;
}

MeasureSpec MeasureSpec::tabulated(std::vector<double> nodes, std::vector<double> weights) {
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("tabulated measure: nodes/weights size mismatch");
    double total = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (weights[i] < 0) throw std::invalid_argument("tabulated measure: negative weight");
        total += weights[i];
    }
    if (total <= 0) throw std::invalid_argument("tabulated measure: zero total mass");
    for (auto& w : weights) w /= total;
    MeasureSpec m;
    m.kind_ = Kind::Tabulated;
    m.nodes_ = std::move(nodes);
    m.weights_ = std::move(weights);
    return m;
}

MeasureSpec MeasureSpec::parse(const std::string& spec) {
    if (spec == "exp") return truncated_exponential();
    if (spec.rfind("dirac:", 0) == 0) return dirac(std::stod(spec.substr(6)));
    if (spec.rfind("table:", 0) == 0) {
        std::ifstream in(spec.substr(6));
        if (!in) throw std::invalid_argument("cannot open measure table " + spec.substr(6));
        std::vector<double> nodes, weights;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string a, b;
            if (!std::getline(ls, a, ',') || !std::getline(ls, b))
                throw std::invalid_argument("malformed measure table row: " + line);
            nodes.push_back(std::stod(a));
            weights.push_back(std::stod(b));
        }
        return tabulated(std::move(nodes), std::move(weights));
    }
    throw std::invalid_argument("unknown measure spec: " + spec);
}

std::string MeasureSpec::describe() const {
    switch (kind_) {
        case Kind::Dirac: return "dirac:" + std::to_string(x0_);
        case Kind::TruncatedExponential: return "exp";
        case Kind::Tabulated: return "table[" + std::to_string(nodes_.size()) + "]";
    }
    return "?";
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, m, fa, flm, fm);
    double right = simpson(f, m, b, fm, frm, fb);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth <= 0)
        throw IntegrationError("adaptive Simpson failed to converge", left + right);
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol, 48);
}

}  // namespace

double integrate(const std::function<double(double)>& f, const MeasureSpec& measure) {
    switch (measure.kind()) {
        case MeasureSpec::Kind::Dirac:
            return f(measure.dirac_point());
        case MeasureSpec::Kind::TruncatedExponential: {
            double x_max = 1.0 - std::log(1e-14);  // e^{-x_max} < 1e-14
            auto weighted = [&f](double x) { return f(x) * std::exp(-(x - 1.0)); };
            // Density e^{-x}/e^{-1} = e^{-(x-1)}; tail beyond x_max below tolerance.
            return integrate_adaptive(weighted, 1.0, x_max, 1e-12);
        }
        case MeasureSpec::Kind::Tabulated: {
            double acc = 0;
            for (size_t i = 0; i < measure.nodes().size(); ++i)
                acc += measure.weights()[i] * f(measure.nodes()[i]);
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

double sample(const MeasureSpec& measure, std::mt19937_64& rng) {
    switch (measure.kind()) {
        case MeasureSpec::Kind::Dirac:
            return measure.dirac_point();
        case MeasureSpec::Kind::TruncatedExponential: {
            std::uniform_real_distribution<double> unif(std::nextafter(0.0, 1.0), 1.0);
            return 1.0 - std::log(unif(rng));  // inverse CDF of e^{-(x-1)} on [1, inf)
        }
        case MeasureSpec::Kind::Tabulated: {
            std::discrete_distribution<size_t> dist(measure.weights().begin(),
                                                    measure.weights().end());
            return measure.nodes()[dist(rng)];
        }
    }
    throw std::logic_error("unreachable");
}

Matrix filtering_matrix(double x, int d) {
    if (d != 2) throw std::invalid_argument("built-in filtering matrix is d = 2 only");
    if (x < 1.0) throw std::domain_error("filtering parameter requires x >= 1");
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0 / (x * x);
    return a;
}

}  // namespace schurtwirl
