#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schurtwirl/measures.hpp"
#include "schurtwirl/montecarlo.hpp"

using namespace schurtwirl;

namespace {

// Independent high-resolution trapezoid oracle for the truncated
// exponential measure.
double trapezoid_exp_oracle(const std::function<double(double)>& f) {
    const double a = 1.0, b = 60.0;
    const long n = 4'000'000;
    const double h = (b - a) / n;
    auto g = [&](double x) { return f(x) * std::exp(-(x - 1.0)); };
    double acc = 0.5 * (g(a) + g(b));
    for (long i = 1; i < n; ++i) acc += g(a + i * h);
    return acc * h;
}

}  // namespace

TEST_CASE("normalization: integral of 1 is 1") {
    auto one = [](double) { return 1.0; };
    CHECK(integrate(one, MeasureSpec::dirac(3.0)) == 1.0);
    CHECK(std::abs(integrate(one, MeasureSpec::truncated_exponential()) - 1.0) < 1e-12);
    CHECK(std::abs(integrate(one, MeasureSpec::tabulated({1, 2, 3}, {1, 2, 1})) - 1.0) < 1e-12);
}

TEST_CASE("truncated exponential first moment is 2") {
    // int_1^inf x e^{-x} dx / int_1^inf e^{-x} dx = 2e^{-1}/e^{-1}
    double mean = integrate([](double x) { return x; }, MeasureSpec::truncated_exponential());
    CHECK(std::abs(mean - 2.0) < 1e-10);
}

TEST_CASE("adaptive Simpson matches the trapezoid oracle") {
    auto f = [](double x) { return std::pow(x, -4.0); };
    double got = integrate(f, MeasureSpec::truncated_exponential());
    CHECK(std::abs(got - trapezoid_exp_oracle(f)) < 1e-10);
}

TEST_CASE("sampling") {
    SUBCASE("dirac always returns the point mass") {
        auto rng = make_rng(1);
        auto m = MeasureSpec::dirac(1.0);
        for (int i = 0; i < 100; ++i) CHECK(sample(m, rng) == 1.0);
    }
    SUBCASE("truncated exponential mean within 3 sigma, support in [1,inf)") {
        auto rng = make_rng(2);
        auto m = MeasureSpec::truncated_exponential();
        const long n = 100'000;
        double sum = 0, sumsq = 0;
        for (long i = 0; i < n; ++i) {
            double x = sample(m, rng);
            CHECK(x >= 1.0);
            sum += x;
            sumsq += x * x;
        }
        double mean = sum / n;
        double sd = std::sqrt((sumsq / n - mean * mean) / n);
        CHECK(std::abs(mean - 2.0) < 3.0 * sd);
    }
}

TEST_CASE("Monte Carlo tabulated measure converges to the exponential integral") {
    auto rng = make_rng(3);
    auto exp_measure = MeasureSpec::truncated_exponential();
    auto f = [](double x) { return std::pow(x, -4.0); };
    double target = integrate(f, exp_measure);

    const long n = 50'000;
    std::vector<double> nodes(n);
    double sum = 0, sumsq = 0;
    for (long i = 0; i < n; ++i) {
        nodes[i] = sample(exp_measure, rng);
        double v = f(nodes[i]);
        sum += v;
        sumsq += v * v;
    }
    auto tab = MeasureSpec::tabulated(nodes, std::vector<double>(n, 1.0));
    double est = integrate(f, tab);
    double mean = sum / n;
    double sd = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::abs(est - target) < 3.0 * sd);
}

TEST_CASE("filtering matrices") {
    CHECK(max_abs(filtering_matrix(1.0) - Matrix::Identity(2, 2)) == 0.0);
    Matrix a2 = filtering_matrix(2.0);
    CHECK(a2(0, 0) == Complex(1, 0));
    CHECK(a2(1, 1) == Complex(0.25, 0));
    CHECK(a2(0, 1) == Complex(0, 0));
    // underlying special-linear matrix diag(x, 1/x) has determinant 1
    for (double x : {1.0, 1.5, 4.0}) {
        double det = x * (1.0 / x);
        CHECK(std::abs(det - 1.0) < 1e-15);
        Matrix an = filtering_matrix(x);
        CHECK(an.real().diagonal().maxCoeff() == 1.0);
        CHECK(an.real().diagonal().minCoeff() > 0.0);
    }
    CHECK_THROWS_AS(filtering_matrix(0.5), std::domain_error);
}

TEST_CASE("measure parsing") {
    CHECK(MeasureSpec::parse("exp").kind() == MeasureSpec::Kind::TruncatedExponential);
    CHECK(MeasureSpec::parse("dirac:2.5").dirac_point() == 2.5);
    CHECK_THROWS_AS(MeasureSpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::parse("dirac:0.3"), std::invalid_argument);
}
