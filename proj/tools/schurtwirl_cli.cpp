// Command-line front end for Schur-Weyl decompositions and twirling channels.
//
// Exit codes: 0 success, 1 verification failure, 2 capacity exceeded,
// 3 parse error, 4 state-invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "schurtwirl/matrixio.hpp"
#include "schurtwirl/montecarlo.hpp"
#include "schurtwirl/twirl.hpp"

using namespace schurtwirl;
using nlohmann::json;

namespace {

json matrix_report(const Matrix& m) {
    json entries = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

int cmd_decompose(int d, int t, bool as_json) {
    auto partitions = enumerate_partitions(t, d);
    tensor_dim(d, t);  // capacity check before any heavy work
    if (as_json) {
        json blocks = json::array();
        for (size_t i = 0; i < partitions.size(); ++i) {
            long dl = weyl_dimension(partitions[i], d);
            long dv = hook_dimension(partitions[i]);
            blocks.push_back({{"block", i + 1},
                              {"partition", partitions[i].rows},
                              {"D_L", dl},
                              {"D_V", dv},
                              {"D", dl * dv}});
        }
        std::cout << json{{"d", d}, {"t", t}, {"blocks", blocks}}.dump(2) << "\n";
    } else {
        std::cout << "block  partition  D_L  D_V  D\n";
        for (size_t i = 0; i < partitions.size(); ++i) {
            long dl = weyl_dimension(partitions[i], d);
            long dv = hook_dimension(partitions[i]);
            std::cout << std::left << std::setw(7) << (i + 1) << std::setw(11)
                      << partitions[i].to_string() << std::setw(5) << dl << std::setw(5) << dv
                      << dl * dv << "\n";
        }
    }
    return 0;
}

int cmd_beta(int d, int t, const std::string& measure_spec, bool as_json,
             const std::string& out_path, bool use_cache) {
    MeasureSpec measure = MeasureSpec::parse(measure_spec);
    auto basis = load_schur_basis(d, t, use_cache);
    BetaTable table = beta_coefficients(abelian_integral(measure, d, t), basis);
    std::ostringstream body;
    if (as_json) {
        json rows = json::array();
        for (size_t k = 0; k < table.size(); ++k)
            rows.push_back({{"block", k + 1},
                            {"partition", table[k].partition.rows},
                            {"D_L", table[k].dim_gl},
                            {"D_V", table[k].dim_sym},
                            {"D", table[k].dim()},
                            {"beta", table[k].beta},
                            {"p_k", table[k].ratio()}});
        body << json{{"d", d}, {"t", t}, {"measure", measure.describe()}, {"rows", rows}}.dump(2)
             << "\n";
    } else {
        write_beta_csv(body, table);
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        out << body.str();
    }
    return 0;
}

int cmd_twirl(const std::string& map, const std::string& in_path, int d, int t,
              const std::string& measure_spec, int iterate, const std::string& out_path,
              bool allow_subnormalized, bool use_cache) {
    Matrix m = read_matrix_file(in_path);
    DensityState rho{m};
    rho.validate(allow_subnormalized);
    auto basis = load_schur_basis(d, t, use_cache);
    if (m.rows() != basis.dim())
        throw std::domain_error("state dimension does not match d^t");

    double trace_before = rho.trace();
    DensityState out{Matrix()};
    if (map == "unitary") {
        out = rho;
        for (int i = 0; i < iterate; ++i) out = unitary_twirl(out, basis);
    } else if (map == "symmetric") {
        out = rho;
        for (int i = 0; i < iterate; ++i) out = symmetric_twirl(out, basis);
    } else if (map == "slocc") {
        MeasureSpec measure = MeasureSpec::parse(measure_spec);
        BetaTable beta = beta_coefficients(abelian_integral(measure, d, t), basis);
        out = slocc_twirl_iterated(rho, beta, basis, iterate);
        std::cout << "beta table:\n";
        write_beta_csv(std::cout, beta);
        std::cout << "mean success probability: " << std::setprecision(6)
                  << mean_success_probability(rho, beta, basis) << "\n";
    } else {
        throw CLI::ValidationError("map must be unitary|symmetric|slocc");
    }

    std::cout << std::setprecision(6);
    std::cout << "trace before: " << trace_before << "\n";
    std::cout << "trace after:  " << out.trace() << "\n";
    std::cout << "block weights:";
    for (int k = 1; k <= (int)basis.blocks.size(); ++k) {
        const auto& b = basis.block(k);
        double w = (b.vectors.adjoint() * out.matrix * b.vectors).trace().real();
        std::cout << " " << w;
    }
    std::cout << "\n";
    if (!out_path.empty()) write_matrix_file(out_path, out.matrix);
    return 0;
}

struct Check {
    std::string name;
    double residual;
    double tolerance;
    bool passed() const { return residual <= tolerance; }
};

DensityState random_state(long n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Matrix g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
    Matrix rho = g * g.adjoint();
    return {rho / rho.trace().real()};
}

int cmd_verify(int d, int t, std::uint64_t seed, long n_samples, bool use_cache) {
    auto rng = make_rng(seed);
    auto basis = load_schur_basis(d, t, use_cache);
    long n = basis.dim();
    std::vector<Check> checks;

    // orthogonality of the full Schur grid
    {
        long cols = 0;
        for (const auto& b : basis.blocks) cols += b.total_dim();
        Matrix all(n, cols);
        long at = 0;
        for (const auto& b : basis.blocks) {
            all.middleCols(at, b.total_dim()) = b.vectors;
            at += b.total_dim();
        }
        checks.push_back({"orthonormality", max_abs(all.adjoint() * all -
                                                    Matrix::Identity(cols, cols)), 1e-10});
        Matrix sum = Matrix::Zero(n, n);
        for (int i = 1; i <= (int)basis.blocks.size(); ++i) sum += basis.pi_block(i);
        checks.push_back({"projector completeness", max_abs(sum - Matrix::Identity(n, n)), 1e-10});
    }
    // commutant: collective unitaries preserve every block
    {
        double worst = 0;
        for (int rep = 0; rep < 20; ++rep) {
            Matrix ut = kron_power(haar_unitary(d, rng), t);
            for (int i = 1; i <= (int)basis.blocks.size(); ++i)
                for (int j = 1; j <= (int)basis.blocks.size(); ++j)
                    if (i != j)
                        worst = std::max(worst, max_abs(basis.pi_block(i) * ut * basis.pi_block(j)));
        }
        checks.push_back({"block invariance of U^t", worst, 1e-9});
    }
    // idempotence
    {
        DensityState rho = random_state(n, rng);
        DensityState tu = unitary_twirl(rho, basis);
        checks.push_back({"unitary twirl idempotence",
                          max_abs(unitary_twirl(tu, basis).matrix - tu.matrix), 1e-10});
        DensityState ts = symmetric_twirl(rho, basis);
        checks.push_back({"symmetric twirl idempotence",
                          max_abs(symmetric_twirl(ts, basis).matrix - ts.matrix), 1e-10});
    }
    // duality: outputs live in the dual operator spans
    {
        DensityState rho = random_state(n, rng);
        auto co_u = decompose_in_schur(unitary_twirl(rho, basis).matrix, basis);
        checks.push_back({"unitary twirl in lambda span", co_u.lambda_residual, 1e-10});
        auto co_s = decompose_in_schur(symmetric_twirl(rho, basis).matrix, basis);
        checks.push_back({"symmetric twirl in m span", co_s.m_residual, 1e-10});
    }
    // SLOCC factorization and trace monotonicity
    {
        MeasureSpec measure = MeasureSpec::truncated_exponential();
        Matrix abelian = abelian_integral(measure, d == 2 ? 2 : 2, t);
        if (d == 2) {
            BetaTable beta = beta_coefficients(abelian, basis);
            Matrix correction = unitary_twirl({abelian}, basis).matrix;
            double worst_fact = 0, worst_mono = 0, worst_pos = 0;
            for (int rep = 0; rep < 20; ++rep) {
                DensityState rho = random_state(n, rng);
                DensityState out = slocc_twirl(rho, beta, basis);
                worst_fact = std::max(worst_fact,
                                      max_abs(out.matrix -
                                              unitary_twirl(rho, basis).matrix * correction));
                worst_mono = std::max(worst_mono, out.trace() - rho.trace());
                Eigen::SelfAdjointEigenSolver<Matrix> es(out.matrix, Eigen::EigenvaluesOnly);
                worst_pos = std::max(worst_pos, -es.eigenvalues().minCoeff());
            }
            checks.push_back({"SLOCC factorization", worst_fact, 1e-10});
            checks.push_back({"trace monotonicity", worst_mono, 1e-12});
            checks.push_back({"positivity", worst_pos, 1e-9});
        }
    }
    // oracle equivalence: brute-force symmetric twirl
    if (t <= 6) {
        DensityState rho = random_state(n, rng);
        checks.push_back({"symmetric twirl vs brute force",
                          max_abs(symmetric_twirl(rho, basis).matrix -
                                  brute_symmetric_twirl(rho.matrix, d, t)), 1e-10});
    }
    // Monte Carlo comparisons, only when samples were requested
    if (n_samples > 0) {
        DensityState rho = random_state(n, rng);
        auto u_sampler = [&](std::mt19937_64& r) { return kron_power(haar_unitary(d, r), t); };
        Matrix emp_u = empirical_twirl(rho.matrix, u_sampler, n_samples, rng);
        checks.push_back({"unitary twirl Monte Carlo",
                          operator_norm(emp_u - unitary_twirl(rho, basis).matrix), 5e-2});
        if (d == 2) {
            MeasureSpec measure = MeasureSpec::truncated_exponential();
            BetaTable beta = beta_coefficients(abelian_integral(measure, 2, t), basis);
            auto sl_sampler = [&](std::mt19937_64& r) { return sample_slocc(measure, 2, t, r); };
            Matrix emp_sl = empirical_twirl(rho.matrix, sl_sampler, n_samples, rng);
            checks.push_back({"SLOCC twirl Monte Carlo",
                              operator_norm(emp_sl - slocc_twirl(rho, beta, basis).matrix), 5e-2});
        }
    }

    bool all_ok = true;
    for (const auto& c : checks) {
        std::cout << (c.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(34) << c.name
                  << " residual " << std::scientific << std::setprecision(3) << c.residual
                  << "  (tol " << c.tolerance << ")\n"
                  << std::defaultfloat;
        all_ok &= c.passed();
    }
    return all_ok ? 0 : 1;
}

int cmd_sample(int d, int t, const std::string& measure_spec, const std::string& map,
               long n_samples, std::uint64_t seed, const std::string& in_path,
               const std::string& out_path, bool use_cache) {
    auto rng = make_rng(seed);
    auto basis = load_schur_basis(d, t, use_cache);
    Matrix rho = in_path.empty()
                     ? Matrix(Matrix::Identity(basis.dim(), basis.dim()) / (double)basis.dim())
                     : read_matrix_file(in_path);
    DensityState state{rho};
    state.validate(true);

    Matrix closed;
    std::function<Matrix(std::mt19937_64&)> sampler;
    if (map == "unitary") {
        closed = unitary_twirl(state, basis).matrix;
        sampler = [&](std::mt19937_64& r) { return kron_power(haar_unitary(d, r), t); };
    } else if (map == "slocc") {
        MeasureSpec measure = MeasureSpec::parse(measure_spec);
        BetaTable beta = beta_coefficients(abelian_integral(measure, d, t), basis);
        closed = slocc_twirl(state, beta, basis).matrix;
        sampler = [&, measure](std::mt19937_64& r) { return sample_slocc(measure, d, t, r); };
    } else {
        throw CLI::ValidationError("map must be unitary|slocc");
    }
    Matrix estimate = empirical_twirl(rho, sampler, n_samples, rng);

    json report{{"N", n_samples},
                {"closed_form", matrix_report(closed)},
                {"estimate", matrix_report(estimate)},
                {"residual_norm", operator_norm(estimate - closed)},
                {"seed", seed}};
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << report.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-Weyl decompositions and twirling channels"};
    app.require_subcommand(1);

    int d = 2, t = 2, iterate = 1;
    long n_samples = 0;
    std::uint64_t seed = 0;
    std::string measure_spec = "exp", in_path, out_path, map = "unitary";
    bool as_json = false, no_cache = false, allow_subnormalized = false;

    auto add_dt = [&](CLI::App* cmd) {
        cmd->add_option("-d", d, "local dimension")->required();
        cmd->add_option("-t", t, "tensor power")->required();
    };

    auto* dec = app.add_subcommand("decompose", "per-block dimension table");
    add_dt(dec);
    dec->add_flag("--json", as_json);

    auto* twirl = app.add_subcommand("twirl", "apply a twirling channel to a state file");
    twirl->add_option("map", map, "unitary|symmetric|slocc")->required();
    add_dt(twirl);
    twirl->add_option("--in", in_path, "input state (JSON matrix container)")->required();
    twirl->add_option("--out", out_path, "output state path");
    twirl->add_option("--measure", measure_spec, "dirac:<x0> | exp | table:<path>");
    twirl->add_option("--iterate", iterate, "apply the map m times");
    twirl->add_flag("--allow-subnormalized", allow_subnormalized);
    twirl->add_flag("--no-cache", no_cache);

    auto* beta = app.add_subcommand("beta", "beta coefficient table for a measure");
    add_dt(beta);
    beta->add_option("--measure", measure_spec);
    beta->add_option("--out", out_path);
    beta->add_flag("--json", as_json);
    beta->add_flag("--no-cache", no_cache);

    auto* verify = app.add_subcommand("verify", "run the structural invariant suite");
    add_dt(verify);
    verify->add_option("--seed", seed);
    verify->add_option("-N", n_samples, "Monte Carlo sample count (0 skips MC checks)");
    verify->add_flag("--no-cache", no_cache);

    auto* sampcmd = app.add_subcommand("sample", "empirical twirl vs closed form report");
    add_dt(sampcmd);
    sampcmd->add_option("--measure", measure_spec);
    sampcmd->add_option("--map", map, "unitary|slocc");
    sampcmd->add_option("-N", n_samples)->required();
    sampcmd->add_option("--seed", seed);
    sampcmd->add_option("--in", in_path);
    sampcmd->add_option("--out", out_path);
    sampcmd->add_flag("--no-cache", no_cache);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dec) return cmd_decompose(d, t, as_json);
        if (*twirl)
            return cmd_twirl(map, in_path, d, t, measure_spec, iterate, out_path,
                             allow_subnormalized, !no_cache);
        if (*beta) return cmd_beta(d, t, measure_spec, as_json, out_path, !no_cache);
        if (*verify) return cmd_verify(d, t, seed, n_samples, !no_cache);
        if (*sampcmd)
            return cmd_sample(d, t, measure_spec, map, n_samples, seed, in_path, out_path,
                              !no_cache);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "state invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
