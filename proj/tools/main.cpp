// chivar: reproducible experiments around the chromatic number of dense
// random graphs.  Subcommands: analytic, simulate, oracle, coupling, predict.
// Exit codes: 0 ok, 2 parameter error, 3 feasibility/size error,
// 4 invalid-trial threshold exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "chivar/asymptotics.hpp"
#include "chivar/chain.hpp"
#include "chivar/colouring.hpp"
#include "chivar/errors.hpp"
#include "chivar/exact_moments.hpp"
#include "chivar/gnp.hpp"
#include "chivar/mis.hpp"
#include "chivar/numformat.hpp"
#include "chivar/parallel.hpp"
#include "chivar/params.hpp"
#include "chivar/partition_count.hpp"
#include "chivar/predictor.hpp"
#include "chivar/rng.hpp"
#include "chivar/threshold.hpp"

#include "experiment_io.hpp"

namespace fs = std::filesystem;
using namespace chivar;
using tools::CsvWriter;
using tools::RunManifest;

namespace {

constexpr const char* kNA = "NA";

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

struct CommonOpts {
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
};

// ---------------------------------------------------------------- analytic

int run_analytic(const CommonOpts& common, double n_min, double n_max, int points,
                 const std::string& grid_kind, const std::string& command_line) {
    ModelParams m(common.p);
    RunManifest manifest(common.out_dir, command_line, common.seed);
    manifest.set_param("p", g17(common.p));
    manifest.set_param("n_min", g17(n_min));
    manifest.set_param("n_max", g17(n_max));
    manifest.set_param("points", format_int(points));
    manifest.set_param("grid", grid_kind);
    manifest.write_running();

    CsvWriter csv(fs::path(common.out_dir) / "analytic.csv",
                  {"n", "log_n", "alpha0", "alpha", "log_mu_alpha", "rho_hat", "lambda",
                   "f_est", "f_deriv", "k_star", "g0", "case_tag"});
    for (double n : tools::make_grid(n_min, n_max, points, grid_kind)) {
        std::vector<std::string> cells(12, kNA);
        cells[0] = g17(n);
        try {
            ScalePoint s = ScalePoint::from_count(n);
            cells[1] = g17(s.log_n());
            AsymptoticRecord rec = asymptotic_record(s, m);
            cells[2] = g17(rec.alpha0);
            cells[3] = format_int(rec.alpha);
            cells[4] = g17(rec.log_mu_alpha);
            cells[5] = g17(rec.rho_hat);
            cells[6] = g17(rec.lambda);
            if (rec.f_available) cells[7] = g17(rec.f_est);
            if (rec.f_deriv_available) cells[8] = g17(rec.f_deriv);
            try {
                cells[9] = g17(solve_k_star(n, rec.alpha - 1, m).k_star);
            } catch (const std::exception&) {
            }
            try {
                Prediction pred = g0_prediction(s, m);
                cells[10] = g17(pred.g0);
                cells[11] = to_string(pred.case_tag);
            } catch (const std::exception&) {
            }
        } catch (const std::exception&) {
            // row marker stays NA
        }
        csv.row(cells);
    }
    std::size_t rows = csv.rows();
    csv.close();
    manifest.finalize({{"analytic.csv", rows}}, "ok");
    return 0;
}

// ---------------------------------------------------------------- simulate

struct SimTrial {
    int chi = 0;
    int alpha = 0;
    double x_alpha = std::numeric_limits<double>::quiet_NaN();
    bool valid = false;
};

int run_simulate(const CommonOpts& common, const std::vector<int>& ns, int trials,
                 double budget_secs, const std::string& command_line) {
    ModelParams m(common.p);
    RunManifest manifest(common.out_dir, command_line, common.seed);
    manifest.set_param("p", g17(common.p));
    for (int n : ns) manifest.set_param("n", format_int(n));
    manifest.set_param("trials", format_int(trials));
    manifest.set_param("budget_secs", g17(budget_secs));
    manifest.write_running();

    CsvWriter csv(fs::path(common.out_dir) / "simulate.csv",
                  {"n", "p", "trials", "seed", "chi_mean", "chi_var", "chi_min", "chi_max",
                   "alpha_mean", "x_alpha_mean", "invalid_trials"});
    bool threshold_exceeded = false;
    for (int n : ns) {
        std::vector<SimTrial> results(static_cast<std::size_t>(trials));
        parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
            std::uint64_t trial_seed =
                derive_seed(common.seed, static_cast<std::uint64_t>(n), i);
            Graph g = sample_gnp(n, common.p, trial_seed);
            ChiResult chi = chromatic_number(g, SolveBudget{budget_secs});
            if (!chi.exact) return;
            SimTrial& out = results[i];
            out.chi = chi.value();
            MisResult mis = independence_number(g, SolveBudget{budget_secs});
            if (!mis.exact) return;
            out.alpha = mis.value();
            try {
                out.x_alpha = static_cast<double>(count_independent_sets(g, out.alpha));
            } catch (const SizeError&) {
                // alpha too large for the exact counter; column stays NaN
            }
            out.valid = true;
        });

        // Welford over valid trials, in index order
        double mean = 0, m2 = 0, alpha_mean = 0, x_alpha_mean = 0;
        int chi_min = 0, chi_max = 0, valid = 0, with_count = 0;
        for (const SimTrial& trial : results) {
            if (!trial.valid) continue;
            ++valid;
            double d = trial.chi - mean;
            mean += d / valid;
            m2 += d * (trial.chi - mean);
            alpha_mean += (trial.alpha - alpha_mean) / valid;
            if (!std::isnan(trial.x_alpha)) {
                ++with_count;
                x_alpha_mean += (trial.x_alpha - x_alpha_mean) / with_count;
            }
            chi_min = valid == 1 ? trial.chi : std::min(chi_min, trial.chi);
            chi_max = valid == 1 ? trial.chi : std::max(chi_max, trial.chi);
        }
        int invalid = trials - valid;
        double var = valid > 1 ? m2 / (valid - 1) : 0.0;
        csv.row({format_int(n), g17(common.p), format_int(trials), std::to_string(common.seed),
                 valid ? g17(mean) : kNA, valid ? g17(var) : kNA,
                 valid ? format_int(chi_min) : kNA, valid ? format_int(chi_max) : kNA,
                 valid ? g17(alpha_mean) : kNA, with_count ? g17(x_alpha_mean) : kNA,
                 format_int(invalid)});
        if (invalid * 100 > trials) threshold_exceeded = true;
    }
    std::size_t rows = csv.rows();
    csv.close();
    manifest.finalize({{"simulate.csv", rows}},
                      threshold_exceeded ? "invalid-trial threshold exceeded" : "ok");
    if (threshold_exceeded) {
        std::cerr << "chivar simulate: more than 1% of trials exceeded the solve budget\n";
        return 4;
    }
    return 0;
}

// ------------------------------------------------------------------ oracle

int run_oracle(const CommonOpts& common, int max_n, const std::string& command_line) {
    if (max_n < 1 || max_n > 8)
        throw SizeError("oracle: --n (max n) must lie in [1, 8]");
    RunManifest manifest(common.out_dir, command_line, common.seed);
    manifest.set_param("max_n", format_int(max_n));
    manifest.write_running();

    CsvWriter csv(fs::path(common.out_dir) / "oracle.csv",
                  {"n", "t", "k", "e_num", "e_den", "e_log", "k_t", "enum_num", "enum_den",
                   "agree"});
    for (int n = 1; n <= max_n; ++n) {
        for (int t = 1; t <= n; ++t) {
            int kt = first_moment_threshold(n, t);
            for (int k = (n + t - 1) / t; k <= n; ++k) {
                ExactExpectation e = exact_expected_colourings(n, k, t);
                std::string enum_num = kNA, enum_den = kNA, agree = kNA;
                if (n <= 5) {
                    // average over every labelled graph, exactly
                    const int pairs = n * (n - 1) / 2;
                    BigInt total = 0;
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                        Graph g(n);
                        int bit = 0;
                        for (int v = 1; v < n; ++v)
                            for (int u = 0; u < v; ++u, ++bit)
                                if ((mask >> bit) & 1u) g.add_edge(u, v);
                        total += brute_force_count_colourings(g, k, t);
                    }
                    BigRat avg(total, BigInt(1) << pairs);
                    enum_num = boost::multiprecision::numerator(avg).str();
                    enum_den = boost::multiprecision::denominator(avg).str();
                    agree = (avg == e.value) ? "1" : "0";
                }
                csv.row({format_int(n), format_int(t), format_int(k),
                         boost::multiprecision::numerator(e.value).str(),
                         boost::multiprecision::denominator(e.value).str(), g17(e.log_value),
                         format_int(kt), enum_num, enum_den, agree});
            }
        }
    }
    std::size_t rows = csv.rows();
    csv.close();
    manifest.finalize({{"oracle.csv", rows}}, "ok");
    return 0;
}

// ---------------------------------------------------------------- coupling

int run_coupling(const CommonOpts& common, int n, int a, int r, int trials, double budget_secs,
                 const std::string& command_line) {
    RunManifest manifest(common.out_dir, command_line, common.seed);
    manifest.set_param("p", g17(common.p));
    manifest.set_param("n", format_int(n));
    manifest.set_param("a", format_int(a));
    manifest.set_param("r", format_int(r));
    manifest.set_param("trials", format_int(trials));
    manifest.set_param("budget_secs", g17(budget_secs));
    manifest.write_running();

    ChainExperimentParams params;
    params.n = n;
    params.a = a;
    params.r = r;
    params.p = common.p;
    params.trials = trials;
    params.seed = common.seed;
    params.budget_seconds = budget_secs;
    ChainExperiment exp = run_coupling_chain(params);

    CsvWriter csv(fs::path(common.out_dir) / "coupling.csv",
                  {"record", "chi", "count", "n", "a", "r", "p", "trials", "invalid_trials",
                   "monotone_fraction", "tv_estimate", "tv_se", "tv_budget"});
    auto hist_rows = [&](const char* label, const std::map<int, int>& hist) {
        for (const auto& [chi, count] : hist)
            csv.row({label, format_int(chi), format_int(count), format_int(n), format_int(a),
                     format_int(r), g17(common.p), format_int(trials),
                     format_int(exp.invalid_trials), kNA, kNA, kNA, kNA});
    };
    hist_rows("hist_chain", exp.hist_chain_end);
    hist_rows("hist_direct", exp.hist_direct);
    csv.row({"summary", kNA, kNA, format_int(n), format_int(a), format_int(r), g17(common.p),
             format_int(trials), format_int(exp.invalid_trials), g17(exp.monotone_fraction),
             g17(exp.tv_estimate), g17(exp.tv_se), g17(exp.tv_budget)});
    std::size_t rows = csv.rows();
    csv.close();
    manifest.finalize({{"coupling.csv", rows}},
                      exp.invalid_threshold_exceeded ? "invalid-trial threshold exceeded" : "ok");
    if (exp.invalid_threshold_exceeded) {
        std::cerr << "chivar coupling: more than 1% of trials exceeded the solve budget\n";
        return 4;
    }
    return 0;
}

// ----------------------------------------------------------------- predict

int run_predict(const CommonOpts& common, double n_min, double n_max, int points,
                const std::string& grid_kind, double eps, double c,
                const std::string& command_line) {
    ModelParams m(common.p);
    RunManifest manifest(common.out_dir, command_line, common.seed);
    manifest.set_param("p", g17(common.p));
    manifest.set_param("n_min", g17(n_min));
    manifest.set_param("n_max", g17(n_max));
    manifest.set_param("points", format_int(points));
    manifest.set_param("grid", grid_kind);
    manifest.set_param("eps", g17(eps));
    manifest.set_param("c", g17(c));
    manifest.write_running();

    CsvWriter csv(fs::path(common.out_dir) / "predict.csv",
                  {"n", "log_n", "case_tag", "g0", "pipeline", "w_n", "w_tilde", "nstar",
                   "nstar_applicable", "polylog", "alphashift_floor", "x", "log_mu_a", "y", "B",
                   "log_mu_prime", "nu", "delta", "d"});
    for (double n : tools::make_grid(n_min, n_max, points, grid_kind)) {
        std::vector<std::string> cells(19, kNA);
        cells[0] = g17(n);
        try {
            ScalePoint s = ScalePoint::from_count(n);
            cells[1] = g17(s.log_n());
            Prediction pred = variance_pipeline(s, m);
            cells[2] = to_string(pred.case_tag);
            cells[3] = g17(pred.g0);
            cells[4] = g17(pred.pipeline);
            for (const auto& [key, value] : pred.components) {
                if (key == "x") cells[11] = g17(value);
                if (key == "log_mu_a") cells[12] = g17(value);
                if (key == "y") cells[13] = g17(value);
                if (key == "B") cells[14] = g17(value);
                if (key == "log_mu_prime") cells[15] = g17(value);
            }
            TheoremBounds tb = theorem_bounds(s, m, eps, c);
            cells[5] = g17(tb.w_n);
            cells[6] = g17(tb.w_tilde);
            cells[7] = tb.nstar_applicable ? g17(tb.nstar) : kNA;
            cells[8] = tb.nstar_applicable ? "1" : "0";
            cells[9] = g17(tb.polylog);
            try {
                AlphaShift shift = alphashift_floor(s, m);
                cells[10] = g17(shift.floor_value);
                cells[16] = g17(shift.nu);
                cells[17] = g17(shift.delta);
                cells[18] = g17(shift.d);
            } catch (const std::exception&) {
                // out of the alpha-shift regime; cells stay NA
            }
        } catch (const std::exception&) {
        }
        csv.row(cells);
    }
    std::size_t rows = csv.rows();
    csv.close();
    manifest.finalize({{"predict.csv", rows}}, "ok");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the variation of chi(G(n,p))"};
    app.set_version_flag("--version", tools::kToolVersion);
    const std::string command_line = join_args(argc, argv);

    CommonOpts common;
    double n_min = 1e3, n_max = 1e12;
    int points = 500;
    std::string grid_kind = "log";
    std::vector<int> n_list;
    double n_single = 0;
    int trials = 200;
    double budget_secs = 60.0;
    double eps = 0.1, c = 1.0;
    int a = 7, r = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", common.p, "edge probability")->capture_default_str();
        cmd->add_option("--seed", common.seed, "base seed")->capture_default_str();
        cmd->add_option("--out", common.out_dir, "output directory")->capture_default_str();
    };

    double n_point = 0;
    CLI::App* analytic = app.add_subcommand("analytic", "closed-form table over an n grid");
    add_common(analytic);
    analytic->add_option("--n", n_point, "single evaluation point (overrides the grid)");
    analytic->add_option("--n-min", n_min, "grid start")->capture_default_str();
    analytic->add_option("--n-max", n_max, "grid end")->capture_default_str();
    analytic->add_option("--points", points, "grid size")->capture_default_str();
    analytic->add_option("--grid", grid_kind, "log or linear")->capture_default_str();

    CLI::App* simulate = app.add_subcommand("simulate", "exact-chi Monte Carlo at small n");
    add_common(simulate);
    simulate->add_option("--n", n_list, "vertex counts (repeatable)")->required();
    simulate->add_option("--trials", trials, "trials per n")->capture_default_str();
    simulate->add_option("--budget-secs", budget_secs, "per-solve wall clock")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "exact first-moment tables");
    add_common(oracle);
    oracle->add_option("--n", n_single, "maximum n (<= 8)")->required();

    CLI::App* coupling = app.add_subcommand("coupling", "planting chain experiment");
    add_common(coupling);
    coupling->add_option("--n", n_single, "starting vertex count")->required();
    coupling->add_option("--a", a, "planted set size")->capture_default_str();
    coupling->add_option("--r", r, "growth steps")->capture_default_str();
    coupling->add_option("--trials", trials, "number of trials")->capture_default_str();
    coupling->add_option("--budget-secs", budget_secs, "per-solve wall clock")
        ->capture_default_str();

    CLI::App* predict = app.add_subcommand("predict", "conjecture and theorem bounds over a grid");
    add_common(predict);
    predict->add_option("--n", n_point, "single evaluation point (overrides the grid)");
    predict->add_option("--n-min", n_min, "grid start")->capture_default_str();
    predict->add_option("--n-max", n_max, "grid end")->capture_default_str();
    predict->add_option("--points", points, "grid size")->capture_default_str();
    predict->add_option("--grid", grid_kind, "log or linear")->capture_default_str();
    predict->add_option("--eps", eps, "margin in the sqrt(mu)/log n bound")->capture_default_str();
    predict->add_option("--c", c, "constant in the polylog bound")->capture_default_str();

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (n_point > 0) {
        n_min = n_max = n_point;
        points = 1;
    }
    try {
        if (analytic->parsed())
            return run_analytic(common, n_min, n_max, points, grid_kind, command_line);
        if (simulate->parsed())
            return run_simulate(common, n_list, trials, budget_secs, command_line);
        if (oracle->parsed())
            return run_oracle(common, static_cast<int>(n_single), command_line);
        if (coupling->parsed())
            return run_coupling(common, static_cast<int>(n_single), a, r, trials, budget_secs,
                                command_line);
        if (predict->parsed())
            return run_predict(common, n_min, n_max, points, grid_kind, eps, c, command_line);
    } catch (const SizeError& e) {
        std::cerr << "chivar: " << e.what() << '\n';
        return 3;
    } catch (const RegimeError& e) {
        std::cerr << "chivar: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "chivar: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chivar: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
