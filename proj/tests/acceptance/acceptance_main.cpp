// Acceptance suite: every criterion prints one PASS/FAIL line and the binary
// exits with the number of failures.  `--only K` restricts to one criterion.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chivar/asymptotics.hpp"
#include "chivar/chain.hpp"
#include "chivar/colouring.hpp"
#include "chivar/exact_moments.hpp"
#include "chivar/gnp.hpp"
#include "chivar/lagrange.hpp"
#include "chivar/mis.hpp"
#include "chivar/params.hpp"
#include "chivar/partition_count.hpp"
#include "chivar/planted.hpp"
#include "chivar/predictor.hpp"
#include "chivar/rng.hpp"
#include "chivar/sizebias.hpp"
#include "chivar/threshold.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace chivar;

namespace {

struct Reporter {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- 1

void criterion_profile_sum_equals_graph_average(Reporter& rep) {
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (int t = 1; t <= n; ++t) {
            for (int k = 1; k <= n; ++k) {
                BigInt total = 0;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                    Graph g(n);
                    int bit = 0;
                    for (int v = 1; v < n; ++v)
                        for (int u = 0; u < v; ++u, ++bit)
                            if ((mask >> bit) & 1u) g.add_edge(u, v);
                    total += brute_force_count_colourings(g, k, t);
                }
                BigRat average(total, BigInt(1) << pairs);
                BigRat profile_sum = exact_expected_colourings(n, k, t).value;
                rep.require(average == profile_sum,
                            "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                " t=" + std::to_string(t));
            }
        }
    }
}

// ---------------------------------------------------------------- 2

void criterion_first_moment_thresholds(Reporter& rep) {
    rep.require(first_moment_threshold(4, 2) == 3, "k_2(4) != 3");
    rep.require(first_moment_threshold(3, 2) == 2, "k_2(3) != 2");
}

// ---------------------------------------------------------------- 3

double grid_search_objective(double rho, int t, double step) {
    std::vector<double> logd(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) logd[static_cast<std::size_t>(i - 1)] = log_class_weight(i);
    auto term = [&](double p, int i) {
        return p > 0 ? -p * (std::log(p) + logd[static_cast<std::size_t>(i - 1)]) : 0.0;
    };
    double best = -1e300;
    if (t == 3) {
        double lo = std::max(0.0, rho - 2.0), hi = (rho - 1.0) / 2.0;
        for (double p3 = lo; p3 <= hi + 1e-15; p3 += step) {
            double p2 = rho - 1.0 - 2.0 * p3;
            double p1 = 1.0 - p2 - p3;
            if (p1 < 0 || p2 < 0) continue;
            best = std::max(best, term(p1, 1) + term(p2, 2) + term(p3, 3));
        }
    } else if (t == 4) {
        for (double p4 = 0.0; p4 <= 1.0 + 1e-15; p4 += step) {
            double p3lo = std::max(0.0, (2.0 - rho) * -1.0 - 2.0 * p4); // p1 >= 0
            p3lo = std::max(0.0, rho - 2.0 - 2.0 * p4);
            double p3hi = (rho - 1.0 - 3.0 * p4) / 2.0; // p2 >= 0
            if (p3hi < p3lo) continue;
            for (double p3 = p3lo; p3 <= p3hi + 1e-15; p3 += step) {
                double p2 = rho - 1.0 - 2.0 * p3 - 3.0 * p4;
                double p1 = 1.0 - p2 - p3 - p4;
                if (p1 < 0 || p2 < 0) continue;
                best = std::max(best, term(p1, 1) + term(p2, 2) + term(p3, 3) + term(p4, 4));
            }
        }
    }
    return best;
}

void criterion_lagrange_vs_grid(Reporter& rep) {
    struct Point {
        int t;
        double rho;
    };
    for (Point point : {Point{3, 1.5}, Point{3, 2.0}, Point{4, 2.5}}) {
        LagrangeSolution sol = solve_lagrange(point.rho, point.t);
        rep.require(sol.residuals.first <= 1e-10 && sol.residuals.second <= 1e-10,
                    "residuals exceed 1e-10 at t=" + std::to_string(point.t));
        double objective = -(sol.x + point.rho * sol.y);
        double grid = grid_search_objective(point.rho, point.t, 1e-4);
        rep.require(std::abs(objective - grid) <= 1e-6,
                    "objective gap " + fmt(std::abs(objective - grid)) + " at t=" +
                        std::to_string(point.t) + " rho=" + fmt(point.rho));
    }
}

// ---------------------------------------------------------------- 4

void criterion_multiplier_identity(Reporter& rep) {
    test::TestRng rng(0xC4);
    for (int i = 0; i < 30; ++i) {
        int t = rng.uniform_int(2, 120);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.1, 0.9);
        double h = 1e-5 * std::max(1.0, rho);
        LagrangeSolution hi = solve_lagrange(rho + h, t);
        LagrangeSolution lo = solve_lagrange(rho - h, t);
        double dx = (hi.x - lo.x) / (2 * h);
        double dy = (hi.y - lo.y) / (2 * h);
        double tol = 1e-6 * (std::abs(dx) + rho * std::abs(dy) + 1.0);
        rep.require(std::abs(dx + rho * dy) <= tol,
                    "identity residual " + fmt(std::abs(dx + rho * dy)) + " at t=" +
                        std::to_string(t) + " rho=" + fmt(rho));
    }
}

// ---------------------------------------------------------------- 5

void criterion_partials_match_differences(Reporter& rep) {
    test::TestRng rng(0xC5);
    auto rel = [](double fd, double cf) {
        return std::abs(fd - cf) / std::max({std::abs(fd), std::abs(cf), 1e-8});
    };
    for (int i = 0; i < 20; ++i) {
        int t = rng.uniform_int(4, 50);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.15, 0.85);
        double k = std::exp(rng.uniform(2.0, 14.0));
        double n = rho * k;
        L0Partials cf = l0_partials(n, k, t);
        double hr = 6e-6 * std::max(1.0, rho);
        double hk = 6e-6 * k;
        double hn = 6e-6 * n;
        double fd_rho = (tilde_l0(rho + hr, k, t) - tilde_l0(rho - hr, k, t)) / (2 * hr);
        double fd_tk = (tilde_l0(rho, k + hk, t) - tilde_l0(rho, k - hk, t)) / (2 * hk);
        double fd_n = (hat_l0(n + hn, k, t) - hat_l0(n - hn, k, t)) / (2 * hn);
        double fd_hk = (hat_l0(n, k + hk, t) - hat_l0(n, k - hk, t)) / (2 * hk);
        rep.require(rel(fd_rho, cf.dtl0_drho) <= 1e-6, "dtL0/drho off at sample " + std::to_string(i));
        rep.require(rel(fd_tk, cf.dtl0_dk) <= 1e-6, "dtL0/dk off at sample " + std::to_string(i));
        rep.require(rel(fd_n, cf.dhatl0_dn) <= 1e-6, "dhatL0/dn off at sample " + std::to_string(i));
        rep.require(rel(fd_hk, cf.dhatl0_dk) <= 1e-6, "dhatL0/dk off at sample " + std::to_string(i));
    }
}

// ---------------------------------------------------------------- 6

void criterion_k_star(Reporter& rep) {
    ModelParams m(0.5);
    auto closed_form = [&](double n) {
        ScalePoint s = ScalePoint::from_count(n);
        AsymptoticRecord rec = asymptotic_record(s, m);
        return static_cast<double>(rec.alpha) - 1.0 - m.c0 +
               rec.log_mu_alpha / (s.log_n() - std::log(s.log_n()));
    };
    ThresholdResult r6 = solve_k_star(1e6, default_beta(1e6, m), m);
    rep.require(std::abs(r6.residual) <= 1e-9, "residual above 1e-9 at 1e6");
    rep.require(std::abs(1e6 / r6.k_star - closed_form(1e6)) <= 0.5,
                "closed-form gap " + fmt(std::abs(1e6 / r6.k_star - closed_form(1e6))) +
                    " at 1e6");
    ThresholdResult r30 = solve_k_star(1e30, default_beta(1e30, m), m);
    rep.require(std::abs(r30.residual) <= 1e-9, "residual above 1e-9 at 1e30");
    rep.require(std::abs(1e30 / r30.k_star - closed_form(1e30)) <= 0.1,
                "closed-form gap " + fmt(std::abs(1e30 / r30.k_star - closed_form(1e30))) +
                    " at 1e30");

    double h = 1e6 * 1e-5;
    double fd = (solve_k_star(1e6 + h, r6.beta, m).k_star -
                 solve_k_star(1e6 - h, r6.beta, m).k_star) /
                (2 * h);
    rep.require(std::abs(r6.derivative - fd) / fd <= 1e-3,
                "derivative off by " + fmt(std::abs(r6.derivative - fd) / fd));
}

// ---------------------------------------------------------------- 7

void criterion_size_bias_identity(Reporter& rep) {
    for (int n = 2; n <= 5; ++n) {
        for (int a : {2, 3}) {
            if (a > n) continue;
            for (auto [num, den] : {std::pair<int, int>{1, 4}, std::pair<int, int>{1, 2}}) {
                DistributionCheck check = planted_distribution_check(n, a, num, den);
                rep.require(check.max_discrepancy_value <= 1e-12,
                            "discrepancy " + fmt(check.max_discrepancy_value) + " at n=" +
                                std::to_string(n) + " a=" + std::to_string(a));
            }
        }
    }
}

// ---------------------------------------------------------------- 8

void criterion_variance_and_planted_mean(Reporter& rep) {
    rep.require(exact_xa_variance(3, 2, 0.5) == 0.75, "Var X_2(G_3) != 3/4 exactly");

    const int trials = 100000;
    double mean = 0;
    std::vector<double> xs(trials);
    for (int i = 0; i < trials; ++i) {
        xs[static_cast<std::size_t>(i)] = static_cast<double>(count_independent_sets(
            sample_planted(20, 4, 0.5, derive_seed(0xC8, static_cast<std::uint64_t>(i))).graph,
            4));
        mean += xs[static_cast<std::size_t>(i)];
    }
    mean /= trials;
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= (trials - 1);
    double se = std::sqrt(var / trials);
    double target = planted_mean_xa(20, 4, 0.5);
    rep.require(std::abs(mean - target) <= 4 * se,
                "planted mean " + fmt(mean) + " vs " + fmt(target) + " (4se=" + fmt(4 * se) +
                    ")");
}

// ---------------------------------------------------------------- 9

void criterion_chain_coupling(Reporter& rep) {
    ChainExperimentParams params;
    params.n = 45;
    params.a = 7;
    params.r = 2;
    params.p = 0.5;
    params.trials = 500;
    params.seed = 0xC9;
    ChainExperiment exp = run_coupling_chain(params);
    rep.require(exp.invalid_trials == 0, std::to_string(exp.invalid_trials) + " invalid trials");
    rep.require(exp.monotone_fraction == 1.0,
                "monotone fraction " + fmt(exp.monotone_fraction));
    rep.require(std::abs(exp.tv_budget - 0.215) <= 0.001,
                "per-step budget " + fmt(exp.tv_budget) + " should be ~0.215");

    params.r = 0;
    ChainExperiment control = run_coupling_chain(params);
    rep.require(control.invalid_trials == 0, "control produced invalid trials");
    rep.require(control.tv_estimate <= 3.0 * control.tv_se,
                "null TV " + fmt(control.tv_estimate) + " > 3se " + fmt(3.0 * control.tv_se));
}

// ---------------------------------------------------------------- 10

void criterion_asymptotic_regime(Reporter& rep) {
    ModelParams m(0.5);
    {
        AsymptoticRecord rec = asymptotic_record(ScalePoint::from_log10(1000.0), m);
        rep.require(std::abs(rec.rho_hat - rec.boundary_gap) <= 0.02,
                    "rho gap " + fmt(std::abs(rec.rho_hat - rec.boundary_gap)) + " at 1e1000");
    }
    {
        AsymptoticRecord rec = asymptotic_record(ScalePoint::from_log10(4000.0), m);
        rep.require(std::abs(rec.rho_hat - rec.boundary_gap) <= 0.005,
                    "rho gap " + fmt(std::abs(rec.rho_hat - rec.boundary_gap)) + " at 1e4000");
    }
    for (int i = 0; i <= 120; ++i) {
        double log10n = 10.0 + (1000.0 - 10.0) * i / 120.0;
        ScalePoint s = ScalePoint::from_log10(log10n);
        AsymptoticRecord rec = asymptotic_record(s, m);
        double approx = 1.0 / static_cast<double>(rec.alpha) +
                        (1.0 - rec.rho_hat) / (static_cast<double>(rec.alpha) * rec.alpha);
        double l = s.log_n();
        double gap = std::abs(rec.f_deriv - approx) * l * l * l;
        rep.require(gap <= 50.0, "derivative gap " + fmt(gap) + " at 10^" + fmt(log10n));
    }
    for (int i = 0; i <= 24; ++i) {
        double log10n = 6.0 + (100.0 - 6.0) * i / 24.0;
        double n = std::pow(10.0, log10n);
        std::int64_t beta = default_beta(n, m);
        ThresholdResult root = solve_k_star(n, beta, m);
        double growth = dl0_dk(n, root.k_star, static_cast<int>(beta));
        double log_n = std::log(n);
        double dev = std::abs(growth - m.c0 * log_n * log_n) / (log_n * std::log(log_n));
        rep.require(dev <= 20.0, "dL0/dk deviation " + fmt(dev) + " at 10^" + fmt(log10n));
    }
}

// ---------------------------------------------------------------- 11

void criterion_spot_values(Reporter& rep) {
    ModelParams m(0.5);
    ScalePoint s = ScalePoint::from_count(1e6);
    TheoremBounds tb = theorem_bounds_with_mu(s, m, std::log(1e4), 0.1, 1.0);
    rep.require(std::abs(tb.w_n - 0.996) <= 0.01, "w_n = " + fmt(tb.w_n));
    rep.require(std::abs(tb.w_tilde - 0.319) <= 0.005, "w~ = " + fmt(tb.w_tilde));
    rep.require(std::abs(tb.nstar - 0.0557) <= 0.001, "nstar = " + fmt(tb.nstar));
    double g0 = std::exp(log_unified_g0(std::log(1e4), 0.0, std::log(1e6), m));
    rep.require(std::abs(g0 - 0.2384) <= 0.002, "g0 = " + fmt(g0));
}

// ---------------------------------------------------------------- 12

struct SimulateRow {
    double chi_mean = 0, chi_var = -1;
    int invalid = -1;
};

std::map<int, SimulateRow> parse_simulate_csv(const fs::path& path, Reporter& rep) {
    std::map<int, SimulateRow> rows;
    std::ifstream in(path);
    if (!in) {
        rep.require(false, "missing " + path.string());
        return rows;
    }
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 11) continue;
        SimulateRow row;
        row.chi_mean = std::stod(cells[4]);
        row.chi_var = std::stod(cells[5]);
        row.invalid = std::stoi(cells[10]);
        rows[std::stoi(cells[0])] = row;
    }
    return rows;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_cli_simulation(Reporter& rep) {
#ifndef CHIVAR_CLI_PATH
    rep.require(false, "CLI path not configured");
#else
    fs::path base = fs::temp_directory_path() / "chivar_acceptance";
    fs::remove_all(base);
    fs::path out1 = base / "run1";
    fs::path out2 = base / "run2";
    std::string cmd = std::string(CHIVAR_CLI_PATH) +
                      " simulate --n 30 --n 40 --p 0.5 --trials 200 --seed 20240801 --out ";
    int code1 = std::system((cmd + out1.string() + " > /dev/null 2>&1").c_str());
    rep.require(code1 == 0, "first run exited with " + std::to_string(code1));
    int code2 = std::system((cmd + out2.string() + " > /dev/null 2>&1").c_str());
    rep.require(code2 == 0, "second run exited with " + std::to_string(code2));
    if (!rep.ok) return;

    std::string bytes1 = slurp(out1 / "simulate.csv");
    std::string bytes2 = slurp(out2 / "simulate.csv");
    rep.require(!bytes1.empty() && bytes1 == bytes2, "reruns are not byte-identical");

    ModelParams m(0.5);
    std::map<int, SimulateRow> rows = parse_simulate_csv(out1 / "simulate.csv", rep);
    for (int n : {30, 40}) {
        auto it = rows.find(n);
        if (it == rows.end()) {
            rep.require(false, "missing row for n=" + std::to_string(n));
            continue;
        }
        ScalePoint s = ScalePoint::from_count(n);
        double lo = n / alpha0(s, m);
        double hi = 1.3 * chi_estimate(s, m);
        rep.require(it->second.chi_mean >= lo && it->second.chi_mean <= hi,
                    "chi_mean " + fmt(it->second.chi_mean) + " outside [" + fmt(lo) + ", " +
                        fmt(hi) + "] at n=" + std::to_string(n));
        rep.require(it->second.chi_var > 0.0, "chi_var not positive at n=" + std::to_string(n));
        rep.require(it->second.invalid == 0, "invalid trials at n=" + std::to_string(n));
    }
#endif
}

// ------------------------------------------------------------------ runner

struct Criterion {
    int id;
    const char* name;
    std::function<void(Reporter&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "profile-sum expectation equals the all-graph average (n <= 5, exact)",
         criterion_profile_sum_equals_graph_average},
        {2, "first-moment thresholds k_2(4) = 3 and k_2(3) = 2",
         criterion_first_moment_thresholds},
        {3, "Lagrange maximiser matches the simplex grid search",
         criterion_lagrange_vs_grid},
        {4, "multiplier identity dx/drho + rho dy/drho = 0",
         criterion_multiplier_identity},
        {5, "closed-form partial derivatives match central differences",
         criterion_partials_match_differences},
        {6, "k* root, closed form and derivative",
         criterion_k_star},
        {7, "size-bias identity holds exactly on all small graphs",
         criterion_size_bias_identity},
        {8, "exact variance of X_a and the planted-law mean",
         criterion_variance_and_planted_mean},
        {9, "chain coupling: monotone colour growth and the r=0 control",
         criterion_chain_coupling},
        {10, "asymptotic-regime identities in log-only mode",
         criterion_asymptotic_regime},
        {11, "numeric spot values (w_n, w~, nstar bound, g0)",
         criterion_spot_values},
        {12, "CLI simulation: bands, positivity, byte-identical reruns",
         criterion_cli_simulation},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    int failures = 0;
    for (const Criterion& criterion : criteria()) {
        if (only != 0 && criterion.id != only) continue;
        Reporter rep;
        try {
            criterion.run(rep);
        } catch (const std::exception& e) {
            rep.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (rep.ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
                  << criterion.name;
        if (!rep.ok) {
            std::cout << " -- " << rep.detail;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures;
}
