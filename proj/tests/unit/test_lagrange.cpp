#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chivar/exact_moments.hpp"
#include "chivar/lagrange.hpp"
#include "test_support.hpp"

using namespace chivar;

namespace {

// brute-force supremum of -sum p_i log(p_i d_i) over the constrained simplex,
// t = 3, by gridding the free coordinate at the given step
double grid_objective_t3(double rho, double step) {
    auto logd = [](int i) { return log_class_weight(i); };
    double best = -1e300;
    double p3_lo = std::max(0.0, rho - 2.0);
    double p3_hi = (rho - 1.0) / 2.0;
    for (double p3 = p3_lo; p3 <= p3_hi + 1e-15; p3 += step) {
        double p2 = rho - 1.0 - 2.0 * p3;
        double p1 = 1.0 - p2 - p3;
        if (p1 < 0 || p2 < 0) continue;
        double v = 0.0;
        if (p1 > 0) v -= p1 * (std::log(p1) + logd(1));
        if (p2 > 0) v -= p2 * (std::log(p2) + logd(2));
        if (p3 > 0) v -= p3 * (std::log(p3) + logd(3));
        best = std::max(best, v);
    }
    return best;
}

} // namespace

TEST_CASE("class weights") {
    CHECK(log_class_weight(1) == 0.0);
    CHECK(log_class_weight(3) == doctest::Approx(std::log(48.0)).epsilon(1e-13));
    CHECK(log_class_weight(4) == doctest::Approx(std::log(1536.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_class_weight(0), std::domain_error);
}

TEST_CASE("closed-form solution at t = 2, rho = 1.5") {
    LagrangeSolution sol = solve_lagrange(1.5, 2);
    REQUIRE(sol.p.size() == 2);
    CHECK(sol.p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sol.p[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sol.y == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(sol.x == doctest::Approx(-std::log(8.0)).epsilon(1e-12));
    CHECK(sol.converged);
}

TEST_CASE("constructed zero-tilt point at t = 3") {
    // rho = (sum i/d_i)/(sum 1/d_i) = (75/48)/(61/48) = 75/61 forces y = 0
    LagrangeSolution sol = solve_lagrange(75.0 / 61.0, 3);
    CHECK(std::abs(sol.y) <= 1e-6);
    CHECK(sol.x == doctest::Approx(-std::log(61.0 / 48.0)).epsilon(1e-9));
}

TEST_CASE("objective matches simplex grid search") {
    for (double rho : {1.5, 2.0}) {
        LagrangeSolution sol = solve_lagrange(rho, 3);
        double objective = -(sol.x + rho * sol.y);
        CHECK(std::abs(objective - grid_objective_t3(rho, 1e-4)) <= 1e-6);
    }
}

TEST_CASE("residuals and domain errors") {
    test::TestRng rng(0xACCE5501);
    for (int i = 0; i < 40; ++i) {
        int t = rng.uniform_int(2, 200);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.02, 0.98);
        LagrangeSolution sol = solve_lagrange(rho, t);
        CHECK(sol.residuals.first <= 1e-10);
        CHECK(sol.residuals.second <= 1e-10);
        // far tails underflow to zero at large t; mass near the mean must not
        for (double p : sol.p) CHECK(p >= 0.0);
        int near = static_cast<int>(std::lround(rho));
        near = std::min(std::max(near, 1), t);
        CHECK(sol.p[static_cast<std::size_t>(near - 1)] > 0.0);
    }
    CHECK_THROWS_AS(solve_lagrange(1.0, 3), std::domain_error);
    CHECK_THROWS_AS(solve_lagrange(3.0, 3), std::domain_error);
    CHECK_THROWS_AS(solve_lagrange(0.5, 1), std::domain_error);
}

TEST_CASE("tilde L0 values and k-shift identity") {
    // 1.5 ln 15 - ln 10 - 0.5, since x + rho y = 0 at (1.5, 2)
    double expected = 1.5 * std::log(15.0) - std::log(10.0) - 0.5;
    CHECK(tilde_l0(1.5, 10.0, 2) == doctest::Approx(1.2595).epsilon(1e-3));
    CHECK(tilde_l0(1.5, 10.0, 2) == doctest::Approx(expected).epsilon(1e-12));

    test::TestRng rng(0x7155);
    for (int i = 0; i < 10; ++i) {
        int t = rng.uniform_int(3, 40);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.1, 0.9);
        double k1 = std::exp(rng.uniform(0.5, 12.0));
        double k2 = std::exp(rng.uniform(0.5, 12.0));
        double lhs = tilde_l0(rho, k1, t) - tilde_l0(rho, k2, t);
        double rhs = (rho - 1.0) * (std::log(k1) - std::log(k2));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }

    // full tilde-L0 against the grid supremum with the k terms included
    double rho = 2.0, k = 5.0;
    double grid = grid_objective_t3(rho, 1e-4) + rho * std::log(rho * k) - std::log(k) - rho + 1;
    CHECK(std::abs(tilde_l0(rho, k, 3) - grid) <= 1e-5);
}

TEST_CASE("L0 scaling and dominance over integer profiles") {
    CHECK(l0(15.0, 10.0, 2) == doctest::Approx(10.0 * tilde_l0(1.5, 10.0, 2)).epsilon(1e-14));
    CHECK(hat_l0(15.0, 10.0, 2) * 10.0 == doctest::Approx(l0(15.0, 10.0, 2)).epsilon(1e-14));
    CHECK_THROWS_AS(l0(10.0, 10.0, 3), std::domain_error);
    CHECK_THROWS_AS(l0(40.0, 10.0, 3), std::domain_error);

    // relaxed supremum dominates every integer profile (n = 12, k = 5, t = 3)
    const int n = 12, k = 5, t = 3;
    double sup = l0(n, k, t);
    int profiles = 0;
    for_each_profile(n, k, t, [&](const std::vector<int>& counts) {
        ++profiles;
        double lpi = n * std::log(static_cast<double>(n)) - n + k;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            int c = counts[i];
            if (c == 0) continue;
            lpi -= c * (std::log(static_cast<double>(c)) +
                        log_class_weight(static_cast<int>(i) + 1));
        }
        CHECK(lpi <= sup + 1e-9);
    });
    CHECK(profiles > 0);
}

TEST_CASE("partials: closed forms and finite differences") {
    L0Partials p = l0_partials(15.0, 10.0, 2);
    CHECK(p.dtl0_dk == doctest::Approx(0.05).epsilon(1e-13));
    double y = solve_lagrange(1.5, 2).y;
    CHECK(p.dtl0_drho == doctest::Approx(std::log(15.0) - y).epsilon(1e-12));
    CHECK(p.dtl0_drho == doctest::Approx(1.3218).epsilon(1e-3));

    test::TestRng rng(0x9D1FF5);
    int checked = 0;
    while (checked < 20) {
        int t = rng.uniform_int(4, 50);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.15, 0.85);
        double k = std::exp(rng.uniform(2.0, 14.0));
        double n = rho * k;
        L0Partials cf = l0_partials(n, k, t);

        auto rel = [](double a, double b) {
            return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-8});
        };
        double hr = 6e-6 * std::max(1.0, rho);
        double fd_rho = (tilde_l0(rho + hr, k, t) - tilde_l0(rho - hr, k, t)) / (2 * hr);
        CHECK(rel(fd_rho, cf.dtl0_drho) <= 1e-6);

        double hk = 6e-6 * k;
        double fd_k = (tilde_l0(rho, k + hk, t) - tilde_l0(rho, k - hk, t)) / (2 * hk);
        CHECK(rel(fd_k, cf.dtl0_dk) <= 1e-6);

        double hn = 6e-6 * n;
        double fd_n = (hat_l0(n + hn, k, t) - hat_l0(n - hn, k, t)) / (2 * hn);
        CHECK(rel(fd_n, cf.dhatl0_dn) <= 1e-6);

        double fd_hk = (hat_l0(n, k + hk, t) - hat_l0(n, k - hk, t)) / (2 * hk);
        CHECK(rel(fd_hk, cf.dhatl0_dk) <= 1e-6);
        ++checked;
    }
}

TEST_CASE("multiplier derivative identity dx/drho + rho dy/drho = 0") {
    test::TestRng rng(0x1A6E);
    for (int i = 0; i < 30; ++i) {
        int t = rng.uniform_int(2, 120);
        double rho = 1.0 + (t - 1.0) * rng.uniform(0.1, 0.9);
        double h = 1e-5 * std::max(1.0, rho);
        LagrangeSolution hi = solve_lagrange(rho + h, t);
        LagrangeSolution lo = solve_lagrange(rho - h, t);
        double dx = (hi.x - lo.x) / (2 * h);
        double dy = (hi.y - lo.y) / (2 * h);
        double tol = 1e-6 * (std::abs(dx) + rho * std::abs(dy) + 1.0);
        CHECK(std::abs(dx + rho * dy) <= tol);
    }
}

TEST_CASE("y calibration rows") {
    // t = 2, rho = 1.5: y = log 4, x = -log 8
    auto rows = y_calibration_table({2}, {0.5});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].y_dev == doctest::Approx(-std::log(2.0)).epsilon(1e-10));
    // x + 2y - log d_2 = -log 8 + 2 log 4 - log 4 = -log 2
    CHECK(rows[0].xay_dev_t == doctest::Approx(-std::log(2.0)).epsilon(1e-10));

    // bounded deviations across the sweep
    auto sweep = y_calibration_table({10, 20, 50, 100, 200, 400}, {0.5, 1.0, 2.0, 3.0});
    CHECK(sweep.size() == 24);
    for (const auto& row : sweep) {
        CHECK(std::abs(row.y_dev) <= 10.0);
        CHECK(std::abs(row.xay_dev_t) <= 10.0);
        CHECK(std::abs(row.xay_dev_t1) <= 10.0);
    }
}
