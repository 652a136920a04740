#include "chivar/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "chivar/asymptotics.hpp"
#include "chivar/errors.hpp"

namespace chivar {

double log_class_weight(std::int64_t i) {
    if (i < 1) throw std::domain_error("log_class_weight: i must be >= 1");
    double pairs = 0.5 * static_cast<double>(i) * static_cast<double>(i - 1);
    return pairs * std::log(2.0) + log_gamma(static_cast<double>(i) + 1.0);
}

namespace {

struct TiltStats {
    double log_mass;  // log sum_i e^{iy}/d_i
    double mean;
    double var;
};

// Mass, mean and variance of the tilted weights, computed through one
// log-sum-exp so the result is finite for any y (the raw terms span
// thousands of e-folds).
TiltStats tilt_stats(double y, const std::vector<double>& log_d) {
    const int t = static_cast<int>(log_d.size());
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= t; ++i)
        m = std::max(m, i * y - log_d[i - 1]);
    double mass = 0.0, mass_i = 0.0;
    for (int i = 1; i <= t; ++i) {
        double w = std::exp(i * y - log_d[i - 1] - m);
        mass += w;
        mass_i += w * i;
    }
    double mean = mass_i / mass;
    double var = 0.0;
    for (int i = 1; i <= t; ++i) {
        double w = std::exp(i * y - log_d[i - 1] - m);
        var += w * (i - mean) * (i - mean);
    }
    var /= mass;
    return {m + std::log(mass), mean, var};
}

} // namespace

LagrangeSolution solve_lagrange(double rho, int t) {
    if (t < 2) throw std::domain_error("solve_lagrange: t must be >= 2");
    if (!(rho > 1.0 && rho < static_cast<double>(t)))
        throw std::domain_error("solve_lagrange: rho must lie in (1, t), got rho=" +
                                std::to_string(rho) + " t=" + std::to_string(t));

    std::vector<double> log_d(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) log_d[i - 1] = log_class_weight(i);

    // The mean runs from 1 to t as y goes from -inf to +inf; [-4t, 4t]
    // brackets every rho we care about, with geometric expansion as a guard.
    double lo = -4.0 * t, hi = 4.0 * t;
    int guard = 0;
    while (tilt_stats(lo, log_d).mean > rho && guard++ < 60) lo *= 2.0;
    while (tilt_stats(hi, log_d).mean < rho && guard++ < 60) hi *= 2.0;

    int steps = 0;
    bool bracket_ok = tilt_stats(lo, log_d).mean <= rho && tilt_stats(hi, log_d).mean >= rho;
    while (steps < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi) + std::abs(lo))) {
        double mid = 0.5 * (lo + hi);
        if (tilt_stats(mid, log_d).mean < rho) lo = mid;
        else hi = mid;
        ++steps;
    }
    double y = 0.5 * (lo + hi);
    // Newton polish pushes the mean residual to rounding level.
    for (int it = 0; it < 8; ++it) {
        TiltStats st = tilt_stats(y, log_d);
        if (!(st.var > 0.0)) break;
        double step = (rho - st.mean) / st.var;
        if (!std::isfinite(step)) break;
        y += step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(y))) break;
    }

    TiltStats st = tilt_stats(y, log_d);
    LagrangeSolution sol;
    sol.rho = rho;
    sol.t = t;
    sol.y = y;
    sol.x = -st.log_mass;
    sol.p.resize(static_cast<std::size_t>(t));
    // normalise the max-shifted weights rather than re-exponentiating
    // x + i y - log d_i, whose large-magnitude cancellation costs digits
    double shift = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= t; ++i) shift = std::max(shift, i * y - log_d[i - 1]);
    double mass = 0.0;
    for (int i = 1; i <= t; ++i) {
        sol.p[i - 1] = std::exp(i * y - log_d[i - 1] - shift);
        mass += sol.p[i - 1];
    }
    double total = 0.0, total_i = 0.0;
    for (int i = 1; i <= t; ++i) {
        sol.p[i - 1] /= mass;
        total += sol.p[i - 1];
        total_i += sol.p[i - 1] * i;
    }
    sol.residuals = {std::abs(total - 1.0), std::abs(total_i - rho)};
    sol.converged = bracket_ok && steps < 200 &&
                    sol.residuals.first <= 1e-10 && sol.residuals.second <= 1e-10;
    if (!sol.converged && !(sol.residuals.first <= 1e-10 && sol.residuals.second <= 1e-10))
        throw std::runtime_error("solve_lagrange: failed to converge at rho=" +
                                 std::to_string(rho) + " t=" + std::to_string(t) +
                                 " (residuals " + std::to_string(sol.residuals.first) + ", " +
                                 std::to_string(sol.residuals.second) + ")");
    return sol;
}

double tilde_l0(double rho, double k, int t) {
    if (!(k > 0.0)) throw std::domain_error("tilde_l0: k must be positive");
    LagrangeSolution sol = solve_lagrange(rho, t);
    return rho * std::log(rho * k) - std::log(k) - rho + 1.0 - sol.x - rho * sol.y;
}

double hat_l0(double n, double k, int t) {
    if (!(k > 0.0 && n > 0.0)) throw std::domain_error("hat_l0: n, k must be positive");
    double rho = n / k;
    if (!(rho > 1.0 && rho < static_cast<double>(t)))
        throw std::domain_error("hat_l0: requires 1 < n/k < t");
    return tilde_l0(rho, k, t);
}

double l0(double n, double k, int t) { return k * hat_l0(n, k, t); }

L0Partials l0_partials(double n, double k, int t) {
    double rho = n / k;
    if (!(rho > 1.0 && rho < static_cast<double>(t)))
        throw std::domain_error("l0_partials: requires 1 < n/k < t");
    double y = solve_lagrange(rho, t).y;
    double log_n = std::log(n);
    L0Partials out;
    out.dtl0_drho = std::log(rho * k) - y;
    out.dtl0_dk = (rho - 1.0) / k;
    out.dhatl0_dn = (log_n - y) / k;
    out.dhatl0_dk = -(n / (k * k)) * (log_n - y) + n / (k * k) - 1.0 / k;
    return out;
}

double dl0_dk(double n, double k, int t) {
    return hat_l0(n, k, t) + k * l0_partials(n, k, t).dhatl0_dk;
}

std::vector<CalibrationRow> y_calibration_table(const std::vector<int>& ts,
                                                const std::vector<double>& offsets) {
    std::vector<CalibrationRow> rows;
    for (int t : ts) {
        for (double c : offsets) {
            double rho = static_cast<double>(t) - c;
            if (!(rho > 1.0)) continue;
            LagrangeSolution sol = solve_lagrange(rho, t);
            CalibrationRow row;
            row.t = t;
            row.rho = rho;
            row.y_dev = sol.y - (std::log(static_cast<double>(t)) + t * std::log(2.0));
            row.xay_dev_t = sol.x + t * sol.y - log_class_weight(t);
            row.xay_dev_t1 = sol.x + (t + 1.0) * sol.y - log_class_weight(t + 1);
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace chivar
