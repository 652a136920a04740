#include "chivar/threshold.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chivar/asymptotics.hpp"
#include "chivar/errors.hpp"
#include "chivar/lagrange.hpp"

namespace chivar {

std::int64_t default_beta(double n, const ModelParams& m) {
    auto a = static_cast<std::int64_t>(std::floor(alpha0(ScalePoint::from_count(n), m)));
    return a - 1;
}

ThresholdResult solve_k_star(double n, std::int64_t beta, const ModelParams& m) {
    if (!(n > 1.0) || !std::isfinite(n))
        throw std::domain_error("solve_k_star: n must be a finite real > 1");
    ScalePoint s = ScalePoint::from_count(n);
    auto alpha = static_cast<std::int64_t>(std::floor(alpha0(s, m)));
    if (beta != alpha - 1 && beta != alpha - 2)
        throw std::domain_error("solve_k_star: beta must be alpha(n)-1 or alpha(n)-2 (alpha=" +
                                std::to_string(alpha) + ")");
    if (beta < 3)
        throw RegimeError("no-sign-change: beta too small for the threshold regime");

    const int t = static_cast<int>(beta);
    auto value = [&](double k) { return hat_l0(n, k, t); };

    // 64-point scan, linear in rho from beta - 0.01 down to 2.
    constexpr int kScan = 64;
    const double rho_hi = static_cast<double>(beta) - 0.01;
    const double rho_lo = 2.0;
    std::vector<double> ks(kScan), vals(kScan);
    for (int i = 0; i < kScan; ++i) {
        double rho = rho_hi - (rho_hi - rho_lo) * static_cast<double>(i) / (kScan - 1);
        ks[i] = n / rho;
        vals[i] = value(ks[i]);
    }
    int change = -1, changes = 0;
    for (int i = 0; i + 1 < kScan; ++i) {
        if ((vals[i] < 0.0) != (vals[i + 1] < 0.0)) {
            change = i;
            ++changes;
        }
    }
    if (changes != 1)
        throw RegimeError("no-sign-change: hat-L0 scan found " + std::to_string(changes) +
                          " sign changes over k in [n/(beta-0.01), n/2] at n=" +
                          std::to_string(n));

    double lo = ks[change], hi = ks[change + 1];
    double flo = vals[change];
    double mid = 0.5 * (lo + hi), fmid = value(mid);
    for (int it = 0; it < 200 && std::abs(fmid) > 1e-9; ++it) {
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        fmid = value(mid);
    }
    if (std::abs(fmid) > 1e-9)
        throw std::runtime_error("solve_k_star: bisection stalled, residual " +
                                 std::to_string(fmid));

    ThresholdResult out;
    out.n = n;
    out.beta = beta;
    out.k_star = mid;
    out.residual = fmid;
    out.bracket = {lo, hi};
    out.derivative = k_star_derivative(out, m).value;
    return out;
}

KStarDerivative k_star_derivative(const ThresholdResult& root, const ModelParams& m) {
    double rho = root.n / root.k_star;
    double y = solve_lagrange(rho, static_cast<int>(root.beta)).y;
    KStarDerivative d;
    d.reciprocal = rho - (rho - 1.0) / (std::log(root.n) - y);
    d.reciprocal_simplified = rho + m.c0;
    d.value = 1.0 / d.reciprocal;
    return d;
}

} // namespace chivar
