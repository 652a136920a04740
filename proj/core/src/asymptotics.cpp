#include "chivar/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chivar/errors.hpp"

namespace chivar {

double log_gamma(double x) {
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Kahan-compensated sum of log(n - i), i = 0..t-1.
double log_falling_factorial(double n, std::int64_t t) {
    double sum = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < t; ++i) {
        double term = std::log(n - static_cast<double>(i)) - comp;
        double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum;
}

} // namespace

double log_binomial(const ScalePoint& s, double t_real) {
    if (t_real < 0) throw std::domain_error("log_binomial: t must be >= 0");
    auto t = static_cast<std::int64_t>(t_real);
    if (static_cast<double>(t) != t_real)
        throw std::domain_error("log_binomial: t must be an integer");
    if (t == 0) return 0.0;
    if (s.representable()) {
        double n = s.count();
        if (static_cast<double>(t) > n)
            throw std::domain_error("log_binomial: t exceeds n");
        if (t <= 1000000)
            return log_falling_factorial(n, t) - log_gamma(static_cast<double>(t) + 1.0);
        return log_gamma(n + 1.0) - log_gamma(static_cast<double>(t) + 1.0) -
               log_gamma(n - static_cast<double>(t) + 1.0);
    }
    // n >= exp(709): the falling-factorial correction is below 1 ulp.
    return static_cast<double>(t) * s.log_n() - log_gamma(static_cast<double>(t) + 1.0);
}

double alpha0(const ScalePoint& s, const ModelParams& m) {
    double lb = m.log_b();
    double lbn = s.log_n() / lb; // log_b n
    if (!(lbn > 1.0))
        throw std::domain_error("alpha0: requires log_b n > 1");
    return 2.0 * lbn - 2.0 * std::log(lbn) / lb + 2.0 * std::log(std::exp(1.0) / 2.0) / lb + 1.0;
}

double log_mu(std::int64_t t, const ScalePoint& s, const ModelParams& m) {
    if (t < 1) throw std::domain_error("log_mu: t must be >= 1");
    if (s.representable() && static_cast<double>(t) > s.count())
        throw std::domain_error("log_mu: t exceeds n");
    double pairs = 0.5 * static_cast<double>(t) * static_cast<double>(t - 1);
    return log_binomial(s, static_cast<double>(t)) + pairs * std::log(m.q);
}

double zigzag_lambda(double rho_hat) {
    return std::max(rho_hat / 2.0, (1.0 - rho_hat) / 2.0);
}

namespace {

// d(alpha0)/dn times n; depends on n only through log n.
double n_dalpha0_dn(const ScalePoint& s, const ModelParams& m) {
    return (2.0 / m.log_b()) * (1.0 - 1.0 / s.log_n());
}

double estimate_denominator(const ScalePoint& s, const ModelParams& m) {
    return alpha0(s, m) - 1.0 - 2.0 / m.log_b();
}

} // namespace

double chi_estimate(const ScalePoint& s, const ModelParams& m) {
    double n = s.count(); // throws in log-only mode
    if (m.small_p()) {
        double denom = estimate_denominator(s, m);
        if (!(denom > 0.0))
            throw std::domain_error("chi_estimate: n below the estimate scale");
        return n / denom;
    }
    double a0 = alpha0(s, m);
    double alpha = std::floor(a0);
    double u = 2.0 / m.log_b();
    if (a0 - alpha < u)
        throw RegimeError("estimate-unavailable: p > 1-1/e^2 and alpha0 - alpha < 2/log b");
    if (alpha <= 1.0)
        throw std::domain_error("chi_estimate: alpha too small");
    return n / (alpha - 1.0);
}

ChiDerivative chi_estimate_derivative(const ScalePoint& s, const ModelParams& m) {
    if (!m.small_p())
        throw std::domain_error("chi_estimate_derivative: requires p <= 1 - 1/e^2");
    double a0 = alpha0(s, m);
    double denom = estimate_denominator(s, m);
    if (!(denom > 0.0))
        throw std::domain_error("chi_estimate_derivative: n below the estimate scale");
    double n_dd = n_dalpha0_dn(s, m);
    ChiDerivative out;
    out.value = 1.0 / denom - n_dd / (denom * denom);
    out.truncated = 1.0 / a0 + 1.0 / (a0 * a0);
    return out;
}

AsymptoticRecord asymptotic_record(const ScalePoint& s, const ModelParams& m) {
    AsymptoticRecord r;
    r.alpha0 = alpha0(s, m);
    r.alpha = static_cast<std::int64_t>(std::floor(r.alpha0));
    r.boundary_gap = r.alpha0 - static_cast<double>(r.alpha);
    r.near_integer_boundary = r.boundary_gap < 1e-9 || r.boundary_gap > 1.0 - 1e-9;

    r.log_mu_alpha = log_mu(r.alpha, s, m);
    r.rho_hat = r.log_mu_alpha / s.log_n();
    r.lambda = zigzag_lambda(r.rho_hat);

    r.a_half = static_cast<std::int64_t>(std::floor(r.alpha0 - 0.5));
    r.log_x_scaled = log_mu(r.a_half, s, m) +
                     2.0 * std::log(static_cast<double>(r.a_half)) -
                     std::log(2.0) - s.log_n();
    r.x_scaled = std::exp(r.log_x_scaled);

    r.f_est = kNaN;
    r.f_deriv = kNaN;
    if (s.representable()) {
        try {
            r.f_est = chi_estimate(s, m);
            r.f_available = true;
        } catch (const std::domain_error&) {
            // left unavailable
        }
    }
    if (m.small_p()) {
        try {
            r.f_deriv = chi_estimate_derivative(s, m).value;
            r.f_deriv_available = true;
        } catch (const std::domain_error&) {
        }
    }
    return r;
}

double smallest_phi_root(double d, double u) {
    if (!(d >= 0.0 && d < 1.0)) throw std::domain_error("smallest_phi_root: d must be in [0,1)");
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("smallest_phi_root: u must be in (0,1)");
    auto phi = [d, u](double x) {
        double w = 1.0 - d + x;
        return w * std::log(w) + (d - x) * (1.0 - d) / u;
    };
    if (phi(0.0) <= 0.0) return 0.0;
    if (d == 0.0) return 0.0;

    // phi(d) = 0 exactly; locate the first sign change on [0, d].
    constexpr int kScan = 64;
    double lo = 0.0;
    double hi = d;
    bool found = false;
    for (int i = 1; i <= kScan; ++i) {
        double x = d * static_cast<double>(i) / kScan;
        if (phi(x) <= 0.0) {
            hi = x;
            lo = d * static_cast<double>(i - 1) / kScan;
            found = true;
            break;
        }
    }
    if (!found) return d;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (phi(mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    return hi;
}

} // namespace chivar
