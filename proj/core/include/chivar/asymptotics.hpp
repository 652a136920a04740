#ifndef CHIVAR_ASYMPTOTICS_HPP
#define CHIVAR_ASYMPTOTICS_HPP

#include <cstdint>

#include "chivar/params.hpp"

namespace chivar {

// Thread-safe log-gamma (std::lgamma touches a global sign flag on glibc).
double log_gamma(double x);

// log C(n, t) for real n >= t >= 0, via a stable product/log-gamma mix.
double log_binomial(const ScalePoint& s, double t);

// alpha0(n) = 2 log_b n - 2 log_b log_b n + 2 log_b(e/2) + 1, the scale at
// which the expected number of independent t-sets crosses 1.
// Domain: log_b n > 1.
double alpha0(const ScalePoint& s, const ModelParams& m);

// log mu_t = log C(n,t) + C(t,2) log q, the log expected number of
// independent t-sets.  t >= 1; when n is representable also t <= n.
double log_mu(std::int64_t t, const ScalePoint& s, const ModelParams& m);

// Everything closed-form at one scale point.
struct AsymptoticRecord {
    double alpha0 = 0;            // real-valued scale
    std::int64_t alpha = 0;       // floor(alpha0)
    double boundary_gap = 0;      // alpha0 - alpha, in [0,1)
    bool near_integer_boundary = false; // gap within 1e-9 of {0, 1}

    double log_mu_alpha = 0;      // log mu_alpha(n)
    double rho_hat = 0;           // log mu_alpha / log n
    double lambda = 0;            // max(rho_hat/2, (1-rho_hat)/2)

    std::int64_t a_half = 0;      // floor(alpha0 - 1/2)
    double log_x_scaled = 0;      // log( mu_{a_half} a_half^2 / (2n) )
    double x_scaled = 0;          // exp of the above; may over/underflow

    double f_est = 0;             // chromatic estimate; NaN when unavailable
    double f_deriv = 0;           // exact df/dn;        NaN when unavailable
    bool f_available = false;
    bool f_deriv_available = false;
};

AsymptoticRecord asymptotic_record(const ScalePoint& s, const ModelParams& m);

double zigzag_lambda(double rho_hat);

// Explicit whp estimate for the chromatic number.
//   p <= 1 - 1/e^2 :  n / (alpha0 - 1 - 2/log b)
//   p >  1 - 1/e^2 :  n / (alpha - 1), valid only when alpha0 - alpha >= 2/log b;
//                     otherwise RegimeError("estimate-unavailable").
// Needs a representable n.
double chi_estimate(const ScalePoint& s, const ModelParams& m);

struct ChiDerivative {
    double value;       // exact d/dn of the estimate (closed form)
    double truncated;   // 1/alpha0 + 1/alpha0^2
};

// df/dn for the small-p estimate; works in log-only mode (the derivative
// depends on n only through log n).
ChiDerivative chi_estimate_derivative(const ScalePoint& s, const ModelParams& m);

// Smallest x >= 0 with (1-d+x) log(1-d+x) + (d-x)(1-d)/u <= 0.
// Always <= d, since the expression vanishes at x = d.
double smallest_phi_root(double d, double u);

} // namespace chivar

#endif
