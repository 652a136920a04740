#ifndef CHIVAR_PREDICTOR_HPP
#define CHIVAR_PREDICTOR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chivar/params.hpp"

namespace chivar {

// Conjectured lower bounds on the concentration interval length.
struct ZigzagBounds {
    double lower_alpha_sets;         // sqrt(mu_alpha) / log n
    double lower_alpha_minus_1_sets; // n / (sqrt(mu_{alpha-1}) log^3 n)
    double lambda;                   // max(rho_hat/2, (1-rho_hat)/2)
};

ZigzagBounds zigzag_bounds(const ScalePoint& s, const ModelParams& m);

enum class CaseTag { i, ii, iii, iv, bad };
const char* to_string(CaseTag tag);

struct Prediction {
    double log_n = 0;
    double n = 0; // +inf when log-only
    CaseTag case_tag = CaseTag::bad;
    double g0 = 0;
    double log_g0 = 0;
    double pipeline = 0;          // variance-composition estimate; NaN if unset
    double w_n = 0;
    double w_tilde = 0;
    double nstar_bound = 0;       // NaN when inapplicable
    bool nstar_applicable = false;
    double polylog_bound = 0;
    double alphashift = 0;        // NaN when out of regime
    bool alphashift_available = false;
    std::vector<std::pair<std::string, double>> components;
    std::vector<std::string> notes; // dropped-correction provenance
};

// Unified conjectured width g0 = sqrt(mu_a) (loglog n + |log x|) /
// (c0 (1+x) log^2 n), with the four-case tag.  Refuses p > 1 - 1/e^2.
Prediction g0_prediction(const ScalePoint& s, const ModelParams& m);

double log_unified_g0(double log_mu_a, double log_x, double log_n, const ModelParams& m);

// Matching fraction y(x): identity for x <= 0.01, else the root of
// y + log y = log x + 1 (leading order; o(1) and O(at/n) dropped).
double matching_fraction(double x);
double matching_fraction_from_log(double log_x);

// Colour saving per planted set: -log(mu') / (c0 log^2 n).
// Domain: log_mu_prime < 0.
double benefit(const ScalePoint& s, const ModelParams& m, double log_mu_prime);

// sqrt(mu_a) * dy/dx * B composed at the scale's own x(n), or at an explicit
// x (the calibration sweep interface).
Prediction variance_pipeline(const ScalePoint& s, const ModelParams& m);
Prediction variance_pipeline_at(double x, const ScalePoint& s, const ModelParams& m);

struct AlphaShift {
    double floor_value; // k*(n) - d
    double k_star;
    double d;
    double delta;       // C / log nu
    double nu;          // (n/log n) / mu_alpha
    double m_plus;      // mu (1 + delta)
    double mu;          // mu_alpha(n)
    double log_mu_alpha;
};

// Lower-bound floor k*(n) - (1+5delta) mu log nu / (alpha (log n - loglog n)).
// Regime: p = 1/2, log^5 n <= mu_alpha <= n/log n; C >= 3.
AlphaShift alphashift_floor(const ScalePoint& s, const ModelParams& m, double C = 3.0);
AlphaShift alphashift_floor_with_mu(const ScalePoint& s, const ModelParams& m,
                                    double log_mu_alpha, double C = 3.0);

// Width machinery: a sloped estimate plus a coupling turn into a lower
// bound a delta r / 2 once the window is long enough.
struct FrameworkParams {
    double p = 0.5;
    double delta = 0;               // slope margin
    double Delta = 0;               // concentration half-width
    long long n_minus = 0, n_plus = 0;
    int a = 0;
    // nondecreasing step function r(n), sampled as (n, r) with r(n) taken
    // from the greatest sample point <= n
    std::vector<std::pair<double, long long>> r_table;
    long long r_at(double n) const;
};

struct FrameworkBound {
    bool valid = false;
    std::vector<std::string> reasons;
    double bound = 0; // a delta min_{n in [n-, n+]} r(n) / 2
};

FrameworkBound framework_bound(const FrameworkParams& fp);

struct TheoremBounds {
    double nstar = 0; // (eps log b / 9) sqrt(mu_alpha) / log n; NaN if inapplicable
    bool nstar_applicable = false;
    double polylog = 0; // c sqrt(n) loglog n / log^3 n
    double w_n = 0;     // sqrt(n) loglog n / log^3 n
    double w_tilde = 0; // n^{1/4} / log^{7/4} n
};

TheoremBounds theorem_bounds(const ScalePoint& s, const ModelParams& m, double eps, double c);
TheoremBounds theorem_bounds_with_mu(const ScalePoint& s, const ModelParams& m,
                                     double log_mu_alpha, double eps, double c);

// Membership in the window c1 n / (e log^2 n) <= mu_alpha <= c1 n / log^2 n.
struct WWindow {
    bool member = false;
    double log_lo = 0, log_hi = 0, log_mu_alpha = 0;
};

WWindow w_window(const ScalePoint& s, const ModelParams& m, double c1);

} // namespace chivar

#endif
