#include "chivar/predictor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chivar/asymptotics.hpp"
#include "chivar/errors.hpp"
#include "chivar/threshold.hpp"

namespace chivar {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_small_p(const ModelParams& m, const char* who) {
    if (!m.small_p())
        throw std::domain_error(std::string(who) + ": predictors are restricted to p <= 1 - 1/e^2");
}
} // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::i: return "i";
        case CaseTag::ii: return "ii";
        case CaseTag::iii: return "iii";
        case CaseTag::iv: return "iv";
        case CaseTag::bad: return "bad";
    }
    return "?";
}

ZigzagBounds zigzag_bounds(const ScalePoint& s, const ModelParams& m) {
    AsymptoticRecord rec = asymptotic_record(s, m);
    double log_mu_am1 = log_mu(rec.alpha - 1, s, m);
    double ll = std::log(s.log_n());
    ZigzagBounds out;
    out.lower_alpha_sets = std::exp(0.5 * rec.log_mu_alpha - ll);
    out.lower_alpha_minus_1_sets = std::exp(s.log_n() - 0.5 * log_mu_am1 - 3.0 * ll);
    out.lambda = rec.lambda;
    return out;
}

double log_unified_g0(double log_mu_a, double log_x, double log_n, const ModelParams& m) {
    double loglog = std::log(log_n);
    // log(1 + x) from log x, stable on both sides
    double log1px = log_x > 0 ? log_x + std::log1p(std::exp(-log_x))
                              : std::log1p(std::exp(log_x));
    return 0.5 * log_mu_a + std::log(loglog + std::abs(log_x)) - std::log(m.c0) - log1px -
           2.0 * loglog;
}

namespace {

CaseTag classify(double log_x, double rho_hat, double log_n) {
    if (rho_hat >= 0.45 && rho_hat <= 0.55) return CaseTag::bad;
    const double log10 = std::log(10.0);
    if (log_x < -log10) return CaseTag::i;                 // x < 0.1
    if (log_x <= log10) return CaseTag::ii;                // x <= 10
    if (log_x >= 4.0 * std::log(log_n)) return CaseTag::iv; // x >= log^4 n
    return CaseTag::iii;
}

Prediction base_prediction(const ScalePoint& s) {
    Prediction pred;
    pred.log_n = s.log_n();
    pred.n = s.representable() ? s.count() : std::numeric_limits<double>::infinity();
    pred.pipeline = kNaN;
    pred.nstar_bound = kNaN;
    pred.alphashift = kNaN;
    return pred;
}

} // namespace

Prediction g0_prediction(const ScalePoint& s, const ModelParams& m) {
    require_small_p(m, "g0_prediction");
    AsymptoticRecord rec = asymptotic_record(s, m);
    double log_mu_a = log_mu(rec.a_half, s, m);

    Prediction pred = base_prediction(s);
    pred.case_tag = classify(rec.log_x_scaled, rec.rho_hat, s.log_n());
    pred.log_g0 = log_unified_g0(log_mu_a, rec.log_x_scaled, s.log_n(), m);
    pred.g0 = std::exp(pred.log_g0);
    pred.components = {{"a", static_cast<double>(rec.a_half)},
                       {"log_mu_a", log_mu_a},
                       {"x", rec.x_scaled},
                       {"log_x", rec.log_x_scaled},
                       {"rho_hat", rec.rho_hat}};
    return pred;
}

double matching_fraction_from_log(double log_x) {
    if (log_x <= std::log(0.01)) return std::exp(log_x);
    // y + log y is strictly increasing on (0, inf); root of = log x + 1
    const double target = log_x + 1.0;
    auto f = [target](double y) { return y + std::log(y) - target; };
    double lo = 1e-300;
    double hi = std::max(2.0, target + 2.0);
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    double y = 0.5 * (lo + hi);
    // one Newton step sharpens the residual to rounding level
    y -= f(y) / (1.0 + 1.0 / y);
    return y;
}

double matching_fraction(double x) {
    if (!(x > 0.0)) throw std::domain_error("matching_fraction: x must be positive");
    if (x <= 0.01) return x;
    return matching_fraction_from_log(std::log(x));
}

double benefit(const ScalePoint& s, const ModelParams& m, double log_mu_prime) {
    if (log_mu_prime >= 0.0)
        throw std::domain_error("benefit: requires mu' < 1 (regime violation)");
    return -log_mu_prime / (m.c0 * s.log_n() * s.log_n());
}

Prediction variance_pipeline_at(double x, const ScalePoint& s, const ModelParams& m) {
    require_small_p(m, "variance_pipeline");
    if (!(x > 0.0)) throw std::domain_error("variance_pipeline: x must be positive");
    AsymptoticRecord rec = asymptotic_record(s, m);
    const double a = static_cast<double>(rec.a_half);
    const double log_x = std::log(x);
    // mu_a is pinned by x through mu_a = 2 x n / a^2
    const double log_mu_a = std::log(2.0) + log_x + s.log_n() - 2.0 * std::log(a);

    const double y = matching_fraction(x);
    double dydx;
    if (x <= 0.01 * (1.0 - 1e-3)) {
        dydx = 1.0; // centred difference inside the linear branch is exactly 1
    } else {
        double h = 1e-4 * x;
        dydx = (matching_fraction(x + h) - matching_fraction(x - h)) / (2.0 * h);
    }

    // t_used = (2y/a^2) n vertices-worth of sets; the remaining scale is
    // n' = n (1 - 2y/a)
    const double shrink = 1.0 - 2.0 * y / a;
    if (!(shrink > 0.0))
        throw RegimeError("variance_pipeline: matching would exhaust the vertex set");

    // mu_{a+1}(n) = mu_a (n-a)/(a+1) q^a, then rescale n -> n'
    double log_na;
    if (s.representable())
        log_na = std::log(s.count() - a);
    else
        log_na = s.log_n();
    double log_mu_a1 = log_mu_a + log_na - std::log(a + 1.0) + a * std::log(m.q);
    double log_mu_prime;
    if (s.representable()) {
        double n = s.count();
        double np = n * shrink;
        double acc = 0.0;
        for (int i = 0; i <= static_cast<int>(a); ++i)
            acc += std::log((np - i) / (n - i));
        log_mu_prime = log_mu_a1 + acc;
    } else {
        log_mu_prime = log_mu_a1 + (a + 1.0) * std::log(shrink);
    }

    const double b_value = benefit(s, m, log_mu_prime);
    Prediction pred = base_prediction(s);
    pred.case_tag = classify(log_x, rec.rho_hat, s.log_n());
    pred.log_g0 = log_unified_g0(log_mu_a, log_x, s.log_n(), m);
    pred.g0 = std::exp(pred.log_g0);
    pred.pipeline = std::exp(0.5 * log_mu_a) * dydx * b_value;
    pred.components = {{"a", a},
                       {"log_mu_a", log_mu_a},
                       {"x", x},
                       {"y", y},
                       {"dydx", dydx},
                       {"t_used_over_n", 2.0 * y / (a * a)},
                       {"shrink", shrink},
                       {"log_mu_prime", log_mu_prime},
                       {"B", b_value}};
    pred.notes = {"matching equation keeps leading order only (o(1), O(at/n) dropped)",
                  "mu' rescaled through the binomial ratio (n'/n)^(a+1)"};
    if (x > 0.0099 && x < 0.0101)
        pred.notes.push_back("x sits at the matching-model switch; dy/dx unreliable");
    return pred;
}

Prediction variance_pipeline(const ScalePoint& s, const ModelParams& m) {
    AsymptoticRecord rec = asymptotic_record(s, m);
    return variance_pipeline_at(std::exp(rec.log_x_scaled), s, m);
}

AlphaShift alphashift_floor_with_mu(const ScalePoint& s, const ModelParams& m,
                                    double log_mu_alpha, double C) {
    if (m.p != 0.5) throw std::domain_error("alphashift_floor: stated only for p = 1/2");
    if (!(C >= 3.0)) throw std::domain_error("alphashift_floor: C must be >= 3");
    const double log_n = s.log_n();
    const double loglog = std::log(log_n);
    if (!(5.0 * loglog <= log_mu_alpha))
        throw RegimeError("alphashift_floor: requires log^5 n <= mu_alpha");
    const double log_nu = (log_n - loglog) - log_mu_alpha;
    if (!(log_nu > 0.0))
        throw RegimeError("alphashift_floor: requires mu_alpha < n / log n");

    AsymptoticRecord rec = asymptotic_record(s, m);
    ThresholdResult root = solve_k_star(s.count(), rec.alpha - 1, m);

    AlphaShift out;
    out.log_mu_alpha = log_mu_alpha;
    out.mu = std::exp(log_mu_alpha);
    out.nu = std::exp(log_nu);
    out.delta = C / log_nu;
    out.m_plus = out.mu * (1.0 + out.delta);
    out.d = (1.0 + 5.0 * out.delta) * out.mu * log_nu /
            (static_cast<double>(rec.alpha) * (log_n - loglog));
    out.k_star = root.k_star;
    out.floor_value = out.k_star - out.d;
    return out;
}

AlphaShift alphashift_floor(const ScalePoint& s, const ModelParams& m, double C) {
    AsymptoticRecord rec = asymptotic_record(s, m);
    return alphashift_floor_with_mu(s, m, rec.log_mu_alpha, C);
}

long long FrameworkParams::r_at(double n) const {
    long long r = -1;
    for (const auto& [point, value] : r_table) {
        if (point <= n) r = value;
        else break;
    }
    return r;
}

FrameworkBound framework_bound(const FrameworkParams& fp) {
    FrameworkBound out;
    if (!(fp.p > 0.0) || !(fp.delta > 0.0) || !(fp.Delta > 0.0))
        out.reasons.push_back("p, delta, Delta must all be positive");
    if (fp.n_minus >= fp.n_plus)
        out.reasons.push_back("n_minus must be below n_plus");
    if (fp.r_table.empty() || fp.r_table.front().first > static_cast<double>(fp.n_minus))
        out.reasons.push_back("r table must cover n_minus");
    for (std::size_t i = 1; i < fp.r_table.size(); ++i) {
        if (fp.r_table[i].second < fp.r_table[i - 1].second ||
            fp.r_table[i].first < fp.r_table[i - 1].first) {
            out.reasons.push_back("r table must be nondecreasing");
            break;
        }
    }
    if (!out.reasons.empty()) return out;

    const double width = static_cast<double>(fp.n_plus - fp.n_minus);
    if (width < 5.0 * fp.Delta / fp.delta)
        out.reasons.push_back("window too short: n+ - n- < 5 Delta / delta");
    long long r_plus = fp.r_at(static_cast<double>(fp.n_plus));
    if (width < 5.0 * static_cast<double>(fp.a) * static_cast<double>(r_plus))
        out.reasons.push_back("window too short: n+ - n- < 5 a r(n+)");

    out.valid = out.reasons.empty();
    long long r_min = fp.r_at(static_cast<double>(fp.n_minus));
    out.bound = static_cast<double>(fp.a) * fp.delta * static_cast<double>(r_min) / 2.0;
    return out;
}

TheoremBounds theorem_bounds_with_mu(const ScalePoint& s, const ModelParams& m,
                                     double log_mu_alpha, double eps, double c) {
    if (!(eps > 0.0)) throw std::domain_error("theorem_bounds: eps must be positive");
    const double log_n = s.log_n();
    const double loglog = std::log(log_n);
    TheoremBounds out;
    out.nstar_applicable = log_mu_alpha < (1.0 - eps) * log_n;
    out.nstar = out.nstar_applicable
                    ? (eps * m.log_b() / 9.0) * std::exp(0.5 * log_mu_alpha) / log_n
                    : kNaN;
    out.polylog = c * std::exp(0.5 * log_n) * loglog / (log_n * log_n * log_n);
    out.w_n = std::exp(0.5 * log_n) * loglog / (log_n * log_n * log_n);
    out.w_tilde = std::exp(0.25 * log_n) / std::pow(log_n, 1.75);
    return out;
}

TheoremBounds theorem_bounds(const ScalePoint& s, const ModelParams& m, double eps, double c) {
    AsymptoticRecord rec = asymptotic_record(s, m);
    return theorem_bounds_with_mu(s, m, rec.log_mu_alpha, eps, c);
}

WWindow w_window(const ScalePoint& s, const ModelParams& m, double c1) {
    if (!(c1 > 0.0 && c1 < 1.0 / (5.0 * m.c0 * m.c0)))
        throw std::domain_error("w_window: c1 must lie in (0, 1/(5 c0^2))");
    AsymptoticRecord rec = asymptotic_record(s, m);
    WWindow out;
    out.log_mu_alpha = rec.log_mu_alpha;
    out.log_hi = std::log(c1) + s.log_n() - 2.0 * std::log(s.log_n());
    out.log_lo = out.log_hi - 1.0;
    out.member = out.log_lo <= rec.log_mu_alpha && rec.log_mu_alpha <= out.log_hi;
    return out;
}

} // namespace chivar
