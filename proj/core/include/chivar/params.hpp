#ifndef CHIVAR_PARAMS_HPP
#define CHIVAR_PARAMS_HPP

#include <optional>

namespace chivar {

// Edge probability p and the derived constants used throughout:
// q = 1 - p, b = 1/q, c0 = 2/log 2 (natural log).
struct ModelParams {
    double p;
    double q;
    double b;
    double c0;

    explicit ModelParams(double p_ = 0.5);

    double log_b() const;          // natural log of b
    bool small_p() const;          // p <= 1 - 1/e^2, the simple-estimate regime
};

// One evaluation scale.  All analytic formulas work from log n, so n may be
// astronomically large (say 10^1000); the real count is kept only when it
// fits in a double.
class ScalePoint {
public:
    static ScalePoint from_count(double n);
    static ScalePoint from_log(double log_n);     // natural log
    static ScalePoint from_log10(double log10_n);

    double log_n() const { return log_n_; }
    bool representable() const { return n_.has_value(); }
    double count() const;                          // throws when log-only
    std::optional<double> count_opt() const { return n_; }

private:
    ScalePoint(double log_n, std::optional<double> n) : log_n_(log_n), n_(n) {}
    double log_n_;
    std::optional<double> n_;
};

} // namespace chivar

#endif
