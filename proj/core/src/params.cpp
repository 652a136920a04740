#include "chivar/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chivar {

namespace {
// Largest log n for which exp(log n) is still a finite double.
constexpr double kMaxRepresentableLog = 709.0;
} // namespace

ModelParams::ModelParams(double p_) : p(p_) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("edge probability must lie in (0,1), got " + std::to_string(p_));
    q = 1.0 - p;
    b = 1.0 / q;
    c0 = 2.0 / std::log(2.0);
}

double ModelParams::log_b() const { return std::log(b); }

bool ModelParams::small_p() const { return p <= 1.0 - std::exp(-2.0); }

ScalePoint ScalePoint::from_count(double n) {
    if (!(n > 1.0) || !std::isfinite(n))
        throw std::domain_error("vertex count must be a finite real > 1");
    return ScalePoint(std::log(n), n);
}

ScalePoint ScalePoint::from_log(double log_n) {
    if (!(log_n > 0.0) || !std::isfinite(log_n))
        throw std::domain_error("log n must be a finite real > 0");
    if (log_n <= kMaxRepresentableLog) return ScalePoint(log_n, std::exp(log_n));
    return ScalePoint(log_n, std::nullopt);
}

ScalePoint ScalePoint::from_log10(double log10_n) {
    return from_log(log10_n * std::log(10.0));
}

double ScalePoint::count() const {
    if (!n_) throw std::domain_error("scale point is log-only; the vertex count overflows");
    return *n_;
}

} // namespace chivar
