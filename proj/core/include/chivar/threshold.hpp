#ifndef CHIVAR_THRESHOLD_HPP
#define CHIVAR_THRESHOLD_HPP

#include <cstdint>
#include <utility>

#include "chivar/params.hpp"

namespace chivar {

// Root of hat-L0(n, k, beta) = 0 in k: the real-valued stand-in for the
// beta-bounded first moment threshold.
struct ThresholdResult {
    double n = 0;
    std::int64_t beta = 0;
    double k_star = 0;
    double residual = 0;                    // hat-L0 at k_star
    std::pair<double, double> bracket{0, 0}; // final root bracket in k
    double derivative = 0;                  // dk*/dn (implicit function theorem)
};

// beta must be alpha(n) - 1 or alpha(n) - 2.  Scans hat-L0 on 64 points of
// k in [n/(beta - 0.01), n/2] (linear in rho = n/k), requires exactly one
// sign change, then bisects to |hat-L0| <= 1e-9.  RegimeError("no-sign-change")
// when the scan sees zero or several changes (n too small for the regime).
ThresholdResult solve_k_star(double n, std::int64_t beta, const ModelParams& m);

struct KStarDerivative {
    double value;                 // dk*/dn
    double reciprocal;            // n/k - (rho-1)/(log n - y_beta(rho))
    double reciprocal_simplified; // n/k* + 2/log 2
};

KStarDerivative k_star_derivative(const ThresholdResult& root, const ModelParams& m);

// Default beta for a given scale: alpha(n) - 1.
std::int64_t default_beta(double n, const ModelParams& m);

} // namespace chivar

#endif
