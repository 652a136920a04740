#ifndef CHIVAR_LAGRANGE_HPP
#define CHIVAR_LAGRANGE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace chivar {

// log d_i with d_i = 2^C(i,2) * i!, the weight a colour class of size i
// contributes to the expected-colouring count at p = 1/2.
double log_class_weight(std::int64_t i);

// Maximiser of -sum p_i log(p_i d_i) over probability vectors on {1..t}
// with mean rho: p_i = exp(x + i y) / d_i.
struct LagrangeSolution {
    double rho = 0;
    int t = 0;
    double x = 0;                  // level multiplier
    double y = 0;                  // tilt multiplier
    std::vector<double> p;         // p[i-1] = p_i
    bool converged = false;
    std::pair<double, double> residuals{0, 0}; // |sum p - 1|, |sum i p - rho|
};

// Solves the two constraints by bisection on the strictly increasing mean
// function (sum i e^{iy}/d_i)/(sum e^{iy}/d_i) = rho, then a short Newton
// polish; x normalises the total mass.  Domain: 1 < rho < t.
LagrangeSolution solve_lagrange(double rho, int t);

// tilde-L0(rho, k, t) = rho log(rho k) - log k - rho + 1 - x - rho y
// evaluated at the Lagrange solution; equals the supremum over relaxed
// profiles of the per-class log expectation rate.
double tilde_l0(double rho, double k, int t);

// L0(n, k, t) = k * tilde-L0(n/k, k, t); hat-L0 is L0 / k.
// Domain: 1 < n/k < t.
double l0(double n, double k, int t);
double hat_l0(double n, double k, int t);

struct L0Partials {
    double dtl0_drho;   // log(rho k) - y_t(rho)
    double dtl0_dk;     // (rho - 1) / k
    double dhatl0_dn;   // (log n - y_t(n/k)) / k
    double dhatl0_dk;   // -(n/k^2)(log n - y) + n/k^2 - 1/k
};

L0Partials l0_partials(double n, double k, int t);

// d L0 / dk = hat-L0 + k * d hat-L0 / dk, exposed for the growth checks.
double dl0_dk(double n, double k, int t);

// Calibration rows for the multiplier asymptotics: deviations of y from
// log(t 2^t) and of x + a y from log d_a for a in {t, t+1}.
struct CalibrationRow {
    int t;
    double rho;
    double y_dev;        // y_t(rho) - log(t 2^t)
    double xay_dev_t;    // x + t y - log d_t
    double xay_dev_t1;   // x + (t+1) y - log d_{t+1}
};

std::vector<CalibrationRow> y_calibration_table(const std::vector<int>& ts,
                                                const std::vector<double>& offsets);

} // namespace chivar

#endif
