#ifndef CHIVAR_SIZEBIAS_HPP
#define CHIVAR_SIZEBIAS_HPP

#include "chivar/exact_moments.hpp"

namespace chivar {

// Exact check that the planted law is the size-biased one:
//   Pr(P_n = H) = X_a(H) p_H / mu   for every labelled H on [n].
// The left side is evaluated by summing over planted sets U consistent with
// H, the right by an independent X_a count; both in exact rationals with
// p = p_num / p_den.  n <= 5.
struct DistributionCheck {
    int graphs = 0;
    BigRat max_discrepancy;
    double max_discrepancy_value = 0;
    BigRat total_probability_error; // |sum_H Pr(P_n = H) - 1|
};

DistributionCheck planted_distribution_check(int n, int a, long long p_num, long long p_den);

// Var X_a = sum_{j=0}^{a} C(n,a) C(a,j) C(n-a,a-j) q^{2C(a,2)-C(j,2)} - mu^2.
// Small instances take an exact product path (powers of 1/2 are exact in
// binary); larger ones a compensated log-space path.
double exact_xa_variance(int n, int a, double p);

// sqrt(Var X_a) / (2 mu): the coupling total-variation bound.
double tv_upper_bound(int n, int a, double p);

// mean of X_a under the planted (size-biased) law: (Var + mu^2)/mu.
double planted_mean_xa(int n, int a, double p);

double log_mu_exact_scale(int n, int a, double p); // log C(n,a) + C(a,2) log q

} // namespace chivar

#endif
