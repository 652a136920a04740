#ifndef CHIVAR_EXACT_MOMENTS_HPP
#define CHIVAR_EXACT_MOMENTS_HPP

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chivar {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact expected number of unordered t-bounded k-colourings of G(n, 1/2):
// sum over integer profiles (n_i) with sum n_i = k, sum i n_i = n of
//   n! / (prod n_i! prod (i!)^{n_i}) * 2^{-sum n_i C(i,2)}.
struct ExactExpectation {
    int n = 0, k = 0, t = 0;
    BigRat value;
    double log_value = 0; // log of value; -inf when value = 0
};

inline constexpr int kMaxExactOrder = 14;

ExactExpectation exact_expected_colourings(int n, int k, int t);

// Least k with E_{n,k,t} >= 1 (exists: E_{n,n,t} = 1).
int first_moment_threshold(int n, int t);

// Visit every integer profile (counts[i-1] classes of size i).  Exposed so
// tests can enumerate profiles independently.
void for_each_profile(int n, int k, int t,
                      const std::function<void(const std::vector<int>&)>& visit);

// Expected number of colourings with one fixed profile (the summand above).
BigRat profile_expectation(int n, const std::vector<int>& counts);

BigInt binomial_exact(int n, int k);
BigInt factorial_exact(int n);

} // namespace chivar

#endif
