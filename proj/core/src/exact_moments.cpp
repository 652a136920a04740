#include "chivar/exact_moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chivar/errors.hpp"

namespace chivar {

BigInt factorial_exact(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

namespace {

void recurse(int size, int vertices_left, int classes_left, std::vector<int>& counts,
             const std::function<void(const std::vector<int>&)>& visit) {
    if (size == 0) {
        if (vertices_left == 0 && classes_left == 0) visit(counts);
        return;
    }
    // counts for class size `size`: need size*c <= vertices_left, c <= classes_left,
    // and the remaining classes must be able to absorb the remaining vertices.
    int max_c = std::min(classes_left, vertices_left / size);
    for (int c = 0; c <= max_c; ++c) {
        int v = vertices_left - c * size;
        int cl = classes_left - c;
        // classes of size < `size` can hold at most cl*(size-1) vertices and need at least cl
        if (v >= cl && v <= cl * (size - 1)) {
            counts[static_cast<std::size_t>(size - 1)] = c;
            recurse(size - 1, v, cl, counts, visit);
            counts[static_cast<std::size_t>(size - 1)] = 0;
        }
    }
}

} // namespace

void for_each_profile(int n, int k, int t,
                      const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1 || k < 1 || t < 1) return;
    std::vector<int> counts(static_cast<std::size_t>(t), 0);
    recurse(t, n, k, counts, visit);
}

BigRat profile_expectation(int n, const std::vector<int>& counts) {
    BigInt ways = factorial_exact(n);
    long long forbidden_pairs = 0;
    for (std::size_t idx = 0; idx < counts.size(); ++idx) {
        int size = static_cast<int>(idx) + 1;
        int c = counts[idx];
        if (c == 0) continue;
        ways /= factorial_exact(c);
        BigInt szf = factorial_exact(size);
        for (int j = 0; j < c; ++j) ways /= szf;
        forbidden_pairs += static_cast<long long>(c) * (static_cast<long long>(size) * (size - 1) / 2);
    }
    BigInt den = BigInt(1) << forbidden_pairs;
    return BigRat(ways, den);
}

ExactExpectation exact_expected_colourings(int n, int k, int t) {
    if (n < 1 || k < 1 || t < 1)
        throw std::domain_error("exact_expected_colourings: n, k, t must be >= 1");
    if (n > kMaxExactOrder)
        throw SizeError("exact_expected_colourings: n capped at " +
                        std::to_string(kMaxExactOrder) + " (profile enumeration)");
    ExactExpectation out;
    out.n = n;
    out.k = k;
    out.t = t;
    out.value = 0;
    for_each_profile(n, k, t, [&](const std::vector<int>& counts) {
        out.value += profile_expectation(n, counts);
    });
    if (out.value == 0) {
        out.log_value = -std::numeric_limits<double>::infinity();
    } else {
        out.log_value = std::log(boost::multiprecision::numerator(out.value).convert_to<double>()) -
                        std::log(boost::multiprecision::denominator(out.value).convert_to<double>());
    }
    return out;
}

int first_moment_threshold(int n, int t) {
    if (n < 1 || t < 1) throw std::domain_error("first_moment_threshold: n, t must be >= 1");
    if (n > kMaxExactOrder)
        throw SizeError("first_moment_threshold: n capped at " + std::to_string(kMaxExactOrder));
    int k0 = (n + t - 1) / t;
    for (int k = k0; k <= n; ++k) {
        if (exact_expected_colourings(n, k, t).value >= 1) return k;
    }
    return n; // E_{n,n,t} = 1, so this line is unreachable
}

} // namespace chivar
