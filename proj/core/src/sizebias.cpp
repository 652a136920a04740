#include "chivar/sizebias.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chivar/asymptotics.hpp"
#include "chivar/errors.hpp"
#include "chivar/graph.hpp"
#include "chivar/mis.hpp"

namespace chivar {

namespace {

BigRat big_pow(const BigRat& base, long long e) {
    BigRat r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

long long pairs_of(long long k) { return k * (k - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

} // namespace

DistributionCheck planted_distribution_check(int n, int a, long long p_num, long long p_den) {
    if (n < 2 || n > 5) throw SizeError("planted_distribution_check: n must be in [2,5]");
    if (a < 1 || a > n) throw std::domain_error("planted_distribution_check: need 1 <= a <= n");
    if (!(p_num > 0 && p_num < p_den))
        throw std::domain_error("planted_distribution_check: need 0 < p_num/p_den < 1");

    const BigRat p(p_num, p_den);
    const BigRat q = 1 - p;
    const int total_pairs = n * (n - 1) / 2;
    const BigInt choose_a = binomial_exact(n, a);
    const BigRat mu = BigRat(choose_a) * big_pow(q, pairs_of(a));

    // all a-subsets as pair masks
    std::vector<std::uint64_t> subset_masks;      // edges inside U
    std::vector<std::uint64_t> subset_vertices;   // vertex masks
    {
        for (std::uint64_t vm = 0; vm < (1u << n); ++vm) {
            if (std::popcount(vm) != a) continue;
            std::uint64_t em = 0;
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++bit)
                    if (((vm >> u) & 1u) && ((vm >> v) & 1u)) em |= std::uint64_t{1} << bit;
            subset_masks.push_back(em);
            subset_vertices.push_back(vm);
        }
    }

    DistributionCheck out;
    out.max_discrepancy = 0;
    out.total_probability_error = 0;
    BigRat total = 0;

    const int bits = total_pairs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        const int e = std::popcount(mask);
        // left side: sum over planted sets with no internal edge in H
        BigInt consistent = 0;
        for (const auto& em : subset_masks)
            if ((mask & em) == 0) ++consistent;
        BigRat lhs = BigRat(consistent, choose_a) * big_pow(p, e) *
                     big_pow(q, total_pairs - pairs_of(a) - e);
        total += lhs;

        // right side via an independent X_a count on the Graph object
        Graph h = graph_from_mask(n, mask);
        auto xa = BigInt(count_independent_sets(h, a));
        BigRat p_h = big_pow(p, e) * big_pow(q, total_pairs - e);
        BigRat rhs = BigRat(xa) / mu * p_h;

        BigRat diff = lhs - rhs;
        if (diff < 0) diff = -diff;
        if (diff > out.max_discrepancy) out.max_discrepancy = diff;
        ++out.graphs;
    }
    BigRat terr = total - 1;
    if (terr < 0) terr = -terr;
    out.total_probability_error = terr;
    out.max_discrepancy_value = out.max_discrepancy.convert_to<double>();
    return out;
}

namespace {

// exact while the intermediate binomials stay below 2^53
bool exact_path_ok(int n, int a) {
    double c = 1.0;
    for (int i = 1; i <= a; ++i) c = c * (n - a + i) / i;
    return c < 9.0e15 && n <= 64 && a <= 12;
}

double binom_double(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (long long i = 1; i <= k; ++i) {
        r *= static_cast<double>(n - k + i);
        r /= static_cast<double>(i);
    }
    return r;
}

double pow_int(double q, long long e) {
    double r = 1.0;
    for (long long i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace

double log_mu_exact_scale(int n, int a, double p) {
    ScalePoint s = ScalePoint::from_count(static_cast<double>(n));
    return log_binomial(s, static_cast<double>(a)) + pairs_of(a) * std::log1p(-p);
}

double exact_xa_variance(int n, int a, double p) {
    if (a < 1) throw std::domain_error("exact_xa_variance: a must be >= 1");
    if (a > n) throw std::domain_error("exact_xa_variance: a exceeds n");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("exact_xa_variance: p must be in (0,1)");
    const double q = 1.0 - p;
    const long long apairs = pairs_of(a);

    if (exact_path_ok(n, a)) {
        double mu = binom_double(n, a) * pow_int(q, apairs);
        double second = 0.0;
        for (int j = 0; j <= a; ++j)
            second += binom_double(n, a) * binom_double(a, j) * binom_double(n - a, a - j) *
                      pow_int(q, 2 * apairs - pairs_of(j));
        return second - mu * mu;
    }

    // log-space with an expm1 compensation for the near-cancelling j=0 term
    ScalePoint s = ScalePoint::from_count(static_cast<double>(n));
    double log_cna = log_binomial(s, static_cast<double>(a));
    double log_mu = log_cna + apairs * std::log(q);
    double sum = 0.0;
    for (int j = 1; j <= a; ++j) {
        double small = binom_double(a, j) * binom_double(n - a, a - j);
        if (small == 0.0) continue;
        double lt = log_cna + std::log(small) + (2 * apairs - pairs_of(j)) * std::log(q);
        sum += std::exp(lt);
    }
    // T_0 - mu^2 = mu^2 (C(n-a,a)/C(n,a) - 1)
    double lr = 0.0;
    for (int i = 0; i < a; ++i)
        lr += std::log(static_cast<double>(n - a - i) / static_cast<double>(n - i));
    return sum + std::exp(2.0 * log_mu) * std::expm1(lr);
}

double tv_upper_bound(int n, int a, double p) {
    double log_mu = log_mu_exact_scale(n, a, p);
    if (!(log_mu > -708.0)) throw std::domain_error("tv_upper_bound: mu underflows");
    double var = exact_xa_variance(n, a, p);
    if (var < 0) var = 0; // rounding guard at tiny scales
    return std::sqrt(var) / (2.0 * std::exp(log_mu));
}

double planted_mean_xa(int n, int a, double p) {
    double mu = std::exp(log_mu_exact_scale(n, a, p));
    return (exact_xa_variance(n, a, p) + mu * mu) / mu;
}

} // namespace chivar
