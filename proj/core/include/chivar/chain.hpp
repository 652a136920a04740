#ifndef CHIVAR_CHAIN_HPP
#define CHIVAR_CHAIN_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace chivar {

// One chain trial: sample G(n,p), plant r times, compare endpoints.
struct ChainResult {
    int chi_start = 0;
    int chi_end = 0;
    int r = 0;
    int a = 0;
    bool monotone_ok = false; // chi_end <= chi_start + r (holds by construction)
    bool valid = false;       // false when a chromatic solve timed out
    int direct_chi = 0;       // fresh G(n + a r, p) sample
};

struct ChainExperimentParams {
    int n = 45;
    int a = 7;
    int r = 2;
    double p = 0.5;
    int trials = 500;
    std::uint64_t seed = 1;
    double budget_seconds = 60.0; // per chromatic solve
    int max_threads = 0;          // 0 = auto
};

struct ChainExperiment {
    ChainExperimentParams params;
    std::vector<ChainResult> trials;    // indexed by trial, invalid ones included
    std::map<int, int> hist_chain_end;  // chi histogram over valid trials
    std::map<int, int> hist_direct;
    int valid_trials = 0;
    int invalid_trials = 0;
    bool invalid_threshold_exceeded = false; // > 1% invalid
    double monotone_fraction = 0.0;          // over valid trials
    double tv_estimate = 0.0;                // between the two chi histograms
    double tv_se = 0.0;                      // conservative null standard error
    double tv_budget = 0.0;                  // r / (2 sqrt(mu_a(n)))
    double log_mu_a = 0.0;                   // at the starting scale n
};

// Per-trial seeds derive from (seed, trial); aggregation is by index, so the
// result is byte-identical for any worker count.
ChainExperiment run_coupling_chain(const ChainExperimentParams& params);

} // namespace chivar

#endif
