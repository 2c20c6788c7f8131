#pragma once

#include "ricci/graph.hpp"
#include "ricci/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ricci {

// Lower-bound instance families: one light edge among all-3 weights, the all-3
// instance, and a weight-1 perfect matching given by a permutation.
mpmct_instance gen_single_light(int n, int i, int j); // 1-based indices
mpmct_instance gen_all_heavy(int n);
mpmct_instance gen_permutation(int n, const std::vector<int>& pi); // pi: 1-based values

enum class family_mix { single_light, permutation, all_heavy };
enum class scan_strategy { pair_scan, weighted_neighbor_scan };

family_mix parse_family(const std::string& name);
scan_strategy parse_strategy(const std::string& name);

struct experiment_trial {
    int trial = 0;
    std::string family; // "G1" or "G2"
    bool correct = false;
    long long pair_q = 0;
    long long wneigh_q = 0;
    long long seldeg_q = 0;
};

struct experiment_report {
    std::vector<experiment_trial> trials;
    double mean_pair = 0;
    double mean_wneigh = 0;
    long long p50_queries = 0; // strategy-relevant query type
    long long p90_queries = 0;
    // Thresholds quoted by the analysis; both the n/6 form and the
    // (deg(v)-1)/2 = (n-1)/2 form are reported since the sources disagree.
    double threshold_pair = 0;    // n^2/6
    double threshold_wneigh = 0;  // n/6
    double threshold_wneigh_alt = 0; // (n-1)/2

    std::string to_csv() const;
};

// Draws hidden instances from the mix (fair coin between the classes, uniform
// member within a class), runs the scan strategy against an instrumented
// session, and records per-trial counters and correctness.
experiment_report run_experiment(scan_strategy strategy, family_mix mix, int n, int trials,
                                 std::uint64_t seed);

} // namespace ricci
