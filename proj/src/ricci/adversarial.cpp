#include "ricci/adversarial.hpp"

#include "ricci/errors.hpp"
#include "ricci/rng.hpp"

#include <algorithm>
#include <numeric>

namespace ricci {

namespace {

mpmct_instance blank_instance(int n, std::uint8_t fill) {
    if (n < 1) fail(errc::domain_error, "instance size must be >= 1");
    mpmct_instance h;
    for (int i = 1; i <= n; ++i) h.left.push_back("u" + std::to_string(i));
    for (int j = 1; j <= n; ++j) h.right.push_back("v" + std::to_string(j));
    h.weight.assign(static_cast<size_t>(n) * static_cast<size_t>(n), fill);
    return h;
}

} // namespace

mpmct_instance gen_single_light(int n, int i, int j) {
    auto h = blank_instance(n, 3);
    if (i < 1 || i > n || j < 1 || j > n) fail(errc::domain_error, "light-edge index out of range");
    h.at(i - 1, j - 1) = 1;
    return h;
}

mpmct_instance gen_all_heavy(int n) { return blank_instance(n, 3); }

mpmct_instance gen_permutation(int n, const std::vector<int>& pi) {
    auto h = blank_instance(n, 3);
    if (static_cast<int>(pi.size()) != n) fail(errc::domain_error, "permutation length mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int target = pi[static_cast<size_t>(i)];
        if (target < 1 || target > n || seen[static_cast<size_t>(target - 1)]) {
            fail(errc::domain_error, "not a permutation of 1..n");
        }
        seen[static_cast<size_t>(target - 1)] = 1;
        h.at(i, target - 1) = 1;
    }
    return h;
}

family_mix parse_family(const std::string& name) {
    if (name == "single-light") return family_mix::single_light;
    if (name == "permutation") return family_mix::permutation;
    if (name == "all-heavy") return family_mix::all_heavy;
    fail(errc::domain_error, "unknown family '" + name + "'");
}

scan_strategy parse_strategy(const std::string& name) {
    if (name == "pair-scan") return scan_strategy::pair_scan;
    if (name == "weighted-neighbor-scan") return scan_strategy::weighted_neighbor_scan;
    fail(errc::domain_error, "unknown strategy '" + name + "'");
}

namespace {

// Row-major pair scan: answer G1 as soon as a non-3 weight shows up.
bool pair_scan_says_g1(bipartite_oracle& s, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (s.pair_query(i, j) != 3) return true;
        }
    }
    return false;
}

// Weight-1 neighbor probe per left node: a single (x,1) query either reveals a
// light edge or comes back exhausted.
bool wneigh_scan_says_g1(bipartite_oracle& s, int n) {
    for (int i = 0; i < n; ++i) {
        if (s.weighted_neighbor_query({side::left, i}, 1).has_value()) return true;
    }
    return false;
}

} // namespace

std::string experiment_report::to_csv() const {
    std::string out = "trial,family,correct,pair_q,wneigh_q,seldeg_q\n";
    for (const auto& t : trials) {
        out += std::to_string(t.trial) + "," + t.family + "," + (t.correct ? "1" : "0") + "," +
               std::to_string(t.pair_q) + "," + std::to_string(t.wneigh_q) + "," +
               std::to_string(t.seldeg_q) + "\n";
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# mean_pair=%.3f mean_wneigh=%.3f p50=%lld p90=%lld\n",
                  mean_pair, mean_wneigh, p50_queries, p90_queries);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "# thresholds: pair n^2/6=%.3f, wneigh n/6=%.3f, wneigh (n-1)/2=%.3f (sources disagree on the latter two)\n",
                  threshold_pair, threshold_wneigh, threshold_wneigh_alt);
    out += buf;
    return out;
}

experiment_report run_experiment(scan_strategy strategy, family_mix mix, int n, int trials,
                                 std::uint64_t seed) {
    if (n < 1 || trials < 1) fail(errc::domain_error, "need n >= 1 and trials >= 1");
    experiment_report report;
    report.threshold_pair = static_cast<double>(n) * n / 6.0;
    report.threshold_wneigh = n / 6.0;
    report.threshold_wneigh_alt = (n - 1) / 2.0;

    rng master(seed);
    std::vector<long long> relevant;
    double pair_sum = 0;
    double wneigh_sum = 0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = master.fork_seed();
        rng pick(mix64(trial_seed));
        bool is_g1 = mix != family_mix::all_heavy && pick.below(2) == 0;
        mpmct_instance inst;
        if (!is_g1) {
            inst = gen_all_heavy(n);
        } else if (mix == family_mix::single_light) {
            int i = static_cast<int>(pick.below(static_cast<std::uint64_t>(n)));
            int j = static_cast<int>(pick.below(static_cast<std::uint64_t>(n)));
            inst = gen_single_light(n, i + 1, j + 1);
        } else {
            std::vector<int> pi(static_cast<size_t>(n));
            std::iota(pi.begin(), pi.end(), 1);
            for (int i = n - 1; i > 0; --i) {
                int j = static_cast<int>(pick.below(static_cast<std::uint64_t>(i + 1)));
                std::swap(pi[static_cast<size_t>(i)], pi[static_cast<size_t>(j)]);
            }
            inst = gen_permutation(n, pi);
        }

        bipartite_session session(bipartite_instance::from_mpmct(inst), mix64(trial_seed ^ 0xabcdULL));
        bool says_g1 = strategy == scan_strategy::pair_scan ? pair_scan_says_g1(session, n)
                                                            : wneigh_scan_says_g1(session, n);
        const auto& c = session.counters();
        experiment_trial row;
        row.trial = t;
        row.family = is_g1 ? "G1" : "G2";
        row.correct = says_g1 == is_g1;
        row.pair_q = c.pair;
        row.wneigh_q = c.weighted_neighbor;
        row.seldeg_q = c.selective_degree;
        report.trials.push_back(row);

        pair_sum += static_cast<double>(c.pair);
        wneigh_sum += static_cast<double>(c.weighted_neighbor);
        relevant.push_back(strategy == scan_strategy::pair_scan ? c.pair : c.weighted_neighbor);
    }
    report.mean_pair = pair_sum / trials;
    report.mean_wneigh = wneigh_sum / trials;
    std::sort(relevant.begin(), relevant.end());
    report.p50_queries = relevant[static_cast<size_t>((trials - 1) / 2)];
    report.p90_queries = relevant[static_cast<size_t>((trials - 1) * 9 / 10)];
    return report;
}

} // namespace ricci
