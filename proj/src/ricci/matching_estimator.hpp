#pragma once

#include "ricci/oracle.hpp"
#include "ricci/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ricci {

struct matching_estimate {
    rational m_tilde;     // normalized matching size estimate, in [0, 1]
    rational delta;       // accuracy target the caller asked for
    long long queries_used = 0;
};

enum class estimator_backend {
    exact, // reveal everything, exact maximum matching
    local, // sampled rank-greedy matching with bounded augmentation
};

// Revealed adjacency per (node, weight class) over one session. A key is
// drained through weighted neighbor queries at most once and the selective
// degree answers are cached, so several estimates can share one session
// without re-querying exhausted keys.
class subgraph_cache {
  public:
    explicit subgraph_cache(bipartite_oracle& s) : session_(s) {}

    int class_degree(node_ref x, int w);
    const std::vector<int>& class_neighbors(node_ref x, int w);

    bipartite_oracle& session() { return session_; }

  private:
    bipartite_oracle& session_;
    std::map<std::tuple<side, int, int>, int> degrees_;
    std::map<std::tuple<side, int, int>, std::vector<int>> adjacency_;
};

// Estimates |maximum matching| / n of the subgraph induced by the given weight
// classes, using weighted neighbor and selective degree queries only. The
// estimate never exceeds the true value except with small probability, and
// undershoots by at most delta on success. d bounds the induced subgraph's
// degree; a violation discovered through selective degree queries is an error.
matching_estimate estimate_matching(subgraph_cache& cache, const std::vector<int>& weights,
                                    const rational& delta, int d,
                                    estimator_backend backend = estimator_backend::local,
                                    std::uint64_t seed = 0);

matching_estimate estimate_matching(bipartite_oracle& session, const std::vector<int>& weights,
                                    const rational& delta, int d,
                                    estimator_backend backend = estimator_backend::local,
                                    std::uint64_t seed = 0);

// Reference backend: drains every node's weighted neighbor queries and runs
// augmenting-path maximum matching on the revealed subgraph. Exact, delta = 0.
matching_estimate exact_backend(subgraph_cache& cache, const std::vector<int>& weights, int d);
matching_estimate exact_backend(bipartite_oracle& session, const std::vector<int>& weights, int d);

} // namespace ricci
