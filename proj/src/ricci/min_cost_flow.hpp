#pragma once

#include <cstdint>
#include <vector>

namespace ricci {

// Integral min-cost max-flow via successive shortest paths with node potentials.
// Bellman-Ford seeds the potentials, Dijkstra handles subsequent iterations;
// ties break on node index so runs are deterministic.
class min_cost_flow {
  public:
    explicit min_cost_flow(int node_count);

    void add_edge(int from, int to, std::int64_t capacity, std::int64_t cost);

    struct result {
        std::int64_t flow = 0;
        std::int64_t cost = 0;
    };

    // Pushes up to max_flow units from source to sink (all available if negative).
    result run(int source, int sink, std::int64_t max_flow = -1);

  private:
    struct arc {
        int to;
        std::int64_t cap;
        std::int64_t cost;
    };
    std::vector<arc> arcs_; // paired: arcs_[i^1] is the reverse of arcs_[i]
    std::vector<std::vector<int>> out_;
    int n_;
};

// Minimum total weight of a perfect matching on a complete bipartite instance
// given as a row-major n x n cost matrix. n = 0 yields 0.
std::int64_t assignment_min_cost(const std::vector<std::uint8_t>& weight, int n);

} // namespace ricci
