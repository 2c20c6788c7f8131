#include "ricci/emd.hpp"

#include "ricci/errors.hpp"
#include "ricci/min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace ricci {

emd_result emd_transport(const local_bipartite_t& b) {
    const std::int64_t nl = b.left_size();
    const std::int64_t nr = b.right_size();
    const std::int64_t scale = std::lcm(nl, nr);
    const std::int64_t supply = scale / nl;
    const std::int64_t demand = scale / nr;

    const int source = static_cast<int>(nl + nr);
    const int sink = source + 1;
    min_cost_flow mcf(static_cast<int>(nl + nr) + 2);
    for (int i = 0; i < nl; ++i) mcf.add_edge(source, i, supply, 0);
    for (int j = 0; j < nr; ++j) mcf.add_edge(static_cast<int>(nl) + j, sink, demand, 0);
    for (int i = 0; i < nl; ++i) {
        for (int j = 0; j < nr; ++j) {
            mcf.add_edge(i, static_cast<int>(nl) + j, scale, b.at(i, j));
        }
    }
    auto res = mcf.run(source, sink);
    if (res.flow != scale) fail(errc::internal, "transport flow did not saturate");

    emd_result out;
    out.method = emd_method::transport_flow;
    out.plan_weight = res.cost;
    out.scale = scale;
    out.value = rational(res.cost, scale);
    return out;
}

std::int64_t min_weight_perfect_matching(const mpmct_instance& h) {
    return assignment_min_cost(h.weight, h.n());
}

rational curvature_edge(const graph& g, int u, int v) {
    return rational(1) - emd_transport(local_bipartite(g, u, v)).value;
}

rational curvature_node(const graph& g, int v) {
    if (v < 0 || v >= g.node_count()) fail(errc::unknown_node, "node index out of range");
    if (g.degree(v) == 0) fail(errc::domain_error, "node '" + g.name(v) + "' is isolated");
    rational sum = 0;
    for (int u : g.neighbors(v)) sum += curvature_edge(g, u, v);
    return sum / g.degree(v);
}

rational curvature_avg(const graph& g) {
    if (g.edge_count() == 0) fail(errc::domain_error, "graph has no edges");
    rational sum = 0;
    for (const auto& [u, v] : g.edges()) sum += curvature_edge(g, u, v);
    return sum / g.edge_count();
}

namespace {

// Exhaustive unit-matching search. Left units are assigned in order; capacity
// vectors over right units are memoized since units of one node are
// interchangeable, which collapses the S! leaf orderings without changing the
// minimum.
struct unit_search {
    const local_bipartite_t& b;
    std::vector<int> left_units; // row index per left unit
    int bits_per_entry;
    std::unordered_map<std::uint64_t, std::int64_t> memo;

    std::uint64_t key(const std::vector<std::int64_t>& cap) const {
        std::uint64_t k = 0;
        for (std::int64_t c : cap) k = (k << bits_per_entry) | static_cast<std::uint64_t>(c);
        return k;
    }

    std::int64_t best(size_t pos, std::vector<std::int64_t>& cap) {
        if (pos == left_units.size()) return 0;
        auto k = key(cap); // pos is implied: S minus the remaining capacity
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        int row = left_units[pos];
        std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
        for (size_t j = 0; j < cap.size(); ++j) {
            if (cap[j] == 0) continue;
            --cap[j];
            std::int64_t c = b.at(row, static_cast<int>(j)) + best(pos + 1, cap);
            ++cap[j];
            best_cost = std::min(best_cost, c);
        }
        memo.emplace(k, best_cost);
        return best_cost;
    }
};

} // namespace

rational brute_force_emd(const local_bipartite_t& b) {
    const std::int64_t nl = b.left_size();
    const std::int64_t nr = b.right_size();
    const std::int64_t scale = std::lcm(nl, nr);
    if (scale > brute_force_unit_limit) {
        fail(errc::oracle_too_large,
             "unit expansion of size " + std::to_string(scale) + " exceeds the oracle limit");
    }
    const std::int64_t per_right = scale / nr;
    int bits = 1;
    while ((std::int64_t{1} << bits) <= per_right) ++bits;
    unit_search search{b, {}, bits, {}};
    for (std::int64_t i = 0; i < nl; ++i) {
        for (std::int64_t r = 0; r < scale / nl; ++r) search.left_units.push_back(static_cast<int>(i));
    }
    std::vector<std::int64_t> cap(static_cast<size_t>(nr), per_right);
    std::int64_t cost = search.best(0, cap);
    return rational(cost, scale);
}

} // namespace ricci
