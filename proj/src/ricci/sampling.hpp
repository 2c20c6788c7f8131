#pragma once

#include "ricci/oracle.hpp"
#include "ricci/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace ricci {

// Edge-curvature black box: returns a value in [C, C+r] for the edge {u,v}.
using edge_curvature_box = std::function<rational(int u, int v)>;

struct estimator_config {
    rational r;          // additive radius of the black box
    int k = 0;           // sample count; 0 derives it from r
    std::uint64_t seed = 0;

    // ceil((9/(2 r^2)) ln 6): two-sided Hoeffding deviation <= r with failure
    // probability <= 1/3 for averages of k summands spanning [-2, 1].
    static int samples_for(const rational& r);
    int effective_k() const { return k > 0 ? k : samples_for(r); }
};

// Mean of B over neighbor-query draws of edges at v. deg_v <= k enumerates the
// whole neighborhood (exact when B is exact); otherwise draws are taken with
// replacement by resetting exploration between them.
rational estimate_node_curvature(graph_session& s, int v, int deg_v, const estimator_config& cfg,
                                 const edge_curvature_box& box);

// One neighbor query per draw; the endpoint is picked degree-proportionally
// from the known degree table, which makes the edge uniform over E.
std::pair<int, int> sample_uniform_edge(graph_session& s, const std::vector<int>& degrees);

// Mean of B over uniformly sampled edges; enumerates all edges when k >= |E|.
rational estimate_avg_curvature(graph_session& s, const std::vector<int>& degrees,
                                const estimator_config& cfg, const edge_curvature_box& box);

} // namespace ricci
