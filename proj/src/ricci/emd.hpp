#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <cstdint>

namespace ricci {

enum class emd_method { transport_flow, matching };

struct emd_result {
    rational value;            // plan_weight / scale, in [0, 3]
    emd_method method = emd_method::transport_flow;
    std::int64_t plan_weight = 0; // integral cost of the scaled flow
    std::int64_t scale = 1;       // lcm(1+deg u, 1+deg v)
};

// Exact optimum of the transportation LP over the gadget. Masses are scaled by
// S = lcm(|left|, |right|) to integer supplies, solved as integral min-cost flow
// (exact by total unimodularity), and divided back out.
emd_result emd_transport(const local_bipartite_t& b);

// Total weight of a minimum-weight perfect matching; n ≤ result ≤ 3n for n ≥ 1.
std::int64_t min_weight_perfect_matching(const mpmct_instance& h);

// Ollivier-Ricci curvature of the edge {u,v}: 1 − EMD of the gadget.
rational curvature_edge(const graph& g, int u, int v);

// Mean curvature of the edges incident on v.
rational curvature_node(const graph& g, int v);

// Mean curvature over all edges.
rational curvature_avg(const graph& g);

// Independent oracle: expand each side into S/|side| unit nodes and walk every
// unit assignment (identical units collapsed, memoized on remaining capacities).
// Rejects instances with S > 20.
rational brute_force_emd(const local_bipartite_t& b);

inline constexpr std::int64_t brute_force_unit_limit = 20;

} // namespace ricci
