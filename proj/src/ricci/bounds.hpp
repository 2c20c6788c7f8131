#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

struct curvature_bounds_t {
    rational tvd;   // total variation distance of the extended distributions
    rational lower; // -2 + (3*ell + 6)/(deg(v)+1)
    rational upper; // (ell + 2)/(deg(v)+1)
};

// Closed-form TVD between the extended neighborhood distributions:
// 1 - (ell + 2)/(deg(v)+1), with deg(u) <= deg(v).
rational tvd_closed_form(const graph& g, int u, int v);

// Closed-form curvature sandwich from the TVD/EMD relationship; costs O(deg)
// and needs no BFS, so it doubles as a pre-filter.
curvature_bounds_t curvature_bounds(const graph& g, int u, int v);

} // namespace ricci
