#include "ricci/bounds.hpp"

#include <algorithm>

namespace ricci {

rational tvd_closed_form(const graph& g, int u, int v) {
    auto s = overlap_stats(g, u, v); // validates the edge
    int deg_hi = std::max(g.degree(u), g.degree(v));
    return rational(1) - rational(s.ell + 2, deg_hi + 1);
}

curvature_bounds_t curvature_bounds(const graph& g, int u, int v) {
    auto s = overlap_stats(g, u, v);
    int deg_hi = std::max(g.degree(u), g.degree(v));
    curvature_bounds_t out;
    out.tvd = rational(1) - rational(s.ell + 2, deg_hi + 1);
    out.lower = rational(-2) + rational(3 * s.ell + 6, deg_hi + 1);
    out.upper = rational(s.ell + 2, deg_hi + 1);
    return out;
}

} // namespace ricci
