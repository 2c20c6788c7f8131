#pragma once

#include "ricci/graph.hpp"
#include "ricci/matching_estimator.hpp"
#include "ricci/oracle.hpp"
#include "ricci/padded_oracle.hpp"
#include "ricci/rational.hpp"

#include <memory>
#include <string>

namespace ricci {

// Constant-query curvature estimate. Estimates are lower-biased: on estimator
// success the reported value never exceeds the true curvature.
struct approx_curvature {
    rational estimate;  // clamped to [-2, 1]
    rational guarantee; // additive radius below the true value
    bool lower_biased = true;
    std::string case_label;  // which branch of the case ladder fired
    query_counters queries;  // underlying real-session counters at completion
};

// Weight-1 estimate only: output Delta = 3 - 2*m1~, additive (1+eps) radius.
// denominator is 1 + deg(v) of the original edge; the session ranges over the
// ternary residual instance. Requires weight-1 degree <= d.
approx_curvature approx_equal_a(bipartite_oracle& h, int denominator, const rational& eps, int d,
                                estimator_backend backend = estimator_backend::local,
                                std::uint64_t seed = 0);

// Case ladder over m1~, m2~, m12~ with delta = eps/5; additive (1/2+eps).
// Requires weight-1 and weight-2 degrees <= d.
approx_curvature approx_equal_b(bipartite_oracle& h, int denominator, const rational& eps, int d,
                                estimator_backend backend = estimator_backend::local,
                                std::uint64_t seed = 0);

enum class equal_mode { a, b };

// What the equal-degree algorithms get for free about an edge's gadget: which
// rows/columns are shared between the two sides (the zero-weight duplicates).
struct gadget_context {
    int deg_u = 0;
    int deg_v = 0;
    int ell = 0;
    std::vector<int> zero_rows; // gadget-left rows whose node also sits on the right
    std::vector<int> zero_cols; // gadget-right cols whose node also sits on the left
};

gadget_context make_gadget_context(const graph& g, const local_bipartite_t& b);

// Session whose hidden instance is the full edge gadget of {u,v}.
bipartite_session make_gadget_session(const graph& g, int u, int v, std::uint64_t seed);

// Localized reduction composition: pads the gadget session to square shape,
// pairs off the zero-weight duplicates, and runs the equal-degree algorithm on
// the residual. Preconditions: deg(v)+1 divisible by deg(u)+1, or
// deg(u) >= (1 - delta/3) * deg(v).
approx_curvature approx_unequal(bipartite_oracle& gadget, const gadget_context& ctx,
                                const rational& eps, const rational& delta, int d,
                                equal_mode inner = equal_mode::b,
                                estimator_backend backend = estimator_backend::local,
                                std::uint64_t seed = 0);

// Convenience driver for a graph edge: builds the gadget session and context,
// dispatches on the mode, and reports the gadget-session counters.
approx_curvature approx_edge_on_graph(const graph& g, int u, int v, const std::string& mode,
                                      const rational& eps, const rational& delta, int d,
                                      estimator_backend backend = estimator_backend::local,
                                      std::uint64_t seed = 0);

} // namespace ricci
