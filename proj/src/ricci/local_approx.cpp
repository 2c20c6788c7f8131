#include "ricci/local_approx.hpp"

#include "ricci/errors.hpp"
#include "ricci/rng.hpp"

#include <algorithm>
#include <set>

namespace ricci {

namespace {

rational clamp_curvature(const rational& c) {
    if (c < rational(-2)) return rational(-2);
    if (c > rational(1)) return rational(1);
    return c;
}

approx_curvature finish(const rational& delta_est, int n, int denominator,
                        const rational& guarantee, const std::string& label,
                        const query_counters& counters) {
    approx_curvature out;
    out.estimate = clamp_curvature(rational(1) - delta_est * n / denominator);
    out.guarantee = guarantee;
    out.case_label = label;
    out.queries = counters;
    return out;
}

} // namespace

approx_curvature approx_equal_a(bipartite_oracle& h, int denominator, const rational& eps, int d,
                                estimator_backend backend, std::uint64_t seed) {
    if (!(eps > 0)) fail(errc::domain_error, "eps must be positive");
    const int n = h.left_size();
    if (n != h.right_size()) fail(errc::degree_mismatch, "instance sides differ");
    if (n == 0) return finish(rational(0), 0, denominator, rational(1) + eps, "empty", h.counters());
    subgraph_cache cache(h);
    const rational delta = eps / 2;
    auto m1 = estimate_matching(cache, {1}, delta, d, backend, mix64(seed + 1));
    rational delta_est = rational(3) - 2 * m1.m_tilde;
    return finish(delta_est, n, denominator, rational(1) + eps, "a", h.counters());
}

approx_curvature approx_equal_b(bipartite_oracle& h, int denominator, const rational& eps, int d,
                                estimator_backend backend, std::uint64_t seed) {
    if (!(eps > 0)) fail(errc::domain_error, "eps must be positive");
    const int n = h.left_size();
    if (n != h.right_size()) fail(errc::degree_mismatch, "instance sides differ");
    const rational radius = rational(1, 2) + eps;
    if (n == 0) return finish(rational(0), 0, denominator, radius, "empty", h.counters());

    subgraph_cache cache(h);
    const rational delta = eps / 5;
    auto m1 = estimate_matching(cache, {1}, delta, d, backend, mix64(seed + 1));
    auto m2 = estimate_matching(cache, {2}, delta, d, backend, mix64(seed + 2));
    auto m12 = estimate_matching(cache, {1, 2}, delta, 2 * d, backend, mix64(seed + 3));

    rational delta_est;
    std::string label;
    if (m1.m_tilde <= rational(1, 4)) {
        delta_est = rational(3) - m2.m_tilde;
        label = "case1";
    } else if (m2.m_tilde <= rational(1, 2) || m1.m_tilde >= rational(1, 2) ||
               m12.m_tilde <= rational(3, 4)) {
        delta_est = rational(3) - 2 * m1.m_tilde;
        label = "case2";
    } else if (m12.m_tilde <= 2 * m1.m_tilde + delta) {
        delta_est = rational(3) - 2 * m1.m_tilde;
        label = "case3.1";
    } else {
        delta_est = rational(3) - m12.m_tilde;
        label = "case3.2";
    }
    return finish(delta_est, n, denominator, radius, label, h.counters());
}

gadget_context make_gadget_context(const graph& g, const local_bipartite_t& b) {
    gadget_context ctx;
    ctx.deg_u = b.deg_u();
    ctx.deg_v = b.deg_v();
    auto s = overlap_stats(g, b.u, b.v);
    ctx.ell = s.ell;
    std::set<int> left_set(b.left.begin(), b.left.end());
    std::set<int> right_set(b.right.begin(), b.right.end());
    for (int i = 0; i < b.left_size(); ++i) {
        if (right_set.count(b.left[static_cast<size_t>(i)])) ctx.zero_rows.push_back(i);
    }
    for (int j = 0; j < b.right_size(); ++j) {
        if (left_set.count(b.right[static_cast<size_t>(j)])) ctx.zero_cols.push_back(j);
    }
    return ctx;
}

bipartite_session make_gadget_session(const graph& g, int u, int v, std::uint64_t seed) {
    return bipartite_session(bipartite_instance::from_gadget(g, local_bipartite(g, u, v)), seed);
}

approx_curvature approx_unequal(bipartite_oracle& gadget, const gadget_context& ctx,
                                const rational& eps, const rational& delta, int d,
                                equal_mode inner, estimator_backend backend, std::uint64_t seed) {
    if (!(delta > 0)) fail(errc::domain_error, "delta must be positive");
    const int nl = ctx.deg_u + 1;
    const int nr = ctx.deg_v + 1;
    const int a = nr / nl;
    const int b = nr - a * nl;
    const bool divisible = b == 0;
    const bool near_equal = rational(ctx.deg_u) >= (rational(1) - delta / 3) * ctx.deg_v;
    if (!divisible && !near_equal) {
        fail(errc::unsupported_regime,
             "padding needs deg(v)+1 divisible by deg(u)+1 or deg(u) >= (1-delta/3)*deg(v)");
    }

    padded_session padded(gadget, a, b, mix64(seed ^ 0x7f4a7c15ULL));
    std::vector<int> strip_rows;
    for (int i : ctx.zero_rows) strip_rows.push_back(i * a); // first copy of each duplicate
    strip_view residual(padded, strip_rows, ctx.zero_cols);

    approx_curvature out;
    if (inner == equal_mode::a) {
        out = approx_equal_a(residual, nr, eps, a * d, backend, seed);
        out.guarantee = rational(1) + eps + delta;
    } else {
        out = approx_equal_b(residual, nr, eps, a * d, backend, seed);
        out.guarantee = rational(1, 2) + eps + delta;
    }
    out.queries = gadget.counters();
    return out;
}

approx_curvature approx_edge_on_graph(const graph& g, int u, int v, const std::string& mode,
                                      const rational& eps, const rational& delta, int d,
                                      estimator_backend backend, std::uint64_t seed) {
    auto b = local_bipartite(g, u, v);
    auto ctx = make_gadget_context(g, b);
    bipartite_session gadget(bipartite_instance::from_gadget(g, b), seed);

    if (mode == "equal-a" || mode == "equal-b") {
        if (ctx.deg_u != ctx.deg_v) {
            fail(errc::degree_mismatch, "mode " + mode + " needs equal endpoint degrees");
        }
        // Identity padding keeps the code path shared with the unequal case.
        padded_session padded(gadget, 1, 0, mix64(seed ^ 0x7f4a7c15ULL));
        strip_view residual(padded, ctx.zero_rows, ctx.zero_cols);
        auto out = mode == "equal-a"
                       ? approx_equal_a(residual, ctx.deg_v + 1, eps, d, backend, seed)
                       : approx_equal_b(residual, ctx.deg_v + 1, eps, d, backend, seed);
        out.queries = gadget.counters();
        return out;
    }
    if (mode == "unequal") {
        return approx_unequal(gadget, ctx, eps, delta, d, equal_mode::b, backend, seed);
    }
    fail(errc::domain_error, "unknown approximation mode '" + mode + "'");
}

} // namespace ricci
