#include "ricci/sampling.hpp"

#include "ricci/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ricci {

namespace {

rational clamp_curvature(const rational& c) {
    if (c < rational(-2)) return rational(-2);
    if (c > rational(1)) return rational(1);
    return c;
}

} // namespace

int estimator_config::samples_for(const rational& r) {
    if (!(r > 0)) fail(errc::domain_error, "radius must be positive");
    double rr = to_double(r);
    return static_cast<int>(std::ceil(9.0 / (2.0 * rr * rr) * std::log(6.0)));
}

rational estimate_node_curvature(graph_session& s, int v, int deg_v, const estimator_config& cfg,
                                 const edge_curvature_box& box) {
    if (deg_v < 1) fail(errc::domain_error, "node has no incident edges");
    const int k = cfg.effective_k();
    rational sum = 0;
    if (k >= deg_v) {
        // Full enumeration: deg_v distinct neighbors, then the exact mean.
        s.reset_exploration(v);
        for (int i = 0; i < deg_v; ++i) {
            auto u = s.neighbor_query(v);
            if (!u) fail(errc::internal, "neighbor pool exhausted early");
            sum += box(*u, v);
        }
        return clamp_curvature(sum / deg_v);
    }
    for (int i = 0; i < k; ++i) {
        s.reset_exploration(v); // with-replacement draws: independence for Hoeffding
        auto u = s.neighbor_query(v);
        if (!u) fail(errc::internal, "neighbor pool exhausted early");
        sum += box(*u, v);
    }
    return clamp_curvature(sum / k);
}

std::pair<int, int> sample_uniform_edge(graph_session& s, const std::vector<int>& degrees) {
    long long total = 0;
    for (int d : degrees) total += d;
    if (total == 0) fail(errc::domain_error, "graph has no edges");
    std::uint64_t pick = s.random().below(static_cast<std::uint64_t>(total));
    int x = 0;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (pick < static_cast<std::uint64_t>(degrees[i])) {
            x = static_cast<int>(i);
            break;
        }
        pick -= static_cast<std::uint64_t>(degrees[i]);
    }
    s.reset_exploration(x);
    auto y = s.neighbor_query(x);
    if (!y) fail(errc::internal, "degree table disagrees with the hidden graph");
    return {std::min(x, *y), std::max(x, *y)};
}

rational estimate_avg_curvature(graph_session& s, const std::vector<int>& degrees,
                                const estimator_config& cfg, const edge_curvature_box& box) {
    long long total = 0;
    for (int d : degrees) total += d;
    const long long edge_count = total / 2;
    if (edge_count == 0) fail(errc::domain_error, "graph has no edges");
    const int k = cfg.effective_k();
    rational sum = 0;
    if (k >= edge_count) {
        // Reveal every edge by draining each node once; exact mean over E.
        std::set<std::pair<int, int>> edges;
        for (size_t v = 0; v < degrees.size(); ++v) {
            s.reset_exploration(static_cast<int>(v));
            for (int i = 0; i < degrees[v]; ++i) {
                auto u = s.neighbor_query(static_cast<int>(v));
                if (!u) fail(errc::internal, "degree table disagrees with the hidden graph");
                edges.emplace(std::min(static_cast<int>(v), *u), std::max(static_cast<int>(v), *u));
            }
        }
        for (const auto& [a, b] : edges) sum += box(a, b);
        return clamp_curvature(sum / static_cast<std::int64_t>(edges.size()));
    }
    for (int i = 0; i < k; ++i) {
        auto [a, b] = sample_uniform_edge(s, degrees);
        sum += box(a, b);
    }
    return clamp_curvature(sum / k);
}

} // namespace ricci
