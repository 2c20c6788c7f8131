#include "ricci/matching_estimator.hpp"

#include "ricci/errors.hpp"
#include "ricci/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>

namespace ricci {

int subgraph_cache::class_degree(node_ref x, int w) {
    auto key = std::make_tuple(x.s, x.idx, w);
    auto it = degrees_.find(key);
    if (it != degrees_.end()) return it->second;
    int value = session_.selective_degree_query(x, w);
    degrees_.emplace(key, value);
    return value;
}

const std::vector<int>& subgraph_cache::class_neighbors(node_ref x, int w) {
    auto key = std::make_tuple(x.s, x.idx, w);
    auto it = adjacency_.find(key);
    if (it != adjacency_.end()) return it->second;
    int expect = class_degree(x, w);
    std::vector<int> nbrs;
    nbrs.reserve(static_cast<size_t>(expect));
    for (int c = 0; c < expect; ++c) {
        auto ans = session_.weighted_neighbor_query(x, w);
        if (!ans) fail(errc::internal, "oracle exhausted before its selective degree");
        nbrs.push_back(ans->idx);
    }
    std::sort(nbrs.begin(), nbrs.end());
    return adjacency_.emplace(key, std::move(nbrs)).first->second;
}

namespace {

// One estimate's view of the cache: a fixed weight-class set and degree bound.
class class_view {
  public:
    class_view(subgraph_cache& cache, std::vector<int> weights, int d)
        : cache_(cache), weights_(std::move(weights)), d_(d) {}

    int degree(node_ref x) {
        int total = 0;
        for (int w : weights_) total += cache_.class_degree(x, w);
        if (total > d_) {
            fail(errc::precondition_violation, "induced degree " + std::to_string(total) +
                                                   " exceeds the bound " + std::to_string(d_));
        }
        return total;
    }

    std::vector<int> neighbors(node_ref x) {
        degree(x); // bound check before draining
        std::vector<int> out;
        for (int w : weights_) {
            const auto& part = cache_.class_neighbors(x, w);
            out.insert(out.end(), part.begin(), part.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    subgraph_cache& cache_;
    std::vector<int> weights_;
    int d_;
};

long long query_total(const bipartite_oracle& s) {
    const auto& c = s.counters();
    return c.pair + c.weighted_neighbor + c.selective_degree;
}

// Kuhn's augmenting-path maximum matching on an explicit bipartite adjacency.
int max_matching(const std::vector<std::vector<int>>& adj, int n_right) {
    std::vector<int> match_right(static_cast<size_t>(n_right), -1);
    std::vector<char> used;
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int v : adj[static_cast<size_t>(u)]) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            if (match_right[static_cast<size_t>(v)] < 0 ||
                try_augment(match_right[static_cast<size_t>(v)])) {
                match_right[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        used.assign(static_cast<size_t>(n_right), 0);
        if (try_augment(u)) ++size;
    }
    return size;
}

// Hopcroft-Karp phases stopped once the shortest augmenting path would exceed
// max_len edges; for max_len = 2k+1 the stopped matching is within |M*|/(k+2)
// of a maximum one.
int bounded_matching(const std::vector<std::vector<int>>& adj, int n_right, int max_len) {
    const int nl = static_cast<int>(adj.size());
    std::vector<int> match_left(static_cast<size_t>(nl), -1);
    std::vector<int> match_right(static_cast<size_t>(n_right), -1);
    int size = 0;
    for (;;) {
        std::vector<int> layer(static_cast<size_t>(nl), -1);
        std::vector<int> frontier;
        for (int u = 0; u < nl; ++u) {
            if (match_left[static_cast<size_t>(u)] < 0) {
                layer[static_cast<size_t>(u)] = 0;
                frontier.push_back(u);
            }
        }
        int found_depth = -1;
        int depth = 0;
        while (!frontier.empty() && found_depth < 0) {
            std::vector<int> next;
            for (int u : frontier) {
                for (int v : adj[static_cast<size_t>(u)]) {
                    int w = match_right[static_cast<size_t>(v)];
                    if (w < 0) {
                        found_depth = 2 * depth + 1;
                        break;
                    }
                    if (layer[static_cast<size_t>(w)] < 0) {
                        layer[static_cast<size_t>(w)] = depth + 1;
                        next.push_back(w);
                    }
                }
                if (found_depth >= 0) break;
            }
            frontier = std::move(next);
            ++depth;
        }
        if (found_depth < 0 || found_depth > max_len) break;

        std::vector<char> used_right(static_cast<size_t>(n_right), 0);
        std::function<bool(int)> dfs = [&](int u) -> bool {
            for (int v : adj[static_cast<size_t>(u)]) {
                if (used_right[static_cast<size_t>(v)]) continue;
                int w = match_right[static_cast<size_t>(v)];
                if (w < 0 || (layer[static_cast<size_t>(w)] == layer[static_cast<size_t>(u)] + 1 && dfs(w))) {
                    used_right[static_cast<size_t>(v)] = 1;
                    match_right[static_cast<size_t>(v)] = u;
                    match_left[static_cast<size_t>(u)] = v;
                    return true;
                }
            }
            return false;
        };
        int gained = 0;
        for (int u = 0; u < nl; ++u) {
            if (match_left[static_cast<size_t>(u)] < 0) gained += dfs(u) ? 1 : 0;
        }
        if (gained == 0) break;
        size += gained;
    }
    return size;
}

// Consistent local simulation of a rank-greedy maximal matching followed by one
// greedy layer of vertex-disjoint length-3 augmenting paths. Ranks are stable
// hashes, so answers agree across probes regardless of exploration order.
class rank_greedy_oracle {
  public:
    rank_greedy_oracle(class_view& view, std::uint64_t seed) : view_(view), seed_(seed) {}

    bool matched(node_ref x) {
        if (greedy_partner(x) >= 0) return true;
        return endpoint_of_accepted_path(x);
    }

  private:
    using edge_key = std::pair<int, int>; // (left idx, right idx)
    // Augmenting path (a, b, c, d): a exposed left, {b,c} a greedy edge, d exposed right.
    using path_key = std::array<int, 4>;

    edge_key to_edge(node_ref x, int other) const {
        return x.s == side::left ? edge_key{x.idx, other} : edge_key{other, x.idx};
    }

    std::uint64_t edge_rank(edge_key e) const {
        return mix64(seed_ ^ mix64((static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.first)) << 32) |
                                   static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.second))));
    }

    std::uint64_t path_rank(const path_key& p) const {
        std::uint64_t h = seed_ ^ 0x5bf03635cb1e2f51ULL;
        for (int v : p) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
        return h;
    }

    bool in_greedy(edge_key e) {
        auto it = greedy_memo_.find(e);
        if (it != greedy_memo_.end()) return it->second;
        const std::uint64_t mine = edge_rank(e);
        std::vector<std::pair<std::uint64_t, edge_key>> lower;
        for (int v : view_.neighbors({side::left, e.first})) {
            edge_key other{e.first, v};
            if (other != e && edge_rank(other) < mine) lower.emplace_back(edge_rank(other), other);
        }
        for (int u : view_.neighbors({side::right, e.second})) {
            edge_key other{u, e.second};
            if (other != e && edge_rank(other) < mine) lower.emplace_back(edge_rank(other), other);
        }
        std::sort(lower.begin(), lower.end());
        bool result = true;
        for (const auto& [r, other] : lower) {
            if (in_greedy(other)) {
                result = false;
                break;
            }
        }
        greedy_memo_.emplace(e, result);
        return result;
    }

    int greedy_partner(node_ref x) {
        auto key = std::make_pair(x.s, x.idx);
        auto it = partner_memo_.find(key);
        if (it != partner_memo_.end()) return it->second;
        int partner = -1;
        for (int v : view_.neighbors(x)) {
            if (in_greedy(to_edge(x, v))) {
                partner = v;
                break;
            }
        }
        partner_memo_.emplace(key, partner);
        return partner;
    }

    std::vector<path_key> paths_through(node_ref x) {
        std::vector<path_key> out;
        auto exposed_left = [&](int a) { return greedy_partner({side::left, a}) < 0; };
        auto exposed_right = [&](int d) { return greedy_partner({side::right, d}) < 0; };
        if (x.s == side::left) {
            int pa = greedy_partner(x);
            if (pa < 0) {
                // x plays a.
                for (int b : view_.neighbors(x)) {
                    int c = greedy_partner({side::right, b});
                    if (c < 0 || c == x.idx) continue;
                    for (int d : view_.neighbors({side::left, c})) {
                        if (d != b && exposed_right(d)) out.push_back({x.idx, b, c, d});
                    }
                }
            } else {
                // x plays c: (a, partner(x), x, d).
                int b = pa;
                for (int a : view_.neighbors({side::right, b})) {
                    if (a == x.idx || !exposed_left(a)) continue;
                    for (int d : view_.neighbors(x)) {
                        if (d != b && exposed_right(d)) out.push_back({a, b, x.idx, d});
                    }
                }
            }
        } else {
            int pb = greedy_partner(x);
            if (pb < 0) {
                // x plays d.
                for (int c : view_.neighbors(x)) {
                    int b = greedy_partner({side::left, c});
                    if (b < 0 || b == x.idx) continue;
                    for (int a : view_.neighbors({side::right, b})) {
                        if (a != c && exposed_left(a)) out.push_back({a, b, c, x.idx});
                    }
                }
            } else {
                // x plays b: (a, x, partner(x), d).
                int c = pb;
                for (int a : view_.neighbors(x)) {
                    if (a == c || !exposed_left(a)) continue;
                    for (int d : view_.neighbors({side::left, c})) {
                        if (d != x.idx && exposed_right(d)) out.push_back({a, x.idx, c, d});
                    }
                }
            }
        }
        return out;
    }

    bool accepted(const path_key& p) {
        auto it = path_memo_.find(p);
        if (it != path_memo_.end()) return it->second;
        const std::uint64_t mine = path_rank(p);
        std::vector<std::pair<std::uint64_t, path_key>> lower;
        const node_ref vertices[4] = {{side::left, p[0]}, {side::right, p[1]}, {side::left, p[2]},
                                      {side::right, p[3]}};
        for (const auto& v : vertices) {
            for (const auto& q : paths_through(v)) {
                if (q != p && path_rank(q) < mine) lower.emplace_back(path_rank(q), q);
            }
        }
        std::sort(lower.begin(), lower.end());
        lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
        bool result = true;
        for (const auto& [r, q] : lower) {
            if (accepted(q)) {
                result = false;
                break;
            }
        }
        path_memo_.emplace(p, result);
        return result;
    }

    bool endpoint_of_accepted_path(node_ref x) {
        for (const auto& p : paths_through(x)) {
            if (accepted(p)) return true; // x exposed, so it is an endpoint of every path found
        }
        return false;
    }

    class_view& view_;
    std::uint64_t seed_;
    std::map<edge_key, bool> greedy_memo_;
    std::map<std::pair<side, int>, int> partner_memo_;
    std::map<path_key, bool> path_memo_;
};

} // namespace

matching_estimate exact_backend(subgraph_cache& cache, const std::vector<int>& weights, int d) {
    bipartite_oracle& s = cache.session();
    class_view view(cache, weights, d);
    const long long before = query_total(s);
    const int nl = s.left_size();
    const int nr = s.right_size();
    std::vector<std::vector<int>> adj(static_cast<size_t>(nl));
    for (int u = 0; u < nl; ++u) adj[static_cast<size_t>(u)] = view.neighbors({side::left, u});
    for (int v = 0; v < nr; ++v) view.degree({side::right, v});

    matching_estimate out;
    out.m_tilde = nl == 0 ? rational(0) : rational(max_matching(adj, nr), nl);
    out.delta = 0;
    out.queries_used = query_total(s) - before;
    return out;
}

matching_estimate exact_backend(bipartite_oracle& session, const std::vector<int>& weights, int d) {
    subgraph_cache cache(session);
    return exact_backend(cache, weights, d);
}

matching_estimate estimate_matching(subgraph_cache& cache, const std::vector<int>& weights,
                                    const rational& delta, int d, estimator_backend backend,
                                    std::uint64_t seed) {
    if (backend == estimator_backend::exact) {
        auto out = exact_backend(cache, weights, d);
        out.delta = delta;
        return out;
    }
    if (!(delta > 0)) fail(errc::domain_error, "local backend needs delta > 0");

    bipartite_oracle& s = cache.session();
    class_view view(cache, weights, d);
    const long long before = query_total(s);
    const int n = s.left_size();
    matching_estimate out;
    out.delta = delta;
    if (n == 0) {
        out.m_tilde = 0;
        return out;
    }

    const double ddelta = to_double(delta);
    const double sizing = std::max(2.0, static_cast<double>(d) * d / 2.0);
    const long long want = static_cast<long long>(std::ceil(sizing / (ddelta * ddelta))) + 4;

    if (want >= n) {
        // Census regime: reveal the subgraph and stop augmenting once paths
        // would exceed 2*ceil(1/delta)+1 edges. The deficit stays below
        // delta*n and the count never exceeds the maximum, so no shift is
        // applied.
        std::vector<std::vector<int>> adj(static_cast<size_t>(n));
        for (int u = 0; u < n; ++u) adj[static_cast<size_t>(u)] = view.neighbors({side::left, u});
        int max_len = 2 * static_cast<int>(std::ceil(1.0 / ddelta)) + 1;
        int matched = bounded_matching(adj, s.right_size(), max_len);
        out.m_tilde = rational(matched, n);
        out.queries_used = query_total(s) - before;
        return out;
    }

    // Subsample regime: sampled start vertices against a consistent
    // rank-greedy matching; the raw two-sided estimate is shifted down by
    // delta/2 to keep the one-sided contract.
    rng sampler(mix64(seed ^ 0x0a02bdbf7bb3c0a7ULL));
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    for (long long i = 0; i < want; ++i) {
        long long j = i + static_cast<long long>(sampler.below(static_cast<std::uint64_t>(n - i)));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }
    rank_greedy_oracle oracle(view, mix64(seed ^ 0x94d049bb133111ebULL));
    long long hit = 0;
    for (long long i = 0; i < want; ++i) {
        if (oracle.matched({side::left, order[static_cast<size_t>(i)]})) ++hit;
    }
    rational raw(hit, want);
    rational shifted = raw - delta / 2;
    out.m_tilde = shifted < 0 ? rational(0) : shifted;
    out.queries_used = query_total(s) - before;
    return out;
}

matching_estimate estimate_matching(bipartite_oracle& session, const std::vector<int>& weights,
                                    const rational& delta, int d, estimator_backend backend,
                                    std::uint64_t seed) {
    subgraph_cache cache(session);
    return estimate_matching(cache, weights, delta, d, backend, seed);
}

} // namespace ricci
