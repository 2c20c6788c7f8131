#include "ricci/padding.hpp"

#include "ricci/errors.hpp"
#include "ricci/min_cost_flow.hpp"

#include <unordered_set>

namespace ricci {

std::string pad_label_string(const local_bipartite_t& base, const graph& g, const pad_label& l) {
    if (l.type == pad_label::kind::special) return "r" + std::to_string(l.base);
    return g.name(base.left[static_cast<size_t>(l.base)]) + "^" + std::to_string(l.copy);
}

padded_bipartite pad_to_equal(const local_bipartite_t& b) {
    padded_bipartite p;
    p.base = b;
    const int nl = b.left_size();
    const int nr = b.right_size();
    p.a = nr / nl;
    p.b = nr - p.a * nl;
    for (int i = 0; i < nl; ++i) {
        for (int j = 1; j <= p.a; ++j) p.left_expanded.push_back({pad_label::kind::copy, i, j});
    }
    for (int i = 1; i <= p.b; ++i) p.left_expanded.push_back({pad_label::kind::special, i, 0});
    return p;
}

rational padded_emd(const padded_bipartite& p) {
    const int n = p.side();
    std::vector<std::uint8_t> w(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) {
            w[static_cast<size_t>(r) * n + static_cast<size_t>(j)] = static_cast<std::uint8_t>(p.weight(r, j));
        }
    }
    return rational(assignment_min_cost(w, n), n);
}

realized_graph realize_as_graph(const mpmct_instance& h) {
    const int n = h.n();
    if (n < 1) fail(errc::domain_error, "realization needs n >= 1");
    std::unordered_set<std::string> used(h.left.begin(), h.left.end());
    used.insert(h.right.begin(), h.right.end());
    if (static_cast<int>(used.size()) != 2 * n) {
        fail(errc::malformed_input, "instance labels must be distinct across both sides");
    }
    auto fresh = [&used](std::string base) {
        while (used.count(base)) base += "'";
        used.insert(base);
        return base;
    };
    realized_graph out;
    out.u = fresh("u");
    out.v = fresh("v");

    std::vector<std::pair<std::string, std::string>> edges;
    edges.emplace_back(out.u, out.v);
    for (int i = 0; i < n; ++i) edges.emplace_back(out.u, h.left[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) edges.emplace_back(out.v, h.right[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            switch (h.at(i, j)) {
            case 1:
                edges.emplace_back(h.left[static_cast<size_t>(i)], h.right[static_cast<size_t>(j)]);
                break;
            case 2: {
                std::string mid = fresh("w" + std::to_string(i + 1) + ":" + std::to_string(j + 1));
                edges.emplace_back(h.left[static_cast<size_t>(i)], mid);
                edges.emplace_back(mid, h.right[static_cast<size_t>(j)]);
                break;
            }
            case 3:
                break;
            default:
                fail(errc::malformed_input, "instance weights must lie in {1,2,3}");
            }
        }
    }
    out.g = graph::from_edge_list(edges);
    return out;
}

} // namespace ricci
