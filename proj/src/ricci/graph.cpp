#include "ricci/graph.hpp"

#include "ricci/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace ricci {

graph graph::from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs) {
    graph g;
    auto intern = [&g](const std::string& name) {
        auto it = g.index_.find(name);
        if (it != g.index_.end()) return it->second;
        int id = static_cast<int>(g.names_.size());
        g.names_.push_back(name);
        g.index_.emplace(name, id);
        g.adj_.emplace_back();
        return id;
    };
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : pairs) {
        if (a == b) fail(errc::malformed_input, "self-loop on node '" + a + "'");
        int x = intern(a);
        int y = intern(b);
        auto key = std::minmax(x, y);
        if (!seen.insert(key).second) continue;
        g.adj_[static_cast<size_t>(x)].push_back(y);
        g.adj_[static_cast<size_t>(y)].push_back(x);
        g.edges_.push_back(key);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

graph graph::from_edge_list_text(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) {
            fail(errc::malformed_input, "line " + std::to_string(lineno) + ": expected two tokens");
        }
        if (ls >> extra) {
            fail(errc::malformed_input, "line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        }
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return from_edge_list(pairs);
}

graph graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    return from_edge_list_text(in);
}

int graph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(errc::unknown_node, "unknown node '" + name + "'");
    return it->second;
}

bool graph::contains(const std::string& name) const { return index_.count(name) != 0; }

bool graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int graph::bounded_distance(int x, int y, int cap) const {
    if (x < 0 || x >= node_count() || y < 0 || y >= node_count()) {
        fail(errc::unknown_node, "node index out of range");
    }
    if (cap < 1) fail(errc::domain_error, "distance cap must be >= 1");
    if (x == y) return 0;
    std::vector<int> dist(static_cast<size_t>(node_count()), -1);
    dist[static_cast<size_t>(x)] = 0;
    std::deque<int> queue{x};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        int d = dist[static_cast<size_t>(cur)];
        if (d >= cap) break;
        for (int nxt : neighbors(cur)) {
            if (dist[static_cast<size_t>(nxt)] != -1) continue;
            if (nxt == y) return d + 1;
            dist[static_cast<size_t>(nxt)] = d + 1;
            queue.push_back(nxt);
        }
    }
    return cap;
}

overlap_stats_t overlap_stats(const graph& g, int u, int v) {
    if (!g.has_edge(u, v)) {
        fail(errc::not_an_edge, "{" + g.name(u) + "," + g.name(v) + "} is not an edge");
    }
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    overlap_stats_t s;
    s.ell = static_cast<int>(common.size());
    s.k = g.degree(u) - s.ell;
    s.m = g.degree(v) - s.ell;
    return s;
}

local_bipartite_t local_bipartite(const graph& g, int u, int v) {
    if (!g.has_edge(u, v)) {
        fail(errc::not_an_edge, "{" + g.name(u) + "," + g.name(v) + "} is not an edge");
    }
    if (g.degree(u) > g.degree(v)) std::swap(u, v);
    local_bipartite_t b;
    b.u = u;
    b.v = v;
    b.left.push_back(u);
    for (int x : g.neighbors(u)) b.left.push_back(x);
    b.right.push_back(v);
    for (int y : g.neighbors(v)) b.right.push_back(y);
    b.weight.resize(b.left.size() * b.right.size());
    for (size_t i = 0; i < b.left.size(); ++i) {
        for (size_t j = 0; j < b.right.size(); ++j) {
            b.weight[i * b.right.size() + j] =
                static_cast<std::uint8_t>(g.bounded_distance(b.left[i], b.right[j], 3));
        }
    }
    return b;
}

mpmct_instance reduced_instance(const graph& g, int u, int v) {
    if (!g.has_edge(u, v)) {
        fail(errc::not_an_edge, "{" + g.name(u) + "," + g.name(v) + "} is not an edge");
    }
    if (g.degree(u) != g.degree(v)) {
        fail(errc::degree_mismatch, "reduced instance requires deg(u) == deg(v)");
    }
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<int> left_ids, right_ids;
    for (int x : nu) {
        if (x != v && !g.has_edge(x, v)) left_ids.push_back(x);
    }
    for (int y : nv) {
        if (y != u && !g.has_edge(y, u)) right_ids.push_back(y);
    }
    mpmct_instance h;
    for (int x : left_ids) h.left.push_back(g.name(x));
    for (int y : right_ids) h.right.push_back(g.name(y));
    h.weight.resize(left_ids.size() * right_ids.size());
    for (size_t i = 0; i < left_ids.size(); ++i) {
        for (size_t j = 0; j < right_ids.size(); ++j) {
            h.weight[i * right_ids.size() + j] =
                static_cast<std::uint8_t>(g.bounded_distance(left_ids[i], right_ids[j], 3));
        }
    }
    return h;
}

} // namespace ricci
