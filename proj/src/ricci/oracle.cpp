#include "ricci/oracle.hpp"

#include "ricci/errors.hpp"

#include <string>

namespace ricci {

std::string counters_json(const query_counters& c) {
    std::string out = "{";
    out += "\"pair\": " + std::to_string(c.pair);
    out += ", \"neighbor\": " + std::to_string(c.neighbor);
    out += ", \"weighted_neighbor\": " + std::to_string(c.weighted_neighbor);
    out += ", \"selective_degree\": " + std::to_string(c.selective_degree);
    out += "}";
    return out;
}

bipartite_instance bipartite_instance::from_mpmct(const mpmct_instance& h) {
    bipartite_instance inst;
    inst.left = h.left;
    inst.right = h.right;
    inst.weight = h.weight;
    return inst;
}

bipartite_instance bipartite_instance::from_gadget(const graph& g, const local_bipartite_t& b) {
    bipartite_instance inst;
    for (int x : b.left) inst.left.push_back(g.name(x));
    for (int y : b.right) inst.right.push_back(g.name(y));
    inst.weight = b.weight;
    return inst;
}

bipartite_session::bipartite_session(bipartite_instance inst, std::uint64_t seed)
    : inst_(std::move(inst)), rng_(seed) {}

std::string bipartite_session::left_label(int i) const {
    return inst_.left[static_cast<size_t>(i)];
}

std::string bipartite_session::right_label(int j) const {
    return inst_.right[static_cast<size_t>(j)];
}

void bipartite_session::check_ref(node_ref x) const {
    int n = x.s == side::left ? inst_.left_size() : inst_.right_size();
    if (x.idx < 0 || x.idx >= n) fail(errc::domain_error, "node reference out of range");
}

int bipartite_session::pair_query(int left_idx, int right_idx) {
    if (left_idx < 0 || left_idx >= inst_.left_size() || right_idx < 0 ||
        right_idx >= inst_.right_size()) {
        fail(errc::domain_error, "pair query outside the instance");
    }
    ++counters_.pair;
    return inst_.at(left_idx, right_idx);
}

std::optional<node_ref> bipartite_session::weighted_neighbor_query(node_ref x, int w) {
    check_ref(x);
    if (w < 1 || w > 3) fail(errc::domain_error, "weight class must be 1, 2 or 3");
    ++counters_.weighted_neighbor;
    auto key = std::make_tuple(x.s, x.idx, w);
    auto it = pools_.find(key);
    if (it == pools_.end()) {
        std::vector<int> pool;
        if (x.s == side::left) {
            for (int j = 0; j < inst_.right_size(); ++j) {
                if (inst_.at(x.idx, j) == w) pool.push_back(j);
            }
        } else {
            for (int i = 0; i < inst_.left_size(); ++i) {
                if (inst_.at(i, x.idx) == w) pool.push_back(i);
            }
        }
        it = pools_.emplace(key, std::move(pool)).first;
    }
    auto& pool = it->second;
    if (pool.empty()) return std::nullopt;
    size_t pick = static_cast<size_t>(rng_.below(pool.size()));
    int chosen = pool[pick];
    pool[pick] = pool.back();
    pool.pop_back();
    return node_ref{x.s == side::left ? side::right : side::left, chosen};
}

int bipartite_session::selective_degree_query(node_ref x, int w) {
    check_ref(x);
    if (w < 1 || w > 3) fail(errc::domain_error, "weight class must be 1, 2 or 3");
    ++counters_.selective_degree;
    int count = 0;
    if (x.s == side::left) {
        for (int j = 0; j < inst_.right_size(); ++j) count += inst_.at(x.idx, j) == w;
    } else {
        for (int i = 0; i < inst_.left_size(); ++i) count += inst_.at(i, x.idx) == w;
    }
    return count;
}

std::optional<int> graph_session::neighbor_query(int v) {
    if (v < 0 || v >= g_.node_count()) fail(errc::unknown_node, "node index out of range");
    ++counters_.neighbor;
    auto it = pools_.find(v);
    if (it == pools_.end()) it = pools_.emplace(v, g_.neighbors(v)).first;
    auto& pool = it->second;
    if (pool.empty()) return std::nullopt;
    size_t pick = static_cast<size_t>(rng_.below(pool.size()));
    int chosen = pool[pick];
    pool[pick] = pool.back();
    pool.pop_back();
    return chosen;
}

} // namespace ricci
