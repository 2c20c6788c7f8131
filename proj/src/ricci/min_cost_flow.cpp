#include "ricci/min_cost_flow.hpp"

#include "ricci/errors.hpp"

#include <limits>
#include <queue>

namespace ricci {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

min_cost_flow::min_cost_flow(int node_count) : out_(static_cast<size_t>(node_count)), n_(node_count) {}

void min_cost_flow::add_edge(int from, int to, std::int64_t capacity, std::int64_t cost) {
    out_[static_cast<size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, cost});
    out_[static_cast<size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, -cost});
}

min_cost_flow::result min_cost_flow::run(int source, int sink, std::int64_t max_flow) {
    std::vector<std::int64_t> potential(static_cast<size_t>(n_), 0);

    // Bellman-Ford once to seed potentials (handles any negative arc costs).
    {
        std::vector<std::int64_t> dist(static_cast<size_t>(n_), kInf);
        dist[static_cast<size_t>(source)] = 0;
        for (int round = 0; round < n_; ++round) {
            bool changed = false;
            for (int v = 0; v < n_; ++v) {
                if (dist[static_cast<size_t>(v)] == kInf) continue;
                for (int id : out_[static_cast<size_t>(v)]) {
                    const arc& a = arcs_[static_cast<size_t>(id)];
                    if (a.cap <= 0) continue;
                    std::int64_t cand = dist[static_cast<size_t>(v)] + a.cost;
                    if (cand < dist[static_cast<size_t>(a.to)]) {
                        dist[static_cast<size_t>(a.to)] = cand;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        for (int v = 0; v < n_; ++v) {
            if (dist[static_cast<size_t>(v)] < kInf) potential[static_cast<size_t>(v)] = dist[static_cast<size_t>(v)];
        }
    }

    result res;
    std::int64_t remaining = max_flow < 0 ? kInf : max_flow;
    std::vector<std::int64_t> dist(static_cast<size_t>(n_));
    std::vector<int> prev_arc(static_cast<size_t>(n_));
    while (remaining > 0) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        dist[static_cast<size_t>(source)] = 0;
        using entry = std::pair<std::int64_t, int>; // (reduced dist, node); node index breaks ties
        std::priority_queue<entry, std::vector<entry>, std::greater<entry>> heap;
        heap.emplace(0, source);
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[static_cast<size_t>(v)]) continue;
            for (int id : out_[static_cast<size_t>(v)]) {
                const arc& a = arcs_[static_cast<size_t>(id)];
                if (a.cap <= 0) continue;
                std::int64_t nd = d + a.cost + potential[static_cast<size_t>(v)] - potential[static_cast<size_t>(a.to)];
                if (nd < dist[static_cast<size_t>(a.to)]) {
                    dist[static_cast<size_t>(a.to)] = nd;
                    prev_arc[static_cast<size_t>(a.to)] = id;
                    heap.emplace(nd, a.to);
                }
            }
        }
        if (dist[static_cast<size_t>(sink)] >= kInf) break;
        for (int v = 0; v < n_; ++v) {
            if (dist[static_cast<size_t>(v)] < kInf) potential[static_cast<size_t>(v)] += dist[static_cast<size_t>(v)];
        }
        std::int64_t push = remaining;
        for (int v = sink; v != source;) {
            const arc& a = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)])];
            push = std::min(push, a.cap);
            v = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)] ^ 1)].to;
        }
        for (int v = sink; v != source;) {
            int id = prev_arc[static_cast<size_t>(v)];
            arcs_[static_cast<size_t>(id)].cap -= push;
            arcs_[static_cast<size_t>(id ^ 1)].cap += push;
            res.cost += push * arcs_[static_cast<size_t>(id)].cost;
            v = arcs_[static_cast<size_t>(id ^ 1)].to;
        }
        res.flow += push;
        remaining -= push;
    }
    return res;
}

std::int64_t assignment_min_cost(const std::vector<std::uint8_t>& weight, int n) {
    if (n == 0) return 0;
    if (static_cast<size_t>(n) * static_cast<size_t>(n) != weight.size()) {
        fail(errc::internal, "assignment matrix size mismatch");
    }
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    min_cost_flow mcf(2 * n + 2);
    for (int i = 0; i < n; ++i) mcf.add_edge(source, i, 1, 0);
    for (int j = 0; j < n; ++j) mcf.add_edge(n + j, sink, 1, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mcf.add_edge(i, n + j, 1, weight[static_cast<size_t>(i) * n + static_cast<size_t>(j)]);
        }
    }
    auto res = mcf.run(source, sink);
    if (res.flow != n) fail(errc::internal, "assignment failed to saturate");
    return res.cost;
}

} // namespace ricci
