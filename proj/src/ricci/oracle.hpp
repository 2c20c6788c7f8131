#pragma once

#include "ricci/graph.hpp"
#include "ricci/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ricci {

enum class side : std::uint8_t { left, right };

struct node_ref {
    side s = side::left;
    int idx = 0;

    friend bool operator==(const node_ref&, const node_ref&) = default;
    friend auto operator<=>(const node_ref&, const node_ref&) = default;
};

struct query_counters {
    long long pair = 0;
    long long neighbor = 0;
    long long weighted_neighbor = 0;
    long long selective_degree = 0;
};

std::string counters_json(const query_counters& c);

// Concrete hidden weighted complete bipartite instance. Entries are graph
// distances, so 0 can appear when a node sits on both sides of a gadget;
// queries themselves only ever address weight classes {1,2,3}.
struct bipartite_instance {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::vector<std::uint8_t> weight; // row-major |left| x |right|

    int left_size() const { return static_cast<int>(left.size()); }
    int right_size() const { return static_cast<int>(right.size()); }
    int at(int i, int j) const {
        return weight[static_cast<size_t>(i) * right.size() + static_cast<size_t>(j)];
    }

    static bipartite_instance from_mpmct(const mpmct_instance& h);
    static bipartite_instance from_gadget(const graph& g, const local_bipartite_t& b);
};

// Query surface shared by real sessions and the virtual (padded, stripped)
// sessions layered on top of them.
class bipartite_oracle {
  public:
    virtual ~bipartite_oracle() = default;

    virtual int left_size() const = 0;
    virtual int right_size() const = 0;
    virtual std::string left_label(int i) const = 0;
    virtual std::string right_label(int j) const = 0;

    // Weighted node-pair query: the weight between a left and a right node.
    virtual int pair_query(int left_idx, int right_idx) = 0;

    // Weighted neighbor query: a uniformly random not-yet-explored opposite-side
    // node with the given weight, or nullopt once exhausted.
    virtual std::optional<node_ref> weighted_neighbor_query(node_ref x, int w) = 0;

    // Weighted selective degree query: the number of weight-w edges at x.
    virtual int selective_degree_query(node_ref x, int w) = 0;

    virtual const query_counters& counters() const = 0;
};

// Instrumented session over a concrete bipartite instance.
class bipartite_session : public bipartite_oracle {
  public:
    bipartite_session(bipartite_instance inst, std::uint64_t seed);

    int left_size() const override { return inst_.left_size(); }
    int right_size() const override { return inst_.right_size(); }
    std::string left_label(int i) const override;
    std::string right_label(int j) const override;

    int pair_query(int left_idx, int right_idx) override;
    std::optional<node_ref> weighted_neighbor_query(node_ref x, int w) override;
    int selective_degree_query(node_ref x, int w) override;

    const query_counters& counters() const override { return counters_; }
    const bipartite_instance& hidden() const { return inst_; }
    rng& random() { return rng_; }

  private:
    void check_ref(node_ref x) const;

    bipartite_instance inst_;
    rng rng_;
    query_counters counters_;
    // Unexplored pool per (node, weight class); exploration is one-directional.
    std::map<std::tuple<side, int, int>, std::vector<int>> pools_;
};

// Instrumented neighbor-query session over a hidden graph.
class graph_session {
  public:
    graph_session(const graph& g, std::uint64_t seed) : g_(g), rng_(seed) {}

    std::optional<int> neighbor_query(int v);

    // Clears the exploration pool of one node; per-draw resets give
    // with-replacement sampling where the analysis needs independence.
    void reset_exploration(int v) { pools_.erase(v); }

    const query_counters& counters() const { return counters_; }
    const graph& hidden() const { return g_; }
    rng& random() { return rng_; }

  private:
    const graph& g_;
    rng rng_;
    query_counters counters_;
    std::map<int, std::vector<int>> pools_;
};

} // namespace ricci
