#pragma once

#include "ricci/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ricci {

// Immutable undirected unweighted graph. Node identifiers are opaque strings
// mapped to dense indices in first-appearance order; all algorithms work on
// the indices.
class graph {
  public:
    static graph from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs);

    // Edge-list text: one edge per line, two whitespace-separated tokens.
    // Lines starting with '#' and blank lines are ignored.
    static graph from_edge_list_text(std::istream& in);
    static graph load(const std::string& path);

    int node_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
    int index_of(const std::string& name) const; // throws unknown_node
    bool contains(const std::string& name) const;

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    // Edges as (min,max) index pairs, ordered.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // BFS truncated at depth cap: exact distance when <= cap, otherwise cap.
    int bounded_distance(int x, int y, int cap) const;

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Neighborhood overlap counts for an edge {u,v}: ell = |Nbr(u) ∩ Nbr(v)|,
// k = deg(u) − ell, m = deg(v) − ell.
struct overlap_stats_t {
    int k = 0;
    int ell = 0;
    int m = 0;
};

overlap_stats_t overlap_stats(const graph& g, int u, int v);

// The weighted complete bipartite gadget of an edge: left = {u} ∪ Nbr(u),
// right = {v} ∪ Nbr(v), entries = graph distances capped at 3. The pair is
// stored with deg(u) <= deg(v).
struct local_bipartite_t {
    int u = -1; // endpoint owning the left side
    int v = -1;
    std::vector<int> left;           // u first, then Nbr(u) by index
    std::vector<int> right;          // v first, then Nbr(v) by index
    std::vector<std::uint8_t> weight; // row-major |left| x |right|, values 0..3

    int left_size() const { return static_cast<int>(left.size()); }
    int right_size() const { return static_cast<int>(right.size()); }
    int deg_u() const { return left_size() - 1; }
    int deg_v() const { return right_size() - 1; }
    std::uint8_t at(int i, int j) const {
        return weight[static_cast<size_t>(i) * right.size() + static_cast<size_t>(j)];
    }
    rational left_mass() const { return rational(1, left_size()); }
    rational right_mass() const { return rational(1, right_size()); }
};

local_bipartite_t local_bipartite(const graph& g, int u, int v);

// Equal-size complete bipartite instance with ternary weights {1,2,3}.
// Labels are carried so instances can be realized back into graphs.
struct mpmct_instance {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::vector<std::uint8_t> weight; // row-major n x n

    int n() const { return static_cast<int>(left.size()); }
    std::uint8_t at(int i, int j) const {
        return weight[static_cast<size_t>(i) * right.size() + static_cast<size_t>(j)];
    }
    std::uint8_t& at(int i, int j) {
        return weight[static_cast<size_t>(i) * right.size() + static_cast<size_t>(j)];
    }
};

// The equal-degree residue of an edge: L = Nbr(u)∖(Nbr(v)∪{v}),
// R = Nbr(v)∖(Nbr(u)∪{u}), weights = distances (all in {1,2,3}).
mpmct_instance reduced_instance(const graph& g, int u, int v);

} // namespace ricci
