#pragma once

#include "ricci/oracle.hpp"

#include <map>
#include <set>

namespace ricci {

// Virtual session over the square-padded instance, answered on demand from the
// wrapped real session. Each virtual query costs at most one real query of the
// same type plus at most one real weighted selective degree query. The real
// session's exploration state for a key is touched only through this wrapper,
// which is what keeps the bookkeeping below valid.
//
// Left side layout: a copies of every real left node (copies of node i sit at
// rows i*a .. i*a+a-1), then b special all-3 rows. Right side is passed through.
class padded_session : public bipartite_oracle {
  public:
    padded_session(bipartite_oracle& real, int a, int b, std::uint64_t seed);

    int left_size() const override { return real_.left_size() * a_ + b_; }
    int right_size() const override { return real_.right_size(); }
    std::string left_label(int i) const override;
    std::string right_label(int j) const override { return real_.right_label(j); }

    int pair_query(int left_idx, int right_idx) override;
    std::optional<node_ref> weighted_neighbor_query(node_ref x, int w) override;
    int selective_degree_query(node_ref x, int w) override;

    const query_counters& counters() const override { return counters_; }

    int copies() const { return a_; }
    int specials() const { return b_; }

  private:
    struct row_id {
        bool special;
        int base; // real left index, or special ordinal (0-based)
        int copy; // 0-based copy index
    };
    row_id split_row(int padded_row) const;

    int cached_sigma(int base_left, int w);   // one real selective query per key
    int cached_nu1(int right_idx, int w);     // one real selective query per key

    std::optional<node_ref> neighbor_from_copy(row_id id, int w);
    std::optional<node_ref> neighbor_from_special(int ordinal, int w);
    std::optional<node_ref> neighbor_from_right(int right_idx, int w);

    bipartite_oracle& real_;
    int a_;
    int b_;
    rng rng_;
    query_counters counters_;

    std::map<std::pair<int, int>, int> sigma_;                    // (left i, w) -> degree
    std::map<std::pair<int, int>, int> nu1_;                      // (right l, w) -> degree
    std::map<std::tuple<int, int, int>, std::set<int>> copy_seen_; // (i, copy, w) -> right idxs
    std::map<std::pair<int, int>, std::set<int>> union_seen_;      // (i, w) -> revealed right idxs
    std::map<std::pair<int, int>, std::set<int>> right_seen_;      // (l, w) -> returned padded rows
    std::map<std::pair<int, int>, std::vector<int>> right_revealed_; // (l, w) -> revealed real left idxs
    std::map<int, std::set<int>> special_seen_;                    // special ordinal -> right idxs
};

// View of an equal-sides oracle with designated rows and columns removed.
// Used to pair off the zero-weight duplicates (the u/v endpoints and common
// neighbors, one copy each) so the residual instance is ternary. Answers that
// fall outside the view are consumed and redrawn; selective degrees are
// corrected with cached pair queries against the stripped nodes.
class strip_view : public bipartite_oracle {
  public:
    strip_view(bipartite_oracle& base, std::vector<int> strip_rows, std::vector<int> strip_cols);

    int left_size() const override { return static_cast<int>(rows_.size()); }
    int right_size() const override { return static_cast<int>(cols_.size()); }
    std::string left_label(int i) const override { return base_.left_label(rows_[static_cast<size_t>(i)]); }
    std::string right_label(int j) const override { return base_.right_label(cols_[static_cast<size_t>(j)]); }

    int pair_query(int left_idx, int right_idx) override;
    std::optional<node_ref> weighted_neighbor_query(node_ref x, int w) override;
    int selective_degree_query(node_ref x, int w) override;

    const query_counters& counters() const override { return counters_; }

  private:
    int stripped_weight(int base_row, int base_col);

    bipartite_oracle& base_;
    std::vector<int> rows_; // kept base rows, ascending
    std::vector<int> cols_; // kept base cols, ascending
    std::vector<int> row_back_; // base row -> view row or -1
    std::vector<int> col_back_;
    std::vector<int> stripped_rows_;
    std::vector<int> stripped_cols_;
    std::map<std::pair<int, int>, int> pair_cache_; // weights across the stripped frontier
    query_counters counters_;
};

} // namespace ricci
