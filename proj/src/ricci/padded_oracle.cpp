#include "ricci/padded_oracle.hpp"

#include "ricci/errors.hpp"

#include <algorithm>

namespace ricci {

padded_session::padded_session(bipartite_oracle& real, int a, int b, std::uint64_t seed)
    : real_(real), a_(a), b_(b), rng_(seed) {
    if (a < 1 || b < 0 || real.left_size() * a + b != real.right_size()) {
        fail(errc::domain_error, "padding arithmetic does not square the instance");
    }
}

padded_session::row_id padded_session::split_row(int padded_row) const {
    int copies_total = real_.left_size() * a_;
    if (padded_row < copies_total) return {false, padded_row / a_, padded_row % a_};
    return {true, padded_row - copies_total, 0};
}

std::string padded_session::left_label(int i) const {
    row_id id = split_row(i);
    if (id.special) return "r" + std::to_string(id.base + 1);
    return real_.left_label(id.base) + "^" + std::to_string(id.copy + 1);
}

int padded_session::pair_query(int left_idx, int right_idx) {
    if (left_idx < 0 || left_idx >= left_size() || right_idx < 0 || right_idx >= right_size()) {
        fail(errc::domain_error, "pair query outside the instance");
    }
    ++counters_.pair;
    row_id id = split_row(left_idx);
    if (id.special) return 3;
    return real_.pair_query(id.base, right_idx);
}

int padded_session::cached_sigma(int base_left, int w) {
    auto key = std::make_pair(base_left, w);
    auto it = sigma_.find(key);
    if (it != sigma_.end()) return it->second;
    int value = real_.selective_degree_query({side::left, base_left}, w);
    sigma_.emplace(key, value);
    return value;
}

int padded_session::cached_nu1(int right_idx, int w) {
    auto key = std::make_pair(right_idx, w);
    auto it = nu1_.find(key);
    if (it != nu1_.end()) return it->second;
    int value = real_.selective_degree_query({side::right, right_idx}, w);
    nu1_.emplace(key, value);
    return value;
}

int padded_session::selective_degree_query(node_ref x, int w) {
    if (w < 1 || w > 3) fail(errc::domain_error, "weight class must be 1, 2 or 3");
    ++counters_.selective_degree;
    if (x.s == side::left) {
        if (x.idx < 0 || x.idx >= left_size()) fail(errc::domain_error, "node reference out of range");
        row_id id = split_row(x.idx);
        // A special row carries weight 3 to the whole right side; the count is
        // the number of such edges, not their total weight.
        if (id.special) return w == 3 ? right_size() : 0;
        return cached_sigma(id.base, w);
    }
    if (x.idx < 0 || x.idx >= right_size()) fail(errc::domain_error, "node reference out of range");
    int base = cached_nu1(x.idx, w);
    return base * a_ + (w == 3 ? b_ : 0);
}

std::optional<node_ref> padded_session::weighted_neighbor_query(node_ref x, int w) {
    if (w < 1 || w > 3) fail(errc::domain_error, "weight class must be 1, 2 or 3");
    ++counters_.weighted_neighbor;
    if (x.s == side::left) {
        if (x.idx < 0 || x.idx >= left_size()) fail(errc::domain_error, "node reference out of range");
        row_id id = split_row(x.idx);
        if (id.special) return neighbor_from_special(id.base, w);
        return neighbor_from_copy(id, w);
    }
    if (x.idx < 0 || x.idx >= right_size()) fail(errc::domain_error, "node reference out of range");
    return neighbor_from_right(x.idx, w);
}

std::optional<node_ref> padded_session::neighbor_from_copy(row_id id, int w) {
    const int sigma = cached_sigma(id.base, w);
    auto& seen_union = union_seen_[{id.base, w}];
    auto& seen_copy = copy_seen_[{id.base, id.copy, w}];
    const int ku = static_cast<int>(seen_union.size());
    const int kj = static_cast<int>(seen_copy.size());

    auto deliver = [&](int right_idx) -> std::optional<node_ref> {
        seen_copy.insert(right_idx);
        seen_union.insert(right_idx);
        return node_ref{side::right, right_idx};
    };
    auto cached_pick = [&]() {
        std::vector<int> fresh;
        std::set_difference(seen_union.begin(), seen_union.end(), seen_copy.begin(),
                            seen_copy.end(), std::back_inserter(fresh));
        return fresh[static_cast<size_t>(rng_.below(fresh.size()))];
    };

    if (ku == sigma) {
        // Case I: every weight-w neighbor of the base node is already revealed.
        if (kj == ku) return std::nullopt;
        return deliver(cached_pick());
    }
    // Case II: draw a genuinely new node through the real session.
    auto fresh = real_.weighted_neighbor_query({side::left, id.base}, w);
    if (!fresh) fail(errc::internal, "real session exhausted before its selective degree");
    int yp = fresh->idx;
    if (kj == ku) {
        return deliver(yp); // Case II-a: this copy has seen everything revealed so far
    }
    // Case II-b: mix the new node (probability lambda_u/lambda_j) with the
    // revealed-but-unseen ones (1/lambda_j each) so the answer is uniform over
    // the sigma - kj candidates of this copy.
    const std::uint64_t lambda_j = static_cast<std::uint64_t>(sigma - kj);
    const std::uint64_t lambda_u = static_cast<std::uint64_t>(sigma - ku);
    std::vector<int> cached;
    std::set_difference(seen_union.begin(), seen_union.end(), seen_copy.begin(), seen_copy.end(),
                        std::back_inserter(cached));
    seen_union.insert(yp); // revealed either way
    if (rng_.below(lambda_j) < lambda_u) {
        seen_copy.insert(yp);
        return node_ref{side::right, yp};
    }
    int pick = cached[static_cast<size_t>(rng_.below(cached.size()))];
    seen_copy.insert(pick);
    return node_ref{side::right, pick};
}

std::optional<node_ref> padded_session::neighbor_from_special(int ordinal, int w) {
    if (w != 3) return std::nullopt;
    auto& seen = special_seen_[ordinal];
    if (static_cast<int>(seen.size()) == right_size()) return std::nullopt;
    std::vector<int> fresh;
    for (int j = 0; j < right_size(); ++j) {
        if (!seen.count(j)) fresh.push_back(j);
    }
    int pick = fresh[static_cast<size_t>(rng_.below(fresh.size()))];
    seen.insert(pick);
    return node_ref{side::right, pick};
}

std::optional<node_ref> padded_session::neighbor_from_right(int right_idx, int w) {
    const int nu1 = cached_nu1(right_idx, w);
    const int nu2 = w == 3 ? b_ : 0;
    auto& returned = right_seen_[{right_idx, w}];   // padded rows already answered
    auto& revealed = right_revealed_[{right_idx, w}]; // real left nodes known to match
    const int kappa = static_cast<int>(returned.size());
    const int lambda = a_ * nu1 + nu2 - kappa;
    if (lambda <= 0) return std::nullopt;

    const int copies_total = real_.left_size() * a_;
    auto known_pool = [&]() {
        std::vector<int> pool;
        for (int base : revealed) {
            for (int c = 0; c < a_; ++c) {
                int row = base * a_ + c;
                if (!returned.count(row)) pool.push_back(row);
            }
        }
        if (w == 3) {
            for (int o = 0; o < b_; ++o) {
                int row = copies_total + o;
                if (!returned.count(row)) pool.push_back(row);
            }
        }
        return pool;
    };

    const int nu1_known = static_cast<int>(revealed.size());
    if (kappa >= nu1) {
        // Case I: all real matches revealed; answer from the known pool.
        if (nu1_known != nu1) fail(errc::internal, "padded bookkeeping out of sync");
        auto pool = known_pool();
        int row = pool[static_cast<size_t>(rng_.below(pool.size()))];
        returned.insert(row);
        return node_ref{side::left, row};
    }
    // Case II: reveal one more real node, then mix it with the known pool.
    const int phi = nu1 - nu1_known;
    auto pool = known_pool();
    // Normalization of the mixture: a*phi + |known pool| must exhaust lambda.
    if (a_ * phi + static_cast<int>(pool.size()) != lambda) {
        fail(errc::internal, "padded mixing probabilities do not normalize");
    }
    auto fresh = real_.weighted_neighbor_query({side::right, right_idx}, w);
    if (!fresh) fail(errc::internal, "real session exhausted before its selective degree");
    revealed.push_back(fresh->idx);
    int fresh_row = fresh->idx * a_ + static_cast<int>(rng_.below(static_cast<std::uint64_t>(a_)));
    int row;
    if (rng_.below(static_cast<std::uint64_t>(lambda)) < static_cast<std::uint64_t>(a_ * phi)) {
        row = fresh_row;
    } else {
        row = pool[static_cast<size_t>(rng_.below(pool.size()))];
    }
    returned.insert(row);
    return node_ref{side::left, row};
}

strip_view::strip_view(bipartite_oracle& base, std::vector<int> strip_rows, std::vector<int> strip_cols)
    : base_(base), stripped_rows_(std::move(strip_rows)), stripped_cols_(std::move(strip_cols)) {
    std::sort(stripped_rows_.begin(), stripped_rows_.end());
    std::sort(stripped_cols_.begin(), stripped_cols_.end());
    row_back_.assign(static_cast<size_t>(base.left_size()), -1);
    col_back_.assign(static_cast<size_t>(base.right_size()), -1);
    for (int r = 0; r < base.left_size(); ++r) {
        if (!std::binary_search(stripped_rows_.begin(), stripped_rows_.end(), r)) {
            row_back_[static_cast<size_t>(r)] = static_cast<int>(rows_.size());
            rows_.push_back(r);
        }
    }
    for (int c = 0; c < base.right_size(); ++c) {
        if (!std::binary_search(stripped_cols_.begin(), stripped_cols_.end(), c)) {
            col_back_[static_cast<size_t>(c)] = static_cast<int>(cols_.size());
            cols_.push_back(c);
        }
    }
    if (rows_.size() != cols_.size()) {
        fail(errc::domain_error, "strip view must keep equal sides");
    }
}

int strip_view::stripped_weight(int base_row, int base_col) {
    auto key = std::make_pair(base_row, base_col);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    int w = base_.pair_query(base_row, base_col);
    pair_cache_.emplace(key, w);
    return w;
}

int strip_view::pair_query(int left_idx, int right_idx) {
    if (left_idx < 0 || left_idx >= left_size() || right_idx < 0 || right_idx >= right_size()) {
        fail(errc::domain_error, "pair query outside the instance");
    }
    ++counters_.pair;
    return base_.pair_query(rows_[static_cast<size_t>(left_idx)], cols_[static_cast<size_t>(right_idx)]);
}

std::optional<node_ref> strip_view::weighted_neighbor_query(node_ref x, int w) {
    int n = x.s == side::left ? left_size() : right_size();
    if (x.idx < 0 || x.idx >= n) fail(errc::domain_error, "node reference out of range");
    ++counters_.weighted_neighbor;
    node_ref base_ref{x.s, x.s == side::left ? rows_[static_cast<size_t>(x.idx)]
                                             : cols_[static_cast<size_t>(x.idx)]};
    // Redraw past answers that fall on stripped nodes; they are consumed in the
    // base session and can never reappear, so uniformity over the view holds.
    for (;;) {
        auto ans = base_.weighted_neighbor_query(base_ref, w);
        if (!ans) return std::nullopt;
        int mapped = ans->s == side::left ? row_back_[static_cast<size_t>(ans->idx)]
                                          : col_back_[static_cast<size_t>(ans->idx)];
        if (mapped >= 0) return node_ref{ans->s, mapped};
    }
}

int strip_view::selective_degree_query(node_ref x, int w) {
    int n = x.s == side::left ? left_size() : right_size();
    if (x.idx < 0 || x.idx >= n) fail(errc::domain_error, "node reference out of range");
    ++counters_.selective_degree;
    if (x.s == side::left) {
        int base_row = rows_[static_cast<size_t>(x.idx)];
        int count = base_.selective_degree_query({side::left, base_row}, w);
        for (int c : stripped_cols_) count -= stripped_weight(base_row, c) == w;
        return count;
    }
    int base_col = cols_[static_cast<size_t>(x.idx)];
    int count = base_.selective_degree_query({side::right, base_col}, w);
    for (int r : stripped_rows_) count -= stripped_weight(r, base_col) == w;
    return count;
}

} // namespace ricci
