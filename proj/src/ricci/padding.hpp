#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ricci {

// A label on the expanded left side of a padded gadget: copy j of base row i,
// or special row index i (all-3 weights).
struct pad_label {
    enum class kind { copy, special };
    kind type = kind::copy;
    int base = 0; // base left row for copies, 1-based special index otherwise
    int copy = 0; // 1-based copy index for copies
};

std::string pad_label_string(const local_bipartite_t& base, const graph& g, const pad_label& l);

// Square padding of an unequal-degree gadget: deg(v)+1 = a*(deg(u)+1) + b.
// Each left node becomes a copies; b special all-3 rows complete the side.
struct padded_bipartite {
    local_bipartite_t base;
    int a = 1;
    int b = 0;
    std::vector<pad_label> left_expanded; // copies in base order, specials last

    int side() const { return base.right_size(); }
    // Weight of expanded row r against base right column j.
    int weight(int r, int j) const {
        const pad_label& l = left_expanded[static_cast<size_t>(r)];
        return l.type == pad_label::kind::special ? 3 : base.at(l.base, j);
    }
};

padded_bipartite pad_to_equal(const local_bipartite_t& b);

// Exact EMD of the padded instance: min-weight perfect matching of the
// (deg v + 1)-square expanded weight matrix divided by deg v + 1.
rational padded_emd(const padded_bipartite& p);

// Builds a graph whose reduced instance reproduces h: u/v endpoints, pendant
// rows/columns, direct edges for weight 1 and fresh midpoints for weight 2.
struct realized_graph {
    graph g;
    std::string u;
    std::string v;
};

realized_graph realize_as_graph(const mpmct_instance& h);

} // namespace ricci
