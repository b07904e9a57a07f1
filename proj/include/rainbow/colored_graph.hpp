#pragma once

#include <set>

#include "rainbow/edge.hpp"

namespace rainbow {

/// Edge-colored complete graph. Unlike Coloring, color ids here are arbitrary
/// non-negative ints and need not be contiguous: link graphs keep the ids of
/// the host hypergraph so that classes stay comparable across links.
struct ColoredGraph {
    int n = 0;
    std::vector<int> assign;  // one color per colex pair rank

    static long long pair_rank(int i, int j) {
        if (i > j) std::swap(i, j);
        return i + static_cast<long long>(choose(j, 2));
    }

    int color(int i, int j) const { return assign[pair_rank(i, j)]; }

    void set_color(int i, int j, int c) { assign[pair_rank(i, j)] = c; }

    long long pair_count() const { return static_cast<long long>(assign.size()); }

    int distinct_colors() const {
        std::set<int> s(assign.begin(), assign.end());
        return static_cast<int>(s.size());
    }
};

inline ColoredGraph make_complete_graph(int n, int fill_color = 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("make_complete_graph: bad n");
    ColoredGraph g;
    g.n = n;
    g.assign.assign(static_cast<std::size_t>(choose(n, 2)), fill_color);
    return g;
}

}  // namespace rainbow
