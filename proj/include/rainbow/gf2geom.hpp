#pragma once

#include <algorithm>
#include <set>

#include "rainbow/designs.hpp"

namespace rainbow {

/// A projective subspace of F_2^s \ {0}, stored as a bitmask over point
/// values: bit v is set iff the nonzero vector v belongs to the subspace.
/// A projective d-dimensional subspace has 2^(d+1)-1 points.
struct ProjSubspace {
    std::uint64_t points = 0;

    int point_count() const { return std::popcount(points); }

    /// Projective dimension: 0 for a point, 1 for a line, 2 for a plane.
    int dim() const {
        const int c = point_count();
        int d = 0;
        while ((1 << (d + 1)) - 1 < c) ++d;
        return d;
    }

    bool contains(int v) const { return (points >> v) & 1; }

    std::vector<int> point_list() const {
        std::vector<int> out;
        for (std::uint64_t m = points; m;) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    friend bool operator==(const ProjSubspace&, const ProjSubspace&) = default;
    friend auto operator<=>(const ProjSubspace&, const ProjSubspace&) = default;
};

namespace detail {

inline void check_gf2_point(int s, int x) {
    if (s < 2 || s > 6) throw std::invalid_argument("gf2: need 2 <= s <= 6");
    if (x <= 0 || x >= (1 << s))
        throw std::invalid_argument("gf2: point " + std::to_string(x) + " outside 1..2^s-1");
}

/// Closure of a point set under XOR (the span minus the origin).
inline std::uint64_t xor_closure(std::uint64_t pts) {
    std::uint64_t cur = pts;
    for (;;) {
        std::uint64_t next = cur;
        auto list = ProjSubspace{cur}.point_list();
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                next |= std::uint64_t{1} << (list[i] ^ list[j]);
        if (next == cur) return cur;
        cur = next;
    }
}

}  // namespace detail

/// Span of {x,y,z} minus the origin: a projective line when x^y^z = 0,
/// otherwise the unique projective plane through the three points.
inline ProjSubspace projective_closure(int s, int x, int y, int z) {
    detail::check_gf2_point(s, x);
    detail::check_gf2_point(s, y);
    detail::check_gf2_point(s, z);
    if (x == y || x == z || y == z)
        throw std::invalid_argument("projective_closure: points must be distinct");
    const std::uint64_t seed =
        (std::uint64_t{1} << x) | (std::uint64_t{1} << y) | (std::uint64_t{1} << z);
    return ProjSubspace{detail::xor_closure(seed)};
}

enum class TripleClass { Block, PlaneTriple };

struct TripleClassification {
    TripleClass cls = TripleClass::Block;
    ProjSubspace closure;  // the line or plane spanned
};

inline TripleClassification classify_triple(int s, int x, int y, int z) {
    TripleClassification out;
    out.closure = projective_closure(s, x, y, z);
    out.cls = ((x ^ y ^ z) == 0) ? TripleClass::Block : TripleClass::PlaneTriple;
    return out;
}

/// PG(s-1,2): the Steiner triple system on the 2^s-1 nonzero vectors, with
/// blocks {x, y, x^y}. Vertex i of the system is the vector i+1.
inline TripleSystem build_pg(int s) {
    if (s < 2 || s > 6) throw std::invalid_argument("build_pg: need 2 <= s <= 6");
    const int np = (1 << s) - 1;
    TripleSystem t;
    t.n = np;
    for (int x = 1; x <= np; ++x)
        for (int y = x + 1; y <= np; ++y) {
            const int z = x ^ y;
            if (z > y) t.blocks.push_back(Edge{{x - 1, y - 1, z - 1}});
        }
    detail::sort_blocks(t);
    return t;
}

/// All projective planes of F_2^s \ {0}, in ascending bitmask order.
/// Enumeration closes every independent triple and deduplicates.
inline std::vector<ProjSubspace> enumerate_planes(int s) {
    if (s < 3 || s > 6) throw std::invalid_argument("enumerate_planes: need 3 <= s <= 6");
    const int np = (1 << s) - 1;
    std::set<std::uint64_t> seen;
    for (int x = 1; x <= np; ++x)
        for (int y = x + 1; y <= np; ++y)
            for (int z = y + 1; z <= np; ++z) {
                if ((x ^ y ^ z) == 0) continue;
                seen.insert(detail::xor_closure((std::uint64_t{1} << x) | (std::uint64_t{1} << y) |
                                                (std::uint64_t{1} << z)));
            }
    std::vector<ProjSubspace> out;
    out.reserve(seen.size());
    for (auto m : seen) out.push_back(ProjSubspace{m});
    return out;
}

/// Grassmann graph J_2(s,3): vertices are the projective planes, adjacent
/// when they intersect in a projective line (three common points).
struct GrassmannGraph {
    int s = 0;
    std::vector<ProjSubspace> planes;          // ascending bitmask order
    std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

    int size() const { return static_cast<int>(planes.size()); }

    bool adjacent(int i, int j) const {
        return (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) >> 6] >>
                (static_cast<std::size_t>(j) & 63)) &
               1;
    }
};

inline GrassmannGraph build_grassmann(int s) {
    GrassmannGraph g;
    g.s = s;
    g.planes = enumerate_planes(s);
    const int m = g.size();
    const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(m), std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (std::popcount(g.planes[static_cast<std::size_t>(i)].points &
                              g.planes[static_cast<std::size_t>(j)].points) == 3) {
                g.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) >> 6] |=
                    std::uint64_t{1} << (j & 63);
                g.adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) >> 6] |=
                    std::uint64_t{1} << (i & 63);
            }
        }
    return g;
}

enum class TriangleType { PointType, LineType };

/// Classifies a Grassmann triangle by its triple intersection: a single
/// common point or a common line. Rejects non-triangles.
inline TriangleType triangle_type(const ProjSubspace& w1, const ProjSubspace& w2,
                                  const ProjSubspace& w3) {
    const ProjSubspace* ws[3] = {&w1, &w2, &w3};
    for (int i = 0; i < 3; ++i) {
        if (ws[i]->dim() != 2) throw std::invalid_argument("triangle_type: vertices must be planes");
        for (int j = i + 1; j < 3; ++j) {
            if (ws[i]->points == ws[j]->points)
                throw std::invalid_argument("triangle_type: planes must be distinct");
            if (std::popcount(ws[i]->points & ws[j]->points) != 3)
                throw std::invalid_argument("triangle_type: pair does not intersect in a line");
        }
    }
    const int common = std::popcount(w1.points & w2.points & w3.points);
    if (common == 1) return TriangleType::PointType;
    if (common == 3) return TriangleType::LineType;
    throw std::invalid_argument("triangle_type: unexpected triple intersection of size " +
                                std::to_string(common));
}

/// Best-of-k greedy maximal independent sets under seeded vertex orders.
/// Returns sorted plane indices; ties keep the earliest restart.
inline std::vector<int> greedy_independent_set(const GrassmannGraph& g, std::uint64_t order_seed,
                                               int restarts = 32) {
    if (restarts < 1) restarts = 1;
    const int m = g.size();
    std::vector<int> best;
    for (int round = 0; round < restarts; ++round) {
        Rng rng(order_seed + static_cast<std::uint64_t>(round) * 0x9e3779b97f4a7c15ULL);
        std::vector<int> order(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
        rng.shuffle(order);
        std::vector<int> chosen;
        for (int v : order) {
            bool ok = true;
            for (int u : chosen)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (ok) chosen.push_back(v);
        }
        if (chosen.size() > best.size()) best = std::move(chosen);
    }
    std::sort(best.begin(), best.end());
    return best;
}

/// Vertex coloring of a Grassmann graph, classes numbered 0..classes-1.
struct PlaneColoring {
    std::vector<int> color;
    int classes = 0;
};

/// Distinct colors on the independent set, one shared color on the rest
/// (omitted when nothing remains).
inline PlaneColoring good_coloring_from_independent_set(const GrassmannGraph& g,
                                                        const std::vector<int>& indep) {
    for (std::size_t i = 0; i < indep.size(); ++i)
        for (std::size_t j = i + 1; j < indep.size(); ++j)
            if (g.adjacent(indep[i], indep[j]))
                throw std::invalid_argument("good_coloring_from_independent_set: set is not independent");
    PlaneColoring pc;
    pc.color.assign(static_cast<std::size_t>(g.size()), -1);
    int next = 0;
    for (int v : indep) pc.color[static_cast<std::size_t>(v)] = next++;
    bool rest = false;
    for (auto& c : pc.color)
        if (c < 0) {
            c = next;
            rest = true;
        }
    pc.classes = next + (rest ? 1 : 0);
    return pc;
}

struct GoodColoringCheck {
    bool good = true;
    std::array<int, 3> witness{-1, -1, -1};  // a rainbow point-type triangle
};

/// Scans all triangles; good iff every point-type triangle repeats a color.
inline GoodColoringCheck is_good_coloring(const GrassmannGraph& g, const std::vector<int>& phi) {
    const int m = g.size();
    if (static_cast<int>(phi.size()) != m)
        throw std::invalid_argument("is_good_coloring: coloring must cover every plane");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!g.adjacent(i, j)) continue;
            for (int k = j + 1; k < m; ++k) {
                if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
                const int ci = phi[static_cast<std::size_t>(i)], cj = phi[static_cast<std::size_t>(j)],
                          ck = phi[static_cast<std::size_t>(k)];
                if (ci == cj || ci == ck || cj == ck) continue;
                const int common = std::popcount(g.planes[static_cast<std::size_t>(i)].points &
                                                 g.planes[static_cast<std::size_t>(j)].points &
                                                 g.planes[static_cast<std::size_t>(k)].points);
                if (common == 1) return {false, {i, j, k}};
            }
        }
    return {};
}

}  // namespace rainbow
