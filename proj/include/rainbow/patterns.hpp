#pragma once

#include <algorithm>
#include <optional>

#include "rainbow/colored_graph.hpp"
#include "rainbow/coloring.hpp"

namespace rainbow {

enum class PatternKind { Cancellative, F4, F5, H1, H2, Star, T, O };

/// Families the exact solver can forbid.
enum class Family { None, Cancellative, F4, F5, O };

inline const char* pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Cancellative: return "cancellative";
        case PatternKind::F4: return "f4";
        case PatternKind::F5: return "f5";
        case PatternKind::H1: return "h1";
        case PatternKind::H2: return "h2";
        case PatternKind::Star: return "star";
        case PatternKind::T: return "t";
        case PatternKind::O: return "o";
    }
    return "?";
}

/// A concrete rainbow copy: the realizing edges with their host colors.
/// For Cancellative and O the edges are ordered as (A, B, C) with
/// A ^ B subset of C; for Star the order is core-extension order.
struct PatternWitness {
    PatternKind kind = PatternKind::Cancellative;
    std::vector<Edge> edges;
    std::vector<int> colors;
};

// --- set relations on vertex masks -----------------------------------------

inline bool cancellative_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return a != b && ((a ^ b) & ~c) == 0;
}

inline bool o_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return cancellative_triple(a, b, c) && (c & ~(a | b)) != 0;
}

inline bool t_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c, int p) {
    if (a == b || a == c || b == c) return false;
    return std::popcount((a | b | c) & ~(a & b & c)) <= p;
}

namespace detail {

/// fn(chosen) for every k-subset of items, in ascending position order.
/// k = 0 yields one empty subset.
template <class F>
void for_each_subset(const std::vector<int>& items, int k, F&& fn) {
    const int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return;
    std::vector<int> chosen(k);
    if (k == 0) {
        fn(chosen);
        return;
    }
    std::vector<int> idx = first_tuple(k);
    do {
        for (int i = 0; i < k; ++i) chosen[i] = items[idx[i]];
        fn(chosen);
    } while (next_tuple(idx, m));
}

inline std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    return out;
}

inline std::vector<int> complement_of(std::uint64_t mask, int n) {
    std::vector<int> out;
    out.reserve(n);
    for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1)) out.push_back(v);
    return out;
}

inline std::vector<std::uint64_t> edge_masks(const Coloring& c) {
    std::vector<std::uint64_t> masks(c.assign.size());
    std::vector<int> e = first_tuple(c.p);
    long long r = 0;
    do {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t{1} << v;
        masks[r++] = m;
    } while (next_tuple(e, c.n));
    return masks;
}

// Shared scan for Cancellative and O. Returns the witness that is smallest
// in colex order on (rank A, rank B, rank C); pairs are canonicalized with
// rank A < rank B (the relation is symmetric in A and B).
inline std::optional<PatternWitness> scan_cancellative(const Coloring& c, bool need_outside) {
    const int n = c.n, p = c.p;
    const int min_overlap = (p + 1) / 2;
    const auto masks = edge_masks(c);

    std::vector<int> av = first_tuple(p);
    long long ra = 0;
    std::vector<int> bv, sv, cv;
    do {
        const std::uint64_t am = [&] {
            std::uint64_t m = 0;
            for (int v : av) m |= std::uint64_t{1} << v;
            return m;
        }();
        const int ca = c.assign[ra];
        const auto comp = complement_of(am, n);
        long long best_b = -1, best_c = -1;

        for (int j = min_overlap; j < p; ++j) {
            for_each_subset(av, j, [&](const std::vector<int>& shared) {
                for_each_subset(comp, p - j, [&](const std::vector<int>& rest) {
                    bv = merge_sorted(shared, rest);
                    const long long rb = colex_rank(bv);
                    if (rb <= ra) return;
                    const int cb = c.assign[rb];
                    if (cb == ca) return;
                    if (best_b >= 0 && rb > best_b) return;
                    const std::uint64_t bm = masks[rb];
                    const std::uint64_t sm = am ^ bm;
                    sv.clear();
                    for (std::uint64_t m = sm; m;) {
                        int v = std::countr_zero(m);
                        sv.push_back(v);
                        m &= m - 1;
                    }
                    const auto outside = complement_of(sm, n);
                    for_each_subset(outside, p - static_cast<int>(sv.size()),
                                    [&](const std::vector<int>& fill) {
                                        cv = merge_sorted(sv, fill);
                                        const long long rc = colex_rank(cv);
                                        const int cc = c.assign[rc];
                                        if (cc == ca || cc == cb) return;
                                        if (need_outside && (masks[rc] & ~(am | bm)) == 0) return;
                                        if (best_b < 0 || rb < best_b || (rb == best_b && rc < best_c)) {
                                            best_b = rb;
                                            best_c = rc;
                                        }
                                    });
                });
            });
        }
        if (best_b >= 0) {
            PatternWitness w;
            w.kind = need_outside ? PatternKind::O : PatternKind::Cancellative;
            w.edges = {Edge{av}, edge_unrank(best_b, n, p), edge_unrank(best_c, n, p)};
            w.colors = {ca, c.assign[best_b], c.assign[best_c]};
            return w;
        }
        ++ra;
    } while (next_tuple(av, n));
    return std::nullopt;
}

}  // namespace detail

/// First rainbow triple A, B, C with A ^ B a subset of C, scanning in colex
/// order on (rank A, rank B, rank C); absent if the coloring has none.
inline std::optional<PatternWitness> find_rainbow_cancellative(const Coloring& c) {
    return detail::scan_cancellative(c, false);
}

/// Cancellative triple with C not contained in A union B.
inline std::optional<PatternWitness> find_rainbow_O(const Coloring& c) {
    return detail::scan_cancellative(c, true);
}

/// Rainbow copies of the named 3-uniform pattern on 3 edges:
/// F4 = {abc,abd,bcd}, F5 = {abc,abd,cde}, H1 = {abc,abd,abe}, H2 = {abc,bcd,cde}.
inline std::optional<PatternWitness> find_rainbow_p3(const Coloring& c, PatternKind kind) {
    if (c.p != 3) throw std::invalid_argument("find_rainbow_p3: requires uniformity p = 3");
    const int n = c.n;
    auto color3 = [&](int x, int y, int z) {
        std::vector<int> t{x, y, z};
        std::sort(t.begin(), t.end());
        return c.assign[colex_rank(t)];
    };
    auto edge3 = [](int x, int y, int z) {
        std::vector<int> t{x, y, z};
        std::sort(t.begin(), t.end());
        return Edge{t};
    };
    auto witness = [&](PatternKind k, Edge e1, Edge e2, Edge e3) {
        PatternWitness w;
        w.kind = k;
        w.colors = {c.color(e1), c.color(e2), c.color(e3)};
        w.edges = {std::move(e1), std::move(e2), std::move(e3)};
        return w;
    };

    switch (kind) {
        case PatternKind::F4: {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int x = b + 1; x < n; ++x)
                        for (int d = x + 1; d < n; ++d) {
                            const int quad[4] = {a, b, x, d};
                            int col[4];
                            Edge tri[4];
                            for (int skip = 0; skip < 4; ++skip) {
                                std::vector<int> t;
                                for (int i = 0; i < 4; ++i)
                                    if (i != 3 - skip) t.push_back(quad[i]);
                                tri[skip] = Edge{t};
                                col[skip] = c.color(tri[skip]);
                            }
                            for (int i = 0; i < 4; ++i)
                                for (int j = i + 1; j < 4; ++j)
                                    for (int k = j + 1; k < 4; ++k)
                                        if (col[i] != col[j] && col[i] != col[k] && col[j] != col[k])
                                            return witness(PatternKind::F4, tri[i], tri[j], tri[k]);
                        }
            return std::nullopt;
        }
        case PatternKind::F5: {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int x = 0; x < n; ++x) {
                        if (x == a || x == b) continue;
                        for (int d = x + 1; d < n; ++d) {
                            if (d == a || d == b) continue;
                            const int c1 = color3(a, b, x), c2 = color3(a, b, d);
                            if (c1 == c2) continue;
                            for (int e = 0; e < n; ++e) {
                                if (e == a || e == b || e == x || e == d) continue;
                                const int c3 = color3(x, d, e);
                                if (c3 != c1 && c3 != c2)
                                    return witness(PatternKind::F5, edge3(a, b, x), edge3(a, b, d),
                                                   edge3(x, d, e));
                            }
                        }
                    }
            return std::nullopt;
        }
        case PatternKind::H1: {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int x = 0; x < n; ++x) {
                        if (x == a || x == b) continue;
                        for (int d = x + 1; d < n; ++d) {
                            if (d == a || d == b) continue;
                            const int c1 = color3(a, b, x), c2 = color3(a, b, d);
                            if (c1 == c2) continue;
                            for (int e = d + 1; e < n; ++e) {
                                if (e == a || e == b) continue;
                                const int c3 = color3(a, b, e);
                                if (c3 != c1 && c3 != c2)
                                    return witness(PatternKind::H1, edge3(a, b, x), edge3(a, b, d),
                                                   edge3(a, b, e));
                            }
                        }
                    }
            return std::nullopt;
        }
        case PatternKind::H2: {
            // Tight path x1x2x3, x2x3x4, x3x4x5; reversal symmetry killed by x2 < x4.
            for (int x3 = 0; x3 < n; ++x3)
                for (int x2 = 0; x2 < n; ++x2) {
                    if (x2 == x3) continue;
                    for (int x4 = x2 + 1; x4 < n; ++x4) {
                        if (x4 == x3) continue;
                        const int c2 = color3(x2, x3, x4);
                        for (int x1 = 0; x1 < n; ++x1) {
                            if (x1 == x2 || x1 == x3 || x1 == x4) continue;
                            const int c1 = color3(x1, x2, x3);
                            if (c1 == c2) continue;
                            for (int x5 = 0; x5 < n; ++x5) {
                                if (x5 == x1 || x5 == x2 || x5 == x3 || x5 == x4) continue;
                                const int c3 = color3(x3, x4, x5);
                                if (c3 != c1 && c3 != c2)
                                    return witness(PatternKind::H2, edge3(x1, x2, x3), edge3(x2, x3, x4),
                                                   edge3(x3, x4, x5));
                            }
                        }
                    }
                }
            return std::nullopt;
        }
        default:
            throw std::invalid_argument("find_rainbow_p3: kind must be F4, F5, H1 or H2");
    }
}

/// Rainbow S_{q,r}: r edges sharing a q-vertex core, with pairwise disjoint
/// petals and pairwise distinct colors. Exact backtracking over petals.
inline std::optional<PatternWitness> find_rainbow_star(const Coloring& c, int q, int r) {
    const int n = c.n, p = c.p;
    if (q < 0 || q > p || r < 1)
        throw std::invalid_argument("find_rainbow_star: need 0 <= q <= p and r >= 1");
    if (q + static_cast<long long>(r) * (p - q) > n)
        throw std::invalid_argument("find_rainbow_star: S_{q,r} needs " +
                                    std::to_string(q + static_cast<long long>(r) * (p - q)) +
                                    " vertices, host has " + std::to_string(n));

    std::vector<int> core = first_tuple(q);
    std::vector<int> sorted;
    do {
        std::uint64_t core_mask = 0;
        for (int v : core) core_mask |= std::uint64_t{1} << v;
        const auto comp = detail::complement_of(core_mask, n);

        struct Petal {
            std::uint64_t mask;
            Edge edge;
            int color;
        };
        std::vector<Petal> petals;
        detail::for_each_subset(comp, p - q, [&](const std::vector<int>& pv) {
            Petal pe;
            pe.mask = 0;
            for (int v : pv) pe.mask |= std::uint64_t{1} << v;
            sorted = detail::merge_sorted(core, pv);
            pe.edge = Edge{sorted};
            pe.color = c.assign[colex_rank(sorted)];
            petals.push_back(std::move(pe));
        });

        std::vector<int> chosen;
        auto extend = [&](auto&& self, std::size_t start, std::uint64_t used_mask) -> bool {
            if (static_cast<int>(chosen.size()) == r) return true;
            for (std::size_t i = start; i + (r - chosen.size()) <= petals.size(); ++i) {
                if (petals[i].mask & used_mask) continue;
                bool dup = false;
                for (int idx : chosen)
                    if (petals[static_cast<std::size_t>(idx)].color == petals[i].color) { dup = true; break; }
                if (dup) continue;
                chosen.push_back(static_cast<int>(i));
                if (self(self, i + 1, used_mask | petals[i].mask)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (extend(extend, 0, 0)) {
            PatternWitness w;
            w.kind = PatternKind::Star;
            for (int idx : chosen) {
                w.edges.push_back(petals[static_cast<std::size_t>(idx)].edge);
                w.colors.push_back(petals[static_cast<std::size_t>(idx)].color);
            }
            return w;
        }
    } while (q > 0 && next_tuple(core, n));
    return std::nullopt;
}

/// Rainbow triple of edges whose pairwise symmetric differences union to at
/// most p vertices. Every pair in such a triple overlaps in >= ceil(p/2)
/// vertices, which bounds the scan.
inline std::optional<PatternWitness> find_rainbow_T(const Coloring& c) {
    const int n = c.n, p = c.p;
    const int min_overlap = (p + 1) / 2;
    const auto masks = detail::edge_masks(c);

    std::vector<int> av = first_tuple(p);
    long long ra = 0;
    std::vector<int> bv, cv;
    do {
        const std::uint64_t am = masks[ra];
        const int ca = c.assign[ra];
        const auto comp = detail::complement_of(am, n);
        long long best_b = -1, best_c = -1;

        for (int j = min_overlap; j < p; ++j) {
            detail::for_each_subset(av, j, [&](const std::vector<int>& shared) {
                detail::for_each_subset(comp, p - j, [&](const std::vector<int>& rest) {
                    bv = detail::merge_sorted(shared, rest);
                    const long long rb = colex_rank(bv);
                    if (rb <= ra) return;
                    const int cb = c.assign[rb];
                    if (cb == ca) return;
                    if (best_b >= 0 && rb > best_b) return;
                    const std::uint64_t bm = masks[rb];
                    const std::uint64_t um = am | bm;
                    const int extra_cap = 2 * j - p;  // vertices of f3 outside f1 and f2
                    std::vector<int> inside;
                    for (std::uint64_t m = um; m;) {
                        inside.push_back(std::countr_zero(m));
                        m &= m - 1;
                    }
                    const auto outside = detail::complement_of(um, n);
                    for (int y = 0; y <= extra_cap; ++y) {
                        detail::for_each_subset(inside, p - y, [&](const std::vector<int>& xs) {
                            detail::for_each_subset(outside, y, [&](const std::vector<int>& ys) {
                                cv = detail::merge_sorted(xs, ys);
                                const long long rc = colex_rank(cv);
                                if (rc <= rb) return;
                                const int cc = c.assign[rc];
                                if (cc == ca || cc == cb) return;
                                if (!t_triple(am, bm, masks[rc], p)) return;
                                if (best_b < 0 || rb < best_b || (rb == best_b && rc < best_c)) {
                                    best_b = rb;
                                    best_c = rc;
                                }
                            });
                        });
                    }
                });
            });
        }
        if (best_b >= 0) {
            PatternWitness w;
            w.kind = PatternKind::T;
            w.edges = {Edge{av}, edge_unrank(best_b, n, p), edge_unrank(best_c, n, p)};
            w.colors = {ca, c.assign[best_b], c.assign[best_c]};
            return w;
        }
        ++ra;
    } while (next_tuple(av, n));
    return std::nullopt;
}

/// Link of x: complete graph on the remaining vertices (relabeled 0..n-2 in
/// ascending order) whose pair colors are inherited from the triples through x.
inline ColoredGraph link_graph(const Coloring& c, int x) {
    if (c.p != 3) throw std::invalid_argument("link_graph: requires uniformity p = 3");
    if (x < 0 || x >= c.n) throw std::invalid_argument("link_graph: vertex out of range");
    std::vector<int> others;
    others.reserve(c.n - 1);
    for (int v = 0; v < c.n; ++v)
        if (v != x) others.push_back(v);
    ColoredGraph g = make_complete_graph(c.n - 1);
    std::vector<int> t(3);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            t = {others[i], others[j], x};
            std::sort(t.begin(), t.end());
            g.set_color(i, j, c.assign[colex_rank(t)]);
        }
    return g;
}

/// First triangle with three distinct edge colors, in ascending (i,j,k) order.
inline std::optional<std::array<int, 3>> has_rainbow_triangle(const ColoredGraph& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const int cij = g.color(i, j);
            for (int k = j + 1; k < g.n; ++k) {
                const int cik = g.color(i, k), cjk = g.color(j, k);
                if (cij != cik && cij != cjk && cik != cjk) return std::array<int, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

/// Re-checks a witness against the host coloring and its kind's set relation.
inline bool validate_witness(const Coloring& c, const PatternWitness& w) {
    const int p = c.p;
    if (w.edges.size() != w.colors.size() || w.edges.empty()) return false;
    std::vector<std::uint64_t> ms;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        try {
            validate_edge(w.edges[i], c.n, p);
        } catch (const std::exception&) {
            return false;
        }
        if (c.color(w.edges[i]) != w.colors[i]) return false;
        ms.push_back(w.edges[i].mask());
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i] == ms[j] || w.colors[i] == w.colors[j]) return false;

    auto three = [&] { return w.edges.size() == 3; };
    switch (w.kind) {
        case PatternKind::Cancellative:
            return three() && cancellative_triple(ms[0], ms[1], ms[2]);
        case PatternKind::O:
            return three() && o_triple(ms[0], ms[1], ms[2]);
        case PatternKind::T:
            return three() && t_triple(ms[0], ms[1], ms[2], p);
        case PatternKind::F4:
            return three() && p == 3 && std::popcount(ms[0] | ms[1] | ms[2]) == 4;
        case PatternKind::F5: {
            if (!three() || p != 3 || std::popcount(ms[0] | ms[1] | ms[2]) != 5) return false;
            // exactly one pair shares two vertices; the third edge meets each
            // of them in one vertex and owns the fifth vertex
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const int cth = 3 - a - b;
                    if (std::popcount(ms[a] & ms[b]) == 2 &&
                        std::popcount(ms[cth] & ms[a]) == 1 &&
                        std::popcount(ms[cth] & ms[b]) == 1 &&
                        std::popcount(ms[cth] & ~(ms[a] | ms[b])) == 1)
                        return true;
                }
            return false;
        }
        case PatternKind::H1:
            return three() && p == 3 && std::popcount(ms[0] & ms[1] & ms[2]) == 2 &&
                   std::popcount(ms[0] | ms[1] | ms[2]) == 5;
        case PatternKind::H2: {
            if (!three() || p != 3 || std::popcount(ms[0] | ms[1] | ms[2]) != 5) return false;
            int twos = 0, ones = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const int s = std::popcount(ms[a] & ms[b]);
                    twos += (s == 2);
                    ones += (s == 1);
                }
            return twos == 2 && ones == 1;
        }
        case PatternKind::Star: {
            std::uint64_t core = ms[0];
            for (auto m : ms) core &= m;
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i + 1; j < ms.size(); ++j)
                    if ((ms[i] & ms[j]) != core) return false;
            return true;
        }
    }
    return false;
}

/// Dispatches the solver families to their full-scan detectors.
inline std::optional<PatternWitness> find_rainbow_family(const Coloring& c, Family family) {
    switch (family) {
        case Family::None: return std::nullopt;
        case Family::Cancellative: return find_rainbow_cancellative(c);
        case Family::F4: return find_rainbow_p3(c, PatternKind::F4);
        case Family::F5: return find_rainbow_p3(c, PatternKind::F5);
        case Family::O: return find_rainbow_O(c);
    }
    return std::nullopt;
}

/// Every copy of the family in K_n^(p), as ascending colex-rank triples.
/// Intended for solver-scale instances (small edge counts).
inline std::vector<std::array<long long, 3>> enumerate_family_copies(int n, int p, Family family) {
    std::vector<std::array<long long, 3>> out;
    if (family == Family::None) return out;
    if ((family == Family::F4 || family == Family::F5) && p != 3)
        throw std::invalid_argument("enumerate_family_copies: F4/F5 require p = 3");

    auto push = [&](long long a, long long b, long long c) {
        std::array<long long, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        out.push_back(t);
    };

    if (family == Family::F4) {
        if (n < 4) return out;
        std::vector<int> q = first_tuple(4);
        do {
            long long rk[4];
            for (int skip = 0; skip < 4; ++skip) {
                std::vector<int> t;
                for (int i = 0; i < 4; ++i)
                    if (i != skip) t.push_back(q[i]);
                rk[skip] = colex_rank(t);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int k = j + 1; k < 4; ++k) push(rk[i], rk[j], rk[k]);
        } while (next_tuple(q, n));
    } else if (family == Family::F5) {
        if (n < 5) return out;
        std::vector<int> q = first_tuple(5);
        do {
            std::vector<int> pairs = first_tuple(2);
            do {
                const int a = q[pairs[0]], b = q[pairs[1]];
                std::vector<int> rest;
                for (int i = 0; i < 5; ++i)
                    if (i != pairs[0] && i != pairs[1]) rest.push_back(q[i]);
                for (int pick = 0; pick < 3; ++pick) {
                    const int e = rest[pick];
                    const int cvx = rest[(pick + 1) % 3], dvx = rest[(pick + 2) % 3];
                    std::vector<int> t1{a, b, cvx}, t2{a, b, dvx}, t3{cvx, dvx, e};
                    std::sort(t1.begin(), t1.end());
                    std::sort(t2.begin(), t2.end());
                    std::sort(t3.begin(), t3.end());
                    push(colex_rank(t1), colex_rank(t2), colex_rank(t3));
                }
            } while (next_tuple(pairs, 5));
        } while (next_tuple(q, n));
    } else {
        // Cancellative / O: pairs (A,B) overlapping in >= ceil(p/2) vertices,
        // then every edge containing A ^ B.
        const int min_overlap = (p + 1) / 2;
        std::vector<int> av = first_tuple(p);
        long long ra = 0;
        do {
            std::uint64_t am = 0;
            for (int v : av) am |= std::uint64_t{1} << v;
            const auto comp = detail::complement_of(am, n);
            for (int j = min_overlap; j < p; ++j) {
                detail::for_each_subset(av, j, [&](const std::vector<int>& shared) {
                    detail::for_each_subset(comp, p - j, [&](const std::vector<int>& rest) {
                        auto bv = detail::merge_sorted(shared, rest);
                        const long long rb = colex_rank(bv);
                        if (rb <= ra) return;
                        std::uint64_t bm = 0;
                        for (int v : bv) bm |= std::uint64_t{1} << v;
                        const std::uint64_t sm = am ^ bm;
                        std::vector<int> sv;
                        for (std::uint64_t m = sm; m;) {
                            sv.push_back(std::countr_zero(m));
                            m &= m - 1;
                        }
                        const auto outside = detail::complement_of(sm, n);
                        detail::for_each_subset(outside, p - static_cast<int>(sv.size()),
                                                [&](const std::vector<int>& fill) {
                                                    auto cvv = detail::merge_sorted(sv, fill);
                                                    std::uint64_t cm = 0;
                                                    for (int v : cvv) cm |= std::uint64_t{1} << v;
                                                    if (family == Family::O && (cm & ~(am | bm)) == 0)
                                                        return;
                                                    push(ra, rb, colex_rank(cvv));
                                                });
                    });
                });
            }
            ++ra;
        } while (next_tuple(av, n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Incremental rainbow check for prefix-ordered partial colorings: edges are
/// assumed colored for all colex ranks <= last, and only copies whose maximum
/// rank equals `last` are examined (older copies were checked earlier).
class IncrementalDetector {
public:
    IncrementalDetector(int n, int p, Family family) {
        const long long edges = static_cast<long long>(choose(n, p));
        by_max_.resize(static_cast<std::size_t>(edges));
        copies_ = enumerate_family_copies(n, p, family);
        for (const auto& t : copies_)
            by_max_[static_cast<std::size_t>(t[2])].push_back({t[0], t[1]});
    }

    bool creates_rainbow(const std::vector<int>& assign, long long last) const {
        const int cl = assign[last];
        for (const auto& [a, b] : by_max_[static_cast<std::size_t>(last)]) {
            const int ca = assign[a], cb = assign[b];
            if (ca != cb && ca != cl && cb != cl) return true;
        }
        return false;
    }

    const std::vector<std::array<long long, 3>>& copies() const { return copies_; }

private:
    std::vector<std::array<long long, 3>> copies_;
    std::vector<std::vector<std::pair<long long, long long>>> by_max_;
};

}  // namespace rainbow
