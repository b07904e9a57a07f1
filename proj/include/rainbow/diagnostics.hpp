#pragma once

#include <set>

#include "rainbow/colored_graph.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/designs.hpp"
#include "rainbow/patterns.hpp"

namespace rainbow {

/// 1 + floor(n/p): the exact anti-Ramsey number of the cancellative family.
inline long long ar_cancellative_formula(int n, int p) {
    if (p < 3 || n < p + 1)
        throw std::invalid_argument("ar_cancellative_formula: need p >= 3 and n >= p+1");
    return 1 + static_cast<long long>(n) / p;
}

struct F4Bounds {
    long long lower = 0;
    long long upper = 0;
};

/// Best known brackets for ar(n, F4): lower from the packing construction
/// (and n-2 once n >= 5), upper (5n^2-8n)/21.
inline F4Bounds f4_bounds(int n) {
    if (n < 4) throw std::invalid_argument("f4_bounds: need n >= 4");
    F4Bounds b;
    b.lower = schonheim(n) + 1;
    if (n >= 5) b.lower = std::max(b.lower, static_cast<long long>(n) - 2);
    b.upper = (5LL * n * n - 8LL * n) / 21;
    return b;
}

struct GallaiDefect {
    int colors = 0;
    int rho = 0;  // colors owning a monochromatic triangle
    bool bound_ok = true;
};

struct rainbow_triangle_error : std::invalid_argument {
    std::array<int, 3> triangle;
    explicit rainbow_triangle_error(std::array<int, 3> t)
        : std::invalid_argument("gallai_defect: input has a rainbow triangle {" + std::to_string(t[0]) +
                                "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}"),
          triangle(t) {}
};

/// For a rainbow-triangle-free complete graph: color count, the number of
/// colors spanning a monochromatic triangle, and the check c + rho <= n-1.
inline GallaiDefect gallai_defect(const ColoredGraph& g) {
    std::set<int> mono;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const int cij = g.color(i, j);
            for (int k = j + 1; k < g.n; ++k) {
                const int cik = g.color(i, k), cjk = g.color(j, k);
                if (cij == cik && cij == cjk) mono.insert(cij);
                else if (cij != cik && cij != cjk && cik != cjk)
                    throw rainbow_triangle_error({i, j, k});
            }
        }
    GallaiDefect d;
    d.colors = g.distinct_colors();
    d.rho = static_cast<int>(mono.size());
    d.bound_ok = d.colors + d.rho <= g.n - 1;
    return d;
}

/// The computable aggregates of the F4 color accounting on p = 3:
///   incidences  I   = sum over colors of the support size
///   rho             = sum over vertices of the link's mono-triangle colors
///   singletons  s   = triples whose color appears exactly once
///   leave_edges ell = pairs covered by no singleton triple
/// The identity 3s + ell = C(n,2) holds exactly when the singleton triples
/// form a PSTS (guaranteed for rainbow-F4-free inputs); the two bound flags
/// are expectations for rainbow-F4-free inputs only.
struct F4Accounting {
    long long incidences = 0;
    long long rho = 0;
    long long singletons = 0;
    long long leave_edges = 0;
    int colors = 0;
    bool singleton_psts = true;
    bool identity_ok = true;      // 3s + ell == C(n,2)
    bool support_bound_ok = true; // I + rho <= n(n-2)
    bool color_bound_ok = true;   // k <= (5n^2-8n)/21
};

inline F4Accounting f4_accounting(const Coloring& c) {
    if (c.p != 3) throw std::invalid_argument("f4_accounting: requires uniformity p = 3");
    const int n = c.n, k = c.k;
    F4Accounting acc;
    acc.colors = k;

    std::vector<std::uint64_t> support(static_cast<std::size_t>(k), 0);
    std::vector<long long> class_size(static_cast<std::size_t>(k), 0);
    {
        std::vector<int> e = first_tuple(3);
        long long r = 0;
        do {
            const int col = c.assign[static_cast<std::size_t>(r)];
            std::uint64_t m = 0;
            for (int v : e) m |= std::uint64_t{1} << v;
            support[static_cast<std::size_t>(col)] |= m;
            ++class_size[static_cast<std::size_t>(col)];
            ++r;
        } while (next_tuple(e, n));
    }
    for (auto m : support) acc.incidences += std::popcount(m);

    // rho: colors with a monochromatic triangle in each link
    {
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        std::vector<int> marked;
        std::vector<int> t(3);
        for (int v = 0; v < n; ++v) {
            marked.clear();
            for (int x = 0; x < n; ++x) {
                if (x == v) continue;
                for (int y = x + 1; y < n; ++y) {
                    if (y == v) continue;
                    t = {v, x, y};
                    std::sort(t.begin(), t.end());
                    const int cxy = c.assign[static_cast<std::size_t>(colex_rank(t))];
                    if (seen[static_cast<std::size_t>(cxy)]) continue;
                    for (int z = y + 1; z < n; ++z) {
                        if (z == v) continue;
                        t = {v, x, z};
                        std::sort(t.begin(), t.end());
                        if (c.assign[static_cast<std::size_t>(colex_rank(t))] != cxy) continue;
                        t = {v, y, z};
                        std::sort(t.begin(), t.end());
                        if (c.assign[static_cast<std::size_t>(colex_rank(t))] != cxy) continue;
                        seen[static_cast<std::size_t>(cxy)] = 1;
                        marked.push_back(cxy);
                        break;
                    }
                }
            }
            acc.rho += static_cast<long long>(marked.size());
            for (int col : marked) seen[static_cast<std::size_t>(col)] = 0;
        }
    }

    // singleton-colored triples and their leave
    {
        std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
        long long covered_pairs = 0;
        std::vector<int> e = first_tuple(3);
        long long r = 0;
        do {
            if (class_size[static_cast<std::size_t>(c.assign[static_cast<std::size_t>(r)])] == 1) {
                ++acc.singletons;
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        auto& cv = covered[static_cast<std::size_t>(e[i]) * n + e[j]];
                        if (cv) acc.singleton_psts = false;
                        else {
                            cv = 1;
                            ++covered_pairs;
                        }
                    }
            }
            ++r;
        } while (next_tuple(e, n));
        acc.leave_edges = static_cast<long long>(choose(n, 2)) - covered_pairs;
    }

    acc.identity_ok = 3 * acc.singletons + acc.leave_edges == static_cast<long long>(choose(n, 2));
    acc.support_bound_ok = acc.incidences + acc.rho <= static_cast<long long>(n) * (n - 2);
    acc.color_bound_ok = k <= (5LL * n * n - 8LL * n) / 21;
    return acc;
}

struct ExtremalStructure {
    bool ok = false;
    bool conclusive = true;
    std::vector<int> witness_vertices;  // U, when ok
};

/// Searches for the extremal shape: floor(n/p) vertex-disjoint edges with
/// pairwise distinct colors whose union U carries exactly one further color
/// on all remaining inside edges. Exhaustive over candidate matchings up to
/// a node cap ("inconclusive" when exceeded).
inline ExtremalStructure check_extremal_structure(const Coloring& c, long long node_cap = 5000000) {
    const int n = c.n, p = c.p;
    const int q = n / p;
    ExtremalStructure res;

    struct Cand {
        std::uint64_t mask;
        int color;
    };
    std::vector<Cand> edges;
    edges.reserve(c.assign.size());
    {
        std::vector<int> e = first_tuple(p);
        long long r = 0;
        do {
            std::uint64_t m = 0;
            for (int v : e) m |= std::uint64_t{1} << v;
            edges.push_back({m, c.assign[static_cast<std::size_t>(r)]});
            ++r;
        } while (next_tuple(e, n));
    }

    long long nodes = 0;
    std::vector<int> picked;
    std::vector<int> inside;

    auto leaf_check = [&](std::uint64_t umask) -> bool {
        inside.clear();
        for (int v = 0; v < n; ++v)
            if ((umask >> v) & 1) inside.push_back(v);
        int extra = -1;
        std::vector<int> t = first_tuple(p);
        std::vector<int> real(static_cast<std::size_t>(p));
        do {
            for (int i = 0; i < p; ++i) real[static_cast<std::size_t>(i)] = inside[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            std::uint64_t m = 0;
            for (int v : real) m |= std::uint64_t{1} << v;
            bool is_matching = false;
            for (int idx : picked)
                if (edges[static_cast<std::size_t>(idx)].mask == m) { is_matching = true; break; }
            if (is_matching) continue;
            const int col = c.assign[static_cast<std::size_t>(colex_rank(real))];
            for (int idx : picked)
                if (edges[static_cast<std::size_t>(idx)].color == col) return false;
            if (extra < 0) extra = col;
            else if (extra != col) return false;
        } while (next_tuple(t, static_cast<int>(inside.size())));
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t start, std::uint64_t umask, int depth) -> bool {
        if (nodes++ > node_cap) {
            res.conclusive = false;
            return false;
        }
        if (depth == q) return leaf_check(umask);
        for (std::size_t i = start; i < edges.size(); ++i) {
            if (edges[i].mask & umask) continue;
            bool dup = false;
            for (int idx : picked)
                if (edges[static_cast<std::size_t>(idx)].color == edges[i].color) { dup = true; break; }
            if (dup) continue;
            picked.push_back(static_cast<int>(i));
            if (self(self, i + 1, umask | edges[i].mask, depth + 1)) return true;
            picked.pop_back();
            if (!res.conclusive) return false;
        }
        return false;
    };

    if (dfs(dfs, 0, 0, 0)) {
        res.ok = true;
        std::uint64_t umask = 0;
        for (int idx : picked) umask |= edges[static_cast<std::size_t>(idx)].mask;
        for (int v = 0; v < n; ++v)
            if ((umask >> v) & 1) res.witness_vertices.push_back(v);
    }
    return res;
}

}  // namespace rainbow
