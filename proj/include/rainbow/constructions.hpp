#pragma once

#include <unordered_map>

#include "rainbow/colored_graph.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/designs.hpp"
#include "rainbow/gf2geom.hpp"

namespace rainbow {

/// The extremal rainbow-cancellative coloring: floor(n/p) vertex-disjoint
/// edges on consecutive vertex blocks, each with its own color, and one
/// background color on everything else. Uses 1 + floor(n/p) colors.
inline Coloring build_cancellative_extremal(int n, int p) {
    if (p < 3) throw std::invalid_argument("build_cancellative_extremal: need p >= 3");
    if (n < p + 1 || n > kMaxVertices)
        throw std::invalid_argument("build_cancellative_extremal: need p+1 <= n <= 64");
    const int q = n / p;
    std::vector<int> assign(static_cast<std::size_t>(choose(n, p)), q);
    std::vector<int> block(static_cast<std::size_t>(p));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < p; ++j) block[static_cast<std::size_t>(j)] = i * p + j;
        assign[static_cast<std::size_t>(colex_rank(block))] = i;
    }
    return build_coloring(n, p, std::move(assign));
}

/// Rainbow maximum partial Steiner triple system plus one background color:
/// m(n)+1 colors in total, rainbow-F4-free.
inline Coloring build_mpsts_coloring(int n, std::uint64_t seed = 0) {
    if (n < 4) throw std::invalid_argument("build_mpsts_coloring: need n >= 4");
    MpstsBuild mb = build_mpsts(n, seed);
    if (!mb.optimal)
        throw std::runtime_error("build_mpsts_coloring: packing search stopped at " +
                                 std::to_string(mb.system.blocks.size()) + " of " +
                                 std::to_string(schonheim(n)) + " blocks");
    const int m = static_cast<int>(mb.system.blocks.size());
    std::vector<int> assign(static_cast<std::size_t>(choose(n, 3)), m);
    for (int i = 0; i < m; ++i)
        assign[static_cast<std::size_t>(colex_rank(mb.system.blocks[static_cast<std::size_t>(i)].v))] = i;
    return build_coloring(n, 3, std::move(assign));
}

/// PG(s-1,2) coloring on 2^s-1 vertices: every block gets its own color and
/// each non-block triple gets the background color of the class of its
/// spanning plane, classes coming from a greedy independent set in the
/// Grassmann graph. Uses m(n) + r colors, r the number of plane classes.
inline Coloring build_pg_coloring(int s, int restarts = 32, std::uint64_t seed = 0) {
    if (s < 3) throw std::invalid_argument("build_pg_coloring: need s >= 3");
    const TripleSystem g = build_pg(s);
    const int n = g.n;
    const GrassmannGraph j = build_grassmann(s);
    const auto indep = greedy_independent_set(j, seed, restarts);
    const PlaneColoring phi = good_coloring_from_independent_set(j, indep);

    std::unordered_map<std::uint64_t, int> plane_index;
    for (int i = 0; i < j.size(); ++i) plane_index[j.planes[static_cast<std::size_t>(i)].points] = i;

    const int m = static_cast<int>(g.blocks.size());
    std::vector<int> assign(static_cast<std::size_t>(choose(n, 3)), -1);
    for (int i = 0; i < m; ++i)
        assign[static_cast<std::size_t>(colex_rank(g.blocks[static_cast<std::size_t>(i)].v))] = i;

    std::vector<int> t = first_tuple(3);
    long long rank = 0;
    do {
        if (assign[static_cast<std::size_t>(rank)] < 0) {
            const int x = t[0] + 1, y = t[1] + 1, z = t[2] + 1;  // vertex i is vector i+1
            const std::uint64_t plane = detail::xor_closure(
                (std::uint64_t{1} << x) | (std::uint64_t{1} << y) | (std::uint64_t{1} << z));
            assign[static_cast<std::size_t>(rank)] =
                m + phi.color[static_cast<std::size_t>(plane_index.at(plane))];
        }
        ++rank;
    } while (next_tuple(t, n));
    return build_coloring(n, 3, std::move(assign));
}

/// Random rainbow-triangle-free coloring of K_n by recursive substitution:
/// split into parts, color the reduced graph with at most two colors, recurse
/// into the parts with fresh or reused colors.
inline ColoredGraph generate_gallai(int n, std::uint64_t seed, int max_parts = 4,
                                    double two_part_bias = 0.5) {
    if (n < 1) throw std::invalid_argument("generate_gallai: need n >= 1");
    if (max_parts < 2) throw std::invalid_argument("generate_gallai: need max_parts >= 2");
    ColoredGraph g = make_complete_graph(n, 0);
    Rng rng(seed);
    int next_color = 0;
    auto pick_color = [&]() {
        if (next_color == 0 || rng.chance(0.5)) return next_color++;
        return rng.below_int(next_color);
    };

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

    auto rec = [&](auto&& self, std::vector<int> verts) -> void {
        const int sz = static_cast<int>(verts.size());
        if (sz <= 1) return;
        const int tmax = std::min(max_parts, sz);
        int t = 2;
        if (tmax > 2 && !rng.chance(two_part_bias)) t = 2 + rng.below_int(tmax - 1);

        rng.shuffle(verts);
        // t-1 distinct cut positions over the shuffled list
        std::vector<int> cuts;
        for (int c = 1; c < sz; ++c) cuts.push_back(c);
        rng.shuffle(cuts);
        cuts.resize(static_cast<std::size_t>(t - 1));
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(sz);

        std::vector<std::vector<int>> parts;
        int at = 0;
        for (int cut : cuts) {
            parts.emplace_back(verts.begin() + at, verts.begin() + cut);
            at = cut;
        }

        const int cx1 = pick_color();
        const int cx2 = pick_color();  // may coincide with cx1
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                const int col = rng.chance(0.5) ? cx1 : cx2;
                for (int u : parts[i])
                    for (int v : parts[j]) g.set_color(u, v, col);
            }
        for (auto& part : parts) self(self, std::move(part));
    };
    rec(rec, std::move(all));

    // contiguous ids by first occurrence
    std::unordered_map<int, int> remap;
    for (auto& c : g.assign) c = remap.try_emplace(c, static_cast<int>(remap.size())).first->second;
    return g;
}

}  // namespace rainbow
