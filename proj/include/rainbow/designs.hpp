#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rainbow/edge.hpp"

namespace rainbow {

/// A triple system: blocks are 3-edges, each pair of vertices in at most one
/// block (PSTS) or exactly one (STS). Blocks are kept sorted by colex rank.
struct TripleSystem {
    int n = 0;
    std::vector<Edge> blocks;

    friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

/// Maximum number of blocks in a partial Steiner triple system of order n.
inline long long schonheim(int n) {
    if (n < 3) throw std::invalid_argument("schonheim: need n >= 3");
    const long long m = n;
    switch (n % 6) {
        case 0:
        case 2: return m * (m - 2) / 6;
        case 1:
        case 3: return m * (m - 1) / 6;
        case 4: return (m * m - 2 * m - 2) / 6;
        default: return (m * m - m - 8) / 6;  // n = 5 mod 6
    }
}

struct PstsCheck {
    bool valid = true;
    std::optional<std::pair<int, int>> offending_pair;
};

inline PstsCheck validate_psts(const TripleSystem& t) {
    std::vector<char> covered(static_cast<std::size_t>(t.n) * t.n, 0);
    for (const auto& b : t.blocks) {
        validate_edge(b, t.n, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto& c = covered[static_cast<std::size_t>(b.v[i]) * t.n + b.v[j]];
                if (c) return {false, std::make_pair(b.v[i], b.v[j])};
                c = 1;
            }
    }
    return {};
}

/// Pairs not covered by any block; requires a valid PSTS.
inline std::vector<std::pair<int, int>> leave_graph(const TripleSystem& t) {
    auto check = validate_psts(t);
    if (!check.valid)
        throw std::invalid_argument("leave_graph: not a PSTS, pair {" +
                                    std::to_string(check.offending_pair->first) + "," +
                                    std::to_string(check.offending_pair->second) + "} covered twice");
    std::vector<char> covered(static_cast<std::size_t>(t.n) * t.n, 0);
    for (const auto& b : t.blocks)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) covered[static_cast<std::size_t>(b.v[i]) * t.n + b.v[j]] = 1;
    std::vector<std::pair<int, int>> leave;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            if (!covered[static_cast<std::size_t>(i) * t.n + j]) leave.emplace_back(i, j);
    return leave;
}

namespace detail {

inline void sort_blocks(TripleSystem& t) {
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const Edge& a, const Edge& b) { return colex_rank(a.v) < colex_rank(b.v); });
}

inline Edge sorted_block(int a, int b, int c) {
    std::vector<int> v{a, b, c};
    std::sort(v.begin(), v.end());
    return Edge{v};
}

// Bose: n = 6t+3, points Z_{2t+1} x {0,1,2} with the idempotent commutative
// quasigroup x*y = (t+1)(x+y) mod 2t+1.
inline TripleSystem sts_bose(int n) {
    const int t = (n - 3) / 6;
    const int q = 2 * t + 1;
    auto idx = [&](int i, int k) { return 3 * i + k; };
    auto mul = [&](int x, int y) { return static_cast<int>((static_cast<long long>(t) + 1) * (x + y) % q); };
    TripleSystem ts;
    ts.n = n;
    for (int i = 0; i < q; ++i) ts.blocks.push_back(sorted_block(idx(i, 0), idx(i, 1), idx(i, 2)));
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            for (int k = 0; k < 3; ++k)
                ts.blocks.push_back(sorted_block(idx(i, k), idx(j, k), idx(mul(i, j), (k + 1) % 3)));
    sort_blocks(ts);
    return ts;
}

// Skolem: n = 6t+1, points Z_{2t} x {0,1,2} plus one extra point (the last
// vertex), using the half-idempotent commutative quasigroup obtained from
// addition on Z_{2t} by relabeling the diagonal: pi(2i) = i, pi(2i+1) = t+i.
inline TripleSystem sts_skolem(int n) {
    const int t = (n - 1) / 6;
    const int q = 2 * t;
    const int inf = n - 1;
    auto idx = [&](int i, int k) { return 3 * i + k; };
    std::vector<int> pi(static_cast<std::size_t>(q));
    for (int i = 0; i < t; ++i) {
        pi[static_cast<std::size_t>(2 * i)] = i;
        pi[static_cast<std::size_t>(2 * i + 1)] = t + i;
    }
    auto mul = [&](int x, int y) { return pi[static_cast<std::size_t>((x + y) % q)]; };
    TripleSystem ts;
    ts.n = n;
    for (int i = 0; i < t; ++i) ts.blocks.push_back(sorted_block(idx(i, 0), idx(i, 1), idx(i, 2)));
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < 3; ++k)
            ts.blocks.push_back(sorted_block(inf, idx(t + i, k), idx(i, (k + 1) % 3)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int k = 0; k < 3; ++k)
                ts.blocks.push_back(sorted_block(idx(x, k), idx(y, k), idx(mul(x, y), (k + 1) % 3)));
    sort_blocks(ts);
    return ts;
}

}  // namespace detail

/// Steiner triple system of order n; exists iff n = 1 or 3 (mod 6). The seed
/// is accepted for interface uniformity; both constructions are deterministic.
inline TripleSystem build_sts(int n, std::uint64_t /*seed*/ = 0) {
    if (n < 3 || n > kMaxVertices)
        throw std::invalid_argument("build_sts: need 3 <= n <= 64");
    if (n % 6 == 3) return detail::sts_bose(n);
    if (n % 6 == 1) return detail::sts_skolem(n);
    throw std::invalid_argument("build_sts: no STS(" + std::to_string(n) +
                                ") exists (need n = 1 or 3 mod 6)");
}

struct MpstsBuild {
    TripleSystem system;
    bool optimal = false;
    long long iterations = 0;
};

/// Maximum partial Steiner triple system with exactly schonheim(n) blocks.
/// Residues 1,3 mod 6 use the STS directly; 0,2 delete the last vertex of
/// STS(n+1); 4,5 run a seeded switch-based hill climb from a greedy packing.
/// If the iteration cap is hit first, `optimal` is false and the achieved
/// (valid but short) packing is returned.
inline MpstsBuild build_mpsts(int n, std::uint64_t seed = 0, long long iter_cap = 2000000) {
    if (n < 3 || n > kMaxVertices)
        throw std::invalid_argument("build_mpsts: need 3 <= n <= 64");
    const long long target = schonheim(n);
    MpstsBuild out;

    const int r = n % 6;
    if (r == 1 || r == 3) {
        out.system = build_sts(n);
        out.optimal = true;
        return out;
    }
    if (r == 0 || r == 2) {
        TripleSystem big = build_sts(n + 1);
        out.system.n = n;
        for (auto& b : big.blocks)
            if (b.v[2] != n) out.system.blocks.push_back(b);
        out.optimal = static_cast<long long>(out.system.blocks.size()) == target;
        return out;
    }

    // n = 4 or 5 mod 6: hill climbing with cover bookkeeping. cover[i][j]
    // holds the index of the covering block, or -1.
    Rng rng(seed);
    std::vector<std::array<int, 3>> blocks;
    std::vector<int> cover(static_cast<std::size_t>(n) * n, -1);
    auto cov = [&](int i, int j) -> int& {
        if (i > j) std::swap(i, j);
        return cover[static_cast<std::size_t>(i) * n + j];
    };
    std::vector<std::pair<int, int>> uncovered;
    std::vector<int> unc_pos(static_cast<std::size_t>(n) * n, -1);
    auto pos = [&](int i, int j) -> int& {
        if (i > j) std::swap(i, j);
        return unc_pos[static_cast<std::size_t>(i) * n + j];
    };
    auto unc_add = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        pos(i, j) = static_cast<int>(uncovered.size());
        uncovered.emplace_back(i, j);
    };
    auto unc_remove = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        const int at = pos(i, j);
        uncovered[static_cast<std::size_t>(at)] = uncovered.back();
        pos(uncovered[static_cast<std::size_t>(at)].first, uncovered[static_cast<std::size_t>(at)].second) = at;
        uncovered.pop_back();
        pos(i, j) = -1;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unc_add(i, j);

    auto add_block = [&](int a, int b, int c) {
        const int id = static_cast<int>(blocks.size());
        blocks.push_back({a, b, c});
        cov(a, b) = id;
        cov(a, c) = id;
        cov(b, c) = id;
        unc_remove(a, b);
        unc_remove(a, c);
        unc_remove(b, c);
    };
    auto remove_block = [&](int id) {
        const auto bl = blocks[static_cast<std::size_t>(id)];
        cov(bl[0], bl[1]) = cov(bl[0], bl[2]) = cov(bl[1], bl[2]) = -1;
        unc_add(bl[0], bl[1]);
        unc_add(bl[0], bl[2]);
        unc_add(bl[1], bl[2]);
        blocks[static_cast<std::size_t>(id)] = blocks.back();
        const auto& moved = blocks[static_cast<std::size_t>(id)];
        if (id != static_cast<int>(blocks.size()) - 1)
            cov(moved[0], moved[1]) = cov(moved[0], moved[2]) = cov(moved[1], moved[2]) = id;
        blocks.pop_back();
    };

    // greedy start over a shuffled triple list
    {
        std::vector<std::array<int, 3>> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
        std::vector<std::array<int, 3>> shuffled(all);
        rng.shuffle(shuffled);
        for (const auto& t : shuffled)
            if (cov(t[0], t[1]) < 0 && cov(t[0], t[2]) < 0 && cov(t[1], t[2]) < 0)
                add_block(t[0], t[1], t[2]);
    }

    long long it = 0;
    std::vector<int> zs;
    while (static_cast<long long>(blocks.size()) < target && it < iter_cap) {
        ++it;
        if (uncovered.empty()) break;
        const auto pr = uncovered[static_cast<std::size_t>(rng.below(uncovered.size()))];
        int x = pr.first, y = pr.second;
        if (rng.chance(0.5)) std::swap(x, y);
        zs.clear();
        for (int z = 0; z < n; ++z)
            if (z != x && z != y && cov(x, z) < 0) zs.push_back(z);
        if (zs.empty()) {
            std::swap(x, y);
            for (int z = 0; z < n; ++z)
                if (z != x && z != y && cov(x, z) < 0) zs.push_back(z);
        }
        if (zs.empty()) continue;  // isolated stuck pair; resample
        const int z = zs[static_cast<std::size_t>(rng.below(zs.size()))];
        const int blocking = cov(y, z);
        if (blocking >= 0) remove_block(blocking);
        int a = x, b = y, cvx = z;
        if (a > b) std::swap(a, b);
        if (b > cvx) std::swap(b, cvx);
        if (a > b) std::swap(a, b);
        add_block(a, b, cvx);
    }

    out.system.n = n;
    for (const auto& t : blocks) out.system.blocks.push_back(Edge{{t[0], t[1], t[2]}});
    detail::sort_blocks(out.system);
    out.optimal = static_cast<long long>(out.system.blocks.size()) == target;
    out.iterations = it;
    return out;
}

inline constexpr const char* kTripleSystemMagic = "triple-system v1";

inline void save_triple_system(const TripleSystem& t, std::ostream& out) {
    out << kTripleSystemMagic << " n=" << t.n << " blocks=" << t.blocks.size() << "\n";
    for (const auto& b : t.blocks) out << b.v[0] << ' ' << b.v[1] << ' ' << b.v[2] << "\n";
}

inline TripleSystem load_triple_system(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_triple_system: empty input");
    std::istringstream hs(line);
    std::string w1, w2, tok;
    int n = -1;
    long long b = -1;
    hs >> w1 >> w2;
    if (w1 + " " + w2 != kTripleSystemMagic)
        throw std::runtime_error("load_triple_system: malformed header");
    while (hs >> tok) {
        if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
        else if (tok.rfind("blocks=", 0) == 0) b = std::stoll(tok.substr(7));
        else throw std::runtime_error("load_triple_system: malformed header token '" + tok + "'");
    }
    if (n < 3 || b < 0) throw std::runtime_error("load_triple_system: malformed header values");
    TripleSystem t;
    t.n = n;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int x, y, z;
        if (!(ls >> x >> y >> z)) throw std::runtime_error("load_triple_system: malformed block line");
        Edge e{{x, y, z}};
        validate_edge(e, n, 3);
        t.blocks.push_back(std::move(e));
    }
    if (static_cast<long long>(t.blocks.size()) != b)
        throw std::runtime_error("load_triple_system: block count mismatch");
    return t;
}

}  // namespace rainbow
