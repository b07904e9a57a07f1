#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <utility>

#include "rainbow/common.hpp"

namespace rainbow {

/// A hyperedge: strictly increasing 0-based vertex indices.
struct Edge {
    std::vector<int> v;

    Edge() = default;
    Edge(std::initializer_list<int> xs) : v(xs) {}
    explicit Edge(std::vector<int> xs) : v(std::move(xs)) {}

    int size() const { return static_cast<int>(v.size()); }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int x : v) m |= std::uint64_t{1} << x;
        return m;
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge edge_from_mask(std::uint64_t m) {
    Edge e;
    while (m) {
        int b = std::countr_zero(m);
        e.v.push_back(b);
        m &= m - 1;
    }
    return e;
}

/// Throws std::invalid_argument unless e is a valid edge of K_n^(p).
inline void validate_edge(const Edge& e, int n, int p) {
    if (p < 1 || n < p || n > kMaxVertices)
        throw std::invalid_argument("edge: need 1 <= p <= n <= 64");
    if (e.size() != p)
        throw std::invalid_argument("edge: expected " + std::to_string(p) + " vertices, got " +
                                    std::to_string(e.size()));
    for (int i = 0; i < p; ++i) {
        if (e.v[i] < 0 || e.v[i] >= n)
            throw std::invalid_argument("edge: vertex " + std::to_string(e.v[i]) + " out of range for n=" +
                                        std::to_string(n));
        if (i > 0 && e.v[i] <= e.v[i - 1])
            throw std::invalid_argument("edge: vertices must be strictly increasing");
    }
}

/// Colex rank of a strictly increasing vertex sequence: sum of C(v_i, i+1).
/// Does not depend on n; edges over a common prefix of vertices are contiguous.
inline long long colex_rank(const std::vector<int>& v) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) r += choose(v[i], static_cast<int>(i) + 1);
    return static_cast<long long>(r);
}

inline long long edge_rank(const Edge& e, int n, int p) {
    validate_edge(e, n, p);
    return colex_rank(e.v);
}

inline Edge edge_unrank(long long rank, int n, int p) {
    if (p < 1 || n < p || n > kMaxVertices)
        throw std::invalid_argument("edge_unrank: need 1 <= p <= n <= 64");
    if (rank < 0 || static_cast<std::uint64_t>(rank) >= choose(n, p))
        throw std::out_of_range("edge_unrank: rank " + std::to_string(rank) + " out of range");
    Edge e;
    e.v.assign(p, 0);
    std::uint64_t r = static_cast<std::uint64_t>(rank);
    int hi = n;
    for (int i = p; i >= 1; --i) {
        int x = hi - 1;
        while (choose(x, i) > r) --x;
        e.v[i - 1] = x;
        r -= choose(x, i);
        hi = x;
    }
    return e;
}

/// First edge in colex order: {0,1,...,p-1}.
inline std::vector<int> first_tuple(int p) {
    std::vector<int> v(p);
    for (int i = 0; i < p; ++i) v[i] = i;
    return v;
}

/// Colex successor in place; false once v was the last p-subset of {0..n-1}.
inline bool next_tuple(std::vector<int>& v, int n) {
    const int p = static_cast<int>(v.size());
    for (int i = 0; i < p; ++i) {
        int limit = (i + 1 < p) ? v[i + 1] : n;
        if (v[i] + 1 < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

}  // namespace rainbow
