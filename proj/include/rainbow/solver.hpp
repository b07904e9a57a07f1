#pragma once

#include <chrono>
#include <functional>

#include "rainbow/coloring.hpp"
#include "rainbow/diagnostics.hpp"
#include "rainbow/patterns.hpp"

namespace rainbow {

enum class SolveStatus { Proved, TimedOut };

struct Budget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = 0.0;  // <= 0: unlimited
    long long max_edges = 64;  // refuse instances with more edges
};

struct SolveResult {
    int value = 0;
    Coloring witness;
    SolveStatus status = SolveStatus::Proved;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

namespace detail {

class DfsClock {
public:
    DfsClock(std::uint64_t max_nodes, double max_seconds)
        : max_nodes_(max_nodes),
          timed_(max_seconds > 0.0),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timed_ ? max_seconds : 0.0))),
          start_(std::chrono::steady_clock::now()) {}

    /// Counts one search node; true once the budget is exhausted.
    bool tick(std::uint64_t& nodes) {
        if (++nodes >= max_nodes_) return true;
        if (timed_ && (nodes & 0x1fff) == 0 && std::chrono::steady_clock::now() >= deadline_)
            return true;
        return false;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::uint64_t max_nodes_;
    bool timed_;
    std::chrono::steady_clock::time_point deadline_;
    std::chrono::steady_clock::time_point start_;
};

inline void check_solver_instance(int n, int p, const Budget& budget) {
    if (p < 2 || n < p) throw std::invalid_argument("solver: need n >= p >= 2");
    if (static_cast<long long>(choose(n, p)) > budget.max_edges)
        throw std::invalid_argument("solver: instance has " + std::to_string(choose(n, p)) +
                                    " edges, over the cap of " + std::to_string(budget.max_edges));
}

}  // namespace detail

/// Exact ar(n, family) by depth-first search over restricted-growth color
/// assignments in colex edge order. Each edge takes the next fresh id (tried
/// first) or an existing one; a branch dies when the newly colored edge
/// completes a rainbow family copy, or when even one fresh color per
/// remaining edge cannot beat the incumbent. Exhausting the search proves
/// optimality; running out of budget returns the incumbent as a lower bound.
inline SolveResult solve_anti_ramsey(int n, int p, Family family, const Budget& budget = {}) {
    detail::check_solver_instance(n, p, budget);
    const long long edge_total = static_cast<long long>(choose(n, p));
    const IncrementalDetector detector(n, p, family);
    detail::DfsClock clock(budget.max_nodes, budget.max_seconds);

    std::vector<int> assign(static_cast<std::size_t>(edge_total), -1);
    std::vector<int> best_assign(static_cast<std::size_t>(edge_total), 0);  // monochromatic incumbent
    int best = 1;
    std::uint64_t nodes = 0;
    bool stopped = false;

    auto dfs = [&](auto&& self, long long i, int used) -> void {
        if (stopped) return;
        if (i == edge_total) {
            if (used > best) {
                best = used;
                best_assign = assign;
            }
            return;
        }
        if (used + (edge_total - i) <= best) return;
        for (int t = used; t >= 0; --t) {  // fresh id first
            if (clock.tick(nodes)) {
                stopped = true;
                return;
            }
            assign[static_cast<std::size_t>(i)] = t;
            if (!detector.creates_rainbow(assign, i)) self(self, i + 1, used + (t == used ? 1 : 0));
            if (stopped) break;
        }
        assign[static_cast<std::size_t>(i)] = -1;
    };
    dfs(dfs, 0, 0);

    SolveResult res;
    res.value = best;
    res.witness = build_coloring(n, p, best_assign);
    res.status = stopped ? SolveStatus::TimedOut : SolveStatus::Proved;
    res.nodes = nodes;
    res.seconds = clock.elapsed();
    return res;
}

struct EnumerationStats {
    bool completed = true;
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
};

/// Walks every restricted-growth coloring with no rainbow family copy (and at
/// most max_colors colors when max_colors > 0), invoking fn on each complete
/// assignment. With Family::None and no color cap this visits exactly
/// Bell(edge count) leaves.
inline EnumerationStats enumerate_family_free(
    int n, int p, Family family, int max_colors, const Budget& budget,
    const std::function<void(const std::vector<int>& assign, int used)>& fn) {
    detail::check_solver_instance(n, p, budget);
    const long long edge_total = static_cast<long long>(choose(n, p));
    const IncrementalDetector detector(n, p, family);
    detail::DfsClock clock(budget.max_nodes, budget.max_seconds);

    std::vector<int> assign(static_cast<std::size_t>(edge_total), -1);
    EnumerationStats stats;
    bool stopped = false;

    auto dfs = [&](auto&& self, long long i, int used) -> void {
        if (stopped) return;
        if (i == edge_total) {
            ++stats.leaves;
            fn(assign, used);
            return;
        }
        const int top = (max_colors > 0 && used == max_colors) ? used - 1 : used;
        for (int t = 0; t <= top; ++t) {
            if (clock.tick(stats.nodes)) {
                stopped = true;
                return;
            }
            assign[static_cast<std::size_t>(i)] = t;
            if (!detector.creates_rainbow(assign, i)) self(self, i + 1, used + (t == used ? 1 : 0));
            if (stopped) break;
        }
        assign[static_cast<std::size_t>(i)] = -1;
    };
    dfs(dfs, 0, 0);
    stats.completed = !stopped;
    return stats;
}

struct StructureScan {
    int value = 0;
    std::uint64_t optimal_colorings = 0;
    std::uint64_t structure_ok = 0;
    std::uint64_t structure_failed = 0;
    SolveStatus status = SolveStatus::Proved;
    std::uint64_t nodes = 0;
};

/// Enumerates every optimal rainbow-family-free coloring and checks each for
/// the extremal matching-plus-background shape. The optimum is proved first;
/// a budget too small for that proof raises an error.
inline StructureScan verify_optimal_structure(int n, int p, const Budget& budget = {},
                                              Family family = Family::Cancellative) {
    SolveResult solved = solve_anti_ramsey(n, p, family, budget);
    if (solved.status != SolveStatus::Proved)
        throw std::runtime_error("verify_optimal_structure: budget exhausted before optimality proof");

    StructureScan scan;
    scan.value = solved.value;
    const long long edge_total = static_cast<long long>(choose(n, p));
    const IncrementalDetector detector(n, p, family);
    detail::DfsClock clock(budget.max_nodes, budget.max_seconds);

    std::vector<int> assign(static_cast<std::size_t>(edge_total), -1);
    bool stopped = false;

    auto dfs = [&](auto&& self, long long i, int used) -> void {
        if (stopped) return;
        if (i == edge_total) {
            if (used != scan.value) return;
            ++scan.optimal_colorings;
            const auto shape = check_extremal_structure(build_coloring(n, p, assign));
            if (shape.ok) ++scan.structure_ok;
            else ++scan.structure_failed;
            return;
        }
        if (used + (edge_total - i) < scan.value) return;  // cannot reach the optimum
        const int top = (used == scan.value) ? used - 1 : used;
        for (int t = 0; t <= top; ++t) {
            if (clock.tick(scan.nodes)) {
                stopped = true;
                return;
            }
            assign[static_cast<std::size_t>(i)] = t;
            if (!detector.creates_rainbow(assign, i)) self(self, i + 1, used + (t == used ? 1 : 0));
            if (stopped) break;
        }
        assign[static_cast<std::size_t>(i)] = -1;
    };
    dfs(dfs, 0, 0);
    scan.status = stopped ? SolveStatus::TimedOut : SolveStatus::Proved;
    return scan;
}

}  // namespace rainbow
