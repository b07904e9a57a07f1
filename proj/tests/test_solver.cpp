#include <catch2/catch_amalgamated.hpp>

#include "rainbow/rainbow.hpp"

using namespace rainbow;

namespace {

// test-side oracle: walk every set partition of the edge ranks (restricted
// growth strings) and keep the best family-free color count; feasibility is
// checked straight from the defining set relations, independent of the
// solver's copy tables
int brute_force_ar(int n, int p, Family family) {
    const long long edges = static_cast<long long>(choose(n, p));
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(edges));
    {
        std::vector<int> e = first_tuple(p);
        long long r = 0;
        do {
            std::uint64_t m = 0;
            for (int v : e) m |= std::uint64_t{1} << v;
            masks[static_cast<std::size_t>(r++)] = m;
        } while (next_tuple(e, n));
    }
    std::vector<int> assign(static_cast<std::size_t>(edges), -1);
    int best = 0;

    auto matches = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        switch (family) {
            case Family::Cancellative: return cancellative_triple(a, b, c);
            case Family::O: return o_triple(a, b, c);
            case Family::F4:
                return a != b && b != c && a != c && std::popcount(a | b | c) == 4;
            case Family::F5: {
                if (std::popcount(a | b | c) != 5) return false;
                return o_triple(a, b, c) || o_triple(a, c, b) || o_triple(b, c, a);
            }
            default: return false;
        }
    };
    auto feasible = [&]() {
        for (long long i = 0; i < edges; ++i)
            for (long long j = 0; j < edges; ++j)
                for (long long k = 0; k < edges; ++k) {
                    const int ci = assign[static_cast<std::size_t>(i)],
                              cj = assign[static_cast<std::size_t>(j)],
                              ck = assign[static_cast<std::size_t>(k)];
                    if (ci == cj || ci == ck || cj == ck) continue;
                    if (matches(masks[static_cast<std::size_t>(i)], masks[static_cast<std::size_t>(j)],
                                masks[static_cast<std::size_t>(k)]))
                        return false;
                }
        return true;
    };
    auto rec = [&](auto&& self, long long i, int used) -> void {
        if (i == edges) {
            if (used > best && feasible()) best = used;
            return;
        }
        for (int t = 0; t <= used; ++t) {
            assign[static_cast<std::size_t>(i)] = t;
            self(self, i + 1, used + (t == used ? 1 : 0));
        }
        assign[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("solver reproduces the exact cancellative values") {
    for (auto [n, p, want] : {std::tuple{4, 3, 2}, {5, 3, 2}, {5, 4, 2}, {6, 4, 2}}) {
        CAPTURE(n, p);
        const auto res = solve_anti_ramsey(n, p, Family::Cancellative);
        REQUIRE(res.status == SolveStatus::Proved);
        REQUIRE(res.value == want);
        REQUIRE(res.value == ar_cancellative_formula(n, p));
        CHECK(res.witness.k == want);
        CHECK_FALSE(find_rainbow_cancellative(res.witness).has_value());
    }
}

TEST_CASE("solver proves ar(6, cancellative) = 3") {
    const auto res = solve_anti_ramsey(6, 3, Family::Cancellative);
    REQUIRE(res.status == SolveStatus::Proved);
    CHECK(res.value == 3);
    CHECK_FALSE(find_rainbow_cancellative(res.witness).has_value());
}

TEST_CASE("solver: F5 on five vertices") {
    const auto res = solve_anti_ramsey(5, 3, Family::F5);
    REQUIRE(res.status == SolveStatus::Proved);
    CHECK(res.value == 2);
    CHECK_FALSE(find_rainbow_p3(res.witness, PatternKind::F5).has_value());
}

TEST_CASE("solver matches the Bell-enumeration oracle on tiny F4 instances") {
    const auto r43 = solve_anti_ramsey(4, 3, Family::F4);
    REQUIRE(r43.status == SolveStatus::Proved);
    CHECK(r43.value == 2);
    CHECK(r43.value == brute_force_ar(4, 3, Family::F4));

    const auto r53 = solve_anti_ramsey(5, 3, Family::F4);
    REQUIRE(r53.status == SolveStatus::Proved);
    CHECK(r53.value == brute_force_ar(5, 3, Family::F4));
    const auto bounds = f4_bounds(5);
    CHECK(r53.value >= bounds.lower);
    CHECK(r53.value <= bounds.upper);
    CHECK_FALSE(find_rainbow_p3(r53.witness, PatternKind::F4).has_value());
}

TEST_CASE("forbidding F5 alone already forces the cancellative optimum") {
    for (int n : {5, 6}) {
        const auto f5 = solve_anti_ramsey(n, 3, Family::F5);
        const auto canc = solve_anti_ramsey(n, 3, Family::Cancellative);
        REQUIRE(f5.status == SolveStatus::Proved);
        CHECK(f5.value == canc.value);
        CHECK(f5.value == ar_cancellative_formula(n, 3));
    }
}

TEST_CASE("new exact F4 points sit on the packing lower bound") {
    const auto r5 = solve_anti_ramsey(5, 3, Family::F4);
    REQUIRE(r5.status == SolveStatus::Proved);
    CHECK(r5.value == 3);
    CHECK(r5.value == f4_bounds(5).lower);

    const auto r6 = solve_anti_ramsey(6, 3, Family::F4);
    REQUIRE(r6.status == SolveStatus::Proved);
    CHECK(r6.value == 5);
    CHECK(r6.value == f4_bounds(6).lower);
    CHECK_FALSE(find_rainbow_p3(r6.witness, PatternKind::F4).has_value());
}

TEST_CASE("solver equals the definition-level oracle across families") {
    for (Family fam : {Family::Cancellative, Family::F4, Family::F5, Family::O}) {
        CAPTURE(static_cast<int>(fam));
        CHECK(solve_anti_ramsey(4, 3, fam).value == brute_force_ar(4, 3, fam));
    }
    CHECK(solve_anti_ramsey(5, 3, Family::F5).value == brute_force_ar(5, 3, Family::F5));
    CHECK(solve_anti_ramsey(5, 3, Family::Cancellative).value ==
          brute_force_ar(5, 3, Family::Cancellative));
    CHECK(solve_anti_ramsey(5, 4, Family::Cancellative).value ==
          brute_force_ar(5, 4, Family::Cancellative));
    CHECK(solve_anti_ramsey(5, 4, Family::O).value == brute_force_ar(5, 4, Family::O));
}

TEST_CASE("O on three-uniform hosts behaves exactly like F5") {
    const auto o = solve_anti_ramsey(5, 3, Family::O);
    const auto f5 = solve_anti_ramsey(5, 3, Family::F5);
    CHECK(o.value == f5.value);
    CHECK(enumerate_family_copies(5, 3, Family::O) == enumerate_family_copies(5, 3, Family::F5));
}

TEST_CASE("unpruned enumeration visits Bell(edge count) leaves") {
    const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (auto [n, p] : {std::pair{3, 3}, {4, 3}, {5, 4}, {4, 2}, {7, 6}}) {
        const long long edges = static_cast<long long>(choose(n, p));
        REQUIRE(edges <= 7);
        const auto stats = enumerate_family_free(n, p, Family::None, 0, Budget{},
                                                 [](const std::vector<int>&, int) {});
        CAPTURE(n, p, edges);
        REQUIRE(stats.completed);
        REQUIRE(stats.leaves == bell[edges]);
    }
}

TEST_CASE("solver value dominates the matching construction") {
    for (int n : {4, 5}) {
        const auto res = solve_anti_ramsey(n, 3, Family::Cancellative);
        REQUIRE(res.value == build_cancellative_extremal(n, 3).k);
    }
    const auto f4 = solve_anti_ramsey(5, 3, Family::F4);
    CHECK(f4.value >= build_mpsts_coloring(5).k);
}

TEST_CASE("budget exhaustion still returns a certified incumbent") {
    Budget tight;
    tight.max_nodes = 500;
    const auto res = solve_anti_ramsey(6, 3, Family::Cancellative, tight);
    CHECK(res.status == SolveStatus::TimedOut);
    CHECK(res.value >= 1);
    CHECK(res.witness.k == res.value);
    CHECK_FALSE(find_rainbow_cancellative(res.witness).has_value());
}

TEST_CASE("solver rejects oversized or malformed instances") {
    CHECK_THROWS_AS(solve_anti_ramsey(3, 1, Family::Cancellative), std::invalid_argument);
    Budget b;
    b.max_edges = 10;
    CHECK_THROWS_AS(solve_anti_ramsey(6, 3, Family::Cancellative, b), std::invalid_argument);
    CHECK_THROWS_AS(solve_anti_ramsey(6, 4, Family::F4, Budget{}), std::invalid_argument);
}

TEST_CASE("verify_optimal_structure: every optimal coloring carries the shape") {
    for (auto [n, p] : {std::pair{4, 3}, {5, 3}, {5, 4}}) {
        CAPTURE(n, p);
        const auto scan = verify_optimal_structure(n, p);
        REQUIRE(scan.status == SolveStatus::Proved);
        REQUIRE(scan.optimal_colorings > 0);
        CHECK(scan.structure_failed == 0);
        CHECK(scan.structure_ok == scan.optimal_colorings);
    }
}

TEST_CASE("enumeration with a color cap respects the cap") {
    std::uint64_t leaves = 0;
    int max_seen = 0;
    enumerate_family_free(4, 3, Family::None, 2, Budget{},
                          [&](const std::vector<int>&, int used) {
                              ++leaves;
                              max_seen = std::max(max_seen, used);
                          });
    CHECK(max_seen == 2);
    CHECK(leaves == 8);  // restricted-growth strings of length 4 over <= 2 ids
}
