#include <catch2/catch_amalgamated.hpp>

#include "rainbow/rainbow.hpp"

using namespace rainbow;

namespace {

Coloring mono(int n, int p) {
    return build_coloring(n, p, std::vector<int>(static_cast<std::size_t>(choose(n, p)), 0));
}

}  // namespace

TEST_CASE("ar_cancellative_formula") {
    CHECK(ar_cancellative_formula(7, 3) == 3);
    CHECK(ar_cancellative_formula(8, 4) == 3);
    CHECK(ar_cancellative_formula(100, 3) == 34);
    CHECK_THROWS_AS(ar_cancellative_formula(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ar_cancellative_formula(5, 2), std::invalid_argument);
}

TEST_CASE("f4_bounds named values") {
    CHECK(f4_bounds(7).lower == 8);
    CHECK(f4_bounds(7).upper == 9);
    CHECK(f4_bounds(5).lower == 3);
    CHECK(f4_bounds(5).upper == 4);
    CHECK(f4_bounds(4).lower == 2);
    CHECK(f4_bounds(4).upper == 2);
    CHECK_THROWS_AS(f4_bounds(3), std::invalid_argument);
}

TEST_CASE("gallai_defect named values") {
    ColoredGraph k4 = make_complete_graph(4, 0);
    const auto d4 = gallai_defect(k4);
    CHECK(d4.colors == 1);
    CHECK(d4.rho == 1);
    CHECK(d4.bound_ok);

    ColoredGraph k3 = make_complete_graph(3, 0);
    k3.set_color(0, 1, 1);
    const auto d3 = gallai_defect(k3);
    CHECK(d3.colors == 2);
    CHECK(d3.rho == 0);
    CHECK(d3.bound_ok);

    ColoredGraph rb = make_complete_graph(3, 0);
    rb.set_color(0, 1, 0);
    rb.set_color(0, 2, 1);
    rb.set_color(1, 2, 2);
    CHECK_THROWS_AS(gallai_defect(rb), rainbow_triangle_error);
    try {
        gallai_defect(rb);
    } catch (const rainbow_triangle_error& err) {
        CHECK(err.triangle == std::array<int, 3>{0, 1, 2});
    }
}

TEST_CASE("gallai_defect bound over generated colorings") {
    for (int n : {10, 20})
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const auto d = gallai_defect(generate_gallai(n, seed));
            CAPTURE(n, seed, d.colors, d.rho);
            REQUIRE(d.bound_ok);
        }
}

TEST_CASE("f4_accounting named values") {
    const auto m5 = f4_accounting(mono(5, 3));
    CHECK(m5.singletons == 0);
    CHECK(m5.leave_edges == 10);
    CHECK(m5.colors == 1);
    CHECK(m5.identity_ok);
    CHECK(m5.singleton_psts);

    const auto acc7 = f4_accounting(build_mpsts_coloring(7));
    CHECK(acc7.singletons == 7);
    CHECK(acc7.leave_edges == 0);
    CHECK(acc7.colors == 8);
    CHECK(acc7.identity_ok);
    CHECK(acc7.support_bound_ok);
    CHECK(acc7.incidences + acc7.rho <= 35);

    const auto pg3 = f4_accounting(build_pg_coloring(3));
    CHECK(pg3.singletons == 7);
    CHECK(pg3.leave_edges == 0);
    CHECK(pg3.colors == 8);

    CHECK_THROWS_AS(f4_accounting(mono(6, 4)), std::invalid_argument);
}

TEST_CASE("f4_accounting flags a broken identity on non-PSTS singletons") {
    // two singleton triples sharing a pair: abc and abd uniquely colored
    std::vector<int> a(static_cast<std::size_t>(choose(4, 3)), 0);
    a[static_cast<std::size_t>(colex_rank({0, 1, 2}))] = 1;
    a[static_cast<std::size_t>(colex_rank({0, 1, 3}))] = 2;
    const auto acc = f4_accounting(build_coloring(4, 3, a));
    CHECK(acc.singletons == 2);
    CHECK_FALSE(acc.singleton_psts);
    CHECK_FALSE(acc.identity_ok);
}

TEST_CASE("check_extremal_structure named cases") {
    const auto ok = check_extremal_structure(build_cancellative_extremal(7, 3));
    REQUIRE(ok.ok);
    CHECK(ok.witness_vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

    const auto no = check_extremal_structure(mono(7, 3));
    CHECK_FALSE(no.ok);
    CHECK(no.conclusive);

    const auto p4 = check_extremal_structure(build_cancellative_extremal(8, 4));
    REQUIRE(p4.ok);
    CHECK(p4.witness_vertices.size() == 8);

    // floor(n/p) = 1: a single edge realizes the shape vacuously
    const auto tiny = check_extremal_structure(mono(5, 3));
    CHECK(tiny.ok);
    CHECK(tiny.witness_vertices.size() == 3);

    // a starved node cap reports inconclusive instead of a false negative
    const auto starved = check_extremal_structure(build_cancellative_extremal(9, 3), 2);
    CHECK_FALSE(starved.ok);
    CHECK_FALSE(starved.conclusive);
}

TEST_CASE("ar formula agrees with proven solver values") {
    for (auto [n, p] : {std::pair{4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
        const auto res = solve_anti_ramsey(n, p, Family::Cancellative);
        REQUIRE(res.status == SolveStatus::Proved);
        REQUIRE(res.value == ar_cancellative_formula(n, p));
    }
}

TEST_CASE("accounting invariants across the construction corpus") {
    std::vector<Coloring> corpus;
    for (int n = 4; n <= 16; ++n) corpus.push_back(build_mpsts_coloring(n));
    for (int n = 4; n <= 16; ++n) corpus.push_back(build_cancellative_extremal(n, 3));
    corpus.push_back(build_pg_coloring(3));
    corpus.push_back(build_pg_coloring(4));
    for (int n = 5; n <= 9; ++n) corpus.push_back(mono(n, 3));

    for (const auto& c : corpus) {
        const auto acc = f4_accounting(c);
        CAPTURE(c.n, c.k);
        REQUIRE(acc.identity_ok);
        REQUIRE(acc.singleton_psts);
        REQUIRE(acc.support_bound_ok);
        REQUIRE(acc.color_bound_ok);
    }
}
