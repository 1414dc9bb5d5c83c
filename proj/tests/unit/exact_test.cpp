#include <doctest.h>

#include "generators.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/exact.hpp"
#include "oracles.hpp"

using namespace hyperchrome;

TEST_CASE("k-colorability examples") {
    CHECK(k_colorable(complete(5), 2).outcome == Outcome::none);
    auto three = k_colorable(complete(5), 3);
    REQUIRE(three.outcome == Outcome::found);
    CHECK(is_proper(complete(5), *three.coloring));
    CHECK(k_colorable(named("fano"), 2).outcome == Outcome::none);
    auto c3 = k_colorable(loose_cycle(3), 2);
    REQUIRE(c3.outcome == Outcome::found);
    CHECK(is_proper(loose_cycle(3), *c3.coloring));
}

TEST_CASE("chromatic number examples") {
    for (std::size_t r = 1; r <= 3; ++r) CHECK(chromatic_number(complete(2 * r + 1)).chi == std::optional(r + 1));
    auto fano = chromatic_number(named("fano"));
    CHECK(fano.chi == std::optional<std::size_t>(3));
    CHECK(is_proper(named("fano"), *fano.coloring));
    CHECK(chromatic_number(Hypergraph::empty(4)).chi == std::optional<std::size_t>(1));
    CHECK(chromatic_number(Hypergraph::empty(0)).chi == std::optional<std::size_t>(1));
}

TEST_CASE("independence number examples") {
    for (std::size_t n = 3; n <= 8; ++n) CHECK(max_independent_set(complete(n)).vertices.size() == 2);
    CHECK(max_independent_set(loose_cycle(3)).vertices.size() == 4);
    CHECK(max_independent_set(named("fano")).vertices.size() == 4);
}

TEST_CASE("budgets produce an exhausted outcome") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK(k_colorable(complete(9), 4, tiny).outcome == Outcome::exhausted);
    auto chi = chromatic_number(complete(9), tiny);
    CHECK_FALSE(chi.chi);
    auto mis = max_independent_set(complete(12), tiny);
    CHECK(mis.exhausted);
    CHECK(is_independent(complete(12), mis.vertices));
}

TEST_CASE("exact solvers agree with exhaustive enumeration") {
    gen::Source src(99);
    for (int round = 0; round < 120; ++round) {
        auto g = gen::graph(src, src.between(3, 8), src.chance(0.5) ? 0.3 : 0.6);
        auto chi = chromatic_number(g);
        REQUIRE(chi.chi);
        CHECK(*chi.chi == oracle::chromatic_number(g));
        CHECK(is_proper(g, *chi.coloring));
        auto mis = max_independent_set(g);
        CHECK(mis.vertices.size() == oracle::independence_number(g));
        CHECK(is_independent(g, mis.vertices));
    }
}

TEST_CASE("solver invariants") {
    gen::Source src(7);
    for (int round = 0; round < 80; ++round) {
        const std::size_t n = src.between(4, 12);
        auto g = gen::graph(src, n, 0.35);
        auto chi = *chromatic_number(g).chi;
        auto mis = max_independent_set(g).vertices;
        const auto covered = g.covered_vertices().size();
        CHECK(chi * mis.size() >= covered);

        for (std::size_t k = 1; k < chi; ++k) CHECK(k_colorable(g, k).outcome == Outcome::none);

        for (Vertex v = 0; v < n; ++v) {
            if (std::find(mis.begin(), mis.end(), v) != mis.end()) continue;
            auto bigger = mis;
            bigger.push_back(v);
            CHECK_FALSE(is_independent(g, bigger));
        }

        if (g.num_edges() > 0) {
            auto edges = g.edge_list();
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(src.below(edges.size())));
            Hypergraph smaller(n, 3, edges);
            CHECK(*chromatic_number(smaller).chi <= chi);
            CHECK(max_independent_set(smaller).vertices.size() >= mis.size());
        }
    }
}

TEST_CASE("independence oracle up to sixteen vertices") {
    gen::Source src(16);
    for (int round = 0; round < 6; ++round) {
        auto g = gen::graph(src, 16, 0.05);
        CHECK(max_independent_set(g).vertices.size() == oracle::independence_number(g));
    }
}
