#include <doctest.h>

#include "generators.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/hypergraph.hpp"
#include "oracles.hpp"

using namespace hyperchrome;

TEST_CASE("construction normalizes and validates edges") {
    Hypergraph c3(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    CHECK(c3 == loose_cycle(3));
    CHECK(Hypergraph(3, 3, {}).num_edges() == 0);
    CHECK(Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}).num_edges() == 1);

    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("degree counts incident edges") {
    auto k5 = complete(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(k5.degree(v) == 6);
    auto c3 = loose_cycle(3);
    CHECK(c3.degree(2) == 2);
    CHECK(c3.degree(1) == 1);
    auto e = Hypergraph::empty(4);
    CHECK(e.degree(3) == 0);
    CHECK(e.max_degree() == 0);
}

TEST_CASE("induced subgraph keeps inner edges and the relabeling") {
    std::vector<Vertex> four{0, 2, 3, 4};
    auto sub = induced(complete(5), four);
    CHECK(sub.graph == complete(4));
    CHECK(sub.to_parent == four);

    std::vector<Vertex> edge{2, 3, 4};
    auto one = induced(loose_cycle(3), edge);
    CHECK(one.graph.num_edges() == 1);
    CHECK(one.graph.num_vertices() == 3);

    auto none = induced(complete(5), std::span<const Vertex>{});
    CHECK(none.graph.num_vertices() == 0);
    CHECK(none.graph.num_edges() == 0);
}

TEST_CASE("proper colorings and monochromatic witnesses") {
    Hypergraph e(3, 3, {{0, 1, 2}});
    CHECK(is_proper(e, Coloring({0, 0, 1}, 2)));
    CHECK_FALSE(is_proper(e, Coloring({0, 0, 0}, 1)));
    CHECK(monochromatic_edge(e, Coloring({0, 0, 0}, 1)) == std::optional<std::size_t>(0));

    auto fano = named("fano");
    for (unsigned mask = 0; mask < 128; ++mask) {
        std::vector<Color> colors;
        for (unsigned v = 0; v < 7; ++v) colors.push_back((mask >> v) & 1);
        CHECK_FALSE(is_proper(fano, Coloring(colors, 2)));
    }
    CHECK_THROWS_AS(Coloring({0, 3}, 2), std::invalid_argument);
}

TEST_CASE("linearity") {
    CHECK(is_linear(named("fano")));
    CHECK_FALSE(is_linear(named("linear_pair")));
    CHECK(is_linear(Hypergraph::empty(5)));
}

TEST_CASE("hyperforests are incidence-acyclic") {
    CHECK(is_hyperforest(loose_path(3)));
    CHECK_FALSE(is_hyperforest(loose_cycle(3)));
    CHECK_FALSE(is_hyperforest(named("linear_pair")));
    CHECK(is_hyperforest(Hypergraph::empty(3)));
}

TEST_CASE("balance values") {
    auto c3 = balance(loose_cycle(3));
    CHECK(c3.value == Rational(2, 3));
    CHECK(c3.is_balanced);

    auto k4 = balance(named("k4"));
    CHECK(k4.value == Rational(3, 1));
    CHECK(k4.is_balanced);
    CHECK(k4.witness.size() == 4);

    CHECK(balance(named("linear_pair")).value == Rational(1, 1));
    CHECK_THROWS_AS(balance(loose_path(1)), std::invalid_argument);

    for (std::size_t l = 3; l <= 6; ++l) CHECK(balance(loose_cycle(l)).value == Rational(l - 1, 2 * l - 3));
}

TEST_CASE("balance matches subset enumeration and its own witness") {
    gen::Source src(11);
    for (int round = 0; round < 60; ++round) {
        auto g = gen::graph(src, src.between(4, 7), 0.25);
        if (g.num_edges() < 2 || g.num_edges() > 10) continue;
        auto b = balance(g);
        auto [num, den] = oracle::balance(g);
        CHECK(b.value == Rational(num, den));

        std::vector<Vertex> verts;
        for (auto ei : b.witness)
            for (Vertex v : g.edge(ei)) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        CHECK(Rational(static_cast<std::int64_t>(b.witness.size()) - 1, static_cast<std::int64_t>(verts.size()) - 3) ==
              b.value);
        CHECK(b.is_balanced == (b.value == Rational(static_cast<std::int64_t>(g.num_edges()) - 1,
                                                    static_cast<std::int64_t>(g.covered_vertices().size()) - 3)));
    }
}

TEST_CASE("ordered chain predicate") {
    auto p2 = loose_path(2);
    OrderedChain chain{{{0, 1, 2}, {2, 3, 4}}};
    CHECK(is_ordered_chain(p2, chain, VertexOrder::identity(5)));
    CHECK_FALSE(is_ordered_chain(p2, chain, VertexOrder::identity(5).reversed()));

    Hypergraph overlap(4, 3, {{0, 1, 2}, {1, 2, 3}});
    CHECK_FALSE(is_ordered_chain(overlap, OrderedChain{{{0, 1, 2}, {1, 2, 3}}}, VertexOrder::identity(4)));
}

TEST_CASE("vertex orders are permutations with inverse") {
    VertexOrder o({2, 0, 1});
    CHECK(o.position(2) == 0);
    CHECK(o.at(2) == 1);
    CHECK(o.reversed().order() == std::vector<Vertex>{1, 0, 2});
    CHECK_THROWS_AS(VertexOrder({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("canonical form identifies isomorphism classes") {
    auto c3 = loose_cycle(3);
    gen::Source src(5);
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(gen::relabel(c3, gen::permutation(src, 6))) == canonical_form(c3));
    CHECK(canonical_form(loose_cycle(3)) != canonical_form(loose_path(3)));
    CHECK(canonical_form(Hypergraph::empty(5)) == canonical_form(Hypergraph::empty(5)));
    CHECK(canonical_form(Hypergraph::empty(5)) != canonical_form(Hypergraph::empty(6)));
}

TEST_CASE("canonical form agrees with the permutation oracle") {
    gen::Source src(77);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = src.between(3, 6);
        auto a = gen::graph(src, n, 0.3);
        auto b = src.chance(0.5) ? gen::relabel(a, gen::permutation(src, n)) : gen::graph(src, n, 0.3);
        CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("canonical form on repeated components agrees with the oracle") {
    gen::Source src(101);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = src.between(3, 4);
        auto piece = gen::graph(src, n, 0.6);
        auto a = gen::disjoint_union(piece, piece);
        auto b = src.chance(0.5) ? gen::relabel(a, gen::permutation(src, 2 * n))
                                 : gen::disjoint_union(piece, gen::graph(src, n, 0.6));
        CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("canonical form handles highly symmetric graphs") {
    gen::Source src(3);
    for (auto g : {complete(6), named("fano"), gq(2), partition_example(3, 3)}) {
        auto h = gen::relabel(g, gen::permutation(src, g.num_vertices()));
        CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK(canonical_form(gq(2)) != canonical_form(loose_cycle(3)));
}

TEST_CASE("hyperforests are linear and count their components") {
    gen::Source src(9);
    for (int round = 0; round < 100; ++round) {
        auto g = gen::graph(src, src.between(3, 8), 0.08);
        CHECK(is_hyperforest(g) == oracle::hyperforest(g));
        if (is_hyperforest(g)) CHECK(is_linear(g));
    }
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto a = random_hypertree(1 + s % 5, RngSeed{s});
        auto b = random_hypertree(1 + (s * 7) % 4, RngSeed{s + 100});
        auto forest = gen::disjoint_union(a, b);
        REQUIRE(is_hyperforest(forest));
        CHECK(forest.covered_vertices().size() == 2 * forest.num_edges() + 2);
    }
}
