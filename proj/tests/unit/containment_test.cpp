#include <doctest.h>

#include "generators.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/containment.hpp"
#include "oracles.hpp"

using namespace hyperchrome;

TEST_CASE("containment examples") {
    auto k4_in_k4 = contains(named("k4"), named("k4_minus"));
    REQUIRE(k4_in_k4);
    CHECK(is_valid_embedding(named("k4"), named("k4_minus"), *k4_in_k4));

    auto c3 = contains(named("fano"), loose_cycle(3));
    REQUIRE(c3);
    CHECK(is_valid_embedding(named("fano"), loose_cycle(3), *c3));
    CHECK_FALSE(contains(named("fano"), named("linear_pair")));

    CHECK(is_free(gq(2), loose_cycle(3)));
    CHECK(is_free(named("fano"), named("linear_pair")));
    CHECK_FALSE(is_free(complete(7), named("sunflower7")));
    CHECK_THROWS_AS(contains(gq(3), loose_cycle(3)), std::invalid_argument);
}

TEST_CASE("pattern with more vertices than the host") {
    CHECK(is_free(complete(5), named("sunflower7")));
    CHECK(contains(complete(3), Hypergraph::empty(3)));
    CHECK_FALSE(contains(complete(3), Hypergraph::empty(4)));
}

TEST_CASE("through_edge restricts to copies using that edge") {
    Hypergraph g(7, 3, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}});
    auto pair = named("linear_pair");
    CHECK(contains(g, pair, 0));
    CHECK(contains(g, pair, 1));
    CHECK_FALSE(contains(g, pair, 2));
    auto emb = contains(g, pair, 1);
    REQUIRE(emb);
    CHECK(std::find(emb->edge_map.begin(), emb->edge_map.end(), 1) != emb->edge_map.end());
}

TEST_CASE("containment agrees with injection enumeration") {
    gen::Source src(2024);
    for (int round = 0; round < 300; ++round) {
        auto host = gen::graph(src, src.between(3, 8), src.chance(0.5) ? 0.2 : 0.45);
        auto pattern = gen::graph(src, src.between(3, 5), 0.35);
        auto emb = contains(host, pattern);
        CHECK(emb.has_value() == oracle::contains(host, pattern));
        if (emb) CHECK(is_valid_embedding(host, pattern, *emb));
    }
}

TEST_CASE("containment is monotone and hereditary") {
    gen::Source src(31);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = src.between(5, 8);
        auto g = gen::graph(src, n, 0.2);
        auto h = gen::graph(src, src.between(3, 5), 0.4);
        auto extra = g.edge_list();
        for (auto& t : gen::triples(n))
            if (src.chance(0.1)) extra.push_back(t);
        Hypergraph bigger(n, 3, extra);
        if (contains(g, h)) CHECK(contains(bigger, h));
        if (is_free(g, h)) {
            std::vector<Vertex> subset;
            for (Vertex v = 0; v < n; ++v)
                if (src.chance(0.6)) subset.push_back(v);
            CHECK(is_free(induced(g, subset).graph, h));
        }
    }
}

TEST_CASE("linear hosts never contain two edges sharing a pair") {
    CHECK(is_free(gq(2), named("linear_pair")));
    CHECK(is_free(loose_cycle(5), named("linear_pair")));
    CHECK(is_free(named("sunflower7"), named("linear_pair")));
}

TEST_CASE("embedding validation rejects broken maps") {
    auto host = complete(4);
    auto pattern = named("linear_pair");
    auto emb = *contains(host, pattern);
    auto bad = emb;
    bad.vertex_map[0] = bad.vertex_map[1];
    CHECK_FALSE(is_valid_embedding(host, pattern, bad));
    bad = emb;
    std::swap(bad.edge_map[0], bad.edge_map[1]);
    CHECK_FALSE(is_valid_embedding(host, pattern, bad));
}
