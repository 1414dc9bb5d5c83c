#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "hyperchrome/constructions.hpp"
#include "hypergraph_file.hpp"
#include "result_cache.hpp"

using namespace hyperchrome;
using namespace hyperchrome::cli;

TEST_CASE("hypergraph files parse and serialize") {
    auto g = parse_hypergraph("c loose cycle\np h 3 6 3\ne 1 2 3\ne 3 4 5\ne 5 6 1\n");
    CHECK(g == loose_cycle(3));
    CHECK(serialize_hypergraph(g) == "p h 3 6 3\ne 1 2 3\ne 1 5 6\ne 3 4 5\n");

    auto spaced = parse_hypergraph("\n  p h 3 4 1 \r\n c note\n\ne\t3 2 1\n");
    CHECK(spaced == Hypergraph(4, 3, {{0, 1, 2}}));
    CHECK(parse_hypergraph("p h 4 5 1\ne 1 2 3 5\n").uniformity() == 4);
    CHECK(parse_hypergraph("p h 3 0 0\n").num_vertices() == 0);
}

TEST_CASE("malformed files are rejected with a line number") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_hypergraph(text);
        } catch (const FormatError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("e 1 2 3\n") == 1);
    CHECK(line_of("p h 3 4 1\ne 1 2 5\n") == 2);
    CHECK(line_of("p h 3 4 1\ne 1 2\n") == 2);
    CHECK(line_of("p h 3 4 1\ne 1 1 2\n") == 2);
    CHECK(line_of("p h 3 4 2\ne 1 2 3\ne 3 2 1\n") == 3);
    CHECK(line_of("p h 3 4 1\ne 1 2 x\n") == 2);
    CHECK(line_of("p h 3 4 1\nq\n") == 2);
    CHECK(line_of("p h 3 4 2\ne 1 2 3\n") == 0);
    CHECK(line_of("c only comments\n") == 0);
    CHECK(line_of("p h 3 4 1\np h 3 4 1\ne 1 2 3\n") == 2);
    CHECK(line_of("p x 3 4 1\n") == 1);
}

TEST_CASE("serialization round-trips") {
    gen::Source src(3);
    for (int round = 0; round < 100; ++round) {
        auto g = gen::graph(src, src.between(0, 9), 0.3);
        auto text = serialize_hypergraph(g);
        auto back = parse_hypergraph(text);
        CHECK(back == g);
        CHECK(serialize_hypergraph(back) == text);
    }
    auto g3 = gq(3);
    CHECK(parse_hypergraph(serialize_hypergraph(g3)) == g3);
}

TEST_CASE("fnv1a digest") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("pattern keys decode back to the pattern class") {
    for (auto name : named_graphs()) {
        auto g = named(name);
        auto back = pattern_from_key(pattern_key(g));
        REQUIRE(back);
        CHECK(canonical_form(*back) == canonical_form(g));
    }
    CHECK_FALSE(pattern_from_key("zz"));
    CHECK_FALSE(pattern_from_key("0102"));
}

TEST_CASE("result records survive a line round-trip") {
    auto rec = turan_ex(6, named("linear_pair"));
    auto back = record_from_line(record_to_line(rec));
    CHECK(back.kind == rec.kind);
    CHECK(back.key == rec.key);
    CHECK(back.parameter == rec.parameter);
    CHECK(back.value == rec.value);
    CHECK(back.status == rec.status);
    CHECK(back.witness == rec.witness);
}

TEST_CASE("cache stores, reloads and evicts") {
    auto path = std::filesystem::temp_directory_path() / "hyperchrome_cache_test.jsonl";
    std::filesystem::remove(path);
    auto pair = named("linear_pair");
    {
        ResultCache cache(path);
        CHECK(cache.size() == 0);
        CHECK_FALSE(cache.lookup(RecordKind::ex, pair, 6));
        cache.store(turan_ex(6, pair));
        cache.store(ramsey(pair, 3, 8));
        cache.save();
    }
    {
        ResultCache cache(path);
        CHECK(cache.size() == 2);
        CHECK(cache.evicted() == 0);
        auto hit = cache.lookup(RecordKind::ex, pair, 6);
        REQUIRE(hit);
        CHECK(hit->value == 4);
        CHECK(canonical_form(hit->witness) == canonical_form(turan_ex(6, pair).witness));
        CHECK(cache.lookup(RecordKind::ramsey, pair, 3)->value == 4);
        CHECK_FALSE(cache.lookup(RecordKind::ramsey, pair, 4));
    }
    {
        // A corrupt line, a tampered value and a non-free witness are evicted.
        std::ofstream out(path, std::ios::app);
        out << "{not json\n";
        auto bad = turan_ex(5, pair);
        bad.value += 1;
        out << record_to_line(bad) << '\n';
        auto wrong = turan_ex(4, pair);
        wrong.witness = complete(4);
        wrong.value = 4;
        out << record_to_line(wrong) << '\n';
    }
    {
        ResultCache cache(path);
        CHECK(cache.evicted() == 3);
        CHECK(cache.size() == 2);
        CHECK_FALSE(cache.lookup(RecordKind::ex, pair, 5));
        cache.save();
    }
    CHECK(ResultCache(path).evicted() == 0);

    ResultCache cache(path);
    SearchBudget tiny;
    tiny.max_nodes = 2;
    auto partial = turan_ex(6, pair, tiny);
    REQUIRE(partial.status == RecordStatus::lower_bound);
    cache.store(partial);
    CHECK(cache.lookup(RecordKind::ex, pair, 6)->status == RecordStatus::exact);
    std::filesystem::remove(path);
}
