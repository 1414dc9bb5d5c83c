#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperchrome/coloring.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/containment.hpp"
#include "hypergraph_file.hpp"

using namespace hyperchrome;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run sh(const std::string& command) {
    Run run;
    FILE* pipe = popen(("cd " + std::filesystem::temp_directory_path().string() + " && " + command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), got);
    int status = pclose(pipe);
    run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

const std::string bin = HYPERCHROME_CLI_PATH;
const std::string matching3 = "printf 'p h 3 9 3\\ne 1 2 3\\ne 4 5 6\\ne 7 8 9\\n'";

std::string cmd(const std::string& args) { return "env -u HYPERCHROME_SEED -u HYPERCHROME_CACHE " + bin + " " + args; }

json report(const std::string& args) {
    auto run = sh(cmd(args));
    return json::parse(run.out);
}

std::vector<Color> colors_of(const json& cert) { return cert.at("colors").get<std::vector<Color>>(); }

std::vector<Vertex> zero_based(const json& list) {
    std::vector<Vertex> out;
    for (const auto& v : list) out.push_back(v.get<Vertex>() - 1);
    return out;
}

}  // namespace

TEST_CASE("gen writes the file format") {
    auto run = sh(cmd("gen fano"));
    CHECK(run.code == 0);
    CHECK(cli::parse_hypergraph(run.out) == named("fano"));
    CHECK(sh(cmd("gen complete --n 5")).out == cli::serialize_hypergraph(complete(5)));
    CHECK(sh(cmd("gen gq --q 3")).out == cli::serialize_hypergraph(gq(3)));
    CHECK(sh(cmd("gen random --n 8 --m 12 --seed 4")).out == cli::serialize_hypergraph(random_3graph(8, 12, RngSeed{4})));
    CHECK(sh(cmd("gen hypertree --e 4 --seed 2")).out == cli::serialize_hypergraph(random_hypertree(4, RngSeed{2})));
    CHECK(sh(cmd("gen partition --r 3 --t 3")).out == cli::serialize_hypergraph(partition_example(3, 3)));
    CHECK(sh(cmd("gen fq-blowup --m 9 --tau 1 --seed 1")).out ==
          cli::serialize_hypergraph(fq_blowup({9, 1, RngSeed{1}}).graph));
    CHECK(sh(cmd("gen gq --q 2 | " + cmd("gen blow-up --tau 1"))).out ==
          cli::serialize_hypergraph(blow_up(gq(2), 1, RngSeed{0})));
    CHECK(sh(cmd("gen loose-path --l 2")).out == cli::serialize_hypergraph(loose_path(2)));
}

TEST_CASE("chi of the Fano plane with a certificate") {
    auto j = json::parse(sh(cmd("gen fano") + " | " + cmd("chi")).out);
    CHECK(j["command"] == "chi");
    CHECK(j["result"]["chi"] == 3);
    CHECK(j["status"] == "exact");
    CHECK(is_proper(named("fano"), Coloring(colors_of(j["certificate"]), 3)));
    CHECK(j["inputs"][0]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("greedy on K7 uses four colors") {
    auto j = json::parse(sh(cmd("gen complete --n 7") + " | " + cmd("color --algo greedy --order identity")).out);
    CHECK(j["result"]["colors_used"] == 4);
    CHECK(j["result"]["proper"] == true);
    CHECK(is_proper(complete(7), Coloring(colors_of(j["certificate"]), 4)));
}

TEST_CASE("balance of the loose triangle") {
    auto j = json::parse(sh(cmd("gen loose-cycle --l 3") + " | " + cmd("balance")).out);
    CHECK(j["result"]["balance"] == "2/3");
    CHECK(j["result"]["balanced"] == true);
    auto quiet = sh(cmd("gen loose-cycle --l 3") + " | " + cmd("balance --quiet"));
    CHECK(quiet.out == "balance: 2/3\n");
}

TEST_CASE("exit codes") {
    CHECK(sh(cmd("gen fano") + " | " + cmd("kcolor --k 3")).code == 0);
    CHECK(sh(cmd("gen fano") + " | " + cmd("kcolor --k 2")).code == 1);
    CHECK(sh(cmd("gen fano") + " | " + cmd("free --pattern linear_pair")).code == 0);
    CHECK(sh(cmd("gen fano") + " | " + cmd("contains --pattern linear_pair")).code == 1);
    CHECK(sh(cmd("gen loose-cycle --l 3") + " | " + cmd("hyperforest")).code == 1);
    CHECK(sh(cmd("gen loose-path --l 3") + " | " + cmd("hyperforest")).code == 0);
    CHECK(sh("printf 'p h 3 4 1\\ne 1 2 9\\n' | " + cmd("chi")).code == 2);
    CHECK(sh(cmd("nonsense")).code == 2);
    CHECK(sh(cmd("chi /no/such/file")).code == 2);
    CHECK(sh(cmd("gen complete --n 7") + " | " + cmd("color --algo lll --r 3")).code == 1);
    auto pre = json::parse(sh(cmd("gen complete --n 7") + " | " + cmd("color --algo lll --r 3")).out);
    CHECK(pre["status"] == "precondition_failed");
    CHECK(sh(cmd("gen complete --n 5") + " | " + cmd("color --algo dyadic --r 2")).code == 1);
}

TEST_CASE("certificates revalidate") {
    auto fano = named("fano");
    auto c = json::parse(sh(cmd("gen fano") + " | " + cmd("contains --pattern k4_minus")).out);
    CHECK(c["result"]["contains"] == false);

    auto k5 = complete(5);
    auto emb = json::parse(sh(cmd("gen complete --n 5") + " | " + cmd("contains --pattern k4_minus")).out);
    Embedding e;
    e.vertex_map = zero_based(emb["certificate"]["vertex_map"]);
    for (const auto& edge : emb["certificate"]["edges"]) e.edge_map.push_back(*k5.find_edge(zero_based(edge)));
    CHECK(is_valid_embedding(k5, named("k4_minus"), e));

    auto chain = json::parse(sh(cmd("gen complete --n 5") + " | " + cmd("chain --order 5,4,3,2,1")).out);
    OrderedChain oc;
    for (const auto& edge : chain["certificate"]["edges"]) oc.edges.push_back(zero_based(edge));
    CHECK(oc.length() == chain["result"]["greedy_colors"].get<std::size_t>() - 1);
    CHECK(is_ordered_chain(k5, oc, VertexOrder({4, 3, 2, 1, 0})));

    auto alpha = json::parse(sh(cmd("gen fano") + " | " + cmd("alpha")).out);
    CHECK(alpha["result"]["alpha"] == 4);
    CHECK(is_independent(fano, zero_based(alpha["certificate"]["vertices"])));

    auto e288 = json::parse(sh(cmd("gen partition --r 3 --t 3") + " | " + cmd("color --algo e288 --r 2")).out);
    if (e288["certificate"]["type"] == "independent_set")
        CHECK(is_independent(partition_example(3, 3), zero_based(e288["certificate"]["vertices"])));

    auto lll = json::parse(sh(matching3 + " | " + cmd("color --algo lll --r 3 --seed 9")).out);
    CHECK(lll["result"]["lll_check"]["ok"] == true);
    CHECK(is_proper(Hypergraph(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}), Coloring(colors_of(lll["certificate"]), 3)));

    auto layered = json::parse(sh(cmd("gen loose-path --l 4") + " | " + cmd("color --algo layered --theta 2 --per-layer 3")).out);
    CHECK(is_proper(loose_path(4), Coloring(colors_of(layered["certificate"]), layered["result"]["palette"])));

    auto embed = json::parse(sh(cmd("gen complete --n 6") + " | " + cmd("embed-order --pattern linear_pair")).out);
    CHECK(embed["result"]["embedded"] == true);

    auto witness = json::parse(sh(cmd("gen fano") + " | " + cmd("witness --pattern linear_pair --r 2")).out);
    CHECK(witness["result"]["implied_bound"] == 7);
}

TEST_CASE("same command and seed give the same report") {
    auto strip = [](std::string s) {
        auto j = json::parse(s);
        j.erase("wall_time_ms");
        return j.dump();
    };
    const auto a = sh(matching3 + " | " + cmd("color --algo lll --r 3 --seed 17")).out;
    const auto b = sh(matching3 + " | " + cmd("color --algo lll --r 3 --seed 17")).out;
    CHECK(strip(a) == strip(b));
}

TEST_CASE("seed flag beats the environment") {
    const auto env = sh("HYPERCHROME_SEED=5 " + bin + " gen random --n 9 --m 10").out;
    const auto flag = sh("HYPERCHROME_SEED=99 " + bin + " gen random --n 9 --m 10 --seed 5").out;
    CHECK(env == flag);
    CHECK(env == cli::serialize_hypergraph(random_3graph(9, 10, RngSeed{5})));
}

TEST_CASE("extremal commands use the cache") {
    auto path = std::filesystem::temp_directory_path() / "hyperchrome_cli_cache.jsonl";
    std::filesystem::remove(path);
    auto first = report("ex --pattern linear_pair --n 7 --cache " + path.string());
    CHECK(first["result"]["value"] == 7);
    CHECK(first["result"]["cache"]["hit"] == false);
    auto second = json::parse(sh("HYPERCHROME_CACHE=" + path.string() + " " + bin + " ex --pattern linear_pair --n 7").out);
    CHECK(second["result"]["cache"]["hit"] == true);
    CHECK(second["certificate"] == first["certificate"]);

    auto ramsey = report("ramsey --pattern linear_pair --t 3 --cache " + path.string());
    CHECK(ramsey["result"]["value"] == 4);
    CHECK(ramsey["status"] == "exact");
    std::filesystem::remove(path);
}
