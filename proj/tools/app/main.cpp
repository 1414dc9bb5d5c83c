#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperchrome/coloring.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/containment.hpp"
#include "hyperchrome/exact.hpp"
#include "hyperchrome/extremal.hpp"
#include "hyperchrome/hypergraph.hpp"
#include "hypergraph_file.hpp"
#include "result_cache.hpp"

namespace hc = hyperchrome;
namespace cli = hyperchrome::cli;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::uint64_t> budget_ms;
    bool quiet = false;
};

struct Loaded {
    hc::Hypergraph graph;
    json info;
};

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string hex64(std::uint64_t x) {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << x;
    return out.str();
}

Loaded load_text(const std::string& text, const std::string& source) {
    Loaded l{cli::parse_hypergraph(text), {}};
    l.info = {{"source", source},
              {"digest", "fnv1a64:" + hex64(cli::fnv1a64(text))},
              {"n", l.graph.num_vertices()},
              {"k", l.graph.uniformity()},
              {"m", l.graph.num_edges()}};
    return l;
}

Loaded load_input(const std::string& path) {
    if (path.empty() || path == "-") return load_text(read_all(std::cin), "stdin");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return load_text(read_all(in), path);
}

// A named graph or a file path.
Loaded load_pattern(const std::string& spec) {
    for (auto name : hc::named_graphs())
        if (spec == name) {
            auto g = hc::named(name);
            auto text = cli::serialize_hypergraph(g);
            return load_text(text, "named:" + spec);
        }
    if (spec.empty()) throw UsageError("--pattern is required");
    return load_input(spec);
}

json vertices_json(std::span<const hc::Vertex> vs) {
    json out = json::array();
    for (auto v : vs) out.push_back(v + 1);
    return out;
}

json edges_json(const std::vector<std::vector<hc::Vertex>>& edges) {
    json out = json::array();
    for (const auto& e : edges) out.push_back(vertices_json(e));
    return out;
}

json coloring_certificate(const hc::Coloring& c) {
    return {{"type", "coloring"}, {"palette", c.palette}, {"colors", c.colors}};
}

json embedding_certificate(const hc::Hypergraph& host, const hc::Embedding& emb) {
    std::vector<std::vector<hc::Vertex>> images;
    for (auto ei : emb.edge_map) images.emplace_back(host.edge(ei).begin(), host.edge(ei).end());
    return {{"type", "embedding"}, {"vertex_map", vertices_json(emb.vertex_map)}, {"edges", edges_json(images)}};
}

json chain_certificate(const hc::OrderedChain& chain) {
    return {{"type", "ordered_chain"}, {"edges", edges_json(chain.edges)}};
}

json independent_certificate(std::span<const hc::Vertex> vs) {
    return {{"type", "independent_set"}, {"vertices", vertices_json(vs)}};
}

std::string rational_string(const hc::Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

hc::VertexOrder parse_order(const std::string& spec, std::size_t n, std::uint64_t seed) {
    if (spec.empty() || spec == "identity") return hc::VertexOrder::identity(n);
    if (spec == "reverse") return hc::VertexOrder::identity(n).reversed();
    if (spec == "random") {
        std::vector<hc::Vertex> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<hc::Vertex>(i);
        hc::Rng rng(hc::RngSeed{seed});
        rng.shuffle(std::span<hc::Vertex>(order));
        return hc::VertexOrder(order);
    }
    std::vector<hc::Vertex> order;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            auto v = std::stoull(item);
            if (v < 1 || v > n) throw UsageError("order entry out of range: " + item);
            order.push_back(static_cast<hc::Vertex>(v - 1));
        } catch (const std::logic_error&) {
            throw UsageError("bad order entry '" + item + "'");
        }
    }
    try {
        return hc::VertexOrder(order);
    } catch (const std::invalid_argument&) {
        throw UsageError("--order must be a permutation of 1.." + std::to_string(n));
    }
}

class Runner {
  public:
    Runner(std::string command, const Globals& globals) : command_(std::move(command)), globals_(globals) {
        if (globals.seed) {
            seed_ = *globals.seed;
        } else if (const char* env = std::getenv("HYPERCHROME_SEED"); env && *env) {
            try {
                seed_ = std::stoull(env, nullptr, 0);
            } catch (const std::logic_error&) {
                throw UsageError("HYPERCHROME_SEED is not a 64-bit integer");
            }
        }
        if (globals.budget_nodes) budget_.max_nodes = *globals.budget_nodes;
        if (globals.budget_ms) budget_.max_millis = *globals.budget_ms;
    }

    std::uint64_t seed() const { return seed_; }
    const hc::SearchBudget& budget() const { return budget_; }

    void input(const Loaded& l) { inputs_.push_back(l.info); }
    json& parameters() { return parameters_; }
    json& result() { return result_; }
    void certificate(json c) { certificate_ = std::move(c); }
    void status(std::string s) { status_ = std::move(s); }
    void summary(std::string s) { summary_ = std::move(s); }

    int finish(int code) {
        if (globals_.quiet) {
            std::cout << command_ << ": " << (summary_.empty() ? status_ : summary_) << '\n';
            return code;
        }
        json report{{"command", command_},
                    {"inputs", inputs_},
                    {"parameters", parameters_},
                    {"seed", seed_},
                    {"result", result_},
                    {"status", status_},
                    {"certificate", certificate_},
                    {"wall_time_ms", std::chrono::duration<double, std::milli>(clock::now() - start_).count()}};
        std::cout << report.dump(2) << '\n';
        return code;
    }

  private:
    using clock = std::chrono::steady_clock;
    std::string command_;
    Globals globals_;
    std::uint64_t seed_ = 0;
    hc::SearchBudget budget_;
    json inputs_ = json::array();
    json parameters_ = json::object();
    json result_ = json::object();
    json certificate_ = nullptr;
    std::string status_ = "exact";
    std::string summary_;
    clock::time_point start_ = clock::now();
};

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 0, m = 0, l = 0, r = 0, t = 0, q = 0, tau = 1, e = 0;
    std::string input;
    std::string out;
};

int run_gen(const GenArgs& a, const Globals& globals) {
    Runner run("gen", globals);
    const hc::RngSeed seed{run.seed()};
    hc::Hypergraph g;
    json extra = json::object();
    const auto& f = a.family;
    if (f == "complete") g = hc::complete(a.n);
    else if (f == "loose-cycle") g = hc::loose_cycle(a.l);
    else if (f == "loose-path") g = hc::loose_path(a.l);
    else if (f == "partition") g = hc::partition_example(a.r, a.t);
    else if (f == "gq") g = hc::gq(a.q);
    else if (f == "fq-blowup") {
        auto b = hc::fq_blowup({a.m, a.tau, seed});
        g = b.graph;
        std::vector<std::vector<hc::Vertex>> s(b.s.begin(), b.s.end()), t(b.t.begin(), b.t.end());
        extra = {{"grid", vertices_json(b.grid)}, {"s", edges_json(s)}, {"t", edges_json(t)}};
    } else if (f == "blow-up") {
        auto base = load_input(a.input);
        run.input(base);
        g = hc::blow_up(base.graph, a.tau, seed);
    } else if (f == "random") g = hc::random_3graph(a.n, a.m, seed);
    else if (f == "hypertree") g = hc::random_hypertree(a.e, seed);
    else g = hc::named(f);

    const auto text = cli::serialize_hypergraph(g);
    if (a.out.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw UsageError("cannot write " + a.out);
    run.parameters() = {{"family", f}, {"out", a.out}};
    run.result() = {{"n", g.num_vertices()}, {"k", g.uniformity()}, {"m", g.num_edges()},
                    {"digest", "fnv1a64:" + hex64(cli::fnv1a64(text))}};
    if (!extra.empty()) run.result()["parts"] = extra;
    run.summary(std::to_string(g.num_edges()) + " edges written to " + a.out);
    return run.finish(kOk);
}

int run_chi(const std::string& input, const Globals& globals) {
    Runner run("chi", globals);
    auto in = load_input(input);
    run.input(in);
    auto r = hc::chromatic_number(in.graph, run.budget());
    run.result() = {{"chi", r.chi ? json(*r.chi) : json(nullptr)}, {"lower_bound", r.lower_bound}, {"nodes", r.nodes}};
    if (!r.chi) {
        run.status("exhausted");
        run.summary("budget exhausted, chi >= " + std::to_string(r.lower_bound));
        return run.finish(kNegative);
    }
    run.certificate(coloring_certificate(*r.coloring));
    run.summary("chi = " + std::to_string(*r.chi));
    return run.finish(kOk);
}

int run_alpha(const std::string& input, const Globals& globals) {
    Runner run("alpha", globals);
    auto in = load_input(input);
    run.input(in);
    auto r = hc::max_independent_set(in.graph, run.budget());
    run.result() = {{"alpha", r.vertices.size()}, {"nodes", r.nodes}};
    run.certificate(independent_certificate(r.vertices));
    if (r.exhausted) {
        run.status("exhausted");
        run.result()["alpha"] = nullptr;
        run.result()["best_found"] = r.vertices.size();
        run.summary("budget exhausted, alpha >= " + std::to_string(r.vertices.size()));
        return run.finish(kNegative);
    }
    run.summary("alpha = " + std::to_string(r.vertices.size()));
    return run.finish(kOk);
}

int run_kcolor(const std::string& input, std::size_t k, const Globals& globals) {
    Runner run("kcolor", globals);
    auto in = load_input(input);
    run.input(in);
    run.parameters() = {{"k", k}};
    auto r = hc::k_colorable(in.graph, k, run.budget());
    run.result() = {{"nodes", r.nodes}};
    switch (r.outcome) {
        case hc::Outcome::found:
            run.result()["colorable"] = true;
            run.certificate(coloring_certificate(*r.coloring));
            run.summary(std::to_string(k) + "-colorable");
            return run.finish(kOk);
        case hc::Outcome::none:
            run.result()["colorable"] = false;
            run.summary("not " + std::to_string(k) + "-colorable");
            return run.finish(kNegative);
        case hc::Outcome::exhausted:
            break;
    }
    run.result()["colorable"] = nullptr;
    run.status("exhausted");
    run.summary("budget exhausted");
    return run.finish(kNegative);
}

struct ColorArgs {
    std::string input;
    std::string algo = "greedy";
    std::string order;
    std::optional<std::size_t> r;
    std::size_t theta = 0;
    std::size_t per_layer = 0;
};

int run_color(const ColorArgs& a, const Globals& globals) {
    Runner run("color", globals);
    auto in = load_input(a.input);
    run.input(in);
    const auto& g = in.graph;
    const hc::RngSeed seed{run.seed()};
    run.parameters() = {{"algo", a.algo}};
    if (a.r) run.parameters()["r"] = *a.r;
    auto need_r = [&]() {
        if (!a.r || *a.r == 0) throw UsageError("--r is required for --algo " + a.algo);
        return *a.r;
    };
    auto colored = [&](const hc::Coloring& c) {
        run.result()["colors_used"] = c.colors_used();
        run.result()["palette"] = c.palette;
        run.result()["proper"] = hc::is_proper(g, c);
        run.certificate(coloring_certificate(c));
        run.summary("proper coloring with " + std::to_string(c.colors_used()) + " colors");
        return run.finish(kOk);
    };
    auto failed = [&](const std::string& reason) {
        run.status("failed");
        run.result()["failure"] = reason;
        run.summary("failed: " + reason);
        return run.finish(kNegative);
    };

    try {
        if (a.algo == "greedy" || a.algo == "e288") {
            auto order = parse_order(a.order, g.num_vertices(), run.seed());
            run.parameters()["order"] = vertices_json(order.order());
            if (a.algo == "e288") {
                auto out = hc::e288_extract(g, order, need_r());
                if (auto* c = std::get_if<hc::Coloring>(&out)) return colored(*c);
                if (auto* s = std::get_if<hc::IndependentSet>(&out)) {
                    run.result()["independent_set_size"] = s->vertices.size();
                    run.certificate(independent_certificate(s->vertices));
                    run.summary("greedy failed; independent set of size " + std::to_string(s->vertices.size()));
                    return run.finish(kOk);
                }
                const auto& cert = std::get<hc::SunflowerCertificate>(out);
                run.certificate(embedding_certificate(g, cert.embedding));
                return failed("graph contains sunflower7");
            }
            auto out = hc::greedy_pluhar(g, order, a.r);
            if (auto* trace = std::get_if<hc::GreedyTrace>(&out)) return colored(trace->coloring);
            const auto& fail = std::get<hc::GreedyFailure>(out);
            run.certificate(chain_certificate(hc::failure_chain(g, order, fail)));
            run.result()["failed_at"] = fail.vertex + 1;
            return failed("palette cap reached");
        }
        if (a.algo == "lll") {
            auto report = hc::lll_check(g, need_r());
            run.result()["lll_check"] = {{"ok", report.ok},
                                         {"max_degree", report.max_degree},
                                         {"p", rational_string(report.p)},
                                         {"d", report.d},
                                         {"e_p_d1", report.e_p_d1}};
            auto out = hc::lll_color(g, *a.r, seed);
            if (auto* c = std::get_if<hc::LllColoring>(&out)) {
                run.result()["resamples"] = c->resamples;
                return colored(c->coloring);
            }
            run.result()["resamples"] = std::get<hc::ResampleCapExceeded>(out).resamples;
            return failed("resample cap exceeded");
        }
        if (a.algo == "layered") {
            if (a.theta == 0 || a.per_layer == 0) throw UsageError("--theta and --per-layer are required");
            run.parameters()["theta"] = a.theta;
            run.parameters()["per_layer"] = a.per_layer;
            auto out = hc::layered_color(g, a.theta, a.per_layer, seed);
            if (auto* c = std::get_if<hc::LayeredColoring>(&out)) {
                json layers = json::array();
                for (const auto& layer : c->decomposition.layers) layers.push_back(vertices_json(layer));
                run.result()["layers"] = layers;
                run.result()["resamples"] = c->resamples;
                return colored(c->coloring);
            }
            const auto& f = std::get<hc::LayeredFailure>(out);
            run.result()["layer"] = f.layer;
            return failed(hc::to_string(f.reason));
        }
        if (a.algo == "dyadic") {
            auto out = hc::independent_removal_color(g, need_r(), seed, run.budget());
            if (auto* c = std::get_if<hc::RemovalColoring>(&out)) {
                json steps = json::array();
                for (const auto& s : c->steps)
                    steps.push_back({{"class", s.dyadic_class}, {"vertices", vertices_json(s.vertices)}, {"exact", s.exact}});
                run.result()["steps"] = steps;
                run.result()["resamples"] = c->resamples;
                return colored(c->coloring);
            }
            const auto& f = std::get<hc::RemovalFailure>(out);
            run.result()["step"] = f.step;
            run.result()["uncolored"] = f.uncolored;
            if (f.reason == hc::RemovalFailure::Reason::budget_exhausted) run.status("exhausted");
            return failed(hc::to_string(f.reason));
        }
    } catch (const hc::PreconditionError& e) {
        run.status("precondition_failed");
        run.result()["error"] = e.what();
        run.summary(std::string("precondition failed: ") + e.what());
        return run.finish(kNegative);
    }
    throw UsageError("unknown --algo '" + a.algo + "'");
}

int run_contains(const std::string& input, const std::string& pattern, bool want_free, const Globals& globals) {
    Runner run(want_free ? "free" : "contains", globals);
    auto host = load_input(input);
    auto pat = load_pattern(pattern);
    run.input(host);
    run.input(pat);
    if (host.graph.uniformity() != pat.graph.uniformity()) throw UsageError("host and pattern uniformities differ");
    auto emb = hc::contains(host.graph, pat.graph);
    run.result() = {{"contains", emb.has_value()}, {"free", !emb.has_value()}};
    if (emb) run.certificate(embedding_certificate(host.graph, *emb));
    run.summary(emb ? "copy found" : "pattern-free");
    return run.finish(emb.has_value() != want_free ? kOk : kNegative);
}

int run_chain(const std::string& input, const std::string& order_spec, const Globals& globals) {
    Runner run("chain", globals);
    auto in = load_input(input);
    run.input(in);
    const auto& g = in.graph;
    auto order = parse_order(order_spec, g.num_vertices(), run.seed());
    run.parameters() = {{"order", vertices_json(order.order())}};
    const auto greedy = hc::greedy_pluhar(g, order);
    const auto& trace = std::get<hc::GreedyTrace>(greedy);
    const auto colors = trace.coloring.colors_used();
    run.result() = {{"greedy_colors", colors}};
    if (colors < 2) {
        run.result()["chain_length"] = 0;
        run.certificate({{"type", "ordered_chain"}, {"edges", json::array()}});
        run.summary("greedy uses " + std::to_string(colors) + " color(s); empty chain");
        return run.finish(kOk);
    }
    auto chain = hc::extract_chain(g, order, trace);
    run.result()["chain_length"] = chain.length();
    run.result()["valid"] = hc::is_ordered_chain(g, chain, order);
    run.certificate(chain_certificate(chain));
    run.summary("greedy uses " + std::to_string(colors) + " colors; ordered " + std::to_string(chain.length()) + "-chain");
    return run.finish(kOk);
}

int run_extremal(bool is_ex, const std::string& pattern, std::size_t param, std::size_t n_max,
                 const std::string& cache_flag, const Globals& globals) {
    Runner run(is_ex ? "ex" : "ramsey", globals);
    auto pat = load_pattern(pattern);
    run.input(pat);
    if (pat.graph.uniformity() != 3) throw UsageError("pattern must be a 3-graph");
    run.parameters() = is_ex ? json{{"n", param}} : json{{"t", param}, {"n_max", n_max}};

    std::string cache_path = cache_flag;
    if (cache_path.empty())
        if (const char* env = std::getenv("HYPERCHROME_CACHE"); env && *env) cache_path = env;

    std::optional<cli::ResultCache> cache;
    if (!cache_path.empty()) cache.emplace(cache_path);
    const auto kind = is_ex ? hc::RecordKind::ex : hc::RecordKind::ramsey;

    std::optional<hc::ResultRecord> record;
    bool from_cache = false;
    if (cache) {
        record = cache->lookup(kind, pat.graph, param);
        from_cache = record.has_value();
    }
    if (!record) {
        record = is_ex ? hc::turan_ex(param, pat.graph, run.budget())
                       : hc::ramsey(pat.graph, param, n_max, run.budget());
        if (cache) {
            cache->store(*record);
            cache->save();
        }
    }
    run.result() = {{"value", record->value}, {"key", record->key}, {"nodes", record->nodes}};
    if (cache) run.result()["cache"] = {{"hit", from_cache}, {"evicted", cache->evicted()}};
    run.status(hc::to_string(record->status));
    run.certificate({{"type", "witness"},
                     {"n", record->witness.num_vertices()},
                     {"edges", edges_json(record->witness.edge_list())}});
    const std::string what = is_ex ? "ex(" + std::to_string(param) + ", H)" : "R(H, K_" + std::to_string(param) + ")";
    run.summary(what + (record->status == hc::RecordStatus::exact ? " = " : " >= ") + std::to_string(record->value));
    return run.finish(kOk);
}

int run_balance(const std::string& input, const Globals& globals) {
    Runner run("balance", globals);
    auto in = load_input(input);
    run.input(in);
    try {
        auto b = hc::balance(in.graph);
        std::vector<std::vector<hc::Vertex>> witness;
        for (auto ei : b.witness) witness.emplace_back(in.graph.edge(ei).begin(), in.graph.edge(ei).end());
        run.result() = {{"balance", rational_string(b.value)}, {"balanced", b.is_balanced}};
        run.certificate({{"type", "subgraph"}, {"edges", edges_json(witness)}});
        run.summary(rational_string(b.value));
        return run.finish(kOk);
    } catch (const std::invalid_argument& e) {
        run.status("precondition_failed");
        run.result() = {{"error", e.what()}};
        run.summary(std::string("precondition failed: ") + e.what());
        return run.finish(kNegative);
    }
}

int run_hyperforest(const std::string& input, const Globals& globals) {
    Runner run("hyperforest", globals);
    auto in = load_input(input);
    run.input(in);
    const bool forest = hc::is_hyperforest(in.graph);
    run.result() = {{"hyperforest", forest}};
    run.summary(forest ? "hyperforest" : "not a hyperforest");
    return run.finish(forest ? kOk : kNegative);
}

int run_witness(const std::string& input, const std::string& pattern, std::size_t r, const Globals& globals) {
    Runner run("witness", globals);
    auto in = load_input(input);
    auto pat = load_pattern(pattern);
    run.input(in);
    run.input(pat);
    run.parameters() = {{"r", r}};
    if (in.graph.uniformity() != pat.graph.uniformity()) throw UsageError("host and pattern uniformities differ");
    auto w = hc::verify_witness(in.graph, pat.graph, r, run.budget());
    run.result() = {{"h_free", w.h_free},
                    {"chi", w.chi ? json(*w.chi) : json(nullptr)},
                    {"chi_exceeds_r", w.chi_exceeds_r},
                    {"edges", w.edge_count},
                    {"implied_bound", w.implied_bound ? json(*w.implied_bound) : json(nullptr)}};
    if (!w.chi) run.status("exhausted");
    if (w.copy) run.certificate(embedding_certificate(in.graph, *w.copy));
    else if (w.coloring) run.certificate(coloring_certificate(*w.coloring));
    const bool ok = w.implied_bound.has_value();
    run.summary(ok ? "m_H(" + std::to_string(r) + ") <= " + std::to_string(w.edge_count) : "not a witness");
    return run.finish(ok ? kOk : kNegative);
}

int run_embed_order(const std::string& input, const std::string& pattern, const Globals& globals) {
    Runner run("embed-order", globals);
    auto in = load_input(input);
    auto pat = load_pattern(pattern);
    run.input(in);
    run.input(pat);
    try {
        auto ordering = hc::find_edge_ordering(pat.graph);
        if (!ordering) {
            run.result() = {{"ordering", nullptr}};
            run.summary("pattern has no edge ordering");
            return run.finish(kNegative);
        }
        json steps = json::array();
        for (const auto& s : ordering->steps) {
            std::vector<hc::Vertex> e(pat.graph.edge(s.edge).begin(), pat.graph.edge(s.edge).end());
            steps.push_back({{"edge", vertices_json(e)},
                             {"parent", s.parent == hc::npos ? json(nullptr) : json(s.parent + 1)}});
        }
        run.result() = {{"ordering", steps}};
        auto emb = hc::embed_by_edge_order(in.graph, pat.graph, *ordering);
        run.result()["embedded"] = emb.has_value();
        if (!emb) {
            run.summary("pruning removed every edge");
            return run.finish(kNegative);
        }
        run.certificate(embedding_certificate(in.graph, *emb));
        run.summary("copy found along the edge ordering");
        return run.finish(kOk);
    } catch (const std::invalid_argument& e) {
        run.status("precondition_failed");
        run.result() = {{"error", e.what()}};
        run.summary(std::string("precondition failed: ") + e.what());
        return run.finish(kNegative);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperchrome: coloring and extremal experiments on 3-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    bool json_flag = false;
    app.add_option("--seed", globals.seed, "64-bit seed (default: HYPERCHROME_SEED or 0)");
    app.add_option("--budget-nodes", globals.budget_nodes, "Node cap for exhaustive searches");
    app.add_option("--budget-ms", globals.budget_ms, "Wall-clock cap in milliseconds");
    auto* json_opt = app.add_flag("--json", json_flag, "JSON report on stdout (default)");
    app.add_flag("--quiet", globals.quiet, "One-line summary instead of JSON")->excludes(json_opt);

    std::string input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Hypergraph file (default: stdin)"); };
    std::string pattern;
    auto add_pattern = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--pattern", pattern, "Named graph or pattern file");
        if (required) o->required();
    };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated hypergraph");
    std::string families = "complete, loose-cycle, loose-path, partition, gq, fq-blowup, blow-up, random, hypertree";
    for (auto name : hc::named_graphs()) families += ", " + std::string(name);
    gen_cmd->add_option("family", gen.family, "One of: " + families)->required();
    gen_cmd->add_option("--n", gen.n, "Vertices");
    gen_cmd->add_option("--m", gen.m, "Edges (random) or vertices (fq-blowup)");
    gen_cmd->add_option("--l", gen.l, "Cycle/path length");
    gen_cmd->add_option("--r", gen.r, "Parts (partition)");
    gen_cmd->add_option("--t", gen.t, "Part size + 1 (partition)");
    gen_cmd->add_option("--q", gen.q, "Prime field size (gq)");
    gen_cmd->add_option("--tau", gen.tau, "Grid side (fq-blowup, blow-up)");
    gen_cmd->add_option("--e", gen.e, "Edges (hypertree)");
    gen_cmd->add_option("--input", gen.input, "Base graph for blow-up (default: stdin)");
    gen_cmd->add_option("--out", gen.out, "Write the file here and print a report");

    auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number");
    add_input(chi_cmd);
    auto* alpha_cmd = app.add_subcommand("alpha", "Exact independence number");
    add_input(alpha_cmd);
    std::size_t k = 0;
    auto* kcolor_cmd = app.add_subcommand("kcolor", "Decide k-colorability");
    add_input(kcolor_cmd);
    kcolor_cmd->add_option("--k", k, "Number of colors")->required();

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Color with a heuristic or local-lemma algorithm");
    color_cmd->add_option("input", color.input, "Hypergraph file (default: stdin)");
    color_cmd->add_option("--algo", color.algo, "greedy | lll | layered | dyadic | e288")
        ->check(CLI::IsMember({"greedy", "lll", "layered", "dyadic", "e288"}));
    color_cmd->add_option("--order", color.order, "identity | reverse | random | comma-separated 1-based permutation");
    color_cmd->add_option("--r", color.r, "Palette size (greedy: cap)");
    color_cmd->add_option("--theta", color.theta, "Peeling degree threshold (layered)");
    color_cmd->add_option("--per-layer", color.per_layer, "Colors per layer (layered)");

    auto* contains_cmd = app.add_subcommand("contains", "Find a copy of a pattern");
    add_input(contains_cmd);
    add_pattern(contains_cmd, true);
    auto* free_cmd = app.add_subcommand("free", "Check pattern-freeness");
    add_input(free_cmd);
    add_pattern(free_cmd, true);

    std::string order;
    auto* chain_cmd = app.add_subcommand("chain", "Greedy coloring with an ordered-chain certificate");
    add_input(chain_cmd);
    chain_cmd->add_option("--order", order, "identity | reverse | random | comma-separated 1-based permutation");

    std::size_t n = 0, t = 0, n_max = 10, r = 0;
    std::string cache;
    auto* ex_cmd = app.add_subcommand("ex", "Turan number by exhaustive search");
    add_pattern(ex_cmd, true);
    ex_cmd->add_option("--n", n, "Vertices")->required();
    ex_cmd->add_option("--cache", cache, "Results cache (default: HYPERCHROME_CACHE)");
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey number R(H, K_t) by exhaustive search");
    add_pattern(ramsey_cmd, true);
    ramsey_cmd->add_option("--t", t, "Independent set size")->required()->check(CLI::Range(3, 64));
    ramsey_cmd->add_option("--n-max", n_max, "Largest n to try");
    ramsey_cmd->add_option("--cache", cache, "Results cache (default: HYPERCHROME_CACHE)");

    auto* balance_cmd = app.add_subcommand("balance", "Balance (e'-1)/(v'-3) maximized over subgraphs");
    add_input(balance_cmd);
    auto* forest_cmd = app.add_subcommand("hyperforest", "Berge-acyclicity");
    add_input(forest_cmd);
    auto* witness_cmd = app.add_subcommand("witness", "Check an H-free graph with chi > r");
    add_input(witness_cmd);
    add_pattern(witness_cmd, true);
    witness_cmd->add_option("--r", r, "Palette size")->required();
    auto* embed_cmd = app.add_subcommand("embed-order", "Embed a pattern along an edge ordering after pruning");
    add_input(embed_cmd);
    add_pattern(embed_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen, globals);
        if (*chi_cmd) return run_chi(input, globals);
        if (*alpha_cmd) return run_alpha(input, globals);
        if (*kcolor_cmd) return run_kcolor(input, k, globals);
        if (*color_cmd) return run_color(color, globals);
        if (*contains_cmd) return run_contains(input, pattern, false, globals);
        if (*free_cmd) return run_contains(input, pattern, true, globals);
        if (*chain_cmd) return run_chain(input, order, globals);
        if (*ex_cmd) return run_extremal(true, pattern, n, 0, cache, globals);
        if (*ramsey_cmd) return run_extremal(false, pattern, t, n_max, cache, globals);
        if (*balance_cmd) return run_balance(input, globals);
        if (*forest_cmd) return run_hyperforest(input, globals);
        if (*witness_cmd) return run_witness(input, pattern, r, globals);
        if (*embed_cmd) return run_embed_order(input, pattern, globals);
    } catch (const cli::FormatError& e) {
        std::cerr << "hyperchrome: malformed hypergraph file: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "hyperchrome: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hyperchrome: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hyperchrome: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
