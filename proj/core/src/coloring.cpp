#include "hyperchrome/coloring.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <set>

#include "hyperchrome/constructions.hpp"

namespace hyperchrome {

namespace {

using Wide = __int128;

constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Returns the earliest vertex of edge `ei` under `order`.
Vertex earliest(const Hypergraph& g, const VertexOrder& order, std::size_t ei) {
    auto e = g.edge(ei);
    return *std::min_element(e.begin(), e.end(),
                             [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
}

OrderedChain descend(const Hypergraph& g, const VertexOrder& order, const std::vector<Color>& colors,
                     const std::vector<std::vector<std::size_t>>& witness, std::size_t first_edge) {
    OrderedChain chain;
    std::size_t ei = first_edge;
    for (;;) {
        auto e = g.edge(ei);
        chain.edges.emplace_back(e.begin(), e.end());
        Vertex x = earliest(g, order, ei);
        if (colors[x] == 0) break;
        ei = witness[x][colors[x] - 1];
    }
    std::reverse(chain.edges.begin(), chain.edges.end());
    return chain;
}

}  // namespace

GreedyResult greedy_pluhar(const Hypergraph& g, const VertexOrder& order,
                           std::optional<std::size_t> palette_cap) {
    const std::size_t n = g.num_vertices();
    if (order.size() != n) throw std::invalid_argument("vertex order does not match the graph");

    std::vector<Color> colors(n, kUncolored);
    std::vector<std::vector<std::size_t>> witness(n);
    std::size_t palette = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order.at(i);
        std::vector<std::size_t> blocked;  // blocked[c] = witness edge or npos
        for (std::size_t ei : g.incident(v)) {
            Color shared = kUncolored;
            bool uniform = true;
            for (Vertex u : g.edge(ei)) {
                if (u == v) continue;
                if (colors[u] == kUncolored || (shared != kUncolored && colors[u] != shared)) {
                    uniform = false;
                    break;
                }
                shared = colors[u];
            }
            if (!uniform) continue;
            if (blocked.size() <= shared) blocked.resize(shared + 1, npos);
            if (blocked[shared] == npos) blocked[shared] = ei;
        }
        Color c = 0;
        while (c < blocked.size() && blocked[c] != npos) ++c;

        if (palette_cap && c >= *palette_cap) {
            GreedyFailure failure;
            failure.vertex = v;
            failure.witnesses.assign(blocked.begin(), blocked.begin() + static_cast<std::ptrdiff_t>(*palette_cap));
            failure.colors = std::move(colors);
            failure.witness = std::move(witness);
            return failure;
        }
        colors[v] = c;
        witness[v].assign(blocked.begin(), blocked.begin() + c);
        palette = std::max<std::size_t>(palette, c + 1);
    }
    return GreedyTrace{Coloring(std::move(colors), palette), std::move(witness)};
}

OrderedChain extract_chain(const Hypergraph& g, const VertexOrder& order, const GreedyTrace& trace) {
    const std::size_t n = g.num_vertices();
    const auto& colors = trace.coloring.colors;
    if (colors.size() != n || trace.witness.size() != n || order.size() != n)
        throw std::invalid_argument("greedy trace does not match the graph");
    if (trace.coloring.palette < 2) throw std::invalid_argument("chain extraction needs at least two colors");

    for (Vertex v = 0; v < n; ++v) {
        if (trace.witness[v].size() != colors[v]) throw std::invalid_argument("greedy trace witness count mismatch");
        for (Color c = 0; c < colors[v]; ++c) {
            std::size_t ei = trace.witness[v][c];
            if (ei >= g.num_edges()) throw std::invalid_argument("greedy trace witness is not an edge");
            auto e = g.edge(ei);
            if (std::find(e.begin(), e.end(), v) == e.end())
                throw std::invalid_argument("greedy trace witness misses its vertex");
            for (Vertex u : e)
                if (u != v && (colors[u] != c || order.position(u) > order.position(v)))
                    throw std::invalid_argument("greedy trace witness is inconsistent");
        }
    }

    const auto top = static_cast<Color>(trace.coloring.palette - 1);
    Vertex start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (colors[order.at(i)] == top) {
            start = order.at(i);
            break;
        }
    return descend(g, order, colors, trace.witness, trace.witness[start][top - 1]);
}

OrderedChain failure_chain(const Hypergraph& g, const VertexOrder& order, const GreedyFailure& failure) {
    if (failure.witnesses.empty()) return {};
    return descend(g, order, failure.colors, failure.witness, failure.witnesses.back());
}

std::variant<OrderedChain, IndependentSet> chain_or_independent(const Hypergraph& g, const VertexOrder& order,
                                                                std::size_t r, std::size_t t) {
    if (r < 1 || t < 1) throw std::invalid_argument("chain_or_independent needs r, t >= 1");
    if (g.num_vertices() < (t - 1) * r + 1)
        throw std::invalid_argument("chain_or_independent needs at least (t-1)r+1 vertices");

    auto result = greedy_pluhar(g, order, r);
    if (auto* failure = std::get_if<GreedyFailure>(&result)) return failure_chain(g, order, *failure);

    auto classes = std::get<GreedyTrace>(result).coloring.classes();
    auto largest = std::max_element(classes.begin(), classes.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return IndependentSet{*largest};
}

bool within_lll_degree(std::size_t degree, std::size_t r) {
    return Wide{3} * kEUpperNum * Wide(degree) <= Wide(r) * Wide(r) * kEUpperDen;
}

bool is_small_degree(std::size_t degree, std::size_t r) {
    return Wide{12} * kEUpperNum * Wide(degree) <= Wide(r) * Wide(r) * kEUpperDen;
}

std::optional<std::size_t> dyadic_index(std::size_t degree, std::size_t r) {
    if (r == 0) throw std::invalid_argument("dyadic classes need r >= 1");
    const Wide scaled_degree = Wide{12} * kEUpperNum * Wide(degree);
    const Wide base = Wide(r) * Wide(r) * kEUpperDen;
    if (scaled_degree <= base) return std::nullopt;
    std::size_t k = 0;
    while ((base << (k + 1)) <= scaled_degree) ++k;
    return k;
}

LllReport lll_check(const Hypergraph& g, std::size_t r) {
    if (r == 0) throw std::invalid_argument("lll_check needs r >= 1");
    LllReport report;
    report.max_degree = g.max_degree();
    report.ok = within_lll_degree(report.max_degree, r);
    report.p = Rational(1, static_cast<std::int64_t>(r * r));
    report.d = report.max_degree == 0 ? 0 : 3 * (report.max_degree - 1);
    report.e_p_d1 = std::numbers::e * static_cast<double>(report.d + 1) / static_cast<double>(r * r);
    return report;
}

std::variant<LllColoring, ResampleCapExceeded> lll_color(const Hypergraph& g, std::size_t r, RngSeed seed,
                                                         std::optional<std::uint64_t> max_resamples,
                                                         bool enforce_check) {
    const std::size_t n = g.num_vertices();
    if (n > 0 && r == 0) throw PreconditionError("lll_color needs at least one color");
    if (enforce_check && n > 0 && !lll_check(g, r).ok)
        throw PreconditionError("maximum degree exceeds r^2/(3e); local lemma bound does not apply");
    const std::uint64_t cap = max_resamples.value_or(1000 * static_cast<std::uint64_t>(g.num_edges()));

    Rng rng(seed);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng.below(r));

    auto monochromatic = [&](std::size_t ei) {
        auto e = g.edge(ei);
        return std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == colors[e[0]]; });
    };
    std::set<std::size_t> bad;
    for (std::size_t ei = 0; ei < g.num_edges(); ++ei)
        if (monochromatic(ei)) bad.insert(ei);

    std::uint64_t resamples = 0;
    while (!bad.empty()) {
        if (resamples >= cap) return ResampleCapExceeded{resamples};
        const std::size_t ei = *bad.begin();
        ++resamples;
        for (Vertex v : g.edge(ei)) colors[v] = static_cast<Color>(rng.below(r));
        for (Vertex v : g.edge(ei))
            for (std::size_t fi : g.incident(v)) {
                if (monochromatic(fi))
                    bad.insert(fi);
                else
                    bad.erase(fi);
            }
    }
    return LllColoring{Coloring(std::move(colors), r), resamples};
}

SizeSplit small_big_split(const Hypergraph& g, std::size_t r) {
    SizeSplit split;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        (is_small_degree(g.degree(v), r) ? split.small : split.big).push_back(v);
    return split;
}

LayerDecomposition peel_layers(const Hypergraph& g, std::size_t threshold) {
    if (threshold == 0) throw std::invalid_argument("peeling threshold must be positive");
    LayerDecomposition out;
    out.threshold = threshold;

    std::vector<Vertex> current(g.num_vertices());
    std::iota(current.begin(), current.end(), Vertex{0});
    while (!current.empty()) {
        auto sub = induced(g, current);
        std::vector<Vertex> next, layer;
        for (Vertex local = 0; local < current.size(); ++local)
            (sub.graph.degree(local) >= threshold ? next : layer).push_back(current[local]);
        if (layer.empty()) {
            out.residual_core = std::move(current);
            break;
        }
        out.layers.push_back(std::move(layer));
        current = std::move(next);
    }
    return out;
}

std::variant<LayeredColoring, LayeredFailure> layered_color(const Hypergraph& g, std::size_t threshold,
                                                            std::size_t per_layer, RngSeed seed) {
    auto decomposition = peel_layers(g, threshold);
    if (!decomposition.complete()) return LayeredFailure{LayeredFailure::Reason::residual_core, decomposition.layers.size()};
    if (per_layer == 0 && g.num_vertices() > 0) throw std::invalid_argument("per-layer palette must be positive");

    std::vector<InducedSubgraph> parts;
    for (std::size_t i = 0; i < decomposition.layers.size(); ++i) {
        parts.push_back(induced(g, decomposition.layers[i]));
        if (!lll_check(parts.back().graph, per_layer).ok) return LayeredFailure{LayeredFailure::Reason::layer_check, i};
    }

    std::vector<Color> colors(g.num_vertices(), 0);
    std::uint64_t resamples = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto result = lll_color(parts[i].graph, per_layer, RngSeed{mix_seed(seed.value, i)});
        if (std::holds_alternative<ResampleCapExceeded>(result))
            return LayeredFailure{LayeredFailure::Reason::resample_cap, i};
        auto& local = std::get<LllColoring>(result);
        resamples += local.resamples;
        for (Vertex j = 0; j < parts[i].to_parent.size(); ++j)
            colors[parts[i].to_parent[j]] = static_cast<Color>(local.coloring.colors[j] + i * per_layer);
    }
    return LayeredColoring{Coloring(std::move(colors), decomposition.layers.size() * per_layer),
                           std::move(decomposition), resamples};
}

DyadicClasses dyadic_classes(const Hypergraph& g, std::size_t r) {
    DyadicClasses out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (auto k = dyadic_index(g.degree(v), r)) out.classes[*k].push_back(v);
    out.base_threshold = Rational(static_cast<std::int64_t>(r * r) * kEUpperDen, 12 * kEUpperNum);
    return out;
}

namespace {

std::vector<Vertex> greedy_independent(const Hypergraph& g) {
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<bool> in(g.num_vertices(), false);
    std::vector<Vertex> out;
    for (Vertex v : order) {
        bool blocked = false;
        for (std::size_t ei : g.incident(v)) {
            auto e = g.edge(ei);
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || in[u]; })) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            in[v] = true;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

constexpr std::size_t kExactClassLimit = 24;

}  // namespace

std::variant<RemovalColoring, RemovalFailure> independent_removal_color(const Hypergraph& g, std::size_t r,
                                                                        RngSeed seed, const SearchBudget& budget) {
    BudgetMeter clock(budget);
    std::vector<Vertex> remaining(g.num_vertices());
    std::iota(remaining.begin(), remaining.end(), Vertex{0});
    std::vector<Color> colors(g.num_vertices(), 0);
    std::vector<RemovalStep> steps;
    std::size_t left = r;

    for (;;) {
        if (remaining.empty()) return RemovalColoring{Coloring(std::move(colors), r), std::move(steps), 0};
        if (left == 0) return RemovalFailure{RemovalFailure::Reason::palette_exhausted, steps.size(), remaining.size()};
        if (budget.max_millis != 0 && clock.elapsed_ms() > budget.max_millis)
            return RemovalFailure{RemovalFailure::Reason::budget_exhausted, steps.size(), remaining.size()};

        auto sub = induced(g, remaining);
        if (small_big_split(sub.graph, left).big.empty()) {
            auto result = lll_color(sub.graph, left, RngSeed{mix_seed(seed.value, steps.size())});
            if (std::holds_alternative<ResampleCapExceeded>(result))
                return RemovalFailure{RemovalFailure::Reason::resample_cap, steps.size(), remaining.size()};
            auto& local = std::get<LllColoring>(result);
            const auto offset = static_cast<Color>(steps.size());
            for (Vertex j = 0; j < remaining.size(); ++j) colors[remaining[j]] = offset + local.coloring.colors[j];
            return RemovalColoring{Coloring(std::move(colors), r), std::move(steps), local.resamples};
        }

        // Busiest dyadic class: most edges touching it, ties to the lower index.
        auto classes = dyadic_classes(sub.graph, left);
        std::size_t best_k = 0, best_edges = 0;
        bool have = false;
        for (const auto& [k, members] : classes.classes) {
            std::vector<bool> in(sub.graph.num_vertices(), false);
            for (Vertex v : members) in[v] = true;
            std::size_t touching = 0;
            for (std::size_t ei = 0; ei < sub.graph.num_edges(); ++ei) {
                auto e = sub.graph.edge(ei);
                if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) ++touching;
            }
            if (!have || touching > best_edges) {
                best_k = k;
                best_edges = touching;
                have = true;
            }
        }
        const auto& members = classes.classes.at(best_k);
        auto inner = induced(sub.graph, members);

        RemovalStep step;
        step.dyadic_class = best_k;
        std::vector<Vertex> chosen;
        if (members.size() <= kExactClassLimit) {
            auto mis = max_independent_set(inner.graph, budget);
            chosen = std::move(mis.vertices);
            step.exact = !mis.exhausted;
        }
        if (chosen.empty()) chosen = greedy_independent(inner.graph);

        const auto color = static_cast<Color>(steps.size());
        std::vector<bool> taken(g.num_vertices(), false);
        for (Vertex local : chosen) {
            Vertex global = sub.to_parent[inner.to_parent[local]];
            colors[global] = color;
            taken[global] = true;
            step.vertices.push_back(global);
        }
        std::sort(step.vertices.begin(), step.vertices.end());
        std::erase_if(remaining, [&](Vertex v) { return taken[v]; });
        steps.push_back(std::move(step));
        --left;
    }
}

std::variant<Coloring, IndependentSet, SunflowerCertificate> e288_extract(const Hypergraph& g,
                                                                         const VertexOrder& order,
                                                                         std::size_t r_prime) {
    if (g.uniformity() != 3) throw std::invalid_argument("e288 extraction needs a 3-graph");
    if (r_prime < 1) throw std::invalid_argument("e288 extraction needs r' >= 1");

    auto result = greedy_pluhar(g, order, r_prime);
    if (auto* trace = std::get_if<GreedyTrace>(&result)) return std::move(trace->coloring);
    const auto& failure = std::get<GreedyFailure>(result);
    const Vertex v = failure.vertex;

    std::vector<Vertex> picks;
    std::vector<std::size_t> source(g.num_vertices(), npos);
    for (std::size_t i = 0; i < failure.witnesses.size(); ++i) {
        auto e = g.edge(failure.witnesses[i]);
        Vertex pick = kNoVertex;
        for (Vertex u : e)
            if (u != v && (pick == kNoVertex || order.position(u) < order.position(pick))) pick = u;
        picks.push_back(pick);
        source[pick] = i;
    }

    std::vector<bool> in(g.num_vertices(), false);
    for (Vertex x : picks) in[x] = true;
    for (Vertex x : picks)
        for (std::size_t ei : g.incident(x)) {
            auto e = g.edge(ei);
            if (!std::all_of(e.begin(), e.end(), [&](Vertex u) { return in[u]; })) continue;

            // v with the three witness edges through the picked vertices, plus
            // the edge inside the picks, form sunflower7.
            auto partner = [&](Vertex picked) {
                for (Vertex u : g.edge(failure.witnesses[source[picked]]))
                    if (u != v && u != picked) return u;
                return v;
            };
            Embedding emb;
            emb.vertex_map = {v, e[0], partner(e[0]), e[1], partner(e[1]), e[2], partner(e[2])};
            auto pattern = named("sunflower7");
            for (std::size_t pi = 0; pi < pattern.num_edges(); ++pi) {
                std::vector<Vertex> image;
                for (Vertex u : pattern.edge(pi)) image.push_back(emb.vertex_map[u]);
                emb.edge_map.push_back(*g.find_edge(image));
            }
            return SunflowerCertificate{std::move(emb)};
        }
    std::sort(picks.begin(), picks.end());
    return IndependentSet{std::move(picks)};
}

const char* to_string(LayeredFailure::Reason reason) {
    switch (reason) {
        case LayeredFailure::Reason::residual_core: return "residual_core";
        case LayeredFailure::Reason::layer_check: return "layer_check";
        case LayeredFailure::Reason::resample_cap: return "resample_cap";
    }
    return "unknown";
}

const char* to_string(RemovalFailure::Reason reason) {
    switch (reason) {
        case RemovalFailure::Reason::palette_exhausted: return "palette_exhausted";
        case RemovalFailure::Reason::budget_exhausted: return "budget_exhausted";
        case RemovalFailure::Reason::resample_cap: return "resample_cap";
    }
    return "unknown";
}

}  // namespace hyperchrome
