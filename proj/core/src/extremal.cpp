#include "hyperchrome/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hyperchrome {

namespace {

bool covers_pair(std::span<const Vertex> e, Vertex a, Vertex b) {
    return std::find(e.begin(), e.end(), a) != e.end() && std::find(e.begin(), e.end(), b) != e.end();
}

}  // namespace

std::optional<EdgeOrdering> find_edge_ordering(const Hypergraph& h) {
    if (h.uniformity() != 3) throw std::invalid_argument("edge ordering needs a 3-graph");
    const std::size_t m = h.num_edges();
    if (m == 0 || h.num_vertices() != m + 2)
        throw std::invalid_argument("edge ordering needs |V(H)| = |E(H)| + 2");

    std::vector<bool> used(m, false);
    std::vector<int> covered(h.num_vertices(), 0);
    EdgeOrdering ordering;
    std::set<std::vector<bool>> dead;  // used-edge sets known to lead nowhere

    std::function<bool()> extend = [&]() -> bool {
        if (ordering.steps.size() == m) return true;
        if (dead.count(used)) return false;
        for (std::size_t ei = 0; ei < m; ++ei) {
            if (used[ei]) continue;
            auto e = h.edge(ei);
            std::vector<Vertex> old, fresh;
            for (Vertex v : e) (covered[v] ? old : fresh).push_back(v);
            if (old.size() != 2) continue;
            std::size_t parent = npos;
            for (std::size_t j = 0; j < ordering.steps.size(); ++j)
                if (covers_pair(h.edge(ordering.steps[j].edge), old[0], old[1])) {
                    parent = j;
                    break;
                }
            if (parent == npos) continue;

            used[ei] = true;
            for (Vertex v : e) ++covered[v];
            ordering.steps.push_back({ei, parent, old[0], old[1], fresh[0]});
            if (extend()) return true;
            ordering.steps.pop_back();
            for (Vertex v : e) --covered[v];
            used[ei] = false;
        }
        dead.insert(used);
        return false;
    };

    for (std::size_t first = 0; first < m; ++first) {
        auto e = h.edge(first);
        used[first] = true;
        for (Vertex v : e) ++covered[v];
        ordering.steps.push_back({first, npos, e[0], e[1], e[2]});
        if (extend()) return ordering;
        ordering.steps.pop_back();
        for (Vertex v : e) --covered[v];
        used[first] = false;
    }
    return std::nullopt;
}

bool is_valid_edge_ordering(const Hypergraph& h, const EdgeOrdering& ordering) {
    const auto& steps = ordering.steps;
    if (steps.size() != h.num_edges()) return false;
    std::vector<bool> seen_edge(h.num_edges(), false), covered(h.num_vertices(), false);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (s.edge >= h.num_edges() || seen_edge[s.edge]) return false;
        seen_edge[s.edge] = true;
        auto e = h.edge(s.edge);
        if (i > 0) {
            std::vector<Vertex> abc{s.a, s.b, s.c};
            std::sort(abc.begin(), abc.end());
            if (!std::equal(abc.begin(), abc.end(), e.begin())) return false;
            if (s.parent >= i || !covers_pair(h.edge(steps[s.parent].edge), s.a, s.b)) return false;
            if (covered[s.c]) return false;
        }
        for (Vertex v : e) covered[v] = true;
    }
    return true;
}

Hypergraph prune_low_support(const Hypergraph& g, std::size_t t) {
    if (t < 3) throw std::invalid_argument("pruning needs t >= 3");
    if (g.uniformity() != 3) throw std::invalid_argument("pruning needs a 3-graph");
    const std::size_t limit = t - 3;

    std::map<std::pair<Vertex, Vertex>, std::size_t> support;
    auto pairs = [](std::span<const Vertex> e) {
        return std::array<std::pair<Vertex, Vertex>, 3>{{{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}}};
    };
    for (std::size_t ei = 0; ei < g.num_edges(); ++ei)
        for (auto p : pairs(g.edge(ei))) ++support[p];

    std::vector<bool> alive(g.num_edges(), true);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
            if (!alive[ei]) continue;
            auto ps = pairs(g.edge(ei));
            if (std::none_of(ps.begin(), ps.end(), [&](auto p) { return support[p] <= limit; })) continue;
            alive[ei] = false;
            for (auto p : ps) --support[p];
            changed = true;
        }
    }

    std::vector<std::vector<Vertex>> kept;
    for (std::size_t ei = 0; ei < g.num_edges(); ++ei)
        if (alive[ei]) kept.emplace_back(g.edge(ei).begin(), g.edge(ei).end());
    return Hypergraph(g.num_vertices(), 3, kept);
}

std::optional<Embedding> embed_by_edge_order(const Hypergraph& g, const Hypergraph& h,
                                             const EdgeOrdering& ordering) {
    if (!is_valid_edge_ordering(h, ordering)) throw std::invalid_argument("invalid edge ordering");
    auto pruned = prune_low_support(g, h.num_vertices());
    if (pruned.num_edges() == 0) return std::nullopt;

    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> map(h.num_vertices(), kNone);
    std::vector<bool> in_image(g.num_vertices(), false);
    auto bind = [&](Vertex u, Vertex w) {
        map[u] = w;
        in_image[w] = true;
    };

    auto first = h.edge(ordering.steps[0].edge);
    auto target = pruned.edge(0);
    for (std::size_t i = 0; i < 3; ++i) bind(first[i], target[i]);

    for (std::size_t i = 1; i < ordering.steps.size(); ++i) {
        const auto& s = ordering.steps[i];
        const Vertex u = map[s.a], w = map[s.b];
        Vertex fresh = kNone;
        for (std::size_t ei : pruned.incident(u)) {
            auto e = pruned.edge(ei);
            if (std::find(e.begin(), e.end(), w) == e.end()) continue;
            for (Vertex x : e)
                if (x != u && x != w && !in_image[x]) fresh = x;
            if (fresh != kNone) break;
        }
        if (fresh == kNone) return std::nullopt;
        bind(s.c, fresh);
    }

    Embedding emb{map, {}};
    for (std::size_t hi = 0; hi < h.num_edges(); ++hi) {
        std::vector<Vertex> image;
        for (Vertex u : h.edge(hi)) image.push_back(map[u]);
        emb.edge_map.push_back(*g.find_edge(image));
    }
    return emb;
}

const char* to_string(RecordKind kind) { return kind == RecordKind::ex ? "ex" : "ramsey"; }
const char* to_string(RecordStatus status) { return status == RecordStatus::exact ? "exact" : "lower_bound"; }

std::string pattern_key(const Hypergraph& h) { return to_hex(canonical_form(h)); }

namespace {

using EdgeList = std::vector<std::vector<Vertex>>;

std::vector<std::vector<Vertex>> all_triples(std::size_t n) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

/// Walks isomorphism classes of H-free 3-graphs on n vertices by adding one
/// triple at a time. `visit(graph, addable)` returns false to skip children.
class FreeGraphWalk {
  public:
    FreeGraphWalk(std::size_t n, const Hypergraph& h, BudgetMeter& meter)
        : n_(n), h_(h), meter_(meter), triples_(all_triples(n)) {}

    template <class Visit>
    bool run(Visit&& visit) {
        Hypergraph start = Hypergraph::empty(n_);
        if (contains(start, h_)) return true;
        seen_.insert(canonical_form(start));
        return walk(EdgeList{}, visit);
    }

  private:
    // Triples whose addition keeps the graph H-free.
    EdgeList addable(const EdgeList& edges, const Hypergraph& g) const {
        EdgeList out;
        for (const auto& t : triples_) {
            if (g.has_edge(t)) continue;
            EdgeList grown = edges;
            grown.push_back(t);
            Hypergraph bigger(n_, 3, grown);
            if (!contains(bigger, h_, bigger.find_edge(t))) out.push_back(t);
        }
        return out;
    }

    // Returns false when the visitor asked to stop everything.
    template <class Visit>
    bool walk(const EdgeList& edges, Visit& visit) {
        if (!meter_.tick()) return false;
        Hypergraph g(n_, 3, edges);
        auto next = addable(edges, g);
        auto verdict = visit(g, next);
        if (verdict == Step::stop) return false;
        if (verdict == Step::skip) return true;
        for (const auto& t : next) {
            EdgeList grown = edges;
            grown.push_back(t);
            if (!seen_.insert(canonical_form(Hypergraph(n_, 3, grown))).second) continue;
            if (!walk(grown, visit)) return false;
        }
        return true;
    }

  public:
    enum class Step { descend, skip, stop };

  private:
    std::size_t n_;
    const Hypergraph& h_;
    BudgetMeter& meter_;
    EdgeList triples_;
    std::unordered_set<std::string> seen_;
};

std::size_t independence_number(const Hypergraph& g) { return max_independent_set(g).vertices.size(); }

}  // namespace

ResultRecord turan_ex(std::size_t n, const Hypergraph& h, const SearchBudget& budget) {
    if (h.uniformity() != 3) throw std::invalid_argument("turan_ex needs a 3-graph pattern");
    ResultRecord record;
    record.kind = RecordKind::ex;
    record.key = pattern_key(h);
    record.parameter = n;
    record.witness = Hypergraph::empty(n);

    auto everything = Hypergraph(n, 3, all_triples(n));
    if (!contains(everything, h)) {
        record.value = everything.num_edges();
        record.witness = std::move(everything);
        return record;
    }

    BudgetMeter meter(budget);
    FreeGraphWalk walk(n, h, meter);
    using Step = FreeGraphWalk::Step;
    bool finished = walk.run([&](const Hypergraph& g, const EdgeList& next) {
        if (g.num_edges() > record.value || record.witness.num_edges() < g.num_edges()) {
            record.value = g.num_edges();
            record.witness = g;
        }
        return g.num_edges() + next.size() <= record.value ? Step::skip : Step::descend;
    });
    record.nodes = meter.nodes();
    record.status = finished ? RecordStatus::exact : RecordStatus::lower_bound;
    return record;
}

ResultRecord ramsey(const Hypergraph& h, std::size_t t, std::size_t n_max, const SearchBudget& budget) {
    if (h.uniformity() != 3) throw std::invalid_argument("ramsey needs a 3-graph pattern");
    if (t < 3) throw std::invalid_argument("ramsey needs t >= 3");

    ResultRecord record;
    record.kind = RecordKind::ramsey;
    record.key = pattern_key(h);
    record.parameter = t;
    record.witness = Hypergraph::empty(0);

    BudgetMeter meter(budget);
    using Step = FreeGraphWalk::Step;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::optional<Hypergraph> good;
        FreeGraphWalk walk(n, h, meter);
        bool finished = walk.run([&](const Hypergraph& g, const EdgeList& next) {
            if (independence_number(g) < t) {
                good = g;
                return Step::stop;
            }
            // Adding edges only lowers alpha; the union of all addable
            // triples bounds every H-free extension from below.
            EdgeList all = g.edge_list();
            all.insert(all.end(), next.begin(), next.end());
            if (independence_number(Hypergraph(n, 3, all)) >= t) return Step::skip;
            return Step::descend;
        });
        record.nodes = meter.nodes();
        if (good) {
            record.witness = std::move(*good);
            continue;
        }
        record.value = n;
        record.status = finished ? RecordStatus::exact : RecordStatus::lower_bound;
        return record;
    }
    record.value = n_max + 1;
    record.status = RecordStatus::lower_bound;
    return record;
}

bool revalidate(const ResultRecord& record, const Hypergraph& h) {
    if (record.key != pattern_key(h)) return false;
    const auto& w = record.witness;
    if (w.uniformity() != 3 || !is_free(w, h)) return false;
    if (record.kind == RecordKind::ex)
        return w.num_vertices() == record.parameter && w.num_edges() == record.value;
    if (record.value == 0 || w.num_vertices() != record.value - 1) return false;
    return independence_number(w) < record.parameter;
}

WitnessReport verify_witness(const Hypergraph& g, const Hypergraph& h, std::size_t r, const SearchBudget& budget) {
    WitnessReport report;
    report.edge_count = g.num_edges();
    report.copy = contains(g, h);
    report.h_free = !report.copy;
    auto chi = chromatic_number(g, budget);
    report.chi = chi.chi;
    report.coloring = std::move(chi.coloring);
    report.chi_exceeds_r = chi.chi ? *chi.chi > r : chi.lower_bound > r;
    if (report.h_free && report.chi_exceeds_r) report.implied_bound = report.edge_count;
    return report;
}

}  // namespace hyperchrome
