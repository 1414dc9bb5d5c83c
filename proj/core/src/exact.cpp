#include "hyperchrome/exact.hpp"

#include <algorithm>
#include <numeric>

namespace hyperchrome {

namespace {

constexpr Color kUncolored = static_cast<Color>(-1);

class ColoringSearch {
  public:
    ColoringSearch(const Hypergraph& g, std::size_t k, const SearchBudget& budget)
        : g_(g), k_(k), meter_(budget), color_(g.num_vertices(), kUncolored),
          forbidden_(g.num_vertices() * k, 0), order_(g.num_vertices()) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    ColorabilityResult run() {
        ColorabilityResult out;
        bool ok = g_.num_vertices() == 0 || (k_ > 0 && extend(0, 0));
        out.nodes = meter_.nodes();
        if (ok) {
            out.outcome = Outcome::found;
            out.coloring = Coloring(color_, k_);
        } else {
            out.outcome = meter_.exhausted() ? Outcome::exhausted : Outcome::none;
        }
        return out;
    }

  private:
    std::uint32_t& forbid(Vertex v, Color c) { return forbidden_[v * k_ + c]; }

    bool has_option(Vertex v) const {
        for (std::size_t c = 0; c < k_; ++c)
            if (forbidden_[v * k_ + c] == 0) return true;
        return false;
    }

    // Colors v with c and forbids c wherever an edge now has a single
    // uncolored vertex and is otherwise colored c. Returns false on a wipe-out.
    bool place(Vertex v, Color c, std::vector<std::pair<Vertex, Color>>& trail) {
        color_[v] = c;
        bool alive = true;
        for (std::size_t ei : g_.incident(v)) {
            Vertex open = kNoVertex;
            bool uniform = true;
            std::size_t open_count = 0;
            for (Vertex u : g_.edge(ei)) {
                if (color_[u] == kUncolored) {
                    open = u;
                    ++open_count;
                } else if (color_[u] != c) {
                    uniform = false;
                }
            }
            if (!uniform || open_count != 1) continue;
            ++forbid(open, c);
            trail.emplace_back(open, c);
            if (!has_option(open)) alive = false;
        }
        return alive;
    }

    void undo(Vertex v, std::vector<std::pair<Vertex, Color>>& trail) {
        for (auto [u, c] : trail) --forbid(u, c);
        trail.clear();
        color_[v] = kUncolored;
    }

    bool extend(std::size_t depth, std::size_t used) {
        if (depth == order_.size()) return true;
        if (!meter_.tick()) return false;
        const Vertex v = order_[depth];
        const std::size_t limit = std::min(k_, used + 1);
        std::vector<std::pair<Vertex, Color>> trail;
        for (Color c = 0; c < limit; ++c) {
            if (forbid(v, c) != 0) continue;
            if (place(v, c, trail) && extend(depth + 1, std::max<std::size_t>(used, c + 1))) return true;
            undo(v, trail);
            if (meter_.exhausted()) return false;
        }
        return false;
    }

    static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

    const Hypergraph& g_;
    std::size_t k_;
    BudgetMeter meter_;
    std::vector<Color> color_;
    std::vector<std::uint32_t> forbidden_;
    std::vector<Vertex> order_;
};

}  // namespace

ColorabilityResult k_colorable(const Hypergraph& g, std::size_t k, const SearchBudget& budget) {
    return ColoringSearch(g, k, budget).run();
}

ChromaticResult chromatic_number(const Hypergraph& g, const SearchBudget& budget) {
    ChromaticResult out;
    BudgetMeter total(budget);
    for (std::size_t k = 1;; ++k) {
        SearchBudget rest = budget;
        if (budget.max_nodes != std::numeric_limits<std::uint64_t>::max())
            rest.max_nodes = budget.max_nodes > out.nodes ? budget.max_nodes - out.nodes : 0;
        if (budget.max_millis != 0) {
            auto spent = total.elapsed_ms();
            if (spent >= budget.max_millis) return out;
            rest.max_millis = budget.max_millis - spent;
        }
        auto r = k_colorable(g, k, rest);
        out.nodes += r.nodes;
        if (r.outcome == Outcome::exhausted) return out;
        if (r.outcome == Outcome::found) {
            out.chi = k;
            out.coloring = std::move(r.coloring);
            out.lower_bound = k;
            return out;
        }
        out.lower_bound = k + 1;
    }
}

namespace {

class IndependentSearch {
  public:
    IndependentSearch(const Hypergraph& g, const SearchBudget& budget)
        : g_(g), meter_(budget), in_(g.num_vertices(), false), order_(g.num_vertices()) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }

    IndependentSetResult run() {
        visit(0);
        IndependentSetResult out{best_, meter_.exhausted(), meter_.nodes()};
        std::sort(out.vertices.begin(), out.vertices.end());
        return out;
    }

  private:
    bool can_add(Vertex v) const {
        for (std::size_t ei : g_.incident(v)) {
            auto e = g_.edge(ei);
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || in_[u]; }))
                return false;
        }
        return true;
    }

    void visit(std::size_t i) {
        if (current_.size() > best_.size()) best_ = current_;
        if (i == order_.size() || current_.size() + (order_.size() - i) <= best_.size()) return;
        if (!meter_.tick()) return;
        const Vertex v = order_[i];
        if (can_add(v)) {
            in_[v] = true;
            current_.push_back(v);
            visit(i + 1);
            current_.pop_back();
            in_[v] = false;
        }
        if (meter_.exhausted()) return;
        visit(i + 1);
    }

    const Hypergraph& g_;
    BudgetMeter meter_;
    std::vector<bool> in_;
    std::vector<Vertex> order_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

}  // namespace

IndependentSetResult max_independent_set(const Hypergraph& g, const SearchBudget& budget) {
    return IndependentSearch(g, budget).run();
}

}  // namespace hyperchrome
