#include "hyperchrome/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperchrome {

Hypergraph::Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges)
    : n_(n), k_(k) {
    if (k == 0) throw std::invalid_argument("uniformity must be positive");
    std::vector<std::vector<Vertex>> sorted;
    sorted.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.size() != k)
            throw std::invalid_argument("edge of size " + std::to_string(e.size()) +
                                        " in a " + std::to_string(k) + "-uniform hypergraph");
        auto s = e;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("edge with a repeated vertex");
        if (s.back() >= n)
            throw std::invalid_argument("vertex " + std::to_string(s.back()) + " out of range (n = " +
                                        std::to_string(n) + ")");
        sorted.push_back(std::move(s));
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    flat_.reserve(sorted.size() * k);
    incidence_.assign(n, {});
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (Vertex v : sorted[i]) {
            flat_.push_back(v);
            incidence_[v].push_back(i);
        }
    }
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < num_edges(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

std::size_t Hypergraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& inc : incidence_) best = std::max(best, inc.size());
    return best;
}

std::optional<std::size_t> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
    if (vertices.size() != k_) return std::nullopt;
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());
    std::size_t lo = 0, hi = num_edges();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_edges() && std::equal(key.begin(), key.end(), edge(lo).begin())) return lo;
    return std::nullopt;
}

std::vector<Vertex> Hypergraph::covered_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (!incidence_[v].empty()) out.push_back(v);
    return out;
}

Coloring::Coloring(std::vector<Color> c, std::size_t p) : colors(std::move(c)), palette(p) {
    for (Color x : colors)
        if (x >= palette) throw std::invalid_argument("color outside palette");
}

std::size_t Coloring::colors_used() const {
    std::vector<bool> seen(palette, false);
    std::size_t count = 0;
    for (Color x : colors)
        if (!seen[x]) seen[x] = true, ++count;
    return count;
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
    std::vector<std::vector<Vertex>> out(palette);
    for (Vertex v = 0; v < colors.size(); ++v) out[colors[v]].push_back(v);
    return out;
}

VertexOrder::VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {
    position_.assign(order_.size(), npos);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        Vertex v = order_[i];
        if (v >= order_.size() || position_[v] != npos)
            throw std::invalid_argument("vertex order is not a permutation");
        position_[v] = i;
    }
}

VertexOrder VertexOrder::identity(std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return VertexOrder(std::move(order));
}

VertexOrder VertexOrder::reversed() const {
    return VertexOrder(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

InducedSubgraph induced(const Hypergraph& g, std::span<const Vertex> vertices) {
    std::vector<std::size_t> local(g.num_vertices(), npos);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;

    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        std::vector<Vertex> e;
        for (Vertex v : g.edge(i)) {
            if (local[v] == npos) break;
            e.push_back(static_cast<Vertex>(local[v]));
        }
        if (e.size() == g.uniformity()) edges.push_back(std::move(e));
    }
    return {Hypergraph(vertices.size(), g.uniformity(), edges),
            std::vector<Vertex>(vertices.begin(), vertices.end())};
}

std::optional<std::size_t> monochromatic_edge(const Hypergraph& g, const Coloring& c) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        Color first = c.colors[e[0]];
        if (std::all_of(e.begin() + 1, e.end(), [&](Vertex v) { return c.colors[v] == first; }))
            return i;
    }
    return std::nullopt;
}

bool is_independent(const Hypergraph& g, std::span<const Vertex> vertices) {
    std::vector<bool> in(g.num_vertices(), false);
    for (Vertex v : vertices) in[v] = true;
    for (Vertex v : vertices)
        for (std::size_t ei : g.incident(v)) {
            auto e = g.edge(ei);
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return in[u]; })) return false;
        }
    return true;
}

bool is_linear(const Hypergraph& g) {
    // Two edges sharing >= 2 vertices share some pair.
    std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto e = g.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (!seen.emplace(std::pair{e[a], e[b]}, i).second) return false;
    }
    return true;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool is_hyperforest(const Hypergraph& g) {
    const std::size_t n = g.num_vertices();
    DisjointSets sets(n + g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        for (Vertex v : g.edge(i))
            if (!sets.unite(v, n + i)) return false;
    return true;
}

Balance balance(const Hypergraph& g) {
    if (g.uniformity() != 3) throw std::invalid_argument("balance is defined for 3-graphs");
    const std::size_t m = g.num_edges();
    if (m < 2) throw std::invalid_argument("balance needs at least two edges");
    if (m > 30) throw std::invalid_argument("balance enumeration limited to 30 edges");

    std::vector<std::size_t> multiplicity(g.num_vertices(), 0);
    std::size_t covered = 0;
    std::vector<std::size_t> chosen;

    Balance best;
    bool have = false;

    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            if (chosen.size() < 2) return;
            Rational value(static_cast<std::int64_t>(chosen.size()) - 1,
                           static_cast<std::int64_t>(covered) - 3);
            if (!have || value > best.value) {
                best.value = value;
                best.witness = chosen;
                have = true;
            }
            return;
        }
        chosen.push_back(i);
        for (Vertex v : g.edge(i))
            if (multiplicity[v]++ == 0) ++covered;
        self(self, i + 1);
        for (Vertex v : g.edge(i))
            if (--multiplicity[v] == 0) --covered;
        chosen.pop_back();
        self(self, i + 1);
    };
    visit(visit, 0);

    std::size_t whole_cover = g.covered_vertices().size();
    Rational whole(static_cast<std::int64_t>(m) - 1, static_cast<std::int64_t>(whole_cover) - 3);
    if (whole == best.value) {
        best.witness.resize(m);
        std::iota(best.witness.begin(), best.witness.end(), std::size_t{0});
        best.is_balanced = true;
    }
    return best;
}

bool is_ordered_chain(const Hypergraph& g, const OrderedChain& chain, const VertexOrder& order) {
    const auto& es = chain.edges;
    for (const auto& e : es) {
        if (!g.has_edge(e)) return false;
        for (Vertex v : e)
            if (v >= order.size()) return false;
    }
    auto shared = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::size_t count = 0;
        for (Vertex x : a) count += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
        return count;
    };
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (shared(es[i], es[j]) != (j == i + 1 ? 1u : 0u)) return false;

    auto pos = [&](Vertex v) { return order.position(v); };
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
        std::size_t hi = 0, lo = npos;
        for (Vertex v : es[i]) hi = std::max(hi, pos(v));
        for (Vertex v : es[i + 1]) lo = std::min(lo, pos(v));
        if (hi > lo) return false;
    }
    return true;
}

// Canonical labeling by individualization over refined vertex cells.
//
// Labels are handed out in increasing order; label l may only go to a vertex
// of the cell assigned to l. Edges are listed in colex order, so once labels
// 0..l are fixed, every edge whose largest label is <= l is already in its
// final position. This lets each depth keep only the candidates producing the
// smallest block of newly completed edges.
namespace {

using Tuple = std::vector<std::uint32_t>;  // labels in descending order
using Block = std::vector<Tuple>;

// -1 if a < b, 0 if equal, 1 if a > b; a longer block with a common prefix
// is smaller since the next entry of the shorter one has a larger top label.
int compare_blocks(const Block& a, const Block& b) {
    std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] < b[i]) return -1;
        if (b[i] < a[i]) return 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? -1 : 1;
}

std::vector<std::size_t> refine_cells(const Hypergraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);

    std::size_t classes = 0;
    for (;;) {
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::vector<std::size_t>> around;
            for (std::size_t ei : g.incident(v)) {
                std::vector<std::size_t> others;
                for (Vertex u : g.edge(ei))
                    if (u != v) others.push_back(color[u]);
                std::sort(others.begin(), others.end());
                around.push_back(std::move(others));
            }
            std::sort(around.begin(), around.end());
            std::vector<std::size_t> flat{color[v], around.size()};
            for (const auto& o : around) flat.insert(flat.end(), o.begin(), o.end());
            sig[v] = {std::move(flat), v};
        }
        std::vector<std::vector<std::size_t>> keys;
        keys.reserve(n);
        for (auto& s : sig) keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (Vertex v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(
                std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (keys.size() == classes) break;
        classes = keys.size();
    }
    return color;
}

class Canonizer {
  public:
    explicit Canonizer(const Hypergraph& g) : g_(g), label_(g.num_vertices(), kUnlabeled) {
        auto color = refine_cells(g);
        std::vector<Vertex> by_cell(g.num_vertices());
        std::iota(by_cell.begin(), by_cell.end(), Vertex{0});
        std::stable_sort(by_cell.begin(), by_cell.end(),
                         [&](Vertex a, Vertex b) { return color[a] < color[b]; });
        cell_of_label_.resize(g.num_vertices());
        for (std::size_t l = 0; l < by_cell.size(); ++l) cell_of_label_[l] = color[by_cell[l]];
        color_ = std::move(color);
    }

    std::vector<Block> run() {
        current_.clear();
        have_best_ = false;
        search(0);
        return best_;
    }

  private:
    static constexpr std::uint32_t kUnlabeled = 0xffffffffu;

    Block block_for(Vertex v, std::uint32_t l) const {
        Block out;
        for (std::size_t ei : g_.incident(v)) {
            Tuple t{l};
            bool complete = true;
            for (Vertex u : g_.edge(ei)) {
                if (u == v) continue;
                if (label_[u] == kUnlabeled) {
                    complete = false;
                    break;
                }
                t.push_back(label_[u]);
            }
            if (!complete) continue;
            std::sort(t.begin() + 1, t.end(), std::greater<>());
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void search(std::size_t depth) {
        const std::size_t n = g_.num_vertices();
        if (depth == n) {
            const int state = have_best_ ? prefix_state(n) : -1;
            if (state < 0) {
                best_ = current_;
                best_labels_ = label_;
                have_best_ = true;
            } else if (state == 0) {
                record_automorphism();
            }
            return;
        }
        const auto l = static_cast<std::uint32_t>(depth);
        std::vector<std::pair<Vertex, Block>> candidates;
        for (Vertex v = 0; v < n; ++v) {
            if (label_[v] != kUnlabeled || color_[v] != cell_of_label_[depth]) continue;
            Block b = block_for(v, l);
            if (!candidates.empty()) {
                int c = compare_blocks(b, candidates.front().second);
                if (c > 0) continue;
                if (c < 0) candidates.clear();
            }
            candidates.emplace_back(v, std::move(b));
        }
        std::vector<Vertex> explored;
        for (auto& [v, b] : candidates) {
            if (!explored.empty() && reachable(explored, v)) continue;
            explored.push_back(v);
            current_.push_back(std::move(b));
            if (!have_best_ || prefix_state(depth + 1) <= 0) {
                label_[v] = l;
                search(depth + 1);
                label_[v] = kUnlabeled;
            }
            b = std::move(current_.back());
            current_.pop_back();
        }
    }

    // Two leaves with equal blocks: current label -> best label is an automorphism.
    void record_automorphism() {
        const std::size_t n = g_.num_vertices();
        std::vector<Vertex> at_best(n);
        for (Vertex v = 0; v < n; ++v) at_best[best_labels_[v]] = v;
        std::vector<Vertex> perm(n);
        bool identity = true;
        for (Vertex v = 0; v < n; ++v) {
            perm[v] = at_best[label_[v]];
            identity = identity && perm[v] == v;
        }
        if (!identity) automorphisms_.push_back(std::move(perm));
    }

    // Is v in the orbit of an explored sibling under the automorphisms that
    // fix every labeled vertex?
    bool reachable(const std::vector<Vertex>& explored, Vertex v) const {
        const std::size_t n = g_.num_vertices();
        std::vector<Vertex> root(n);
        std::iota(root.begin(), root.end(), Vertex{0});
        auto find = [&](Vertex x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& perm : automorphisms_) {
            bool fixes = true;
            for (Vertex u = 0; u < n && fixes; ++u) fixes = label_[u] == kUnlabeled || perm[u] == u;
            if (!fixes) continue;
            for (Vertex u = 0; u < n; ++u) root[find(u)] = find(perm[u]);
        }
        for (Vertex w : explored)
            if (find(w) == find(v)) return true;
        return false;
    }

    // Compare current_ (depth entries) with the best prefix.
    int prefix_state(std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            int c = compare_blocks(current_[i], best_[i]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }

    const Hypergraph& g_;
    std::vector<std::uint32_t> label_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> cell_of_label_;
    std::vector<Block> current_;
    std::vector<Block> best_;
    std::vector<std::uint32_t> best_labels_;
    std::vector<std::vector<Vertex>> automorphisms_;
    bool have_best_ = false;
};

void put_u32(std::string& out, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

}  // namespace

std::string canonical_form(const Hypergraph& g) {
    std::string out;
    put_u32(out, static_cast<std::uint32_t>(g.num_vertices()));
    put_u32(out, static_cast<std::uint32_t>(g.uniformity()));
    put_u32(out, static_cast<std::uint32_t>(g.num_edges()));
    if (g.num_vertices() == 0) return out;
    Canonizer canon(g);
    for (const auto& block : canon.run())
        for (const auto& t : block)
            for (auto it = t.rbegin(); it != t.rend(); ++it) put_u32(out, *it);
    return out;
}

std::string to_hex(std::string_view bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace hyperchrome
