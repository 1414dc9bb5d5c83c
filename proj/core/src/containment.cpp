#include "hyperchrome/containment.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperchrome {

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb) {
    if (emb.vertex_map.size() != pattern.num_vertices()) return false;
    if (emb.edge_map.size() != pattern.num_edges()) return false;
    std::vector<bool> used(host.num_vertices(), false);
    for (Vertex w : emb.vertex_map) {
        if (w >= host.num_vertices() || used[w]) return false;
        used[w] = true;
    }
    for (std::size_t i = 0; i < pattern.num_edges(); ++i) {
        if (emb.edge_map[i] >= host.num_edges()) return false;
        std::vector<Vertex> image;
        for (Vertex u : pattern.edge(i)) image.push_back(emb.vertex_map[u]);
        std::sort(image.begin(), image.end());
        auto target = host.edge(emb.edge_map[i]);
        if (!std::equal(image.begin(), image.end(), target.begin(), target.end())) return false;
    }
    return true;
}

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

class SubgraphSearch {
  public:
    SubgraphSearch(const Hypergraph& host, const Hypergraph& pattern)
        : host_(host), pattern_(pattern), map_(pattern.num_vertices(), kNone),
          used_(host.num_vertices(), false), stamp_(host.num_vertices(), 0) {}

    /// Greedy order: most pattern edges reaching placed vertices, then higher
    /// degree, then lower index.
    std::vector<Vertex> order_from(std::vector<bool> placed) const {
        std::vector<Vertex> order;
        const std::size_t n = pattern_.num_vertices();
        std::size_t remaining = static_cast<std::size_t>(std::count(placed.begin(), placed.end(), false));
        while (remaining-- > 0) {
            Vertex best = kNone;
            std::size_t best_links = 0;
            for (Vertex u = 0; u < n; ++u) {
                if (placed[u]) continue;
                std::size_t links = 0;
                for (std::size_t ei : pattern_.incident(u)) {
                    auto e = pattern_.edge(ei);
                    if (std::any_of(e.begin(), e.end(), [&](Vertex x) { return placed[x]; })) ++links;
                }
                if (best == kNone || links > best_links ||
                    (links == best_links && pattern_.degree(u) > pattern_.degree(best))) {
                    best = u;
                    best_links = links;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    bool run(const std::vector<Vertex>& order) {
        order_ = &order;
        return extend(0);
    }

    bool assign(Vertex u, Vertex w) {
        if (used_[w] || !consistent(u, w)) return false;
        map_[u] = w;
        used_[w] = true;
        return true;
    }
    void unassign(Vertex u) {
        used_[map_[u]] = false;
        map_[u] = kNone;
    }

    Embedding result() const {
        Embedding emb{map_, {}};
        for (std::size_t i = 0; i < pattern_.num_edges(); ++i) {
            std::vector<Vertex> image;
            for (Vertex u : pattern_.edge(i)) image.push_back(map_[u]);
            emb.edge_map.push_back(*host_.find_edge(image));
        }
        return emb;
    }

  private:
    bool consistent(Vertex u, Vertex w) const {
        if (pattern_.degree(u) > host_.degree(w)) return false;
        for (std::size_t ei : pattern_.incident(u)) {
            std::vector<Vertex> placed{w};
            bool full = true;
            for (Vertex x : pattern_.edge(ei)) {
                if (x == u) continue;
                if (map_[x] == kNone)
                    full = false;
                else
                    placed.push_back(map_[x]);
            }
            if (full) {
                if (!host_.has_edge(placed)) return false;
                continue;
            }
            if (placed.size() == 1) continue;
            // Some host edge through w must contain all placed images.
            bool found = false;
            for (std::size_t hi : host_.incident(w)) {
                auto he = host_.edge(hi);
                if (std::all_of(placed.begin(), placed.end(), [&](Vertex y) {
                        return std::find(he.begin(), he.end(), y) != he.end();
                    })) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        const auto& order = *order_;
        if (depth == order.size()) return true;
        const Vertex u = order[depth];

        // Anchor on the placed neighbour whose image has the smallest degree.
        Vertex anchor = kNone;
        for (std::size_t ei : pattern_.incident(u))
            for (Vertex x : pattern_.edge(ei))
                if (x != u && map_[x] != kNone &&
                    (anchor == kNone || host_.degree(map_[x]) < host_.degree(anchor)))
                    anchor = map_[x];

        std::vector<Vertex> candidates;
        if (anchor == kNone) {
            for (Vertex w = 0; w < host_.num_vertices(); ++w)
                if (!used_[w]) candidates.push_back(w);
        } else {
            ++epoch_;
            for (std::size_t hi : host_.incident(anchor))
                for (Vertex w : host_.edge(hi))
                    if (!used_[w] && stamp_[w] != epoch_) {
                        stamp_[w] = epoch_;
                        candidates.push_back(w);
                    }
            std::sort(candidates.begin(), candidates.end());
        }
        for (Vertex w : candidates) {
            if (!assign(u, w)) continue;
            if (extend(depth + 1)) return true;
            unassign(u);
        }
        return false;
    }

    const Hypergraph& host_;
    const Hypergraph& pattern_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    const std::vector<Vertex>* order_ = nullptr;
};

}  // namespace

std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern,
                                  std::optional<std::size_t> through_edge) {
    if (host.uniformity() != pattern.uniformity())
        throw std::invalid_argument("containment needs equal uniformity");
    if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
    if (pattern.num_edges() > host.num_edges()) return std::nullopt;

    SubgraphSearch search(host, pattern);
    if (!through_edge) {
        auto order = search.order_from(std::vector<bool>(pattern.num_vertices(), false));
        if (search.run(order)) return search.result();
        return std::nullopt;
    }

    auto target = host.edge(*through_edge);
    for (std::size_t pi = 0; pi < pattern.num_edges(); ++pi) {
        std::vector<Vertex> pv(pattern.edge(pi).begin(), pattern.edge(pi).end());
        std::vector<bool> placed(pattern.num_vertices(), false);
        for (Vertex u : pv) placed[u] = true;
        auto order = search.order_from(placed);

        std::vector<Vertex> image(target.begin(), target.end());
        do {
            std::size_t done = 0;
            bool ok = true;
            for (; done < pv.size(); ++done)
                if (!search.assign(pv[done], image[done])) {
                    ok = false;
                    break;
                }
            if (ok && search.run(order)) return search.result();
            while (done-- > 0) search.unassign(pv[done]);
        } while (std::next_permutation(image.begin(), image.end()));
    }
    return std::nullopt;
}

}  // namespace hyperchrome
