#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hyperchrome/hypergraph.hpp"

namespace gen {

using hyperchrome::Hypergraph;
using hyperchrome::Vertex;
using Edges = std::vector<std::vector<Vertex>>;

class Source {
  public:
    explicit Source(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(engine_) < p; }
    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

inline Edges triples(std::size_t n) {
    Edges out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

/// Each triple independently with probability p.
inline Hypergraph graph(Source& src, std::size_t n, double p) {
    Edges chosen;
    for (auto& t : triples(n))
        if (src.chance(p)) chosen.push_back(t);
    return Hypergraph(n, 3, chosen);
}

/// Graph number `mask` among all 2^C(n,3) edge sets.
inline Hypergraph from_mask(std::size_t n, std::uint64_t mask) {
    auto all = triples(n);
    Edges chosen;
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1) chosen.push_back(all[i]);
    return Hypergraph(n, 3, chosen);
}

/// Random triples in random order, kept while every degree stays <= max_degree.
inline Hypergraph bounded_degree(Source& src, std::size_t n, std::size_t max_degree, std::size_t attempts) {
    auto all = triples(n);
    std::vector<std::size_t> deg(n, 0);
    Edges chosen;
    for (std::size_t i = 0; i < attempts && !all.empty(); ++i) {
        std::size_t j = src.below(all.size());
        auto t = all[j];
        all[j] = all.back();
        all.pop_back();
        if (std::any_of(t.begin(), t.end(), [&](Vertex v) { return deg[v] >= max_degree; })) continue;
        for (Vertex v : t) ++deg[v];
        chosen.push_back(t);
    }
    return Hypergraph(n, 3, chosen);
}

inline std::vector<Vertex> permutation(Source& src, std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[src.below(i)]);
    return p;
}

inline Hypergraph relabel(const Hypergraph& g, const std::vector<Vertex>& perm) {
    Edges out;
    for (auto e : g.edge_list()) {
        for (auto& v : e) v = perm[v];
        out.push_back(e);
    }
    return Hypergraph(g.num_vertices(), g.uniformity(), out);
}

/// Disjoint union of edge lists, second graph shifted past the first.
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    Edges out = a.edge_list();
    for (auto e : b.edge_list()) {
        for (auto& v : e) v += static_cast<Vertex>(a.num_vertices());
        out.push_back(e);
    }
    return Hypergraph(a.num_vertices() + b.num_vertices(), 3, out);
}

inline Hypergraph matching(std::size_t edges) {
    Edges out;
    for (Vertex i = 0; i < edges; ++i) out.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    return Hypergraph(3 * edges, 3, out);
}

}  // namespace gen
