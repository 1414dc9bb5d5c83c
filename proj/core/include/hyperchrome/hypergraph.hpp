#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hyperchrome {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored as sorted k-tuples in a flat array, ordered
/// lexicographically and free of duplicates. The incidence lists are built
/// once at construction; the object is immutable afterwards.
class Hypergraph {
  public:
    Hypergraph() = default;

    /// Normalizes (sorts, deduplicates) the edge list. Throws
    /// std::invalid_argument on an edge of the wrong size, a repeated vertex
    /// inside an edge, or a vertex index >= n.
    Hypergraph(std::size_t n, std::size_t k, const std::vector<std::vector<Vertex>>& edges);

    static Hypergraph empty(std::size_t n, std::size_t k = 3) { return Hypergraph(n, k, {}); }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t uniformity() const noexcept { return k_; }
    std::size_t num_edges() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }

    std::span<const Vertex> edge(std::size_t i) const noexcept {
        return {flat_.data() + i * k_, k_};
    }
    std::vector<std::vector<Vertex>> edge_list() const;

    /// Indices of edges containing v.
    std::span<const std::size_t> incident(Vertex v) const noexcept { return incidence_[v]; }
    std::size_t degree(Vertex v) const noexcept { return incidence_[v].size(); }
    std::size_t max_degree() const noexcept;

    /// Index of the edge with exactly these vertices (any order), if present.
    std::optional<std::size_t> find_edge(std::span<const Vertex> vertices) const;
    bool has_edge(std::span<const Vertex> vertices) const { return find_edge(vertices).has_value(); }

    /// Vertices with degree > 0, ascending.
    std::vector<Vertex> covered_vertices() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
    }

  private:
    std::size_t n_ = 0;
    std::size_t k_ = 3;
    std::vector<Vertex> flat_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Vertex coloring with colors in [0, palette).
struct Coloring {
    std::vector<Color> colors;
    std::size_t palette = 0;

    Coloring() = default;
    /// Throws std::invalid_argument if some color >= palette.
    Coloring(std::vector<Color> colors, std::size_t palette);

    /// Number of distinct colors actually used.
    std::size_t colors_used() const;
    /// Vertices grouped by color, indexed by color.
    std::vector<std::vector<Vertex>> classes() const;
};

/// A linear order on the vertices together with its inverse.
class VertexOrder {
  public:
    VertexOrder() = default;
    /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
    explicit VertexOrder(std::vector<Vertex> order);

    static VertexOrder identity(std::size_t n);

    std::size_t size() const noexcept { return order_.size(); }
    const std::vector<Vertex>& order() const noexcept { return order_; }
    std::size_t position(Vertex v) const noexcept { return position_[v]; }
    Vertex at(std::size_t i) const noexcept { return order_[i]; }
    VertexOrder reversed() const;

  private:
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
};

/// Edges g_1..g_r; consecutive edges meet in one vertex, others are disjoint.
struct OrderedChain {
    std::vector<std::vector<Vertex>> edges;

    std::size_t length() const noexcept { return edges.size(); }
};

struct Balance {
    Rational value;
    std::vector<std::size_t> witness;  // edge indices of the maximizing subgraph
    bool is_balanced = false;
};

struct InducedSubgraph {
    Hypergraph graph;
    std::vector<Vertex> to_parent;  // local vertex -> vertex of the parent graph
};

/// Subgraph on `vertices` (relabeled 0..|S|-1 in the given order) keeping every
/// edge that lies entirely inside the set.
InducedSubgraph induced(const Hypergraph& g, std::span<const Vertex> vertices);

/// First monochromatic edge, if any.
std::optional<std::size_t> monochromatic_edge(const Hypergraph& g, const Coloring& c);
inline bool is_proper(const Hypergraph& g, const Coloring& c) { return !monochromatic_edge(g, c); }

/// True when no edge of g lies inside `vertices`.
bool is_independent(const Hypergraph& g, std::span<const Vertex> vertices);

bool is_linear(const Hypergraph& g);

/// Berge-acyclicity: the vertex/edge incidence graph has no cycle.
bool is_hyperforest(const Hypergraph& g);

/// max over subgraphs with >= 2 edges of (e'-1)/(v'-3), by enumeration of
/// edge subsets. Requires a 3-graph with 2..30 edges.
Balance balance(const Hypergraph& g);

bool is_ordered_chain(const Hypergraph& g, const OrderedChain& chain, const VertexOrder& order);

/// Isomorphism-invariant byte string: equal iff the hypergraphs are isomorphic.
std::string canonical_form(const Hypergraph& g);

/// Lowercase hex of a byte string (cache keys, reports).
std::string to_hex(std::string_view bytes);

}  // namespace hyperchrome
