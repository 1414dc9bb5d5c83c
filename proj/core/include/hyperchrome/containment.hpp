#pragma once

#include <optional>
#include <vector>

#include "hyperchrome/hypergraph.hpp"

namespace hyperchrome {

/// Copy of a pattern inside a host (not necessarily induced).
struct Embedding {
    std::vector<Vertex> vertex_map;       // pattern vertex -> host vertex, injective
    std::vector<std::size_t> edge_map;    // pattern edge -> host edge index
};

/// Checks injectivity and that every pattern edge lands on the recorded host edge.
bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb);

/// Backtracking subgraph search. When `through_edge` is given, only copies
/// that use that host edge are considered (incremental H-freeness checks).
std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern,
                                  std::optional<std::size_t> through_edge = std::nullopt);

inline bool is_free(const Hypergraph& host, const Hypergraph& pattern) {
    return !contains(host, pattern).has_value();
}

}  // namespace hyperchrome
