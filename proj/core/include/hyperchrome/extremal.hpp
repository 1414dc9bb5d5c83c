#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperchrome/containment.hpp"
#include "hyperchrome/exact.hpp"
#include "hyperchrome/hypergraph.hpp"

namespace hyperchrome {

// ---------------------------------------------------------------------------
// Edge orderings h_1..h_m where each later edge is {a, b, c} with {a, b}
// inside an earlier edge and c a fresh vertex.

struct EdgeOrderStep {
    std::size_t edge = 0;       // edge index in H
    std::size_t parent = npos;  // position j(i) of the earlier edge; npos for the first step
    Vertex a = 0, b = 0, c = 0;
};

struct EdgeOrdering {
    std::vector<EdgeOrderStep> steps;
};

/// Requires a 3-graph with |V| = |E| + 2 (throws std::invalid_argument
/// otherwise). Returns nothing when no valid ordering exists.
std::optional<EdgeOrdering> find_edge_ordering(const Hypergraph& h);

bool is_valid_edge_ordering(const Hypergraph& h, const EdgeOrdering& ordering);

/// Drops, until nothing changes, every edge with a vertex pair covered by at
/// most t-3 edges. Afterwards each pair lies in 0 or >= t-2 edges.
Hypergraph prune_low_support(const Hypergraph& g, std::size_t t);

/// Prunes with t = |V(H)|, then grows a copy of H edge by edge along the
/// ordering. Empty result iff pruning removed every edge.
std::optional<Embedding> embed_by_edge_order(const Hypergraph& g, const Hypergraph& h,
                                             const EdgeOrdering& ordering);

// ---------------------------------------------------------------------------
// Exhaustive Turan / Ramsey values

enum class RecordKind { ex, ramsey };
enum class RecordStatus { exact, lower_bound };

const char* to_string(RecordKind kind);
const char* to_string(RecordStatus status);

struct ResultRecord {
    RecordKind kind = RecordKind::ex;
    std::string key;            // hex canonical form of H
    std::size_t parameter = 0;  // n for ex, t for ramsey
    std::size_t value = 0;
    Hypergraph witness;         // extremal H-free graph / Ramsey-critical graph on value-1 vertices
    RecordStatus status = RecordStatus::exact;
    std::uint64_t nodes = 0;
};

std::string pattern_key(const Hypergraph& h);

/// ex(n, H) by search over isomorphism classes of H-free graphs.
ResultRecord turan_ex(std::size_t n, const Hypergraph& h, const SearchBudget& budget = {});

/// R(H, K_t): least n <= n_max such that no H-free 3-graph on n vertices has
/// independence number < t. If the cap is reached, the record is a
/// lower bound n_max + 1 with a witness on n_max vertices.
ResultRecord ramsey(const Hypergraph& h, std::size_t t, std::size_t n_max, const SearchBudget& budget = {});

/// Witness checks only (H-freeness, vertex/edge counts, independence); the
/// optimality of the value is not re-derived.
bool revalidate(const ResultRecord& record, const Hypergraph& h);

// ---------------------------------------------------------------------------

struct WitnessReport {
    bool h_free = false;
    bool chi_exceeds_r = false;
    std::optional<std::size_t> chi;      // empty if the solver ran out of budget
    std::size_t edge_count = 0;
    std::optional<std::size_t> implied_bound;  // m_H(r) <= edge_count
    std::optional<Coloring> coloring;    // optimal coloring when chi is known
    std::optional<Embedding> copy;       // copy of H when not free
};

WitnessReport verify_witness(const Hypergraph& g, const Hypergraph& h, std::size_t r,
                             const SearchBudget& budget = {});

}  // namespace hyperchrome
