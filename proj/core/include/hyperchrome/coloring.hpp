#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hyperchrome/containment.hpp"
#include "hyperchrome/exact.hpp"
#include "hyperchrome/hypergraph.hpp"
#include "hyperchrome/rng.hpp"

namespace hyperchrome {

/// Raised when an operation is called outside its stated precondition
/// (e.g. lll_color on a graph whose degrees are too large).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr Color kUncolored = static_cast<Color>(-1);

// ---------------------------------------------------------------------------
// Greedy (Pluhar) coloring and ordered chains

/// Minimal-color greedy coloring along an order, with one witness edge per
/// skipped color: witness[v][c] is an edge containing v whose other vertices
/// come earlier and all carry color c.
struct GreedyTrace {
    Coloring coloring;  // palette == number of colors used
    std::vector<std::vector<std::size_t>> witness;
};

/// Greedy hit the palette cap at `vertex`.
struct GreedyFailure {
    Vertex vertex = 0;
    std::vector<std::size_t> witnesses;  // one edge per color 0..cap-1
    std::vector<Color> colors;           // kUncolored from `vertex` on
    std::vector<std::vector<std::size_t>> witness;
};

using GreedyResult = std::variant<GreedyTrace, GreedyFailure>;

GreedyResult greedy_pluhar(const Hypergraph& g, const VertexOrder& order,
                           std::optional<std::size_t> palette_cap = std::nullopt);

/// Ordered (C-1)-chain certifying a C-color greedy trace (C >= 2). Starts at
/// the first vertex of top color and descends through witness edges to their
/// earliest vertex. Throws std::invalid_argument if the trace does not match.
OrderedChain extract_chain(const Hypergraph& g, const VertexOrder& order, const GreedyTrace& trace);

/// Ordered cap-chain ending at the failing vertex of a capped greedy run.
OrderedChain failure_chain(const Hypergraph& g, const VertexOrder& order, const GreedyFailure& failure);

struct IndependentSet {
    std::vector<Vertex> vertices;
};

/// With n >= (t-1)r + 1: either an ordered r-chain (greedy needs more than r
/// colors) or the largest greedy color class, of size >= t.
std::variant<OrderedChain, IndependentSet> chain_or_independent(const Hypergraph& g,
                                                                const VertexOrder& order,
                                                                std::size_t r, std::size_t t);

// ---------------------------------------------------------------------------
// Local lemma machinery
//
// e is replaced by a rational upper bound so every threshold comparison is
// exact integer arithmetic and errs on the conservative side.

inline constexpr std::int64_t kEUpperNum = 438351041;
inline constexpr std::int64_t kEUpperDen = 161260336;

/// degree <= r^2 / (3e)
bool within_lll_degree(std::size_t degree, std::size_t r);
/// degree <= c r^2 with c = 1/(12e)
bool is_small_degree(std::size_t degree, std::size_t r);
/// k with 2^k c r^2 <= degree < 2^(k+1) c r^2, for degree > c r^2.
std::optional<std::size_t> dyadic_index(std::size_t degree, std::size_t r);

struct LllReport {
    bool ok = false;
    std::size_t max_degree = 0;
    Rational p;              // 1/r^2, probability an edge is monochromatic
    std::size_t d = 0;       // dependency degree 3(max_degree - 1)
    double e_p_d1 = 0.0;     // e * p * (d + 1), informational
};

LllReport lll_check(const Hypergraph& g, std::size_t r);

struct LllColoring {
    Coloring coloring;
    std::uint64_t resamples = 0;
};

struct ResampleCapExceeded {
    std::uint64_t resamples = 0;
};

/// Uniform random r-coloring followed by resampling the lowest-index
/// monochromatic edge until none is left. Default cap: 1000 |E|. Throws
/// PreconditionError when `enforce_check` is set and lll_check fails.
std::variant<LllColoring, ResampleCapExceeded> lll_color(const Hypergraph& g, std::size_t r, RngSeed seed,
                                                         std::optional<std::uint64_t> max_resamples = std::nullopt,
                                                         bool enforce_check = true);

struct SizeSplit {
    std::vector<Vertex> small;  // deg <= c r^2
    std::vector<Vertex> big;
};

SizeSplit small_big_split(const Hypergraph& g, std::size_t r);

// ---------------------------------------------------------------------------
// Layered peeling

struct LayerDecomposition {
    std::vector<std::vector<Vertex>> layers;  // L_i = V_i \ V_{i+1}
    std::size_t threshold = 0;
    std::vector<Vertex> residual_core;        // nonempty if peeling got stuck

    bool complete() const noexcept { return residual_core.empty(); }
};

/// V_0 = V, V_{i+1} = {v in V_i : deg_{G[V_i]}(v) >= threshold}. Stops at the
/// empty set or at a fixpoint, which is then reported as the residual core.
LayerDecomposition peel_layers(const Hypergraph& g, std::size_t threshold);

struct LayeredColoring {
    Coloring coloring;
    LayerDecomposition decomposition;
    std::uint64_t resamples = 0;
};

struct LayeredFailure {
    enum class Reason { residual_core, layer_check, resample_cap };
    Reason reason;
    std::size_t layer = 0;
};

/// Colors layer i with its own block of `per_layer` colors via lll_color.
std::variant<LayeredColoring, LayeredFailure> layered_color(const Hypergraph& g, std::size_t threshold,
                                                            std::size_t per_layer, RngSeed seed);

// ---------------------------------------------------------------------------
// Dyadic degree classes and independent-set removal

struct DyadicClasses {
    std::map<std::size_t, std::vector<Vertex>> classes;  // k -> V_k, nonempty only
    Rational base_threshold;                             // c r^2
};

DyadicClasses dyadic_classes(const Hypergraph& g, std::size_t r);

struct RemovalStep {
    std::size_t dyadic_class = 0;
    std::vector<Vertex> vertices;  // colored with this step's color
    bool exact = false;            // independent set came from the exact search
};

struct RemovalColoring {
    Coloring coloring;
    std::vector<RemovalStep> steps;
    std::uint64_t resamples = 0;
};

struct RemovalFailure {
    enum class Reason { palette_exhausted, budget_exhausted, resample_cap };
    Reason reason;
    std::size_t step = 0;
    std::size_t uncolored = 0;
};

/// Repeatedly colors a large independent set of the busiest dyadic class with
/// a fresh color and drops it, until every remaining degree is <= c r'^2 for
/// the remaining palette r'; the rest is finished with lll_color.
std::variant<RemovalColoring, RemovalFailure> independent_removal_color(const Hypergraph& g, std::size_t r,
                                                                        RngSeed seed,
                                                                        const SearchBudget& budget = {});

/// The extraction found an edge inside its transversal: a copy of sunflower7.
struct SunflowerCertificate {
    Embedding embedding;
};

/// Greedy with cap r'. On failure at v, one earliest vertex from each witness
/// edge minus v; for sunflower7-free graphs this set is independent.
std::variant<Coloring, IndependentSet, SunflowerCertificate> e288_extract(const Hypergraph& g,
                                                                         const VertexOrder& order,
                                                                         std::size_t r_prime);

const char* to_string(LayeredFailure::Reason reason);
const char* to_string(RemovalFailure::Reason reason);

}  // namespace hyperchrome
