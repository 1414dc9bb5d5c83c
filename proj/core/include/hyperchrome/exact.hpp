#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hyperchrome/hypergraph.hpp"

namespace hyperchrome {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_millis = 0;  // 0 = unlimited
};

/// Node and wall-clock accounting shared by the exhaustive searches.
class BudgetMeter {
  public:
    explicit BudgetMeter(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; false once the budget is spent.
    bool tick() {
        if (exhausted_) return false;
        if (++nodes_ > budget_.max_nodes) return !(exhausted_ = true);
        if (budget_.max_millis != 0 && (nodes_ & 1023) == 0 && elapsed_ms() > budget_.max_millis)
            return !(exhausted_ = true);
        return true;
    }
    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::uint64_t elapsed_ms() const {
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start_)
                                              .count());
    }

  private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

enum class Outcome { found, none, exhausted };

struct ColorabilityResult {
    Outcome outcome = Outcome::none;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

/// Backtracking k-coloring over vertices in descending-degree order with
/// forward checking: an edge whose other vertices all share color c forbids c
/// on its last uncolored vertex.
ColorabilityResult k_colorable(const Hypergraph& g, std::size_t k, const SearchBudget& budget = {});

struct ChromaticResult {
    std::optional<std::size_t> chi;  // empty when the budget ran out
    std::optional<Coloring> coloring;
    std::size_t lower_bound = 1;  // every k below this was refuted
    std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const Hypergraph& g, const SearchBudget& budget = {});

struct IndependentSetResult {
    std::vector<Vertex> vertices;  // best set found, ascending
    bool exhausted = false;        // true: `vertices` may not be maximum
    std::uint64_t nodes = 0;
};

/// Include/exclude branch and bound with bound |current| + |undecided|.
IndependentSetResult max_independent_set(const Hypergraph& g, const SearchBudget& budget = {});

}  // namespace hyperchrome
