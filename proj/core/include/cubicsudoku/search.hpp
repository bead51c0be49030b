#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/rng.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

struct SearchLimits {
  std::uint64_t cap = 1;  // stop after this many complete colourings
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
};

struct SearchOutcome {
  std::uint64_t count = 0;
  bool budget_exhausted = false;
  bool improper_input = false;
  std::uint64_t nodes = 0;
  std::optional<PartialColouring> first;
};

// Backtracking over proper k-colourings extending `partial`, branching on the
// uncoloured vertex with fewest admissible colours. With `shuffle`, colours are
// tried in random order.
SearchOutcome search_colourings(const AdjacencyGraph& g, const PartialColouring& partial, int k,
                                SearchLimits limits = {}, DeterministicRandomSource* shuffle = nullptr);

}  // namespace cubicsudoku
