#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

enum class CompletionMode : std::uint8_t { EvenCycleInterval, BacktrackFallback, Failed };
const char* completion_mode_name(CompletionMode m);

// Proper colouring of a cycle v_0..v_{L-1} from 2-colour lists. Works for any
// cycle length unless all lists are equal and L is odd.
std::vector<Colour> list_colour_even_cycle(std::span<const std::array<Colour, 2>> lists);

// First interval {l..r} inside [first, last] with partner(l) = r, r - l + 1 even and >= 4,
// and every interior vertex matched outside the interval.
std::optional<std::pair<VertexId, VertexId>> find_even_cycle_interval(const CubicMultigraph& g,
                                                                      VertexId first, VertexId last);

struct CompletionResult {
  PartialColouring colouring;
  CompletionMode mode = CompletionMode::Failed;
  VertexId interval_first = 0;
  VertexId interval_last = 0;
};

inline constexpr std::uint64_t kDefaultCompletionBudget = 50'000'000;

// Colours i1+1..n given a proper colouring of [i1].
CompletionResult completion_phase(const CubicMultigraph& g, PartialColouring colouring, VertexId i1,
                                  std::uint64_t node_budget = kDefaultCompletionBudget);

}  // namespace cubicsudoku
