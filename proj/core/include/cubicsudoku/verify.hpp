#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

enum class VerificationStatus : std::uint8_t {
  UniqueByPropagation,
  UniqueByExactCount,
  NotUnique,
  Contradiction,
  Unknown
};
const char* status_name(VerificationStatus s);

struct VerificationResult {
  VerificationStatus status = VerificationStatus::Unknown;
  std::uint64_t count = 0;  // extension count (capped) when an exact count was run
  std::vector<VertexId> forced_order;

  bool unique() const {
    return status == VerificationStatus::UniqueByPropagation || status == VerificationStatus::UniqueByExactCount;
  }
};

// Throws InvalidInput on an uncoloured vertex.
bool check_proper(const AdjacencyGraph& g, const PartialColouring& colouring, int k);
bool check_proper(const CubicMultigraph& g, const PartialColouring& colouring, int k);

struct PropagationResult {
  PartialColouring extended;
  VerificationResult result;
};

// Colours every vertex whose coloured neighbours already use k-1 distinct colours, to a fixpoint.
PropagationResult propagate_forced(const AdjacencyGraph& g, const PartialColouring& partial, int k);

inline constexpr std::uint64_t kUncapped = std::numeric_limits<std::uint64_t>::max();

struct CountOptions {
  std::uint64_t cap = 2;
  int max_vertices = 60;
};

// Proper k-colourings extending `partial`, up to `cap`; nullopt when the size guard is exceeded.
std::optional<std::uint64_t> count_extensions(const AdjacencyGraph& g, const PartialColouring& partial, int k,
                                              CountOptions options = {});

VerificationResult is_sudoku_set(const AdjacencyGraph& g, const PartialColouring& colouring,
                                 std::span<const VertexId> set, int k, CountOptions options = {});

// Order of V \ S in which each vertex sees k-1 colours among S and earlier vertices.
std::optional<std::vector<VertexId>> strong_order(const AdjacencyGraph& g, const PartialColouring& colouring,
                                                  std::span<const VertexId> set, int k = 3);

bool is_decycling(const AdjacencyGraph& g, std::span<const VertexId> set);

struct BoundsReport {
  long long lb_edges = 0;
  long long lb_regular = 0;
  long long ub_independence = 0;
};

long long lb_edges(long long n_vertices, long long n_edges, int chi);
long long lb_regular(long long n_vertices, int d);
long long ub_independence(int chi, long long alpha);
BoundsReport bounds_report(long long n_vertices, long long n_edges, int d, int chi, long long alpha);

}  // namespace cubicsudoku
