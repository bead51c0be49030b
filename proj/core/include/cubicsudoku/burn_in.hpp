#pragma once

#include <array>
#include <vector>

#include "cubicsudoku/matching_process.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

inline constexpr int kBatchSize = 7;

struct BurnInResult {
  int discrepancy = 0;  // max_k X_k(i0) - min_k X_k(i0)
  int good_batches = 0;
  int bad_batches = 0;
  // Discrepancy after the bad batches, then after each good batch.
  std::vector<int> discrepancy_trace;
  std::array<long long, 3> x_colour{};
};

// Batch [first, first+len) is good iff it has 7 vertices, all still unsaturated at step i0.
bool batch_is_good(const MatchingProcess& process, VertexId first, int len);

int discrepancy(const std::array<long long, 3>& x);

// Reveals steps 1..i0 and colours [i0] (BalancedGreedy).
BurnInResult balanced_greedy_burn_in(MatchingProcess& process, PartialColouring& colouring, int i0);

}  // namespace cubicsudoku
