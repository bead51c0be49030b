#include "cubicsudoku/burn_in.hpp"

#include <algorithm>
#include <string>

namespace cubicsudoku {

int discrepancy(const std::array<long long, 3>& x) {
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return static_cast<int>(*hi - *lo);
}

bool batch_is_good(const MatchingProcess& process, VertexId first, int len) {
  if (len != kBatchSize) return false;
  for (VertexId v = first; v < first + len; ++v)
    if (!process.is_unsaturated(v)) return false;
  return true;
}

namespace {

Colour smallest_admissible(unsigned forbidden_mask) {
  for (Colour c = 1; c <= 3; ++c)
    if ((forbidden_mask & (1u << c)) == 0) return c;
  throw InvariantViolation("burn-in: no admissible colour");
}

}  // namespace

BurnInResult balanced_greedy_burn_in(MatchingProcess& process, PartialColouring& colouring, int i0) {
  if (i0 < kBatchSize) throw InvalidInput("burn-in length must be at least 7, got " + std::to_string(i0));
  if (process.step() != 0) throw InvalidInput("burn-in needs a fresh matching process");
  if (i0 >= process.n()) throw InvalidInput("burn-in length must be below n");
  while (process.step() < i0) process.reveal_step();

  BurnInResult result;
  auto& x = result.x_colour;
  std::vector<VertexId> good;

  for (VertexId first = 1; first <= i0; first += kBatchSize) {
    const int len = std::min(kBatchSize, i0 - first + 1);
    if (batch_is_good(process, first, len)) {
      good.push_back(first);
      continue;
    }
    ++result.bad_batches;
    for (VertexId v = first; v < first + len; ++v) {
      unsigned forbidden = 0;
      if (v > 1) forbidden |= 1u << colouring[v - 1];
      if (v < i0) forbidden |= 1u << colouring[v + 1];
      const VertexId p = process.revealed_partner(v);
      if (p != 0) forbidden |= 1u << colouring[p];
      const Colour c = smallest_admissible(forbidden & ~1u);
      colouring.set(v, c);
      if (p == 0) ++x[c - 1];
    }
  }
  result.discrepancy_trace.push_back(discrepancy(x));

  for (VertexId first : good) {
    ++result.good_batches;
    const Colour left = first > 1 ? colouring[first - 1] : kUncoloured;
    const VertexId right_v = first + kBatchSize;
    const Colour right = right_v <= i0 ? colouring[right_v] : kUncoloured;

    std::array<Colour, kBatchSize> seq{};
    std::array<Colour, kBatchSize> best{};
    int best_d = -1;
    // Lexicographic enumeration; the first minimum found is the lexicographically smallest.
    auto recurse = [&](auto&& self, int pos) -> void {
      if (pos == kBatchSize) {
        if (right != kUncoloured && seq[kBatchSize - 1] == right) return;
        auto y = x;
        for (Colour c : seq) ++y[c - 1];
        const int d = discrepancy(y);
        if (best_d < 0 || d < best_d) {
          best_d = d;
          best = seq;
        }
        return;
      }
      const Colour prev = pos == 0 ? left : seq[pos - 1];
      for (Colour c = 1; c <= 3; ++c) {
        if (c == prev) continue;
        seq[pos] = c;
        self(self, pos + 1);
      }
    };
    recurse(recurse, 0);
    if (best_d < 0) throw InvariantViolation("burn-in: good batch has no proper colouring");
    for (int j = 0; j < kBatchSize; ++j) {
      colouring.set(first + j, best[j]);
      ++x[best[j] - 1];
    }
    result.discrepancy_trace.push_back(best_d);
  }
  result.discrepancy = discrepancy(x);
  return result;
}

}  // namespace cubicsudoku
