#include "cubicsudoku/exact.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "cubicsudoku/verify.hpp"

namespace cubicsudoku {

MinSudokuResult min_sudoku_exact(const AdjacencyGraph& g, int k, int max_vertices) {
  const int n = g.n();
  if (n > max_vertices) throw InvalidInput("min_sudoku_exact refuses n = " + std::to_string(n));
  if (k < 1) throw InvalidInput("k must be positive");
  const CountOptions opts{2, n};
  if (count_extensions(g, PartialColouring(n), k, opts).value_or(0) == 0)
    throw InvalidInput("graph is not " + std::to_string(k) + "-colourable");

  std::vector<VertexId> set;
  PartialColouring partial(n);

  // Restricted growth strings: each vertex of S takes a colour at most one above the largest so far.
  auto try_colourings = [&](auto&& self, std::size_t pos, int used) -> bool {
    if (pos == set.size()) return count_extensions(g, partial, k, opts).value_or(0) == 1;
    const VertexId v = set[pos];
    const int top = std::min(k, used + 1);
    for (int c = 1; c <= top; ++c) {
      bool clash = false;
      for (VertexId u : g.neighbours(v))
        if (partial[u] == c) clash = true;
      if (clash) continue;
      partial.set(v, static_cast<Colour>(c));
      if (self(self, pos + 1, std::max(used, c))) return true;
      partial.set(v, kUncoloured);
    }
    return false;
  };

  auto try_subsets = [&](auto&& self, VertexId next, int remaining) -> bool {
    if (remaining == 0) return try_colourings(try_colourings, 0, 0);
    for (VertexId v = next; v <= n - remaining + 1; ++v) {
      set.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      set.pop_back();
    }
    return false;
  };

  for (int size = 0; size <= n; ++size) {
    set.clear();
    partial = PartialColouring(n);
    if (try_subsets(try_subsets, 1, size)) return {size, set, partial};
  }
  throw InvariantViolation("no Sudoku set found although the graph is colourable");
}

int max_independent_exact(const AdjacencyGraph& g, int max_vertices) {
  const int n = g.n();
  if (n > max_vertices || n > 64) throw InvalidInput("max_independent_exact refuses n = " + std::to_string(n));
  std::vector<std::uint64_t> closed(n, 0);
  for (VertexId v = 1; v <= n; ++v) {
    closed[v - 1] |= 1ULL << (v - 1);
    for (VertexId u : g.neighbours(v)) closed[v - 1] |= 1ULL << (u - 1);
  }
  int best = 0;
  auto branch = [&](auto&& self, std::uint64_t candidates, int size) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    self(self, candidates & ~closed[v], size + 1);
    self(self, candidates & ~(1ULL << v), size);
  };
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  branch(branch, all, 0);
  return best;
}

}  // namespace cubicsudoku
