#include <gtest/gtest.h>

#include "cubicsudoku/exact.hpp"
#include "cubicsudoku/verify.hpp"
#include "oracles.hpp"

using namespace cubicsudoku;

namespace {

// Smallest Sudoku set by trying every subset and every colouring via brute counting.
int brute_min_sudoku(const AdjacencyGraph& g, int k) {
  const int n = g.n();
  std::vector<PartialColouring> proper;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  for (long long code = 0; code < total; ++code) {
    PartialColouring c(n);
    long long x = code;
    for (VertexId v = 1; v <= n; ++v) {
      c.set(v, static_cast<Colour>(x % k + 1));
      x /= k;
    }
    bool ok = true;
    for (auto [a, b] : g.edges()) ok = ok && c[a] != c[b];
    if (ok) proper.push_back(c);
  }
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    for (const auto& c : proper) {
      int agreeing = 0;
      for (const auto& d : proper) {
        bool same = true;
        for (VertexId v = 1; v <= n && same; ++v)
          if (mask & (1u << (v - 1))) same = c[v] == d[v];
        agreeing += same;
      }
      if (agreeing == 1) {
        best = size;
        break;
      }
    }
  }
  return best;
}

}  // namespace

TEST(MinSudoku, CompleteGraph) {
  const auto r = min_sudoku_exact(complete_graph(4), 4);
  EXPECT_EQ(r.size, 3);
  EXPECT_THROW(min_sudoku_exact(complete_graph(4), 3), InvalidInput);
}

TEST(MinSudoku, EvenCycleTwoColours) {
  EXPECT_EQ(min_sudoku_exact(cycle_graph(4), 2).size, 1);
  EXPECT_EQ(min_sudoku_exact(path_graph(5), 2).size, 1);
}

TEST(MinSudoku, PrismMatchesBruteForce) {
  const auto prism = triangular_prism();
  const auto r = min_sudoku_exact(prism, 3);
  EXPECT_GE(r.size, static_cast<int>(lb_regular(6, 3)));
  EXPECT_EQ(r.size, brute_min_sudoku(prism, 3));
  ASSERT_EQ(static_cast<int>(r.set.size()), r.size);
  EXPECT_EQ(oracle::brute_count(prism, r.colouring, 3), 1u);
}

TEST(MinSudoku, SmallCubicAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = AdjacencyGraph::from_cubic(generate_graph(8, seed));
    if (!count_extensions(g, PartialColouring(8), 3).value_or(0)) continue;
    EXPECT_EQ(min_sudoku_exact(g, 3).size, brute_min_sudoku(g, 3)) << seed;
  }
}

TEST(MinSudoku, GuardsSize) { EXPECT_THROW(min_sudoku_exact(cycle_graph(16), 3), InvalidInput); }

TEST(MaxIndependent, KnownValues) {
  EXPECT_EQ(max_independent_exact(complete_graph(5)), 1);
  EXPECT_EQ(max_independent_exact(cycle_graph(7)), 3);
  EXPECT_EQ(max_independent_exact(cycle_graph(8)), 4);
  EXPECT_EQ(max_independent_exact(path_graph(5)), 3);
  EXPECT_EQ(max_independent_exact(triangular_prism()), 2);
  // Petersen graph.
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);
    e.emplace_back(i + 1, i + 6);
    e.emplace_back(i + 6, (i + 2) % 5 + 6);
  }
  EXPECT_EQ(max_independent_exact(AdjacencyGraph(10, e)), 4);
  EXPECT_THROW(max_independent_exact(cycle_graph(50)), InvalidInput);
}
