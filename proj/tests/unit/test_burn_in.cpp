#include <gtest/gtest.h>

#include "cubicsudoku/burn_in.hpp"
#include "cubicsudoku/pipeline.hpp"

using namespace cubicsudoku;

namespace {

// 1..7 matched beyond i0 = 14; 8-9 matched inside [14].
CubicMultigraph two_batch_graph() {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId v = 1; v <= 7; ++v) pairs.emplace_back(v, 20 + v);
  pairs.emplace_back(8, 9);
  for (VertexId v = 10; v <= 14; ++v) pairs.emplace_back(v, 18 + v);
  for (VertexId v = 15; v <= 20; ++v) pairs.emplace_back(v, 18 + v);
  pairs.emplace_back(39, 40);
  return CubicMultigraph::from_pairs(40, pairs);
}

void expect_proper_prefix(const MatchingProcess& p, const PartialColouring& c, int i0) {
  for (VertexId v = 1; v <= i0; ++v) {
    ASSERT_TRUE(c.coloured(v));
    if (v < i0) ASSERT_NE(c[v], c[v + 1]) << v;
    const VertexId q = p.revealed_partner(v);
    if (q != 0) ASSERT_NE(c[v], c[q]) << v;
  }
}

}  // namespace

TEST(BurnIn, GoodAndBadBatches) {
  MatchingProcess p(two_batch_graph());
  while (p.step() < 14) p.reveal_step();
  EXPECT_TRUE(batch_is_good(p, 1, 7));
  EXPECT_FALSE(batch_is_good(p, 8, 7));
  EXPECT_FALSE(batch_is_good(p, 1, 6));
}

TEST(BurnIn, CountsBatchesAndColoursProperly) {
  MatchingProcess p(two_batch_graph());
  PartialColouring c(40);
  const auto r = balanced_greedy_burn_in(p, c, 14);
  EXPECT_EQ(r.good_batches, 1);
  EXPECT_EQ(r.bad_batches, 1);
  expect_proper_prefix(p, c, 14);
}

TEST(BurnIn, RejectsShortPrefix) {
  MatchingProcess p(100, 1);
  PartialColouring c(100);
  EXPECT_THROW(balanced_greedy_burn_in(p, c, 6), InvalidInput);
}

TEST(BurnIn, DiscrepancyShrinksOrStaysSmall) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    MatchingProcess p(20000, s);
    PartialColouring c(20000);
    const int i0 = default_i0(20000);
    const auto r = balanced_greedy_burn_in(p, c, i0);
    expect_proper_prefix(p, c, i0);
    for (std::size_t j = 1; j < r.discrepancy_trace.size(); ++j) {
      const int before = r.discrepancy_trace[j - 1];
      const int after = r.discrepancy_trace[j];
      if (before > 1) EXPECT_LE(after, before - 1);
      else EXPECT_LE(after, 1);
    }
    std::array<long long, 3> x{};
    for (VertexId v : p.unsaturated()) ++x[c[v] - 1];
    EXPECT_EQ(x, r.x_colour);
    EXPECT_EQ(r.discrepancy, discrepancy(x));
  }
}

TEST(BurnIn, DefaultPhaseBalancesAtN1e5) {
  int balanced = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    PipelineConfig cfg;
    cfg.n = 100000;
    cfg.seed = s;
    SudokuPipeline pipe(cfg);
    if (pipe.burn_in().discrepancy <= 1) ++balanced;
  }
  EXPECT_GE(balanced, 95);
}
