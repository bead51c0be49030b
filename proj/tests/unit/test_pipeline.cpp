#include <gtest/gtest.h>

#include <algorithm>

#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/verify.hpp"

using namespace cubicsudoku;

TEST(Defaults, PhaseSizes) {
  EXPECT_EQ(default_i0(100), 22);
  EXPECT_EQ(default_tail(100), 25);
  EXPECT_EQ(default_i0(500), 63);
  EXPECT_EQ(default_tail(500), 125);
  EXPECT_EQ(default_i0(200000), 3420);
  EXPECT_EQ(default_tail(200000), 8945);
  EXPECT_EQ(default_i0(1000), 100);
  EXPECT_EQ(default_i0(8), 7);
}

TEST(Config, Validation) {
  PipelineConfig c;
  c.n = 3;
  EXPECT_THROW(c.resolved(), InvalidInput);
  c.n = 1000;
  c.i0 = 900;
  c.tail = 200;
  EXPECT_THROW(c.resolved(), InvalidInput);
  c.i0 = 0;
  c.tail = 0;
  const auto r = c.resolved();
  EXPECT_EQ(r.i0, default_i0(1000));
  EXPECT_EQ(r.sample_every, 1);
}

TEST(Pipeline, Deterministic) {
  PipelineConfig cfg;
  cfg.n = 2000;
  cfg.seed = 77;
  const auto a = full_pipeline(cfg);
  const auto b = full_pipeline(cfg);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.colouring, b.colouring);
  EXPECT_EQ(a.sudoku_set, b.sudoku_set);
  cfg.seed = 78;
  EXPECT_NE(full_pipeline(cfg).sudoku_set, a.sudoku_set);
}

TEST(Pipeline, GraphMatchesStandaloneGenerationLaw) {
  PipelineConfig cfg;
  cfg.n = 1000;
  cfg.seed = 3;
  const auto r = full_pipeline(cfg);
  for (VertexId v = 1; v <= 1000; ++v) EXPECT_EQ(r.graph.partner(r.graph.partner(v)), v);
}

TEST(Pipeline, SetStructure) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    PipelineConfig cfg;
    cfg.n = 3000;
    cfg.seed = s;
    const auto r = full_pipeline(cfg);
    const auto& c = r.config;
    ASSERT_TRUE(r.completed);
    EXPECT_TRUE(std::is_sorted(r.sudoku_set.begin(), r.sudoku_set.end()));
    EXPECT_TRUE(std::adjacent_find(r.sudoku_set.begin(), r.sudoku_set.end()) == r.sudoku_set.end());
    auto contains = [&](VertexId v) { return std::binary_search(r.sudoku_set.begin(), r.sudoku_set.end(), v); };
    for (VertexId v = 1; v <= c.i0; ++v) EXPECT_TRUE(contains(v));
    for (VertexId v = c.i1(); v <= c.n; ++v) EXPECT_TRUE(contains(v));
    EXPECT_TRUE(r.size_bound);
    EXPECT_EQ(r.counts.bc + r.counts.buc + r.counts.bud, static_cast<int>(r.case_counts[1] + r.case_counts[2] +
                                                                          r.case_counts[4] + r.case_counts[5] +
                                                                          r.case_counts[6] + r.case_counts[7]));
  }
}

TEST(Pipeline, SetIsSudokuWithStrongOrder) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    PipelineConfig cfg;
    cfg.n = 1000;
    cfg.seed = s;
    const auto r = full_pipeline(cfg);
    ASSERT_TRUE(r.completed);
    const auto g = AdjacencyGraph::from_cubic(r.graph);
    EXPECT_TRUE(check_proper(g, r.colouring, 3));
    EXPECT_TRUE(strong_order(g, r.colouring, r.sudoku_set).has_value());
    EXPECT_EQ(is_sudoku_set(g, r.colouring, r.sudoku_set, 3).status, VerificationStatus::UniqueByPropagation);
  }
}

TEST(Pipeline, SetFractionAtN1e5) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    PipelineConfig cfg;
    cfg.n = 100000;
    cfg.seed = s;
    const auto r = full_pipeline(cfg);
    EXPECT_LE(static_cast<double>(r.sudoku_set.size()) / cfg.n, 0.40);
  }
}

TEST(Pipeline, StepwiseEqualsOneShot) {
  PipelineConfig cfg;
  cfg.n = 5000;
  cfg.seed = 11;
  SudokuPipeline p(cfg);
  for (VertexId s = p.config().i0 + 1; s <= p.config().i1(); s += 97) p.advance_to(s);
  const auto a = p.finish();
  const auto b = full_pipeline(cfg);
  EXPECT_EQ(a.sudoku_set, b.sudoku_set);
  EXPECT_EQ(a.colouring, b.colouring);
}

TEST(Pipeline, TrajectoryIsConsistent) {
  PipelineConfig cfg;
  cfg.n = 10000;
  cfg.seed = 5;
  const auto r = full_pipeline(cfg);
  EXPECT_TRUE(trajectory_consistent(r.trajectory));
  ASSERT_FALSE(r.trajectory.samples.empty());
  for (const auto& s : r.trajectory.samples) EXPECT_EQ(s.x, s.x1 + s.x2 + s.x3);
}
