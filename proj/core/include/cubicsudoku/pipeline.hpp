#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubicsudoku/burn_in.hpp"
#include "cubicsudoku/completion.hpp"
#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/matching_process.hpp"
#include "cubicsudoku/sudoku_run.hpp"
#include "cubicsudoku/trajectory.hpp"

namespace cubicsudoku {

// ceil(n^(2/3)), clamped to [7, n/4].
int default_i0(int n);
// ceil(20 sqrt(n)), clamped to [1, n/4].
int default_tail(int n);

struct PipelineConfig {
  int n = 0;
  int i0 = 0;            // 0 selects default_i0(n)
  int tail = 0;          // 0 selects default_tail(n)
  std::uint64_t seed = 0;
  int sample_every = 0;  // 0 selects max(1, n/1000)
  bool check_invariants = true;

  // Defaults filled in and validated; throws InvalidInput.
  PipelineConfig resolved() const;
  int i1() const { return n - tail; }
};

struct BadCounts {
  int bc = 0;
  int buc = 0;
  int bud = 0;
};

struct PipelineResult {
  PipelineConfig config;
  CubicMultigraph graph;
  PartialColouring colouring;
  std::vector<VertexId> sudoku_set;  // [i0] u S(i1) u {i1} u {i1+1..n}
  BadCounts counts;
  TrajectoryRecord trajectory;
  bool completed = false;
  CompletionMode completion_mode = CompletionMode::Failed;
  BurnInResult burn_in;
  long long x_at_i0 = 0;
  int core_set_size = 0;  // |S(i1)|
  std::array<long long, kNumCases> case_counts{};
  int runs = 0;
  bool size_bound = false;
};

// Step-wise driver. Construction performs the burn-in; the state is copyable so
// replicas can branch from a shared prefix.
class SudokuPipeline {
 public:
  explicit SudokuPipeline(const PipelineConfig& config);

  // Run the Sudoku phase up to vertex min(step, i1).
  void advance_to(VertexId step);
  // Finish the Sudoku phase, reveal the rest of the matching and complete the colouring.
  PipelineResult finish();

  // Fresh randomness for all future matching reveals and A2 choices.
  void reseed(std::uint64_t seed);

  const PipelineConfig& config() const noexcept { return config_; }
  const RunState& state() const noexcept { return state_; }
  const MatchingProcess& process() const noexcept { return process_; }
  const BurnInResult& burn_in() const noexcept { return burn_in_; }
  const TrajectoryRecord& trajectory() const noexcept { return trajectory_; }

 private:
  void record_sample();

  PipelineConfig config_;
  MatchingProcess process_;
  DeterministicRandomSource algo_rng_;
  BurnInResult burn_in_;
  RunState state_;
  TrajectoryRecord trajectory_;
  long long x_at_i0_ = 0;
};

PipelineResult full_pipeline(const PipelineConfig& config);

}  // namespace cubicsudoku
