#include "cubicsudoku/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cubicsudoku {

int default_i0(int n) {
  const long long n2 = static_cast<long long>(n) * n;
  auto k = static_cast<long long>(std::ceil(std::cbrt(static_cast<double>(n2))));
  while (k > 0 && (k - 1) * (k - 1) * (k - 1) >= n2) --k;
  while (k * k * k < n2) ++k;
  return static_cast<int>(std::clamp<long long>(k, 7, std::max(7, n / 4)));
}

int default_tail(int n) {
  const long long target = 400LL * n;
  auto k = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(target))));
  while (k > 0 && (k - 1) * (k - 1) >= target) --k;
  while (k * k < target) ++k;
  return static_cast<int>(std::clamp<long long>(k, 1, std::max(1, n / 4)));
}

PipelineConfig PipelineConfig::resolved() const {
  PipelineConfig c = *this;
  if (c.n < 4 || c.n % 2 != 0) throw InvalidInput("n must be even and >= 4, got " + std::to_string(c.n));
  if (c.i0 == 0) c.i0 = default_i0(c.n);
  if (c.tail == 0) c.tail = default_tail(c.n);
  if (c.sample_every == 0) c.sample_every = std::max(1, c.n / 1000);
  if (c.i0 < kBatchSize) throw InvalidInput("i0 must be at least 7");
  if (c.tail < 1) throw InvalidInput("tail must be positive");
  if (c.sample_every < 1) throw InvalidInput("sample_every must be positive");
  if (!(c.i0 < c.i1() && c.i1() < c.n)) throw InvalidInput("need 0 < i0 < n - tail < n");
  return c;
}

SudokuPipeline::SudokuPipeline(const PipelineConfig& config)
    : config_(config.resolved()),
      process_(config_.n, substream_seed(config_.seed, 0)),
      algo_rng_(substream_seed(config_.seed, 1)) {
  PartialColouring colouring(config_.n);
  burn_in_ = balanced_greedy_burn_in(process_, colouring, config_.i0);
  x_at_i0_ = process_.unsaturated_count();
  state_ = initial_run_state(process_, std::move(colouring), config_.i0);
  state_.check_invariants = config_.check_invariants;
  trajectory_.n = config_.n;
  trajectory_.i0 = config_.i0;
  trajectory_.i1 = config_.i1();
  record_sample();
}

void SudokuPipeline::record_sample() {
  TrajectorySample s;
  s.step = state_.current;
  s.x = process_.unsaturated_count();
  s.x1 = state_.x_colour[0];
  s.x2 = state_.x_colour[1];
  s.x3 = state_.x_colour[2];
  s.set_size = state_.set_size;
  s.bc = static_cast<int>(state_.bc.size());
  s.buc = static_cast<int>(state_.buc.size());
  s.bud = static_cast<int>(state_.bud.size());
  if (config_.check_invariants && s.x != s.x1 + s.x2 + s.x3)
    throw InvariantViolation("colour counts do not add up to X at step " + std::to_string(s.step));
  trajectory_.samples.push_back(s);
}

void SudokuPipeline::advance_to(VertexId step) {
  const VertexId target = std::min(step, config_.i1());
  while (state_.current < target) {
    apply_step(state_, process_.reveal_step(), algo_rng_);
    if (state_.current % config_.sample_every == 0 || state_.current == config_.i1()) record_sample();
  }
}

void SudokuPipeline::reseed(std::uint64_t seed) {
  process_.reseed(substream_seed(seed, 0));
  algo_rng_ = DeterministicRandomSource(substream_seed(seed, 1));
}

PipelineResult SudokuPipeline::finish() {
  advance_to(config_.i1());
  if (config_.check_invariants && !process_.bookkeeping_consistent())
    throw InvariantViolation("matching process bookkeeping is inconsistent");

  PipelineResult r;
  r.config = config_;
  r.counts = {static_cast<int>(state_.bc.size()), static_cast<int>(state_.buc.size()),
              static_cast<int>(state_.bud.size())};
  r.burn_in = burn_in_;
  r.x_at_i0 = x_at_i0_;
  r.core_set_size = state_.set_size;
  r.case_counts = state_.case_counts;
  r.runs = state_.runs;
  r.size_bound = size_bound_holds(state_);
  r.trajectory = trajectory_;
  r.trajectory.bad_vertices.assign(state_.bc.begin(), state_.bc.end());

  const VertexId i1 = config_.i1();
  std::vector<std::uint8_t> member = state_.in_set;
  for (VertexId v = 1; v <= config_.i0; ++v) member[v] = 1;
  for (VertexId v = i1; v <= config_.n; ++v) member[v] = 1;
  for (VertexId v = 1; v <= config_.n; ++v)
    if (member[v]) r.sudoku_set.push_back(v);

  while (process_.step() < config_.n) process_.reveal_step();
  r.graph = process_.to_graph();
  auto done = completion_phase(r.graph, state_.colouring, i1);
  r.colouring = std::move(done.colouring);
  r.completion_mode = done.mode;
  r.completed = done.mode != CompletionMode::Failed;
  return r;
}

PipelineResult full_pipeline(const PipelineConfig& config) {
  SudokuPipeline p(config);
  return p.finish();
}

}  // namespace cubicsudoku
