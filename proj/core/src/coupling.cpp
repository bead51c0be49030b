#include "cubicsudoku/coupling.hpp"

#include <string>

#include "cubicsudoku/parallel.hpp"

namespace cubicsudoku {

SegmentComparison segment_comparison(const PipelineConfig& base, int step, int omega, int replicas, int jobs) {
  if (replicas < kMinReplicas)
    throw InvalidInput("segment comparison needs at least " + std::to_string(kMinReplicas) + " replicas");
  SudokuPipeline prefix(base);
  const auto& cfg = prefix.config();
  if (step <= cfg.i0 || step + omega > cfg.i1() || omega < 0) throw InvalidInput("window outside the Sudoku phase");
  prefix.advance_to(step);

  SegmentComparison out;
  out.replicas = replicas;
  const RunState& s = prefix.state();
  const double remaining = static_cast<double>(cfg.n - step);
  out.params = {s.x_colour[0] / remaining, s.x_colour[1] / remaining, s.x_colour[2] / remaining};
  out.start_type = *s.type_of(step);

  std::vector<std::vector<std::uint8_t>> seen(replicas, std::vector<std::uint8_t>(omega + 1));
  const int workers = std::max(1, jobs);
  std::vector<SudokuPipeline> scratch(workers, prefix);
  std::vector<std::uint8_t> busy(workers, 0);
  std::mutex m;
  parallel_for(replicas, jobs, [&](int r) {
    int slot = 0;
    {
      std::lock_guard lock(m);
      while (busy[slot]) ++slot;
      busy[slot] = 1;
    }
    SudokuPipeline& rep = scratch[slot];
    rep = prefix;
    rep.reseed(substream_seed(cfg.seed, 1'000'000 + static_cast<std::uint64_t>(r)));
    rep.advance_to(step + omega);
    for (int j = 0; j <= omega; ++j) seen[r][j] = rep.state().type_of(step + j)->index;
    std::lock_guard lock(m);
    busy[slot] = 0;
  });

  const Matrix18 q = build_q(out.params);
  Dist18 exact = Dist18::Zero();
  exact(out.start_type.index) = 1.0;
  for (int j = 0; j <= omega; ++j) {
    Dist18 emp = Dist18::Zero();
    for (int r = 0; r < replicas; ++r) emp(seen[r][j]) += 1.0;
    emp /= replicas;
    const double l1 = (emp - exact).cwiseAbs().sum();
    out.l1_by_j.push_back(l1);
    out.empirical.push_back(emp);
    out.max_l1 = std::max(out.max_l1, l1);
    exact = exact * q;
  }
  return out;
}

}  // namespace cubicsudoku
