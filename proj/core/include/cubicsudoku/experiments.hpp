#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/trajectory.hpp"

namespace cubicsudoku {

TrajectoryRecord trajectory_run(const PipelineConfig& config);

struct EnvelopeSpec {
  int n = 0;
  double c_cond = 1;
  double empirical_tol = 0.01;

  double exponent() const { return 54.0 * c_cond + 2.0; }
  static double x(double t) { return t * (1 - t); }
  double eps(double t) const;  // ln^3 n / (n^(1/3) (1-t)^C)
};

struct EnvelopeReport {
  double max_dev_x = 0;        // max |X(i)/n - x(i/n)|
  double max_dev_balance = 0;  // max_k |X_k(i) - X(i)/3| / n
  bool formal_envelope_holds = false;
  bool envelope_vacuous = false;  // eps(t) >= x(t) at every sample
  bool within_tolerance = false;
  double eps_at_start = 0;
};

EnvelopeReport envelope_check(const TrajectoryRecord& record, const EnvelopeSpec& spec);

struct SegmentRates {
  std::array<double, 3> hit_rate{};    // mean H_k / omega
  std::array<double, 3> birth_rate{};  // mean B_k / omega
  double t = 0;
  int replicas = 0;
  bool conservation_exact = true;
};

// H_k counts colour-k vertices of [i] matched inside (i, i+omega]; B_k counts colour-k
// vertices of (i, i+omega] still unsaturated at i+omega. Replicas share the prefix up to i.
SegmentRates segment_stats(const PipelineConfig& base, int step, int omega, int replicas, int jobs = 1);

struct DensityBin {
  double t_lo = 0, t_hi = 0, t_mid = 0;
  long long vertices = 0;
  long long bad = 0;
  double fraction = 0;
  double target = 0;  // 1 - 2 t_mid / 3
};

// Equal-width bins over [i0/n, i1/n]; needs at least 10 records with common n, i0, i1.
std::vector<DensityBin> bad_density_bins(std::span<const TrajectoryRecord> records, int bins = 50);

struct EvenCycleFrequency {
  long long blocks = 0;
  long long successes = 0;
  double rate = 0;
  int block_length = 0;
};

// Consecutive blocks from vertex 1; a block succeeds when exactly one matching edge has both
// ends inside it and those ends are an odd distance >= 3 apart. block_length 0 means ceil(sqrt n).
EvenCycleFrequency even_cycle_frequency(int n, int trials, std::uint64_t seed, int block_length = 0,
                                        int blocks_per_trial = 10);

struct SweepRow {
  int n = 0;
  int trials = 0;
  double set_mean = 0, set_min = 0, set_max = 0;   // |S| / n
  double half_bc_mean = 0, half_bc_min = 0, half_bc_max = 0;  // |B_C| / (2n)
  double half_bc_phase_mean = 0;                    // |B_C| / (2 (i1 - i0))
  double bu_mean = 0;                               // |B_U^c| + 2|B_U^d|
  int bu_max = 0;
  double bu_le_20_rate = 0;
  double completion_rate = 0;
  double interval_rate = 0;
  double discrepancy_mean = 0;
  int discrepancy_max = 0;
  double size_bound_rate = 0;
};

struct SweepRun {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  PipelineResult result;
};

// Per-trial seeds: substream_seed(master, n * 1'000'003 + trial).
std::uint64_t trial_seed(std::uint64_t master, int n, int trial);

std::vector<SweepRun> run_trials(int n, int trials, std::uint64_t seed, int jobs, const PipelineConfig& overrides = {});
SweepRow summarize(int n, std::span<const SweepRun> runs);
std::vector<SweepRow> sweep(std::span<const int> ns, int trials, std::uint64_t seed, int jobs = 1);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

// Minimal SVG line plots for CSV companions.
std::string trajectory_svg(const TrajectoryRecord& record);
std::string density_svg(std::span<const DensityBin> bins);

struct ProbeResult {
  CubicMultigraph graph;
  int best_size = 0;
  double best_fraction = 0;
  std::vector<VertexId> set;
  PartialColouring colouring;  // total colouring the set was taken from
  bool found = false;
  bool budget_exhausted = false;
  bool via_augmentation = false;
  int attempts = 0;
  long long lb_regular = 0;
};

// Heuristic search for small Sudoku sets on one random simple cubic graph on n <= 200 vertices:
// greedy decycling sets, random colourings, exact verification, one-vertex augmentation.
ProbeResult conjecture_probe(int n, int trials, long long budget, std::uint64_t seed);

}  // namespace cubicsudoku
