#include "cubicsudoku/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>

#include "cubicsudoku/parallel.hpp"

namespace cubicsudoku {

TrajectoryRecord trajectory_run(const PipelineConfig& config) { return full_pipeline(config).trajectory; }

double EnvelopeSpec::eps(double t) const {
  const double ln = std::log(static_cast<double>(n));
  return ln * ln * ln / (std::cbrt(static_cast<double>(n)) * std::pow(1 - t, exponent()));
}

EnvelopeReport envelope_check(const TrajectoryRecord& record, const EnvelopeSpec& spec) {
  if (record.samples.empty()) throw InvalidInput("empty trajectory");
  EnvelopeReport r;
  const double n = record.n;
  r.formal_envelope_holds = true;
  r.envelope_vacuous = true;
  r.eps_at_start = spec.eps(record.samples.front().step / n);
  for (const auto& s : record.samples) {
    const double t = s.step / n;
    const double x = EnvelopeSpec::x(t);
    const double eps = spec.eps(t);
    r.max_dev_x = std::max(r.max_dev_x, std::abs(s.x / n - x));
    for (long long xk : {s.x1, s.x2, s.x3}) {
      r.max_dev_balance = std::max(r.max_dev_balance, std::abs(xk - s.x / 3.0) / n);
      if (std::abs(xk - n * x / 3) > n * eps / 3) r.formal_envelope_holds = false;
    }
    if (eps < x) r.envelope_vacuous = false;
  }
  r.within_tolerance = r.max_dev_x <= spec.empirical_tol && r.max_dev_balance <= spec.empirical_tol;
  return r;
}

SegmentRates segment_stats(const PipelineConfig& base, int step, int omega, int replicas, int jobs) {
  if (replicas < 1 || omega < 1) throw InvalidInput("need omega >= 1 and replicas >= 1");
  SudokuPipeline prefix(base);
  const auto& cfg = prefix.config();
  if (step < cfg.i0 || step + omega > cfg.i1()) throw InvalidInput("window outside the Sudoku phase");
  prefix.advance_to(step);
  const auto x_before = prefix.state().x_colour;

  struct Counts {
    std::array<long long, 3> hit{}, birth{};
    bool conserved = true;
  };
  std::vector<Counts> per(replicas);
  const int workers = std::clamp(jobs, 1, replicas);
  std::vector<SudokuPipeline> scratch(workers, prefix);
  std::vector<std::uint8_t> busy(workers, 0);
  std::mutex m;
  parallel_for(replicas, workers, [&](int r) {
    int slot = 0;
    {
      std::lock_guard lock(m);
      while (busy[slot]) ++slot;
      busy[slot] = 1;
    }
    SudokuPipeline& rep = scratch[slot];
    rep = prefix;
    rep.reseed(substream_seed(cfg.seed, 2'000'000 + static_cast<std::uint64_t>(r)));
    rep.advance_to(step + omega);
    const RunState& s = rep.state();
    Counts c;
    for (VertexId v = step + 1; v <= step + omega; ++v) {
      const VertexId p = s.back_partner[v];
      if (p != 0 && p <= step) ++c.hit[s.colouring[p] - 1];
      if (p == 0 && rep.process().is_unsaturated(v)) ++c.birth[s.colouring[v] - 1];
    }
    for (int k = 0; k < 3; ++k)
      if (s.x_colour[k] - x_before[k] != c.birth[k] - c.hit[k]) c.conserved = false;
    per[r] = c;
    std::lock_guard lock(m);
    busy[slot] = 0;
  });

  SegmentRates out;
  out.replicas = replicas;
  out.t = static_cast<double>(step) / cfg.n;
  for (const auto& c : per) {
    for (int k = 0; k < 3; ++k) {
      out.hit_rate[k] += static_cast<double>(c.hit[k]) / omega;
      out.birth_rate[k] += static_cast<double>(c.birth[k]) / omega;
    }
    out.conservation_exact = out.conservation_exact && c.conserved;
  }
  for (int k = 0; k < 3; ++k) {
    out.hit_rate[k] /= replicas;
    out.birth_rate[k] /= replicas;
  }
  return out;
}

std::vector<DensityBin> bad_density_bins(std::span<const TrajectoryRecord> records, int bins) {
  if (records.size() < 10) throw InvalidInput("bad_density_bins needs at least 10 records");
  if (bins < 1) throw InvalidInput("bins must be positive");
  const auto& first = records.front();
  for (const auto& r : records)
    if (r.n != first.n || r.i0 != first.i0 || r.i1 != first.i1) throw InvalidInput("records differ in n, i0 or i1");
  const double n = first.n;
  const double lo = first.i0 / n;
  const double hi = first.i1 / n;
  const double width = (hi - lo) / bins;
  std::vector<DensityBin> out(bins);
  for (int b = 0; b < bins; ++b) {
    out[b].t_lo = lo + b * width;
    out[b].t_hi = lo + (b + 1) * width;
    out[b].t_mid = 0.5 * (out[b].t_lo + out[b].t_hi);
    out[b].target = 1 - 2 * out[b].t_mid / 3;
  }
  auto bin_of = [&](VertexId v) { return std::clamp(static_cast<int>((v / n - lo) / width), 0, bins - 1); };
  std::vector<long long> per_bin(bins, 0);
  for (VertexId v = first.i0 + 1; v <= first.i1; ++v) ++per_bin[bin_of(v)];
  for (const auto& r : records)
    for (int v : r.bad_vertices) ++out[bin_of(v)].bad;
  for (int b = 0; b < bins; ++b) {
    out[b].vertices = per_bin[b] * static_cast<long long>(records.size());
    out[b].fraction = out[b].vertices > 0 ? static_cast<double>(out[b].bad) / out[b].vertices : 0.0;
  }
  return out;
}

EvenCycleFrequency even_cycle_frequency(int n, int trials, std::uint64_t seed, int block_length,
                                        int blocks_per_trial) {
  if (block_length == 0) block_length = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (block_length < 1 || blocks_per_trial < 1) throw InvalidInput("block length and count must be positive");
  if (static_cast<long long>(block_length) * blocks_per_trial >= n)
    throw InvalidInput("blocks must fit inside the first n - 1 vertices");
  EvenCycleFrequency out;
  out.block_length = block_length;
  for (int t = 0; t < trials; ++t) {
    MatchingProcess process(n, substream_seed(seed, static_cast<std::uint64_t>(t)));
    for (int b = 0; b < blocks_per_trial; ++b) {
      const VertexId start = b * block_length + 1;
      int internal = 0;
      VertexId lo = 0, hi = 0;
      for (int j = 0; j < block_length; ++j) {
        const auto rev = process.reveal_step();
        if (rev.backward && rev.partner >= start) {
          ++internal;
          lo = rev.partner;
          hi = process.step();
        }
      }
      ++out.blocks;
      const int dist = hi - lo;
      if (internal == 1 && dist % 2 == 1 && dist >= 3) ++out.successes;
    }
  }
  out.rate = out.blocks > 0 ? static_cast<double>(out.successes) / out.blocks : 0.0;
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, int n, int trial) {
  return substream_seed(master, static_cast<std::uint64_t>(n) * 1'000'003ULL + static_cast<std::uint64_t>(trial));
}

std::vector<SweepRun> run_trials(int n, int trials, std::uint64_t seed, int jobs, const PipelineConfig& overrides) {
  std::vector<SweepRun> runs(trials);
  parallel_for(trials, jobs, [&](int t) {
    PipelineConfig cfg = overrides;
    cfg.n = n;
    cfg.seed = trial_seed(seed, n, t);
    runs[t] = {n, t, cfg.seed, full_pipeline(cfg)};
  });
  return runs;
}

SweepRow summarize(int n, std::span<const SweepRun> runs) {
  SweepRow row;
  row.n = n;
  row.trials = static_cast<int>(runs.size());
  if (runs.empty()) return row;
  row.set_min = row.half_bc_min = 1e300;
  row.set_max = row.half_bc_max = -1e300;
  for (const auto& run : runs) {
    const auto& r = run.result;
    const double set = static_cast<double>(r.sudoku_set.size()) / n;
    const double half_bc = r.counts.bc / (2.0 * n);
    const int bu = r.counts.buc + 2 * r.counts.bud;
    row.set_mean += set;
    row.set_min = std::min(row.set_min, set);
    row.set_max = std::max(row.set_max, set);
    row.half_bc_mean += half_bc;
    row.half_bc_min = std::min(row.half_bc_min, half_bc);
    row.half_bc_max = std::max(row.half_bc_max, half_bc);
    row.half_bc_phase_mean += r.counts.bc / (2.0 * (r.config.i1() - r.config.i0));
    row.bu_mean += bu;
    row.bu_max = std::max(row.bu_max, bu);
    row.bu_le_20_rate += bu <= 20 ? 1 : 0;
    row.completion_rate += r.completed ? 1 : 0;
    row.interval_rate += r.completion_mode == CompletionMode::EvenCycleInterval ? 1 : 0;
    row.discrepancy_mean += r.burn_in.discrepancy;
    row.discrepancy_max = std::max(row.discrepancy_max, r.burn_in.discrepancy);
    row.size_bound_rate += r.size_bound ? 1 : 0;
  }
  const double k = static_cast<double>(runs.size());
  for (double* v : {&row.set_mean, &row.half_bc_mean, &row.half_bc_phase_mean, &row.bu_mean, &row.bu_le_20_rate,
                    &row.completion_rate, &row.interval_rate, &row.discrepancy_mean, &row.size_bound_rate})
    *v /= k;
  return row;
}

std::vector<SweepRow> sweep(std::span<const int> ns, int trials, std::uint64_t seed, int jobs) {
  std::vector<int> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<SweepRow> rows;
  for (int n : sorted) {
    const auto runs = run_trials(n, trials, seed, jobs);
    rows.push_back(summarize(n, runs));
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "n,trials,set_mean,set_min,set_max,half_bc_mean,half_bc_min,half_bc_max,half_bc_phase_mean,"
        "bu_mean,bu_max,bu_le_20_rate,completion_rate,interval_rate,discrepancy_mean,discrepancy_max,"
        "size_bound_rate\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.4f,%d,%.4f,%.4f,%.4f,%.4f,%d,%.4f\n",
                  r.n, r.trials, r.set_mean, r.set_min, r.set_max, r.half_bc_mean, r.half_bc_min, r.half_bc_max,
                  r.half_bc_phase_mean, r.bu_mean, r.bu_max, r.bu_le_20_rate, r.completion_rate, r.interval_rate,
                  r.discrepancy_mean, r.discrepancy_max, r.size_bound_rate);
    os << buf;
  }
}

namespace {

std::string polyline(const std::vector<std::pair<double, double>>& pts, double x0, double x1, double y0, double y1,
                     const char* colour) {
  std::ostringstream os;
  os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
  char buf[64];
  for (auto [x, y] : pts) {
    const double px = 40 + 560 * (x - x0) / (x1 - x0);
    const double py = 340 - 300 * (y - y0) / (y1 - y0);
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px, py);
    os << buf;
  }
  os << "\"/>\n";
  return os.str();
}

std::string frame(const std::string& body, const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"380\">\n"
         "<rect x=\"40\" y=\"40\" width=\"560\" height=\"300\" fill=\"none\" stroke=\"#888\"/>\n"
         "<text x=\"40\" y=\"25\" font-family=\"sans-serif\" font-size=\"14\">" +
         title + "</text>\n" + body + "</svg>\n";
}

}  // namespace

std::string trajectory_svg(const TrajectoryRecord& record) {
  std::vector<std::pair<double, double>> emp, model;
  const double n = record.n;
  for (const auto& s : record.samples) {
    const double t = s.step / n;
    emp.emplace_back(t, s.x / n);
    model.emplace_back(t, t * (1 - t));
  }
  return frame(polyline(model, 0, 1, 0, 0.3, "#c33") + polyline(emp, 0, 1, 0, 0.3, "#33c"),
               "X(i)/n (blue) vs t(1-t) (red)");
}

std::string density_svg(std::span<const DensityBin> bins) {
  std::vector<std::pair<double, double>> emp, model;
  for (const auto& b : bins) {
    emp.emplace_back(b.t_mid, b.fraction);
    model.emplace_back(b.t_mid, b.target);
  }
  return frame(polyline(model, 0, 1, 0, 1, "#c33") + polyline(emp, 0, 1, 0, 1, "#33c"),
               "bad fraction per bin (blue) vs 1-2t/3 (red)");
}

}  // namespace cubicsudoku
