#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicsudoku/exact.hpp"
#include "cubicsudoku/experiments.hpp"
#include "cubicsudoku/io.hpp"
#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/type_chain.hpp"
#include "cubicsudoku/verify.hpp"

namespace cs = cubicsudoku;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

struct Options {
  int n = 0;
  std::uint64_t seed = 1;
  int i0 = 0;
  int tail = 0;
  int sample_every = 0;
  int trials = 1;
  int jobs = 1;
  std::string out;
  std::string trajectory;
  std::string graph;
  std::string colouring;
  std::string set;
  int colours = 3;
  double q1 = 1.0 / 6, q2 = 1.0 / 6, q3 = 1.0 / 6;
  int power = 6;
  double eps = 1e-3;
  std::string ns = "10000,100000";
  long long budget = 20000;
};

void emit(const json& j) { std::cout << j.dump() << std::endl; }

std::string sibling(const std::string& path, const std::string& suffix, const std::string& ext) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + ext)).string();
}

cs::PipelineConfig pipeline_config(const Options& o) {
  cs::PipelineConfig c;
  c.n = o.n;
  c.seed = o.seed;
  c.i0 = o.i0;
  c.tail = o.tail;
  c.sample_every = o.sample_every;
  return c.resolved();
}

int cmd_gen(const Options& o) {
  const auto g = cs::generate_graph(o.n, o.seed);
  const auto text = cs::graph_to_json(g);
  if (o.out.empty()) std::cout << text;
  else cs::write_file(o.out, text);
  emit({{"command", "gen"}, {"n", o.n}, {"seed", o.seed}, {"simple", cs::is_simple(g)}});
  return kOk;
}

int cmd_pipeline(const Options& o) {
  const auto result = cs::full_pipeline(pipeline_config(o));
  if (!o.out.empty()) cs::write_file(o.out, cs::pipeline_result_to_json(result));
  if (!o.graph.empty()) cs::write_file(o.graph, cs::graph_to_json(result.graph));
  if (!o.colouring.empty()) cs::write_file(o.colouring, cs::colouring_to_json(result.colouring));
  if (!o.set.empty()) cs::write_file(o.set, cs::set_to_json(result.sudoku_set));
  if (!o.trajectory.empty()) {
    std::ostringstream csv;
    cs::write_trajectory_csv(csv, result.trajectory);
    cs::write_file(o.trajectory, csv.str());
    cs::write_file(sibling(o.trajectory, "", ".svg"), cs::trajectory_svg(result.trajectory));
  }
  emit({{"command", "pipeline"},
        {"n", result.config.n},
        {"seed", result.config.seed},
        {"i0", result.config.i0},
        {"tail", result.config.tail},
        {"completed", result.completed},
        {"completion_mode", cs::completion_mode_name(result.completion_mode)},
        {"set_size", result.sudoku_set.size()},
        {"set_fraction", static_cast<double>(result.sudoku_set.size()) / result.config.n},
        {"bc", result.counts.bc},
        {"buc", result.counts.buc},
        {"bud", result.counts.bud},
        {"size_bound_holds", result.size_bound},
        {"burn_in_discrepancy", result.burn_in.discrepancy}});
  return result.completed ? kOk : kNegative;
}

int cmd_verify(const Options& o) {
  if (o.graph.empty() || o.colouring.empty()) throw cs::InvalidInput("verify needs --graph and --colouring");
  const auto g = cs::adjacency_from_json(cs::read_file(o.graph));
  const auto c = cs::colouring_from_json(cs::read_file(o.colouring));
  if (c.n() != g.n()) throw cs::InvalidInput("colouring and graph sizes differ");
  const bool proper = cs::check_proper(g, c, o.colours);
  json j{{"command", "verify"}, {"n", g.n()}, {"proper", proper}};
  bool ok = proper;
  if (!o.set.empty()) {
    const auto set = cs::set_from_json(cs::read_file(o.set));
    for (auto v : set)
      if (v < 1 || v > g.n()) throw cs::InvalidInput("set vertex out of range");
    const auto r = cs::is_sudoku_set(g, c, set, o.colours);
    j["set_size"] = set.size();
    j["status"] = cs::status_name(r.status);
    if (r.status == cs::VerificationStatus::NotUnique) j["count"] = r.count;
    j["decycling"] = cs::is_decycling(g, set);
    j["strong_order"] = proper && cs::strong_order(g, c, set, o.colours).has_value();
    ok = ok && r.unique();
  }
  emit(j);
  return ok ? kOk : kNegative;
}

int cmd_min_sudoku(const Options& o) {
  if (o.graph.empty()) throw cs::InvalidInput("min-sudoku needs --graph");
  const auto g = cs::adjacency_from_json(cs::read_file(o.graph));
  const auto r = cs::min_sudoku_exact(g, o.colours);
  std::vector<int> colours;
  for (auto v : r.set) colours.push_back(r.colouring[v]);
  if (!o.out.empty()) cs::write_file(o.out, cs::set_to_json(r.set));
  emit({{"command", "min-sudoku"}, {"n", g.n()}, {"k", o.colours}, {"size", r.size}, {"set", r.set},
        {"colours", colours}});
  return kOk;
}

int cmd_chain(const Options& o) {
  const cs::ChainParams p{o.q1, o.q2, o.q3};
  const auto q = cs::build_q(p);
  const auto s = cs::structure_check(q);
  if (!s.irreducible || !s.aperiodic) {
    emit({{"command", "chain"}, {"params", p.values()}, {"irreducible", s.irreducible}, {"aperiodic", s.aperiodic}});
    return kNegative;
  }
  const auto pi = cs::stationary(q);
  const auto tmix = cs::mixing_time(q, o.eps);
  const auto alpha = cs::minorization_alpha(q, o.power);
  const auto h = cs::hitting_stats(q, pi);
  std::vector<double> piv(pi.data(), pi.data() + cs::kNumTypes);
  json j{{"command", "chain"}, {"params", p.values()}, {"pi", piv}};
  j["t_mix"] = tmix ? json(*tmix) : json(nullptr);
  j["alpha"] = alpha.alpha;
  j["kappa"] = h.kappa;
  j["c_cond"] = h.c_cond_estimate;
  if (!o.out.empty()) cs::write_file(o.out, j.dump() + "\n");
  emit(j);
  return kOk;
}

std::vector<int> parse_ns(const std::string& list) {
  std::vector<int> ns;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ns.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw cs::InvalidInput("bad --ns entry: " + item);
    }
  }
  if (ns.empty()) throw cs::InvalidInput("--ns is empty");
  return ns;
}

int cmd_sweep(const Options& o) {
  const auto ns = parse_ns(o.ns);
  const auto rows = cs::sweep(ns, o.trials, o.seed, o.jobs);
  std::ostringstream csv;
  cs::write_sweep_csv(csv, rows);
  if (o.out.empty()) std::cout << csv.str();
  else cs::write_file(o.out, csv.str());
  json summary = json::array();
  for (const auto& r : rows)
    summary.push_back({{"n", r.n}, {"set_mean", r.set_mean}, {"half_bc_mean", r.half_bc_mean},
                       {"completion_rate", r.completion_rate}});
  emit({{"command", "sweep"}, {"trials", o.trials}, {"rows", summary}});
  return kOk;
}

int cmd_trajectory(const Options& o) {
  cs::PipelineConfig base = pipeline_config(o);
  const auto runs = cs::run_trials(base.n, o.trials, o.seed, o.jobs, base);
  std::vector<cs::TrajectoryRecord> records;
  for (const auto& r : runs) records.push_back(r.result.trajectory);
  const auto pi_grid = cs::default_q_grid();
  const cs::EnvelopeSpec spec{base.n, cs::estimate_c_cond(pi_grid).value, 0.01};
  double dev_x = 0, dev_bal = 0;
  bool vacuous = true;
  for (const auto& rec : records) {
    const auto e = cs::envelope_check(rec, spec);
    dev_x = std::max(dev_x, e.max_dev_x);
    dev_bal = std::max(dev_bal, e.max_dev_balance);
    vacuous = vacuous && e.envelope_vacuous;
  }
  const std::string path = !o.trajectory.empty() ? o.trajectory : o.out;
  if (!path.empty()) {
    std::ostringstream csv;
    cs::write_trajectory_csv(csv, records.front());
    cs::write_file(path, csv.str());
    cs::write_file(sibling(path, "", ".svg"), cs::trajectory_svg(records.front()));
    if (records.size() >= 10) {
      const auto bins = cs::bad_density_bins(records);
      std::ostringstream d;
      d << "t_lo,t_hi,t_mid,vertices,bad,fraction,target\n";
      for (const auto& b : bins)
        d << b.t_lo << ',' << b.t_hi << ',' << b.t_mid << ',' << b.vertices << ',' << b.bad << ',' << b.fraction
          << ',' << b.target << '\n';
      cs::write_file(sibling(path, "_density", ".csv"), d.str());
      cs::write_file(sibling(path, "_density", ".svg"), cs::density_svg(bins));
    }
  }
  emit({{"command", "trajectory"}, {"n", base.n}, {"trials", o.trials}, {"max_dev_x", dev_x},
        {"max_dev_balance", dev_bal}, {"envelope_vacuous", vacuous}});
  return kOk;
}

int cmd_probe(const Options& o) {
  const auto r = cs::conjecture_probe(o.n, o.trials, o.budget, o.seed);
  if (!o.out.empty() && r.found) {
    json j{{"version", "probe-v1"}, {"n", o.n}, {"size", r.best_size}};
    j["graph"] = json::parse(cs::graph_to_json(r.graph));
    j["colouring"] = json::parse(cs::colouring_to_json(r.colouring));
    j["set"] = json::parse(cs::set_to_json(r.set));
    cs::write_file(o.out, j.dump() + "\n");
  }
  emit({{"command", "probe"}, {"n", o.n}, {"found", r.found}, {"best_size", r.best_size},
        {"best_fraction", r.best_fraction}, {"lb_regular", r.lb_regular}, {"heuristic", true},
        {"augmented", r.via_augmentation}, {"budget_exhausted", r.budget_exhausted}, {"attempts", r.attempts}});
  return r.found ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sudoku sets and 3-colourings of random cubic graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "sample a random cubic multigraph (cycle plus matching)");
  gen->add_option("--n", o.n, "vertex count (even, >= 4)")->required();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output path (cubic-v1 JSON); stdout if omitted");

  auto* pipe = app.add_subcommand("pipeline", "run burn-in, Sudoku phase and completion");
  pipe->add_option("--n", o.n, "vertex count")->required();
  pipe->add_option("--seed", o.seed, "random seed");
  pipe->add_option("--i0", o.i0, "burn-in length (default ceil(n^(2/3)), clamped to [7, n/4])");
  pipe->add_option("--tail", o.tail, "completion length n - i1 (default ceil(20 sqrt n), at most n/4)");
  pipe->add_option("--sample-every", o.sample_every, "trajectory stride (default max(1, n/1000))");
  pipe->add_option("--out", o.out, "combined result (pipeline-v1 JSON)");
  pipe->add_option("--trajectory", o.trajectory, "trajectory CSV");
  pipe->add_option("--graph", o.graph, "write graph (cubic-v1)");
  pipe->add_option("--colouring", o.colouring, "write colouring (colouring-v1)");
  pipe->add_option("--set", o.set, "write Sudoku set (set-v1)");

  auto* ver = app.add_subcommand("verify", "check a colouring and optionally a Sudoku set");
  ver->add_option("--graph", o.graph, "graph (cubic-v1 or adj-v1)")->required();
  ver->add_option("--colouring", o.colouring, "colouring (colouring-v1)")->required();
  ver->add_option("--set", o.set, "Sudoku set (set-v1)");
  ver->add_option("--colours", o.colours, "number of colours k");

  auto* mins = app.add_subcommand("min-sudoku", "exact minimum Sudoku set (n <= 14)");
  mins->add_option("--graph", o.graph, "graph (cubic-v1 or adj-v1)")->required();
  mins->add_option("--colours", o.colours, "number of colours k");
  mins->add_option("--out", o.out, "write the witness set (set-v1)");

  auto* chain = app.add_subcommand("chain", "type-chain diagnostics");
  chain->add_option("--q1", o.q1, "backward probability to colour 1");
  chain->add_option("--q2", o.q2, "backward probability to colour 2");
  chain->add_option("--q3", o.q3, "backward probability to colour 3");
  chain->add_option("--power", o.power, "minorization power");
  chain->add_option("--eps", o.eps, "mixing-time threshold");
  chain->add_option("--out", o.out, "write the JSON report");

  auto* sw = app.add_subcommand("sweep", "pipeline statistics over several n");
  sw->add_option("--ns", o.ns, "comma-separated vertex counts");
  sw->add_option("--trials", o.trials, "runs per n");
  sw->add_option("--seed", o.seed, "master seed");
  sw->add_option("--jobs", o.jobs, "worker threads");
  sw->add_option("--out", o.out, "CSV path; stdout if omitted");

  auto* tr = app.add_subcommand("trajectory", "trajectory and bad-density diagnostics");
  tr->add_option("--n", o.n, "vertex count")->required();
  tr->add_option("--seed", o.seed, "master seed");
  tr->add_option("--i0", o.i0, "burn-in length");
  tr->add_option("--tail", o.tail, "completion length");
  tr->add_option("--sample-every", o.sample_every, "trajectory stride");
  tr->add_option("--trials", o.trials, "runs");
  tr->add_option("--jobs", o.jobs, "worker threads");
  tr->add_option("--out", o.out, "trajectory CSV of the first run");
  tr->add_option("--trajectory", o.trajectory, "alias for --out");

  auto* pr = app.add_subcommand("probe", "heuristic search for small Sudoku sets (n <= 200)");
  pr->add_option("--n", o.n, "vertex count")->required();
  pr->add_option("--seed", o.seed, "random seed");
  pr->add_option("--trials", o.trials, "decycling attempts");
  pr->add_option("--budget", o.budget, "maximum colouring evaluations");
  pr->add_option("--out", o.out, "write the best witness (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kInvalid;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*pipe) return cmd_pipeline(o);
    if (*ver) return cmd_verify(o);
    if (*mins) return cmd_min_sudoku(o);
    if (*chain) return cmd_chain(o);
    if (*sw) return cmd_sweep(o);
    if (*tr) return cmd_trajectory(o);
    if (*pr) return cmd_probe(o);
  } catch (const cs::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
