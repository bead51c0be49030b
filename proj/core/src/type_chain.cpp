#include "cubicsudoku/type_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/rng.hpp"

namespace cubicsudoku {

void ChainParams::validate() const {
  for (double v : values())
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("q_k must lie in [0, 1]");
  if (q() > 1.0 + 1e-15) throw InvalidInput("q1 + q2 + q3 must not exceed 1");
}

Matrix18 build_q(const ChainParams& params) {
  params.validate();
  const auto e = build_q_entries<double>(params.q1, params.q2, params.q3);
  Matrix18 m;
  for (int i = 0; i < kNumTypes; ++i)
    for (int j = 0; j < kNumTypes; ++j) m(i, j) = e[i][j];
  return m;
}

Dist18 pi_bal(double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidInput("q must lie in (0, 1)");
  Dist18 p;
  for (int i = 0; i < kNumTypes; ++i) {
    if (i < 3) p(i) = q / 6;
    else if (i < 6) p(i) = (1 - q) / 6;
    else if (i < 12) p(i) = q / 12;
    else p(i) = (1 - q) / 12;
  }
  return p;
}

bool is_row_stochastic(const Matrix18& m, double tol) {
  if ((m.array() < 0.0).any()) return false;
  return ((m.rowwise().sum().array() - 1.0).abs() <= tol).all();
}

bool is_distribution(const Dist18& d, double tol) {
  return (d.array() >= -tol).all() && std::abs(d.sum() - 1.0) <= tol;
}

double tv_distance(const Dist18& a, const Dist18& b) { return 0.5 * (a - b).cwiseAbs().sum(); }

Dist18 stationary_solve(const Matrix18& m) {
  Matrix18 a = (m - Matrix18::Identity()).transpose();
  a.row(kNumTypes - 1).setOnes();
  Eigen::Matrix<double, kNumTypes, 1> b = Eigen::Matrix<double, kNumTypes, 1>::Zero();
  b(kNumTypes - 1) = 1.0;
  Eigen::FullPivLU<Matrix18> lu(a);
  if (!lu.isInvertible()) throw NonConvergence("stationary system is singular (reducible chain?)");
  return lu.solve(b).transpose();
}

Dist18 stationary_power(const Matrix18& m, double tol, int max_iter) {
  Dist18 p = Dist18::Constant(1.0 / kNumTypes);
  for (int it = 0; it < max_iter; ++it) {
    Dist18 next = p * m;
    next /= next.sum();
    if ((next - p).cwiseAbs().sum() <= tol) return next;
    p = next;
  }
  throw NonConvergence("power iteration did not converge");
}

Dist18 stationary(const Matrix18& m, double tol) {
  Dist18 p = stationary_solve(m);
  if ((p * m - p).cwiseAbs().sum() > tol) p = stationary_power(m, tol * 0.1);
  if ((p * m - p).cwiseAbs().sum() > tol) throw NonConvergence("stationary residual above tolerance");
  return p;
}

StructureReport structure_check(const Matrix18& m) {
  using Reach = std::array<std::array<bool, kNumTypes>, kNumTypes>;
  Reach adj{};
  for (int i = 0; i < kNumTypes; ++i)
    for (int j = 0; j < kNumTypes; ++j) adj[i][j] = m(i, j) > 0.0;

  StructureReport r;
  auto reachable_from = [&](int s, bool reverse) {
    std::array<bool, kNumTypes> seen{};
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < kNumTypes; ++u) {
        const bool edge = reverse ? adj[u][v] : adj[v][u];
        if (edge && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  r.irreducible = reachable_from(0, false) && reachable_from(0, true);

  // Walks of length t from state 0 back to itself.
  std::array<bool, kNumTypes> frontier{};
  frontier[0] = true;
  int g = 0;
  for (int t = 1; t <= 2 * kNumTypes * kNumTypes; ++t) {
    std::array<bool, kNumTypes> next{};
    for (int v = 0; v < kNumTypes; ++v)
      if (frontier[v])
        for (int u = 0; u < kNumTypes; ++u)
          if (adj[v][u]) next[u] = true;
    frontier = next;
    if (frontier[0]) g = std::gcd(g, t);
  }
  r.period = g;
  r.aperiodic = g == 1;
  return r;
}

std::optional<int> mixing_time(const Matrix18& m, double eps, int max_steps) {
  const Dist18 pi = stationary(m);
  Matrix18 p = Matrix18::Identity();
  for (int t = 1; t <= max_steps; ++t) {
    p = p * m;
    double worst = 0;
    for (int v = 0; v < kNumTypes; ++v) worst = std::max(worst, tv_distance(p.row(v), pi));
    if (worst <= eps) return t;
  }
  return std::nullopt;
}

Minorization minorization_alpha(const Matrix18& m, int power) {
  if (power < 1) throw InvalidInput("power must be at least 1");
  Matrix18 p = Matrix18::Identity();
  for (int i = 0; i < power; ++i) p = p * m;
  Minorization r;
  const Dist18 mins = p.colwise().minCoeff();
  r.alpha = mins.sum();
  if (r.alpha > 0) r.nu = mins / r.alpha;
  return r;
}

std::vector<double> default_q_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
  return g;
}

double transitions_ratio(double q, int* argmax_state) {
  const Matrix18 m = build_q(ChainParams::balanced(q));
  const Dist18 pi = pi_bal(q);
  Matrix18 p6 = Matrix18::Identity();
  for (int i = 0; i < 6; ++i) p6 = p6 * m;
  double worst = 0;
  int arg = -1;
  for (int target = 0; target < kNumTypes; ++target) {
    const VertexType t{static_cast<std::uint8_t>(target)};
    double reach = 0;
    if (t.backward()) {
      reach = p6.col(target).minCoeff();
    } else {
      Matrix18 absorbing = m;
      absorbing.row(target).setZero();
      absorbing(target, target) = 1.0;
      Matrix18 h = Matrix18::Identity();
      for (int i = 0; i < 6; ++i) h = h * absorbing;
      reach = h.col(target).minCoeff();
    }
    const double ratio = reach > 0 ? pi(target) / reach : std::numeric_limits<double>::infinity();
    if (ratio > worst) {
      worst = ratio;
      arg = target;
    }
  }
  if (argmax_state != nullptr) *argmax_state = arg;
  return worst;
}

CCondEstimate estimate_c_cond(std::span<const double> q_grid) {
  CCondEstimate e;
  for (double q : q_grid) {
    int arg = -1;
    const double r = transitions_ratio(q, &arg);
    if (r > e.value) e = {r, q, arg};
  }
  return e;
}

HittingStats hitting_stats(const Matrix18& m, const Dist18& pi, std::span<const double> q_grid) {
  HittingStats h;
  using Mat = Eigen::MatrixXd;
  using Vec = Eigen::VectorXd;
  for (int y = 0; y < kNumTypes; ++y) {
    std::vector<int> others;
    for (int x = 0; x < kNumTypes; ++x)
      if (x != y) others.push_back(x);
    const int k = kNumTypes - 1;
    Mat a(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) a(r, c) = (r == c ? 1.0 : 0.0) - m(others[r], others[c]);
    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible()) throw NonConvergence("hitting-time system is singular (reducible chain?)");
    const Vec t = lu.solve(Vec::Ones(k));
    double ret = 1.0;
    for (int r = 0; r < k; ++r) {
      h.expected_hitting(others[r], y) = t(r);
      ret += m(y, others[r]) * t(r);
      h.kappa = std::max(h.kappa, pi(y) * t(r));
    }
    h.return_times(y) = ret;
  }
  h.c_cond_estimate = estimate_c_cond(q_grid).value;
  return h;
}

HittingStats hitting_stats(const Matrix18& m, const Dist18& pi) {
  const auto grid = default_q_grid();
  return hitting_stats(m, pi, grid);
}

PerturbationReport perturbation_check(double q, double gamma, int trials, double c_cond, std::uint64_t seed) {
  if (!(q > 0 && q < 1)) throw InvalidInput("q must lie in (0, 1)");
  if (!(gamma >= 0 && gamma < 1)) throw InvalidInput("gamma must lie in [0, 1)");
  PerturbationReport r;
  r.trials = trials;
  r.bound = 3.0 * c_cond * gamma * q;
  const Dist18 target = pi_bal(q);
  DeterministicRandomSource rng(seed);
  for (int t = 0; t < trials; ++t) {
    double u1 = 0, u2 = 0, u3 = 0;
    do {
      u1 = 2 * rng.uniform01() - 1;
      u2 = 2 * rng.uniform01() - 1;
      u3 = -u1 - u2;
    } while (std::abs(u1) >= 1 || std::abs(u2) >= 1 || std::abs(u3) >= 1);
    const double base = q / 3;
    const ChainParams p{base * (1 + gamma * u1), base * (1 + gamma * u2), base * (1 + gamma * u3)};
    const Dist18 pi = stationary(build_q(p));
    r.max_deviation = std::max(r.max_deviation, (pi - target).cwiseAbs().maxCoeff());
  }
  r.holds = r.max_deviation <= r.bound;
  return r;
}

}  // namespace cubicsudoku
