#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

using Matrix18 = Eigen::Matrix<double, kNumTypes, kNumTypes, Eigen::RowMajor>;
using Dist18 = Eigen::Matrix<double, 1, kNumTypes>;

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainParams {
  double q1 = 0, q2 = 0, q3 = 0;

  static ChainParams balanced(double q) { return {q / 3, q / 3, q / 3}; }
  double q() const { return q1 + q2 + q3; }
  std::array<double, 3> values() const { return {q1, q2, q3}; }
  void validate() const;
};

// Entries of Q for any field-like scalar type T (double, exact rationals in tests).
template <class T>
std::array<std::array<T, kNumTypes>, kNumTypes> build_q_entries(const T& q1, const T& q2, const T& q3) {
  std::array<std::array<T, kNumTypes>, kNumTypes> m{};
  for (auto& row : m) row.fill(T(0));
  const std::array<T, 4> qs{T(0), q1, q2, q3};
  const T one(1);
  const T two(2);
  const T q = q1 + q2 + q3;
  for (int s = 0; s < kNumTypes; ++s) {
    const VertexType from{static_cast<std::uint8_t>(s)};
    if (from.is_a()) {
      const Colour k = from.own();
      for (Colour l = 1; l <= 3; ++l) {
        if (l == k) continue;
        const Colour mm = third_colour(k, l);
        m[s][VertexType::a(true, l).index] += qs[mm];
        m[s][VertexType::b(false, k, l).index] += (one - q) / two;
        m[s][VertexType::b(true, k, l).index] += qs[k] / two;
      }
    } else {
      const Colour k = from.prev();
      const Colour l = from.own();
      const Colour mm = third_colour(k, l);
      m[s][VertexType::a(true, k).index] += qs[mm];
      m[s][VertexType::a(false, mm).index] += one - q;
      m[s][VertexType::b(true, k, mm).index] += qs[k];
      m[s][VertexType::b(true, l, mm).index] += qs[l];
    }
  }
  return m;
}

Matrix18 build_q(const ChainParams& params);
Dist18 pi_bal(double q);
bool is_row_stochastic(const Matrix18& m, double tol = 1e-12);
bool is_distribution(const Dist18& d, double tol = 1e-12);
double tv_distance(const Dist18& a, const Dist18& b);

Dist18 stationary_solve(const Matrix18& m);
Dist18 stationary_power(const Matrix18& m, double tol = 1e-13, int max_iter = 1'000'000);
// Linear solve, then checked against ||pi P - pi||_1 <= tol.
Dist18 stationary(const Matrix18& m, double tol = 1e-12);

struct StructureReport {
  bool irreducible = false;
  bool aperiodic = false;
  int period = 0;  // gcd of return times at state 0; 0 if it never returns
};
StructureReport structure_check(const Matrix18& m);

// Smallest t with max over point-mass starts of TV(delta_V P^t, pi) <= eps.
std::optional<int> mixing_time(const Matrix18& m, double eps, int max_steps = 100'000);

struct Minorization {
  double alpha = 0;
  Dist18 nu = Dist18::Zero();
};
Minorization minorization_alpha(const Matrix18& m, int power);

std::vector<double> default_q_grid();  // 0.05, 0.10, ..., 0.95

struct CCondEstimate {
  double value = 0;
  double argmax_q = 0;
  int argmax_state = -1;
};
// Largest ratio pi_bal(V') / min_V Pr_V(reach V') in six steps at balanced q.
// Backward targets use Q^6(V, V'); forward targets use the hit-within-6 probability.
double transitions_ratio(double q, int* argmax_state = nullptr);
CCondEstimate estimate_c_cond(std::span<const double> q_grid);

struct HittingStats {
  Matrix18 expected_hitting = Matrix18::Zero();  // E_x[tau_y], zero on the diagonal
  Dist18 return_times = Dist18::Zero();          // E_y[tau_y^+]
  double kappa = 0;
  double c_cond_estimate = 0;
};
HittingStats hitting_stats(const Matrix18& m, const Dist18& pi, std::span<const double> q_grid);
HittingStats hitting_stats(const Matrix18& m, const Dist18& pi);

struct PerturbationReport {
  double max_deviation = 0;
  double bound = 0;
  bool holds = false;
  int trials = 0;
};
// Samples (1-gamma)q/3 < q_k < (1+gamma)q/3 with sum q and compares stationary(Q) with pi_bal(q).
PerturbationReport perturbation_check(double q, double gamma, int trials, double c_cond, std::uint64_t seed);

}  // namespace cubicsudoku
