#include <gtest/gtest.h>

#include <cmath>

#include "cubicsudoku/rng.hpp"
#include "cubicsudoku/type_chain.hpp"
#include "oracles.hpp"

using namespace cubicsudoku;
using oracle::Rational;

namespace {

constexpr int A_b(int k) { return k - 1; }
constexpr int A_f(int k) { return 2 + k; }

int relabel(int state, const std::array<Colour, 4>& sigma) {
  const VertexType t{static_cast<std::uint8_t>(state)};
  if (t.is_a()) return VertexType::a(t.backward(), sigma[t.own()]).index;
  return VertexType::b(t.backward(), sigma[t.prev()], sigma[t.own()]).index;
}

Rational rat(int num, int den) { return {num, den}; }

}  // namespace

TEST(BuildQ, BalancedSixthRowAb1) {
  const auto q = build_q(ChainParams::balanced(0.5));
  const int row = A_b(1);
  EXPECT_NEAR(q(row, A_b(2)), 1.0 / 6, 1e-15);
  EXPECT_NEAR(q(row, A_b(3)), 1.0 / 6, 1e-15);
  EXPECT_NEAR(q(row, VertexType::b(false, 1, 2).index), 0.25, 1e-15);
  EXPECT_NEAR(q(row, VertexType::b(false, 1, 3).index), 0.25, 1e-15);
  EXPECT_NEAR(q(row, VertexType::b(true, 1, 2).index), 1.0 / 12, 1e-15);
  EXPECT_NEAR(q(row, VertexType::b(true, 1, 3).index), 1.0 / 12, 1e-15);
  EXPECT_NEAR(q.row(row).sum(), 1.0, 1e-15);
}

TEST(BuildQ, RowBb12) {
  const ChainParams p{0.1, 0.2, 0.3};
  const auto q = build_q(p);
  const int row = VertexType::b(true, 1, 2).index;
  EXPECT_DOUBLE_EQ(q(row, A_b(1)), 0.3);
  EXPECT_DOUBLE_EQ(q(row, A_f(3)), 1 - 0.6);
  EXPECT_DOUBLE_EQ(q(row, VertexType::b(true, 1, 3).index), 0.1);
  EXPECT_DOUBLE_EQ(q(row, VertexType::b(true, 2, 3).index), 0.2);
  int nonzero = 0;
  for (int j = 0; j < kNumTypes; ++j) nonzero += q(row, j) > 0;
  EXPECT_EQ(nonzero, 4);
}

TEST(BuildQ, ExactRowSumsOnRandomRationals) {
  DeterministicRandomSource rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = static_cast<int>(rng.uniform_below(61));
    const int b = static_cast<int>(rng.uniform_below(61 - a));
    const int c = static_cast<int>(rng.uniform_below(61 - a - b));
    const auto m = build_q_entries<Rational>(rat(a, 60), rat(b, 60), rat(c, 60));
    for (const auto& row : m) {
      Rational s(0);
      for (const auto& x : row) {
        EXPECT_GE(x.num, 0);
        s += x;
      }
      EXPECT_EQ(s, Rational(1));
    }
  }
}

TEST(BuildQ, RejectsInvalidParams) {
  EXPECT_THROW(build_q({0.5, 0.4, 0.3}), InvalidInput);
  EXPECT_THROW(build_q({-0.1, 0.2, 0.2}), InvalidInput);
}

TEST(PiBal, ClosedForm) {
  const auto p = pi_bal(0.5);
  EXPECT_DOUBLE_EQ(p(A_b(1)), 1.0 / 12);
  EXPECT_DOUBLE_EQ(p(VertexType::b(true, 2, 3).index), 1.0 / 24);
  for (double q : default_q_grid()) {
    const auto d = pi_bal(q);
    EXPECT_TRUE(is_distribution(d));
    for (Colour k = 1; k <= 3; ++k) {
      double f = d(VertexType::a(false, k).index);
      for (Colour l = 1; l <= 3; ++l)
        if (l != k) f += d(VertexType::b(false, l, k).index);
      EXPECT_NEAR(f, (1 - q) / 3, 1e-15);
    }
  }
  EXPECT_THROW(pi_bal(0.0), InvalidInput);
}

TEST(PiBal, ExactFixedPoint) {
  for (int num = 1; num < 12; ++num) {
    const Rational q = rat(num, 12);
    const Rational third = q / Rational(3);
    const auto m = build_q_entries<Rational>(third, third, third);
    std::array<Rational, kNumTypes> pi;
    for (int i = 0; i < kNumTypes; ++i)
      pi[i] = i < 3 ? q / Rational(6) : i < 6 ? (Rational(1) - q) / Rational(6) : i < 12 ? q / Rational(12)
                                                                                   : (Rational(1) - q) / Rational(12);
    for (int j = 0; j < kNumTypes; ++j) {
      Rational s(0);
      for (int i = 0; i < kNumTypes; ++i) s += pi[i] * m[i][j];
      EXPECT_EQ(s, pi[j]) << num << " " << j;
    }
  }
}

TEST(Stationary, MatchesClosedFormOnGrid) {
  for (double q : default_q_grid()) {
    const auto m = build_q(ChainParams::balanced(q));
    EXPECT_LE((pi_bal(q) * m - pi_bal(q)).lpNorm<1>(), 1e-12);
    EXPECT_LE((stationary(m) - pi_bal(q)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Stationary, MethodsAgreeAndPinnedVector) {
  const auto m = build_q({0.2, 0.15, 0.1});
  const auto a = stationary_solve(m);
  const auto b = stationary_power(m);
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((a * m - a).lpNorm<1>(), 1e-12);
  // Regression values.
  EXPECT_NEAR(a(0), 0.0665277696875616, 1e-9);
  EXPECT_NEAR(a(12), 0.0424054932473689, 1e-9);
}

TEST(Stationary, ColourSymmetry) {
  const ChainParams p{0.21, 0.13, 0.08};
  const ChainParams swapped{0.13, 0.21, 0.08};
  const std::array<Colour, 4> sigma = {0, 2, 1, 3};
  const auto a = stationary(build_q(p));
  const auto b = stationary(build_q(swapped));
  for (int s = 0; s < kNumTypes; ++s) EXPECT_NEAR(a(s), b(relabel(s, sigma)), 1e-12);
}

TEST(Structure, InteriorParamsAgreeWithOracle) {
  DeterministicRandomSource rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    double q1 = 0.01 + 0.3 * rng.uniform01();
    double q2 = 0.01 + 0.3 * rng.uniform01();
    double q3 = 0.01 + 0.3 * rng.uniform01();
    const auto m = build_q({q1, q2, q3});
    std::array<std::array<bool, kNumTypes>, kNumTypes> r{};
    for (int i = 0; i < kNumTypes; ++i)
      for (int j = 0; j < kNumTypes; ++j) r[i][j] = m(i, j) > 0;
    const auto cl = oracle::closure<kNumTypes>(r);
    bool strongly = true;
    for (const auto& row : cl)
      for (bool x : row) strongly = strongly && x;
    // Primitive iff some power up to (N-1)^2 + 1 is entrywise positive.
    Matrix18 p = m;
    bool primitive = false;
    for (int t = 1; t <= 17 * 17 + 1 && !primitive; ++t) {
      primitive = (p.array() > 0).all();
      p = p * m;
      p = (p.array() > 0).cast<double>().matrix() * 0.5;
    }
    const auto s = structure_check(m);
    EXPECT_EQ(s.irreducible, strongly);
    EXPECT_EQ(s.irreducible && s.aperiodic, primitive);
    EXPECT_TRUE(s.irreducible);
    EXPECT_TRUE(s.aperiodic);
  }
}

TEST(Structure, ZeroBackwardRatesAreReducible) {
  const auto s = structure_check(build_q({0, 0, 0}));
  EXPECT_FALSE(s.irreducible);
}

TEST(Mixing, MonotoneAndPinned) {
  const auto m = build_q(ChainParams::balanced(0.5));
  const auto t2 = mixing_time(m, 1e-2);
  const auto t3 = mixing_time(m, 1e-3);
  ASSERT_TRUE(t2 && t3);
  EXPECT_LE(*t2, *t3);
  EXPECT_EQ(*t3, 9);
}

TEST(Mixing, ScalesLikeInverseQ) {
  for (int k = 1; k <= 9; ++k) {
    const double q = 0.1 * k;
    const auto t = mixing_time(build_q(ChainParams::balanced(q)), 1e-3);
    ASSERT_TRUE(t.has_value());
    EXPECT_LE(*t * q / std::log(1e3), 2.0) << q;
  }
}

TEST(Minorization, PowersOneAndSix) {
  EXPECT_EQ(minorization_alpha(build_q({0.1, 0.2, 0.3}), 1).alpha, 0.0);
  for (double q : default_q_grid()) {
    const auto r = minorization_alpha(build_q(ChainParams::balanced(q)), 6);
    EXPECT_GT(r.alpha, 0.0);
    EXPECT_GE(r.alpha, 0.4 * q) << q;
    EXPECT_TRUE(is_distribution(r.nu, 1e-9));
  }
}

TEST(Hitting, KacAndKappa) {
  const double q = 0.5;
  const auto m = build_q(ChainParams::balanced(q));
  const auto pi = pi_bal(q);
  const auto grid = default_q_grid();
  const auto h = hitting_stats(m, pi, grid);
  for (int y = 0; y < kNumTypes; ++y) EXPECT_NEAR(pi(y) * h.return_times(y), 1.0, 1e-9);
  EXPECT_GT(h.c_cond_estimate, 1.0);
  EXPECT_TRUE(std::isfinite(h.c_cond_estimate));
  EXPECT_LE(h.kappa, 6 * h.c_cond_estimate);
  for (int y = 0; y < kNumTypes; ++y) EXPECT_EQ(h.expected_hitting(y, y), 0.0);
}

TEST(Hitting, ReducibleIsReported) {
  const auto m = build_q({0, 0, 0});
  EXPECT_THROW(hitting_stats(m, pi_bal(0.5)), NonConvergence);
}

TEST(Perturbation, ZeroAndLinear) {
  const double c = estimate_c_cond(default_q_grid()).value;
  EXPECT_LE(perturbation_check(0.5, 0.0, 10, c, 1).max_deviation, 1e-12);
  const auto r = perturbation_check(0.5, 0.05, 100, c, 2);
  EXPECT_TRUE(r.holds);
  std::vector<double> logs;
  for (double g : {0.01, 0.02, 0.04}) logs.push_back(std::log(perturbation_check(0.5, g, 50, c, 3).max_deviation));
  const double slope = (logs[2] - logs[0]) / std::log(4.0);
  EXPECT_NEAR(slope, 1.0, 0.2);
}

TEST(TotalVariation, HalfL1) {
  DeterministicRandomSource rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    Dist18 a, b;
    for (int i = 0; i < kNumTypes; ++i) {
      a(i) = rng.uniform01();
      b(i) = rng.uniform01();
    }
    a /= a.sum();
    b /= b.sum();
    double l1 = 0;
    for (int i = 0; i < kNumTypes; ++i) l1 += std::abs(a(i) - b(i));
    EXPECT_NEAR(tv_distance(a, b), l1 / 2, 1e-15);
  }
}
