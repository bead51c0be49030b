#pragma once

// Independent reference implementations used only by tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/types.hpp"

namespace oracle {

using cubicsudoku::VertexId;

// All perfect matchings of {1..n} as partner tables (index 0 unused).
inline std::vector<std::vector<VertexId>> all_matchings(int n) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> partner(n + 1, 0);
  auto rec = [&](auto&& self) -> void {
    VertexId first = 0;
    for (VertexId v = 1; v <= n; ++v)
      if (partner[v] == 0) {
        first = v;
        break;
      }
    if (first == 0) {
      out.push_back(partner);
      return;
    }
    for (VertexId u = first + 1; u <= n; ++u) {
      if (partner[u] != 0) continue;
      partner[first] = u;
      partner[u] = first;
      self(self);
      partner[first] = partner[u] = 0;
    }
  };
  rec(rec);
  return out;
}

inline double chi_square(const std::vector<long long>& observed, double expected) {
  double s = 0;
  for (long long o : observed) s += (o - expected) * (o - expected) / expected;
  return s;
}

// Upper 1% quantiles of the chi-square distribution (standard tables).
inline double chi2_crit_99(int df) {
  static const std::map<int, double> table = {{1, 6.635}, {2, 9.210}, {3, 11.345}, {5, 15.086},
                                              {14, 29.141}, {17, 33.409}};
  return table.at(df);
}

// Number of proper k-colourings extending `partial`, by plain enumeration of k^(free vertices).
inline std::uint64_t brute_count(const cubicsudoku::AdjacencyGraph& g, const cubicsudoku::PartialColouring& partial,
                                 int k) {
  const int n = g.n();
  std::vector<VertexId> free;
  for (VertexId v = 1; v <= n; ++v)
    if (!partial.coloured(v)) free.push_back(v);
  std::vector<int> c(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) c[v] = partial[v];
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<std::uint64_t>(k);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (VertexId v : free) {
      c[v] = static_cast<int>(x % k) + 1;
      x /= k;
    }
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (c[a] == c[b]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

// Transitive closure by Warshall's algorithm.
template <int N>
std::array<std::array<bool, N>, N> closure(std::array<std::array<bool, N>, N> r) {
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      if (r[i][k])
        for (int j = 0; j < N; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Exact rational arithmetic on int64 (small values only).
struct Rational {
  long long num = 0, den = 1;
  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT
  Rational(long long n, long long d) : num(n), den(d) { normalise(); }
  void normalise() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  Rational& operator+=(Rational b) { return *this = *this + b; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

}  // namespace oracle
