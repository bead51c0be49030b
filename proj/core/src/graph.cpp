#include "cubicsudoku/graph.hpp"

#include <numeric>
#include <string>

#include "cubicsudoku/rng.hpp"

namespace cubicsudoku {

CubicMultigraph CubicMultigraph::from_partners(std::vector<VertexId> partner) {
  if (partner.empty()) throw InvalidInput("empty partner table");
  const int n = static_cast<int>(partner.size()) - 1;
  if (n < 4 || n % 2 != 0) throw InvalidInput("n must be even and >= 4, got " + std::to_string(n));
  partner[0] = 0;
  for (VertexId v = 1; v <= n; ++v) {
    const VertexId p = partner[v];
    if (p < 1 || p > n) throw InvalidInput("partner out of range at vertex " + std::to_string(v));
    if (p == v) throw InvalidInput("self-loop at vertex " + std::to_string(v));
    if (partner[p] != v) throw InvalidInput("partner map is not an involution at vertex " + std::to_string(v));
  }
  return CubicMultigraph(n, std::move(partner));
}

CubicMultigraph CubicMultigraph::from_pairs(int n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("n must be even and >= 4, got " + std::to_string(n));
  if (pairs.size() * 2 != static_cast<std::size_t>(n)) throw InvalidInput("matching must have n/2 pairs");
  std::vector<VertexId> partner(n + 1, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidInput("matching vertex out of range");
    if (partner[a] != 0 || partner[b] != 0) throw InvalidInput("vertex appears twice in matching");
    if (a == b) throw InvalidInput("self-loop in matching");
    partner[a] = b;
    partner[b] = a;
  }
  return from_partners(std::move(partner));
}

std::vector<std::pair<VertexId, VertexId>> CubicMultigraph::matching_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(n_ / 2);
  for (VertexId v = 1; v <= n_; ++v)
    if (v < partner_[v]) out.emplace_back(v, partner_[v]);
  return out;
}

CubicMultigraph generate_graph(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("n must be even and >= 4, got " + std::to_string(n));
  DeterministicRandomSource rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<VertexId> partner(n + 1, 0);
  for (int i = 0; i < n; i += 2) {
    partner[perm[i]] = perm[i + 1];
    partner[perm[i + 1]] = perm[i];
  }
  return CubicMultigraph::from_partners(std::move(partner));
}

bool is_simple(const CubicMultigraph& g) {
  for (VertexId v = 1; v <= g.n(); ++v) {
    const VertexId p = g.partner(v);
    if (p == g.cycle_prev(v) || p == g.cycle_next(v)) return false;
  }
  return true;
}

AdjacencyGraph::AdjacencyGraph(int n, std::span<const std::pair<VertexId, VertexId>> edges)
    : n_(n), adj_(n + 1), edges_(edges.begin(), edges.end()) {
  if (n < 0) throw InvalidInput("negative vertex count");
  for (auto [a, b] : edges_) {
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidInput("edge endpoint out of range");
    if (a == b) throw InvalidInput("self-loops are not supported");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
}

AdjacencyGraph AdjacencyGraph::from_cubic(const CubicMultigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(3 * g.n() / 2);
  for (VertexId v = 1; v <= g.n(); ++v) edges.emplace_back(v, g.cycle_next(v));
  for (auto e : g.matching_pairs()) edges.push_back(e);
  return AdjacencyGraph(g.n(), edges);
}

AdjacencyGraph complete_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return AdjacencyGraph(n, edges);
}

AdjacencyGraph cycle_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 1; a <= n; ++a) edges.emplace_back(a, a == n ? 1 : a + 1);
  return AdjacencyGraph(n, edges);
}

AdjacencyGraph path_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  return AdjacencyGraph(n, edges);
}

AdjacencyGraph triangular_prism() {
  const std::pair<VertexId, VertexId> edges[] = {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6},
                                                 {6, 4}, {1, 4}, {2, 5}, {3, 6}};
  return AdjacencyGraph(6, edges);
}

}  // namespace cubicsudoku
