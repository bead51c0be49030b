#include "cubicsudoku/verify.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "cubicsudoku/search.hpp"

namespace cubicsudoku {

const char* status_name(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::UniqueByPropagation: return "UniqueByPropagation";
    case VerificationStatus::UniqueByExactCount: return "UniqueByExactCount";
    case VerificationStatus::NotUnique: return "NotUnique";
    case VerificationStatus::Contradiction: return "Contradiction";
    case VerificationStatus::Unknown: return "Unknown";
  }
  return "?";
}

bool check_proper(const AdjacencyGraph& g, const PartialColouring& colouring, int k) {
  if (colouring.n() != g.n()) throw InvalidInput("colouring size does not match graph");
  for (VertexId v = 1; v <= g.n(); ++v) {
    if (!colouring.coloured(v)) throw InvalidInput("vertex " + std::to_string(v) + " is uncoloured");
    if (colouring[v] > k) return false;
  }
  for (auto [a, b] : g.edges())
    if (colouring[a] == colouring[b]) return false;
  return true;
}

bool check_proper(const CubicMultigraph& g, const PartialColouring& colouring, int k) {
  if (colouring.n() != g.n()) throw InvalidInput("colouring size does not match graph");
  for (VertexId v = 1; v <= g.n(); ++v) {
    if (!colouring.coloured(v)) throw InvalidInput("vertex " + std::to_string(v) + " is uncoloured");
    if (colouring[v] > k) return false;
  }
  for (VertexId v = 1; v <= g.n(); ++v)
    if (colouring[v] == colouring[g.cycle_next(v)] || colouring[v] == colouring[g.partner(v)]) return false;
  return true;
}

namespace {

bool partial_proper(const AdjacencyGraph& g, const PartialColouring& c, int k) {
  for (VertexId v = 1; v <= g.n(); ++v)
    if (c[v] > k) return false;
  for (auto [a, b] : g.edges())
    if (c[a] != kUncoloured && c[a] == c[b]) return false;
  return true;
}

}  // namespace

PropagationResult propagate_forced(const AdjacencyGraph& g, const PartialColouring& partial, int k) {
  if (partial.n() != g.n()) throw InvalidInput("colouring size does not match graph");
  if (k < 1 || k > 31) throw InvalidInput("colour count must be in [1, 31]");
  PropagationResult out{partial, {}};
  auto& c = out.extended;
  if (!partial_proper(g, c, k)) {
    out.result.status = VerificationStatus::Contradiction;
    return out;
  }
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::uint32_t> seen(g.n() + 1, 0);
  for (VertexId v = 1; v <= g.n(); ++v)
    if (c.coloured(v))
      for (VertexId u : g.neighbours(v)) seen[u] |= 1u << (c[v] - 1);

  std::vector<VertexId> work;
  for (VertexId v = g.n(); v >= 1; --v)
    if (!c.coloured(v)) work.push_back(v);
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (c.coloured(v)) continue;
    const std::uint32_t free = full & ~seen[v];
    if (free == 0) {
      out.result.status = VerificationStatus::Contradiction;
      return out;
    }
    if (std::popcount(free) != 1) continue;
    const auto colour = static_cast<Colour>(std::countr_zero(free) + 1);
    c.set(v, colour);
    out.result.forced_order.push_back(v);
    for (VertexId u : g.neighbours(v)) {
      seen[u] |= free;
      if (!c.coloured(u)) work.push_back(u);
    }
  }
  out.result.status = c.total() ? VerificationStatus::UniqueByPropagation : VerificationStatus::Unknown;
  return out;
}

std::optional<std::uint64_t> count_extensions(const AdjacencyGraph& g, const PartialColouring& partial, int k,
                                              CountOptions options) {
  if (g.n() > options.max_vertices) return std::nullopt;
  if (options.cap == 0) return 0;
  auto found = search_colourings(g, partial, k, {options.cap, kUncapped});
  return found.count;
}

VerificationResult is_sudoku_set(const AdjacencyGraph& g, const PartialColouring& colouring,
                                 std::span<const VertexId> set, int k, CountOptions options) {
  const auto restricted = colouring.restricted_to(set);
  auto prop = propagate_forced(g, restricted, k);
  if (prop.result.status == VerificationStatus::UniqueByPropagation) {
    if (prop.extended != colouring) prop.result.status = VerificationStatus::Contradiction;
    return prop.result;
  }
  if (prop.result.status == VerificationStatus::Contradiction) return prop.result;
  VerificationResult out;
  out.forced_order = std::move(prop.result.forced_order);
  const auto count = count_extensions(g, restricted, k, options);
  if (!count) return out;
  out.count = *count;
  if (*count == 0) {
    out.status = VerificationStatus::Contradiction;
  } else if (*count == 1) {
    const auto only = search_colourings(g, restricted, k, {1, kUncapped});
    out.status = only.first && *only.first == colouring ? VerificationStatus::UniqueByExactCount
                                                        : VerificationStatus::Contradiction;
  } else {
    out.status = VerificationStatus::NotUnique;
  }
  return out;
}

std::optional<std::vector<VertexId>> strong_order(const AdjacencyGraph& g, const PartialColouring& colouring,
                                                  std::span<const VertexId> set, int k) {
  std::vector<std::uint8_t> fixed(g.n() + 1, 0);
  for (VertexId v : set) fixed[v] = 1;
  std::vector<std::uint32_t> seen(g.n() + 1, 0);
  for (VertexId v = 1; v <= g.n(); ++v)
    if (fixed[v])
      for (VertexId u : g.neighbours(v)) seen[u] |= 1u << (colouring[v] - 1);

  std::vector<VertexId> order;
  std::vector<VertexId> work;
  for (VertexId v = g.n(); v >= 1; --v)
    if (!fixed[v]) work.push_back(v);
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (fixed[v] || std::popcount(seen[v]) < k - 1) continue;
    fixed[v] = 1;
    order.push_back(v);
    for (VertexId u : g.neighbours(v)) {
      seen[u] |= 1u << (colouring[v] - 1);
      if (!fixed[u]) work.push_back(u);
    }
  }
  for (VertexId v = 1; v <= g.n(); ++v)
    if (!fixed[v]) return std::nullopt;
  return order;
}

bool is_decycling(const AdjacencyGraph& g, std::span<const VertexId> set) {
  std::vector<std::uint8_t> removed(g.n() + 1, 0);
  for (VertexId v : set) removed[v] = 1;
  std::vector<VertexId> parent(g.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : g.edges()) {
    if (removed[a] || removed[b]) continue;
    const VertexId ra = find(a);
    const VertexId rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

long long lb_edges(long long n_vertices, long long n_edges, int chi) {
  if (chi < 2) throw InvalidInput("chi must be at least 2");
  return n_vertices - n_edges / (chi - 1);
}

long long lb_regular(long long n_vertices, int d) {
  if (d < 2) throw InvalidInput("degree must be at least 2");
  const long long num = (d - 2LL) * n_vertices + 2 + (d - 2LL) * (d - 3LL);
  const long long den = 2LL * (d - 1);
  return (num + den - 1) / den;
}

long long ub_independence(int chi, long long alpha) {
  if (chi < 2) throw InvalidInput("chi must be at least 2");
  return (chi - 1LL) * alpha;
}

BoundsReport bounds_report(long long n_vertices, long long n_edges, int d, int chi, long long alpha) {
  return {lb_edges(n_vertices, n_edges, chi), lb_regular(n_vertices, d), ub_independence(chi, alpha)};
}

}  // namespace cubicsudoku
