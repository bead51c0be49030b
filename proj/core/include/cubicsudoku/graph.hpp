#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubicsudoku {

using VertexId = int;  // 1-based throughout

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal state went bad; carries a diagnostic.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Hamilton cycle (1 2 ... n) plus a perfect matching given by the involution `partner`.
class CubicMultigraph {
 public:
  CubicMultigraph() = default;
  // partner[0] is ignored; partner[v] for v in 1..n.
  static CubicMultigraph from_partners(std::vector<VertexId> partner);
  static CubicMultigraph from_pairs(int n, std::span<const std::pair<VertexId, VertexId>> pairs);

  int n() const noexcept { return n_; }
  VertexId partner(VertexId v) const { return partner_[v]; }
  VertexId cycle_next(VertexId v) const noexcept { return v == n_ ? 1 : v + 1; }
  VertexId cycle_prev(VertexId v) const noexcept { return v == 1 ? n_ : v - 1; }
  std::array<VertexId, 3> neighbours(VertexId v) const {
    return {cycle_prev(v), cycle_next(v), partner_[v]};
  }
  const std::vector<VertexId>& partners() const noexcept { return partner_; }

  // Matching pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<VertexId, VertexId>> matching_pairs() const;

  friend bool operator==(const CubicMultigraph&, const CubicMultigraph&) = default;

 private:
  CubicMultigraph(int n, std::vector<VertexId> partner) : n_(n), partner_(std::move(partner)) {}
  int n_ = 0;
  std::vector<VertexId> partner_;
};

// Uniform perfect matching by random pairing (Fisher-Yates then consecutive pairs).
CubicMultigraph generate_graph(int n, std::uint64_t seed);

bool is_simple(const CubicMultigraph& g);

// Generic undirected multigraph on vertices 1..n, used by verification.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;
  AdjacencyGraph(int n, std::span<const std::pair<VertexId, VertexId>> edges);
  static AdjacencyGraph from_cubic(const CubicMultigraph& g);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<VertexId>& neighbours(VertexId v) const { return adj_[v]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

 private:
  int n_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Named small graphs.
AdjacencyGraph complete_graph(int n);
AdjacencyGraph cycle_graph(int n);
AdjacencyGraph path_graph(int n);
AdjacencyGraph triangular_prism();

}  // namespace cubicsudoku
