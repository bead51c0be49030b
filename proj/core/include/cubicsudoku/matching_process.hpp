#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/rng.hpp"

namespace cubicsudoku {

struct RevealOutcome {
  bool backward = false;
  VertexId partner = 0;  // set only when backward
};

// Deferred-decision reveal of the matching, one vertex per step.
// On-the-fly mode samples Backward with probability X(i-1)/(n-(i-1)) and a uniform
// unsaturated partner; replay mode reads a fixed graph.
class MatchingProcess {
 public:
  MatchingProcess(int n, std::uint64_t seed);
  explicit MatchingProcess(const CubicMultigraph& g);

  RevealOutcome reveal_step();

  int n() const noexcept { return n_; }
  int step() const noexcept { return step_; }
  int unsaturated_count() const noexcept { return static_cast<int>(unsat_.size()); }
  bool on_the_fly() const noexcept { return presampled_.empty(); }

  // Revealed partner of v, or 0 if not yet known.
  VertexId revealed_partner(VertexId v) const { return partner_[v]; }
  bool is_unsaturated(VertexId v) const { return pos_[v] >= 0; }
  std::span<const VertexId> unsaturated() const noexcept { return unsat_; }

  // Only valid once step() == n.
  CubicMultigraph to_graph() const;

  // Replace the randomness for all future steps (on-the-fly mode).
  void reseed(std::uint64_t seed) { rng_ = DeterministicRandomSource(seed); }

  // Recount of unsaturated vertices from the partner table.
  bool bookkeeping_consistent() const;

 private:
  void saturate(VertexId v);

  int n_;
  int step_ = 0;
  std::vector<VertexId> partner_;
  std::vector<int> pos_;
  std::vector<VertexId> unsat_;
  std::vector<VertexId> presampled_;
  DeterministicRandomSource rng_;
};

}  // namespace cubicsudoku
