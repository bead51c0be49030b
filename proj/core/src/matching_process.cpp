#include "cubicsudoku/matching_process.hpp"

#include <string>

namespace cubicsudoku {

MatchingProcess::MatchingProcess(int n, std::uint64_t seed)
    : n_(n), partner_(n + 1, 0), pos_(n + 1, -1), rng_(seed) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("n must be even and >= 4, got " + std::to_string(n));
  unsat_.reserve(n / 2 + 1);
}

MatchingProcess::MatchingProcess(const CubicMultigraph& g)
    : n_(g.n()), partner_(g.n() + 1, 0), pos_(g.n() + 1, -1), presampled_(g.partners()) {
  unsat_.reserve(n_ / 2 + 1);
}

void MatchingProcess::saturate(VertexId v) {
  const int at = pos_[v];
  const VertexId last = unsat_.back();
  unsat_[at] = last;
  pos_[last] = at;
  unsat_.pop_back();
  pos_[v] = -1;
}

RevealOutcome MatchingProcess::reveal_step() {
  if (step_ >= n_) throw InvalidInput("matching process already complete");
  const VertexId v = ++step_;
  RevealOutcome out;
  if (presampled_.empty()) {
    const auto x = static_cast<std::uint64_t>(unsat_.size());
    const auto remaining = static_cast<std::uint64_t>(n_ - (v - 1));
    if (rng_.bernoulli(x, remaining)) {
      out.backward = true;
      out.partner = unsat_[rng_.uniform_below(x)];
    }
  } else {
    const VertexId p = presampled_[v];
    if (p < v) {
      if (pos_[p] < 0) throw InvariantViolation("replayed partner already saturated");
      out.backward = true;
      out.partner = p;
    }
  }
  if (out.backward) {
    partner_[v] = out.partner;
    partner_[out.partner] = v;
    saturate(out.partner);
  } else {
    if (v == n_) throw InvariantViolation("last vertex cannot have a forward edge");
    pos_[v] = static_cast<int>(unsat_.size());
    unsat_.push_back(v);
  }
  return out;
}

CubicMultigraph MatchingProcess::to_graph() const {
  if (step_ != n_) throw InvalidInput("matching process not complete");
  return CubicMultigraph::from_partners(partner_);
}

bool MatchingProcess::bookkeeping_consistent() const {
  int count = 0;
  for (VertexId v = 1; v <= step_; ++v) {
    const bool open = partner_[v] == 0;
    if (open != (pos_[v] >= 0)) return false;
    if (open) {
      ++count;
      if (unsat_[pos_[v]] != v) return false;
    }
  }
  return count == static_cast<int>(unsat_.size());
}

}  // namespace cubicsudoku
