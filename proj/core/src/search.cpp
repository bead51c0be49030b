#include "cubicsudoku/search.hpp"

#include <bit>
#include <set>
#include <utility>
#include <vector>

namespace cubicsudoku {

namespace {

class Searcher {
 public:
  Searcher(const AdjacencyGraph& g, const PartialColouring& partial, int k)
      : g_(g), k_(k), colour_(partial), counts_(static_cast<std::size_t>(g.n() + 1) * k, 0) {}

  bool init() {
    for (VertexId v = 1; v <= g_.n(); ++v) {
      const Colour c = colour_[v];
      if (c == kUncoloured) continue;
      if (c > k_) return false;
      for (VertexId u : g_.neighbours(v))
        if (colour_[u] == c) return false;
      for (VertexId u : g_.neighbours(v)) ++count(u, c);
    }
    for (VertexId v = 1; v <= g_.n(); ++v)
      if (colour_[v] == kUncoloured) queue_.emplace(admissible(v), v);
    return true;
  }

  SearchOutcome run(SearchLimits limits, DeterministicRandomSource* shuffle) {
    SearchOutcome out;
    struct Frame {
      VertexId v;
      std::uint32_t remaining;
      Colour assigned;
    };
    std::vector<Frame> stack;
    bool descend = true;
    while (true) {
      if (descend) {
        if (queue_.empty()) {
          ++out.count;
          if (!out.first) out.first = colour_;
          if (out.count >= limits.cap) break;
          descend = false;
          continue;
        }
        auto [adm, v] = *queue_.begin();
        if (adm == 0) {
          descend = false;
          continue;
        }
        queue_.erase(queue_.begin());
        stack.push_back({v, admissible_mask(v), kUncoloured});
      }
      if (stack.empty()) break;
      Frame& top = stack.back();
      if (top.assigned != kUncoloured) {
        unassign(top.v, top.assigned);
        top.assigned = kUncoloured;
      }
      if (top.remaining == 0) {
        queue_.emplace(admissible(top.v), top.v);
        stack.pop_back();
        descend = false;
        if (stack.empty()) break;
        continue;
      }
      if (out.nodes >= limits.node_budget) {
        out.budget_exhausted = true;
        break;
      }
      ++out.nodes;
      int bit = std::countr_zero(top.remaining);
      if (shuffle != nullptr) {
        const int options = std::popcount(top.remaining);
        auto pick = static_cast<int>(shuffle->uniform_below(static_cast<std::uint64_t>(options)));
        std::uint32_t m = top.remaining;
        while (pick-- > 0) m &= m - 1;
        bit = std::countr_zero(m);
      }
      top.remaining &= ~(1u << bit);
      top.assigned = static_cast<Colour>(bit + 1);
      assign(top.v, top.assigned);
      descend = true;
    }
    return out;
  }

 private:
  int& count(VertexId v, Colour c) { return counts_[static_cast<std::size_t>(v) * k_ + (c - 1)]; }

  std::uint32_t admissible_mask(VertexId v) {
    std::uint32_t m = 0;
    for (int c = 1; c <= k_; ++c)
      if (count(v, static_cast<Colour>(c)) == 0) m |= 1u << (c - 1);
    return m;
  }
  int admissible(VertexId v) { return std::popcount(admissible_mask(v)); }

  void assign(VertexId v, Colour c) {
    colour_.set(v, c);
    for (VertexId u : g_.neighbours(v)) {
      if (colour_[u] == kUncoloured && count(u, c) == 0) {
        const int a = admissible(u);
        queue_.erase({a, u});
        queue_.emplace(a - 1, u);
      }
      ++count(u, c);
    }
  }

  void unassign(VertexId v, Colour c) {
    colour_.set(v, kUncoloured);
    for (VertexId u : g_.neighbours(v)) {
      --count(u, c);
      if (colour_[u] == kUncoloured && u != v && count(u, c) == 0) {
        const int a = admissible(u);
        if (queue_.erase({a - 1, u}) > 0) queue_.emplace(a, u);
      }
    }
  }

  const AdjacencyGraph& g_;
  int k_;
  PartialColouring colour_;
  std::vector<int> counts_;
  std::set<std::pair<int, VertexId>> queue_;
};

}  // namespace

SearchOutcome search_colourings(const AdjacencyGraph& g, const PartialColouring& partial, int k,
                                SearchLimits limits, DeterministicRandomSource* shuffle) {
  if (k < 1 || k > 31) throw InvalidInput("colour count must be in [1, 31]");
  if (partial.n() != g.n()) throw InvalidInput("colouring size does not match graph");
  Searcher s(g, partial, k);
  if (!s.init()) {
    SearchOutcome out;
    out.improper_input = true;
    return out;
  }
  return s.run(limits, shuffle);
}

}  // namespace cubicsudoku
