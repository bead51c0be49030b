#include "cubicsudoku/experiments.hpp"

#include <algorithm>
#include <string>

#include "cubicsudoku/search.hpp"
#include "cubicsudoku/verify.hpp"

namespace cubicsudoku {

namespace {

// Strip to the 2-core, remove a highest-degree vertex (random tie-break), repeat.
std::vector<VertexId> greedy_decycling(const AdjacencyGraph& g, DeterministicRandomSource& rng) {
  const int n = g.n();
  std::vector<int> deg(n + 1);
  std::vector<std::uint8_t> alive(n + 1, 1);
  alive[0] = 0;
  for (VertexId v = 1; v <= n; ++v) deg[v] = g.degree(v);
  std::vector<VertexId> removed;
  auto kill = [&](VertexId v) {
    alive[v] = 0;
    for (VertexId u : g.neighbours(v))
      if (alive[u]) --deg[u];
  };
  while (true) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 1; v <= n; ++v)
        if (alive[v] && deg[v] <= 1) {
          kill(v);
          changed = true;
        }
    }
    std::vector<VertexId> top;
    int best = -1;
    for (VertexId v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      if (deg[v] > best) {
        best = deg[v];
        top.clear();
      }
      if (deg[v] == best) top.push_back(v);
    }
    if (top.empty()) break;
    const VertexId pick = top[rng.uniform_below(top.size())];
    removed.push_back(pick);
    kill(pick);
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

// Swap colours a <-> b on the {a, b}-component of v.
void kempe_swap(const AdjacencyGraph& g, PartialColouring& c, VertexId v, Colour b, std::vector<VertexId>& stack,
                std::vector<std::uint8_t>& mark) {
  const Colour a = c[v];
  std::fill(mark.begin(), mark.end(), 0);
  stack.assign(1, v);
  mark[v] = 1;
  std::vector<VertexId> comp;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (VertexId w : g.neighbours(u))
      if (!mark[w] && (c[w] == a || c[w] == b)) {
        mark[w] = 1;
        stack.push_back(w);
      }
  }
  for (VertexId u : comp) c.set(u, c[u] == a ? b : a);
}

int forced_count(const AdjacencyGraph& g, const PartialColouring& c, std::span<const VertexId> set) {
  const auto prop = propagate_forced(g, c.restricted_to(set), 3);
  if (prop.result.status == VerificationStatus::Contradiction) return 0;
  return prop.extended.coloured_count();
}

}  // namespace

ProbeResult conjecture_probe(int n, int trials, long long budget, std::uint64_t seed) {
  if (n > 200) throw InvalidInput("conjecture_probe needs n <= 200");
  ProbeResult out;
  out.lb_regular = lb_regular(n, 3);
  for (std::uint64_t attempt = 0;; ++attempt) {
    out.graph = generate_graph(n, substream_seed(seed, attempt));
    if (is_simple(out.graph)) break;
  }
  const auto g = AdjacencyGraph::from_cubic(out.graph);
  DeterministicRandomSource rng(substream_seed(seed, 0xD0C0DEULL));
  const CountOptions opts{2, 200};
  long long spent = 0;
  std::vector<VertexId> stack;
  std::vector<std::uint8_t> mark(n + 1);

  auto record = [&](std::vector<VertexId> set, const PartialColouring& c, bool augmented) {
    const int size = static_cast<int>(set.size());
    if (!out.found || size < out.best_size) {
      out.found = true;
      out.best_size = size;
      out.best_fraction = static_cast<double>(size) / n;
      out.set = std::move(set);
      out.colouring = c;
      out.via_augmentation = augmented;
    }
  };

  for (int t = 0; t < trials; ++t) {
    if (spent >= budget) {
      out.budget_exhausted = true;
      break;
    }
    ++out.attempts;
    const auto dec = greedy_decycling(g, rng);
    if (out.found && static_cast<int>(dec.size()) >= out.best_size) continue;
    auto colouring = search_colourings(g, PartialColouring(n), 3, {1, 1'000'000}, &rng).first;
    if (!colouring) continue;
    // Hill-climb over Kempe swaps on the number of vertices propagation recovers from `dec`.
    int score = forced_count(g, *colouring, dec);
    ++spent;
    const long long moves = std::max<long long>(1, (budget - spent) / std::max(1, trials - t));
    for (long long m = 0; m < moves && score < n; ++m, ++spent) {
      PartialColouring next = *colouring;
      const auto v = static_cast<VertexId>(rng.uniform_below(n) + 1);
      const Colour b = static_cast<Colour>((next[v] + rng.uniform_below(2)) % 3 + 1);
      kempe_swap(g, next, v, b, stack, mark);
      const int s2 = forced_count(g, next, dec);
      if (s2 >= score) {
        score = s2;
        *colouring = std::move(next);
      }
    }
    if (score == n) {
      const auto verdict = is_sudoku_set(g, *colouring, dec, 3, opts);
      if (verdict.unique()) {
        record(dec, *colouring, false);
        continue;
      }
    }
    if (out.found && static_cast<int>(dec.size()) + 1 >= out.best_size) continue;
    // Near miss: extend by one vertex, preferring those propagation leaves undetermined.
    const auto prop = propagate_forced(g, colouring->restricted_to(dec), 3);
    std::vector<VertexId> candidates;
    for (VertexId v = 1; v <= n; ++v)
      if (!prop.extended.coloured(v)) candidates.push_back(v);
    for (VertexId v : candidates) {
      if (spent >= budget) {
        out.budget_exhausted = true;
        break;
      }
      ++spent;
      auto bigger = dec;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (is_sudoku_set(g, *colouring, bigger, 3, opts).unique()) {
        record(std::move(bigger), *colouring, true);
        break;
      }
    }
  }
  return out;
}

}  // namespace cubicsudoku
