#include "cubicsudoku/completion.hpp"

#include "cubicsudoku/search.hpp"

namespace cubicsudoku {

const char* completion_mode_name(CompletionMode m) {
  switch (m) {
    case CompletionMode::EvenCycleInterval: return "EvenCycleInterval";
    case CompletionMode::BacktrackFallback: return "BacktrackFallback";
    case CompletionMode::Failed: return "Failed";
  }
  return "?";
}

namespace {

bool has(const std::array<Colour, 2>& l, Colour c) { return l[0] == c || l[1] == c; }

bool same_list(const std::array<Colour, 2>& a, const std::array<Colour, 2>& b) {
  return has(b, a[0]) && has(b, a[1]);
}

bool valid_cycle_colouring(std::span<const std::array<Colour, 2>> lists, const std::vector<Colour>& c) {
  const std::size_t len = lists.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (!has(lists[i], c[i])) return false;
    if (c[i] == c[(i + 1) % len]) return false;
  }
  return true;
}

bool backtrack_cycle(std::span<const std::array<Colour, 2>> lists, std::vector<Colour>& c, std::size_t pos) {
  if (pos == lists.size()) return c[pos - 1] != c[0];
  for (Colour x : lists[pos]) {
    if (pos > 0 && x == c[pos - 1]) continue;
    c[pos] = x;
    if (backtrack_cycle(lists, c, pos + 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<Colour> list_colour_even_cycle(std::span<const std::array<Colour, 2>> lists) {
  const std::size_t len = lists.size();
  if (len < 2) throw InvalidInput("cycle needs at least 2 vertices");
  for (const auto& l : lists)
    if (l[0] == l[1] || l[0] < 1 || l[0] > 3 || l[1] < 1 || l[1] > 3)
      throw InvalidInput("each list needs two distinct colours from {1,2,3}");

  std::vector<Colour> c(len, kUncoloured);
  std::size_t split = len;
  for (std::size_t i = 0; i < len; ++i)
    if (!same_list(lists[i], lists[(i + 1) % len])) {
      split = i;
      break;
    }
  if (split == len) {
    if (len % 2 == 0)
      for (std::size_t i = 0; i < len; ++i) c[i] = lists[i][i % 2];
  } else {
    // Start at v_{split+1} with a colour missing from v_split's list, go round, end at v_split.
    const std::size_t s = (split + 1) % len;
    c[s] = has(lists[split], lists[s][0]) ? lists[s][1] : lists[s][0];
    for (std::size_t step = 1; step < len; ++step) {
      const std::size_t v = (s + step) % len;
      const Colour prev = c[(v + len - 1) % len];
      c[v] = lists[v][0] != prev ? lists[v][0] : lists[v][1];
    }
  }
  if (valid_cycle_colouring(lists, c)) return c;
  std::fill(c.begin(), c.end(), kUncoloured);
  if (backtrack_cycle(lists, c, 0)) return c;
  throw InvariantViolation("cycle is not list colourable from the given lists");
}

std::optional<std::pair<VertexId, VertexId>> find_even_cycle_interval(const CubicMultigraph& g,
                                                                      VertexId first, VertexId last) {
  for (VertexId l = first; l <= last; ++l) {
    const VertexId r = g.partner(l);
    if (r <= l || r > last || (r - l + 1) % 2 != 0 || r - l + 1 < 4) continue;
    bool ok = true;
    for (VertexId v = l + 1; v < r && ok; ++v) {
      const VertexId p = g.partner(v);
      ok = p < l || p > r;
    }
    if (ok) return std::make_pair(l, r);
  }
  return std::nullopt;
}

CompletionResult completion_phase(const CubicMultigraph& g, PartialColouring colouring, VertexId i1,
                                  std::uint64_t node_budget) {
  const int n = g.n();
  if (colouring.n() != n) throw InvalidInput("colouring size does not match graph");
  if (i1 < 1 || i1 >= n) throw InvalidInput("i1 must lie in [1, n)");
  CompletionResult out;

  auto forbidden = [&](VertexId v) {
    unsigned mask = 0;
    for (VertexId u : g.neighbours(v)) mask |= 1u << colouring[u];
    return mask & ~1u;
  };
  auto greedy = [&](VertexId v) {
    const unsigned f = forbidden(v);
    for (Colour c = 1; c <= 3; ++c)
      if ((f & (1u << c)) == 0) {
        colouring.set(v, c);
        return true;
      }
    return false;
  };

  if (auto interval = find_even_cycle_interval(g, i1 + 1, n)) {
    const auto [l, r] = *interval;
    PartialColouring backup = colouring;
    bool ok = true;
    for (VertexId v = i1 + 1; v < l && ok; ++v) ok = greedy(v);
    for (VertexId v = n; v > r && ok; --v) ok = greedy(v);
    if (ok) {
      std::vector<std::array<Colour, 2>> lists;
      lists.reserve(r - l + 1);
      for (VertexId v = l; v <= r; ++v) {
        const VertexId outside = v == l ? g.cycle_prev(v) : v == r ? g.cycle_next(v) : g.partner(v);
        const Colour blocked = colouring[outside];
        std::array<Colour, 2> list{};
        int k = 0;
        for (Colour c = 1; c <= 3 && k < 2; ++c)
          if (c != blocked) list[k++] = c;
        lists.push_back(list);
      }
      const auto cyc = list_colour_even_cycle(lists);
      for (VertexId v = l; v <= r; ++v) colouring.set(v, cyc[v - l]);
      out.colouring = std::move(colouring);
      out.mode = CompletionMode::EvenCycleInterval;
      out.interval_first = l;
      out.interval_last = r;
      return out;
    }
    colouring = std::move(backup);
  }

  const auto adj = AdjacencyGraph::from_cubic(g);
  auto found = search_colourings(adj, colouring, 3, {1, node_budget});
  if (found.first) {
    out.colouring = std::move(*found.first);
    out.mode = CompletionMode::BacktrackFallback;
  } else {
    out.colouring = std::move(colouring);
    out.mode = CompletionMode::Failed;
  }
  return out;
}

}  // namespace cubicsudoku
