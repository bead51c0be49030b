#include "cubicsudoku/sudoku_run.hpp"

#include <sstream>

namespace cubicsudoku {

namespace {

[[noreturn]] void corrupt(const RunState& s, const std::string& what) {
  std::ostringstream os;
  os << "sudoku run: " << what << " (current=" << s.current << ", pointer=" << s.pointer
     << ", |S|=" << s.set_size << ")";
  throw InvariantViolation(os.str());
}

bool in_pair(const std::array<Colour, 2>& c, Colour x) { return c[0] == x || c[1] == x; }

}  // namespace

std::vector<VertexId> RunState::set_members() const {
  std::vector<VertexId> out;
  out.reserve(set_size);
  for (VertexId v = 1; v <= n; ++v)
    if (in_set[v]) out.push_back(v);
  return out;
}

RunState initial_run_state(const MatchingProcess& process, PartialColouring colouring, VertexId i0) {
  if (process.step() != i0) throw InvalidInput("process must be at step i0");
  RunState s;
  s.n = process.n();
  s.i0 = i0;
  s.current = i0;
  s.pointer = i0;
  s.back_partner.assign(s.n + 1, 0);
  s.in_set.assign(s.n + 1, 0);
  s.types.assign(s.n + 1, -1);
  for (VertexId v = 1; v <= i0; ++v) {
    if (!colouring.coloured(v)) throw InvalidInput("burn-in prefix is not fully coloured");
    const VertexId p = process.revealed_partner(v);
    if (p != 0 && p < v) s.back_partner[v] = p;
    s.in_set[v] = 1;
  }
  s.set_size = i0;
  for (VertexId v : process.unsaturated()) ++s.x_colour[colouring[v] - 1];
  s.colouring = std::move(colouring);
  return s;
}

std::array<Colour, 2> reference_pair(const RunState& s) {
  const VertexId i = s.current;
  const VertexId other = s.back_partner[i] != 0 ? s.back_partner[i] : i - 1;
  const Colour a = s.colouring[i];
  const Colour b = other >= 1 ? s.colouring[other] : kUncoloured;
  if (a == kUncoloured || b == kUncoloured || a == b) corrupt(s, "reference pair undefined");
  return {b, a};
}

CaseLabel classify_step(const RunState& s, const RevealOutcome& reveal,
                        std::optional<Colour> partner_colour) {
  const Colour ci = s.colouring[s.current];
  if (reveal.backward && !partner_colour) corrupt(s, "backward reveal without partner colour");
  if (s.a_run()) {
    if (!reveal.backward) return CaseLabel::A2a;
    return *partner_colour == ci ? CaseLabel::A2b : CaseLabel::A1;
  }
  if (!reveal.backward) return CaseLabel::B2a;
  const auto cpair = reference_pair(s);
  const bool inside = in_pair(cpair, *partner_colour);
  if (reveal.partner <= s.pointer) return inside ? CaseLabel::B1 : CaseLabel::B2b;
  return inside ? CaseLabel::B2c : CaseLabel::B2d;
}

CaseLabel classify_step(const RunState& s, const RevealOutcome& reveal) {
  std::optional<Colour> pc;
  if (reveal.backward) pc = s.colouring[reveal.partner];
  return classify_step(s, reveal, pc);
}

StepRecord apply_step(RunState& s, const RevealOutcome& reveal, DeterministicRandomSource& rng) {
  const VertexId i = s.current;
  const VertexId v = i + 1;
  if (v > s.n) corrupt(s, "step past n");
  const CaseLabel label = classify_step(s, reveal);
  const Colour ci = s.colouring[i];
  const Colour cp = reveal.backward ? s.colouring[reveal.partner] : kUncoloured;
  const VertexId old_pointer = s.pointer;
  const int old_size = s.set_size;
  Colour c = kUncoloured;
  VertexType type;

  auto add_to_set = [&](VertexId u) {
    if (!s.in_set[u]) {
      s.in_set[u] = 1;
      ++s.set_size;
    }
  };

  switch (label) {
    case CaseLabel::A1:
      c = third_colour(ci, cp);
      type = VertexType::a(true, c);
      s.pointer = v;
      break;
    case CaseLabel::A2a:
    case CaseLabel::A2b: {
      const Colour options[2] = {static_cast<Colour>(ci % 3 + 1), static_cast<Colour>((ci + 1) % 3 + 1)};
      c = options[rng.uniform_below(2)];
      type = VertexType::b(label == CaseLabel::A2b, ci, c);
      s.bc.push_back(v);
      break;
    }
    case CaseLabel::B1: {
      const auto cpair = reference_pair(s);
      c = third_colour(cpair[0], cpair[1]);
      type = VertexType::b(true, cp, c);
      break;
    }
    case CaseLabel::B2a: {
      const auto cpair = reference_pair(s);
      c = third_colour(cpair[0], cpair[1]);
      type = VertexType::a(false, c);
      add_to_set(v);
      s.pointer = v;
      s.bc.push_back(v);
      break;
    }
    case CaseLabel::B2b:
      c = third_colour(ci, cp);
      type = VertexType::a(true, c);
      add_to_set(i);
      s.pointer = v;
      s.bc.push_back(v);
      break;
    case CaseLabel::B2c: {
      if (reveal.partner != old_pointer + 1) corrupt(s, "B2c partner is not ptr+1");
      const auto cpair = reference_pair(s);
      c = third_colour(cpair[0], cpair[1]);
      type = VertexType::a(true, c);
      add_to_set(v);
      s.pointer = v;
      s.buc.push_back(v);
      break;
    }
    case CaseLabel::B2d:
      if (reveal.partner != old_pointer + 1) corrupt(s, "B2d partner is not ptr+1");
      c = third_colour(ci, cp);
      type = VertexType::a(true, c);
      add_to_set(i);
      add_to_set(v);
      s.pointer = v;
      s.bud.push_back(v);
      break;
  }

  const bool was_a = old_pointer == i;
  s.colouring.set(v, c);
  s.types[v] = static_cast<std::int8_t>(type.index);
  s.current = v;
  ++s.case_counts[static_cast<int>(label)];
  if (reveal.backward) {
    s.back_partner[v] = reveal.partner;
    --s.x_colour[cp - 1];
  } else {
    ++s.x_colour[c - 1];
  }
  if (was_a != s.a_run()) ++s.runs;

  if (s.check_invariants) {
    if (c == ci || (reveal.backward && c == cp)) corrupt(s, "improper colour assigned");
    if (s.pointer < old_pointer || s.pointer > s.current) corrupt(s, "pointer moved illegally");
    const int inc = s.set_size - old_size;
    if (inc < 0 || inc > 2 || (inc == 2 && label != CaseLabel::B2d)) corrupt(s, "illegal growth of S");
    if (!s.a_run()) {
      // Every j in (ptr, current] has a coloured neighbour in [ptr].
      for (VertexId j = s.pointer + 1; j <= s.current; ++j) {
        const bool ok = j == s.pointer + 1 || (s.back_partner[j] != 0 && s.back_partner[j] <= s.pointer);
        if (!ok) corrupt(s, "B-run vertex without a neighbour in [ptr]");
      }
    }
  }
  return {label, c, s.set_size - old_size};
}

RunState run_sudoku(MatchingProcess& process, PartialColouring colouring, VertexId i0, VertexId i1,
                    DeterministicRandomSource& rng) {
  if (!(0 < i0 && i0 < i1 && i1 <= process.n())) throw InvalidInput("need 0 < i0 < i1 <= n");
  RunState s = initial_run_state(process, std::move(colouring), i0);
  while (s.current < i1) apply_step(s, process.reveal_step(), rng);
  return s;
}

bool size_bound_holds(const RunState& s) {
  const long long lhs = 2LL * s.set_size;
  const long long rhs = static_cast<long long>(s.bc.size()) + 2LL * static_cast<long long>(s.buc.size()) +
                        4LL * static_cast<long long>(s.bud.size()) + 2LL * s.i0;
  return lhs <= rhs;
}

}  // namespace cubicsudoku
