#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubicsudoku/matching_process.hpp"
#include "cubicsudoku/rng.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

struct RunState {
  int n = 0;
  VertexId i0 = 0;
  VertexId current = 0;
  VertexId pointer = 0;
  PartialColouring colouring;
  std::vector<VertexId> back_partner;  // p(v) if v's edge was revealed backward, else 0
  std::vector<std::uint8_t> in_set;
  int set_size = 0;
  std::vector<VertexId> bc;   // conventionally bad
  std::vector<VertexId> buc;  // unconventionally bad, case B2c
  std::vector<VertexId> bud;  // unconventionally bad, case B2d
  std::vector<std::int8_t> types;  // VertexType index, -1 when untyped
  std::array<long long, 3> x_colour{};
  std::array<long long, kNumCases> case_counts{};
  int runs = 1;  // runs started so far; the first is type A
  bool check_invariants = true;

  bool a_run() const noexcept { return pointer == current; }
  std::optional<VertexType> type_of(VertexId v) const {
    if (types[v] < 0) return std::nullopt;
    return VertexType{static_cast<std::uint8_t>(types[v])};
  }
  std::vector<VertexId> set_members() const;
};

// State right after burn-in: S0 = [i0], pointer = i0. `process` must be at step i0.
RunState initial_run_state(const MatchingProcess& process, PartialColouring colouring, VertexId i0);

// Reference pair C_{i+1} for a B-run at vertex i = state.current.
std::array<Colour, 2> reference_pair(const RunState& state);

CaseLabel classify_step(const RunState& state, const RevealOutcome& reveal,
                        std::optional<Colour> revealed_partner_colour);
CaseLabel classify_step(const RunState& state, const RevealOutcome& reveal);

struct StepRecord {
  CaseLabel label;
  Colour colour;
  int set_increment;
};

// Colours vertex current+1 and updates pointer, S, ledgers, types and X_k.
StepRecord apply_step(RunState& state, const RevealOutcome& reveal, DeterministicRandomSource& rng);

// Processes vertices i0+1..i1.
RunState run_sudoku(MatchingProcess& process, PartialColouring colouring, VertexId i0, VertexId i1,
                    DeterministicRandomSource& rng);

// |S(i1)| <= |B_C|/2 + |B_U^c| + 2|B_U^d| + |S0|, checked in integers.
bool size_bound_holds(const RunState& state);

}  // namespace cubicsudoku
