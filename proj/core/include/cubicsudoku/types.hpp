#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicsudoku/graph.hpp"

namespace cubicsudoku {

using Colour = std::uint8_t;
inline constexpr Colour kUncoloured = 0;

// The colour in {1,2,3} different from two distinct colours a, b.
constexpr Colour third_colour(Colour a, Colour b) noexcept { return static_cast<Colour>(6 - a - b); }

class PartialColouring {
 public:
  PartialColouring() = default;
  explicit PartialColouring(int n) : colour_(n + 1, kUncoloured) {}
  // values[v - 1] is the colour of v.
  static PartialColouring from_values(std::span<const int> values);

  int n() const noexcept { return colour_.empty() ? 0 : static_cast<int>(colour_.size()) - 1; }
  Colour operator[](VertexId v) const { return colour_[v]; }
  void set(VertexId v, Colour c) { colour_[v] = c; }
  bool coloured(VertexId v) const { return colour_[v] != kUncoloured; }
  int coloured_count() const;
  bool total() const { return coloured_count() == n(); }
  // Keep only the vertices listed; everything else becomes uncoloured.
  PartialColouring restricted_to(std::span<const VertexId> keep) const;
  std::vector<int> values() const { return {colour_.begin() + 1, colour_.end()}; }

  friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

 private:
  std::vector<Colour> colour_;
};

inline constexpr int kNumTypes = 18;

// Canonical order: A_b^(1..3) = 0..2, A_f^(1..3) = 3..5,
// B_b^(12,13,21,23,31,32) = 6..11, B_f in the same order = 12..17.
// B^(lk): own colour k; l is c(p(i)) for B_b and c(i-1) for B_f.
struct VertexType {
  std::uint8_t index = 0;

  static constexpr VertexType a(bool backward, Colour k) {
    return {static_cast<std::uint8_t>((backward ? 0 : 3) + k - 1)};
  }
  static constexpr VertexType b(bool backward, Colour l, Colour k) {
    const int pair = (l - 1) * 2 + (k < l ? k - 1 : k - 2);
    return {static_cast<std::uint8_t>((backward ? 6 : 12) + pair)};
  }

  constexpr bool is_a() const { return index < 6; }
  constexpr bool backward() const { return index < 3 || (index >= 6 && index < 12); }
  constexpr Colour own() const {
    if (index < 6) return static_cast<Colour>(index % 3 + 1);
    const int pair = (index - 6) % 6;
    const int l = pair / 2 + 1;
    const int slot = pair % 2;
    return static_cast<Colour>(slot == 0 ? (l == 1 ? 2 : 1) : (l == 3 ? 2 : 3));
  }
  // l for B types, 0 for A types.
  constexpr Colour prev() const { return index < 6 ? 0 : static_cast<Colour>((index - 6) % 6 / 2 + 1); }

  std::string name() const;
  friend constexpr bool operator==(VertexType, VertexType) = default;
};

enum class CaseLabel : std::uint8_t { A1, A2a, A2b, B1, B2a, B2b, B2c, B2d };
inline constexpr int kNumCases = 8;
std::string_view case_name(CaseLabel c);

}  // namespace cubicsudoku
