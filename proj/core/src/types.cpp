#include "cubicsudoku/types.hpp"

#include <algorithm>

namespace cubicsudoku {

PartialColouring PartialColouring::from_values(std::span<const int> values) {
  PartialColouring c(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 255) throw InvalidInput("colour out of range");
    c.colour_[i + 1] = static_cast<Colour>(values[i]);
  }
  return c;
}

int PartialColouring::coloured_count() const {
  if (colour_.empty()) return 0;
  return static_cast<int>(std::count_if(colour_.begin() + 1, colour_.end(),
                                        [](Colour c) { return c != kUncoloured; }));
}

PartialColouring PartialColouring::restricted_to(std::span<const VertexId> keep) const {
  PartialColouring out(n());
  for (VertexId v : keep) out.colour_[v] = colour_[v];
  return out;
}

std::string VertexType::name() const {
  std::string s = is_a() ? "A_" : "B_";
  s += backward() ? "b^" : "f^";
  if (!is_a()) s += static_cast<char>('0' + prev());
  s += static_cast<char>('0' + own());
  return s;
}

std::string_view case_name(CaseLabel c) {
  static constexpr std::string_view names[] = {"A1", "A2a", "A2b", "B1", "B2a", "B2b", "B2c", "B2d"};
  return names[static_cast<int>(c)];
}

}  // namespace cubicsudoku
