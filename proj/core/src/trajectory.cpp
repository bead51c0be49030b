#include "cubicsudoku/trajectory.hpp"

#include <ostream>

namespace cubicsudoku {

bool trajectory_consistent(const TrajectoryRecord& r) {
  const TrajectorySample* prev = nullptr;
  for (const auto& s : r.samples) {
    if (s.x != s.x1 + s.x2 + s.x3) return false;
    if (prev != nullptr && (s.step <= prev->step || s.set_size < prev->set_size || s.bc < prev->bc ||
                            s.buc < prev->buc || s.bud < prev->bud))
      return false;
    prev = &s;
  }
  return true;
}

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& r) {
  os << "step,X,X1,X2,X3,S_size,bc,buc,bud\n";
  for (const auto& s : r.samples)
    os << s.step << ',' << s.x << ',' << s.x1 << ',' << s.x2 << ',' << s.x3 << ',' << s.set_size << ','
       << s.bc << ',' << s.buc << ',' << s.bud << '\n';
}

}  // namespace cubicsudoku
