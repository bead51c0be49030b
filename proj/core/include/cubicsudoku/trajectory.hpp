#pragma once

#include <iosfwd>
#include <vector>

namespace cubicsudoku {

struct TrajectorySample {
  int step = 0;
  long long x = 0;
  long long x1 = 0, x2 = 0, x3 = 0;
  int set_size = 0;
  int bc = 0, buc = 0, bud = 0;
};

struct TrajectoryRecord {
  int n = 0;
  int i0 = 0;
  int i1 = 0;
  std::vector<TrajectorySample> samples;
  std::vector<int> bad_vertices;  // members of B_C, in processing order
};

// X = X1+X2+X3 at every sample, |S| and the ledgers non-decreasing.
bool trajectory_consistent(const TrajectoryRecord& r);

// Header: step,X,X1,X2,X3,S_size,bc,buc,bud
void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& r);

}  // namespace cubicsudoku
