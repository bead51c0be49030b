#pragma once

#include <vector>

#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/type_chain.hpp"

namespace cubicsudoku {

inline constexpr int kMinReplicas = 200;

struct SegmentComparison {
  double max_l1 = 0;
  std::vector<double> l1_by_j;  // j = 0..omega
  VertexType start_type;
  ChainParams params;           // q_k = X_k(i) / (n - i)
  int replicas = 0;
  std::vector<Dist18> empirical;  // rho_hat_j
};

// Runs one pipeline prefix to step i, then `replicas` independent continuations for
// omega steps, and compares the empirical type law at i+j with delta_{V_i} Q^j.
SegmentComparison segment_comparison(const PipelineConfig& base, int step, int omega, int replicas, int jobs = 1);

}  // namespace cubicsudoku
