#pragma once

#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

struct MinSudokuResult {
  int size = 0;
  std::vector<VertexId> set;
  PartialColouring colouring;  // colours on `set` only
};

// Smallest S with a partial k-colouring of G[S] that extends uniquely.
// Colourings of S are enumerated up to colour permutation. Throws if n > max_vertices
// or G is not k-colourable.
MinSudokuResult min_sudoku_exact(const AdjacencyGraph& g, int k, int max_vertices = 14);

// Independence number by branch and bound. Throws if n > max_vertices (at most 64).
int max_independent_exact(const AdjacencyGraph& g, int max_vertices = 40);

}  // namespace cubicsudoku
