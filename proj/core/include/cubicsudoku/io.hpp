#pragma once

#include <span>
#include <string>
#include <vector>

#include "cubicsudoku/graph.hpp"
#include "cubicsudoku/pipeline.hpp"
#include "cubicsudoku/types.hpp"

namespace cubicsudoku {

// {"version":"cubic-v1","n":..,"matching":[[a,b],...]}
std::string graph_to_json(const CubicMultigraph& g);
CubicMultigraph graph_from_json(const std::string& text);

// {"version":"colouring-v1","n":..,"colours":[...]} with 0 for uncoloured
std::string colouring_to_json(const PartialColouring& c);
PartialColouring colouring_from_json(const std::string& text);

// {"version":"set-v1","vertices":[...]}
std::string set_to_json(std::span<const VertexId> set);
std::vector<VertexId> set_from_json(const std::string& text);

// Accepts adj-v1 {"version":"adj-v1","n":..,"edges":[[a,b],...]} and cubic-v1.
AdjacencyGraph adjacency_from_json(const std::string& text);
std::string adjacency_to_json(const AdjacencyGraph& g);

// {"version":"pipeline-v1", config, summary, graph, colouring, set}
std::string pipeline_result_to_json(const PipelineResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cubicsudoku
