#include "cubicsudoku/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cubicsudoku {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* version) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || j["version"] != version)
    throw InvalidInput(std::string("expected version ") + version);
  return j;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad field ") + key + ": " + e.what());
  }
}

json pairs_json(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  json arr = json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

json graph_json(const CubicMultigraph& g) {
  json j;
  j["version"] = "cubic-v1";
  j["n"] = g.n();
  j["matching"] = pairs_json(g.matching_pairs());
  return j;
}

json colouring_json(const PartialColouring& c) {
  json j;
  j["version"] = "colouring-v1";
  j["n"] = c.n();
  j["colours"] = c.values();
  return j;
}

json set_json(std::span<const VertexId> set) {
  json j;
  j["version"] = "set-v1";
  j["vertices"] = std::vector<VertexId>(set.begin(), set.end());
  return j;
}

}  // namespace

std::string graph_to_json(const CubicMultigraph& g) { return graph_json(g).dump() + "\n"; }

CubicMultigraph graph_from_json(const std::string& text) {
  const json j = parse(text, "cubic-v1");
  const auto n = field<int>(j, "n");
  const auto pairs = field<std::vector<std::pair<VertexId, VertexId>>>(j, "matching");
  return CubicMultigraph::from_pairs(n, pairs);
}

std::string colouring_to_json(const PartialColouring& c) { return colouring_json(c).dump() + "\n"; }

PartialColouring colouring_from_json(const std::string& text) {
  const json j = parse(text, "colouring-v1");
  const auto n = field<int>(j, "n");
  const auto colours = field<std::vector<int>>(j, "colours");
  if (static_cast<int>(colours.size()) != n) throw InvalidInput("colours array length differs from n");
  return PartialColouring::from_values(colours);
}

std::string set_to_json(std::span<const VertexId> set) { return set_json(set).dump() + "\n"; }

std::vector<VertexId> set_from_json(const std::string& text) {
  const json j = parse(text, "set-v1");
  return field<std::vector<VertexId>>(j, "vertices");
}

AdjacencyGraph adjacency_from_json(const std::string& text) {
  json probe;
  try {
    probe = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (probe.is_object() && probe.value("version", "") == "cubic-v1")
    return AdjacencyGraph::from_cubic(graph_from_json(text));
  const json j = parse(text, "adj-v1");
  const auto n = field<int>(j, "n");
  const auto edges = field<std::vector<std::pair<VertexId, VertexId>>>(j, "edges");
  return AdjacencyGraph(n, edges);
}

std::string adjacency_to_json(const AdjacencyGraph& g) {
  json j;
  j["version"] = "adj-v1";
  j["n"] = g.n();
  j["edges"] = pairs_json(g.edges());
  return j.dump() + "\n";
}

std::string pipeline_result_to_json(const PipelineResult& r) {
  json j;
  j["version"] = "pipeline-v1";
  j["config"] = {{"n", r.config.n},
                 {"i0", r.config.i0},
                 {"tail", r.config.tail},
                 {"seed", r.config.seed},
                 {"sample_every", r.config.sample_every}};
  json cases = json::object();
  for (int c = 0; c < kNumCases; ++c) cases[std::string(case_name(static_cast<CaseLabel>(c)))] = r.case_counts[c];
  j["summary"] = {{"completed", r.completed},
                  {"completion_mode", completion_mode_name(r.completion_mode)},
                  {"set_size", r.sudoku_set.size()},
                  {"core_set_size", r.core_set_size},
                  {"bc", r.counts.bc},
                  {"buc", r.counts.buc},
                  {"bud", r.counts.bud},
                  {"size_bound_holds", r.size_bound},
                  {"burn_in_discrepancy", r.burn_in.discrepancy},
                  {"x_at_i0", r.x_at_i0},
                  {"runs", r.runs},
                  {"cases", cases}};
  j["graph"] = graph_json(r.graph);
  j["colouring"] = colouring_json(r.colouring);
  j["set"] = set_json(r.sudoku_set);
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
  if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace cubicsudoku
