#include <gtest/gtest.h>

#include "cubicsudoku/io.hpp"

using namespace cubicsudoku;

TEST(Io, GraphRoundTrip) {
  const auto g = generate_graph(40, 3);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
}

TEST(Io, ColouringAndSetRoundTrip) {
  const std::vector<int> vals = {1, 0, 3, 2};
  const auto c = PartialColouring::from_values(vals);
  EXPECT_EQ(colouring_from_json(colouring_to_json(c)), c);
  const std::vector<VertexId> set = {1, 4, 9};
  EXPECT_EQ(set_from_json(set_to_json(set)), set);
}

TEST(Io, AdjacencyAcceptsBothFormats) {
  const auto g = generate_graph(10, 1);
  const auto a = adjacency_from_json(graph_to_json(g));
  EXPECT_EQ(a.n(), 10);
  EXPECT_EQ(a.edge_count(), 15u);
  const auto p = path_graph(4);
  const auto b = adjacency_from_json(adjacency_to_json(p));
  EXPECT_EQ(b.edges(), p.edges());
}

TEST(Io, RejectsMalformed) {
  EXPECT_THROW(graph_from_json("not json"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"version":"cubic-v1","n":4,"matching":[[1,2]]})"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"version":"cubic-v1","n":4,"matching":[[1,2],[3,3]]})"), InvalidInput);
  EXPECT_THROW(graph_from_json(R"({"version":"cubic-v2","n":4,"matching":[[1,2],[3,4]]})"), InvalidInput);
  EXPECT_THROW(colouring_from_json(R"({"version":"colouring-v1","n":2,"colours":[1,-2]})"), InvalidInput);
  EXPECT_THROW(colouring_from_json(R"({"version":"colouring-v1","n":3,"colours":[1,2]})"), InvalidInput);
  EXPECT_THROW(set_from_json(R"({"version":"set-v1","vertices":["a"]})"), InvalidInput);
  EXPECT_THROW(adjacency_from_json(R"({"version":"adj-v1","n":3,"edges":[[1,1]]})"), InvalidInput);
  EXPECT_THROW(read_file("/nonexistent/file.json"), InvalidInput);
}

TEST(Io, PipelineDocument) {
  PipelineConfig cfg;
  cfg.n = 200;
  cfg.seed = 1;
  const auto doc = pipeline_result_to_json(full_pipeline(cfg));
  EXPECT_NE(doc.find("\"pipeline-v1\""), std::string::npos);
  EXPECT_EQ(doc, pipeline_result_to_json(full_pipeline(cfg)));
}
