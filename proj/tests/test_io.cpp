#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "whg/error.hpp"
#include "whg/io.hpp"

namespace whg {
namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    validate(parse_hypergraph(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::InvalidOrder;
}

TEST(Io, ParsesJson) {
  const auto g = validate(parse_hypergraph(
      R"({"format":"whg-1","k":3,"n":5,"edges":[{"v":[0,1,2],"w":1.0},{"v":[2,3,4],"w":2.0}]})"));
  EXPECT_EQ(stats(g).vertex_weights, stats(test::p2()).vertex_weights);
}

TEST(Io, ParsesPlainText) {
  const auto g = validate(parse_hypergraph("# a path\n3 5 2\n0 1 2 1.0\n\n2 3 4 2  # heavy\n"));
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.weight(1), 2.0);
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(parse_code(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"format":"whg-2","k":3,"n":3,"edges":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"format":"whg-1","k":3.5,"n":3,"edges":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"format":"whg-1","k":3,"n":3,"edges":[{"v":[0,1,2]}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"format":"whg-1","k":3,"n":3,"edges":[{"v":[0,1,"x"],"w":1}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_code("3 3 2\n0 1 2 1.0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("3 3\n0 1 2 1.0\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("3 3 1\n0 1 2 abc\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("3 3 1\n0 1x 2 1\n"), ErrorCode::ParseError);
}

TEST(Io, ValidationErrorsSurviveParsing) {
  EXPECT_EQ(parse_code("3 3 1\n0 1 1 1.0\n"), ErrorCode::RepeatedVertexInEdge);
  EXPECT_EQ(parse_code("3 3 1\n0 1 2 -1\n"), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(parse_code("3 4 1\n0 1 2 1\n"), ErrorCode::IsolatedVertex);
  EXPECT_EQ(parse_code("3 3 1\n0 1 2 3 1\n"), ErrorCode::NonUniformEdge);
}

TEST(Io, JsonRoundTrip) {
  for (const auto& g : test::small_corpus()) {
    const auto text = to_whg_json(g).dump();
    const auto back = validate(parse_hypergraph(text));
    ASSERT_EQ(back.num_edges(), g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_TRUE(std::ranges::equal(back.edge(e), g.edge(e)));
      EXPECT_EQ(back.weight(e), g.weight(e));
    }
    EXPECT_EQ(to_whg_json(back).dump(), text);
  }
}

TEST(Io, PlainTextRoundTrip) {
  for (const auto& g : test::small_corpus()) {
    const auto back = validate(parse_hypergraph(to_plain_text(g)));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_TRUE(std::ranges::equal(back.edge(e), g.edge(e)));
      EXPECT_EQ(back.weight(e), g.weight(e));
    }
  }
}

TEST(Io, LoadFile) {
  const auto g = load_hypergraph(std::filesystem::path(WHG_DATA_DIR) / "c4.json");
  EXPECT_EQ(g.num_edges(), 4u);
  const auto t = load_hypergraph(std::filesystem::path(WHG_DATA_DIR) / "p2.txt");
  EXPECT_EQ(stats(t).alpha, 3.0);
  EXPECT_THROW(load_hypergraph("/nonexistent/file.json"), Error);
}

TEST(Io, DenseTensorJsonListsNonzeros) {
  const auto j = to_json(materialize(test::e1(), TensorKind::Adjacency));
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["n"], 3);
  ASSERT_EQ(j["entries"].size(), 6u);
  EXPECT_EQ(j["entries"][0]["idx"], nlohmann::json({0, 1, 2}));
  EXPECT_EQ(j["entries"][0]["val"], 1.0);
}

TEST(Io, EigenpairJson) {
  const auto j = to_json(known_eigenpairs(test::e1(), TensorKind::Laplacian));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["class"], "H++");
  EXPECT_EQ(j[1]["class"], "H+");
  EXPECT_EQ(j[0]["lambda"], 0.0);
  EXPECT_TRUE(j[0].contains("residual"));
}

TEST(Io, BoundReportJsonFields) {
  const auto j = to_json(bound_report(test::p2()));
  EXPECT_EQ(j["all_hold"], true);
  for (const auto& e : j["entries"]) {
    for (const char* key : {"theorem_id", "bound", "measured", "verdict", "slack"}) {
      EXPECT_TRUE(e.contains(key)) << key;
    }
  }
}

TEST(Io, GeneratorSpecRoundTrip) {
  GeneratorSpec spec;
  spec.family = Family::RandomConnected;
  spec.k = 4;
  spec.n = 9;
  spec.m = 6;
  spec.weights = WeightScheme::range(0.5, 1.5);
  spec.seed = 42;
  const auto back = generator_spec_from_json(nlohmann::json::parse(to_json(spec).dump()));
  EXPECT_EQ(to_json(back), to_json(spec));
  EXPECT_THROW(generator_spec_from_json(nlohmann::json::parse(R"({"family":"complete"})")),
               Error);
  EXPECT_THROW(generator_spec_from_json(nlohmann::json::parse(
                   R"({"family":"complete","k":3,"weights":{"scheme":"gauss"}})")),
               Error);
}

}  // namespace
}  // namespace whg
