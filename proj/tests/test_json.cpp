#include <gtest/gtest.h>

#include "helly/json_io.hpp"
#include "support.hpp"

using namespace helly;
using helly::io::Json;

TEST(Json, PolyhedronRoundTrip) {
  auto text = R"({"n": 2, "inequalities": [{"a": ["2/4", 1], "b": "-6/4"}, {"a": ["-1", "0"], "b": "3"}]})";
  auto P = io::parse_polyhedron(text);
  EXPECT_EQ(P.size(), 2u);
  EXPECT_EQ(P[0].normal()[0], Rational(1, 2));
  EXPECT_EQ(P[0].rhs(), Rational(-3, 2));
  auto canonical = io::emit_polyhedron(P);
  EXPECT_EQ(canonical, R"({"n": 2, "inequalities": [{"a": ["1/2", "1"], "b": "-3/2"}, {"a": ["-1", "0"], "b": "3"}]})");
  EXPECT_EQ(io::emit_polyhedron(io::parse_polyhedron(canonical)), canonical);
  EXPECT_EQ(io::parse_polyhedron(io::polyhedron_json(P).dump()).rows(), P.rows());
}

TEST(Json, RandomPolyhedraAreFixedPoints) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto P = oracle::random_bounded(rng, static_cast<std::size_t>(rng.uniform(1, 4)),
                                    static_cast<std::size_t>(rng.uniform(0, 4)), 5);
    auto once = io::emit_polyhedron(P);
    EXPECT_EQ(io::emit_polyhedron(io::parse_polyhedron(once)), once);
  }
}

TEST(Json, SyntaxErrorsNameByteOffset) {
  try {
    io::parse_polyhedron(R"({"n": 2, "inequalities": [}")");
    FAIL() << "expected a parse error";
  } catch (const io::ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("byte offset 27"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_polyhedron(""), io::ParseError);
}

TEST(Json, SchemaErrorsNamePointer) {
  auto expect_at = [](const char *text, const char *where) {
    try {
      io::parse_polyhedron(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const io::ParseError &e) {
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  };
  expect_at(R"({"inequalities": []})", "missing field \"n\"");
  expect_at(R"({"n": 0, "inequalities": []})", "/n");
  expect_at(R"({"n": 2, "inequalities": [{"a": ["1"], "b": "1"}]})", "/inequalities/0/a");
  expect_at(R"({"n": 1, "inequalities": [{"a": ["1/0"], "b": "1"}]})", "/inequalities/0/a/0");
  expect_at(R"({"n": 1, "inequalities": [{"a": ["0"], "b": "1"}]})", "/inequalities/0");
  expect_at(R"({"n": 1, "inequalities": [{"a": [1.5], "b": "1"}]})", "/inequalities/0/a/0");
  expect_at(R"({"n": 1, "inequalities": [{"a": ["1"]}]})", "missing field \"b\"");
}

TEST(Json, IlpRoundTrip) {
  auto text = R"({"n": 2, "c": [1, "1"], "u": 2, "rows": [{"a": ["-1/2", "-1/2"], "b": "-3/2"}]})";
  auto inst = io::parse_ilp(text);
  EXPECT_EQ(inst.upper(), 2);
  // Rows are scaled to integers on ingestion.
  EXPECT_EQ(inst.rows()[0].normal()[0], Rational(-1));
  EXPECT_EQ(inst.rows()[0].rhs(), Rational(-3));
  auto once = io::ilp_json(inst).dump();
  EXPECT_EQ(io::ilp_json(io::parse_ilp(once)).dump(), once);
  EXPECT_THROW(io::parse_ilp(R"({"n": 1, "c": [1], "u": 0, "rows": []})"), io::ParseError);
  EXPECT_THROW(io::parse_ilp(R"({"n": 1, "c": ["x"], "u": 1, "rows": []})"), io::ParseError);
}

TEST(Json, PointsAndIntegers) {
  EXPECT_EQ(io::parse_points("[[1, -2], [0, 3]]"), (std::vector<IntPoint>{{1, -2}, {0, 3}}));
  EXPECT_THROW(io::parse_points("[[1, \"2\"]]"), io::ParseError);
  EXPECT_EQ(io::integer_json(Integer(-5)).dump(), "-5");
  Integer big("123456789012345678901234567890");
  EXPECT_EQ(io::integer_json(big).dump(), "\"123456789012345678901234567890\"");
  EXPECT_EQ(io::points_json({{1, 2}}).dump(), "[[1,2]]");
}
