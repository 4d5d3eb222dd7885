#include <gtest/gtest.h>

#include "mwdp/io.hpp"
#include "support.hpp"

namespace mwdp {
namespace {

using io::Json;
using testing::M;
using testing::R;

TEST(IoRational, AcceptedForms) {
  EXPECT_EQ(io::to_rational(Json(3), "x"), R(3));
  EXPECT_EQ(io::to_rational(Json(-3), "x"), R(-3));
  EXPECT_EQ(io::to_rational(Json("7/3"), "x"), R(7, 3));
  EXPECT_EQ(io::to_rational(Json("0.25"), "x"), R(1, 4));
  EXPECT_EQ(io::to_rational(Json(0.1), "x"), R(1, 10));
  EXPECT_EQ(io::to_rational(Json(-2.5), "x"), R(-5, 2));
  EXPECT_EQ(io::to_rational(Json(18446744073709551615ULL), "x"),
            Rational(Integer("18446744073709551615")));
}

TEST(IoRational, Rejects) {
  for (const Json& bad : {Json(nullptr), Json(true), Json::array(), Json("1/0"), Json("abc")}) {
    try {
      io::to_rational(bad, "arcs[3]");
      FAIL() << bad.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse);
      EXPECT_NE(std::string(e.what()).find("arcs[3]"), std::string::npos);
    }
  }
}

TEST(IoRational, Serialization) {
  EXPECT_EQ(io::from_rational(R(4)), Json(4));
  EXPECT_EQ(io::from_rational(R(-1, 2)), Json("-1/2"));
  const Rational big(Integer("123456789012345678901234567890"));
  EXPECT_EQ(io::from_rational(big), Json("123456789012345678901234567890"));
}

TEST(IoInstance, RoundTrip) {
  for (const Instance& inst : {testing::sample_oriented(), testing::sample_symmetric()}) {
    const Json j = io::from_instance(inst);
    const Instance back = io::to_instance(Json::parse(j.dump()));
    EXPECT_EQ(io::from_instance(back).dump(), j.dump());
    EXPECT_EQ(back.kind(), inst.kind());
  }
  testing::Gen gen(3);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = gen.instance(6, Kind::General, 2, [&] { return gen.any_matrix(); });
    const Json j = io::from_instance(inst);
    EXPECT_EQ(io::from_instance(io::to_instance(j)), j);
  }
}

TEST(IoInstance, KeepsDeclarationOrder) {
  const Json j = Json::parse(R"({"kind":"general","matrices":{"Z":[[1,0],[0,1]],"A":[[0,0],[0,0]]},
    "vertices":["q","b"],"arcs":[{"tail":"q","head":"b","matrix":"A"}]})");
  const Instance inst = io::to_instance(j);
  EXPECT_EQ(inst.family()[0].first, "Z");
  EXPECT_EQ(inst.vertex(0), "q");
  EXPECT_EQ(inst.arcs()[0].cost, R(1));
  EXPECT_NE(io::from_instance(inst).dump().find(R"("matrices":{"Z")"), std::string::npos);
}

TEST(IoInstance, Errors) {
  auto code_of = [](const char* text) {
    try {
      io::to_instance(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of(R"({"kind":"weird","matrices":{},"vertices":[],"arcs":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code_of(R"({"matrices":{"M":[[1,2]]},"vertices":[],"arcs":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code_of(R"({"matrices":{"M":[[1,0],[0,1]]},"vertices":["a"]})"), ErrorCode::Parse);
  EXPECT_EQ(code_of(R"({"matrices":{"M":[[1,0],[0,1]]},"vertices":["a","a"],"arcs":[]})"),
            ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of(R"({"matrices":{"M":[[1,0],[0,1]]},"vertices":["a","b"],
                        "arcs":[{"tail":"a","head":"b","matrix":"N"}]})"),
            ErrorCode::UnknownMatrix);
  EXPECT_EQ(code_of(R"({"matrices":{"M":[[1,0],[0,1]]},"vertices":["a","b"],
                        "arcs":[{"tail":"a","head":"b","c":"-1","matrix":"M"}]})"),
            ErrorCode::NegativeCost);
}

TEST(IoGraphs, Parse) {
  const Graph g = io::to_graph(Json::parse(R"({"vertices":["a","b"],"edges":[["a","b"]]})"));
  EXPECT_EQ(g.edges.size(), 1U);
  EXPECT_THROW(io::to_graph(Json::parse(R"({"vertices":["a"],"edges":[["a","a"]]})")), Error);

  const Hypergraph3 h = io::to_hypergraph(
      Json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b","c"]]})"));
  EXPECT_EQ(io::from_hypergraph(h), Json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b","c"]]})"));
  try {
    io::to_hypergraph(Json::parse(R"({"vertices":["a","b"],"edges":[["a","b"]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadHyperedge);
  }

  const WeightedDigraph d = io::to_digraph(Json::parse(
      R"({"vertices":["a","b"],"arcs":[{"tail":"a","head":"b","w":"3/2"},{"tail":"b","head":"a"}]})"));
  EXPECT_EQ(d.arcs[0].w, R(3, 2));
  EXPECT_EQ(d.arcs[1].w, R(1));

  const ColoredGraph c = io::to_colored_graph(Json::parse(
      R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","color":2,"w":0.5}]})"));
  EXPECT_EQ(c.edges[0].color, 2);
  EXPECT_EQ(c.edges[0].w, R(1, 2));
  try {
    io::to_colored_graph(
        Json::parse(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","color":3}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadColor);
  }
}

TEST(IoGame, Parse) {
  const PolymatrixGame g = io::to_game(Json::parse(R"({"players":["p","q"],"edges":[["p","q"]],
    "payoffs":{"p->q":[[1,0],[0,1]],"q->p":[[2,0],[0,2]]},"importance":{"q-p":"1/3"}})"));
  EXPECT_EQ(g.payoffs.at({"q", "p"}), M(2, 0, 0, 2));
  EXPECT_EQ(g.importance.at({"p", "q"}), R(1, 3));

  try {
    io::to_game(Json::parse(R"({"players":["p","q"],"edges":[["p","q"]],
      "payoffs":{"p->q":[[1,0],[0,1]]}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMatrix);
  }
  try {
    io::to_game(Json::parse(R"({"players":["p","q","r"],"edges":[["p","q"]],
      "payoffs":{"p->q":[[1,0],[0,1]],"q->p":[[1,0],[0,1]]},"importance":{"p-r":1}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVertex);
  }
}

TEST(IoMatrix, CommandLineText) {
  EXPECT_EQ(io::parse_matrix("[[0,1],[1,0]]", "--m"), M(0, 1, 1, 0));
  EXPECT_EQ(io::parse_matrix(R"([["1/2",0],[0,1]])", "--m").m11, R(1, 2));
  EXPECT_THROW(io::parse_matrix("[[0,1]", "--m"), Error);
}

TEST(IoFiles, MissingFile) {
  try {
    io::read_file("/nonexistent/instance.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("file not found"), std::string::npos);
  }
}

}  // namespace
}  // namespace mwdp
