#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "zhdd/dot.hpp"
#include "zhdd/json_io.hpp"
#include "zhdd/random_sqmdd.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/translator.hpp"

using namespace zhdd;
using namespace zhdd::testing;

TEST(Json, SqmddRoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const Sqmdd d = renumber(random_sqmdd(rng));
    const Sqmdd back = sqmdd_from_json(sqmdd_to_json(d));
    EXPECT_EQ(back.height, d.height);
    EXPECT_EQ(back.root, d.root);
    EXPECT_EQ(back.scalar, d.scalar);
    ASSERT_EQ(back.nodes.size(), d.nodes.size());
    for (const auto& [id, n] : d.nodes) {
      const SqmddNode& m = back.node(id);
      EXPECT_EQ(m.height, n.height);
      EXPECT_EQ(m.child0, n.child0);
      EXPECT_EQ(m.child1, n.child1);
      EXPECT_EQ(m.w0, n.w0);
      EXPECT_EQ(m.w1, n.w1);
    }
  }
}

TEST(Json, SqmddSchema) {
  const Json j = sqmdd_to_json(single_node(1.0, {0.0, 2.0}, 3.0));
  EXPECT_EQ(j.at("height"), 1);
  EXPECT_EQ(j.at("root"), 1);
  EXPECT_EQ(j.at("scalar"), Json::parse("[3.0, 0.0]"));
  EXPECT_EQ(j.at("nodes")[0].at("c0"), "t");
  EXPECT_EQ(j.at("nodes")[0].at("w1"), Json::parse("[0.0, 2.0]"));
  EXPECT_EQ(sqmdd_to_json(Sqmdd::terminal(1.0, 2)).at("root"), "t");
}

TEST(Json, TermRoundTripKeepsSemantics) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const ZhTerm t = sqmdd_to_zh(random_sqmdd(rng));
    const ZhTerm back = term_from_json(Json::parse(term_to_json(t).dump()));
    EXPECT_EQ(term_to_json(back), term_to_json(t));
    EXPECT_LT(max_deviation(interpret_zh(back), interpret_zh(t)), 1e-12);
  }
}

TEST(Json, TermSchema) {
  const Json j = Json::parse(R"({"kind":"seq","children":[
      {"kind":"z_spider","params":{"inputs":0,"outputs":1}},
      {"kind":"h_box","params":{"inputs":1,"outputs":1,"label":[0.5,0]}}]})");
  const ZhTerm t = term_from_json(j);
  EXPECT_TRUE(vectors_equal(as_vector(interpret_zh(t)), DenseVector{2.0, 1.5}));
  EXPECT_EQ(detect_document(j), DocumentKind::Term);
}

TEST(Json, DocumentKinds) {
  EXPECT_EQ(detect_document(Json::parse("[[1,0],[0,0]]")), DocumentKind::Vector);
  EXPECT_EQ(detect_document(Json::parse("[[[1,0]],[[0,0]]]")), DocumentKind::Matrix);
  EXPECT_EQ(detect_document(sqmdd_to_json(single_node(1.0, 1.0))), DocumentKind::Sqmdd);
}

TEST(Json, VectorAndMatrixRoundTrip) {
  const DenseVector v = worked_example_vector();
  EXPECT_EQ(vector_from_json(vector_to_json(v)), v);
  const DenseMatrix m = interpret_zh(make_term(Generator::gadget()));
  EXPECT_TRUE(matrices_equal(matrix_from_json(matrix_to_json(m)), m));
}

TEST(Json, MalformedInputs) {
  EXPECT_THROW(term_from_json(Json::parse(R"({"kind":"nope"})")), ParseError);
  EXPECT_THROW(term_from_json(Json::parse(R"({"kind":"z_spider","params":{"inputs":1}})")), ParseError);
  EXPECT_THROW(term_from_json(Json::parse(R"({"kind":"seq","children":[
      {"kind":"z_spider","params":{"inputs":0,"outputs":2}},
      {"kind":"z_spider","params":{"inputs":1,"outputs":0}}]})")),
               ParseError);
  EXPECT_THROW(sqmdd_from_json(Json::parse(R"({"scalar":[1,0],"height":1,"root":"x","nodes":[]})")), ParseError);
  EXPECT_THROW(amplitude_from_json(Json::parse("[1]")), ParseError);
  EXPECT_THROW(vector_from_json(Json::parse("[[1,0],[0,0],[0,0]]")), ParseError);
}

TEST(Dot, SqmddConventions) {
  const std::string dot = sqmdd_to_dot(canonical_from_vector(DenseVector{1, 0, 0, 2}));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("label=\"2\""), std::string::npos);
  EXPECT_NE(sqmdd_to_dot(Sqmdd::terminal(1.0, 2)).find("H = 2"), std::string::npos);
}

TEST(Dot, Term) {
  const std::string dot = term_to_dot(make_term(Generator::gadget()));
  EXPECT_NE(dot.find("graph"), std::string::npos);
}
