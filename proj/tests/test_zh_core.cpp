#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/random_sqmdd.hpp"
#include "zhdd/tensor_network.hpp"
#include "zhdd/zh_term.hpp"

using namespace zhdd;
using namespace zhdd::testing;

namespace {

ZhTerm T(const Generator& g) { return make_term(g); }

DenseMatrix mat(std::size_t rows, std::size_t cols, std::vector<Amplitude> e) {
  return DenseMatrix(rows, cols, std::move(e));
}

}  // namespace

TEST(Generators, ArityBookkeeping) {
  const ZhTerm t = T(Generator::z_spider(1, 2));
  EXPECT_EQ(t.inputs(), 1U);
  EXPECT_EQ(t.outputs(), 2U);
  EXPECT_EQ(T(Generator::cap()).inputs(), 0U);
  EXPECT_EQ(T(Generator::cap()).outputs(), 2U);
  EXPECT_EQ(T(Generator::gadget()).inputs(), 2U);
  EXPECT_EQ(T(Generator::gadget()).outputs(), 2U);
  EXPECT_EQ(T(Generator::weight(2.0)).outputs(), 1U);
  EXPECT_EQ(T(Generator::monoid(4)).inputs(), 4U);
  EXPECT_EQ(T(Generator::monoid(4)).outputs(), 1U);
}

TEST(Generators, RejectsBadParameters) {
  EXPECT_THROW(Generator::monoid(0), ConstructionError);
  EXPECT_THROW(Generator::h_box(1, 1, {std::nan(""), 0.0}), ConstructionError);
  EXPECT_THROW(Generator::weight({INFINITY, 0.0}), ConstructionError);
}

TEST(Generators, HBoxMatrixHasLabelInCorner) {
  const Amplitude r{0.3, -1.2};
  EXPECT_TRUE(matrices_equal(interpret_zh(T(Generator::h_box(1, 1, r))), mat(2, 2, {1, 1, 1, r})));
}

TEST(Generators, CapIsBellState) {
  EXPECT_TRUE(matrices_equal(interpret_zh(T(Generator::cap())), DenseMatrix::column({1, 0, 0, 1})));
}

TEST(Composition, ArityMismatchIsRejected) {
  EXPECT_THROW(seq(T(Generator::z_spider(0, 2)), T(Generator::z_spider(1, 0))), ConstructionError);
}

TEST(Composition, CapThenCupIsTwo) {
  const ZhTerm t = seq(T(Generator::cap()), T(Generator::cup()));
  EXPECT_EQ(t.inputs(), 0U);
  EXPECT_EQ(t.outputs(), 0U);
  EXPECT_TRUE(matrices_equal(interpret_zh(t), mat(1, 1, {2.0})));
}

TEST(Composition, IdentitiesCompose) {
  const ZhTerm id = T(Generator::identity());
  EXPECT_TRUE(matrices_equal(interpret_zh(par(id, id)), DenseMatrix::identity(4)));
  EXPECT_TRUE(matrices_equal(interpret_zh(seq(id, id)), DenseMatrix::identity(2)));
}

TEST(Sugar, SingleInputMonoidIsIdentity) {
  const ZhTerm e = expand_sugar(T(Generator::monoid(1)));
  EXPECT_TRUE(e.is_sugar_free());
  EXPECT_TRUE(matrices_equal(interpret_zh(e), DenseMatrix::identity(2)));
}

TEST(Sugar, GadgetMatchesStatedMatrix) {
  const ZhTerm e = expand_sugar(T(Generator::gadget()));
  EXPECT_TRUE(e.is_sugar_free());
  const DenseMatrix want = mat(4, 4, {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(matrices_equal(interpret_zh(e), want));
}

TEST(Sugar, WeightBoxIsDiagonal) {
  const Amplitude w{-0.5, 2.0};
  const ZhTerm e = expand_sugar(T(Generator::weight(w)));
  EXPECT_TRUE(e.is_sugar_free());
  EXPECT_TRUE(matrices_equal(interpret_zh(e), mat(2, 2, {1, 0, 0, w})));
}

TEST(Sugar, MonoidMatrix) {
  const ZhTerm e = expand_sugar(T(Generator::monoid(2)));
  EXPECT_TRUE(matrices_equal(interpret_zh(e), mat(2, 4, {1, 0, 0, 0, 0, 1, 1, 0})));
}

TEST(Sugar, BasisStates) {
  EXPECT_TRUE(matrices_equal(interpret_zh(expand_sugar(T(Generator::ket_zero()))), DenseMatrix::column({1, 0})));
  EXPECT_TRUE(matrices_equal(interpret_zh(expand_sugar(T(Generator::ket_one()))), DenseMatrix::column({0, 1})));
  EXPECT_TRUE(matrices_equal(interpret_zh(expand_sugar(T(Generator::ket_plus()))), DenseMatrix::column({1, 1})));
  EXPECT_TRUE(matrices_equal(interpret_zh(expand_sugar(T(Generator::bra_plus()))), mat(1, 2, {1, 1})));
}

TEST(StateForm, IdentityBendsToCap) {
  const ZhTerm s = to_state_form(T(Generator::identity()));
  EXPECT_EQ(s.inputs(), 0U);
  EXPECT_TRUE(matrices_equal(interpret_zh(s), DenseMatrix::column({1, 0, 0, 1})));
}

TEST(StateForm, RoundTripRestoresHadamard) {
  const ZhTerm h = T(Generator::h_box(1, 1));
  EXPECT_TRUE(matrices_equal(interpret_zh(from_state_form(to_state_form(h), 1)), mat(2, 2, {1, 1, 1, -1})));
}

TEST(StateForm, StatesAreUnchanged) {
  const ZhTerm s = T(Generator::h_box(0, 2, {0.5, 0.5}));
  EXPECT_TRUE(matrices_equal(interpret_zh(to_state_form(s)), interpret_zh(s)));
}

TEST(StateForm, RandomRoundTrips) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    RandomTermOptions opts;
    opts.max_boundary = 6;
    opts.max_generators = 6;
    const ZhTerm t = random_zh_term(rng, opts);
    const ZhTerm back = from_state_form(to_state_form(t), t.inputs());
    EXPECT_LT(max_deviation(interpret_zh(back), interpret_zh(t)), 1e-9);
  }
}

TEST(Network, CupAloneBecomesContractedCap) {
  const TensorNetwork net = flatten_to_network(T(Generator::cup()));
  net.check();
  // The two inputs are bent into a Bell state and the cup becomes a contraction.
  EXPECT_TRUE(vectors_equal(contract_network_dense(net), as_vector(interpret_zh(to_state_form(T(Generator::cup()))))));
}

TEST(Network, SpiderBendsItsInput) {
  const TensorNetwork net = flatten_to_network(T(Generator::z_spider(1, 2)));
  ASSERT_EQ(net.instances.size(), 1U);
  EXPECT_EQ(net.instances[0].legs, 3U);
  ASSERT_EQ(net.bent.size(), 3U);
  EXPECT_EQ(std::count(net.bent.begin(), net.bent.end(), true), 1);
}

TEST(Network, TwoInstancesOneEdge) {
  const Amplitude r{0.7, 0.1};
  const ZhTerm t = seq(T(Generator::z_spider(0, 1)), T(Generator::h_box(1, 1, r)));
  const TensorNetwork net = flatten_to_network(t);
  EXPECT_EQ(net.instances.size(), 2U);
  EXPECT_EQ(net.internal_edges.size(), 1U);
  EXPECT_TRUE(vectors_equal(contract_network_dense(net), DenseVector{2.0, 1.0 + r}));
  EXPECT_TRUE(vectors_equal(contract_network_dense(net), as_vector(interpret_zh(t))));
}

TEST(Network, RequiresSugarFreeInput) {
  EXPECT_THROW(flatten_to_network(T(Generator::gadget())), ShapeError);
}
