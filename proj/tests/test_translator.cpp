#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "support.hpp"
#include "zhdd/random_sqmdd.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/translator.hpp"

using namespace zhdd;
using namespace zhdd::testing;

namespace {

ZhTerm T(const Generator& g) { return make_term(g); }

DenseVector state_of(const ZhTerm& t) { return as_vector(interpret_zh(t)); }

ZhTerm monoids_to_x(const ZhTerm& t) {
  if (t.op() == ZhTerm::Op::Seq) return seq(monoids_to_x(t.first()), monoids_to_x(t.second()));
  if (t.op() == ZhTerm::Op::Par) return par(monoids_to_x(t.first()), monoids_to_x(t.second()));
  const Generator& g = t.gen();
  return g.kind == GeneratorKind::Monoid ? T(Generator::x_spider(g.inputs, 1)) : t;
}

}  // namespace

TEST(ToZh, TerminalOnlyIsPlusState) {
  EXPECT_TRUE(vectors_equal(state_of(sqmdd_to_zh(Sqmdd::terminal(1.0, 1))), DenseVector{1, 1}));
}

TEST(ToZh, SingleNode) {
  const Amplitude a{0.2, -1.0};
  const Amplitude b{3.0, 0.5};
  EXPECT_TRUE(vectors_equal(state_of(sqmdd_to_zh(single_node(a, b))), DenseVector{a, b}));
}

TEST(ToZh, WorkedExample) {
  const ZhTerm t = sqmdd_to_zh(canonical_from_vector(worked_example_vector()));
  EXPECT_EQ(t.inputs(), 0U);
  EXPECT_EQ(t.outputs(), 4U);
  EXPECT_LT(max_deviation(state_of(t), worked_example_vector()), 1e-9);
}

TEST(ToZh, RandomDiagrams) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Sqmdd d = random_sqmdd(rng);
    EXPECT_LT(max_deviation(state_of(sqmdd_to_zh(d)), interpret_sqmdd(d)), 1e-9);
  }
}

TEST(Propagate, BasisStateOnTopOutput) {
  const Amplitude a{0.5, 0.5};
  const Amplitude b{-1.0, 2.0};
  const Amplitude s{2.0, 0.0};
  const ZhTerm t = sqmdd_to_zh(single_node(a, b, s));
  for (int bit : {0, 1}) {
    const Propagation p = ket0_propagate(plug_top_output(t, bit));
    EXPECT_FALSE(p.trace.empty());
    const Sqmdd back = sqmdd_read_back(p.term);
    EXPECT_TRUE(iso_equal(reduce(back).diagram, Sqmdd::terminal(s * (bit == 0 ? a : b), 0)));
  }
}

TEST(Propagate, MatchesCofactors) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Sqmdd d = random_sqmdd(rng);
    const ZhTerm t = sqmdd_to_zh(d);
    const Propagation l = ket0_propagate(plug_top_output(t, 0));
    const Propagation r = ket0_propagate(plug_top_output(t, 1));
    EXPECT_LT(max_deviation(state_of(l.term), interpret_sqmdd(left_cofactor(d))), 1e-9);
    EXPECT_LT(max_deviation(state_of(r.term), interpret_sqmdd(right_cofactor(d))), 1e-9);
  }
}

TEST(Propagate, KetZeroThroughUnitWeight) {
  const ZhTerm t = seq(T(Generator::ket_zero()), T(Generator::weight(1.0)));
  EXPECT_TRUE(vectors_equal(state_of(ket0_propagate(t).term), DenseVector{1, 0}));
}

TEST(GeneratorStates, ClosedForms) {
  EXPECT_TRUE(iso_equal(generator_state_sqmdd(GeneratorKind::ZSpider, 2), canonical_from_vector(DenseVector{1, 0, 0, 1})));
  const Amplitude r{-0.4, 1.1};
  EXPECT_TRUE(iso_equal(generator_state_sqmdd(GeneratorKind::HBox, 1, r), canonical_from_vector(DenseVector{1, r})));
  EXPECT_TRUE(iso_equal(generator_state_sqmdd(GeneratorKind::HBox, 0, r), Sqmdd::terminal(r, 0)));
  for (std::size_t k = 0; k <= 5; ++k) {
    const DenseVector z = state_of(T(Generator::z_spider(0, k)));
    const DenseVector h = state_of(T(Generator::h_box(0, k, r)));
    EXPECT_TRUE(iso_equal(generator_state_sqmdd(GeneratorKind::ZSpider, k), canonical_from_vector(z)));
    EXPECT_TRUE(iso_equal(generator_state_sqmdd(GeneratorKind::HBox, k, r), canonical_from_vector(h)));
  }
}

TEST(ToSqmdd, Examples) {
  EXPECT_TRUE(iso_equal(zh_to_sqmdd(T(Generator::cap())), canonical_from_vector(DenseVector{1, 0, 0, 1})));
  EXPECT_TRUE(iso_equal(zh_to_sqmdd(T(Generator::z_spider(0, 3))),
                        canonical_from_vector(DenseVector{1, 0, 0, 0, 0, 0, 0, 1})));
  const Amplitude r{0.25, -3.0};
  const ZhTerm scalar = seq(T(Generator::z_spider(0, 1)), T(Generator::h_box(1, 0, r)));
  EXPECT_TRUE(iso_equal(zh_to_sqmdd(scalar), Sqmdd::terminal(1.0 + r, 0)));
}

TEST(ToSqmdd, MapsUseTheirStateForm) {
  const ZhTerm cnotish = T(Generator::gadget());
  const Sqmdd d = zh_to_sqmdd(cnotish);
  EXPECT_EQ(d.height, 4U);
  EXPECT_LT(max_deviation(interpret_sqmdd(d), state_of(to_state_form(cnotish))), 1e-9);
}

TEST(ToSqmdd, RandomTermsWithStageChecks) {
  std::mt19937_64 rng(41);
  TranslateOptions opts;
  opts.assert_stages = true;
  for (int i = 0; i < 40; ++i) {
    const ZhTerm t = random_zh_term(rng);
    Sqmdd d;
    ASSERT_NO_THROW(d = zh_to_sqmdd(t, opts));
    EXPECT_TRUE(is_irreducible(d));
    EXPECT_LT(max_deviation(interpret_sqmdd(d), state_of(to_state_form(t))), 1e-9);
  }
}

TEST(ToSqmdd, HeightCap) {
  TranslateOptions opts;
  opts.max_height = 3;
  EXPECT_THROW(zh_to_sqmdd(T(Generator::z_spider(2, 2)), opts), ResourceError);
}

TEST(ReadBack, RoundTrip) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const Sqmdd d = random_sqmdd(rng);
    const Sqmdd c = reduce(d).diagram;
    EXPECT_TRUE(iso_equal(reduce(sqmdd_read_back(sqmdd_to_zh(d))).diagram, c));
    EXPECT_TRUE(iso_equal(sqmdd_read_back(sqmdd_to_zh(c)), c));
  }
}

TEST(ReadBack, XSpiderFanIns) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const Sqmdd c = reduce(random_sqmdd(rng)).diagram;
    EXPECT_TRUE(iso_equal(sqmdd_read_back(monoids_to_x(sqmdd_to_zh(c))), c));
  }
}

TEST(ReadBack, RejectsOtherTerms) {
  EXPECT_THROW(sqmdd_read_back(T(Generator::h_box(0, 2))), ShapeError);
  EXPECT_THROW(sqmdd_read_back(T(Generator::h_box(1, 1))), ShapeError);
}
