#include "generators.hpp"
#include "gtest/gtest.h"
#include "quadtile/constructor.hpp"
#include "quadtile/error.hpp"

namespace quadtile {
namespace {

using testing::CaseKind;
using testing::Gen;

class Construct : public ::testing::Test {
 protected:
  FieldPtr ctx = validate_context(Rational(2));
  Quad q(std::int64_t e, std::int64_t f) { return ctx->make(Rational(e), Rational(f)); }

  // Full verification against `shapes` plus the exact bounds ratio.
  void expect_realizes(const Tiling& t, const std::vector<Quad>& shapes, const Quad& ratio) {
    const VerifyReport r = verify_all(t, shapes);
    EXPECT_TRUE(r.exact_dissection());
    EXPECT_TRUE(r.ratios_ok);
    EXPECT_TRUE(r.guillotine);
    EXPECT_EQ(t.width, ctx->one());
    EXPECT_EQ(t.height, ratio);
  }

  ErrorKind kind_of(const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorKind::ParseError;
  }
};

TEST_F(Construct, Unit) {
  const Tiling t = unit(1, q(1, 1));
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.tiles[0].shape_index, 1u);
  expect_realizes(t, {q(3, 1), q(1, 1)}, q(1, 1));
}

TEST_F(Construct, Stack) {
  const Tiling t = stack(unit(0, q(1, 1)), unit(0, q(1, 1)));
  EXPECT_EQ(t.size(), 2u);
  expect_realizes(t, {q(1, 1)}, q(2, 2));

  const Tiling sq = unit(0, q(1, 0));
  const Tiling root = unit(1, q(0, 1));
  const Tiling both = stack(sq, root);
  EXPECT_TRUE(verify_exact_cover(both).exact_dissection());
  EXPECT_EQ(both.height, q(1, 1));

  EXPECT_EQ(kind_of([&] { stack(transpose(unit(0, q(1, 1))), sq); }), ErrorKind::WidthMismatch);
}

TEST_F(Construct, TransposeSwapsBounds) {
  const Tiling t = transpose(unit(0, q(1, 1)));
  EXPECT_EQ(t.width, q(1, 1));
  EXPECT_EQ(t.height, q(1, 0));
  EXPECT_TRUE(verify_exact_cover(t).exact_dissection());
  EXPECT_TRUE(verify_ratios(t, std::vector<Quad>{q(1, 1)}).ratios_ok);
}

TEST_F(Construct, ScaleRational) {
  const Tiling seven = scale_rational(unit(0, q(1, 1)), Rational(7));
  EXPECT_EQ(seven.size(), 7u);
  expect_realizes(seven, {q(1, 1)}, q(7, 7));

  const Tiling t = stack(unit(0, q(1, 1)), unit(0, q(3, 1)));
  const Tiling same = scale_rational(t, Rational(1));
  EXPECT_EQ(same.size(), t.size());
  EXPECT_EQ(same.height, t.height);

  const Tiling half = scale_rational(unit(0, q(1, 1)), Rational(1, 2));
  EXPECT_EQ(half.size(), 2u);
  expect_realizes(half, {q(1, 1)}, ctx->make(Rational(1, 2), Rational(1, 2)));

  EXPECT_EQ(kind_of([&] { scale_rational(t, Rational(0)); }), ErrorKind::NonPositiveScale);
  EXPECT_EQ(kind_of([&] { scale_rational(t, Rational(-1, 2)); }), ErrorKind::NonPositiveScale);
}

TEST_F(Construct, ConjugateTiling) {
  const Tiling t = conjugate_tiling(q(3, 1));
  EXPECT_EQ(t.size(), 7u);
  expect_realizes(t, {q(3, 1)}, q(3, -1));
  const Tiling r = conjugate_tiling(q(2, 0));
  EXPECT_EQ(r.size(), 4u);
  expect_realizes(r, {q(2, 0)}, q(2, 0));
  EXPECT_EQ(kind_of([&] { conjugate_tiling(q(1, 1)); }), ErrorKind::ConjugateNotPositive);
}

TEST_F(Construct, RationalTiling) {
  const Tiling one = rational_tiling(Rational(1), q(3, 1));
  EXPECT_EQ(one.size(), 48u);
  expect_realizes(one, {q(3, 1)}, q(1, 0));
  const Tiling six = rational_tiling(Rational(6), q(3, 1));
  EXPECT_EQ(six.size(), 8u);
  expect_realizes(six, {q(3, 1)}, q(6, 0));
  const Tiling five = rational_tiling(Rational(5), q(2, 0));
  EXPECT_EQ(five.size(), 10u);  // scale by 5/2: 2 columns, 5 rows
  expect_realizes(five, {q(2, 0)}, q(5, 0));
  EXPECT_EQ(kind_of([&] { rational_tiling(Rational(1), q(1, 1)); }), ErrorKind::ConjugateNotPositive);
}

TEST_F(Construct, NegConjugateTiling) {
  const Tiling t = neg_conjugate_tiling(q(1, 1));
  EXPECT_EQ(t.size(), 1u);
  expect_realizes(t, {q(1, 1)}, q(-1, 1));
  const Tiling u = neg_conjugate_tiling(q(-1, 2));
  EXPECT_EQ(u.size(), 7u);
  expect_realizes(u, {q(-1, 2)}, q(1, 2));
  EXPECT_EQ(kind_of([&] { neg_conjugate_tiling(q(3, 1)); }), ErrorKind::ConjugateNotNegative);
}

TEST_F(Construct, SqrtpTiling) {
  const Tiling t = sqrtp_tiling(Rational(1), q(1, 1));
  EXPECT_EQ(t.size(), 4u);
  expect_realizes(t, {q(1, 1)}, q(0, 1));
  const Tiling u = sqrtp_tiling(Rational(2), q(1, 1));
  EXPECT_EQ(u.size(), 2u);
  expect_realizes(u, {q(1, 1)}, q(0, 2));
  EXPECT_EQ(kind_of([&] { sqrtp_tiling(Rational(1), q(3, 1)); }), ErrorKind::ConjugateNotNegative);
}

TEST_F(Construct, SpecFixtures) {
  const Tiling square = construct(make_spec(ctx, {q(3, 1)}, q(1, 0)));
  EXPECT_EQ(square.size(), 48u);
  expect_realizes(square, {q(3, 1)}, q(1, 0));

  const Tiling root = construct(make_spec(ctx, {q(1, 1)}, q(0, 1)));
  EXPECT_EQ(root.size(), 4u);
  expect_realizes(root, {q(1, 1)}, q(0, 1));

  const Tiling doubled = construct(make_spec(ctx, {q(1, 1)}, q(2, 2)));
  EXPECT_EQ(doubled.size(), 2u);

  const std::vector<Quad> mixed = {q(3, 1), q(1, 1)};
  const Tiling m = construct(make_spec(ctx, mixed, q(-1, 3)));
  expect_realizes(m, mixed, q(-1, 3));

  const Tiling self = construct(make_spec(ctx, {q(3, 1)}, q(3, 1)));
  EXPECT_EQ(self.size(), 1u);
}

TEST_F(Construct, RefusesNoInstances) {
  EXPECT_EQ(kind_of([&] { plan(make_spec(ctx, {q(1, 1)}, q(1, 0))); }), ErrorKind::NotTileable);
  EXPECT_EQ(kind_of([&] { construct(make_spec(ctx, {q(1, 1)}, q(1, 0))); }), ErrorKind::NotTileable);
}

TEST_F(Construct, RecipeText) {
  const Recipe r = Recipe::stack(Recipe::unit(0), Recipe::scale(Recipe::transpose(Recipe::unit(0)), Rational(7)));
  EXPECT_EQ(r.str(), "stack(unit(0), scale(transpose(unit(0)), 7))");
  EXPECT_EQ(r.tile_count(), 8);
  EXPECT_THROW(Recipe::scale(Recipe::unit(0), Rational(0)), Error);
}

// Evaluates every node of r and checks it in isolation.
void check_every_node(const Recipe& r, const std::vector<Quad>& shapes) {
  const Tiling t = r.evaluate(shapes);
  const VerifyReport rep = verify_all(t, shapes);
  ASSERT_TRUE(rep.exact_dissection()) << r.str();
  ASSERT_TRUE(rep.ratios_ok) << r.str();
  ASSERT_TRUE(rep.guillotine) << r.str();
  ASSERT_EQ(t.width, t.field()->one()) << r.str();
  ASSERT_EQ(t.height, r.ratio(shapes)) << r.str();
  ASSERT_EQ(mpz_class(t.size()), r.tile_count()) << r.str();
  switch (r.kind()) {
    case Recipe::Kind::Unit: break;
    case Recipe::Kind::Stack:
      ASSERT_EQ(t.height, r.first().ratio(shapes) + r.second().ratio(shapes));
      check_every_node(r.first(), shapes);
      check_every_node(r.second(), shapes);
      break;
    case Recipe::Kind::Transpose:
      ASSERT_EQ(t.height, r.first().ratio(shapes).inv());
      check_every_node(r.first(), shapes);
      break;
    case Recipe::Kind::Scale:
      ASSERT_EQ(t.height, r.factor() * r.first().ratio(shapes));
      check_every_node(r.first(), shapes);
      break;
  }
}

TEST(ConstructProperties, EveryIntermediateNodeVerifies) {
  Gen g(31);
  for (int checked = 0, n = 0; checked < 150; ++n) {
    const ShapeSpec spec = testing::yes_instance(g, static_cast<CaseKind>(n % 3), 1 + n % 3);
    if (!testing::within_tile_budget(spec, 2000)) continue;
    check_every_node(plan(spec), spec.shapes);
    ++checked;
  }
}

TEST(ConstructProperties, SoundOnRandomYesInstances) {
  Gen g(32);
  for (int checked = 0, n = 0; checked < 300; ++n) {
    const ShapeSpec spec = testing::yes_instance(g, static_cast<CaseKind>(n % 3), 1 + n % 4);
    if (!testing::within_tile_budget(spec, 5000)) continue;
    const Tiling t = construct(spec);
    const VerifyReport r = verify_all(t, spec.shapes);
    ASSERT_TRUE(r.exact_dissection() && r.ratios_ok && r.guillotine);
    ASSERT_EQ(t.ratio(), spec.target);
    ++checked;
  }
}

TEST(ConstructProperties, CombinatorsRealizeClosureOperations) {
  Gen g(33);
  for (int n = 0; n < 200; ++n) {
    const ShapeSpec a = testing::yes_instance(g, static_cast<CaseKind>(n % 3), 2);
    if (!testing::within_tile_budget(a, 1000)) continue;
    const Tiling ta = construct(a);
    const Tiling tb = unit(0, a.shapes[0]);
    EXPECT_EQ(stack(ta, tb).height, a.target + a.shapes[0]);
    const Tiling tr = transpose(ta);
    EXPECT_EQ(tr.height / tr.width, a.target.inv());
    const Rational q = g.positive_rational(4, 4);
    const Tiling ts = scale_rational(ta, q);
    EXPECT_EQ(ts.height, q * a.target);
    EXPECT_EQ(mpz_class(ts.size()), mpz_class(ta.size()) * q.num() * q.den());
    EXPECT_TRUE(verify_exact_cover(ts).exact_dissection());
  }
}

}  // namespace
}  // namespace quadtile
