#include "generators.hpp"
#include "gtest/gtest.h"
#include "quadtile/search.hpp"

namespace quadtile {
namespace {

using testing::Gen;

class Search : public ::testing::Test {
 protected:
  FieldPtr ctx = validate_context(Rational(2));
  Quad q(std::int64_t e, std::int64_t f) { return ctx->make(Rational(e), Rational(f)); }

  void expect_witness(const std::optional<Recipe>& r, const std::vector<Quad>& shapes, const Quad& z) {
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->ratio(shapes), z);
    const Tiling t = r->evaluate(shapes);
    const VerifyReport rep = verify_all(t, shapes);
    EXPECT_TRUE(rep.exact_dissection());
    EXPECT_TRUE(rep.ratios_ok);
    EXPECT_EQ(t.ratio(), z);
  }
};

TEST_F(Search, Doubling) {
  const std::vector<Quad> shapes = {q(1, 1)};
  const auto r = bounded_closure_search(q(2, 2), shapes, {.depth = 3});
  expect_witness(r, shapes, q(2, 2));
}

TEST_F(Search, SquareIsNeverReached) {
  const std::vector<Quad> shapes = {q(1, 1)};
  for (std::size_t depth = 0; depth <= 5; ++depth) {
    EXPECT_FALSE(bounded_closure_search(q(1, 0), shapes, {.depth = depth}).has_value());
  }
}

TEST_F(Search, RootTwoAtDepthFour) {
  const std::vector<Quad> shapes = {q(1, 1)};
  const auto r = bounded_closure_search(q(0, 1), shapes, {.depth = 4});
  expect_witness(r, shapes, q(0, 1));
}

TEST_F(Search, ShapeItselfAtDepthZero) {
  const std::vector<Quad> shapes = {q(3, 1), q(1, 1)};
  const auto r = bounded_closure_search(q(1, 1), shapes, {.depth = 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->kind(), Recipe::Kind::Unit);
  EXPECT_EQ(r->shape_index(), 1u);
}

TEST(SearchProperties, WitnessesAreSoundAndNeverContradictDecide) {
  Gen g(51);
  int found = 0;
  for (int n = 0; n < 200; ++n) {
    const FieldPtr ctx = g.field();
    std::vector<Quad> shapes;
    for (int i = 0, m = static_cast<int>(g.integer(1, 2)); i < m; ++i) shapes.push_back(g.shape(ctx, g.coin() ? 1 : -1));
    const Quad z = g.positive_quad(ctx, 6, 3);
    const auto r = bounded_closure_search(z, shapes, {.depth = 3, .width = 24});
    if (!r) continue;
    ++found;
    ASSERT_TRUE(decide(ShapeSpec{ctx, shapes, z}).yes());
    ASSERT_EQ(r->ratio(shapes), z);
  }
  EXPECT_GT(found, 0);
}

}  // namespace
}  // namespace quadtile
