#include "quadtile/constructor.hpp"

#include <vector>

#include "overloaded.hpp"
#include "quadtile/error.hpp"

namespace quadtile {

struct Recipe::Node {
  Kind kind;
  std::size_t shape_index = 0;
  Rational factor;
  Recipe a{nullptr};
  Recipe b{nullptr};
};

Recipe Recipe::unit(std::size_t shape_index) {
  return Recipe(std::make_shared<const Node>(Node{Kind::Unit, shape_index, {}, Recipe{nullptr}, Recipe{nullptr}}));
}

Recipe Recipe::stack(Recipe lower, Recipe upper) {
  return Recipe(std::make_shared<const Node>(Node{Kind::Stack, 0, {}, std::move(lower), std::move(upper)}));
}

Recipe Recipe::transpose(Recipe child) {
  return Recipe(std::make_shared<const Node>(Node{Kind::Transpose, 0, {}, std::move(child), Recipe{nullptr}}));
}

Recipe Recipe::scale(Recipe child, Rational q) {
  if (q.sign() <= 0) throw Error(ErrorKind::NonPositiveScale, "scale factor " + q.str());
  return Recipe(std::make_shared<const Node>(Node{Kind::Scale, 0, std::move(q), std::move(child), Recipe{nullptr}}));
}

Recipe::Kind Recipe::kind() const noexcept { return node_->kind; }
std::size_t Recipe::shape_index() const { return node_->shape_index; }
const Rational& Recipe::factor() const { return node_->factor; }

const Recipe& Recipe::first() const { return node_->a; }
const Recipe& Recipe::second() const { return node_->b; }

mpz_class Recipe::tile_count() const {
  switch (node_->kind) {
    case Kind::Unit: return 1;
    case Kind::Stack: return first().tile_count() + second().tile_count();
    case Kind::Transpose: return first().tile_count();
    case Kind::Scale: return first().tile_count() * factor().num() * factor().den();
  }
  return 0;
}

Quad Recipe::ratio(std::span<const Quad> shapes) const {
  switch (node_->kind) {
    case Kind::Unit: return shapes[node_->shape_index];
    case Kind::Stack: return first().ratio(shapes) + second().ratio(shapes);
    case Kind::Transpose: return first().ratio(shapes).inv();
    case Kind::Scale: return factor() * first().ratio(shapes);
  }
  throw Error(ErrorKind::ConstructionFailure, "corrupt recipe");
}

std::string Recipe::str() const {
  switch (node_->kind) {
    case Kind::Unit: return "unit(" + std::to_string(node_->shape_index) + ")";
    case Kind::Stack: return "stack(" + first().str() + ", " + second().str() + ")";
    case Kind::Transpose: return "transpose(" + first().str() + ")";
    case Kind::Scale: return "scale(" + first().str() + ", " + factor().str() + ")";
  }
  return "?";
}

Tiling Recipe::evaluate(std::span<const Quad> shapes) const {
  switch (node_->kind) {
    case Kind::Unit:
      if (node_->shape_index >= shapes.size()) {
        throw Error(ErrorKind::ConstructionFailure, "recipe refers to missing shape " + std::to_string(node_->shape_index));
      }
      return quadtile::unit(node_->shape_index, shapes[node_->shape_index]);
    case Kind::Stack: return quadtile::stack(first().evaluate(shapes), second().evaluate(shapes));
    case Kind::Transpose: return normalize(quadtile::transpose(first().evaluate(shapes)));
    case Kind::Scale: return scale_rational(first().evaluate(shapes), factor());
  }
  throw Error(ErrorKind::ConstructionFailure, "corrupt recipe");
}

Tiling unit(std::size_t shape_index, const Quad& x) {
  const auto& ctx = *x.context();
  return Tiling{ctx.one(), x, {PlacedTile{ctx.zero(), ctx.zero(), ctx.one(), x, shape_index}}};
}

Tiling stack(const Tiling& t1, const Tiling& t2) {
  const Quad one = t1.field()->one();
  if (t1.width != one || t2.width != one) {
    throw Error(ErrorKind::WidthMismatch, "stack needs width-1 tilings, got " + t1.width.str() + " and " + t2.width.str());
  }
  Tiling out{one, t1.height + t2.height, t1.tiles};
  out.tiles.reserve(t1.tiles.size() + t2.tiles.size());
  for (const auto& tile : t2.tiles) {
    out.tiles.push_back({tile.x, tile.y + t1.height, tile.w, tile.h, tile.shape_index});
  }
  return out;
}

Tiling scale_rational(const Tiling& t, const Rational& q) {
  if (q.sign() <= 0) throw Error(ErrorKind::NonPositiveScale, "scale factor " + q.str());
  const auto& ctx = *t.field();
  if (t.width != ctx.one()) throw Error(ErrorKind::WidthMismatch, "scale_rational needs width 1, got " + t.width.str());
  if (q == Rational(1)) return t;
  const mpz_class& m = q.raw().get_num();
  const mpz_class& n = q.raw().get_den();
  if (!m.fits_ulong_p() || !n.fits_ulong_p()) {
    throw Error(ErrorKind::ConstructionFailure, "scale factor " + q.str() + " too large to lay out");
  }
  const unsigned long rows = m.get_ui();
  const unsigned long cols = n.get_ui();
  const Rational shrink(mpz_class(1), n);

  Tiling out{ctx.one(), q * t.height, {}};
  out.tiles.reserve(rows * cols * t.tiles.size());
  for (unsigned long r = 0; r < rows; ++r) {
    const Quad dy = Rational(static_cast<std::int64_t>(r)) * t.height;
    for (unsigned long c = 0; c < cols; ++c) {
      const Rational dx(static_cast<std::int64_t>(c));
      for (const auto& tile : t.tiles) {
        out.tiles.push_back({(tile.x + dx) * shrink, (tile.y + dy) * shrink, tile.w * shrink, tile.h * shrink,
                             tile.shape_index});
      }
    }
  }
  return out;
}

namespace {

Recipe scaled(Recipe r, const Rational& q) {
  if (q == Rational(1)) return r;
  return Recipe::scale(std::move(r), q);
}

void require_conj_sign(const Quad& x, int want) {
  const int s = x.conj().sign();
  if (want > 0 && s <= 0) throw Error(ErrorKind::ConjugateNotPositive, "conj(" + x.str() + ") is not positive");
  if (want < 0 && s >= 0) throw Error(ErrorKind::ConjugateNotNegative, "conj(" + x.str() + ") is not negative");
}

}  // namespace

// 1/x = conj(x)/norm(x) and norm(x) > 0, so norm copies of the transposed
// tile realize conj(x).
Recipe conjugate_recipe(std::size_t index, const Quad& x) {
  require_conj_sign(x, +1);
  return scaled(Recipe::transpose(Recipe::unit(index)), x.norm());
}

// x + conj(x) = 2a, then rescale to q.
Recipe rational_recipe(const Rational& q, std::size_t index, const Quad& x) {
  require_conj_sign(x, +1);
  if (x.is_rational()) return scaled(Recipe::unit(index), q / x.e());
  const Recipe two_a = Recipe::stack(Recipe::unit(index), conjugate_recipe(index, x));
  return scaled(two_a, q / (Rational(2) * x.e()));
}

// 1/x = -conj(x)/(-norm(x)) with -norm(x) > 0.
Recipe neg_conjugate_recipe(std::size_t index, const Quad& x) {
  require_conj_sign(x, -1);
  return scaled(Recipe::transpose(Recipe::unit(index)), -x.norm());
}

// x - conj(x) = 2b*sqrt(p), then rescale to q*sqrt(p).
Recipe sqrtp_recipe(const Rational& q, std::size_t index, const Quad& x) {
  require_conj_sign(x, -1);
  const Recipe two_b = Recipe::stack(Recipe::unit(index), neg_conjugate_recipe(index, x));
  return scaled(two_b, q / (Rational(2) * x.f()));
}

Tiling conjugate_tiling(const Quad& x) {
  const Quad shapes[] = {x};
  return conjugate_recipe(0, x).evaluate(shapes);
}

Tiling rational_tiling(const Rational& q, const Quad& x) {
  const Quad shapes[] = {x};
  return rational_recipe(q, 0, x).evaluate(shapes);
}

Tiling neg_conjugate_tiling(const Quad& x) {
  const Quad shapes[] = {x};
  return neg_conjugate_recipe(0, x).evaluate(shapes);
}

Tiling sqrtp_tiling(const Rational& q, const Quad& x) {
  const Quad shapes[] = {x};
  return sqrtp_recipe(q, 0, x).evaluate(shapes);
}

namespace {

// Stacks the nonzero parts; at least one part is present for z > 0.
Recipe stack_parts(std::optional<Recipe> lower, std::optional<Recipe> upper) {
  if (lower && upper) return Recipe::stack(std::move(*lower), std::move(*upper));
  if (lower) return std::move(*lower);
  if (upper) return std::move(*upper);
  throw Error(ErrorKind::ConstructionFailure, "empty decomposition");
}

// e > 0 and f > 0 not both zero, with x_i conj > 0 and x_j conj < 0.
Recipe plan_mixed_nonnegative(const Rational& e, const Rational& f, const Mixed& m, const ShapeSpec& spec) {
  std::optional<Recipe> rational_part;
  std::optional<Recipe> sqrt_part;
  if (e.sign() > 0) rational_part = rational_recipe(e, m.i, spec.shapes[m.i]);
  if (f.sign() > 0) sqrt_part = sqrtp_recipe(f, m.j, spec.shapes[m.j]);
  return stack_parts(std::move(rational_part), std::move(sqrt_part));
}

Recipe plan_mixed(const Mixed& m, const ShapeSpec& spec) {
  const Quad& z = spec.target;
  if (z.e().sign() >= 0 && z.f().sign() >= 0) return plan_mixed_nonnegative(z.e(), z.f(), m, spec);
  // One component negative: 1/z = conj(z)/norm(z) has both components
  // positive, since |norm(z)| flips the sign of exactly that component.
  const Quad w = z.inv();
  return Recipe::transpose(plan_mixed_nonnegative(w.e(), w.f(), m, spec));
}

// z = c * (a_k +- |b_k| sqrt(p)) + r with c, r >= 0.
Recipe plan_positive(const AllPositiveConj& pc, const ShapeSpec& spec) {
  const Quad& x = spec.shapes[pc.k];
  const Quad& z = spec.target;
  const std::size_t k = pc.k;
  if (x.f().is_zero()) return scaled(Recipe::unit(k), z.e() / x.e());

  const Rational abs_b = x.f().abs();
  const Rational coeff = z.f().abs() / abs_b;
  const Rational rest = z.e() - coeff * x.e();
  // The base shape a_k + sign(f)|b_k| sqrt(p) is x itself when its sign of
  // b matches the sign of f, else its conjugate.
  const bool same_sign = z.f().sign() >= 0 ? x.f().sign() > 0 : x.f().sign() < 0;

  std::optional<Recipe> lower;
  std::optional<Recipe> upper;
  if (coeff.sign() > 0) lower = scaled(same_sign ? Recipe::unit(k) : conjugate_recipe(k, x), coeff);
  if (rest.sign() > 0) upper = rational_recipe(rest, k, x);
  return stack_parts(std::move(lower), std::move(upper));
}

// z = c * (+-|a_k| + b_k sqrt(p)) + r sqrt(p) with c, r >= 0.
Recipe plan_negative(const AllNegativeConj& nc, const ShapeSpec& spec) {
  const Quad& x = spec.shapes[nc.k];
  const Quad& z = spec.target;
  const std::size_t k = nc.k;
  // a_k = 0 forces e = 0, so z is a rational multiple of x.
  if (x.e().is_zero()) return scaled(Recipe::unit(k), z.f() / x.f());

  const Rational abs_a = x.e().abs();
  const Rational coeff = z.e().abs() / abs_a;
  const Rational rest = z.f() - coeff * x.f();
  const bool same_sign = z.e().sign() >= 0 ? x.e().sign() > 0 : x.e().sign() < 0;

  std::optional<Recipe> lower;
  std::optional<Recipe> upper;
  if (coeff.sign() > 0) lower = scaled(same_sign ? Recipe::unit(k) : neg_conjugate_recipe(k, x), coeff);
  if (rest.sign() > 0) upper = sqrtp_recipe(rest, k, x);
  return stack_parts(std::move(lower), std::move(upper));
}

}  // namespace

Recipe plan(const ShapeSpec& spec) {
  const Decision d = decide(spec);
  if (!d.yes()) throw Error(ErrorKind::NotTileable, d.reason);
  return std::visit(overloaded{
                        [&](const Mixed& m) { return plan_mixed(m, spec); },
                        [&](const AllPositiveConj& pc) { return plan_positive(pc, spec); },
                        [&](const AllNegativeConj& nc) { return plan_negative(nc, spec); },
                    },
                    d.classification);
}

Tiling construct(const ShapeSpec& spec) {
  Tiling t = plan(spec).evaluate(spec.shapes);
  const VerifyReport report = verify_all(t, spec.shapes);
  std::string problem;
  if (!report.exact_dissection()) problem = "not an exact dissection";
  else if (!report.ratios_ok) problem = "tile with foreign ratio";
  else if (!report.guillotine) problem = "not guillotine";
  else if (t.width != spec.ctx->one() || t.height != spec.target) problem = "bounds are not 1 x z";
  if (!problem.empty()) throw Error(ErrorKind::InternalVerificationFailure, problem);
  return t;
}

}  // namespace quadtile
