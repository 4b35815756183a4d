#include "quadtile/area.hpp"

#include "quadtile/error.hpp"

namespace quadtile {

Rational area_functional(const AreaCoeffs& c, const Quad& side1, const Quad& side2) {
  const Rational& alpha = side1.e();
  const Rational& beta = side1.f();
  const Rational& gamma = side2.e();
  const Rational& delta = side2.f();
  return c.A * alpha * gamma + c.B * (beta * gamma + alpha * delta) + c.C * beta * delta;
}

namespace {

bool balances(const Tiling& t, const AreaCoeffs& c) {
  Rational total;
  for (const auto& tile : t.tiles) total += area_functional(c, tile.w, tile.h);
  return total == area_functional(c, t.width, t.height);
}

void require_dissection(const Tiling& t) {
  if (!verify_exact_cover(t).exact_dissection()) {
    throw Error(ErrorKind::NotADissection, "area additivity needs an exact dissection");
  }
}

}  // namespace

bool area_additivity_check(const Tiling& t, const AreaCoeffs& c) {
  require_dissection(t);
  return balances(t, c);
}

// S is linear in (A, B, C): the tile total for any triple is
// A*sum(alpha gamma) + B*sum(beta gamma + alpha delta) + C*sum(beta delta).
bool area_additivity_check(const Tiling& t, std::span<const AreaCoeffs> cs) {
  require_dissection(t);
  mpq_class sa, sb, sc;
  for (const auto& tile : t.tiles) {
    const mpq_class& alpha = tile.w.e().raw();
    const mpq_class& beta = tile.w.f().raw();
    const mpq_class& gamma = tile.h.e().raw();
    const mpq_class& delta = tile.h.f().raw();
    sa += alpha * gamma;
    sb += beta * gamma;
    sb += alpha * delta;
    sc += beta * delta;
  }
  const Rational a(sa), b(sb), c(sc);
  for (const auto& k : cs) {
    if (k.A * a + k.B * b + k.C * c != area_functional(k, t.width, t.height)) return false;
  }
  return true;
}

Rational BinaryQuadraticForm::quarter_discriminant() const {
  return mixed * mixed * Rational(1, 4) - alpha2 * beta2;
}

// Tile sides s = alpha + beta*sqrt(p) and s*x with x = a + b*sqrt(p):
//   gamma = a*alpha + p*b*beta,  delta = b*alpha + a*beta.
// Substituting into S and collecting powers of alpha and beta gives the
// coefficients below.
BinaryQuadraticForm tile_area_form(const AreaCoeffs& c, const Quad& ratio) {
  const Rational& a = ratio.e();
  const Rational& b = ratio.f();
  const Rational& p = ratio.p();
  return {a * c.A + b * c.B,
          p * b * c.A + Rational(2) * a * c.B + b * c.C,
          p * b * c.B + a * c.C};
}

}  // namespace quadtile
