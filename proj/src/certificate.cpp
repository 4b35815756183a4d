#include "quadtile/certificate.hpp"

#include "overloaded.hpp"
#include "quadtile/constructor.hpp"
#include "quadtile/error.hpp"

namespace quadtile {

// With A = f, B = -e the bounds 1 x (e + f sqrt(p)) have "area"
// e*f - f*e = 0 for every C. The choice of C makes the tile form definite.
//
// b != 0: C = 2 f a^2/b^2 - p f. The tile form is
//   (f a - e b) alpha^2 + 2 (f a^2/b - e a) alpha beta
//     + (2 f a^3/b^2 - p f a - p e b) beta^2
// with quarter discriminant (a^2 - p b^2)(e^2 - f^2 a^2/b^2). On a NO
// instance the two factors have opposite signs:
//   conj(x) > 0: a^2 - p b^2 > 0. Either e > 0 and |f|/e > |b|/a, or e <= 0,
//     where z > 0 gives |e| < f sqrt(p) < f a/|b|. Both mean e^2 < f^2 a^2/b^2.
//   conj(x) < 0: a^2 - p b^2 < 0. Either f > 0 and |e|/f > |a|/b, or f <= 0,
//     where z > 0 gives e > |f| sqrt(p) >= |f| |a|/b (strict when f = 0).
//     Both mean e^2 > f^2 a^2/b^2.
//
// b = 0: a NO instance forces f != 0. C = (e^2 + 1)/f gives the form
//   a f alpha^2 - 2 a e alpha beta + a (e^2 + 1)/f beta^2
// with quarter discriminant a^2 e^2 - a^2 (e^2 + 1) = -a^2 < 0.
Certificate make_certificate(const Quad& z, const Quad& x1) {
  if (!z.context()->same_field(*x1.context())) throw Error(ErrorKind::ContextMismatch, "z and x1 differ in p");
  if (z.sign() <= 0 || x1.sign() <= 0) {
    throw Error(ErrorKind::NotAnImpossibleInstance, "z and x1 must both be positive");
  }
  const ShapeSpec spec{z.context(), {x1}, z};
  const Decision d = decide(spec);
  if (d.yes()) throw Error(ErrorKind::NotAnImpossibleInstance, d.reason);

  const Rational& e = z.e();
  const Rational& f = z.f();
  const Rational& a = x1.e();
  const Rational& b = x1.f();
  const Rational& p = z.p();

  if (b.is_zero()) {
    return Certificate{{f, -e, (e * e + Rational(1)) / f}, x1, z, a * f, -(a * a)};
  }
  const Rational a2_over_b2 = a * a / (b * b);
  return Certificate{{f, -e, Rational(2) * f * a2_over_b2 - p * f},
                     x1,
                     z,
                     f * a - e * b,
                     (a * a - p * b * b) * (e * e - f * f * a2_over_b2)};
}

bool check_certificate(const Certificate& cert) {
  const auto& ctx = *cert.shape.context();
  if (!ctx.same_field(*cert.target.context())) return false;
  if (cert.shape.sign() <= 0 || cert.target.sign() <= 0) return false;

  if (!area_functional(cert.coeffs, ctx.one(), cert.target).is_zero()) return false;

  const BinaryQuadraticForm form = tile_area_form(cert.coeffs, cert.shape);
  const Rational qd = form.quarter_discriminant();
  return form.alpha2 == cert.leading && qd == cert.quarter_discriminant && !cert.leading.is_zero() &&
         qd.sign() < 0;
}

namespace {

std::size_t extremal_index(const Classification& c) {
  return std::visit(overloaded{
                        [](const Mixed&) -> std::size_t {
                          throw Error(ErrorKind::NotAnImpossibleInstance, "mixed shapes tile every positive z");
                        },
                        [](const AllPositiveConj& m) { return m.k; },
                        [](const AllNegativeConj& n) { return n.k; },
                    },
                    c);
}

bool reduction_ok(const Tiling& t, const Quad& ratio, std::size_t k, const Quad& x_k) {
  if (!verify_exact_cover(t).exact_dissection()) return false;
  if (t.ratio() != ratio) return false;
  Tiling unlabelled = t;
  for (auto& tile : unlabelled.tiles) {
    if (tile.shape_index && *tile.shape_index != k) return false;
    tile.shape_index.reset();
  }
  const Quad only[] = {x_k};
  return verify_ratios(unlabelled, only).ratios_ok;
}

}  // namespace

CertificateBundle make_bundle(const ShapeSpec& spec) {
  const Decision d = decide(spec);
  if (d.yes()) throw Error(ErrorKind::NotAnImpossibleInstance, d.reason);
  const std::size_t k = extremal_index(d.classification);
  const Quad& x_k = spec.shapes[k];

  CertificateBundle bundle{k, make_certificate(spec.target, x_k), {}, {}};
  for (std::size_t i = 0; i < spec.shapes.size(); ++i) {
    if (i == k) continue;
    Tiling t = [&] {
      try {
        return construct(ShapeSpec{spec.ctx, {x_k}, spec.shapes[i]});
      } catch (const Error& err) {
        throw Error(ErrorKind::ConstructionFailure,
                    "shape " + std::to_string(i) + " by shape " + std::to_string(k) + ": " + err.what());
      }
    }();
    for (auto& tile : t.tiles) tile.shape_index = k;
    bundle.reduced.push_back(i);
    bundle.reductions.push_back(std::move(t));
  }
  if (!check_bundle(bundle, spec)) throw Error(ErrorKind::ConstructionFailure, "bundle failed re-verification");
  return bundle;
}

bool check_bundle(const CertificateBundle& bundle, const ShapeSpec& spec) {
  if (bundle.k >= spec.shapes.size()) return false;
  const Quad& x_k = spec.shapes[bundle.k];
  if (bundle.core.shape != x_k || bundle.core.target != spec.target) return false;
  if (!check_certificate(bundle.core)) return false;
  if (bundle.reduced.size() != bundle.reductions.size() || bundle.reduced.size() + 1 != spec.shapes.size()) {
    return false;
  }
  std::size_t expect = 0;
  for (std::size_t n = 0; n < bundle.reduced.size(); ++n, ++expect) {
    if (expect == bundle.k) ++expect;
    const std::size_t i = bundle.reduced[n];
    if (i != expect) return false;
    if (!reduction_ok(bundle.reductions[n], spec.shapes[i], bundle.k, x_k)) return false;
  }
  return true;
}

}  // namespace quadtile
