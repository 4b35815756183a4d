#include "quadtile/criteria.hpp"

#include <cassert>
#include <optional>
#include <sstream>

#include "overloaded.hpp"
#include "quadtile/error.hpp"

namespace quadtile {

ShapeSpec make_spec(FieldPtr ctx, std::vector<Quad> shapes, Quad target) {
  if (shapes.empty()) throw Error(ErrorKind::DegenerateShape, "at least one shape is required");
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!shapes[i].context()->same_field(*ctx)) {
      throw Error(ErrorKind::ContextMismatch, "shape " + std::to_string(i) + " lives in another field");
    }
    if (shapes[i].sign() <= 0) {
      throw Error(ErrorKind::DegenerateShape, "shape " + std::to_string(i) + " = " + shapes[i].str() + " is not positive");
    }
  }
  if (!target.context()->same_field(*ctx)) {
    throw Error(ErrorKind::ContextMismatch, "target lives in another field");
  }
  if (target.sign() <= 0) {
    throw Error(ErrorKind::DegenerateShape, "target " + target.str() + " is not positive");
  }
  return ShapeSpec{std::move(ctx), std::move(shapes), std::move(target)};
}

Classification classify(const ShapeSpec& spec) {
  std::optional<std::size_t> first_pos;
  std::optional<std::size_t> first_neg;
  for (std::size_t i = 0; i < spec.shapes.size(); ++i) {
    const Quad& x = spec.shapes[i];
    if (x.sign() <= 0) {
      throw Error(ErrorKind::DegenerateShape, "shape " + std::to_string(i) + " = " + x.str() + " is not positive");
    }
    const int s = x.conj().sign();
    assert(s != 0 && "a zero conjugate would make sqrt(p) rational");
    if (s > 0 && !first_pos) first_pos = i;
    if (s < 0 && !first_neg) first_neg = i;
  }
  if (first_pos && first_neg) return Mixed{*first_pos, *first_neg};

  if (first_pos) {
    // All a_i > 0 here.
    AllPositiveConj best{0, spec.shapes[0].f().abs() / spec.shapes[0].e()};
    for (std::size_t i = 1; i < spec.shapes.size(); ++i) {
      Rational r = spec.shapes[i].f().abs() / spec.shapes[i].e();
      if (r > best.bound) best = {i, std::move(r)};
    }
    return best;
  }
  // All b_i > 0 here.
  AllNegativeConj best{0, spec.shapes[0].e().abs() / spec.shapes[0].f()};
  for (std::size_t i = 1; i < spec.shapes.size(); ++i) {
    Rational r = spec.shapes[i].e().abs() / spec.shapes[i].f();
    if (r > best.bound) best = {i, std::move(r)};
  }
  return best;
}

bool admissible(const Classification& c, const Quad& z) {
  return std::visit(
      overloaded{
          [&](const Mixed&) { return z.sign() > 0; },
          [&](const AllPositiveConj& m) { return z.e().sign() > 0 && z.f().abs() <= z.e() * m.bound; },
          [&](const AllNegativeConj& n) { return z.f().sign() > 0 && z.e().abs() <= z.f() * n.bound; },
      },
      c);
}

std::string describe(const Classification& c) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Mixed& m) {
                   os << "Mixed(i=" << m.i << ", j=" << m.j << "): admissible set P = all positive e + f*sqrt(p)";
                 },
                 [&](const AllPositiveConj& m) {
                   os << "AllPositiveConj(k=" << m.k << ", bound=" << m.bound
                      << "): admissible set M = {e > 0, |f|/e <= " << m.bound << "}";
                 },
                 [&](const AllNegativeConj& n) {
                   os << "AllNegativeConj(k=" << n.k << ", bound=" << n.bound
                      << "): admissible set N = {f > 0, |e|/f <= " << n.bound << "}";
                 },
             },
             c);
  return os.str();
}

Decision decide(const ShapeSpec& spec) {
  if (spec.target.sign() <= 0) {
    throw Error(ErrorKind::DegenerateShape, "target " + spec.target.str() + " is not positive");
  }
  Classification c = classify(spec);
  const bool yes = admissible(c, spec.target);
  std::string reason = describe(c) + "; z = " + spec.target.str() + (yes ? " is inside" : " is outside");
  return Decision{yes ? Verdict::Yes : Verdict::No, std::move(c), std::move(reason)};
}

bool theorem6_decide(const Quad& z, const Quad& x1) {
  const Rational& alpha = x1.e();
  const Rational& beta = x1.f();
  if (beta.is_zero()) throw Error(ErrorKind::RationalShape, "x1 = " + x1.str() + " is rational");
  if (!z.context()->same_field(*x1.context())) throw Error(ErrorKind::ContextMismatch, "z and x1 differ in p");
  const Rational& p = x1.p();

  // z = delta*x1 + gamma with rational delta, gamma.
  const Rational delta = z.f() / beta;
  const Rational gamma = z.e() - delta * alpha;

  if (gamma.is_zero() && delta.sign() > 0) return true;
  if (alpha.is_zero()) return false;
  const Rational lhs = gamma * (alpha * alpha - beta * beta * p) / alpha;
  return lhs.sign() > 0 && (delta + gamma / (Rational(2) * alpha)).sign() >= 0;
}

}  // namespace quadtile
