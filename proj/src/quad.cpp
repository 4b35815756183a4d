#include "quadtile/quad.hpp"

#include <cmath>
#include <ostream>

#include "quadtile/error.hpp"

namespace quadtile {

namespace {

void require_same_field(const Quad& u, const Quad& v) {
  if (!u.context()->same_field(*v.context())) {
    throw Error(ErrorKind::ContextMismatch,
                "p=" + u.p().str() + " vs p=" + v.p().str());
  }
}

}  // namespace

FieldPtr FieldContext::validate(const Rational& p) {
  if (p.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveRadicand, "p=" + p.str() + " must be positive");
  }
  // In lowest terms s/t, sqrt(s/t) is rational iff both s and t are squares.
  if (p.is_square()) {
    throw Error(ErrorKind::RationalSquareRoot, "sqrt(" + p.str() + ") is rational");
  }
  return std::make_shared<const FieldContext>(Token{}, p);
}

FieldContext::FieldContext(Token, Rational p) : p_(std::move(p)), root_(std::sqrt(p_.to_double())) {}

Quad FieldContext::make(const Rational& e, const Rational& f) const {
  return Quad(shared_from_this(), e, f);
}

Quad FieldContext::rational(const Rational& q) const { return make(q, Rational(0)); }
Quad FieldContext::zero() const { return make(Rational(0), Rational(0)); }
Quad FieldContext::one() const { return make(Rational(1), Rational(0)); }

Quad::Quad(FieldPtr ctx, Rational e, Rational f)
    : ctx_(std::move(ctx)), e_(std::move(e)), f_(std::move(f)) {}

int Quad::sign() const {
  const int se = e_.sign();
  const int sf = f_.sign();
  if (se == 0) return sf;
  if (sf == 0 || se == sf) return se;
  // Opposite signs: |f|sqrt(p) vs |e|, compared through p*f^2 vs e^2.
  const int magnitude = (p() * f_ * f_ <=> e_ * e_) > 0 ? 1 : -1;
  return sf * magnitude;
}

Rational Quad::norm() const { return e_ * e_ - p() * f_ * f_; }

Quad Quad::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q[sqrt(" + p().str() + ")]");
  const Rational n = norm();
  return Quad(ctx_, e_ / n, -f_ / n);
}

double Quad::approx() const { return e_.to_double() + f_.to_double() * ctx_->root_approx(); }

std::string Quad::str() const {
  std::string out = e_.str();
  if (f_.sign() < 0) {
    out += " - " + f_.abs().str();
  } else {
    out += " + " + f_.str();
  }
  return out + "*sqrt(" + p().str() + ")";
}

Quad operator+(const Quad& u, const Quad& v) {
  require_same_field(u, v);
  return Quad(u.ctx_, u.e_ + v.e_, u.f_ + v.f_);
}

Quad operator-(const Quad& u, const Quad& v) {
  require_same_field(u, v);
  return Quad(u.ctx_, u.e_ - v.e_, u.f_ - v.f_);
}

Quad operator*(const Quad& u, const Quad& v) {
  require_same_field(u, v);
  return Quad(u.ctx_, u.e_ * v.e_ + u.p() * u.f_ * v.f_, u.e_ * v.f_ + v.e_ * u.f_);
}

Quad operator/(const Quad& u, const Quad& v) {
  require_same_field(u, v);
  return u * v.inv();
}

namespace {

// Sign of u - v from double approximations, or 0 when they cannot decide.
// Each component is off by at most a few ulps relative to its own size, so
// the computed difference is within far less than 1e-14 * mag of the true
// one; outside the normal double range the filter stays out of the way.
int filtered_sign(const Quad& u, const Quad& v) {
  const double s = u.context()->root_approx();
  const double eu = u.e().to_double(), ev = v.e().to_double();
  const double fu = u.f().to_double(), fv = v.f().to_double();
  const double mag = std::fabs(eu) + std::fabs(ev) + (std::fabs(fu) + std::fabs(fv)) * s;
  if (!std::isfinite(mag) || mag < 1e-280 || mag > 1e280) return 0;
  const double diff = (eu - ev) + (fu - fv) * s;
  if (std::fabs(diff) <= 1e-14 * mag) return 0;
  return diff > 0 ? 1 : -1;
}

}  // namespace

int compare(const Quad& u, const Quad& v) {
  require_same_field(u, v);
  if (u.f() == v.f()) {
    const auto c = u.e() <=> v.e();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (const int s = filtered_sign(u, v); s != 0) return s;
  return (u - v).sign();
}

std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.str(); }

}  // namespace quadtile
