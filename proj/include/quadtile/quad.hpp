#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "quadtile/rational.hpp"

namespace quadtile {

class Quad;

/// The quadratic field Q[sqrt(p)] for a fixed positive rational p whose
/// square root is irrational. Instances are immutable and shared by every
/// Quad that lives in the field.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  /// Throws Error(NonPositiveRadicand) for p <= 0 and
  /// Error(RationalSquareRoot) when sqrt(p) is rational.
  static std::shared_ptr<const FieldContext> validate(const Rational& p);

  const Rational& p() const noexcept { return p_; }

  Quad make(const Rational& e, const Rational& f) const;
  Quad rational(const Rational& q) const;
  Quad zero() const;
  Quad one() const;

  bool same_field(const FieldContext& other) const noexcept {
    return this == &other || p_ == other.p_;
  }

 private:
  struct Token {};

 public:
  FieldContext(Token, Rational p);

  /// sqrt(p) rounded to double; used only to filter exact comparisons.
  double root_approx() const noexcept { return root_; }

 private:
  Rational p_;
  double root_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr validate_context(const Rational& p) { return FieldContext::validate(p); }

/// An element e + f*sqrt(p) of Q[sqrt(p)].
///
/// The pair (e, f) is unique for each value because sqrt(p) is irrational,
/// so equality is componentwise. Binary operations require both operands to
/// share the same p and throw Error(ContextMismatch) otherwise.
class Quad {
 public:
  Quad(FieldPtr ctx, Rational e, Rational f);

  const Rational& e() const noexcept { return e_; }
  const Rational& f() const noexcept { return f_; }
  const FieldPtr& context() const noexcept { return ctx_; }
  const Rational& p() const noexcept { return ctx_->p(); }

  bool is_zero() const noexcept { return e_.is_zero() && f_.is_zero(); }
  bool is_rational() const noexcept { return f_.is_zero(); }

  /// Exact sign of e + f*sqrt(p), computed without floating point.
  int sign() const;

  /// e^2 - p*f^2, i.e. the product with the conjugate.
  Rational norm() const;

  Quad conj() const { return Quad(ctx_, e_, -f_); }

  /// Throws Error(DivisionByZero) for zero.
  Quad inv() const;

  /// Floating point value. Rendering only.
  double approx() const;

  std::string str() const;

  Quad operator-() const { return Quad(ctx_, -e_, -f_); }

  friend Quad operator+(const Quad& u, const Quad& v);
  friend Quad operator-(const Quad& u, const Quad& v);
  friend Quad operator*(const Quad& u, const Quad& v);
  friend Quad operator/(const Quad& u, const Quad& v);
  friend Quad operator*(const Rational& q, const Quad& u) {
    return Quad(u.ctx_, q * u.e_, q * u.f_);
  }
  friend Quad operator*(const Quad& u, const Rational& q) { return q * u; }
  friend Quad operator+(const Quad& u, const Rational& q) { return Quad(u.ctx_, u.e_ + q, u.f_); }

  /// Value equality. Quads from different fields are never equal.
  friend bool operator==(const Quad& u, const Quad& v) {
    return u.ctx_->same_field(*v.ctx_) && u.e_ == v.e_ && u.f_ == v.f_;
  }

 private:
  FieldPtr ctx_;
  Rational e_;
  Rational f_;
};

/// Sign of u - v. Throws Error(ContextMismatch) across fields.
int compare(const Quad& u, const Quad& v);

inline bool operator<(const Quad& u, const Quad& v) { return compare(u, v) < 0; }
inline bool operator<=(const Quad& u, const Quad& v) { return compare(u, v) <= 0; }
inline bool operator>(const Quad& u, const Quad& v) { return compare(u, v) > 0; }
inline bool operator>=(const Quad& u, const Quad& v) { return compare(u, v) >= 0; }

std::ostream& operator<<(std::ostream& os, const Quad& q);

}  // namespace quadtile
