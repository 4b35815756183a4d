#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quadtile {

/// Arbitrary-precision rational number kept in canonical form: positive
/// denominator, numerator and denominator coprime, zero stored as 0/1.
///
/// Backed by GMP's mpq_t; every arithmetic result is canonicalized by GMP,
/// so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "num" or "num/den" with an optional leading '-'. No whitespace,
  /// no '+', no decimal point. Throws Error(ParseError) otherwise.
  static Rational parse(std::string_view text);

  std::string str() const;

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// True when the value is the square of a rational. Exact.
  bool is_square() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;
  double to_double() const { return value_.get_d(); }

  /// Total bit length of numerator and denominator; used to rank "small"
  /// values in search heuristics.
  std::size_t bit_size() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  /// Throws Error(DivisionByZero) when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace quadtile
