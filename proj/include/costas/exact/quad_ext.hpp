#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "costas/exact/rational.hpp"

namespace costas::exact {

/// a + b·√d with rational a, b and a fixed squarefree radicand d ≥ 2.
///
/// Binary operations require both operands to share d; mixed radicands throw
/// DomainError rather than promoting to a biquadratic field.
class QuadExt {
 public:
  /// Throws InvalidArgument unless d is squarefree and ≥ 2.
  QuadExt(Integer d, Rational a, Rational b);
  static QuadExt from_rational(Integer d, Rational a);

  const Integer& d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  int sign() const;

  /// a − b√d
  QuadExt conjugate() const;
  /// a² − d·b², nonzero unless the value is zero.
  Rational norm() const;
  QuadExt inverse() const;
  QuadExt pow(long exponent) const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  QuadExt& operator+=(const Rational& rhs);
  QuadExt& operator-=(const Rational& rhs);
  QuadExt& operator*=(const Rational& rhs);
  QuadExt& operator/=(const Rational& rhs);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator+(QuadExt x, const Rational& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const Rational& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const Rational& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const Rational& y) { return x /= y; }
  friend QuadExt operator+(const Rational& x, QuadExt y) { return y += x; }
  friend QuadExt operator*(const Rational& x, QuadExt y) { return y *= x; }
  friend QuadExt operator-(const Rational& x, const QuadExt& y) { return -y + x; }

  /// Same radicand required.
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  /// Exact comparison against a rational.
  std::strong_ordering compare(const Rational& r) const;

  /// Approximate value; diagnostics only, never used for decisions.
  double approx() const;

  /// "a + b*sqrt(d)" with a, b as num/den.
  std::string to_string() const;

 private:
  struct Trusted {};
  QuadExt(Trusted, Integer d, Rational a, Rational b)
      : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_field(const QuadExt& other) const;
  Integer d_;
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// Sign of a + b√d using only rational arithmetic.
int surd_sign(const Rational& a, const Rational& b, const Integer& d);

}  // namespace costas::exact
