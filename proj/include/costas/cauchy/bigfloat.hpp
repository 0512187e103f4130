#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "costas/exact/rational.hpp"

namespace costas::cauchy {

using exact::Integer;
using exact::Rational;

/// Owning wrapper around an MPFR float. Results of binary operations take
/// the larger operand precision and round to nearest unless stated.
class BigFloat {
 public:
  /// Zero at the given precision (bits ≥ 2).
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_double(double value, mpfr_prec_t bits);
  /// √n for n ≥ 0.
  static BigFloat sqrt_of(const Integer& n, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  /// Same value rounded to another precision.
  BigFloat rounded(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat abs() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  int sign() const { return mpfr_sgn(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact binary value as a rational. Requires a finite value.
  Rational to_rational() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;
  /// Fixed notation with the given number of fractional digits.
  std::string to_fixed(int decimals) const;

 private:
  mpfr_t value_;
};

BigFloat exp(const BigFloat& x);
/// Natural log; throws DomainError for x ≤ 0.
BigFloat log(const BigFloat& x);

}  // namespace costas::cauchy
