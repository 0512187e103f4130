#include "costas/cauchy/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

#include "costas/error.hpp"

namespace costas::cauchy {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

std::string format(const char* spec, int digits, mpfr_srcptr value) {
  char* text = nullptr;
  if (mpfr_asprintf(&text, spec, digits, value) < 0) throw Error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(text, &mpfr_free_str);
  return std::string(owned.get());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw InvalidArgument("precision out of range");
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rnd) : BigFloat(bits) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), rnd);
}

BigFloat BigFloat::from_double(double value, mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt_of(const Integer& n, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  if (sgn(n) < 0) throw DomainError("square root of a negative integer");
  BigFloat out(bits);
  mpfr_set_z(out.value_, n.get_mpz_t(), MPFR_RNDN);
  // Exact when n fits in the working precision, which holds for radicands.
  mpfr_sqrt(out.value_, out.value_, rnd);
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(mpfr_prec_t bits, mpfr_rnd_t rnd) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, rnd);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.sign() == 0) throw DomainError("division by zero");
  BigFloat out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return Rational(Integer(q.get_num()), Integer(q.get_den()));
}

std::string BigFloat::to_string(int digits) const { return format("%.*Re", std::max(digits, 1) - 1, value_); }

std::string BigFloat::to_fixed(int decimals) const { return format("%.*Rf", std::max(decimals, 0), value_); }

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  BigFloat out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace costas::cauchy
