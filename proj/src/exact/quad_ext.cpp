#include "costas/exact/quad_ext.hpp"

#include <cmath>
#include <ostream>

#include "costas/error.hpp"
#include "costas/exact/quadratic.hpp"

namespace costas::exact {

namespace {

std::strong_ordering from_sign(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

int surd_sign(const Rational& a, const Rational& b, const Integer& d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with the larger square wins. a² = b²d is
  // impossible for squarefree d ≥ 2 with b ≠ 0.
  const Rational a2 = a * a;
  const Rational b2d = b * b * Rational(d);
  return a2 > b2d ? sa : sb;
}

QuadExt::QuadExt(Integer d, Rational a, Rational b)
    : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
  if (d_ < 2 || !is_squarefree(d_))
    throw InvalidArgument("quadratic radicand must be squarefree and >= 2, got " + d_.get_str());
}

QuadExt QuadExt::from_rational(Integer d, Rational a) { return QuadExt(std::move(d), std::move(a), Rational(0)); }

int QuadExt::sign() const { return surd_sign(a_, b_, d_); }

QuadExt QuadExt::conjugate() const { return QuadExt(Trusted{}, d_, a_, -b_); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt(" + d_.get_str() + "))");
  const Rational n = norm();
  return QuadExt(Trusted{}, d_, a_ / n, -b_ / n);
}

QuadExt QuadExt::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadExt result(Trusted{}, d_, Rational(1), Rational(0));
  QuadExt base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

QuadExt QuadExt::operator-() const { return QuadExt(Trusted{}, d_, -a_, -b_); }

void QuadExt::require_same_field(const QuadExt& other) const {
  if (d_ != other.d_)
    throw DomainError("mixed radicands sqrt(" + d_.get_str() + ") and sqrt(" + other.d_.get_str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d_);
  const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw DomainError("division by zero");
  return *this *= rhs.inverse();
}

QuadExt& QuadExt::operator+=(const Rational& rhs) {
  a_ += rhs;
  return *this;
}

QuadExt& QuadExt::operator-=(const Rational& rhs) {
  a_ -= rhs;
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

QuadExt& QuadExt::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  a_ /= rhs;
  b_ /= rhs;
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  x.require_same_field(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  x.require_same_field(y);
  return from_sign(surd_sign(x.a_ - y.a_, x.b_ - y.b_, x.d_));
}

std::strong_ordering QuadExt::compare(const Rational& r) const { return from_sign(surd_sign(a_ - r, b_, d_)); }

double QuadExt::approx() const {
  return a_.raw().get_d() + b_.raw().get_d() * std::sqrt(d_.get_d());
}

std::string QuadExt::to_string() const {
  return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + d_.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace costas::exact
