#include "costas/exact/rational.hpp"

#include <ostream>

#include "costas/error.hpp"

namespace costas::exact {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (s.empty()) throw InvalidArgument("empty integer in rational literal");
    std::string buf(s);
    if (buf.front() == '+') buf.erase(0, 1);
    for (std::size_t i = 0; i < buf.size(); ++i) {
      const char ch = buf[i];
      if (!(ch >= '0' && ch <= '9') && !(i == 0 && ch == '-'))
        throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    }
    if (buf == "-" || buf.empty())
      throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    return Integer(buf, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational literal with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = n;
  out.get_den() = d;
  return Rational(std::move(out));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_square() const {
  return sign() >= 0 && mpz_perfect_square_p(value_.get_num_mpz_t()) &&
         mpz_perfect_square_p(value_.get_den_mpz_t());
}

std::size_t Rational::hash() const {
  const auto limb_hash = [](const mpz_t z) -> std::size_t {
    std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < mpz_size(z); ++i)
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
  };
  const std::size_t a = limb_hash(value_.get_num_mpz_t());
  const std::size_t b = limb_hash(value_.get_den_mpz_t());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational exact_sqrt(const Rational& r) {
  if (!r.is_square()) throw DomainError("not the square of a rational: " + r.to_string());
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.raw().get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(n, d);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace costas::exact
