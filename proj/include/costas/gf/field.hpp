#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace costas::gf {

using Residue = std::uint32_t;
/// Polynomial over GF(p), constant term first.
using Poly = std::vector<Residue>;

/// Ben-Or irreducibility test over GF(p). f must be monic of degree ≥ 1.
bool is_irreducible(const Poly& f, Residue p);

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), coefficients compared constant term first. For m = 1 this is x.
/// Requires p prime and p^m ≤ 2^20.
Poly find_irreducible(Residue p, unsigned m);

/// Human-readable form such as "x^2 + x + 1".
std::string poly_to_string(const Poly& f);

class FieldElem;

/// GF(p^m) realised as GF(p)[x]/(modulus). Create through make(); elements
/// keep the context alive.
class ExtFieldContext : public std::enable_shared_from_this<ExtFieldContext> {
 public:
  /// p prime, m ≥ 1, p^m ≤ 2^20; modulus from find_irreducible.
  static std::shared_ptr<const ExtFieldContext> make(Residue p, unsigned m);
  /// Explicit modulus; throws unless it is monic and irreducible.
  static std::shared_ptr<const ExtFieldContext> make(Residue p, Poly modulus);

  Residue p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const Poly& modulus() const { return modulus_; }
  /// Distinct primes dividing q − 1.
  const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

  FieldElem zero() const;
  FieldElem one() const;
  /// Class of x. In a prime field (m = 1, modulus x) this is zero.
  FieldElem x() const;
  /// Coefficients constant term first; shorter lists are zero-padded.
  FieldElem element(const Poly& coeffs) const;
  /// Image of an integer under Z → GF(p) ⊂ GF(q).
  FieldElem from_integer(long long value) const;
  /// Inverse of FieldElem::index().
  FieldElem from_index(std::uint64_t index) const;

  /// All q elements in canonical (constant-term-first lexicographic) order.
  std::vector<FieldElem> elements() const;

  bool same_field(const ExtFieldContext& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  // Arithmetic on raw coefficient vectors of length m.
  void add_into(Poly& acc, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;

 private:
  ExtFieldContext(Residue p, Poly modulus);
  Residue p_;
  unsigned m_;
  std::uint64_t q_;
  Poly modulus_;
  std::vector<std::uint64_t> factors_;
};

using FieldPtr = std::shared_ptr<const ExtFieldContext>;

/// Element of a finite field; coefficients in [0, p), length m.
class FieldElem {
 public:
  FieldElem(FieldPtr ctx, Poly coeffs);

  const ExtFieldContext& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  const Poly& coeffs() const { return coeffs_; }

  /// Σ cᵢ pⁱ, a dense key in [0, q).
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  /// Throws DomainError for zero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t exponent) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  /// Canonical order: coefficient lists compared constant term first.
  friend bool operator<(const FieldElem& a, const FieldElem& b);

  std::string to_string() const;

 private:
  void require_same(const FieldElem& other) const;
  FieldPtr ctx_;
  Poly coeffs_;
};

/// a^((q−1)/ℓ) ≠ 1 for every prime ℓ | q − 1. Throws DomainError for zero.
bool is_primitive(const FieldElem& a);

/// Exactly φ(q − 1) elements, in canonical order. Requires q ≤ 2^16.
std::vector<FieldElem> primitive_elements(const FieldPtr& ctx);

/// Smallest primitive element in canonical order.
FieldElem first_primitive(const FieldPtr& ctx);

/// Discrete logarithms to a fixed primitive base.
class DlogTable {
 public:
  /// Throws InvalidArgument if g is not primitive or q > 2^16.
  explicit DlogTable(const FieldElem& g);

  /// e in [0, q−2] with g^e = a. Throws DomainError for zero, InvalidArgument
  /// for a foreign element.
  std::uint64_t log(const FieldElem& a) const;
  /// g^e
  const FieldElem& power(std::uint64_t e) const { return powers_.at(e % powers_.size()); }
  std::size_t size() const { return powers_.size(); }
  const FieldElem& base() const { return powers_.at(1 % powers_.size()); }

 private:
  FieldPtr ctx_;
  std::vector<std::int64_t> log_by_index_;  // -1 for zero
  std::vector<FieldElem> powers_;
};

}  // namespace costas::gf
