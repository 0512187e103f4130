#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "costas/exact/rational.hpp"

namespace costas::cauchy {

using exact::Integer;
using exact::Rational;

/// Basis element b_id embedded in ℝ as √radicand.
struct BasisSymbol {
  int id = 0;
  std::int64_t radicand = 1;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// A finite ℚ-independent family of reals. Square roots of distinct
/// squarefree integers are linearly independent over ℚ, so coordinates in
/// this basis are unique.
class Sandbox {
 public:
  static constexpr std::size_t kMaxSymbols = 16;

  /// Throws InvalidArgument for an empty list, more than 16 symbols, repeated
  /// ids, repeated radicands or a non-squarefree radicand.
  explicit Sandbox(std::vector<BasisSymbol> symbols);
  /// Symbols 0..k−1 on the first k squarefree radicands 1, 2, 3, 5, 6, …
  static Sandbox standard(std::size_t k);

  const std::vector<BasisSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool has(int id) const { return position_.contains(id); }
  /// Throws InvalidArgument for an unknown id.
  std::size_t position(int id) const;
  std::int64_t radicand(int id) const { return symbols_[position(id)].radicand; }

  friend bool operator==(const Sandbox& a, const Sandbox& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<BasisSymbol> symbols_;
  std::map<int, std::size_t> position_;
};

/// Finite rational combination Σ q_id·b_id; zero entries are never stored.
class HamelVector {
 public:
  HamelVector() = default;
  static HamelVector basis(int id, Rational q = Rational(1));

  const std::map<int, Rational>& coords() const { return coords_; }
  Rational coord(int id) const;
  void set(int id, Rational q);
  bool is_zero() const { return coords_.empty(); }

  HamelVector& operator+=(const HamelVector& rhs);
  HamelVector& operator-=(const HamelVector& rhs);
  HamelVector& operator*=(const Rational& q);
  friend HamelVector operator+(HamelVector a, const HamelVector& b) { return a += b; }
  friend HamelVector operator-(HamelVector a, const HamelVector& b) { return a -= b; }
  friend HamelVector operator*(const Rational& q, HamelVector v) { return v *= q; }
  HamelVector operator-() const;

  friend bool operator==(const HamelVector&, const HamelVector&) = default;

  /// "q0*b0 + q1*b1", "0" for the zero vector.
  std::string to_string() const;

 private:
  std::map<int, Rational> coords_;
};

/// The ℚ-linear bijection fixed by b_i ↦ scale_i · b_perm(i).
class QLinearMap {
 public:
  /// perm[i] and scale[i] belong to the i-th symbol of the sandbox. Throws
  /// InvalidArgument unless perm is a bijection of the symbol ids and every
  /// scale is nonzero.
  QLinearMap(Sandbox sandbox, std::vector<int> perm, std::vector<Rational> scale);
  static QLinearMap identity(Sandbox sandbox, Rational scale = Rational(1));
  /// Exchanges the first two symbols, unit scales.
  static QLinearMap swap(Sandbox sandbox);

  const Sandbox& sandbox() const { return sandbox_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Rational>& scale() const { return scale_; }

  /// Throws InvalidArgument for a coordinate outside the sandbox.
  HamelVector apply(const HamelVector& v) const;
  QLinearMap inverse() const;

  /// Identity permutation with one common scale, i.e. f(x) = cx.
  bool is_scalar() const;
  /// Scalar on the given symbol ids (permutation fixes them, scales equal).
  bool is_scalar_on(const std::vector<int>& ids) const;

 private:
  Sandbox sandbox_;
  std::vector<int> perm_;
  std::vector<Rational> scale_;
};

/// apply(v1 + v2) = apply(v1) + apply(v2), exactly.
bool additivity_check(const QLinearMap& map, const HamelVector& v1, const HamelVector& v2);
/// apply(q·v) = q·apply(v), exactly.
bool homogeneity_check(const QLinearMap& map, const Rational& q, const HamelVector& v);

}  // namespace costas::cauchy
