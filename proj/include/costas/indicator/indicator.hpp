#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "costas/exact/quad_ext.hpp"
#include "costas/exact/quadratic.hpp"

namespace costas::indicator {

using exact::Integer;
using exact::QuadExt;
using exact::Rational;

/// f(x) = xⁿ(1 + a·1_ℚ(x)) with 1 + a = cⁿ.
class IndicatorParams {
 public:
  /// n ∈ {2, 3}, c > 0, c ≠ 1; otherwise InvalidArgument.
  IndicatorParams(int n, Rational c);

  int n() const { return n_; }
  const Rational& c() const { return c_; }
  const Rational& a() const { return a_; }

 private:
  int n_;
  Rational c_;
  Rational a_;
};

/// A real number known exactly: rational, or a + b√d with b ≠ 0. The
/// alternative held is the value of 1_ℚ.
class RealRep {
 public:
  RealRep(Rational value);  // NOLINT(google-explicit-constructor)
  /// Collapses to the rational alternative when b = 0.
  RealRep(QuadExt value);  // NOLINT(google-explicit-constructor)
  RealRep(exact::ExactRoot value);  // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const QuadExt& surd() const { return std::get<QuadExt>(value_); }
  int sign() const;

  RealRep operator+(const Rational& r) const;
  /// Differences of values in the same field (rational, or one radicand).
  /// Throws DomainError for two surds over different radicands.
  RealRep operator-(const RealRep& rhs) const;
  RealRep pow(long e) const;

  /// Exact equality. Surds over different squarefree radicands are never
  /// equal since √d₁, √d₂ and 1 are linearly independent over ℚ.
  friend bool operator==(const RealRep& x, const RealRep& y);

  std::string to_string() const;

 private:
  std::variant<Rational, QuadExt> value_;
};

/// xⁿcⁿ for rational x, xⁿ otherwise. Throws InvalidArgument for x < 0.
RealRep eval_f(const RealRep& x, const IndicatorParams& params);

/// The y with (y+z)² − y² = c²[(x+z)² − x²], namely (c²(2xz+z²) − z²)/(2z).
/// c is unrestricted here. Throws InvalidArgument for z = 0.
Rational forced_y(const Rational& x, const Rational& z, const Rational& c);

/// Exact preimage of a positive rational under f for n = 2: √y/c when y is
/// a rational square, the surd √y otherwise.
RealRep preimage(const Rational& y, const IndicatorParams& params);

struct Witness {
  Rational x;
  Rational z;
  QuadExt y;
  /// f(x+z) − f(x) and f(y+z) − f(y); equal, which breaks the Costas property.
  RealRep lhs;
  RealRep rhs;
};

/// Positive irrational y with 3zy² + 3z²y + z³ = c³[(x+z)³ − x³], checked
/// exactly against f for n = 3. Empty when that root is rational or not
/// positive. x, z > 0 required (InvalidArgument otherwise).
std::optional<Witness> witness_n3(const Rational& x, const Rational& z, const Rational& c);

struct ScanOptions {
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  /// Numerators and denominators are drawn from [1, bound].
  std::uint64_t bound = 1000;
  unsigned threads = 1;
};

struct ScanViolation {
  RealRep x;
  RealRep y;
  Rational z;
};

struct ScanReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// Trial kinds: QQ, QA, AQ, AA (rational/irrational x and y), equal (x = y),
  /// forced (y = forced_y(x, z)), forced_out_of_domain (forced y ≤ 0, skipped).
  std::map<std::string, std::uint64_t> branch_histogram;
  /// Forced trials whose two differences coincided (expected 0).
  std::uint64_t forced_equalities = 0;
  std::optional<ScanViolation> first_violation;
};

/// Random check of f(x+z) − f(x) = f(y+z) − f(y) ⇒ x = y for n = 2 over
/// x, y ∈ ℚ₊ ∪ {q√d}, z ∈ ℚ₊*. Trials are split into fixed blocks with their
/// own generator streams, so the report does not depend on thread count.
ScanReport costas_scan(const IndicatorParams& params, const ScanOptions& options);

}  // namespace costas::indicator
