#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "costas/cauchy/bigfloat.hpp"
#include "costas/cauchy/sandbox.hpp"

namespace costas::cauchy {

constexpr mpfr_prec_t kDefaultPrecision = 128;

/// Σ q_i·√r_i, rounded to the requested precision (≥ 64 bits) from a sum
/// taken with 16 guard bits.
BigFloat embed(const Sandbox& sandbox, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);

/// Exact sign of the embedded value; refines precision until certified.
int embedded_sign(const Sandbox& sandbox, const HamelVector& v);

/// embed(apply(map, v)), the value f(v) of the Cauchy solution.
BigFloat f_value(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);

/// exp(f(v)).
BigFloat welch_g(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);
/// ln(1 − e^{f(v)}); throws DomainError unless f(v) < 0 (decided exactly).
BigFloat golomb_g(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);
/// exp(−welch_g(v)), in (0, 1).
BigFloat strip_h(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);
/// welch_g/(1 + welch_g), in (0, 1).
BigFloat moebius_h(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits = kDefaultPrecision);

/// Whether g(x+z) − g(x) = g(y+z) − g(y) can hold for g = exp∘f: exactly
/// when z = 0 or x = y, decided on coordinates.
bool costas_decide(const QLinearMap& map, const HamelVector& x, const HamelVector& y, const HamelVector& z);

/// Convergents of the continued fraction of x whose denominators are at most
/// max_den, in order.
std::vector<Rational> convergents(const Rational& x, const Integer& max_den);

struct ProbeResult {
  bool ok = false;
  Rational r1;
  Rational r2;
  /// r1·v1 + r2·v2
  HamelVector w;
  /// (embed(w), f(w)) and its max-norm distance to the target.
  double x = 0;
  double y = 0;
  double distance = 0;
};

/// Finds rational r1, r2 (denominators ≤ coeff_bound) putting the graph point
/// of w = r1·v1 + r2·v2 within eps of target in max-norm. Solves the real
/// 2×2 system, then walks the convergents of both coefficients, confirming
/// each candidate by re-embedding. A result with ok = false means no
/// convergent within the bound was close enough. Throws InvalidArgument when
/// (v1, f(v1)) and (v2, f(v2)) are linearly dependent, decided exactly.
ProbeResult density_probe(const QLinearMap& map, const HamelVector& v1, const HamelVector& v2,
                          std::pair<double, double> target, double eps, const Integer& coeff_bound,
                          mpfr_prec_t bits = kDefaultPrecision);

/// Exact test that (embed(v1), embed(w1)) and (embed(v2), embed(w2)) are
/// linearly independent: the determinant expands into a ℚ-combination of
/// square roots of squarefree integers, zero iff every coefficient is zero.
bool independent(const Sandbox& sandbox, const HamelVector& v1, const HamelVector& w1, const HamelVector& v2,
                 const HamelVector& w2);

}  // namespace costas::cauchy
