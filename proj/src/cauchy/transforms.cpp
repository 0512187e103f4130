#include "costas/cauchy/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "costas/error.hpp"
#include "costas/exact/quadratic.hpp"

namespace costas::cauchy {

namespace {

constexpr mpfr_prec_t kGuardBits = 16;

// Σ q_i√r_i at precision bits, plus Σ|q_i|√r_i for error control.
std::pair<BigFloat, BigFloat> weighted_sum(const Sandbox& sandbox, const HamelVector& v, mpfr_prec_t bits) {
  BigFloat sum(bits);
  BigFloat magnitude(bits);
  for (const auto& [id, q] : v.coords()) {
    const std::int64_t r = sandbox.radicand(id);
    BigFloat term(q, bits);
    if (r != 1) term = term * BigFloat::sqrt_of(Integer(static_cast<long>(r)), bits);
    sum = sum + term;
    magnitude = magnitude + term.abs();
  }
  return {std::move(sum), std::move(magnitude)};
}

void require_precision(mpfr_prec_t bits) {
  if (bits < 64) throw InvalidArgument("precision must be at least 64 bits");
}

// Σ over pairs of u_i·w_j·√(r_i r_j), grouped by squarefree kernel.
std::map<Integer, Rational> surd_product(const Sandbox& sandbox, const HamelVector& u, const HamelVector& w) {
  std::map<Integer, Rational> out;
  for (const auto& [i, qi] : u.coords()) {
    for (const auto& [j, qj] : w.coords()) {
      const Integer prod = Integer(static_cast<long>(sandbox.radicand(i))) * Integer(static_cast<long>(sandbox.radicand(j)));
      const auto split = exact::squarefree_decompose(prod);
      out[split.kernel] += qi * qj * Rational(split.square_root);
    }
  }
  return out;
}

}  // namespace

BigFloat embed(const Sandbox& sandbox, const HamelVector& v, mpfr_prec_t bits) {
  require_precision(bits);
  return weighted_sum(sandbox, v, bits + kGuardBits).first.rounded(bits);
}

int embedded_sign(const Sandbox& sandbox, const HamelVector& v) {
  if (v.is_zero()) return 0;
  for (mpfr_prec_t bits = 64; bits <= (1 << 20); bits *= 2) {
    const auto [sum, magnitude] = weighted_sum(sandbox, v, bits);
    // Each term carries relative error ≤ 3·2^−bits, each addition ≤ 2^−bits.
    BigFloat slack(magnitude);
    mpfr_mul_ui(slack.raw(), slack.raw(), static_cast<unsigned long>(v.coords().size() + 4), MPFR_RNDU);
    mpfr_mul_2si(slack.raw(), slack.raw(), -(bits - 1), MPFR_RNDU);
    if (sum.abs() > slack) return sum.sign();
  }
  throw Error("embedded_sign: could not certify the sign");
}

BigFloat f_value(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits) {
  return embed(map.sandbox(), map.apply(v), bits);
}

BigFloat welch_g(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits) {
  return exp(f_value(map, v, bits + kGuardBits)).rounded(bits);
}

BigFloat golomb_g(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits) {
  require_precision(bits);
  const HamelVector image = map.apply(v);
  if (embedded_sign(map.sandbox(), image) >= 0)
    throw DomainError("golomb_g: f(v) must be negative for ln(1 - e^f(v)) to be real");
  // Extra guard bits absorb the cancellation in 1 − e^f for f near 0.
  const mpfr_prec_t work = 2 * bits + kGuardBits;
  BigFloat t = -exp(embed(map.sandbox(), image, work));
  mpfr_log1p(t.raw(), t.raw(), MPFR_RNDN);
  return t.rounded(bits);
}

BigFloat strip_h(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits) {
  return exp(-welch_g(map, v, bits + kGuardBits)).rounded(bits);
}

BigFloat moebius_h(const QLinearMap& map, const HamelVector& v, mpfr_prec_t bits) {
  const BigFloat g = welch_g(map, v, bits + kGuardBits);
  return (g / (g + BigFloat(Rational(1), bits + kGuardBits))).rounded(bits);
}

bool costas_decide(const QLinearMap& map, const HamelVector& x, const HamelVector& y, const HamelVector& z) {
  return z.is_zero() || map.apply(x) == map.apply(y);
}

std::vector<Rational> convergents(const Rational& x, const Integer& max_den) {
  std::vector<Rational> out;
  // p_{k} = a_k p_{k−1} + p_{k−2}, likewise q.
  Integer p_prev = 1, p_prev2 = 0;
  Integer q_prev = 0, q_prev2 = 1;
  Integer num = x.num();
  Integer den = x.den();
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Integer p = a * p_prev + p_prev2;
    const Integer q = a * q_prev + q_prev2;
    if (q > max_den) break;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  return out;
}

bool independent(const Sandbox& sandbox, const HamelVector& v1, const HamelVector& w1, const HamelVector& v2,
                 const HamelVector& w2) {
  auto det = surd_product(sandbox, v1, w2);
  for (const auto& [kernel, q] : surd_product(sandbox, v2, w1)) det[kernel] -= q;
  return std::any_of(det.begin(), det.end(), [](const auto& entry) { return !entry.second.is_zero(); });
}

ProbeResult density_probe(const QLinearMap& map, const HamelVector& v1, const HamelVector& v2,
                          std::pair<double, double> target, double eps, const Integer& coeff_bound,
                          mpfr_prec_t bits) {
  require_precision(bits);
  if (!(eps > 0)) throw InvalidArgument("density_probe: eps must be positive");
  if (coeff_bound < 1) throw InvalidArgument("density_probe: coeff_bound must be >= 1");
  if (!std::isfinite(target.first) || !std::isfinite(target.second))
    throw InvalidArgument("density_probe: target must be finite");
  const Sandbox& sb = map.sandbox();
  const HamelVector f1 = map.apply(v1);
  const HamelVector f2 = map.apply(v2);
  if (!independent(sb, v1, f1, v2, f2)) throw InvalidArgument("density_probe: graph points of v1, v2 are dependent");

  const BigFloat a1 = embed(sb, v1, bits), b1 = embed(sb, f1, bits);
  const BigFloat a2 = embed(sb, v2, bits), b2 = embed(sb, f2, bits);
  const BigFloat t1 = BigFloat::from_double(target.first, bits);
  const BigFloat t2 = BigFloat::from_double(target.second, bits);
  const BigFloat det = a1 * b2 - a2 * b1;
  const Rational s1 = ((t1 * b2 - t2 * a2) / det).to_rational();
  const Rational s2 = ((a1 * t2 - b1 * t1) / det).to_rational();
  const auto c1 = convergents(s1, coeff_bound);
  const auto c2 = convergents(s2, coeff_bound);

  ProbeResult best;
  best.distance = INFINITY;
  const std::size_t steps = std::max(c1.size(), c2.size());
  for (std::size_t k = 0; k < steps; ++k) {
    const Rational& r1 = c1.empty() ? Rational(0) : c1[std::min(k, c1.size() - 1)];
    const Rational& r2 = c2.empty() ? Rational(0) : c2[std::min(k, c2.size() - 1)];
    HamelVector w = r1 * v1 + r2 * v2;
    const BigFloat px = embed(sb, w, bits);
    const BigFloat py = f_value(map, w, bits);
    const double dist = std::max((px - t1).abs().to_double(), (py - t2).abs().to_double());
    if (dist < best.distance) best = {false, r1, r2, w, px.to_double(), py.to_double(), dist};
    if (dist < eps) {
      best.ok = true;
      return best;
    }
  }
  return best;
}

}  // namespace costas::cauchy
