#include "costas/exact/quadratic.hpp"

#include "costas/error.hpp"

namespace costas::exact {

SquarefreeSplit squarefree_decompose(const Integer& n) {
  if (n < 1) throw InvalidArgument("squarefree_decompose needs n >= 1, got " + n.get_str());
  Integer rest = n;
  Integer square = 1;
  Integer kernel = 1;
  const auto strip = [&](const Integer& p) {
    unsigned exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) square *= p;
    if (exponent % 2 == 1) kernel *= p;
  };
  strip(Integer(2));
  for (Integer p = 3; p * p <= rest; p += 2) strip(p);
  // Every factor up to √rest has been stripped, so rest is 1 or a prime.
  if (rest > 1) kernel *= rest;
  return {square, kernel};
}

bool is_squarefree(const Integer& n) {
  if (n < 1) return false;
  return squarefree_decompose(n).square_root == 1;
}

ExactRoot exact_square_root(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of negative rational " + r.to_string());
  if (r.is_square()) return exact_sqrt(r);
  // √(N/D) = √(N·D)/D = s√k / D.
  const Integer nd = r.num() * r.den();
  const SquarefreeSplit split = squarefree_decompose(nd);
  return QuadExt(split.kernel, Rational(0), Rational(split.square_root, r.den()));
}

QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C) {
  if (A.is_zero()) throw InvalidArgument("solve_quadratic: leading coefficient is zero");
  QuadraticRoots out;
  out.discriminant = B * B - Rational(4) * A * C;
  if (out.discriminant.sign() < 0) return out;

  const Rational two_a = Rational(2) * A;
  const ExactRoot sqrt_disc = exact_square_root(out.discriminant);
  if (const auto* s = std::get_if<Rational>(&sqrt_disc)) {
    Rational lo = (-B - *s) / two_a;
    Rational hi = (-B + *s) / two_a;
    if (hi < lo) std::swap(lo, hi);
    out.roots.emplace(ExactRoot(lo), ExactRoot(hi));
    return out;
  }
  const auto& surd = std::get<QuadExt>(sqrt_disc);
  QuadExt lo = (-surd - B) / two_a;
  QuadExt hi = (surd - B) / two_a;
  if (hi < lo) std::swap(lo, hi);
  out.roots.emplace(ExactRoot(lo), ExactRoot(hi));
  return out;
}

}  // namespace costas::exact
