#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "costas/exact/quad_ext.hpp"
#include "costas/exact/rational.hpp"

namespace costas::exact {

/// n = square·kernel with kernel squarefree. Trial division; intended for
/// desk-scale inputs.
struct SquarefreeSplit {
  Integer square_root;  // s
  Integer kernel;       // d
};

/// Throws InvalidArgument for n < 1.
SquarefreeSplit squarefree_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

/// An exact real root: rational, or a + b√d with b ≠ 0.
using ExactRoot = std::variant<Rational, QuadExt>;

struct QuadraticRoots {
  Rational discriminant;
  /// Empty when the discriminant is negative. Otherwise the two roots in
  /// ascending order (equal for a double root).
  std::optional<std::pair<ExactRoot, ExactRoot>> roots;

  bool real() const { return roots.has_value(); }
  bool rational() const { return roots && std::holds_alternative<Rational>(roots->first); }
};

/// Roots of A·y² + B·y + C = 0. Throws InvalidArgument when A = 0.
QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C);

/// √r for r ≥ 0 as an exact root: rational when r is a rational square.
ExactRoot exact_square_root(const Rational& r);

}  // namespace costas::exact
