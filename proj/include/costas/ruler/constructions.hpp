#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costas/gf/field.hpp"

namespace costas::ruler {

/// Strictly increasing non-negative integer marks.
class IntRuler {
 public:
  IntRuler() = default;
  /// Throws InvalidArgument unless marks are non-negative and strictly increasing.
  explicit IntRuler(std::vector<std::int64_t> marks);

  const std::vector<std::int64_t>& marks() const { return marks_; }
  std::size_t markings() const { return marks_.size(); }
  std::int64_t length() const { return marks_.empty() ? 0 : marks_.back() - marks_.front(); }
  bool is_sidon() const;

  friend bool operator==(const IntRuler&, const IntRuler&) = default;

 private:
  std::vector<std::int64_t> marks_;
};

/// 2pk + (k² mod p), k = 0..p−1.
IntRuler erdos_turan(std::uint64_t p);

/// (psk + (p−1)g^k) mod p(p−1), k = 0..p−2, sorted.
IntRuler ruzsa_lindstrom(std::uint64_t p, std::uint64_t g, std::uint64_t s);

/// Same marks, reducing g^k mod p first (cross-check for ruzsa_lindstrom).
IntRuler ruzsa_lindstrom_reduced(std::uint64_t p, std::uint64_t g, std::uint64_t s);

/// {i ∈ [1, q²−2] : g^i − g ∈ GF(q)} for q = p^m, with g the first primitive
/// element of GF(q²). Requires q² ≤ 2^16.
IntRuler bose_chowla(std::uint64_t p, unsigned m);

/// The q(q−1) differences of bose_chowla(p, m) modulo q²−1 are exactly the
/// nonzero residues not divisible by q+1.
bool bose_chowla_difference_check(std::uint64_t p, unsigned m);

/// ank² + k, k = 0..n−1, a ∈ {1, 2}.
IntRuler quadratic_ruler(std::uint64_t n, int a);

struct OptimalityReport {
  std::size_t m = 0;
  std::int64_t length = 0;
  /// m/√length to six decimals, "inf" for length 0.
  std::string ratio;
};

/// Throws InvalidArgument for an empty ruler.
OptimalityReport optimality_report(const IntRuler& ruler);

}  // namespace costas::ruler
