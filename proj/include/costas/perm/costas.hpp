#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "costas/gf/field.hpp"

namespace costas::perm {

/// A permutation of {1..n} stored as the 1-based image sequence f(1..n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless values is a permutation of {1..n}.
  explicit Permutation(std::vector<int> values);

  std::size_t n() const { return values_.size(); }
  const std::vector<int>& values() const { return values_; }
  /// f(i) for 1-based i.
  int operator()(std::size_t i) const { return values_.at(i - 1); }

  Permutation reversed() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_csv() const;

 private:
  std::vector<int> values_;
};

/// f(i+t) − f(i) = f(j+t) − f(j) with i < j (1-based).
struct Violation {
  int lag;
  int i;
  int j;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CostasReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Difference-triangle test; lists every colliding pair on every lag.
CostasReport verify_costas(const Permutation& perm);
/// Validates the sequence first (throws InvalidArgument for non-permutations).
CostasReport verify_costas(std::span<const int> values);

/// Fast boolean form of verify_costas for already-validated input.
bool is_costas(std::span<const int> values);

/// Welch W1: f(i) = alpha^(i−1+c) mod p, i = 1..p−1. Requires alpha
/// primitive mod p and c in [0, p−2].
Permutation welch(std::uint64_t p, std::uint64_t alpha, std::uint64_t c);

/// Golomb G2: alpha^i + beta^f(i) = 1 over ctx, i = 1..q−2. Requires q ≥ 4
/// and both elements primitive.
Permutation golomb(const gf::FieldPtr& ctx, const gf::FieldElem& alpha, const gf::FieldElem& beta);

struct EnumerateOptions {
  std::size_t max_order = 10;
  unsigned threads = 1;
};

/// Every Costas permutation of order n in lexicographic order. Backtracking
/// with per-lag difference sets; branches on f(1) may run concurrently.
/// Throws InvalidArgument when n exceeds options.max_order.
std::vector<Permutation> enumerate_costas(std::size_t n, const EnumerateOptions& options = {});

}  // namespace costas::perm
