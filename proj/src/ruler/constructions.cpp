#include "costas/ruler/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "costas/error.hpp"
#include "costas/gf/number_theory.hpp"
#include "costas/ruler/sidon.hpp"

namespace costas::ruler {

namespace {

void require_prime(std::uint64_t p, const char* who) {
  if (!gf::is_prime(p)) throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

// Bounds keep every mark well inside int64.
constexpr std::uint64_t kMaxPrime = 1U << 20;

void validate_ruzsa(std::uint64_t p, std::uint64_t g, std::uint64_t s) {
  require_prime(p, "ruzsa_lindstrom");
  if (p > kMaxPrime) throw InvalidArgument("ruzsa_lindstrom: p too large");
  if (g == 0 || g >= p || !gf::is_primitive_root(g, p))
    throw InvalidArgument("ruzsa_lindstrom: " + std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
  if (s == 0 || std::gcd(s, p - 1) != 1)
    throw InvalidArgument("ruzsa_lindstrom: s must be positive and coprime to p-1");
}

IntRuler sorted_ruler(std::vector<std::int64_t> marks) {
  std::sort(marks.begin(), marks.end());
  return IntRuler(std::move(marks));
}

std::vector<std::int64_t> bose_chowla_set(std::uint64_t p, unsigned m, std::uint64_t& q_out) {
  require_prime(p, "bose_chowla");
  if (m == 0) throw InvalidArgument("bose_chowla: degree must be >= 1");
  const std::uint64_t q = gf::checked_pow(p, m);
  if (q > 256) throw InvalidArgument("bose_chowla: q^2 must not exceed 2^16");
  q_out = q;
  const auto field = gf::ExtFieldContext::make(static_cast<gf::Residue>(p), 2 * m);
  const gf::FieldElem g = gf::first_primitive(field);
  std::vector<std::int64_t> marks;
  const std::uint64_t top = q * q - 2;
  gf::FieldElem power = g;
  for (std::uint64_t i = 1; i <= top; ++i) {
    // GF(q) is the fixed field of the Frobenius y ↦ y^q.
    const gf::FieldElem shifted = power - g;
    if (shifted.pow(q) == shifted) marks.push_back(static_cast<std::int64_t>(i));
    power *= g;
  }
  if (marks.size() != q)
    throw Error("bose_chowla: expected " + std::to_string(q) + " marks, found " + std::to_string(marks.size()));
  return marks;
}

}  // namespace

IntRuler::IntRuler(std::vector<std::int64_t> marks) : marks_(std::move(marks)) {
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    if (marks_[i] < 0) throw InvalidArgument("ruler marks must be non-negative");
    if (i > 0 && marks_[i] <= marks_[i - 1]) throw InvalidArgument("ruler marks must be strictly increasing");
  }
}

bool IntRuler::is_sidon() const { return verify_sidon(marks_).ok; }

IntRuler erdos_turan(std::uint64_t p) {
  require_prime(p, "erdos_turan");
  if (p > kMaxPrime) throw InvalidArgument("erdos_turan: p too large");
  std::vector<std::int64_t> marks;
  marks.reserve(p);
  for (std::uint64_t k = 0; k < p; ++k) marks.push_back(static_cast<std::int64_t>(2 * p * k + (k * k) % p));
  return IntRuler(std::move(marks));
}

IntRuler ruzsa_lindstrom(std::uint64_t p, std::uint64_t g, std::uint64_t s) {
  validate_ruzsa(p, g, s);
  // Formula evaluated modulo p(p−1) throughout, so g^k is never cut down mod p.
  const std::uint64_t modulus = p * (p - 1);
  std::vector<std::int64_t> marks;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    const std::uint64_t term = (p * (s % modulus) % modulus * k + (p - 1) * gf::pow_mod(g, k, modulus)) % modulus;
    marks.push_back(static_cast<std::int64_t>(term));
  }
  return sorted_ruler(std::move(marks));
}

IntRuler ruzsa_lindstrom_reduced(std::uint64_t p, std::uint64_t g, std::uint64_t s) {
  validate_ruzsa(p, g, s);
  const std::uint64_t modulus = p * (p - 1);
  std::vector<std::int64_t> marks;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    const std::uint64_t term = (p * (s % modulus) % modulus * k + (p - 1) * gf::pow_mod(g, k, p)) % modulus;
    marks.push_back(static_cast<std::int64_t>(term));
  }
  return sorted_ruler(std::move(marks));
}

IntRuler bose_chowla(std::uint64_t p, unsigned m) {
  std::uint64_t q = 0;
  return IntRuler(bose_chowla_set(p, m, q));
}

bool bose_chowla_difference_check(std::uint64_t p, unsigned m) {
  std::uint64_t q = 0;
  const auto marks = bose_chowla_set(p, m, q);
  const auto n = static_cast<std::int64_t>(q * q - 1);
  std::vector<std::int64_t> diffs;
  for (const auto a : marks)
    for (const auto b : marks)
      if (a != b) diffs.push_back(((a - b) % n + n) % n);
  std::sort(diffs.begin(), diffs.end());
  std::vector<std::int64_t> expected;
  for (std::int64_t r = 1; r < n; ++r)
    if (r % static_cast<std::int64_t>(q + 1) != 0) expected.push_back(r);
  return diffs == expected;
}

IntRuler quadratic_ruler(std::uint64_t n, int a) {
  if (n == 0) throw InvalidArgument("quadratic_ruler: n must be >= 1");
  if (a != 1 && a != 2) throw InvalidArgument("quadratic_ruler: a must be 1 or 2");
  if (n > (1U << 20)) throw InvalidArgument("quadratic_ruler: n too large");
  std::vector<std::int64_t> marks;
  marks.reserve(n);
  const auto an = static_cast<std::int64_t>(n) * a;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) marks.push_back(an * k * k + k);
  return IntRuler(std::move(marks));
}

OptimalityReport optimality_report(const IntRuler& ruler) {
  if (ruler.markings() == 0) throw InvalidArgument("optimality_report: empty ruler");
  OptimalityReport report{ruler.markings(), ruler.length(), "inf"};
  if (report.length > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f",
                  static_cast<double>(report.m) / std::sqrt(static_cast<double>(report.length)));
    report.ratio = buf;
  }
  return report;
}

ModularSidonReport verify_sidon_modular(std::span<const std::int64_t> marks, std::int64_t modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  std::vector<std::int64_t> residues;
  residues.reserve(marks.size());
  for (const auto x : marks) residues.push_back((x % modulus + modulus) % modulus);
  std::vector<std::int64_t> sorted = residues;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("marks are not distinct modulo " + std::to_string(modulus));
  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = 0; j < marks.size(); ++j) {
      if (i == j) continue;
      const std::int64_t d = ((marks[i] - marks[j]) % modulus + modulus) % modulus;
      auto [it, inserted] = seen.try_emplace(d, marks[i], marks[j]);
      if (!inserted) return {false, std::array<std::int64_t, 4>{it->second.first, it->second.second, marks[i], marks[j]}};
    }
  }
  return {};
}

}  // namespace costas::ruler
