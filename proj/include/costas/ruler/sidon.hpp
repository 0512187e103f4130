#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "costas/error.hpp"

namespace costas::ruler {

/// x1 + x2 = x3 + x4 with {x1, x2} ≠ {x3, x4}.
template <class T>
using Quadruple = std::array<T, 4>;

template <class T>
struct SidonReport {
  bool ok = true;
  std::optional<Quadruple<T>> conflict;
};

namespace detail {

template <class T>
std::vector<T> sorted_distinct(std::span<const T> marks) {
  std::vector<T> sorted(marks.begin(), marks.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("Sidon test needs pairwise distinct marks");
  return sorted;
}

}  // namespace detail

/// Difference form: all C(m, 2) positive differences are distinct. Pairs are
/// scanned (i, j), i < j, in ascending order of the sorted marks; the first
/// repeat b − a = d − c is reported as the sum quadruple (a, d, b, c).
template <class T>
SidonReport<T> verify_sidon(std::span<const T> marks) {
  const std::vector<T> s = detail::sorted_distinct(marks);
  std::map<T, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      T d = s[j] - s[i];
      auto [it, inserted] = seen.try_emplace(std::move(d), i, j);
      if (!inserted) {
        const auto [a, b] = it->second;
        return {false, Quadruple<T>{s[a], s[j], s[b], s[i]}};
      }
    }
  }
  return {};
}

/// Sum form: all sums x_i + x_j with i ≤ j are distinct.
template <class T>
SidonReport<T> verify_sidon_sums(std::span<const T> marks) {
  const std::vector<T> s = detail::sorted_distinct(marks);
  std::map<T, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      T sum = s[i] + s[j];
      auto [it, inserted] = seen.try_emplace(std::move(sum), i, j);
      if (!inserted) {
        const auto [a, b] = it->second;
        return {false, Quadruple<T>{s[a], s[b], s[i], s[j]}};
      }
    }
  }
  return {};
}

template <class T>
SidonReport<T> verify_sidon(const std::vector<T>& marks) {
  return verify_sidon(std::span<const T>(marks));
}

template <class T>
SidonReport<T> verify_sidon_sums(const std::vector<T>& marks) {
  return verify_sidon_sums(std::span<const T>(marks));
}

/// Distinct differences modulo n: for distinct marks a ≠ b, the residues
/// (a − b) mod n never repeat. Marks are reduced mod n first and must stay
/// distinct.
struct ModularSidonReport {
  bool ok = true;
  /// (a, b, c, d) with a − b ≡ c − d (mod n).
  std::optional<std::array<std::int64_t, 4>> conflict;
};
ModularSidonReport verify_sidon_modular(std::span<const std::int64_t> marks, std::int64_t modulus);

}  // namespace costas::ruler
