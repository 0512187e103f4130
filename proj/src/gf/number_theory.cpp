#include "costas/gf/number_theory.hpp"

#include <limits>

#include "costas/error.hpp"

namespace costas::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("distinct_prime_factors(0)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const std::uint64_t p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  u128 result = 1;
  u128 b = base % modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      throw InvalidArgument("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (!is_prime(p)) return false;
  g %= p;
  if (g == 0) return false;
  for (const std::uint64_t l : distinct_prime_factors(p - 1 == 0 ? 1 : p - 1))
    if (pow_mod(g, (p - 1) / l, p) == 1) return false;
  return true;
}

std::vector<std::uint64_t> primitive_roots(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 1; g < p; ++g)
    if (is_primitive_root(g, p)) out.push_back(g);
  return out;
}

}  // namespace costas::gf
