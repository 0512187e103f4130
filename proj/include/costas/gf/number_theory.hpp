#pragma once

#include <cstdint>
#include <vector>

// Word-sized helpers for the desk-scale parameters used by the constructions
// (primes, field orders and group orders all fit comfortably in 64 bits).
namespace costas::gf {

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n ≥ 1, ascending. Trial division.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Integer power; throws InvalidArgument on overflow of 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// True iff g generates the multiplicative group mod the prime p.
bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// All primitive roots mod p in [1, p−1], ascending.
std::vector<std::uint64_t> primitive_roots(std::uint64_t p);

}  // namespace costas::gf
