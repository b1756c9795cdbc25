#pragma once

// Classical prime plumbing: ground-truth primality, sieving and factoring.
// The searches use these only to label candidates, never to decide a
// Chebyshev test.

#include <cstdint>
#include <utility>
#include <vector>

#include "cheb/integer.hpp"

namespace cheb {

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Exact below 2^64, probabilistic (GMP, 40 rounds) above.
bool is_prime(const Integer& n);

/// All primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) { return primes_between(2, hi); }

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Trial division; fine for the desk-scale values factored here (< 2^40 or so).
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::uint64_t isqrt(std::uint64_t n);

}  // namespace cheb
