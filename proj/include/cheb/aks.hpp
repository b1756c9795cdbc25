#pragma once

// Polynomial congruences behind a Chebyshev take on AKS:
//   T_n(x) == x^n (mod n)          iff n is prime
//   T_n(x + a) == T_n(x) + a (mod n) iff n is prime, gcd(a, n) = 1
// plus the closed form of the coefficients a_k of T_n and the binomial step
// that makes a_p nonzero mod n for composite n.

#include <cstdint>

#include "cheb/integer.hpp"
#include "cheb/polynomial.hpp"

namespace cheb {

inline constexpr std::uint64_t kMaxPolyDegree = 10'000;

/// T_n(x) with coefficients mod m, by the three-term recurrence.
/// Throws ResourceError for n > kMaxPolyDegree.
ModPolynomial chebyshev_poly_mod(std::uint64_t n, std::uint64_t m);

/// T_n(x) == x^n as polynomials mod n. Even n: true only for n = 2.
bool prime_iff_power_check(std::uint64_t n);

/// T_n(x + a) == T_n(x) + a mod n. Throws DomainError when gcd(a, n) > 1.
bool shifted_congruence_check(std::uint64_t n, std::uint64_t a);

/// a_k = (-1)^k C(n-k-1, k-1) (n/k) 2^{n-2k-1}, the coefficient of x^{n-2k}
/// in T_n. 1 <= k <= n/2.
Integer coefficient_formula(std::uint64_t n, std::uint64_t k);

/// a_k = (-1)^k sum_{t=k}^{n/2} C(n, 2t) C(t, k): the defining double sum.
Integer coefficient_double_sum(std::uint64_t n, std::uint64_t k);

struct LucasStep {
  Integer binomial_mod_p;  // C(n-p-1, p-1) mod p
  bool low_digit_ok = false;  // lowest base-p digit of n-p-1 is p-1
  bool holds() const { return binomial_mod_p == 1 && low_digit_ok; }
};

/// n odd composite, p a prime divisor with n / p >= 3.
LucasStep lucas_step(std::uint64_t n, std::uint64_t p);
bool lucas_step_check(std::uint64_t n, std::uint64_t p);

}  // namespace cheb
