#include "cheb/aks.hpp"

#include <numeric>
#include <stdexcept>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/primes.hpp"

namespace cheb {

namespace {

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

ModPolynomial chebyshev_poly_mod(std::uint64_t n, std::uint64_t m) {
  if (n > kMaxPolyDegree) {
    throw ResourceError("T_n mod m is capped at degree " + std::to_string(kMaxPolyDegree));
  }
  std::vector<std::uint64_t> prev{1 % m};
  if (n == 0) {
    return {std::move(prev), m};
  }
  std::vector<std::uint64_t> cur{0, 1 % m};
  for (std::uint64_t k = 1; k < n; ++k) {
    // T_{k+1} = 2x T_k - T_{k-1}
    std::vector<std::uint64_t> next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] = word::addmod(cur[j], cur[j], m);
    }
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j] = word::submod(next[j], prev[j], m);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {std::move(cur), m};
}

bool prime_iff_power_check(std::uint64_t n) {
  if (n < 2) {
    throw UsageError("prime_iff_power_check needs n >= 2");
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  return chebyshev_poly_mod(n, n) == ModPolynomial::monomial(1, n, n);
}

bool shifted_congruence_check(std::uint64_t n, std::uint64_t a) {
  if (n < 2) {
    throw UsageError("shifted_congruence_check needs n >= 2");
  }
  if (std::gcd(a, n) != 1) {
    throw DomainError("shifted_congruence_check needs gcd(a, n) = 1");
  }
  const ModPolynomial t = chebyshev_poly_mod(n, n);
  return t.shift(a) == t + ModPolynomial({a % n}, n);
}

Integer coefficient_formula(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || 2 * k > n) {
    throw UsageError("coefficient_formula needs 1 <= k <= n/2");
  }
  Integer num = binomial(n - k - 1, k - 1) * to_integer(n);
  Integer den = to_integer(k);
  if (n >= 2 * k + 1) {
    num <<= static_cast<mp_bitcnt_t>(n - 2 * k - 1);
  } else {
    den *= 2;  // n = 2k: the power of two is 1/2
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("coefficient_formula: non-integral value for n = " + std::to_string(n) +
                           ", k = " + std::to_string(k));
  }
  Integer value = num / den;
  return k % 2 == 0 ? value : Integer(-value);
}

Integer coefficient_double_sum(std::uint64_t n, std::uint64_t k) {
  if (2 * k > n) {
    throw UsageError("coefficient_double_sum needs k <= n/2");
  }
  Integer sum = 0;
  for (std::uint64_t t = k; 2 * t <= n; ++t) {
    sum += binomial(n, 2 * t) * binomial(t, k);
  }
  return k % 2 == 0 ? sum : Integer(-sum);
}

LucasStep lucas_step(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || !is_prime(p) || n % p != 0) {
    throw UsageError("lucas_step needs a prime p dividing n");
  }
  if (n % 2 == 0 || n / p < 3) {
    throw UsageError("lucas_step needs odd composite n = a p with a >= 3");
  }
  LucasStep step;
  step.binomial_mod_p = binomial(n - p - 1, p - 1) % to_integer(p);
  step.low_digit_ok = (n - p - 1) % p == p - 1;
  return step;
}

bool lucas_step_check(std::uint64_t n, std::uint64_t p) { return lucas_step(n, p).holds(); }

}  // namespace cheb
