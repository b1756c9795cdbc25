#include "cheb/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cheb/modarith.hpp"

namespace cheb {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) {
      return n == p;
    }
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = word::powmod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = word::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (fits_u64(n)) {
    return is_prime(to_u64(n));
  }
  if (sgn(n) < 0) {
    return false;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) {
    return out;
  }
  lo = std::max<std::uint64_t>(lo, 2);
  const std::uint64_t root = isqrt(hi);
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (small[i]) {
      base.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += i) {
        small[j] = false;
      }
    }
  }
  // segmented sieve over [lo, hi]
  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<bool> seg;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    seg.assign(end - start + 1, true);
    for (std::uint64_t p : base) {
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j <= end; j += p) {
        seg[j - start] = false;
      }
    }
    for (std::uint64_t i = start; i <= end; ++i) {
      if (seg[i - start]) {
        out.push_back(i);
      }
    }
    if (end == hi) {
      break;
    }
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) {
    --r;
  }
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(out[i] * pk);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) {
    phi = phi / p * (p - 1);
  }
  return phi;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) {
      return 0;
    }
    mu = -mu;
  }
  return mu;
}

bool is_squarefree(std::uint64_t n) { return mobius(n) != 0; }

}  // namespace cheb
