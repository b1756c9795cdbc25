#include "cheb/criteria.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/primes.hpp"

namespace cheb {

namespace {

void require_odd_modulus(const Integer& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw UsageError("expected an odd modulus >= 3, got " + n.get_str());
  }
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  auto r = static_cast<__int128>(a) % static_cast<__int128>(m);
  if (r < 0) {
    r += m;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

CharPair characters(const Integer& a, const Integer& n) {
  require_odd_modulus(n);
  return {jacobi(Integer(a * a - 1), n), jacobi(Integer(2 * (a + 1)), n)};
}

EulerCongruences euler_congruences(const Integer& a, const Integer& p) {
  EulerCongruences out;
  out.chars = characters(a, p);
  const int eps = out.chars.eps;
  const int delta = out.chars.delta;
  if (eps == 0) {
    throw DomainError("a == +-1 mod " + p.get_str() + ": eps(a) = 0");
  }
  const Modulus mod(p);
  const RingElement base(a, mod);
  const Integer lower = (p - eps) / 2;
  const Integer upper = (p + eps) / 2;

  const ChebPair w_lower = cheb_eval(base, lower);
  const ChebPair w_upper = cheb_eval(base, upper);
  out.t_half = w_lower.t == RingElement(delta, mod);
  out.u_half = w_lower.u == RingElement(0, mod);
  out.t_half_plus = w_upper.t == RingElement(delta, mod) * base;
  out.u_half_plus = w_upper.u == RingElement(delta * eps, mod);

  const Modulus mod2(Integer(p * p));
  out.t_half_mod_p2 = cheb_eval(RingElement(a, mod2), lower).t == RingElement(delta, mod2);
  return out;
}

bool euler_test(const Integer& a, const Integer& p) {
  const EulerCongruences c = euler_congruences(a, p);
  return c.t_half && c.u_half;
}

bool euler_test_modp2(const Integer& a, const Integer& p) { return euler_congruences(a, p).t_half_mod_p2; }

// ---------------------------------------------------------------------------
// Wieferich

std::vector<WieferichHit> wieferich_search(std::int64_t base, std::uint64_t limit, SearchOptions options,
                                           std::uint64_t min_prime) {
  if (base == 0 || base == 1 || base == -1) {
    throw UsageError("Wieferich base must not be 0 or +-1");
  }
  if (limit >= 3'000'000'000ULL) {
    throw ResourceError("Wieferich search needs p^2 < 2^63; limit must be below 3e9");
  }
  const std::vector<std::uint64_t> primes = primes_between(std::max<std::uint64_t>(min_prime, 3), limit);
  return parallel_collect<WieferichHit>(
      primes.size(), options.threads,
      [&](std::size_t i) -> std::optional<WieferichHit> {
        const std::uint64_t p = primes[i];
        const std::uint64_t ap = reduce(base, p);
        const std::uint64_t disc = word::submod(word::mulmod(ap, ap, p), 1, p);
        if (disc == 0) {
          return std::nullopt;
        }
        const int eps = word::jacobi(disc, p);
        const std::uint64_t half = eps > 0 ? (p - 1) / 2 : (p + 1) / 2;
        const std::uint64_t p2 = p * p;
        const word::Pair w = word::cheb_eval(reduce(base, p2), half, p2);
        if (w.u != 0) {
          return std::nullopt;
        }
        return WieferichHit{p, base, w.u};
      },
      2048);
}

// ---------------------------------------------------------------------------
// Pseudoprimes

std::string to_string(PseudoprimeKind kind) {
  switch (kind) {
    case PseudoprimeKind::weak:
      return "weak";
    case PseudoprimeKind::full:
      return "full";
    case PseudoprimeKind::strong:
      return "strong";
  }
  return "?";
}

PseudoprimeKind parse_pseudoprime_kind(const std::string& text) {
  if (text == "weak") {
    return PseudoprimeKind::weak;
  }
  if (text == "full") {
    return PseudoprimeKind::full;
  }
  if (text == "strong") {
    return PseudoprimeKind::strong;
  }
  throw UsageError("unknown pseudoprime kind '" + text + "' (weak|full|strong)");
}

bool weak_pseudoprime_test(const Integer& n, const Integer& base) {
  require_odd_modulus(n);
  const Modulus mod(n);
  const RingElement a(base, mod);
  return cheb_eval(a, n).t == a;
}

namespace {

struct HalfIndex {
  CharPair chars;
  Integer half;  // (n - eps) / 2
};

HalfIndex half_index(const Integer& n, const Integer& base) {
  require_odd_modulus(n);
  Integer g;
  const Integer disc = base * base - 1;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), disc.get_mpz_t());
  if (g != 1) {
    throw DomainError("gcd(" + n.get_str() + ", a^2-1) = " + g.get_str() + " > 1");
  }
  const CharPair chars = characters(base, n);
  return {chars, Integer((n - chars.eps) / 2)};
}

bool full_congruences(const Integer& n, const Integer& base, const HalfIndex& h) {
  const Modulus mod(n);
  const ChebPair w = cheb_eval(RingElement(base, mod), h.half);
  return w.t == RingElement(h.chars.delta, mod) && w.u == RingElement(0, mod);
}

}  // namespace

PseudoprimeVerdict full_pseudoprime_test(const Integer& n, const Integer& base) {
  const HalfIndex h = half_index(n, base);
  return {n, base, PseudoprimeKind::full, full_congruences(n, base, h), {}};
}

PseudoprimeVerdict strong_profile(const Integer& n, const Integer& base) {
  const HalfIndex h = half_index(n, base);
  PseudoprimeVerdict v{n, base, PseudoprimeKind::strong, false, {}};
  const auto twos = static_cast<unsigned long>(mpz_scan1(h.half.get_mpz_t(), 0));
  Integer q = h.half >> twos;
  const Modulus mod(n);
  const RingElement a(base, mod);
  for (unsigned long i = 0; i <= twos; ++i) {
    v.profile.push_back(cheb_eval(a, q).t.value());
    q <<= 1;
  }
  const Integer minus_one = n - 1;
  bool ordered = true;
  for (std::size_t i = 1; i < v.profile.size(); ++i) {
    const Integer& prev = v.profile[i - 1];
    if (v.profile[i] == 1 && prev != 1 && prev != minus_one) {
      ordered = false;
    }
    if (v.profile[i] == minus_one && prev != 0) {
      ordered = false;
    }
  }
  v.passed = ordered && full_congruences(n, base, h);
  return v;
}

std::vector<Integer> display_profile(const PseudoprimeVerdict& verdict) {
  std::vector<Integer> out;
  out.reserve(verdict.profile.size());
  for (const Integer& r : verdict.profile) {
    out.push_back(r == verdict.n - 1 ? Integer(-1) : r);
  }
  return out;
}

std::vector<PseudoprimeVerdict> pseudoprime_search(std::int64_t base, std::uint64_t limit, PseudoprimeKind kind,
                                                   SearchOptions options) {
  if (limit < 9) {
    throw UsageError("pseudoprime search limit must be at least 9");
  }
  const std::size_t count = (limit - 9) / 2 + 1;
  const Integer a = to_integer(base);
  const Integer disc = a * a - 1;
  return parallel_collect<PseudoprimeVerdict>(
      count, options.threads,
      [&](std::size_t i) -> std::optional<PseudoprimeVerdict> {
        const std::uint64_t n = 9 + 2 * i;
        if (is_prime(n)) {
          return std::nullopt;
        }
        const Integer nz = to_integer(n);
        if (kind == PseudoprimeKind::weak) {
          if (!weak_pseudoprime_test(nz, a)) {
            return std::nullopt;
          }
          return PseudoprimeVerdict{nz, a, kind, true, {}};
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), disc.get_mpz_t());
        if (g != 1) {
          return std::nullopt;
        }
        PseudoprimeVerdict v = kind == PseudoprimeKind::full ? full_pseudoprime_test(nz, a) : strong_profile(nz, a);
        if (!v.passed) {
          return std::nullopt;
        }
        return v;
      },
      1024);
}

// ---------------------------------------------------------------------------
// Lucas-Lehmer

LucasLehmerTrace lucas_lehmer_trace(unsigned p) {
  if (!is_prime(std::uint64_t{p})) {
    throw UsageError("Lucas-Lehmer exponent must be prime, got " + std::to_string(p));
  }
  LucasLehmerTrace trace;
  trace.p = p;
  trace.mersenne = (Integer(1) << p) - 1;
  const Integer& m = trace.mersenne;
  if (p == 2) {
    trace.residue = Integer(4) % m;
    trace.chebyshev = (2 * cheb_eval(RingElement(2, Modulus(m)), 1).t.value()) % m;
    trace.is_prime = true;
    return trace;
  }
  Integer s = 4;
  for (unsigned k = 1; k + 2 <= p; ++k) {
    s = s * s - 2;
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
  }
  trace.residue = s;
  const Integer index = Integer(1) << (p - 2);
  trace.chebyshev = mod_floor(2 * cheb_eval(RingElement(2, Modulus(m)), index).t.value(), m);
  trace.is_prime = sgn(trace.residue) == 0;
  return trace;
}

bool lucas_lehmer(unsigned p) {
  const LucasLehmerTrace trace = lucas_lehmer_trace(p);
  if (trace.residue != trace.chebyshev) {
    throw std::logic_error("Lucas-Lehmer residue disagrees with 2 T_{2^(p-2)}(2) for p = " + std::to_string(p));
  }
  return trace.is_prime;
}

// ---------------------------------------------------------------------------
// Taxi-cab

std::optional<std::uint64_t> taxicab_search(std::uint64_t limit) {
  for (std::uint64_t n = 9; n <= limit; n += 2) {
    if (is_prime(n)) {
      continue;
    }
    if (word::powmod(2, n, n) != 2 % n) {
      continue;
    }
    if (word::cheb_eval(2 % n, n, n).t == 2 % n) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace cheb
