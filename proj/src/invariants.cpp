#include "cheb/invariants.hpp"

#include <random>

#include "cheb/crypto.hpp"
#include "cheb/modarith.hpp"
#include "cheb/primes.hpp"

namespace cheb {

std::string to_string(Invariant which) {
  switch (which) {
    case Invariant::pell:
      return "pell";
    case Invariant::compose:
      return "compose";
    case Invariant::dh:
      return "dh";
    case Invariant::log_linear:
      return "log_linear";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::string describe(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  return "a=" + std::to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
}

bool pell_case(Rng& rng, std::string& why) {
  const std::uint64_t m = draw(rng, 2, ~std::uint64_t{0});
  const std::uint64_t a = draw(rng, 0, m - 1);
  const std::uint64_t n = draw(rng, 0, ~std::uint64_t{0});
  const Modulus mod(m);
  const ChebPair w = cheb_eval(RingElement(to_integer(a), mod), n);
  if (pell_norm(w) == RingElement(1, mod)) {
    return true;
  }
  why = describe(a, n, m);
  return false;
}

bool compose_case(Rng& rng, std::string& why) {
  const std::uint64_t m = draw(rng, 2, ~std::uint64_t{0});
  const std::uint64_t a = draw(rng, 0, m - 1);
  const std::uint64_t n = draw(rng, 1, (1u << 20) - 1);
  const std::uint64_t k = draw(rng, 1, (1u << 20) - 1);
  if (cheb_compose_check(RingElement(to_integer(a), Modulus(m)), to_integer(n), to_integer(k))) {
    return true;
  }
  why = describe(a, n, m) + " k=" + std::to_string(k);
  return false;
}

bool dh_case(Rng& rng, std::string& why) {
  std::uint64_t p = draw(rng, 5, std::uint64_t{1} << 61) | 1;
  while (!is_prime(p)) {
    p += 2;
  }
  const std::uint64_t g = draw(rng, 2, p - 2);
  const std::uint64_t x = draw(rng, 1, std::uint64_t{1} << 40);
  const std::uint64_t y = draw(rng, 1, std::uint64_t{1} << 40);
  const DhTranscript t = dh_demo(to_integer(p), to_integer(g), to_integer(x), to_integer(y));
  if (t.alice.shared && t.bob.shared && *t.alice.shared == *t.bob.shared) {
    return true;
  }
  why = "p=" + std::to_string(p) + " g=" + std::to_string(g) + " secrets=" + std::to_string(x) + "," +
        std::to_string(y);
  return false;
}

bool log_linear_case(Rng& rng, std::string& why) {
  const std::uint64_t m = draw(rng, 2, std::uint64_t{1} << 32);
  const std::uint64_t a = draw(rng, 0, m - 1);
  const std::uint64_t n = draw(rng, 0, 4999);
  // T_0 = 1, T_1 = a; U_{-1} = 0, U_0 = 1.
  std::uint64_t t_prev = 1 % m;
  std::uint64_t t = a;
  std::uint64_t u_prev = 0;
  std::uint64_t u = 1 % m;
  const std::uint64_t two_a = word::addmod(a, a, m);
  if (n == 0) {
    t = t_prev;
    u = u_prev;
  }
  for (std::uint64_t k = 1; k < n; ++k) {
    const std::uint64_t t_next = word::submod(word::mulmod(two_a, t, m), t_prev, m);
    const std::uint64_t u_next = word::submod(word::mulmod(two_a, u, m), u_prev, m);
    t_prev = t;
    t = t_next;
    u_prev = u;
    u = u_next;
  }
  const ChebPair w = cheb_eval(RingElement(to_integer(a), Modulus(m)), n);
  if (w.t.value() == to_integer(t) && w.u.value() == to_integer(u)) {
    return true;
  }
  why = describe(a, n, m);
  return false;
}

}  // namespace

InvariantTally run_invariant(Invariant which, std::uint64_t samples, std::uint64_t seed) {
  Rng rng(seed ^ (static_cast<std::uint64_t>(which) * 0x9e3779b97f4a7c15ULL));
  InvariantTally tally{which, samples, 0, {}};
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::string why;
    bool ok = false;
    switch (which) {
      case Invariant::pell:
        ok = pell_case(rng, why);
        break;
      case Invariant::compose:
        ok = compose_case(rng, why);
        break;
      case Invariant::dh:
        ok = dh_case(rng, why);
        break;
      case Invariant::log_linear:
        ok = log_linear_case(rng, why);
        break;
    }
    if (!ok && tally.failures++ == 0) {
      tally.first_failure = why;
    }
  }
  return tally;
}

}  // namespace cheb
