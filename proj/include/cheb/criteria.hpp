#pragma once

// The two characters eps(a) = ((a^2-1)/p), delta(a) = ((2(a+1))/p), the
// Chebyshev-Euler congruences built on them, and the pseudoprime,
// Wieferich, Lucas-Lehmer and taxi-cab searches.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheb/integer.hpp"

namespace cheb {

struct CharPair {
  int eps = 0;
  int delta = 0;

  friend bool operator==(const CharPair&, const CharPair&) = default;
};

/// (eps, delta) with Jacobi symbols mod n. n odd, n >= 3.
CharPair characters(const Integer& a, const Integer& n);

/// The four congruences for w_a^{(p-eps)/2} and w_a^{(p+eps)/2}, plus the
/// mod p^2 lift of the first.
struct EulerCongruences {
  CharPair chars;
  bool t_half = false;         // T_{(p-e)/2}(a) == delta        mod p
  bool u_half = false;         // U_{(p-e)/2-1}(a) == 0          mod p
  bool t_half_plus = false;    // T_{(p+e)/2}(a) == delta*a      mod p
  bool u_half_plus = false;    // U_{(p+e)/2-1}(a) == delta*eps  mod p
  bool t_half_mod_p2 = false;  // T_{(p-e)/2}(a) == delta        mod p^2

  bool all_mod_p() const { return t_half && u_half && t_half_plus && u_half_plus; }
};

/// Throws DomainError when eps = 0 (a == +-1 mod p).
EulerCongruences euler_congruences(const Integer& a, const Integer& p);

/// T_{(p-eps)/2}(a) == delta and U_{(p-eps)/2-1}(a) == 0 mod p.
bool euler_test(const Integer& a, const Integer& p);
/// T_{(p-eps)/2}(a) == delta mod p^2.
bool euler_test_modp2(const Integer& a, const Integer& p);

struct WieferichHit {
  std::uint64_t p = 0;
  std::int64_t base = 0;
  std::uint64_t u_mod_p2 = 0;

  friend bool operator==(const WieferichHit&, const WieferichHit&) = default;
};

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Primes min_prime <= p <= limit, p not dividing a^2-1, with
/// U_{(p-eps)/2-1}(a) == 0 mod p^2. Ascending.
std::vector<WieferichHit> wieferich_search(std::int64_t base, std::uint64_t limit, SearchOptions options = {},
                                           std::uint64_t min_prime = 5);

enum class PseudoprimeKind { weak, full, strong };

std::string to_string(PseudoprimeKind kind);
PseudoprimeKind parse_pseudoprime_kind(const std::string& text);

struct PseudoprimeVerdict {
  Integer n;
  Integer base;
  PseudoprimeKind kind = PseudoprimeKind::full;
  bool passed = false;
  /// Strong kind only: [T_{Q}(a), T_{2Q}(a), ..., T_{(n-eps)/2}(a)] mod n,
  /// canonical residues.
  std::vector<Integer> profile;
};

/// T_n(a) == a mod n.
bool weak_pseudoprime_test(const Integer& n, const Integer& base);

/// Both congruences of the Chebyshev-Euler criterion mod n, with Jacobi
/// characters. Throws DomainError if gcd(n, a^2-1) > 1.
PseudoprimeVerdict full_pseudoprime_test(const Integer& n, const Integer& base);

/// Full test plus the 2-power profile. Fails on a 1 not preceded by +-1 or a
/// -1 not preceded by 0 (the first entry has no predecessor and is exempt).
PseudoprimeVerdict strong_profile(const Integer& n, const Integer& base);

/// Profile entries printed the way the literature writes them: 0, 1, -1 for
/// the special residues, canonical values otherwise.
std::vector<Integer> display_profile(const PseudoprimeVerdict& verdict);

/// Odd composites 9 <= n <= limit passing the given test, ascending. For
/// full/strong, n sharing a factor with a^2-1 is skipped.
std::vector<PseudoprimeVerdict> pseudoprime_search(std::int64_t base, std::uint64_t limit, PseudoprimeKind kind,
                                                   SearchOptions options = {});

struct LucasLehmerTrace {
  unsigned p = 0;
  Integer mersenne;        // 2^p - 1
  Integer residue;         // s_{p-2} mod M_p
  Integer chebyshev;       // 2 T_{2^{p-2}}(2) mod M_p
  bool is_prime = false;
};

/// s_0 = 4, s_{k+1} = s_k^2 - 2 mod M_p, next to 2 T_{2^{p-2}}(2) mod M_p.
/// p = 2 is answered directly (M_2 = 3).
LucasLehmerTrace lucas_lehmer_trace(unsigned p);
/// Throws std::logic_error if the iteration and the Chebyshev route disagree.
bool lucas_lehmer(unsigned p);

/// Least odd composite n <= limit with n | 2^n - 2 and n | T_n(2) - 2.
std::optional<std::uint64_t> taxicab_search(std::uint64_t limit);

}  // namespace cheb
