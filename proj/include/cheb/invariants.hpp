#pragma once

// Seeded randomized invariant runs shared by the CLI selftest and the test
// suites. Each run draws its own instances from a 64-bit seed.

#include <cstdint>
#include <string>
#include <vector>

namespace cheb {

enum class Invariant { pell, compose, dh, log_linear };

inline constexpr Invariant kAllInvariants[] = {Invariant::pell, Invariant::compose, Invariant::dh,
                                               Invariant::log_linear};

std::string to_string(Invariant which);

struct InvariantTally {
  Invariant which = Invariant::pell;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0
};

/// pell:       t^2 - (a^2-1) u^2 == 1 for random 64-bit m, a and n < 2^64
/// compose:    T_n(T_k(a)) == T_nk(a) == T_k(T_n(a)), random 64-bit m, n, k < 2^20
/// dh:         both parties agree, random prime p < 2^61, g, secrets < 2^40
/// log_linear: ladder and three-term recurrence agree, m < 2^32, n < 5000
InvariantTally run_invariant(Invariant which, std::uint64_t samples, std::uint64_t seed);

}  // namespace cheb
