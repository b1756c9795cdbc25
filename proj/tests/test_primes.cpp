#include <gtest/gtest.h>

#include "cheb/primes.hpp"
#include "oracles.hpp"

using namespace cheb;

TEST(Primes, MillerRabinMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  }
}

TEST(Primes, StrongPseudoprimesRejected) {
  for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(Primes, SieveSegments) {
  const auto ps = primes_between(100, 200);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 100; n <= 200; ++n) {
    if (oracle::is_prime(n)) {
      expected.push_back(n);
    }
  }
  EXPECT_EQ(ps, expected);
  EXPECT_EQ(primes_up_to(1'000'000).size(), 78498u);
  EXPECT_EQ(primes_between(999'000, 1'000'000).size(), primes_up_to(1'000'000).size() - primes_up_to(998'999).size());
}

TEST(Primes, Factorize) {
  const Factorization f = factorize(15505);
  EXPECT_EQ(f, (Factorization{{5, 1}, {7, 1}, {443, 1}}));
  EXPECT_EQ(factorize(10609), (Factorization{{103, 2}}));
  EXPECT_TRUE(factorize(1).empty());
}

TEST(Primes, ArithmeticFunctions) {
  EXPECT_EQ(divisors(24), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 24}));
  EXPECT_EQ(euler_phi(24), 8u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(1), 1);
  EXPECT_TRUE(is_squarefree(2701));
  EXPECT_FALSE(is_squarefree(10609));
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295u);
  EXPECT_EQ(isqrt(24), 4u);
  EXPECT_EQ(isqrt(25), 5u);
}
