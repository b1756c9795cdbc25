#include <gtest/gtest.h>

#include <numeric>

#include "cheb/criteria.hpp"
#include "cheb/errors.hpp"
#include "cheb/primes.hpp"
#include "oracles.hpp"

using namespace cheb;

namespace {

std::vector<std::uint64_t> numbers(const std::vector<PseudoprimeVerdict>& vs) {
  std::vector<std::uint64_t> out;
  for (const auto& v : vs) {
    out.push_back(to_u64(v.n));
  }
  return out;
}

/// Full test at n from the integer recurrence and brute Jacobi via factors.
bool full_oracle(std::uint64_t n, long long a) {
  int eps = 1, delta = 1;
  for (auto [p, e] : factorize(n)) {
    const oracle::Squares sq(p);
    for (int i = 0; i < e; ++i) {
      eps *= sq.legendre(a * a - 1);
      delta *= sq.legendre(2 * (a + 1));
    }
  }
  const std::uint64_t half = (n - eps) / 2;
  const auto [t, u] = oracle::cheb_linear(static_cast<std::uint64_t>(a), half, n);
  return t == (delta > 0 ? 1 : n - 1) && u == 0;
}

}  // namespace

TEST(Characters, Examples) {
  EXPECT_EQ(characters(19, 23), (CharPair{-1, -1}));
  EXPECT_EQ(characters(2, 23), (CharPair{1, 1}));
  EXPECT_EQ(characters(1, 23).eps, 0);
  EXPECT_THROW(characters(2, 24), UsageError);
  EXPECT_THROW(characters(2, 1), UsageError);
}

TEST(Characters, MatchSquareTable) {
  for (std::uint64_t p : primes_between(3, 200)) {
    const oracle::Squares sq(p);
    for (long long a = 0; a < static_cast<long long>(p); ++a) {
      const CharPair c = characters(to_integer(static_cast<std::int64_t>(a)), to_integer(p));
      EXPECT_EQ(c.eps, sq.legendre(a * a - 1));
      EXPECT_EQ(c.delta, sq.legendre(2 * (a + 1)));
    }
  }
}

TEST(Euler, HoldsAtSmallPrimesAgainstRecurrence) {
  for (std::uint64_t p : primes_between(5, 400)) {
    const oracle::Squares sq(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      const long long x = static_cast<long long>(a);
      const int eps = sq.legendre(x * x - 1);
      if (eps == 0) {
        EXPECT_THROW(euler_congruences(to_integer(a), to_integer(p)), DomainError);
        continue;
      }
      const int delta = sq.legendre(2 * (x + 1));
      const auto [t, u] = oracle::cheb_linear(a, (p - eps) / 2, p);
      EXPECT_EQ(t, delta > 0 ? 1 : p - 1);
      EXPECT_EQ(u, 0u);
      const EulerCongruences c = euler_congruences(to_integer(a), to_integer(p));
      EXPECT_TRUE(c.all_mod_p()) << a << " mod " << p;
      EXPECT_TRUE(c.t_half_mod_p2) << a << " mod " << p;
    }
  }
}

TEST(Euler, Examples) {
  EXPECT_TRUE(euler_test(19, 23));
  EXPECT_TRUE(euler_test_modp2(19, 23));
  EXPECT_TRUE(euler_test(Integer(3), Integer("1000000007")));
}

TEST(Wieferich, KnownHitsAndEmptyBases) {
  EXPECT_EQ(wieferich_search(2, 100000).size(), 1u);
  EXPECT_EQ(wieferich_search(2, 100000)[0].p, 103u);
  std::vector<std::uint64_t> ps;
  for (const auto& h : wieferich_search(13, 100000)) {
    ps.push_back(h.p);
  }
  EXPECT_EQ(ps, (std::vector<std::uint64_t>{5, 43, 71}));
  for (int base : {8, 9, 10, 11}) {
    EXPECT_TRUE(wieferich_search(base, 100000).empty()) << base;
  }
}

TEST(Wieferich, MatchesRecurrenceOracle) {
  for (std::int64_t base = 2; base <= 18; ++base) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t p : primes_between(5, 3000)) {
      const oracle::Squares sq(p);
      const long long a = base;
      const int eps = sq.legendre(a * a - 1);
      if (eps == 0) {
        continue;
      }
      if (oracle::cheb_linear(static_cast<std::uint64_t>(base), (p - eps) / 2, p * p).second == 0) {
        expected.push_back(p);
      }
    }
    std::vector<std::uint64_t> got;
    for (const auto& h : wieferich_search(base, 3000)) {
      got.push_back(h.p);
    }
    EXPECT_EQ(got, expected) << "base " << base;
  }
}

TEST(Wieferich, MinPrimeAndDeterminism) {
  EXPECT_EQ(wieferich_search(9, 1000, {}, 3).front().p, 3u);
  EXPECT_TRUE(wieferich_search(9, 1000).empty());
  EXPECT_EQ(wieferich_search(4, 200000, {1}), wieferich_search(4, 200000, {4}));
  EXPECT_THROW(wieferich_search(1, 100), UsageError);
  EXPECT_THROW(wieferich_search(2, 4'000'000'000ULL), ResourceError);
}

TEST(Pseudoprimes, BaseTwoFullToTwentyThousand) {
  EXPECT_EQ(numbers(pseudoprime_search(2, 20000, PseudoprimeKind::full)),
            (std::vector<std::uint64_t>{989, 2701, 10609, 11041, 15505, 18721, 18817}));
}

TEST(Pseudoprimes, FullSearchMatchesOracle) {
  for (long long a : {2LL, 3LL, 5LL}) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 9; n <= 6000; n += 2) {
      if (oracle::is_prime(n) || std::gcd(n, static_cast<std::uint64_t>(a * a - 1)) != 1) {
        continue;
      }
      if (full_oracle(n, a)) {
        expected.push_back(n);
      }
    }
    EXPECT_EQ(numbers(pseudoprime_search(a, 6000, PseudoprimeKind::full)), expected) << a;
  }
}

TEST(Pseudoprimes, FullImpliesWeak) {
  const auto weak = numbers(pseudoprime_search(2, 20000, PseudoprimeKind::weak));
  for (std::uint64_t n : numbers(pseudoprime_search(2, 20000, PseudoprimeKind::full))) {
    EXPECT_TRUE(std::binary_search(weak.begin(), weak.end(), n)) << n;
  }
}

TEST(Pseudoprimes, StrongRejectsExactlyTwo) {
  EXPECT_EQ(numbers(pseudoprime_search(2, 20000, PseudoprimeKind::strong)),
            (std::vector<std::uint64_t>{989, 2701, 10609, 11041, 18817}));
}

TEST(Pseudoprimes, StrongProfiles) {
  auto shown = [](std::uint64_t n) {
    std::vector<long> out;
    for (const Integer& r : display_profile(strong_profile(to_integer(n), 2))) {
      out.push_back(r.get_si());
    }
    return out;
  };
  EXPECT_EQ(shown(989), (std::vector<long>{1}));
  EXPECT_EQ(shown(2701), (std::vector<long>{0, -1}));
  EXPECT_EQ(shown(10609), (std::vector<long>{9083, 0, -1, 1}));
  EXPECT_EQ(shown(11041), (std::vector<long>{0, -1, 1, 1, 1}));
  EXPECT_EQ(shown(15505), (std::vector<long>{8416, 4431, 8861, 1}));
  EXPECT_EQ(shown(18721), (std::vector<long>{14063, 17370, 18527, 387, 1}));
  EXPECT_EQ(shown(18817), (std::vector<long>{18791, 1351, 18720, 0, -1, 1, 1}));
}

TEST(Pseudoprimes, ProfileEntriesAreSuccessiveSquares) {
  const PseudoprimeVerdict v = strong_profile(18817, 2);
  for (std::size_t i = 1; i < v.profile.size(); ++i) {
    const Integer prev = v.profile[i - 1];
    EXPECT_EQ(mod_floor(2 * prev * prev - 1, Integer(18817)), v.profile[i]);
  }
}

TEST(Pseudoprimes, Preconditions) {
  EXPECT_THROW(full_pseudoprime_test(15, 4), DomainError);  // gcd(15, 15) > 1
  EXPECT_THROW(full_pseudoprime_test(16, 3), UsageError);
  EXPECT_THROW(parse_pseudoprime_kind("medium"), UsageError);
  EXPECT_TRUE(full_pseudoprime_test(23, 2).passed);
}

TEST(LucasLehmer, MersenneExponents) {
  std::vector<unsigned> found;
  for (unsigned p = 2; p <= 127; ++p) {
    if (is_prime(std::uint64_t{p}) && lucas_lehmer(p)) {
      found.push_back(p);
    }
  }
  EXPECT_EQ(found, (std::vector<unsigned>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127}));
  EXPECT_THROW(lucas_lehmer(9), UsageError);
}

TEST(LucasLehmer, ResidueEqualsChebyshev) {
  for (unsigned p : {3u, 11u, 23u, 29u, 31u}) {
    const LucasLehmerTrace t = lucas_lehmer_trace(p);
    EXPECT_EQ(t.residue, t.chebyshev) << p;
  }
}

TEST(Taxicab, Is1729) {
  EXPECT_EQ(taxicab_search(100000), std::optional<std::uint64_t>(1729));
  EXPECT_EQ(taxicab_search(1728), std::nullopt);
}
