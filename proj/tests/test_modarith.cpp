#include <gtest/gtest.h>

#include <random>

#include "cheb/errors.hpp"
#include "cheb/invariants.hpp"
#include "cheb/modarith.hpp"
#include "oracles.hpp"

using namespace cheb;

namespace {

RingElement el(long v, std::uint64_t m) { return RingElement(to_integer(static_cast<std::int64_t>(v)), Modulus(m)); }

}  // namespace

TEST(Modulus, RejectsSmall) {
  EXPECT_THROW(Modulus(Integer(1)), UsageError);
  EXPECT_THROW(Modulus(Integer(-5)), UsageError);
  EXPECT_NO_THROW(Modulus(Integer(2)));
}

TEST(Modulus, WordPathBoundary) {
  EXPECT_TRUE(Modulus((Integer(1) << 63) - 1).fits_word());
  EXPECT_FALSE(Modulus(Integer(1) << 63).fits_word());
}

TEST(RingElement, CanonicalAndCentered) {
  const RingElement x = el(-1, 23);
  EXPECT_EQ(x.value(), 22);
  EXPECT_EQ(x.centered(), -1);
  EXPECT_EQ(el(11, 23).centered(), 11);
  EXPECT_EQ((el(20, 23) + el(5, 23)).value(), 2);
  EXPECT_EQ((el(3, 23) - el(5, 23)).value(), 21);
  EXPECT_EQ((el(7, 23) * el(10, 23)).value(), 1);
  EXPECT_THROW(el(1, 23) + el(1, 29), UsageError);
}

TEST(ChebPair, IdentityIsNeutral) {
  const RingElement a = el(19, 23);
  const ChebPair w = unit_pair(a);
  EXPECT_EQ(pair_mul(identity_pair(a), w, a), w);
}

TEST(ChebPair, SquareOfUnitAt23) {
  const RingElement a = el(19, 23);
  const ChebPair sq = pair_mul(unit_pair(a), unit_pair(a), a);
  EXPECT_EQ(sq.t.value(), 8);
  EXPECT_EQ(sq.u.value(), 15);
  EXPECT_EQ(sq.n, 2);
}

TEST(ChebPair, MismatchThrows) {
  const RingElement a = el(2, 23);
  EXPECT_THROW(pair_mul(unit_pair(a), unit_pair(el(3, 23)), a), UsageError);
  EXPECT_THROW(pair_mul(unit_pair(a), unit_pair(el(2, 29)), a), UsageError);
}

TEST(ChebPair, ProductMatchesRecurrence) {
  const std::uint64_t m = 1'000'000'000;
  const RingElement a = el(2, m);
  const ChebPair w = pair_mul(cheb_eval(a, 2), cheb_eval(a, 3), a);
  const auto [t, u] = oracle::cheb_linear(2, 5, m);
  EXPECT_EQ(w.t.value(), to_integer(t));
  EXPECT_EQ(w.u.value(), to_integer(u));
  EXPECT_EQ(w, cheb_eval(a, 5));
}

TEST(ChebEval, SmallCases) {
  const ChebPair w = cheb_eval(el(2, 101), 1);
  EXPECT_EQ(w.t.value(), 2);
  EXPECT_EQ(w.u.value(), 1);
  const ChebPair z = cheb_eval(el(5, 101), 0);
  EXPECT_EQ(z.t.value(), 1);
  EXPECT_EQ(z.u.value(), 0);
  const ChebPair full = cheb_eval(el(19, 23), 24);
  EXPECT_EQ(full.t.value(), 1);
  EXPECT_EQ(full.u.value(), 0);
}

TEST(ChebEval, IterateListAt23) {
  const std::vector<std::pair<int, int>> expected = {
      {19, 1},  {8, 15}, {9, 17}, {12, 10}, {10, 18}, {0, 7},  {13, 18}, {11, 10},
      {14, 17}, {15, 15}, {4, 1}, {22, 0},  {4, 22},  {15, 8}, {14, 6},  {11, 13},
      {13, 5},  {0, 16}, {10, 5}, {12, 13}, {9, 6},   {8, 8},  {19, 22}, {1, 0}};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const ChebPair w = cheb_eval(el(19, 23), n);
    EXPECT_EQ(w.t.value(), expected[n - 1].first) << "n=" << n;
    EXPECT_EQ(w.u.value(), expected[n - 1].second) << "n=" << n;
  }
}

TEST(ChebEval, LongIndexAgainstRecurrence) {
  const auto [t, u] = oracle::cheb_linear(3, 1000, 999983);
  const ChebPair w = cheb_eval(el(3, 999983), 1000);
  EXPECT_EQ(w.t.value(), to_integer(t));
  EXPECT_EQ(w.u.value(), to_integer(u));
}

TEST(ChebEval, ExactValuesAgainstIntegerRecurrence) {
  // Modulus larger than every value involved: the residues are the integers.
  const Modulus huge(Integer(1) << 400);
  for (std::uint64_t n = 0; n <= 60; ++n) {
    const auto [t, u] = oracle::cheb_linear_exact(7, n);
    const ChebPair w = cheb_eval(RingElement(Integer(7), huge), n);
    EXPECT_EQ(w.t.value(), t) << n;
    EXPECT_EQ(w.u.value(), u) << n;
  }
}

TEST(ChebEval, BigModulusMatchesWordPath) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = (rng() >> 2) | 3;
    const std::uint64_t a = rng() % m;
    const std::uint64_t n = rng() % 100000;
    const ChebPair fast = cheb_eval(RingElement(to_integer(a), Modulus(m)), n);
    // Same residues seen through a modulus m * 2^70, reduced back.
    const Integer big = to_integer(m) << 70;
    const ChebPair slow = cheb_eval(RingElement(to_integer(a), Modulus(big)), n);
    EXPECT_EQ(fast.t.value(), mod_floor(slow.t.value(), to_integer(m)));
    EXPECT_EQ(fast.u.value(), mod_floor(slow.u.value(), to_integer(m)));
  }
}

TEST(ChebEval, HugeIndex) {
  // w^(p - eps) == 1 for p prime; eps(2) mod p = (3/p).
  const Integer p("170141183460469231731687303715884105727");  // 2^127 - 1
  const RingElement a(Integer(2), Modulus(p));
  const int eps = jacobi(Integer(3), p);
  const ChebPair w = cheb_eval(a, Integer(p - eps));
  EXPECT_EQ(w.t.value(), 1);
  EXPECT_EQ(w.u.value(), 0);
}

TEST(ChebEval, NegativeIndexRejected) {
  EXPECT_THROW(cheb_eval(el(2, 23), Integer(-1)), UsageError);
}

TEST(Pell, NormIsOne) {
  for (std::uint64_t n = 0; n < 50; ++n) {
    EXPECT_EQ(pell_norm(cheb_eval(el(19, 23), n)).value(), 1);
  }
}

TEST(Compose, Examples) {
  EXPECT_TRUE(cheb_compose_check(el(5, 10007), 3, 4));
  EXPECT_TRUE(cheb_compose_check(el(5, 10007), 1, 1));
  EXPECT_THROW(cheb_compose_check(el(5, 10007), 0, 4), UsageError);
}

TEST(TransferMatrix, DeterminantAndPowers) {
  const RingElement a = el(19, 23);
  const TransferMatrix m(a);
  EXPECT_EQ(m.determinant().value(), 1);
  for (std::uint64_t n = 0; n < 30; ++n) {
    EXPECT_EQ(TransferMatrix::evaluate(a, to_integer(n)), cheb_eval(a, n)) << n;
    EXPECT_EQ(m.pow(to_integer(n)).determinant().value(), 1);
  }
}

TEST(Jacobi, MatchesEulerCriterionAtPrimes) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 23ULL, 101ULL, 997ULL}) {
    const oracle::Squares sq(p);
    for (long long a = -30; a < 200; ++a) {
      EXPECT_EQ(jacobi(static_cast<std::int64_t>(a), p), sq.legendre(a)) << a << " mod " << p;
      EXPECT_EQ(jacobi(to_integer(static_cast<std::int64_t>(a)), to_integer(p)), sq.legendre(a));
    }
  }
}

TEST(Jacobi, Multiplicative) {
  for (std::uint64_t n = 3; n < 300; n += 2) {
    for (std::uint64_t m = 3; m < 40; m += 2) {
      for (std::int64_t a : {2, 5, 6, 10, 77}) {
        EXPECT_EQ(jacobi(a, n * m), jacobi(a, n) * jacobi(a, m));
      }
    }
  }
}

TEST(Jacobi, BigAgreesWithGmp) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Integer n = (to_integer(rng()) << 64) + to_integer(rng() | 1);
    const Integer a = to_integer(rng());
    EXPECT_EQ(jacobi(a, n), mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()));
  }
  EXPECT_THROW(jacobi(Integer(3), Integer(10)), UsageError);
  EXPECT_THROW(jacobi(std::int64_t{3}, 1), UsageError);
}

TEST(ParseInteger, AcceptsSignsRejectsJunk) {
  EXPECT_EQ(parse_integer("+17"), 17);
  EXPECT_EQ(parse_integer("-4"), -4);
  EXPECT_EQ(parse_integer("123456789012345678901234567890").get_str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_integer(""), UsageError);
  EXPECT_THROW(parse_integer("12x"), UsageError);
  EXPECT_THROW(parse_integer("-"), UsageError);
}

class RandomizedInvariant : public ::testing::TestWithParam<Invariant> {};

TEST_P(RandomizedInvariant, ThousandSamples) {
  const InvariantTally t = run_invariant(GetParam(), 1000, 20240611);
  EXPECT_EQ(t.failures, 0u) << t.first_failure;
}

INSTANTIATE_TEST_SUITE_P(All, RandomizedInvariant, ::testing::ValuesIn(kAllInvariants),
                         [](const auto& info) { return to_string(info.param); });
