#include <gtest/gtest.h>

#include <algorithm>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/primes.hpp"
#include "cheb/structure.hpp"
#include "oracles.hpp"

using namespace cheb;

using Set = std::vector<std::uint64_t>;

namespace {

Set sorted(Set s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Partition, WorkedExampleAt23) {
  const PartitionTable t = partition(23);
  EXPECT_EQ(t.cell(-1, -1), (Set{4, 9, 10, 13, 14, 19}));
  EXPECT_EQ(t.cell(-1, 1), (Set{0, 8, 11, 12, 15}));
  EXPECT_EQ(t.cell(1, -1), (Set{6, 16, 18, 20, 21}));
  EXPECT_EQ(t.cell(1, 1), (Set{2, 3, 5, 7, 17}));
  EXPECT_EQ(t.orders.at(19), 24u);
}

TEST(Partition, MatchesSquareTableOracle) {
  for (std::uint64_t p : primes_between(3, 600)) {
    const PartitionTable t = partition(p, {2});
    const auto cells = oracle::cells(p);
    for (const CharPair& c : kCells) {
      const auto it = cells.find({c.eps, c.delta});
      EXPECT_EQ(t.cell(c.eps, c.delta), it == cells.end() ? Set{} : it->second) << p;
    }
  }
}

TEST(Partition, CoversDomainDisjointly) {
  for (std::uint64_t p : {5ULL, 23ULL, 101ULL, 1009ULL}) {
    const PartitionTable t = partition(p);
    Set all;
    for (const auto& s : t.sets) {
      all.insert(all.end(), s.begin(), s.end());
    }
    EXPECT_EQ(sorted(all), residue_domain(p));
    EXPECT_EQ(all.size(), p - 2);
  }
}

TEST(Partition, ThreadCountDoesNotChangeResult) {
  const PartitionTable one = partition(10007, {1});
  const PartitionTable many = partition(10007, {8});
  EXPECT_EQ(one.sets, many.sets);
  EXPECT_EQ(one.orders, many.orders);
}

TEST(Partition, RejectsNonPrimes) {
  EXPECT_THROW(partition(21), UsageError);
  EXPECT_THROW(partition(2), UsageError);
}

TEST(Order, MatchesPeriodOracle) {
  for (std::uint64_t p : primes_between(3, 800)) {
    for (std::uint64_t a : residue_domain(p)) {
      const std::uint64_t o = ord(a, p);
      EXPECT_EQ(o, oracle::order_by_period(a, p)) << a << " mod " << p;
      const oracle::Squares sq(p);
      const long long x = static_cast<long long>(a);
      const std::uint64_t bound = sq.legendre(x * x - 1) > 0 ? p - 1 : p + 1;
      EXPECT_EQ(bound % o, 0u);
    }
  }
  EXPECT_THROW(ord(1, 23), UsageError);
  EXPECT_THROW(ord(22, 23), UsageError);
}

TEST(Order, ZeroHasOrderFour) {
  for (std::uint64_t p : primes_between(5, 200)) {
    EXPECT_EQ(ord(0, p), 4u);
    EXPECT_EQ(ord_linear(0, p), 4u);
  }
}

TEST(OrderClasses, WorkedExampleAt23) {
  const OrderClasses oc = order_class_decomposition(23);
  const std::map<std::uint64_t, Set> expected = {
      {3, {11}},          {4, {0}},       {6, {12}},  {8, {9, 14}}, {11, {2, 3, 5, 7, 17}}, {12, {8, 15}},
      {22, {6, 16, 18, 20, 21}}, {24, {4, 10, 13, 19}}};
  EXPECT_EQ(oc.classes, expected);
}

TEST(OrderClasses, UnionsAndSizes) {
  for (std::uint64_t p : primes_between(5, 2000)) {
    const PartitionTable t = partition(p, {1});
    const OrderClasses oc = order_class_decomposition(t);
    EXPECT_TRUE(verify_order_unions(t, oc)) << p;
    EXPECT_TRUE(verify_class_sizes(oc)) << p;
    for (const auto& [d, members] : oc.classes) {
      EXPECT_EQ(members.size(), euler_phi(d) / 2) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic(1), IntPolynomial({-1, 1}));
  EXPECT_EQ(cyclotomic(6), IntPolynomial({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), IntPolynomial({1, 0, -1, 0, 1}));
  EXPECT_EQ(real_cyclotomic(5), IntPolynomial({-1, 1, 1}));  // y^2 + y - 1
  EXPECT_EQ(real_cyclotomic(3), IntPolynomial({1, 1}));
  EXPECT_EQ(psi(1), IntPolynomial({-1, 1}));
  EXPECT_EQ(psi(2), IntPolynomial({2, 2}));
  EXPECT_THROW(real_cyclotomic(2), UsageError);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    IntPolynomial prod{1};
    for (std::uint64_t d : divisors(n)) {
      prod = prod * cyclotomic(d);
    }
    EXPECT_EQ(prod, IntPolynomial::monomial(1, n) - IntPolynomial{1}) << n;
  }
}

TEST(Cyclotomic, RealPolynomialRecoversPhi) {
  // x^{m} Phi^+(x + 1/x) == Phi_d(x), checked by evaluation at many points mod a prime.
  const std::uint64_t q = 1'000'003;
  for (std::uint64_t d = 3; d <= 60; ++d) {
    const IntPolynomial plus = real_cyclotomic(d);
    const IntPolynomial full = cyclotomic(d);
    const std::uint64_t m = euler_phi(d) / 2;
    for (std::uint64_t x = 2; x < 40; ++x) {
      const std::uint64_t inv = word::powmod(x, q - 2, q);
      const std::uint64_t y = (x + inv) % q;
      const std::uint64_t lhs = word::mulmod(word::powmod(x, m, q), plus.evaluate_mod(y, q), q);
      EXPECT_EQ(lhs, full.evaluate_mod(x, q)) << "d=" << d;
    }
  }
}

TEST(Cyclotomic, FactorizationOfTnMinusOne) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    EXPECT_TRUE(cyclotomic_factorization_check(n)) << n;
    long degree = 0;
    for (std::uint64_t d : divisors(n)) {
      degree += psi(d).degree();
    }
    EXPECT_EQ(degree, static_cast<long>(n));
  }
}

TEST(Cyclotomic, Psi4AndPsi3) {
  EXPECT_EQ(psi(4), IntPolynomial({0, 0, 4}));      // (2x)^2
  EXPECT_EQ(psi(3), IntPolynomial({1, 4, 4}));      // (2x + 1)^2
}

TEST(Splitting, WorkedExampleAt23) {
  const std::map<std::uint64_t, Set> expected = {
      {3, {11}},          {4, {0}},       {6, {12}},  {8, {9, 14}}, {11, {2, 3, 5, 7, 17}}, {12, {8, 15}},
      {22, {6, 16, 18, 20, 21}}, {24, {4, 10, 13, 19}}};
  for (std::uint64_t d = 3; d <= 48; ++d) {
    const SplittingReport r = splitting_check(d, 23);
    EXPECT_EQ(r.splits, r.predicted) << d;
    EXPECT_EQ(r.splits, expected.count(d) == 1) << d;
    if (r.splits) {
      EXPECT_EQ(r.roots, expected.at(d));
    }
  }
}

TEST(Splitting, PredictionHoldsBroadly) {
  for (std::uint64_t p : primes_between(5, 200)) {
    for (std::uint64_t d = 3; d <= 60; ++d) {
      const SplittingReport r = splitting_check(d, p);
      EXPECT_EQ(r.splits, r.predicted) << "d=" << d << " p=" << p;
    }
  }
}

TEST(CharacterTransport, HoldsOnSmallPrimes) {
  for (std::uint64_t p : primes_between(5, 150)) {
    for (std::uint64_t a : residue_domain(p)) {
      if (a == 0) {
        continue;
      }
      for (std::uint64_t n = 1; n <= 12; ++n) {
        const auto r = character_transport_check(a, n, p);
        if (r) {
          EXPECT_TRUE(*r) << "a=" << a << " n=" << n << " p=" << p;
        }
      }
    }
  }
  EXPECT_THROW(character_transport_check(1, 2, 23), DomainError);
}

TEST(ShiftRefinement, WorkedExampleAt23) {
  const ShiftRefinement r = residue_shift_refinement(23);
  EXPECT_TRUE(r.all_identified());
  const ShiftPart& q1s = r.find("Q+1", true);
  EXPECT_EQ(sorted(q1s.shifted), (Set{4, 9, 10, 13, 14, 19}));
  EXPECT_EQ(q1s.cell, (CharPair{-1, -1}));
  EXPECT_EQ(sorted(q1s.shifted_back), sorted({9, 12, 13, 8, 3, 18}));
  const ShiftPart& q1n = r.find("Q+1", false);
  EXPECT_EQ(q1n.cell, (CharPair{1, 1}));
  EXPECT_EQ(sorted(q1n.shifted), (Set{2, 3, 5, 7, 17}));
  EXPECT_EQ(sorted(q1n.shifted_back), sorted({1, 4, 16, 2, 6}));
  const ShiftPart& qm1s = r.find("Q-1", true);
  EXPECT_EQ(qm1s.cell, (CharPair{-1, 1}));
  EXPECT_EQ(sorted(qm1s.shifted), sorted({0, 8, 15, 12, 11}));
  EXPECT_EQ(sorted(qm1s.shifted_back), sorted({1, 9, 16, 12, 13}));
  const ShiftPart& qm1n = r.find("Q-1", false);
  EXPECT_EQ(qm1n.cell, (CharPair{1, 1}));
  EXPECT_EQ(sorted(qm1n.shifted_back), sorted({4, 3, 18, 8, 6}));
}

TEST(ShiftRefinement, IdentifiedForManyPrimes) {
  for (std::uint64_t p : primes_between(5, 1500)) {
    EXPECT_TRUE(residue_shift_refinement(p).all_identified()) << p;
  }
}
