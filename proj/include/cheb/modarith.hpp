#pragma once

// Residue-ring arithmetic and the Chebyshev pair kernel.
//
// Powers of the unit w_a = a + sqrt(a^2 - 1) are carried as pairs
// (T_n(a), U_{n-1}(a)) so that w_a^n = T_n(a) + U_{n-1}(a) sqrt(a^2 - 1).
// Everything is reduced mod m. Moduli below 2^63 take a word-sized path
// (128-bit products); larger moduli go through GMP.

#include <array>
#include <cstdint>
#include <memory>

#include "cheb/integer.hpp"

namespace cheb {

/// A modulus m >= 2. Cheap to copy; immutable.
class Modulus {
 public:
  explicit Modulus(const Integer& m);
  explicit Modulus(std::uint64_t m);

  const Integer& value() const { return *value_; }
  /// True when m < 2^63, i.e. residues add without overflowing a word.
  bool fits_word() const { return word_ != 0; }
  std::uint64_t word() const { return word_; }

  friend bool operator==(const Modulus& x, const Modulus& y) {
    return x.value_ == y.value_ || *x.value_ == *y.value_;
  }

 private:
  std::shared_ptr<const Integer> value_;
  std::uint64_t word_ = 0;
};

/// A residue in canonical form [0, m).
class RingElement {
 public:
  RingElement(const Integer& v, const Modulus& m);
  RingElement(std::int64_t v, const Modulus& m);

  const Integer& value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }

  /// Signed representative in (-m/2, m/2], handy for printing -1.
  Integer centered() const;

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator*(const RingElement& rhs) const;
  RingElement operator-() const;

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.modulus_ == y.modulus_ && x.value_ == y.value_;
  }

 private:
  Integer value_;
  Modulus modulus_;
};

/// (t, u) = (T_n(a), U_{n-1}(a)) mod m, i.e. the unit w_a^n.
/// `n` is bookkeeping only; equality looks at t, u and the base.
struct ChebPair {
  RingElement t;
  RingElement u;
  RingElement base;
  Integer n;

  const Modulus& modulus() const { return base.modulus(); }

  friend bool operator==(const ChebPair& x, const ChebPair& y) {
    return x.t == y.t && x.u == y.u && x.base == y.base;
  }
};

/// (1, 0): w_a^0.
ChebPair identity_pair(const RingElement& a);
/// (a, 1): w_a^1.
ChebPair unit_pair(const RingElement& a);

/// t^2 - (a^2 - 1) u^2; equals 1 for every genuine power of w_a.
RingElement pell_norm(const ChebPair& x);

/// Product in Z/m[sqrt(a^2-1)]. Throws UsageError on modulus or base mismatch.
ChebPair pair_mul(const ChebPair& x, const ChebPair& y, const RingElement& a);

/// (T_n(a), U_{n-1}(a)) mod m by binary powering of w_a; U_{-1} = 0.
ChebPair cheb_eval(const RingElement& a, const Integer& n);
ChebPair cheb_eval(const RingElement& a, std::uint64_t n);

/// T_n(T_k(a)) == T_{nk}(a) == T_k(T_n(a)) mod m. Requires n, k >= 1.
bool cheb_compose_check(const RingElement& a, const Integer& n, const Integer& k);

/// The 2x2 step matrix [[a, a^2-1], [1, a]] mapping (T_n, U_{n-1}) to
/// (T_{n+1}, U_n). An independent route to the pair ladder.
class TransferMatrix {
 public:
  using Entries = std::array<std::array<Integer, 2>, 2>;

  explicit TransferMatrix(const RingElement& a);

  const Entries& entries() const { return entries_; }
  const Modulus& modulus() const { return modulus_; }

  RingElement entry(int row, int col) const { return {entries_[row][col], modulus_}; }
  RingElement determinant() const;

  TransferMatrix operator*(const TransferMatrix& rhs) const;
  TransferMatrix pow(const Integer& n) const;

  /// M^n (1, 0)^T = (T_n(a), U_{n-1}(a)).
  static ChebPair evaluate(const RingElement& a, const Integer& n);

 private:
  TransferMatrix(Entries e, Modulus m) : entries_(std::move(e)), modulus_(std::move(m)) {}

  Entries entries_;
  Modulus modulus_;
};

/// Jacobi symbol (a/n). n must be odd and >= 3; negative a is reduced first.
int jacobi(const Integer& a, const Integer& n);
int jacobi(std::int64_t a, std::uint64_t n);

// Word-sized kernel used by the search routines. All arguments are
// canonical residues mod m with 2 <= m < 2^63.
namespace word {

struct Pair {
  std::uint64_t t;
  std::uint64_t u;

  friend bool operator==(const Pair&, const Pair&) = default;
};

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

inline std::uint64_t addmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  std::uint64_t s = x + y;
  return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return x >= y ? x - y : x + (m - y);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// (T_n(a), U_{n-1}(a)) mod m.
Pair cheb_eval(std::uint64_t a, std::uint64_t n, std::uint64_t m);
Pair cheb_eval(std::uint64_t a, const Integer& n, std::uint64_t m);

int jacobi(std::uint64_t a, std::uint64_t n);

}  // namespace word

}  // namespace cheb
