#include "cheb/modarith.hpp"

#include <bit>
#include <cctype>
#include <limits>

#include "cheb/errors.hpp"

namespace cheb {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw UsageError("expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  return Integer(s, 10);
}

namespace {

constexpr std::uint64_t kWordLimit = std::uint64_t{1} << 63;

void require_same_modulus(const RingElement& x, const RingElement& y) {
  if (!(x.modulus() == y.modulus())) {
    throw UsageError("operands live in different residue rings");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Modulus / RingElement

Modulus::Modulus(const Integer& m) : value_(std::make_shared<const Integer>(m)) {
  if (m < 2) {
    throw UsageError("modulus must be at least 2, got " + m.get_str());
  }
  if (fits_u64(m) && to_u64(m) < kWordLimit) {
    word_ = to_u64(m);
  }
}

Modulus::Modulus(std::uint64_t m) : Modulus(to_integer(m)) {}

RingElement::RingElement(const Integer& v, const Modulus& m)
    : value_(mod_floor(v, m.value())), modulus_(m) {}

RingElement::RingElement(std::int64_t v, const Modulus& m) : RingElement(to_integer(v), m) {}

Integer RingElement::centered() const {
  const Integer& m = modulus_.value();
  if (2 * value_ > m) {
    return value_ - m;
  }
  return value_;
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  require_same_modulus(*this, rhs);
  return {value_ + rhs.value_, modulus_};
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  require_same_modulus(*this, rhs);
  return {value_ - rhs.value_, modulus_};
}

RingElement RingElement::operator*(const RingElement& rhs) const {
  require_same_modulus(*this, rhs);
  return {value_ * rhs.value_, modulus_};
}

RingElement RingElement::operator-() const { return {-value_, modulus_}; }

// ---------------------------------------------------------------------------
// Word kernel

namespace word {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) {
      r = mulmod(r, base, m);
    }
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

namespace {

struct Ladder {
  std::uint64_t a;
  std::uint64_t disc;  // a^2 - 1
  std::uint64_t m;
  Pair p;

  Ladder(std::uint64_t base, std::uint64_t mod)
      : a(base % mod), disc(submod(mulmod(a, a, mod), 1 % mod, mod)), m(mod), p{1 % mod, 0} {}

  void square() {
    using u128 = unsigned __int128;
    const std::uint64_t du = mulmod(disc, p.u, m);
    const std::uint64_t t = static_cast<std::uint64_t>((u128(p.t) * p.t + u128(du) * p.u) % m);
    const std::uint64_t tu = mulmod(p.t, p.u, m);
    p = {t, addmod(tu, tu, m)};
  }

  void step() {
    using u128 = unsigned __int128;
    const std::uint64_t t = static_cast<std::uint64_t>((u128(a) * p.t + u128(disc) * p.u) % m);
    const std::uint64_t u = static_cast<std::uint64_t>((u128(a) * p.u + p.t) % m);
    p = {t, u};
  }
};

}  // namespace

Pair cheb_eval(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  Ladder ladder(a, m);
  for (int bit = 63 - std::countl_zero(n | 1); n != 0 && bit >= 0; --bit) {
    ladder.square();
    if ((n >> bit) & 1) {
      ladder.step();
    }
  }
  return ladder.p;
}

Pair cheb_eval(std::uint64_t a, const Integer& n, std::uint64_t m) {
  if (sgn(n) < 0) {
    throw UsageError("Chebyshev index must be nonnegative");
  }
  if (fits_u64(n)) {
    return cheb_eval(a, to_u64(n), m);
  }
  Ladder ladder(a, m);
  for (auto bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    ladder.square();
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      ladder.step();
    }
  }
  return ladder.p;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw UsageError("Jacobi symbol needs an odd modulus >= 3, got " + std::to_string(n));
  }
  a %= n;
  int sign = 1;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) {
      sign = -sign;
    }
    if (a % 4 == 3 && n % 4 == 3) {
      sign = -sign;
    }
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace word

// ---------------------------------------------------------------------------
// Chebyshev pairs

ChebPair identity_pair(const RingElement& a) {
  const Modulus& m = a.modulus();
  return {RingElement(1, m), RingElement(0, m), a, Integer(0)};
}

ChebPair unit_pair(const RingElement& a) {
  const Modulus& m = a.modulus();
  return {a, RingElement(1, m), a, Integer(1)};
}

RingElement pell_norm(const ChebPair& x) {
  const RingElement one(1, x.modulus());
  const RingElement disc = x.base * x.base - one;
  return x.t * x.t - disc * x.u * x.u;
}

ChebPair pair_mul(const ChebPair& x, const ChebPair& y, const RingElement& a) {
  if (!(x.modulus() == y.modulus()) || !(x.modulus() == a.modulus())) {
    throw UsageError("pair_mul: modulus mismatch");
  }
  if (!(x.base == a) || !(y.base == a)) {
    throw UsageError("pair_mul: base mismatch");
  }
  const RingElement disc = a * a - RingElement(1, a.modulus());
  return {x.t * y.t + disc * x.u * y.u, x.t * y.u + y.t * x.u, a, x.n + y.n};
}

namespace {

ChebPair cheb_eval_big(const RingElement& a, const Integer& n) {
  const Integer& m = a.modulus().value();
  const Integer av = a.value();
  const Integer disc = mod_floor(av * av - 1, m);
  Integer t = 1;
  Integer u = 0;
  Integer tmp;
  for (auto bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; sgn(n) != 0 && bit >= 0;
       --bit) {
    // square
    tmp = t * u;
    t = t * t + disc * u * u;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    u = 2 * tmp;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      tmp = av * t + disc * u;
      u = t + av * u;
      mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
      mpz_mod(t.get_mpz_t(), tmp.get_mpz_t(), m.get_mpz_t());
    }
  }
  return {RingElement(t, a.modulus()), RingElement(u, a.modulus()), a, n};
}

}  // namespace

ChebPair cheb_eval(const RingElement& a, const Integer& n) {
  if (sgn(n) < 0) {
    throw UsageError("Chebyshev index must be nonnegative");
  }
  const Modulus& m = a.modulus();
  if (!m.fits_word()) {
    return cheb_eval_big(a, n);
  }
  const word::Pair p = word::cheb_eval(to_u64(a.value()), n, m.word());
  return {RingElement(to_integer(p.t), m), RingElement(to_integer(p.u), m), a, n};
}

ChebPair cheb_eval(const RingElement& a, std::uint64_t n) { return cheb_eval(a, to_integer(n)); }

bool cheb_compose_check(const RingElement& a, const Integer& n, const Integer& k) {
  if (n < 1 || k < 1) {
    throw UsageError("cheb_compose_check needs n, k >= 1");
  }
  const RingElement tn = cheb_eval(a, n).t;
  const RingElement tk = cheb_eval(a, k).t;
  const RingElement tnk = cheb_eval(a, Integer(n * k)).t;
  return cheb_eval(tk, n).t == tnk && cheb_eval(tn, k).t == tnk;
}

// ---------------------------------------------------------------------------
// TransferMatrix

TransferMatrix::TransferMatrix(const RingElement& a) : modulus_(a.modulus()) {
  const Integer& m = modulus_.value();
  entries_[0][0] = a.value();
  entries_[0][1] = mod_floor(a.value() * a.value() - 1, m);
  entries_[1][0] = mod_floor(Integer(1), m);
  entries_[1][1] = a.value();
}

RingElement TransferMatrix::determinant() const {
  return RingElement(entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0], modulus_);
}

TransferMatrix TransferMatrix::operator*(const TransferMatrix& rhs) const {
  if (!(modulus_ == rhs.modulus_)) {
    throw UsageError("TransferMatrix: modulus mismatch");
  }
  const Integer& m = modulus_.value();
  Entries out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = mod_floor(entries_[i][0] * rhs.entries_[0][j] + entries_[i][1] * rhs.entries_[1][j], m);
    }
  }
  return {std::move(out), modulus_};
}

TransferMatrix TransferMatrix::pow(const Integer& n) const {
  if (sgn(n) < 0) {
    throw UsageError("TransferMatrix::pow: negative exponent");
  }
  const Integer& m = modulus_.value();
  const Integer one = mod_floor(Integer(1), m);
  TransferMatrix result({{{one, Integer(0)}, {Integer(0), one}}}, modulus_);
  TransferMatrix base = *this;
  Integer e = n;
  while (sgn(e) != 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

ChebPair TransferMatrix::evaluate(const RingElement& a, const Integer& n) {
  const TransferMatrix power = TransferMatrix(a).pow(n);
  return {power.entry(0, 0), power.entry(1, 0), a, n};
}

// ---------------------------------------------------------------------------
// Jacobi

int jacobi(const Integer& a, const Integer& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw UsageError("Jacobi symbol needs an odd modulus >= 3, got " + n.get_str());
  }
  if (fits_u64(n)) {
    return word::jacobi(to_u64(mod_floor(a, n)), to_u64(n));
  }
  const Integer r = mod_floor(a, n);
  return mpz_jacobi(r.get_mpz_t(), n.get_mpz_t());
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw UsageError("Jacobi symbol needs an odd modulus >= 3, got " + std::to_string(n));
  }
  const auto sn = static_cast<__int128>(n);
  auto r = static_cast<__int128>(a) % sn;
  if (r < 0) {
    r += sn;
  }
  return word::jacobi(static_cast<std::uint64_t>(r), n);
}

}  // namespace cheb
