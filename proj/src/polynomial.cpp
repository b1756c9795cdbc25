#include "cheb/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"

namespace cheb {

namespace {

template <class Coeff, class IsZero, class Abs, class Negative>
std::string render(const std::vector<Coeff>& coeffs, IsZero is_zero, Abs abs_str, Negative negative) {
  if (coeffs.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    if (is_zero(c)) {
      continue;
    }
    const bool neg = negative(c);
    if (first) {
      out << (neg ? "-" : "");
    } else {
      out << (neg ? " - " : " + ");
    }
    const std::string mag = abs_str(c);
    if (mag != "1" || k == 0) {
      out << mag;
    }
    if (k >= 1) {
      out << 'x';
    }
    if (k >= 2) {
      out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) {
    coeffs_.emplace_back(c);
  }
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
    coeffs_.pop_back();
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = coefficient(i) + rhs.coefficient(i);
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = coefficient(i) - rhs.coefficient(i);
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<Integer> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) {
    x *= c;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw UsageError("division by the zero polynomial");
  }
  if (abs(divisor.leading()) != 1) {
    throw UsageError("divide_exact needs a divisor with leading coefficient +-1");
  }
  if (degree() < divisor.degree()) {
    if (is_zero()) {
      return {};
    }
    throw DomainError("polynomial division is not exact");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer q = rem[k + dd] * divisor.leading();  // leading is +-1
    quot[k] = q;
    if (sgn(q) == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k + j] -= q * divisor.coeffs_[j];
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return sgn(c) != 0; })) {
    throw DomainError("polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::scale_argument(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  Integer power = 1;
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return IntPolynomial(std::move(v));
}

std::uint64_t IntPolynomial::evaluate_mod(std::uint64_t x, std::uint64_t m) const {
  std::uint64_t acc = 0;
  Integer r;
  const Integer mz = to_integer(m);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    r = mod_floor(coeffs_[k], mz);
    acc = word::addmod(word::mulmod(acc, x, m), to_u64(r), m);
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  return render(
      coeffs_, [](const Integer& c) { return sgn(c) == 0; },
      [](const Integer& c) { return Integer(abs(c)).get_str(); }, [](const Integer& c) { return sgn(c) < 0; });
}

// ---------------------------------------------------------------------------
// ModPolynomial

ModPolynomial::ModPolynomial(std::vector<std::uint64_t> coefficients, std::uint64_t modulus)
    : coeffs_(std::move(coefficients)), modulus_(modulus) {
  if (modulus_ < 2 || modulus_ >= (std::uint64_t{1} << 63)) {
    throw UsageError("ModPolynomial modulus must be in [2, 2^63)");
  }
  for (auto& c : coeffs_) {
    c %= modulus_;
  }
  trim();
}

ModPolynomial ModPolynomial::monomial(std::uint64_t c, std::size_t degree, std::uint64_t modulus) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return {std::move(v), modulus};
}

void ModPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

ModPolynomial ModPolynomial::operator+(const ModPolynomial& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw UsageError("ModPolynomial: modulus mismatch");
  }
  std::vector<std::uint64_t> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = word::addmod(coefficient(i), rhs.coefficient(i), modulus_);
  }
  return {std::move(v), modulus_};
}

ModPolynomial ModPolynomial::operator-(const ModPolynomial& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw UsageError("ModPolynomial: modulus mismatch");
  }
  std::vector<std::uint64_t> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = word::submod(coefficient(i), rhs.coefficient(i), modulus_);
  }
  return {std::move(v), modulus_};
}

ModPolynomial ModPolynomial::shift(std::uint64_t a) const {
  a %= modulus_;
  // Horner: acc <- acc * (x + a) + c_k
  std::vector<std::uint64_t> acc;
  acc.reserve(coeffs_.size());
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc.push_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j) {
      acc[j] = word::addmod(acc[j - 1], word::mulmod(acc[j], a, modulus_), modulus_);
    }
    acc[0] = word::addmod(word::mulmod(acc[0], a, modulus_), coeffs_[k], modulus_);
  }
  return {std::move(acc), modulus_};
}

std::string ModPolynomial::to_string() const {
  return render(
      coeffs_, [](std::uint64_t c) { return c == 0; }, [](std::uint64_t c) { return std::to_string(c); },
      [](std::uint64_t) { return false; });
}

// ---------------------------------------------------------------------------

IntPolynomial chebyshev_t(std::size_t n) {
  IntPolynomial prev{1};
  if (n == 0) {
    return prev;
  }
  IntPolynomial cur{0, 1};
  const IntPolynomial two_x{0, 2};
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace cheb
