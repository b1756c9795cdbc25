#pragma once

// Dense univariate polynomials, lowest degree first, trailing zeros trimmed.
// IntPolynomial works over Z exactly; ModPolynomial over Z/m for word m.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cheb/integer.hpp"

namespace cheb {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  static IntPolynomial constant(const Integer& c) { return monomial(c, 0); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Integer& c) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Quotient by a divisor with leading coefficient +-1; throws DomainError
  /// when the division leaves a remainder.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// p(c x).
  IntPolynomial scale_argument(const Integer& c) const;

  /// p(x) mod m at x, for word-sized m.
  std::uint64_t evaluate_mod(std::uint64_t x, std::uint64_t m) const;

  /// Human form, e.g. "8x^4 - 8x^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

class ModPolynomial {
 public:
  ModPolynomial(std::vector<std::uint64_t> coefficients, std::uint64_t modulus);

  static ModPolynomial monomial(std::uint64_t c, std::size_t degree, std::uint64_t modulus);

  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t modulus() const { return modulus_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::uint64_t coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

  ModPolynomial operator+(const ModPolynomial& rhs) const;
  ModPolynomial operator-(const ModPolynomial& rhs) const;
  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

  /// p(x + a) by Horner's rule, O(deg^2).
  ModPolynomial shift(std::uint64_t a) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint64_t> coeffs_;
  std::uint64_t modulus_;
};

/// T_n(x) over Z by T_{k+1} = 2x T_k - T_{k-1}.
IntPolynomial chebyshev_t(std::size_t n);

}  // namespace cheb
