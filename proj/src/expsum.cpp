#include "cheb/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/primes.hpp"
#include "cheb/structure.hpp"

namespace cheb {

namespace {

void require_prime(std::uint64_t p, std::uint64_t min) {
  if (p < min || p % 2 == 0 || !is_prime(p)) {
    throw UsageError("expected an odd prime >= " + std::to_string(min) + ", got " + std::to_string(p));
  }
}

int legendre(std::int64_t a, std::uint64_t p) { return jacobi(a, p); }

double angle(std::uint64_t p) { return 2 * std::numbers::pi / static_cast<double>(p); }

}  // namespace

bool close(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

std::vector<Complex> zeta_powers(std::uint64_t p) {
  std::vector<Complex> out(p);
  const Complex zeta = std::polar(1.0, angle(p));
  Complex cur{1, 0};
  for (std::uint64_t a = 0; a < p; ++a) {
    if (a % 256 == 0) {
      cur = std::polar(1.0, angle(p) * static_cast<double>(a));
    }
    out[a] = cur;
    cur *= zeta;
  }
  return out;
}

Complex gauss_sign(std::uint64_t p) { return p % 4 == 1 ? Complex{1, 0} : Complex{0, 1}; }

GaussSums gauss_sums(std::uint64_t p) {
  require_prime(p, 3);
  const auto z = zeta_powers(p);
  GaussSums g;
  for (std::uint64_t a = 1; a < p; ++a) {
    (legendre(static_cast<std::int64_t>(a), p) > 0 ? g.residues : g.nonresidues) += z[a];
  }
  const Complex root = gauss_sign(p) * std::sqrt(static_cast<double>(p));
  g.residues_closed = (-1.0 + root) / 2.0;
  g.nonresidues_closed = (-1.0 - root) / 2.0;
  return g;
}

// ---------------------------------------------------------------------------

bool ExpSumReport::trick_agrees() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!close(g[i], g_trick[i])) {
      return false;
    }
  }
  return true;
}

bool ExpSumReport::bound_holds() const {
  return std::all_of(g.begin(), g.end(), [&](Complex v) { return std::abs(v) <= bound; });
}

bool ExpSumReport::weil_holds() const { return std::abs(S) <= 2 * std::sqrt(static_cast<double>(p)); }

bool ExpSumReport::total_matches() const {
  return close(g[0] + g[1] + g[2] + g[3], Complex{-2 * std::cos(angle(p)), 0});
}

ExpSumReport partition_sums(std::uint64_t p) {
  require_prime(p, 5);
  const auto z = zeta_powers(p);
  ExpSumReport r;
  r.p = p;
  const auto ip = static_cast<std::int64_t>(p);
  for (std::uint64_t a : residue_domain(p)) {
    const auto ia = static_cast<std::int64_t>(a);
    const int eps = legendre(ia * ia - 1, p);
    const int delta = legendre(2 * (ia + 1), p);
    const std::size_t cell = (eps > 0 ? 0 : 2) + (delta > 0 ? 0 : 1);
    r.g[cell] += z[a];
  }
  for (std::uint64_t a = 1; a < p; ++a) {
    const auto ia = static_cast<std::int64_t>(a);
    r.S += static_cast<double>(legendre(ia * ia - 1, p)) * z[a];
  }
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  const Complex root = gauss_sign(p) * sqrt_p;
  const double two = legendre(2, p);
  const double minus_one = legendre(ip - 1, p);
  const Complex zeta = z[1];
  const Complex zeta_inv = z[p - 1];
  const double c = std::cos(angle(p));
  for (std::size_t i = 0; i < 4; ++i) {
    const double e = kCells[i].eps;
    const double d = kCells[i].delta;
    r.g_trick[i] = -c / 2 + e / 4 * (minus_one + r.S) + d / 4 * (root * two * zeta_inv - zeta) +
                   e * d / 4 * (root * two * zeta - minus_one * zeta_inv);
  }
  r.bound = sqrt_p + 1.25;
  for (Complex v : r.g) {
    r.max_ratio = std::max(r.max_ratio, std::abs(v) / sqrt_p);
  }
  return r;
}

// ---------------------------------------------------------------------------

bool ShiftedSums::matches() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!close(direct[i], closed[i])) {
      return false;
    }
  }
  return true;
}

ShiftedSums shifted_character_sums(std::uint64_t p) {
  require_prime(p, 3);
  const auto z = zeta_powers(p);
  const auto ip = static_cast<std::int64_t>(p);
  ShiftedSums s;
  for (std::uint64_t a : residue_domain(p)) {
    const auto ia = static_cast<std::int64_t>(a);
    s.direct[0] += static_cast<double>(legendre(ia - 1, p)) * z[a];
    s.direct[1] += static_cast<double>(legendre(ia + 1, p)) * z[a];
    s.direct[2] += static_cast<double>(legendre(ia * ia - 1, p)) * z[a];
  }
  Complex S;
  for (std::uint64_t a = 1; a < p; ++a) {
    const auto ia = static_cast<std::int64_t>(a);
    S += static_cast<double>(legendre(ia * ia - 1, p)) * z[a];
  }
  const Complex root = gauss_sign(p) * std::sqrt(static_cast<double>(p));
  const Complex zeta = z[1];
  const Complex zeta_inv = z[p - 1];
  s.closed[0] = root * zeta - static_cast<double>(legendre(ip - 2, p)) * zeta_inv;
  s.closed[1] = root * zeta_inv - static_cast<double>(legendre(2, p)) * zeta;
  s.closed[2] = static_cast<double>(legendre(ip - 1, p)) + S;
  return s;
}

// ---------------------------------------------------------------------------

DifferenceLemma difference_lemma(std::uint64_t p) {
  const ExpSumReport r = partition_sums(p);
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  const double two = legendre(2, p);
  const double c = std::cos(angle(p));
  const double s = std::sin(angle(p));
  const Complex i{0, 1};
  DifferenceLemma out;
  out.plus_diff = r.g[1] - r.g[0];
  out.minus_diff = r.g[3] - r.g[2];
  if (p % 4 == 1) {
    out.plus_diff_closed = (1 - two * sqrt_p) * c;
    out.minus_diff_closed = i * (1 + two * sqrt_p) * s;
  } else {
    out.plus_diff_closed = i * (s - two * sqrt_p * c);
    out.minus_diff_closed = c - two * sqrt_p * s;
  }
  return out;
}

bool difference_lemma_check(std::uint64_t p) { return difference_lemma(p).matches(); }

bool conjugacy_check(const ExpSumReport& report) {
  const int minus_one = legendre(static_cast<std::int64_t>(report.p) - 1, report.p);
  for (int eps : {1, -1}) {
    const std::size_t plus = eps > 0 ? 0 : 2;
    const std::size_t minus = plus + 1;
    const Complex gp = report.g[plus];
    const Complex gm = report.g[minus];
    const double scale = std::max(1.0, std::abs(gp) + std::abs(gm));
    if (minus_one * eps > 0) {
      if (std::abs(gp.imag()) > kSumTolerance * scale || std::abs(gm.imag()) > kSumTolerance * scale) {
        return false;
      }
    } else if (!close(gp, std::conj(gm))) {
      return false;
    }
  }
  return true;
}

bool conjugacy_check(std::uint64_t p) { return conjugacy_check(partition_sums(p)); }

}  // namespace cheb
