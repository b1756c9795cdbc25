#pragma once

// Exponential sums g_A = sum_{a in A} zeta^a, zeta = exp(2 pi i / p), over the
// cells A_{eps,delta}, with the Gauss-sum closed forms they reduce to. Double
// precision throughout; agreement is judged at 1e-9 relative tolerance.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace cheb {

using Complex = std::complex<double>;

inline constexpr double kSumTolerance = 1e-9;

/// |x - y| <= tol * max(1, |y|).
bool close(Complex x, Complex y, double tol = kSumTolerance);

/// zeta^0 .. zeta^{p-1} by repeated multiplication, re-anchored every 256 steps.
std::vector<Complex> zeta_powers(std::uint64_t p);

/// eps_p: 1 for p == 1 mod 4, i for p == 3 mod 4.
Complex gauss_sign(std::uint64_t p);

struct GaussSums {
  Complex residues;      // g_R by direct summation
  Complex nonresidues;   // g_N
  Complex residues_closed;
  Complex nonresidues_closed;

  bool matches() const { return close(residues, residues_closed) && close(nonresidues, nonresidues_closed); }
};

GaussSums gauss_sums(std::uint64_t p);

struct ExpSumReport {
  std::uint64_t p = 0;
  std::array<Complex, 4> g{};        // kCells order, direct summation
  std::array<Complex, 4> g_trick{};  // four-character expansion with S
  Complex S{};                       // sum_{a=1}^{p-1} ((a^2-1)/p) zeta^a
  double bound = 0;                  // sqrt(p) + 5/4
  double max_ratio = 0;              // max |g| / sqrt(p)

  bool trick_agrees() const;
  bool bound_holds() const;
  bool weil_holds() const;  // |S| <= 2 sqrt(p)
  /// sum of the four cells == -2 cos(2 pi / p)
  bool total_matches() const;
};

ExpSumReport partition_sums(std::uint64_t p);

struct ShiftedSums {
  // sum over R_p of ((a-1)/p) zeta^a, ((a+1)/p) zeta^a, ((a^2-1)/p) zeta^a
  std::array<Complex, 3> direct{};
  std::array<Complex, 3> closed{};

  bool matches() const;
};

ShiftedSums shifted_character_sums(std::uint64_t p);

struct DifferenceLemma {
  Complex plus_diff;            // g_{+-} - g_{++}
  Complex plus_diff_closed;
  Complex minus_diff;           // g_{--} - g_{-+}
  Complex minus_diff_closed;

  bool matches() const { return close(plus_diff, plus_diff_closed) && close(minus_diff, minus_diff_closed); }
};

DifferenceLemma difference_lemma(std::uint64_t p);
bool difference_lemma_check(std::uint64_t p);

/// g_{eps,+-} real when (-1/p) eps > 0, otherwise g_{eps,+} == conj(g_{eps,-}).
bool conjugacy_check(std::uint64_t p);
bool conjugacy_check(const ExpSumReport& report);

}  // namespace cheb
