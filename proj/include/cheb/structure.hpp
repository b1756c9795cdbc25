#pragma once

// Local structure at an odd prime p: the four cells A_{eps,delta} of
// R_p = {0, 2, 3, ..., p-2}, the orders of w_a, the classes I_d of elements
// of order d, real cyclotomic polynomials and the shifted Q/N refinement.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheb/criteria.hpp"
#include "cheb/polynomial.hpp"

namespace cheb {

/// R_p = {0, 2, 3, ..., p-2}: everything except 1 and p-1.
std::vector<std::uint64_t> residue_domain(std::uint64_t p);

/// The four (eps, delta) sign patterns in a fixed order: ++, +-, -+, --.
inline constexpr std::array<CharPair, 4> kCells = {CharPair{1, 1}, CharPair{1, -1}, CharPair{-1, 1},
                                                   CharPair{-1, -1}};

/// "++", "+-", "-+" or "--".
std::string cell_name(const CharPair& cell);

struct PartitionTable {
  std::uint64_t p = 0;
  std::array<std::vector<std::uint64_t>, 4> sets;  // indexed like kCells, each sorted
  std::map<std::uint64_t, std::uint64_t> orders;   // a -> ord_p(w_a)

  const std::vector<std::uint64_t>& cell(int eps, int delta) const;
};

/// Builds every cell twice, from the characters and from
/// T_{(p-eps)/2}(a) == delta, and throws std::logic_error on disagreement.
/// p must be an odd prime.
PartitionTable partition(std::uint64_t p, SearchOptions options = {});

/// Least n >= 1 with T_n(a) == 1 mod p. Descends through the divisors of
/// p - eps; for p < 200 it is also cross-checked against ord_linear.
std::uint64_t ord(std::uint64_t a, std::uint64_t p);
/// Same order by stepping T_{k+1} = 2a T_k - T_{k-1}.
std::uint64_t ord_linear(std::uint64_t a, std::uint64_t p);

struct OrderClasses {
  std::uint64_t p = 0;
  std::map<std::uint64_t, std::vector<std::uint64_t>> classes;  // d -> I_d, sorted
};

OrderClasses order_class_decomposition(const PartitionTable& table);
OrderClasses order_class_decomposition(std::uint64_t p, SearchOptions options = {});

/// A_{eps,+} is the union of I_d over d | (p-eps)/2 and A_{eps,-} the union
/// over d | p-eps, d not dividing (p-eps)/2 (d > 2 throughout).
bool verify_order_unions(const PartitionTable& table, const OrderClasses& classes);
/// Each nonempty I_d has phi(d)/2 elements, and is nonempty iff d | p-1 or d | p+1.
bool verify_class_sizes(const OrderClasses& classes);

/// Phi_d(x) over Z.
IntPolynomial cyclotomic(std::uint64_t d);
/// Phi_d^+ with Phi_d(x) = x^{phi(d)/2} Phi_d^+(x + 1/x). d >= 3.
IntPolynomial real_cyclotomic(std::uint64_t d);
/// Psi_1 = x - 1, Psi_2 = 2(x + 1), Psi_d = Phi_d^+(2x)^2.
IntPolynomial psi(std::uint64_t d);
/// T_n(x) - 1 == prod_{d | n} Psi_d(x) exactly over Z.
bool cyclotomic_factorization_check(std::uint64_t n);

struct SplittingReport {
  std::uint64_t d = 0;
  std::uint64_t p = 0;
  bool splits = false;     // phi(d)/2 distinct roots mod p
  bool predicted = false;  // d | p-1 or d | p+1
  std::vector<std::uint64_t> roots;  // roots of Phi_d^+(2x) mod p, sorted
};

/// Root scan of Phi_d^+(2x) over [0, p).
SplittingReport splitting_check(std::uint64_t d, std::uint64_t p);

/// eps(T_n(a)) == eps(a), and delta(T_n(a)) is 1 for even n, delta(a) for
/// odd n. nullopt when T_n(a) == +-1 (hypothesis fails). a must not be
/// 0 or +-1 mod p.
std::optional<bool> character_transport_check(std::uint64_t a, std::uint64_t n, std::uint64_t p);

struct ShiftPart {
  std::string source;   // "Q+1", "Q-1", "N+1", "N-1"
  bool symmetric = false;
  CharPair cell;        // the A cell this part should coincide with
  std::vector<std::uint64_t> shifted;      // part of the shifted set, 1 and p-1 dropped
  std::vector<std::uint64_t> shifted_back; // shifted back into Q or N
  bool identified = false;                 // shifted == A_cell
};

struct ShiftRefinement {
  std::uint64_t p = 0;
  std::vector<ShiftPart> parts;  // Q+1 sym, Q+1 non, Q-1 sym, Q-1 non, N+1 ..., N-1 ...

  bool all_identified() const;
  const ShiftPart& find(const std::string& source, bool symmetric) const;
};

/// Splits each of Q+1, Q-1, N+1, N-1 (minus 1 and p-1) into its part closed
/// under a -> p-a and the rest, matches each with an A cell, shifts back.
ShiftRefinement residue_shift_refinement(const PartitionTable& table);
ShiftRefinement residue_shift_refinement(std::uint64_t p);

}  // namespace cheb
