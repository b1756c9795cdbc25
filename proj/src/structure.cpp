#include "cheb/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/primes.hpp"

namespace cheb {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw UsageError("expected an odd prime, got " + std::to_string(p));
  }
}

int cell_index(int eps, int delta) {
  if ((eps != 1 && eps != -1) || (delta != 1 && delta != -1)) {
    throw UsageError("cell signs must be +-1");
  }
  return (eps > 0 ? 0 : 2) + (delta > 0 ? 0 : 1);
}

CharPair word_characters(std::uint64_t a, std::uint64_t p) {
  const std::uint64_t disc = word::submod(word::mulmod(a, a, p), 1, p);
  const std::uint64_t twice = word::mulmod(2, word::addmod(a % p, 1, p), p);
  return {word::jacobi(disc, p), word::jacobi(twice, p)};
}

bool in_domain(std::uint64_t a, std::uint64_t p) { return a < p && a != 1 && a != p - 1; }

}  // namespace

std::vector<std::uint64_t> residue_domain(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  if (p < 3) {
    return out;
  }
  out.push_back(0);
  for (std::uint64_t a = 2; a + 2 <= p; ++a) {
    out.push_back(a);
  }
  return out;
}

std::string cell_name(const CharPair& cell) {
  return std::string(cell.eps > 0 ? "+" : "-") + (cell.delta > 0 ? "+" : "-");
}

const std::vector<std::uint64_t>& PartitionTable::cell(int eps, int delta) const {
  return sets[static_cast<std::size_t>(cell_index(eps, delta))];
}

// ---------------------------------------------------------------------------
// Orders

std::uint64_t ord_linear(std::uint64_t a, std::uint64_t p) {
  require_odd_prime(p);
  if (!in_domain(a, p)) {
    throw UsageError("ord: " + std::to_string(a) + " is not in R_" + std::to_string(p));
  }
  std::uint64_t prev = 1;
  std::uint64_t cur = a;
  const std::uint64_t two_a = word::addmod(a, a, p);
  for (std::uint64_t n = 1;; ++n) {
    if (cur == 1) {
      return n;
    }
    const std::uint64_t next = word::submod(word::mulmod(two_a, cur, p), prev, p);
    prev = cur;
    cur = next;
  }
}

std::uint64_t ord(std::uint64_t a, std::uint64_t p) {
  require_odd_prime(p);
  if (!in_domain(a, p)) {
    throw UsageError("ord: " + std::to_string(a) + " is not in R_" + std::to_string(p));
  }
  const int eps = word_characters(a, p).eps;
  std::uint64_t n = eps > 0 ? p - 1 : p + 1;
  const word::Pair one{1, 0};
  if (word::cheb_eval(a, n, p) != one) {
    throw std::logic_error("w_a^(p-eps) != 1 for a = " + std::to_string(a) + ", p = " + std::to_string(p));
  }
  for (auto [q, e] : factorize(n)) {
    for (int i = 0; i < e && word::cheb_eval(a, n / q, p) == one; ++i) {
      n /= q;
    }
  }
  // T_n = 1 forces U_{n-1} = 0 and T_{n+1} = a.
  const word::Pair next = word::cheb_eval(a, n + 1, p);
  if (next.t != a) {
    throw std::logic_error("period check failed for a = " + std::to_string(a));
  }
  if (p < 200 && ord_linear(a, p) != n) {
    throw std::logic_error("order mismatch against linear scan for a = " + std::to_string(a));
  }
  return n;
}

// ---------------------------------------------------------------------------
// Partition

PartitionTable partition(std::uint64_t p, SearchOptions options) {
  require_odd_prime(p);
  PartitionTable table;
  table.p = p;
  const std::vector<std::uint64_t> domain = residue_domain(p);

  struct Row {
    std::uint64_t a;
    int cell;
    std::uint64_t order;
  };
  const std::vector<Row> rows = parallel_collect<Row>(
      domain.size(), options.threads,
      [&](std::size_t i) -> std::optional<Row> {
        const std::uint64_t a = domain[i];
        const CharPair c = word_characters(a, p);
        const int by_characters = cell_index(c.eps, c.delta);
        // second route: which delta does T_{(p-eps)/2}(a) land on?
        const std::uint64_t half = c.eps > 0 ? (p - 1) / 2 : (p + 1) / 2;
        const std::uint64_t t = word::cheb_eval(a, half, p).t;
        int delta_by_t = 0;
        if (t == 1) {
          delta_by_t = 1;
        } else if (t == p - 1) {
          delta_by_t = -1;
        }
        if (delta_by_t == 0 || cell_index(c.eps, delta_by_t) != by_characters) {
          throw std::logic_error("partition routes disagree at a = " + std::to_string(a) + ", p = " +
                                 std::to_string(p));
        }
        return Row{a, by_characters, ord(a, p)};
      },
      256);
  for (const Row& r : rows) {
    table.sets[static_cast<std::size_t>(r.cell)].push_back(r.a);
    table.orders.emplace(r.a, r.order);
  }
  return table;
}

OrderClasses order_class_decomposition(const PartitionTable& table) {
  OrderClasses out;
  out.p = table.p;
  for (auto [a, d] : table.orders) {
    out.classes[d].push_back(a);
  }
  if (!verify_order_unions(table, out) || !verify_class_sizes(out)) {
    throw std::logic_error("order-class identities fail at p = " + std::to_string(table.p));
  }
  return out;
}

OrderClasses order_class_decomposition(std::uint64_t p, SearchOptions options) {
  return order_class_decomposition(partition(p, options));
}

bool verify_order_unions(const PartitionTable& table, const OrderClasses& classes) {
  const std::uint64_t p = table.p;
  for (const CharPair& c : kCells) {
    const std::uint64_t full = c.eps > 0 ? p - 1 : p + 1;
    std::vector<std::uint64_t> uni;
    for (const auto& [d, members] : classes.classes) {
      if (d <= 2 || full % d != 0) {
        continue;
      }
      const bool divides_half = (full / 2) % d == 0;
      if (divides_half == (c.delta > 0)) {
        uni.insert(uni.end(), members.begin(), members.end());
      }
    }
    std::sort(uni.begin(), uni.end());
    if (uni != table.cell(c.eps, c.delta)) {
      return false;
    }
  }
  return true;
}

bool verify_class_sizes(const OrderClasses& classes) {
  const std::uint64_t p = classes.p;
  for (const auto& [d, members] : classes.classes) {
    if (d <= 2 || members.size() != euler_phi(d) / 2) {
      return false;
    }
  }
  // every d > 2 dividing p-1 or p+1 occurs
  for (std::uint64_t n : {p - 1, p + 1}) {
    for (std::uint64_t d : divisors(n)) {
      if (d > 2 && !classes.classes.contains(d)) {
        return false;
      }
    }
  }
  for (const auto& [d, members] : classes.classes) {
    if ((p - 1) % d != 0 && (p + 1) % d != 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

IntPolynomial cyclotomic(std::uint64_t d) {
  if (d == 0) {
    throw UsageError("cyclotomic: d must be >= 1");
  }
  // Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}
  IntPolynomial num{1};
  std::vector<IntPolynomial> dens;
  for (std::uint64_t e : divisors(d)) {
    const int mu = mobius(d / e);
    if (mu == 0) {
      continue;
    }
    IntPolynomial factor = IntPolynomial::monomial(1, e) - IntPolynomial{1};
    if (mu > 0) {
      num = num * factor;
    } else {
      dens.push_back(std::move(factor));
    }
  }
  for (const auto& den : dens) {
    num = num.divide_exact(den);
  }
  return num;
}

IntPolynomial real_cyclotomic(std::uint64_t d) {
  if (d < 3) {
    throw UsageError("real_cyclotomic needs d >= 3, got " + std::to_string(d));
  }
  const IntPolynomial phi = cyclotomic(d);
  const auto& c = phi.coefficients();
  const std::size_t deg = c.size() - 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (c[k] != c[deg - k]) {
      throw std::logic_error("Phi_" + std::to_string(d) + " is not self-reciprocal");
    }
  }
  const std::size_t half = deg / 2;
  // x^k + x^-k = D_k(y), y = x + 1/x: D_0 = 2, D_1 = y, D_{k+1} = y D_k - D_{k-1}
  const IntPolynomial y{0, 1};
  IntPolynomial result = IntPolynomial::constant(c[half]);
  IntPolynomial prev{2};
  IntPolynomial cur = y;
  for (std::size_t k = 1; k <= half; ++k) {
    result = result + cur * c[half + k];
    IntPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return result;
}

IntPolynomial psi(std::uint64_t d) {
  if (d == 0) {
    throw UsageError("psi: d must be >= 1");
  }
  if (d == 1) {
    return IntPolynomial{-1, 1};
  }
  if (d == 2) {
    return IntPolynomial{2, 2};
  }
  const IntPolynomial half = real_cyclotomic(d).scale_argument(2);
  return half * half;
}

bool cyclotomic_factorization_check(std::uint64_t n) {
  if (n == 0) {
    throw UsageError("cyclotomic_factorization_check: n must be >= 1");
  }
  IntPolynomial product{1};
  for (std::uint64_t d : divisors(n)) {
    product = product * psi(d);
  }
  return product == chebyshev_t(n) - IntPolynomial{1};
}

SplittingReport splitting_check(std::uint64_t d, std::uint64_t p) {
  require_odd_prime(p);
  if (d < 3) {
    throw UsageError("splitting_check needs d >= 3");
  }
  SplittingReport r;
  r.d = d;
  r.p = p;
  r.predicted = (p - 1) % d == 0 || (p + 1) % d == 0;
  const IntPolynomial poly = real_cyclotomic(d).scale_argument(2);
  for (std::uint64_t x = 0; x < p; ++x) {
    if (poly.evaluate_mod(x, p) == 0) {
      r.roots.push_back(x);
    }
  }
  r.splits = static_cast<long>(r.roots.size()) == poly.degree();
  return r;
}

std::optional<bool> character_transport_check(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p);
  a %= p;
  if (a == 0 || a == 1 || a == p - 1) {
    throw DomainError("character transport needs a not in {0, +-1} mod p");
  }
  if (n == 0) {
    throw UsageError("character transport needs n >= 1");
  }
  const std::uint64_t b = word::cheb_eval(a, n, p).t;
  if (b == 1 || b == p - 1) {
    return std::nullopt;
  }
  const CharPair ca = word_characters(a, p);
  const CharPair cb = word_characters(b, p);
  const int expected_delta = n % 2 == 0 ? 1 : ca.delta;
  return cb.eps == ca.eps && cb.delta == expected_delta;
}

// ---------------------------------------------------------------------------
// Residue-shift refinement

bool ShiftRefinement::all_identified() const {
  return std::all_of(parts.begin(), parts.end(), [](const ShiftPart& s) { return s.identified; });
}

const ShiftPart& ShiftRefinement::find(const std::string& source, bool symmetric) const {
  for (const ShiftPart& s : parts) {
    if (s.source == source && s.symmetric == symmetric) {
      return s;
    }
  }
  throw UsageError("no shift part " + source);
}

ShiftRefinement residue_shift_refinement(const PartitionTable& table) {
  const std::uint64_t p = table.p;
  ShiftRefinement out;
  out.p = p;
  const int minus_one = word::jacobi(p - 1, p);
  const int two = word::jacobi(2, p);

  for (const bool residues : {true, false}) {
    for (const int shift : {1, -1}) {
      std::set<std::uint64_t> shifted;
      for (std::uint64_t x = 1; x < p; ++x) {
        if ((word::jacobi(x, p) > 0) != residues) {
          continue;
        }
        const std::uint64_t b = shift > 0 ? (x + 1) % p : x - 1;
        if (b != 1 && b != p - 1) {
          shifted.insert(b);
        }
      }
      // b = x + shift with x in Q (or N): the character of b - shift fixes
      // one of ((b-1)/p) = (2/p) eps delta, ((b+1)/p) = (2/p) delta.
      const int target = residues ? 1 : -1;
      for (const bool symmetric : {true, false}) {
        ShiftPart part;
        part.source = std::string(residues ? "Q" : "N") + (shift > 0 ? "+1" : "-1");
        part.symmetric = symmetric;
        const int eps = symmetric ? minus_one : -minus_one;
        const int delta = shift > 0 ? target * two * eps : target * two;
        part.cell = {eps, delta};
        for (std::uint64_t b : shifted) {
          const bool sym = shifted.contains((p - b) % p);
          if (sym == symmetric) {
            part.shifted.push_back(b);
            part.shifted_back.push_back(shift > 0 ? (b + p - 1) % p : (b + 1) % p);
          }
        }
        std::sort(part.shifted_back.begin(), part.shifted_back.end());
        part.identified = part.shifted == table.cell(eps, delta);
        out.parts.push_back(std::move(part));
      }
    }
  }
  return out;
}

ShiftRefinement residue_shift_refinement(std::uint64_t p) { return residue_shift_refinement(partition(p)); }

}  // namespace cheb
