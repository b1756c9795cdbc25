#include "cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "CLI11.hpp"
#include "cheb/aks.hpp"
#include "cheb/criteria.hpp"
#include "cheb/crypto.hpp"
#include "cheb/dh_socket.hpp"
#include "cheb/errors.hpp"
#include "cheb/expsum.hpp"
#include "cheb/invariants.hpp"
#include "cheb/modarith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/primes.hpp"
#include "cheb/report.hpp"
#include "cheb/structure.hpp"

namespace cheb::cli {

namespace {

enum class Format { table, json, csv };

struct Context {
  Format format = Format::table;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::ostream* out = nullptr;
  int status = 0;

  std::ostream& os() const { return *out; }
  SearchOptions search() const { return {threads}; }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string ok_fail(bool b) { return b ? "ok" : "FAIL"; }

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_array()) {
    std::string out;
    for (const Json& item : v) {
      out += (out.empty() ? "" : " ") + csv_cell(item);
    }
    return out;
  }
  if (v.is_null()) {
    return "";
  }
  return v.dump();
}

/// json: one record per line; csv: header from the first record's keys.
void print_records(const Context& ctx, const std::vector<Json>& records, const std::vector<std::string>& header) {
  if (ctx.format == Format::json) {
    for (const Json& r : records) {
      ctx.os() << r.dump() << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    ctx.os() << (i ? "," : "") << header[i];
  }
  ctx.os() << '\n';
  for (const Json& r : records) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      ctx.os() << (i ? "," : "") << csv_cell(r.at(header[i]));
    }
    ctx.os() << '\n';
  }
}

void print_record(const Context& ctx, const Json& record) {
  std::vector<std::string> header;
  for (const auto& item : record.items()) {
    header.push_back(item.key());
  }
  print_records(ctx, {record}, header);
}

void require_odd_prime(std::uint64_t p, std::uint64_t least = 3) {
  if (p < least || p % 2 == 0 || !is_prime(p)) {
    throw UsageError("expected an odd prime >= " + std::to_string(least) + ", got " + std::to_string(p));
  }
}

void require_odd_prime(const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw UsageError("expected an odd prime, got " + p.get_str());
  }
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string complex_text(Complex z) {
  std::ostringstream s;
  if (std::abs(z.imag()) < 5e-7) {
    z.imag(0);
  }
  s << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  return s.str();
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

// Listing order of the four cells: --, -+, +-, ++.
constexpr std::array<CharPair, 4> kListOrder = {CharPair{-1, -1}, CharPair{-1, 1}, CharPair{1, -1},
                                                CharPair{1, 1}};
constexpr std::array<CharPair, 4> kUnionOrder = {CharPair{1, 1}, CharPair{-1, 1}, CharPair{1, -1},
                                                 CharPair{-1, -1}};

// ---------------------------------------------------------------------------
// Subcommands

struct Command {
  CLI::App* app = nullptr;
  std::function<void(Context&)> action;
};

Command add_eval(CLI::App& root) {
  auto* sub = root.add_subcommand("eval", "T_n(a) and U_{n-1}(a) mod m");
  auto a = std::make_shared<std::string>();
  auto n = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  sub->add_option("-a", *a, "base")->required();
  sub->add_option("-n", *n, "index >= 0")->required();
  sub->add_option("-m", *m, "modulus >= 2")->required();
  return {sub, [=](Context& ctx) {
            const Integer A = parse_integer(*a);
            const Integer N = parse_integer(*n);
            const Integer M = parse_integer(*m);
            if (sgn(N) < 0) {
              throw UsageError("index must be nonnegative");
            }
            const ChebPair w = cheb_eval(RingElement(A, Modulus(M)), N);
            if (ctx.format == Format::table) {
              ctx.os() << "T=" << w.t.value().get_str() << " U=" << w.u.value().get_str() << '\n';
              return;
            }
            print_record(ctx, Json{{"a", integer_json(A)},
                                   {"n", integer_json(N)},
                                   {"m", integer_json(M)},
                                   {"T", integer_json(w.t.value())},
                                   {"U", integer_json(w.u.value())}});
          }};
}

Command add_characters(CLI::App& root) {
  auto* sub = root.add_subcommand("characters", "eps(a) = ((a^2-1)/p) and delta(a) = ((2(a+1))/p)");
  auto a = std::make_shared<std::string>();
  auto p = std::make_shared<std::string>();
  sub->add_option("-a", *a, "base")->required();
  sub->add_option("-p", *p, "odd modulus >= 3")->required();
  return {sub, [=](Context& ctx) {
            const Integer A = parse_integer(*a);
            const Integer P = parse_integer(*p);
            const CharPair c = characters(A, P);
            if (ctx.format == Format::table) {
              ctx.os() << "eps=" << c.eps << " delta=" << c.delta << '\n';
              return;
            }
            print_record(ctx, Json{{"a", integer_json(A)}, {"p", integer_json(P)}, {"eps", c.eps}, {"delta", c.delta}});
          }};
}

Command add_euler(CLI::App& root) {
  auto* sub = root.add_subcommand("euler", "Chebyshev-Euler congruences at an odd prime");
  auto a = std::make_shared<std::string>();
  auto p = std::make_shared<std::string>();
  auto mod_p2 = std::make_shared<bool>(false);
  sub->add_option("-a", *a, "base")->required();
  sub->add_option("-p", *p, "odd prime")->required();
  sub->add_flag("--mod-p2", *mod_p2, "also check the lift mod p^2");
  return {sub, [=](Context& ctx) {
            const Integer A = parse_integer(*a);
            const Integer P = parse_integer(*p);
            require_odd_prime(P);
            const EulerCongruences c = euler_congruences(A, P);
            if (ctx.format == Format::table) {
              ctx.os() << "eps=" << c.chars.eps << " delta=" << c.chars.delta << " T_half=" << ok_fail(c.t_half)
                       << " U_half=" << ok_fail(c.u_half) << " T_half_plus=" << ok_fail(c.t_half_plus)
                       << " U_half_plus=" << ok_fail(c.u_half_plus);
              if (*mod_p2) {
                ctx.os() << " T_half_mod_p2=" << ok_fail(c.t_half_mod_p2);
              }
              ctx.os() << '\n';
              return;
            }
            Json r{{"a", integer_json(A)},         {"p", integer_json(P)},
                   {"eps", c.chars.eps},           {"delta", c.chars.delta},
                   {"t_half", c.t_half},           {"u_half", c.u_half},
                   {"t_half_plus", c.t_half_plus}, {"u_half_plus", c.u_half_plus}};
            if (*mod_p2) {
              r["t_half_mod_p2"] = c.t_half_mod_p2;
            }
            print_record(ctx, r);
          }};
}

Command add_partition(CLI::App& root) {
  auto* sub = root.add_subcommand("partition", "the four cells A_{eps,delta} of R_p");
  auto p = std::make_shared<std::uint64_t>(0);
  sub->add_option("-p", *p, "odd prime")->required();
  return {sub, [=](Context& ctx) {
            require_odd_prime(*p);
            const PartitionTable t = partition(*p, ctx.search());
            switch (ctx.format) {
              case Format::table:
                for (const CharPair& c : kListOrder) {
                  ctx.os() << 'A' << cell_name(c) << '=' << format_list(t.cell(c.eps, c.delta)) << '\n';
                }
                break;
              case Format::json:
                ctx.os() << to_json(t).dump() << '\n';
                break;
              case Format::csv:
                ctx.os() << partition_csv(t);
                break;
            }
          }};
}

Command add_orders(CLI::App& root) {
  auto* sub = root.add_subcommand("orders", "the classes I_d of elements of order d, and the cells they make up");
  auto p = std::make_shared<std::uint64_t>(0);
  sub->add_option("-p", *p, "odd prime")->required();
  return {sub, [=](Context& ctx) {
            require_odd_prime(*p);
            const PartitionTable t = partition(*p, ctx.search());
            const OrderClasses oc = order_class_decomposition(t);
            if (ctx.format != Format::table) {
              std::vector<Json> records;
              for (const auto& [d, members] : oc.classes) {
                records.push_back(Json{{"p", *p}, {"d", d}, {"size", members.size()}, {"class", members}});
              }
              print_records(ctx, records, {"p", "d", "size", "class"});
              return;
            }
            for (const auto& [d, members] : oc.classes) {
              ctx.os() << 'I' << d << '=' << format_list(members) << '\n';
            }
            for (const CharPair& c : kUnionOrder) {
              const auto& cell = t.cell(c.eps, c.delta);
              std::string line;
              for (const auto& [d, members] : oc.classes) {
                if (!members.empty() && std::binary_search(cell.begin(), cell.end(), members.front())) {
                  line += (line.empty() ? "I" : " U I") + std::to_string(d);
                }
              }
              ctx.os() << 'A' << cell_name(c) << '=' << (line.empty() ? "-" : line) << '\n';
            }
          }};
}

Command add_splitting(CLI::App& root) {
  auto* sub = root.add_subcommand("splitting", "roots of Phi_d^+(2x) mod p");
  auto d = std::make_shared<std::uint64_t>(0);
  auto p = std::make_shared<std::uint64_t>(0);
  sub->add_option("-d", *d, "d >= 3")->required();
  sub->add_option("-p", *p, "odd prime")->required();
  return {sub, [=](Context& ctx) {
            require_odd_prime(*p);
            const SplittingReport r = splitting_check(*d, *p);
            if (ctx.format == Format::table) {
              ctx.os() << "d=" << r.d << " p=" << r.p << " splits=" << yes_no(r.splits)
                       << " predicted=" << yes_no(r.predicted) << " roots=" << format_list(r.roots) << '\n';
              return;
            }
            print_record(ctx, Json{{"d", r.d},
                                   {"p", r.p},
                                   {"splits", r.splits},
                                   {"predicted", r.predicted},
                                   {"roots", r.roots}});
          }};
}

Command add_cyclo_check(CLI::App& root) {
  auto* sub = root.add_subcommand("cyclo-check", "T_n(x) - 1 as the product of Psi_d(x), d | n");
  auto n = std::make_shared<std::uint64_t>(0);
  sub->add_option("-n", *n, "1 <= n <= 400")->required();
  return {sub, [=](Context& ctx) {
            if (*n < 1 || *n > 400) {
              throw UsageError("cyclo-check needs 1 <= n <= 400");
            }
            const bool holds = cyclotomic_factorization_check(*n);
            std::vector<Json> records;
            std::uint64_t degree_sum = 0;
            for (std::uint64_t d : divisors(*n)) {
              const IntPolynomial f = psi(d);
              degree_sum += static_cast<std::uint64_t>(f.degree());
              records.push_back(Json{{"n", *n}, {"d", d}, {"degree", f.degree()}, {"psi", f.to_string()}});
            }
            if (ctx.format != Format::table) {
              print_records(ctx, records, {"n", "d", "degree", "psi"});
              return;
            }
            const IntPolynomial lhs = chebyshev_t(*n) - IntPolynomial{1};
            ctx.os() << "T_" << *n << "(x) - 1 = " << lhs.to_string() << '\n';
            for (const Json& r : records) {
              ctx.os() << "Psi_" << r["d"].get<std::uint64_t>() << " = " << r["psi"].get<std::string>() << '\n';
            }
            ctx.os() << "degree_sum=" << degree_sum << " holds=" << yes_no(holds && degree_sum == *n) << '\n';
          }};
}

Command add_pseudoprimes(CLI::App& root) {
  auto* sub = root.add_subcommand("pseudoprimes", "odd composites passing a Chebyshev test");
  auto base = std::make_shared<std::int64_t>(0);
  auto limit = std::make_shared<std::uint64_t>(0);
  auto kind = std::make_shared<std::string>("full");
  sub->add_option("--base", *base, "base a")->required();
  sub->add_option("--limit", *limit, "search bound")->required();
  sub->add_option("--kind", *kind, "weak|full|strong")->check(CLI::IsMember({"weak", "full", "strong"}));
  return {sub, [=](Context& ctx) {
            const PseudoprimeKind k = parse_pseudoprime_kind(*kind);
            std::vector<PseudoprimeVerdict> rows;
            if (k == PseudoprimeKind::strong) {
              // Every full pseudoprime, with its strong verdict and profile.
              for (const PseudoprimeVerdict& v :
                   pseudoprime_search(*base, *limit, PseudoprimeKind::full, ctx.search())) {
                rows.push_back(strong_profile(v.n, v.base));
              }
            } else {
              rows = pseudoprime_search(*base, *limit, k, ctx.search());
            }
            if (ctx.format != Format::table) {
              std::vector<Json> records;
              for (const PseudoprimeVerdict& v : rows) {
                records.push_back(to_json(v));
              }
              print_records(ctx, records, {"n", "base", "kind", "passed", "profile"});
              return;
            }
            for (const PseudoprimeVerdict& v : rows) {
              ctx.os() << v.n.get_str() << ' ' << format_factorization(to_u64(v.n));
              if (k == PseudoprimeKind::strong) {
                ctx.os() << ' ' << (v.passed ? "pass" : "fail") << ' ' << format_list(display_profile(v));
              }
              ctx.os() << '\n';
            }
          }};
}

Command add_wieferich(CLI::App& root) {
  auto* sub = root.add_subcommand("wieferich", "primes with U_{(p-eps)/2-1}(a) == 0 mod p^2");
  auto base = std::make_shared<std::int64_t>(0);
  auto limit = std::make_shared<std::uint64_t>(0);
  auto from = std::make_shared<std::uint64_t>(5);
  sub->add_option("--base", *base, "base a")->required();
  sub->add_option("--limit", *limit, "prime bound")->required();
  sub->add_option("--from", *from, "least prime scanned (default 5)");
  return {sub, [=](Context& ctx) {
            const auto hits = wieferich_search(*base, *limit, ctx.search(), *from);
            if (ctx.format != Format::table) {
              std::vector<Json> records;
              for (const WieferichHit& h : hits) {
                records.push_back(Json{{"base", h.base}, {"p", h.p}});
              }
              print_records(ctx, records, {"base", "p"});
              return;
            }
            std::string list;
            for (const WieferichHit& h : hits) {
              list += (list.empty() ? "" : ",") + std::to_string(h.p);
            }
            ctx.os() << *base << ' ' << (list.empty() ? "-" : list) << '\n';
          }};
}

Command add_lucas_lehmer(CLI::App& root) {
  auto* sub = root.add_subcommand("lucas-lehmer", "Lucas-Lehmer residue next to 2 T_{2^(p-2)}(2) mod 2^p - 1");
  auto p = std::make_shared<unsigned>(0);
  sub->add_option("-p", *p, "prime exponent <= 20000")->required();
  return {sub, [=](Context& ctx) {
            if (*p > 20000) {
              throw UsageError("lucas-lehmer exponent must be at most 20000");
            }
            const LucasLehmerTrace t = lucas_lehmer_trace(*p);
            const bool agree = t.residue == t.chebyshev;
            if (!agree) {
              ctx.status = 1;
            }
            if (ctx.format == Format::table) {
              ctx.os() << "p=" << t.p << " prime=" << yes_no(t.is_prime) << " residue=" << t.residue.get_str()
                       << " chebyshev=" << t.chebyshev.get_str() << " agree=" << yes_no(agree) << '\n';
              return;
            }
            print_record(ctx, Json{{"p", t.p},
                                   {"mersenne", integer_json(t.mersenne)},
                                   {"prime", t.is_prime},
                                   {"residue", integer_json(t.residue)},
                                   {"chebyshev", integer_json(t.chebyshev)},
                                   {"agree", agree}});
          }};
}

Command add_taxicab(CLI::App& root) {
  auto* sub = root.add_subcommand("taxicab", "least simultaneous Fermat and weak Chebyshev pseudoprime to base 2");
  auto limit = std::make_shared<std::uint64_t>(0);
  sub->add_option("--limit", *limit, "search bound")->required();
  return {sub, [=](Context& ctx) {
            const auto n = taxicab_search(*limit);
            if (ctx.format == Format::table) {
              ctx.os() << (n ? std::to_string(*n) : "none") << '\n';
              return;
            }
            print_record(ctx, Json{{"limit", *limit}, {"n", n ? Json(*n) : Json(nullptr)}});
          }};
}

Command add_expsum(CLI::App& root) {
  auto* sub = root.add_subcommand("expsum", "exponential sums over the four cells");
  auto p = std::make_shared<std::uint64_t>(0);
  sub->add_option("-p", *p, "prime >= 5")->required();
  return {sub, [=](Context& ctx) {
            require_odd_prime(*p, 5);
            const ExpSumReport r = partition_sums(*p);
            const bool gauss = gauss_sums(*p).matches();
            const bool shifted = shifted_character_sums(*p).matches();
            const bool difference = difference_lemma_check(*p);
            const bool conj = conjugacy_check(r);
            const double weil = 2 * std::sqrt(static_cast<double>(*p));
            switch (ctx.format) {
              case Format::table:
                ctx.os() << "p=" << *p << " bound=" << fixed(r.bound) << " max_ratio=" << fixed(r.max_ratio) << '\n';
                for (std::size_t i = 0; i < kCells.size(); ++i) {
                  ctx.os() << 'g' << cell_name(kCells[i]) << '=' << complex_text(r.g[i])
                           << " abs=" << fixed(std::abs(r.g[i])) << '\n';
                }
                ctx.os() << "S=" << complex_text(r.S) << " abs=" << fixed(std::abs(r.S)) << " weil=" << fixed(weil)
                         << '\n';
                ctx.os() << "trick=" << ok_fail(r.trick_agrees()) << " bound=" << ok_fail(r.bound_holds())
                         << " weil=" << ok_fail(r.weil_holds()) << " total=" << ok_fail(r.total_matches())
                         << " gauss=" << ok_fail(gauss) << " shifted=" << ok_fail(shifted)
                         << " difference=" << ok_fail(difference) << " conjugacy=" << ok_fail(conj) << '\n';
                break;
              case Format::json: {
                Json cells = Json::object();
                for (std::size_t i = 0; i < kCells.size(); ++i) {
                  cells[cell_name(kCells[i])] = complex_json(r.g[i]);
                }
                ctx.os() << Json{{"p", *p},
                                 {"cells", cells},
                                 {"S", complex_json(r.S)},
                                 {"bound", r.bound},
                                 {"max_ratio", r.max_ratio},
                                 {"trick", r.trick_agrees()},
                                 {"bound_holds", r.bound_holds()},
                                 {"weil", r.weil_holds()},
                                 {"total", r.total_matches()},
                                 {"gauss", gauss},
                                 {"shifted", shifted},
                                 {"difference", difference},
                                 {"conjugacy", conj}}
                                .dump()
                         << '\n';
                break;
              }
              case Format::csv:
                ctx.os() << kExpSumCsvHeader << '\n' << expsum_csv_row(r) << '\n';
                break;
            }
          }};
}

Command add_expsum_sweep(CLI::App& root) {
  auto* sub = root.add_subcommand("expsum-sweep", "cell sums and the bound for every prime 5 <= p <= max");
  auto max = std::make_shared<std::uint64_t>(0);
  sub->add_option("--max", *max, "largest p")->required();
  return {sub, [=](Context& ctx) {
            if (*max > 200000) {
              throw UsageError("expsum-sweep --max must be at most 200000");
            }
            const std::vector<std::uint64_t> primes = primes_between(5, *max);
            const auto reports = parallel_collect<ExpSumReport>(
                primes.size(), ctx.threads, [&](std::size_t i) { return std::optional(partition_sums(primes[i])); },
                16);
            bool all = true;
            for (const ExpSumReport& r : reports) {
              all = all && r.bound_holds() && r.weil_holds();
            }
            switch (ctx.format) {
              case Format::csv:
                ctx.os() << kExpSumCsvHeader << '\n';
                for (const ExpSumReport& r : reports) {
                  ctx.os() << expsum_csv_row(r) << '\n';
                }
                break;
              case Format::json:
                for (const ExpSumReport& r : reports) {
                  Json abs = Json::array();
                  for (const Complex& g : r.g) {
                    abs.push_back(std::abs(g));
                  }
                  ctx.os() << Json{{"p", r.p},
                                   {"abs", abs},
                                   {"S", std::abs(r.S)},
                                   {"bound", r.bound},
                                   {"max_ratio", r.max_ratio}}
                                  .dump()
                           << '\n';
                }
                break;
              case Format::table:
                ctx.os() << std::setw(8) << "p";
                for (const CharPair& c : kCells) {
                  ctx.os() << std::setw(12) << "|g" + cell_name(c) + "|";
                }
                ctx.os() << std::setw(12) << "|S|" << std::setw(12) << "bound" << std::setw(12) << "max_ratio" << '\n';
                for (const ExpSumReport& r : reports) {
                  ctx.os() << std::setw(8) << r.p;
                  for (const Complex& g : r.g) {
                    ctx.os() << std::setw(12) << fixed(std::abs(g), 4);
                  }
                  ctx.os() << std::setw(12) << fixed(std::abs(r.S), 4) << std::setw(12) << fixed(r.bound, 4)
                           << std::setw(12) << fixed(r.max_ratio, 4) << '\n';
                }
                ctx.os() << "bound=" << ok_fail(all) << '\n';
                break;
            }
          }};
}

Command add_primroot(CLI::App& root) {
  auto* sub = root.add_subcommand("primroot", "least primes where w_a has order p-1 and p+1");
  auto a = std::make_shared<std::int64_t>(0);
  auto limit = std::make_shared<std::uint64_t>(0);
  sub->add_option("-a", *a, "base")->required();
  sub->add_option("--limit", *limit, "prime bound")->required();
  return {sub, [=](Context& ctx) {
            const PrimitiveRootReport r = primitive_root_search(*a, *limit, ctx.search());
            auto text = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; };
            auto json = [](const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); };
            if (ctx.format == Format::table) {
              ctx.os() << "a=" << r.a << " p-1=" << text(r.least_p_minus) << " p+1=" << text(r.least_p_plus)
                       << " chebyshev_square=" << yes_no(r.chebyshev_square) << '\n';
              return;
            }
            print_record(ctx, Json{{"a", r.a},
                                   {"least_p_minus", json(r.least_p_minus)},
                                   {"least_p_plus", json(r.least_p_plus)},
                                   {"chebyshev_square", r.chebyshev_square}});
          }};
}

Integer draw_secret(gmp_randclass& rng, const Integer& p) {
  return Integer(rng.get_z_range(Integer(p - 1))) + 1;
}

void print_party(const Context& ctx, const std::string& name, const DhParty& party) {
  if (ctx.format == Format::table) {
    ctx.os() << name << " sent=" << party.sent.get_str()
             << " received=" << (party.received ? party.received->get_str() : "-")
             << " shared=" << (party.shared ? party.shared->get_str() : "-") << '\n';
    return;
  }
  print_record(ctx, Json{{"party", name},
                         {"p", integer_json(party.p)},
                         {"g", integer_json(party.g)},
                         {"sent", integer_json(party.sent)},
                         {"received", party.received ? integer_json(*party.received) : Json(nullptr)},
                         {"shared", party.shared ? integer_json(*party.shared) : Json(nullptr)}});
}

Command add_dh_demo(CLI::App& root) {
  auto* sub = root.add_subcommand("dh-demo", "Chebyshev Diffie-Hellman exchange");
  auto p = std::make_shared<std::string>();
  auto g = std::make_shared<std::string>();
  auto secret_a = std::make_shared<std::string>();
  auto secret_b = std::make_shared<std::string>();
  auto listen = std::make_shared<std::string>();
  auto connect = std::make_shared<std::string>();
  sub->add_option("-p", *p, "odd prime")->required();
  sub->add_option("-g", *g, "base in [0, p)")->required();
  sub->add_option("--secret-a", *secret_a, "first party's secret (default: drawn from --seed)");
  sub->add_option("--secret-b", *secret_b, "second party's secret (default: drawn from --seed)");
  auto* l = sub->add_option("--listen", *listen, "HOST:PORT; run the first party over TCP");
  auto* c = sub->add_option("--connect", *connect, "HOST:PORT; run the second party over TCP");
  l->excludes(c);
  return {sub, [=](Context& ctx) {
            const Integer P = parse_integer(*p);
            const Integer G = parse_integer(*g);
            require_odd_prime(P);
            gmp_randclass rng(gmp_randinit_default);
            rng.seed(to_integer(ctx.seed));
            const Integer xa = secret_a->empty() ? draw_secret(rng, P) : parse_integer(*secret_a);
            const Integer xb = secret_b->empty() ? draw_secret(rng, P) : parse_integer(*secret_b);
            if (!listen->empty()) {
              const auto [host, port] = parse_endpoint(*listen);
              DhListener listener(host, port);
              print_party(ctx, "alice", listener.exchange(dh_keygen(P, G, xa)));
              return;
            }
            if (!connect->empty()) {
              const auto [host, port] = parse_endpoint(*connect);
              print_party(ctx, "bob", dh_connect(host, port, dh_keygen(P, G, xb)));
              return;
            }
            const DhTranscript t = dh_demo(P, G, xa, xb);
            const bool agree = t.alice.shared && t.bob.shared && *t.alice.shared == *t.bob.shared;
            if (!agree) {
              ctx.status = 1;
            }
            if (ctx.format == Format::table) {
              ctx.os() << "alice -> bob: " << t.alice_wire << '\n';
              ctx.os() << "bob -> alice: " << t.bob_wire << '\n';
              print_party(ctx, "alice", t.alice);
              print_party(ctx, "bob", t.bob);
              ctx.os() << "agree=" << yes_no(agree) << '\n';
              return;
            }
            print_records(ctx,
                          {Json{{"p", integer_json(P)},
                                {"g", integer_json(G)},
                                {"alice_wire", t.alice_wire},
                                {"bob_wire", t.bob_wire},
                                {"alice_shared", integer_json(*t.alice.shared)},
                                {"bob_shared", integer_json(*t.bob.shared)},
                                {"agree", agree}}},
                          {"p", "g", "alice_wire", "bob_wire", "alice_shared", "bob_shared", "agree"});
          }};
}

Command add_dlog(CLI::App& root) {
  auto* sub = root.add_subcommand("dlog", "least n >= 1 with T_n(g) == t mod p, by forward iteration");
  auto p = std::make_shared<std::uint64_t>(0);
  auto g = std::make_shared<std::uint64_t>(0);
  auto t = std::make_shared<std::uint64_t>(0);
  sub->add_option("-p", *p, "odd prime <= 10^6")->required();
  sub->add_option("-g", *g, "base")->required();
  sub->add_option("-t", *t, "target")->required();
  return {sub, [=](Context& ctx) {
            require_odd_prime(*p);
            const auto n = discrete_log_bruteforce(*p, *g % *p, *t % *p);
            if (ctx.format == Format::table) {
              ctx.os() << (n ? "n=" + std::to_string(*n) : "none") << '\n';
              return;
            }
            print_record(ctx, Json{{"p", *p}, {"g", *g}, {"t", *t}, {"n", n ? Json(*n) : Json(nullptr)}});
          }};
}

Command add_aks_check(CLI::App& root) {
  auto* sub = root.add_subcommand("aks-check", "T_n(x) == x^n mod n, and optionally T_n(x+a) == T_n(x) + a");
  auto n = std::make_shared<std::uint64_t>(0);
  auto shift = std::make_shared<std::optional<std::uint64_t>>();
  sub->add_option("-n", *n, "2 <= n <= 10000")->required();
  sub->add_option("--shift", *shift, "shift a, gcd(a, n) = 1");
  return {sub, [=](Context& ctx) {
            if (*n < 2) {
              throw UsageError("aks-check needs n >= 2");
            }
            const bool power = prime_iff_power_check(*n);
            std::optional<bool> shifted;
            if (*shift) {
              shifted = shifted_congruence_check(*n, **shift);
            }
            if (ctx.format == Format::table) {
              ctx.os() << "n=" << *n << " prime=" << yes_no(is_prime(*n)) << " power=" << yes_no(power);
              if (shifted) {
                ctx.os() << " shift(" << **shift << ")=" << yes_no(*shifted);
              }
              ctx.os() << '\n';
              return;
            }
            Json r{{"n", *n}, {"prime", is_prime(*n)}, {"power", power}};
            if (shifted) {
              r["shift"] = **shift;
              r["shifted"] = *shifted;
            }
            print_record(ctx, r);
          }};
}

Command add_coeff(CLI::App& root) {
  auto* sub = root.add_subcommand("coeff", "coefficient a_k of x^(n-2k) in T_n(x), three ways");
  auto n = std::make_shared<std::uint64_t>(0);
  auto k = std::make_shared<std::uint64_t>(0);
  sub->add_option("-n", *n, "1 <= n <= 10000")->required();
  sub->add_option("-k", *k, "1 <= k <= n/2")->required();
  return {sub, [=](Context& ctx) {
            if (*n > kMaxPolyDegree) {
              throw ResourceError("coeff: n above " + std::to_string(kMaxPolyDegree));
            }
            const Integer formula = coefficient_formula(*n, *k);
            const Integer sum = coefficient_double_sum(*n, *k);
            const Integer recurrence = chebyshev_t(*n).coefficient(*n - 2 * *k);
            const bool agree = formula == sum && formula == recurrence;
            if (!agree) {
              ctx.status = 1;
            }
            if (ctx.format == Format::table) {
              ctx.os() << "n=" << *n << " k=" << *k << " a_k=" << formula.get_str() << " double_sum=" << sum.get_str()
                       << " recurrence=" << recurrence.get_str() << " agree=" << yes_no(agree) << '\n';
              return;
            }
            print_record(ctx, Json{{"n", *n},
                                   {"k", *k},
                                   {"a_k", integer_json(formula)},
                                   {"double_sum", integer_json(sum)},
                                   {"recurrence", integer_json(recurrence)},
                                   {"agree", agree}});
          }};
}

Command add_selftest(CLI::App& root) {
  auto* sub = root.add_subcommand("selftest", "seeded randomized invariants");
  auto samples = std::make_shared<std::uint64_t>(1000);
  sub->add_option("--samples", *samples, "instances per invariant (default 1000)");
  return {sub, [=](Context& ctx) {
            std::vector<Json> records;
            for (Invariant which : kAllInvariants) {
              const InvariantTally t = run_invariant(which, *samples, ctx.seed);
              if (t.failures != 0) {
                ctx.status = 1;
              }
              if (ctx.format == Format::table) {
                ctx.os() << to_string(which) << ' ' << t.samples - t.failures << '/' << t.samples << ' '
                         << ok_fail(t.failures == 0);
                if (t.failures != 0) {
                  ctx.os() << " first: " << t.first_failure;
                }
                ctx.os() << '\n';
              }
              records.push_back(Json{{"invariant", to_string(which)},
                                     {"seed", ctx.seed},
                                     {"samples", t.samples},
                                     {"failures", t.failures},
                                     {"first_failure", t.first_failure}});
            }
            if (ctx.format != Format::table) {
              print_records(ctx, records, {"invariant", "seed", "samples", "failures", "first_failure"});
            }
          }};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Chebyshev polynomial arithmetic over residue rings", "chebtool");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  Context ctx;
  ctx.out = &out;
  app.add_option("--format", format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--threads", ctx.threads, "worker threads (default: available parallelism)");
  app.add_option("--seed", ctx.seed, "seed for randomized runs");

  const std::vector<Command> commands = {
      add_eval(app),          add_characters(app), add_euler(app),        add_partition(app), add_orders(app),
      add_splitting(app),     add_cyclo_check(app), add_pseudoprimes(app), add_wieferich(app), add_lucas_lehmer(app),
      add_taxicab(app),       add_expsum(app),     add_expsum_sweep(app), add_primroot(app),  add_dh_demo(app),
      add_dlog(app),          add_aks_check(app),  add_coeff(app),        add_selftest(app),
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  static const std::map<std::string, Format> formats = {
      {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
  ctx.format = formats.at(format);

  try {
    for (const Command& c : commands) {
      if (c.app->parsed()) {
        c.action(ctx);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ProtocolError& e) {
    err << "protocol error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  out.flush();
  return ctx.status;
}

}  // namespace cheb::cli
