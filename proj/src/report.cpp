#include "cheb/report.hpp"

#include <iomanip>
#include <sstream>

#include "cheb/primes.hpp"

namespace cheb {

Json integer_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    return static_cast<long long>(v.get_si());
  }
  return v.get_str();
}

Json to_json(const PseudoprimeVerdict& verdict) {
  Json profile = Json::array();
  for (const Integer& r : display_profile(verdict)) {
    profile.push_back(integer_json(r));
  }
  return Json{{"n", integer_json(verdict.n)},
              {"base", integer_json(verdict.base)},
              {"kind", to_string(verdict.kind)},
              {"passed", verdict.passed},
              {"profile", std::move(profile)}};
}

Json to_json(const WieferichHit& hit) { return Json{{"p", hit.p}, {"base", hit.base}, {"u_mod_p2", hit.u_mod_p2}}; }

Json to_json(const PartitionTable& table) {
  Json sets = Json::object();
  for (std::size_t i = 0; i < kCells.size(); ++i) {
    sets[cell_name(kCells[i])] = table.sets[i];
  }
  Json orders = Json::object();
  for (auto [a, d] : table.orders) {
    orders[std::to_string(a)] = d;
  }
  return Json{{"p", table.p}, {"sets", std::move(sets)}, {"orders", std::move(orders)}};
}

std::string partition_csv(const PartitionTable& table) {
  std::vector<int> eps(table.p, 0);
  std::vector<int> delta(table.p, 0);
  for (std::size_t i = 0; i < kCells.size(); ++i) {
    for (std::uint64_t a : table.sets[i]) {
      eps[a] = kCells[i].eps;
      delta[a] = kCells[i].delta;
    }
  }
  std::ostringstream out;
  out << "a,eps,delta,order\n";
  for (auto [a, d] : table.orders) {
    out << a << ',' << eps[a] << ',' << delta[a] << ',' << d << '\n';
  }
  return out.str();
}

std::string expsum_csv_row(const ExpSumReport& r) {
  std::ostringstream out;
  out << std::setprecision(12) << r.p;
  for (const Complex& g : r.g) {
    out << ',' << std::abs(g);
  }
  out << ',' << std::abs(r.S) << ',' << r.bound << ',' << r.max_ratio;
  return out.str();
}

std::string format_list(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + "]";
}

std::string format_list(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + values[i].get_str();
  }
  return out + "]";
}

std::string format_factorization(std::uint64_t n) {
  std::string out;
  for (auto [p, e] : factorize(n)) {
    if (!out.empty()) {
      out += '.';
    }
    out += std::to_string(p);
    if (e > 1) {
      out += '^' + std::to_string(e);
    }
  }
  return out;
}

}  // namespace cheb
