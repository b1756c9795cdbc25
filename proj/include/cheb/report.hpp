#pragma once

// JSON and CSV shapes for the structured results.

#include <string>
#include <vector>

#include "cheb/criteria.hpp"
#include "cheb/expsum.hpp"
#include "cheb/structure.hpp"
#include "json.hpp"

namespace cheb {

using Json = nlohmann::ordered_json;

/// Numbers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& v);

/// {n, base, kind, passed, profile}
Json to_json(const PseudoprimeVerdict& verdict);
/// {p, base, u_mod_p2}
Json to_json(const WieferichHit& hit);
/// {p, sets: {"++": [...], ...}, orders: {"a": d, ...}}
Json to_json(const PartitionTable& table);

/// Header "a,eps,delta,order", one row per residue of R_p.
std::string partition_csv(const PartitionTable& table);

inline constexpr const char* kExpSumCsvHeader = "p,|g++|,|g+-|,|g-+|,|g--|,|S|,bound,max_ratio";
std::string expsum_csv_row(const ExpSumReport& report);

/// "[1,2,3]"
std::string format_list(const std::vector<std::uint64_t>& values);
std::string format_list(const std::vector<Integer>& values);
/// "23.43", "103^2", "5.7.443"
std::string format_factorization(std::uint64_t n);

}  // namespace cheb
