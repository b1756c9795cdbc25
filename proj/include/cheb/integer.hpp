#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cheb {

using Integer = mpz_class;

inline Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline Integer to_integer(std::int64_t v) {
  Integer r = to_integer(static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v));
  if (v < 0) {
    r = -r - 1;
  }
  return r;
}

inline Integer to_integer(int v) { return Integer(v); }

/// Parses a base-10 integer with optional sign; throws UsageError on junk.
Integer parse_integer(std::string_view text);

inline bool fits_u64(const Integer& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& v) {
  std::uint64_t r = 0;
  if (sgn(v) != 0) {
    mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  }
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Canonical residue in [0, m) for m > 0.
inline Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace cheb
