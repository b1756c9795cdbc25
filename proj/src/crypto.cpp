#include "cheb/crypto.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cheb/errors.hpp"
#include "cheb/modarith.hpp"
#include "cheb/parallel.hpp"
#include "cheb/primes.hpp"
#include "cheb/structure.hpp"

namespace cheb {

bool is_chebyshev_square(const Integer& a) {
  // a = 2x^2 - 1  <=>  a odd, a >= -1 and (a + 1) / 2 a perfect square
  if (a < -1 || mpz_even_p(a.get_mpz_t())) {
    return false;
  }
  const Integer half = (a + 1) / 2;
  return mpz_perfect_square_p(half.get_mpz_t()) != 0;
}

PrimitiveRootReport primitive_root_search(std::int64_t a, std::uint64_t prime_limit, SearchOptions options) {
  if (a == 0 || a == 1 || a == -1) {
    throw UsageError("primitive_root_search: a must not be 0 or +-1");
  }
  PrimitiveRootReport report;
  report.a = a;
  report.chebyshev_square = is_chebyshev_square(to_integer(a));
  const std::vector<std::uint64_t> primes = primes_between(3, prime_limit);
  const Integer disc = to_integer(a) * to_integer(a) - 1;

  struct Hit {
    std::uint64_t p;
    bool minus;
  };
  constexpr std::size_t kChunk = 512;
  for (std::size_t start = 0; start < primes.size(); start += kChunk) {
    const std::size_t count = std::min(kChunk, primes.size() - start);
    const auto hits = parallel_collect<Hit>(
        count, options.threads,
        [&](std::size_t i) -> std::optional<Hit> {
          const std::uint64_t p = primes[start + i];
          if (mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) {
            return std::nullopt;
          }
          const std::uint64_t r = to_u64(mod_floor(to_integer(a), to_integer(p)));
          const std::uint64_t d = ord(r, p);
          if (d == p - 1) {
            return Hit{p, true};
          }
          if (d == p + 1) {
            return Hit{p, false};
          }
          return std::nullopt;
        },
        32);
    for (const Hit& h : hits) {
      auto& slot = h.minus ? report.least_p_minus : report.least_p_plus;
      if (!slot) {
        slot = h.p;
      }
    }
    if (report.least_p_minus && report.least_p_plus) {
      break;
    }
  }
  return report;
}

std::uint64_t full_order_base(std::uint64_t p) {
  for (std::uint64_t g : residue_domain(p)) {
    const int eps = jacobi(static_cast<std::int64_t>(g * g % p) - 1, p);
    if (ord(g, p) == (eps > 0 ? p - 1 : p + 1)) {
      return g;
    }
  }
  throw DomainError("no full-order base mod " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Key exchange

DhParty dh_keygen(const Integer& p, const Integer& g, const Integer& secret) {
  if (sgn(secret) <= 0) {
    throw UsageError("DH secret must be a positive integer");
  }
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw UsageError("DH modulus must be an odd prime");
  }
  if (sgn(g) < 0 || g >= p) {
    throw UsageError("DH base must lie in [0, p)");
  }
  const Modulus mod(p);
  DhParty party{p, g, secret, cheb_eval(RingElement(g, mod), secret).t.value(), std::nullopt, std::nullopt};
  return party;
}

DhParty dh_finish(const DhParty& party, const Integer& peer_value) {
  if (sgn(peer_value) < 0 || peer_value >= party.p) {
    throw ProtocolError("peer value " + peer_value.get_str() + " is outside [0, " + party.p.get_str() + ")");
  }
  DhParty next = party;
  next.received = peer_value;
  next.shared = cheb_eval(RingElement(peer_value, Modulus(party.p)), party.secret).t.value();
  return next;
}

DhMessage message_of(const DhParty& party) { return {party.p, party.g, party.sent}; }

namespace {

constexpr std::size_t kMaxDigits = 4096;

void put_netstring(std::string& out, const Integer& v) {
  if (sgn(v) < 0) {
    throw ProtocolError("wire values must be nonnegative");
  }
  const std::string digits = v.get_str();
  out += std::to_string(digits.size());
  out += ':';
  out += digits;
  out += ',';
}

// Returns false when the buffer ends before the field does.
bool get_netstring(std::string_view buf, std::size_t& pos, Integer& value) {
  std::size_t len = 0;
  std::size_t i = pos;
  while (i < buf.size() && std::isdigit(static_cast<unsigned char>(buf[i]))) {
    if (i > pos && buf[pos] == '0') {
      throw ProtocolError("length prefix has a leading zero");
    }
    len = len * 10 + static_cast<std::size_t>(buf[i] - '0');
    if (len > kMaxDigits) {
      throw ProtocolError("field longer than " + std::to_string(kMaxDigits) + " digits");
    }
    ++i;
  }
  if (i == buf.size()) {
    return false;
  }
  if (i == pos || buf[i] != ':') {
    throw ProtocolError("expected '<length>:' in message");
  }
  if (len == 0) {
    throw ProtocolError("empty field");
  }
  ++i;
  if (buf.size() < i + len + 1) {
    return false;
  }
  const std::string_view digits = buf.substr(i, len);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ProtocolError("field is not a decimal string");
  }
  if (digits.size() > 1 && digits[0] == '0') {
    throw ProtocolError("field has a leading zero");
  }
  if (buf[i + len] != ',') {
    throw ProtocolError("field is not terminated by ','");
  }
  value = Integer(std::string(digits), 10);
  pos = i + len + 1;
  return true;
}

}  // namespace

std::string encode_message(const DhMessage& message) {
  std::string out;
  put_netstring(out, message.p);
  put_netstring(out, message.g);
  put_netstring(out, message.sent);
  return out;
}

std::optional<DhMessage> try_decode_message(std::string_view buffer, std::size_t& consumed) {
  DhMessage m;
  std::size_t pos = 0;
  for (Integer* field : {&m.p, &m.g, &m.sent}) {
    if (!get_netstring(buffer, pos, *field)) {
      return std::nullopt;
    }
  }
  consumed = pos;
  return m;
}

DhMessage decode_message(std::string_view wire) {
  std::size_t consumed = 0;
  auto m = try_decode_message(wire, consumed);
  if (!m) {
    throw ProtocolError("truncated message");
  }
  if (consumed != wire.size()) {
    throw ProtocolError("trailing bytes after message");
  }
  return *m;
}

DhParty dh_receive(const DhParty& party, const DhMessage& peer) {
  if (peer.p != party.p || peer.g != party.g) {
    throw ProtocolError("peer uses different public parameters (p, g)");
  }
  return dh_finish(party, peer.sent);
}

DhTranscript dh_demo(const Integer& p, const Integer& g, const Integer& secret_a, const Integer& secret_b) {
  DhTranscript t;
  t.alice = dh_keygen(p, g, secret_a);
  t.bob = dh_keygen(p, g, secret_b);
  t.alice_wire = encode_message(message_of(t.alice));
  t.bob_wire = encode_message(message_of(t.bob));
  t.alice = dh_receive(t.alice, decode_message(t.bob_wire));
  t.bob = dh_receive(t.bob, decode_message(t.alice_wire));
  return t;
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> discrete_log_bruteforce(std::uint64_t p, std::uint64_t g, std::uint64_t target,
                                                     std::uint64_t max_p) {
  if (p > max_p) {
    throw ResourceError("discrete_log_bruteforce: p = " + std::to_string(p) + " exceeds cap " +
                        std::to_string(max_p));
  }
  if (p < 3 || p % 2 == 0) {
    throw UsageError("discrete_log_bruteforce needs an odd prime");
  }
  if (g >= p || target >= p) {
    throw UsageError("discrete_log_bruteforce: residues must lie in [0, p)");
  }
  const std::uint64_t two_g = word::addmod(g, g, p);
  std::uint64_t prev = 1;
  std::uint64_t cur = g;
  // ord_p(w_g) <= p + 1, and the first n with T_n = 1 is that order
  for (std::uint64_t n = 1; n <= 2 * p + 2; ++n) {
    if (cur == target) {
      return n;
    }
    if (cur == 1) {
      return std::nullopt;
    }
    const std::uint64_t next = word::submod(word::mulmod(two_g, cur, p), prev, p);
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

}  // namespace cheb
