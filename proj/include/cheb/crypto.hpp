#pragma once

// Chebyshev primitive roots and squares, and a Diffie-Hellman exchange
// where T_secret plays the role of exponentiation. The exchange is a small
// state machine over immutable DhParty snapshots; it is not hardened.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cheb/criteria.hpp"
#include "cheb/integer.hpp"

namespace cheb {

/// a = 2x^2 - 1 = T_2(x) for some integer x >= 0.
bool is_chebyshev_square(const Integer& a);

struct PrimitiveRootReport {
  std::int64_t a = 0;
  std::optional<std::uint64_t> least_p_minus;  // least p with ord_p(w_a) = p - 1
  std::optional<std::uint64_t> least_p_plus;   // least p with ord_p(w_a) = p + 1
  bool chebyshev_square = false;               // such a never reaches full order
};

/// Scans odd primes p <= prime_limit ascending, skipping p | a^2 - 1.
PrimitiveRootReport primitive_root_search(std::int64_t a, std::uint64_t prime_limit, SearchOptions options = {});

/// Least g in R_p with ord_p(w_g) = p - eps(g): a full-order base for the exchange.
std::uint64_t full_order_base(std::uint64_t p);

struct DhParty {
  Integer p;
  Integer g;
  Integer secret;
  Integer sent;                    // T_secret(g) mod p
  std::optional<Integer> received;
  std::optional<Integer> shared;   // T_secret(received) mod p
};

/// Throws UsageError for secret <= 0 or a bad modulus.
DhParty dh_keygen(const Integer& p, const Integer& g, const Integer& secret);
/// Throws ProtocolError for peer_value outside [0, p).
DhParty dh_finish(const DhParty& party, const Integer& peer_value);

/// Public part of a party: what goes on the wire.
struct DhMessage {
  Integer p;
  Integer g;
  Integer sent;

  friend bool operator==(const DhMessage&, const DhMessage&) = default;
};

DhMessage message_of(const DhParty& party);

/// Three netstrings "<len>:<decimal>," for p, g, sent.
std::string encode_message(const DhMessage& message);
/// Throws ProtocolError on malformed input or trailing bytes.
DhMessage decode_message(std::string_view wire);
/// nullopt while the buffer holds only a prefix of a message; on success sets
/// `consumed` to the number of bytes used. Throws ProtocolError on junk.
std::optional<DhMessage> try_decode_message(std::string_view buffer, std::size_t& consumed);

/// Checks that the peer agrees on (p, g), then finishes.
DhParty dh_receive(const DhParty& party, const DhMessage& peer);

struct DhTranscript {
  DhParty alice;
  DhParty bob;
  std::string alice_wire;
  std::string bob_wire;
};

/// Both parties in-process, talking through encoded messages.
DhTranscript dh_demo(const Integer& p, const Integer& g, const Integer& secret_a, const Integer& secret_b);

/// Least n >= 1 with T_n(g) == target mod p, stepping the recurrence up to
/// one period of w_g. Throws ResourceError for p > max_p.
std::optional<std::uint64_t> discrete_log_bruteforce(std::uint64_t p, std::uint64_t g, std::uint64_t target,
                                                     std::uint64_t max_p = 1'000'000);

}  // namespace cheb
