#pragma once

// TCP transport for the Chebyshev Diffie-Hellman demo. Each side writes its
// encoded message, reads the peer's, and finishes. One exchange per socket.

#include <cstdint>
#include <string>

#include "cheb/crypto.hpp"

namespace cheb {

class DhListener {
 public:
  /// Binds and listens; port 0 picks an ephemeral port.
  DhListener(const std::string& host, std::uint16_t port);
  ~DhListener();
  DhListener(const DhListener&) = delete;
  DhListener& operator=(const DhListener&) = delete;

  std::uint16_t port() const { return port_; }

  /// Accepts one peer and runs the exchange.
  DhParty exchange(const DhParty& self);

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

DhParty dh_connect(const std::string& host, std::uint16_t port, const DhParty& self);

/// "HOST:PORT" -> (host, port). Throws UsageError.
std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& text);

}  // namespace cheb
