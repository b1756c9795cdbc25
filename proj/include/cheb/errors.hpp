#pragma once

#include <stdexcept>
#include <string>

namespace cheb {

/// Malformed call: wrong modulus, out-of-range parameter, mismatched operands.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed call whose mathematical precondition fails (e.g. a ≡ ±1 mod p).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent key-exchange message.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds a configured size cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace cheb
