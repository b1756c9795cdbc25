#include "cheb/dh_socket.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <system_error>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() {
    if (fd_ >= 0) {
      ::close(fd_);
    }
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_;
};

[[noreturn]] void throw_errno(const std::string& what) {
  throw std::system_error(errno, std::generic_category(), what);
}

void send_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      throw_errno("send");
    }
    sent += static_cast<std::size_t>(n);
  }
}

DhMessage receive_message(int fd) {
  std::string buffer;
  char chunk[512];
  for (;;) {
    std::size_t consumed = 0;
    if (auto m = try_decode_message(buffer, consumed)) {
      if (consumed != buffer.size()) {
        throw ProtocolError("trailing bytes after message");
      }
      return *m;
    }
    const ssize_t n = ::recv(fd, chunk, sizeof(chunk), 0);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      throw_errno("recv");
    }
    if (n == 0) {
      throw ProtocolError("peer closed the connection mid-message");
    }
    buffer.append(chunk, static_cast<std::size_t>(n));
  }
}

DhParty run_exchange(int fd, const DhParty& self) {
  send_all(fd, encode_message(message_of(self)));
  return dh_receive(self, receive_message(fd));
}

sockaddr_in resolve(const std::string& host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (const int rc = ::getaddrinfo(host.c_str(), nullptr, &hints, &res); rc != 0) {
    throw UsageError("cannot resolve host '" + host + "': " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  ::freeaddrinfo(res);
  addr.sin_port = htons(port);
  return addr;
}

}  // namespace

DhListener::DhListener(const std::string& host, std::uint16_t port) {
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) {
    throw_errno("socket");
  }
  const int yes = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  sockaddr_in addr = resolve(host, port);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0 || ::listen(fd_, 1) < 0) {
    const int saved = errno;
    ::close(fd_);
    errno = saved;
    throw_errno("bind/listen on " + host + ":" + std::to_string(port));
  }
  socklen_t len = sizeof(addr);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

DhListener::~DhListener() {
  if (fd_ >= 0) {
    ::close(fd_);
  }
}

DhParty DhListener::exchange(const DhParty& self) {
  int peer = -1;
  do {
    peer = ::accept(fd_, nullptr, nullptr);
  } while (peer < 0 && errno == EINTR);
  if (peer < 0) {
    throw_errno("accept");
  }
  Socket conn(peer);
  return run_exchange(conn.fd(), self);
}

DhParty dh_connect(const std::string& host, std::uint16_t port, const DhParty& self) {
  Socket conn(::socket(AF_INET, SOCK_STREAM, 0));
  if (conn.fd() < 0) {
    throw_errno("socket");
  }
  sockaddr_in addr = resolve(host, port);
  if (::connect(conn.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) {
    throw_errno("connect to " + host + ":" + std::to_string(port));
  }
  return run_exchange(conn.fd(), self);
}

std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw UsageError("expected HOST:PORT, got '" + text + "'");
  }
  const std::string port_text = text.substr(colon + 1);
  unsigned long port = 0;
  for (char c : port_text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("bad port in '" + text + "'");
    }
    port = port * 10 + static_cast<unsigned long>(c - '0');
    if (port > 65535) {
      throw UsageError("port out of range in '" + text + "'");
    }
  }
  return {text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

}  // namespace cheb
