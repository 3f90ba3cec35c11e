#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locgenus {

/// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorKind {
  Parse,          ///< malformed text input
  Domain,         ///< precondition violated (non-prime, wrong parity, ...)
  ResourceGuard,  ///< a configured cap was hit (factor bound, enumeration size, search cap)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::ResourceGuard, what) {}
};

}  // namespace locgenus
