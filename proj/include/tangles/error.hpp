#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

/// Failure categories. The CLI maps them onto exit codes
/// (input -> 2, resource -> 3, everything else -> 1).
enum class ErrorKind {
  input,        ///< malformed or out-of-contract arguments
  domain,       ///< well-formed input on which the operation is undefined
  resource,     ///< an enumeration or search cap was exceeded
  integrity,    ///< an asserted theorem-level post-condition failed
  unsupported,  ///< e.g. an order function was required but is absent
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tangles
