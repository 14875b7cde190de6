#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

enum class ErrorCode {
  invalid_argument,
  parse,
  order_cap,
  convention_mismatch,
  internal,
};

// Every failure raised by the library carries a code so the C boundary can
// translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::invalid_argument, what);
}

}  // namespace collatz
