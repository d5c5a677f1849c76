#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpcover {

enum class ErrorCode {
  kInvalidInput,
  kOverflow,
  kResourceLimit,
  kInternal,
};

// Machine-readable name, e.g. "invalid-input".
std::string_view error_code_name(ErrorCode code);

// Process exit code used by the command-line tool for this error class.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

[[noreturn]] inline void throw_resource(const std::string& what) {
  throw Error(ErrorCode::kResourceLimit, what);
}

[[noreturn]] inline void throw_overflow(const std::string& what) {
  throw Error(ErrorCode::kOverflow, what);
}

}  // namespace dpcover
