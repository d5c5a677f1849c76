#include "dpcover/error.hpp"

namespace dpcover {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kOverflow:
      return "overflow";
    case ErrorCode::kResourceLimit:
      return "resource-limit";
    case ErrorCode::kInternal:
      return "internal-error";
  }
  return "internal-error";
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return 2;
    case ErrorCode::kOverflow:
      return 3;
    case ErrorCode::kResourceLimit:
      return 4;
    case ErrorCode::kInternal:
      return 1;
  }
  return 1;
}

}  // namespace dpcover
