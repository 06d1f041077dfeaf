#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qvh {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NonFinite,
  UnknownUnitSystem,
  HorizonSingular,
  SingularMetric,
  NotTimelike,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Recoverable failure raised by every library operation. The code lets
/// callers (the CLI, tests) branch on the failure class without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qvh
