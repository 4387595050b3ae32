#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wald {

enum class ErrorKind {
  NotAMonomial,
  ZeroCoefficient,
  ZeroAssignment,
  UnassignedVariable,
  ResidualSqrtQ,
  NotAUnit,
  SingularGenerators,
  NotInvertible,
  PrecisionExhausted,
  ZeroEigenvalue,
  TruncationTooSmall,
  ConfigInvalid,
  NoModulus,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable tag, `what()` carries context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wald
