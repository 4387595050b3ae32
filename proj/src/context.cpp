#include "wald/context.hpp"

#include <string>

#include "wald/error.hpp"

namespace wald {

namespace {
thread_local std::uint32_t tls_modulus = 0;
}

ModulusScope::ModulusScope(std::uint32_t q) : saved_(tls_modulus) {
  if (!is_odd_prime(q) || q > 65521) {
    throw Error(ErrorKind::ConfigInvalid, "modulus must be an odd prime below 2^16, got " + std::to_string(q));
  }
  tls_modulus = q;
}

ModulusScope::~ModulusScope() { tls_modulus = saved_; }

std::uint32_t current_q() {
  if (tls_modulus == 0) throw Error(ErrorKind::NoModulus, "no ModulusScope active on this thread");
  return tls_modulus;
}

bool has_modulus() noexcept { return tls_modulus != 0; }

bool is_odd_prime(std::uint64_t n) noexcept {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAMonomial: return "NotAMonomial";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ZeroAssignment: return "ZeroAssignment";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::ResidualSqrtQ: return "ResidualSqrtQ";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::SingularGenerators: return "SingularGenerators";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::NoModulus: return "NoModulus";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace wald
