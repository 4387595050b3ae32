#pragma once

#include <cstdint>

namespace wald {

/// The residue characteristic q is session-wide state, in the style of a
/// modulus context: every thread that computes with F_q elements, Laurent
/// polynomials, or sqrt(q) must hold a ModulusScope.  Scopes nest and restore
/// the previous modulus on exit.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint32_t q);
  ~ModulusScope();

  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint32_t saved_;
};

/// Current modulus; throws Error(NoModulus) outside any scope.
std::uint32_t current_q();

/// True iff a ModulusScope is active on this thread.
bool has_modulus() noexcept;

bool is_odd_prime(std::uint64_t n) noexcept;

}  // namespace wald
