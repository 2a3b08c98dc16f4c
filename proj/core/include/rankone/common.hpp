#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rankone {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr const char* kVersion = "0.1.0";

/// Which side of the cut [0,inf) a boundary value is taken from:
/// Plus means x+i0, Minus means x-i0.
enum class Side { Plus, Minus };

inline int side_sign(Side s) { return s == Side::Plus ? +1 : -1; }
inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

/// Violation of a documented precondition (sheet violation, resolvent pole,
/// exceptional coupling, ...).  Carries a stable machine-readable code and
/// the name of the offending parameter so the CLI can emit structured errors.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string code, std::string parameter, const std::string& message)
      : std::domain_error(message), code_(std::move(code)), parameter_(std::move(parameter)) {}

  const std::string& code() const { return code_; }
  const std::string& parameter() const { return parameter_; }

 private:
  std::string code_;
  std::string parameter_;
};

}  // namespace rankone
