#include <rankone/branchcut.hpp>

#include <cmath>

namespace rankone {

PhysicalSheetPoint::PhysicalSheetPoint(Complex z) : z_(z) {
  // Tolerance band around the cut: exactly-real points with Re z >= -delta
  // are rejected so that rounding cannot silently cross the branch cut.
  const double delta = 1e-14 * (1.0 + std::abs(z));
  if (z.imag() == 0.0 && z.real() >= -delta) {
    throw PreconditionError("sheet_violation", "z",
                            "point lies on the cut [0,inf); use a BoundaryPoint instead");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PreconditionError("sheet_violation", "z", "non-finite point");
  }
}

BoundaryPoint::BoundaryPoint(double x_, Side side_) : x(x_), side(side_) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw PreconditionError("invalid_parameter", "x", "boundary point requires x > 0");
  }
}

Complex log_neg(PhysicalSheetPoint zp) {
  const Complex z = zp.z();
  // arg(z) is the principal argument in (-pi, pi]; subtracting pi*sign(arg)
  // rotates the cut from (-inf,0] to [0,inf).
  const double th = std::arg(z);
  const double im = th > 0.0 ? th - kPi : th + kPi;
  return Complex(std::log(std::abs(z)), im);
}

Complex neg_power(PhysicalSheetPoint z, Complex m) {
  if (std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "neg_power requires -1 < Re m < 1");
  }
  return std::exp(m * log_neg(z));
}

Complex boundary_log_neg(BoundaryPoint p) {
  const double s = (p.side == Side::Plus) ? -1.0 : +1.0;
  return Complex(std::log(p.x), s * kPi);
}

Complex boundary_neg_power(BoundaryPoint p, Complex m) {
  if (std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "boundary_neg_power requires -1 < Re m < 1");
  }
  return std::exp(m * boundary_log_neg(p));
}

}  // namespace rankone
