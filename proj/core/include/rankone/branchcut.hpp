#pragma once

#include <rankone/common.hpp>

// Branch-cut aware elementary functions.  Everything here works with the
// logarithm of -z cut along [0,inf): for z off the nonnegative real axis,
// log_neg(z) = ln(-z) has imaginary part strictly inside (-pi, pi).  This is
// *not* the library convention (std::log cuts along (-inf,0]), hence the
// explicit construction from the principal argument of z itself.

namespace rankone {

/// A point of C \ [0,inf).  Construction rejects points on or numerically
/// indistinguishable from the cut.
class PhysicalSheetPoint {
 public:
  explicit PhysicalSheetPoint(Complex z);

  Complex z() const { return z_; }

 private:
  Complex z_;
};

struct BoundaryPoint {
  double x;    // > 0
  Side side;   // Plus: x+i0, Minus: x-i0

  BoundaryPoint(double x_, Side side_);
};

/// ln(-z) with Im in (-pi, pi); exp(log_neg(z)) == -z.
Complex log_neg(PhysicalSheetPoint z);

/// (-z)^m = exp(m log_neg(z)) for -1 < Re m < 1.
Complex neg_power(PhysicalSheetPoint z, Complex m);

/// Limit of log_neg(x +- i eps) as eps -> 0: ln x -+ i pi.
Complex boundary_log_neg(BoundaryPoint p);

/// Limit of neg_power at the cut: x^m e^{-+ i pi m} for side Plus/Minus.
Complex boundary_neg_power(BoundaryPoint p, Complex m);

}  // namespace rankone
