#pragma once

#include <rankone/common.hpp>

#include <functional>
#include <span>
#include <vector>

// Independent ground-truth engines: adaptive Gauss-Kronrod quadrature on
// finite intervals, the real line (doubling panels) and the half line
// (x = e^t substitution), plus the closed-form integral identities used to
// validate everything else.  Nothing in this module may call into the
// modules it validates; it depends only on the standard library.

namespace rankone::oracles {

using ComplexFn = std::function<Complex(double)>;

/// Adaptive G7/K15 on [a,b]; error estimate below tol (absolute + relative mix).
Complex quad_finite(const ComplexFn& f, double a, double b, double tol);

/// Integral over R via doubling panels [-1,1], [1,2], [2,4], ... each refined
/// adaptively; stops when fresh panels stop contributing.
Complex quad_line(const ComplexFn& f, double tol);

/// Integral over (0,inf) via x = e^t and quad_line.
Complex quad_halfline(const ComplexFn& f, double tol);

/// Polynomial-in-eps extrapolation of vals(eps) to eps = 0 (Neville), for
/// quantities with an expansion c0 + c1 eps + c2 eps^2 + ...
Complex richardson(std::span<const double> eps, std::span<const Complex> vals);

inline const std::vector<double>& default_eps_sequence() {
  static const std::vector<double> seq{1e-2, 5e-3, 2.5e-3};
  return seq;
}

struct IdentityReport {
  Complex computed;
  Complex expected;
  double rel_err;
};

/// int_R e^{a t} / (e^{t/2} + e^{-t/2}) dt  vs  pi / cos(pi a),  -1/2 < Re a < 1/2.
IdentityReport verify_integral0(Complex a, double tol = 1e-10);

/// int_R e^{a t} / (e^{t/2} - e^{-t/2} -+ i eps) dt, extrapolated in eps,
/// vs +-2 pi i / (e^{+-2 pi i a} + 1).  Side Plus is the upper sign.
IdentityReport verify_integral_pm(Complex a, Side side,
                                  std::span<const double> eps,
                                  double tol = 1e-10);

/// int_0^inf s^m (1+s)^{-1} ds  vs  -pi / sin(pi m),  -1 < Re m < 0.
IdentityReport verify_app4(Complex m, double tol = 1e-10);

}  // namespace rankone::oracles
