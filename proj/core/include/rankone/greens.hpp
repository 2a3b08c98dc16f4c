#pragma once

#include <rankone/branchcut.hpp>
#include <rankone/common.hpp>
#include <rankone/grid.hpp>

namespace rankone {

/// A complex coupling constant with an explicit point at infinity.
class Coupling {
 public:
  Coupling(Complex value) : value_(value), infinite_(false) {}  // NOLINT(implicit)
  static Coupling infinity() {
    Coupling c(0.0);
    c.infinite_ = true;
    return c;
  }

  bool infinite() const { return infinite_; }
  Complex value() const;
  /// 1/coupling; 0 when infinite.
  Complex reciprocal() const;
  bool is_zero() const { return !infinite_ && value_ == 0.0; }

 private:
  Complex value_;
  bool infinite_;
};

/// Which member of the family: H_{m,lambda} (m != 0, -1 < Re m < 1) or H_0^rho.
/// H_{m,0} and H_0^infinity are the trivial member X.
class PerturbationParams {
 public:
  enum class Kind { MLambda, Rho };

  static PerturbationParams m_lambda(Complex m, Coupling lambda);
  static PerturbationParams rho(Coupling r);

  Kind kind() const { return kind_; }
  Complex m() const { return kind_ == Kind::MLambda ? m_ : Complex(0.0); }
  const Coupling& coupling() const { return c_; }
  /// True when the operator is plain multiplication by x.
  bool trivial() const;

 private:
  PerturbationParams(Kind k, Complex m, Coupling c) : kind_(k), m_(m), c_(c) {}
  Kind kind_;
  Complex m_;
  Coupling c_;
};

/// sigma = lambda * pi / sin(pi m); infinite couplings stay tagged so that
/// downstream formulas can use the reciprocal (1/sigma = 0) instead.
class Varsigma {
 public:
  Varsigma(Complex value) : value_(value), infinite_(false) {}  // NOLINT(implicit)
  static Varsigma infinity() {
    Varsigma v(0.0);
    v.infinite_ = true;
    return v;
  }

  bool infinite() const { return infinite_; }
  Complex value() const;
  Complex reciprocal() const { return infinite_ ? Complex(0.0) : 1.0 / value_; }

 private:
  Complex value_;
  bool infinite_;
};

Varsigma varsigma(Complex m, const Coupling& lambda);

/// The sampled perturbing function h (x^{m/2}, or 1 for the m = 0 family).
GridVector perturbation_vector(const PerturbationParams& p, GridPtr grid);

/// g_lambda(z) = -1/lambda + (-z)^m pi/sin(pi m);  g^rho(z) = rho + ln(-z).
/// Throws for the trivial member (its g is identically infinite).
Complex g_value(const PerturbationParams& p, PhysicalSheetPoint z);

/// Closed-form derivative of g: -(-z)^{m-1} pi m / sin(pi m), resp. 1/z.
Complex g_derivative(const PerturbationParams& p, PhysicalSheetPoint z);

/// Boundary values g(x + i0) / g(x - i0) of g on the cut.
Complex g_boundary(const PerturbationParams& p, BoundaryPoint bp);

/// -1/g(z): the weight of the rank-one resolvent correction.  Returns 0 for
/// the trivial member; throws a "pole" precondition error near zeros of g.
Complex correction_coefficient(const PerturbationParams& p, PhysicalSheetPoint z);

/// (z - H)^{-1} v via pointwise division plus the separable correction.
GridVector resolvent_apply(const PerturbationParams& p, PhysicalSheetPoint z, const GridVector& v);

/// Dense resolvent kernel: diagonal 1/((z-x_j) w_j) plus the separable part.
KernelMatrix resolvent_kernel(const PerturbationParams& p, PhysicalSheetPoint z, GridPtr grid);

/// lambda(m, rho) = m / (1 - m rho); the analytic-family chart.
Coupling lambda_from_rho(Complex m, const Coupling& rho);

/// rho(m, lambda) = 1/m - 1/lambda; inverse of lambda_from_rho.
Coupling rho_from_lambda(Complex m, const Coupling& lambda);

/// kappa with lambda pi/sin(pi m) = kappa Gamma(m)/Gamma(-m).
Coupling kappa_from_lambda(Complex m, const Coupling& lambda);

/// Inverse of kappa_from_lambda.
Coupling lambda_from_kappa(Complex m, const Coupling& kappa);

}  // namespace rankone
