#pragma once

#include <rankone/greens.hpp>
#include <rankone/grid.hpp>

#include <vector>

// Scaling (renormalization-group) limits: X plus a compactly supported
// rank-one perturbation, with the coupling scheduled so that the dilated
// family converges in norm-resolvent sense to a member of the exact family.

namespace rankone {

enum class FlowRegime {
  RelevantDecay,       // -1 < Re m < 0: lambda_tau = lambda e^{-m tau}
  MarginalLogarithm,   // m = 0:         lambda_tau = 1/tau, target H_0^nu
  IrrelevantSubtract,  // 0 <= Re m < 1, m != 0: lambda_tau = lambda/(e^{m tau} - alpha lambda)
};

/// Compact cutoff of x^{m/2}: equal to it on (0,1], then either cut off
/// sharply or ramped to zero over [1, 1+width] with a C^2 ramp.
class CutoffProfile {
 public:
  enum class Kind { Sharp, Smooth };

  CutoffProfile(Complex m, Kind kind, double width = 0.5);

  Complex m() const { return m_; }
  Kind kind() const { return kind_; }
  double support_max() const { return kind_ == Kind::Sharp ? 1.0 : 1.0 + width_; }
  FlowRegime regime() const;

  Complex h(double x) const;
  Complex h2(double x) const { return h(x) * h(x); }

  /// alpha = int h^2/x dx (needs Re m >= 0, m != 0); 1/m exactly for Sharp.
  Complex alpha() const;
  /// nu = int ln(y) (h^2)'(y) dy (m = 0 only); 0 exactly for Sharp.
  double nu() const;

 private:
  Complex m_;
  Kind kind_;
  double width_;
};

struct FlowPoint {
  double tau;
  Complex coupling;
  FlowRegime regime;
};

/// The scheduled coupling lambda_tau of the matching regime.
FlowPoint flow_coupling(const CutoffProfile& profile, Complex lambda, double tau);

/// X + coupling |h><h| as a dense kernel on the grid.
KernelMatrix truncated_operator(const CutoffProfile& profile, Complex coupling, GridPtr grid);

/// e^tau U_tau (z e^tau - H(lambda_tau))^{-1} U_{-tau}: dense solve at z e^tau,
/// free part conjugated exactly (X is homogeneous of degree 1), correction
/// conjugated by the exact grid shift.  tau must be a grid-shift multiple.
KernelMatrix scaled_resolvent(const CutoffProfile& profile, Complex lambda, double tau,
                              PhysicalSheetPoint z, GridPtr grid);

/// The exact-family member the flow converges to.
PerturbationParams flow_target(const CutoffProfile& profile, Complex lambda);

/// Weighted operator-norm distances ||scaled_resolvent(tau) - target|| per tau.
std::vector<double> convergence_report(const CutoffProfile& profile, Complex lambda,
                                       PhysicalSheetPoint z, std::vector<double> tau_list,
                                       GridPtr grid);

}  // namespace rankone
