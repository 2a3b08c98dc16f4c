#pragma once

#include <rankone/greens.hpp>
#include <rankone/grid.hpp>

#include <optional>
#include <span>
#include <vector>

namespace rankone {

struct EigenvalueEntry {
  Complex w;
  int branch;       // which branch of Ln produced it
  double residual;  // |g(w)|
};

struct PropositionBound {
  int n;           // N with N < (m_r^2+m_i^2)/|m_r| <= N+1
  bool satisfied;  // enumerated count in {N, N+1}
};

struct SpectralReport {
  std::vector<EigenvalueEntry> eigenvalues;  // sorted by |w|
  bool infinite_count = false;               // Re m = 0, all branches accepted
  bool possibly_more = false;                // acceptance at the k-range boundary
  bool exceptional = false;
  std::optional<PropositionBound> proposition;

  int count() const { return static_cast<int>(eigenvalues.size()); }
};

/// Point spectrum by branch enumeration of (-w)^{-m} = varsigma (m != 0) or
/// the single candidate of the m = 0 family.
SpectralReport eigenvalues(const PerturbationParams& p, int k_range = 64);

/// The unique N with N < (m_r^2 + m_i^2)/|m_r| <= N + 1 (requires Re m != 0).
int eigenvalue_count_bound(Complex m);

/// True when an eigenvalue candidate sits exactly on the sheet boundary
/// (m = 0: Im rho = +-pi).
bool is_exceptional(const PerturbationParams& p, int k_range = 64);

/// Rank-one kernel of the eigenprojection at the accepted eigenvalue w.
KernelMatrix eigenprojection_kernel(const PerturbationParams& p, Complex w, GridPtr grid);

/// Stone-formula spectral projection onto [0,inf) applied to v: the boundary
/// integral of resolvents over the grid window, Richardson-extrapolated over
/// eps_sequence.  The multiplication-operator part of the integrand is
/// integrated in closed form; the rank-one part by quadrature in s.
GridVector positive_projection_apply(const PerturbationParams& p, const GridVector& v,
                                     std::span<const double> eps_sequence);

}  // namespace rankone
