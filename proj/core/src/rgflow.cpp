#include <rankone/rgflow.hpp>

#include <rankone/oracles.hpp>

#include <Eigen/Dense>

#include <cmath>

namespace rankone {

namespace {

// Quintic smoothstep: C^2 ramp from 1 at u=0 to 0 at u=1.
double ramp(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return 1.0 - u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
}

double ramp_derivative(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return -(30.0 * u * u - 60.0 * u * u * u + 30.0 * u * u * u * u);
}

}  // namespace

CutoffProfile::CutoffProfile(Complex m, Kind kind, double width)
    : m_(m), kind_(kind), width_(width) {
  if (std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "cutoff profile requires -1 < Re m < 1");
  }
  if (kind == Kind::Smooth && !(width > 0.0)) {
    throw PreconditionError("invalid_parameter", "width", "smooth cutoff requires width > 0");
  }
}

FlowRegime CutoffProfile::regime() const {
  if (m_ == 0.0) return FlowRegime::MarginalLogarithm;
  if (m_.real() < 0.0) return FlowRegime::RelevantDecay;
  return FlowRegime::IrrelevantSubtract;
}

Complex CutoffProfile::h(double x) const {
  if (x <= 0.0) return 0.0;
  if (kind_ == Kind::Sharp) {
    if (x > 1.0) return 0.0;
    return std::exp(0.5 * m_ * std::log(x));
  }
  if (x >= 1.0 + width_) return 0.0;
  const Complex head = std::exp(0.5 * m_ * std::log(x));
  if (x <= 1.0) return head;
  return head * ramp((x - 1.0) / width_);
}

Complex CutoffProfile::alpha() const {
  if (m_ == 0.0 || m_.real() < 0.0) {
    throw PreconditionError("invalid_parameter", "m", "alpha needs 0 <= Re m < 1, m != 0");
  }
  if (kind_ == Kind::Sharp) return 1.0 / m_;
  // int_0^1 x^{m-1} dx = 1/m plus the ramped piece on [1, 1+width].
  const Complex m = m_;
  const double w = width_;
  const Complex tail = oracles::quad_finite(
      [m, w](double x) {
        const double r = ramp((x - 1.0) / w);
        return std::exp(m * std::log(x)) / x * r * r;
      },
      1.0, 1.0 + w, 1e-12);
  return 1.0 / m_ + tail;
}

double CutoffProfile::nu() const {
  if (m_ != 0.0) {
    throw PreconditionError("invalid_parameter", "m", "nu is defined for the m = 0 profile");
  }
  // Sharp: (h^2)' = -delta(.-1) and ln 1 = 0.
  if (kind_ == Kind::Sharp) return 0.0;
  const double w = width_;
  const Complex val = oracles::quad_finite(
      [w](double y) {
        const double u = (y - 1.0) / w;
        return Complex(std::log(y) * 2.0 * ramp(u) * ramp_derivative(u) / w);
      },
      1.0, 1.0 + w, 1e-12);
  return val.real();
}

FlowPoint flow_coupling(const CutoffProfile& profile, Complex lambda, double tau) {
  const FlowRegime regime = profile.regime();
  switch (regime) {
    case FlowRegime::RelevantDecay:
      return {tau, lambda * std::exp(-profile.m() * tau), regime};
    case FlowRegime::MarginalLogarithm:
      if (tau == 0.0) {
        throw PreconditionError("invalid_parameter", "tau", "the 1/tau schedule needs tau != 0");
      }
      return {tau, Complex(1.0 / tau), regime};
    case FlowRegime::IrrelevantSubtract: {
      const Complex denom = std::exp(profile.m() * tau) - profile.alpha() * lambda;
      if (std::abs(denom) < 1e-14 * (1.0 + std::abs(lambda))) {
        throw std::runtime_error("flow_coupling: schedule pole e^{m tau} = alpha lambda");
      }
      return {tau, lambda / denom, regime};
    }
  }
  throw std::logic_error("unreachable");
}

KernelMatrix truncated_operator(const CutoffProfile& profile, Complex coupling, GridPtr grid) {
  const int n = grid->size();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) k(j, j) = grid->x(j) / grid->w(j);
  Eigen::VectorXcd h(n);
  for (int j = 0; j < n; ++j) h[j] = profile.h(grid->x(j));
  k.noalias() += coupling * (h * h.transpose());
  return KernelMatrix(std::move(grid), std::move(k));
}

KernelMatrix scaled_resolvent(const CutoffProfile& profile, Complex lambda, double tau,
                              PhysicalSheetPoint z, GridPtr grid) {
  const int n = grid->size();
  const double shift = tau / grid->dt();
  const int p = static_cast<int>(std::lround(shift));
  if (std::abs(shift - p) > 1e-9) {
    throw PreconditionError("invalid_parameter", "tau", "tau must be a grid-shift multiple");
  }
  const Complex zeta = z.z() * std::exp(tau);
  const Complex lambda_tau = flow_coupling(profile, lambda, tau).coupling;

  // Dense solve of (zeta - X - lambda_tau |h><h|) u = v in applied form.
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) a(j, j) = zeta - grid->x(j);
  Eigen::VectorXcd h(n), hw(n);
  for (int j = 0; j < n; ++j) {
    h[j] = profile.h(grid->x(j));
    hw[j] = h[j] * grid->w(j);
  }
  a.noalias() -= lambda_tau * (h * hw.transpose());
  Eigen::MatrixXcd r = Eigen::PartialPivLU<Eigen::MatrixXcd>(a).inverse();

  // Split off the free diagonal: it conjugates exactly to (z - X)^{-1}
  // because X is homogeneous of degree 1.  Only the correction goes through
  // the grid shift (entries move by p along both indices, zero-filled).
  for (int j = 0; j < n; ++j) r(j, j) -= 1.0 / (zeta - grid->x(j));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  const Complex scale = std::exp(tau);
  for (int j = 0; j < n; ++j) {
    const int js = j + p;
    if (js < 0 || js >= n) continue;
    for (int k = 0; k < n; ++k) {
      const int ks = k + p;
      if (ks < 0 || ks >= n) continue;
      out(j, k) = scale * r(js, ks);
    }
  }
  for (int j = 0; j < n; ++j) out(j, j) += 1.0 / (z.z() - grid->x(j));
  // Convert applied form to kernel entries (divide columns by the weights).
  for (int k = 0; k < n; ++k) out.col(k) /= grid->w(k);
  return KernelMatrix(std::move(grid), std::move(out));
}

PerturbationParams flow_target(const CutoffProfile& profile, Complex lambda) {
  if (profile.regime() == FlowRegime::MarginalLogarithm) {
    return PerturbationParams::rho(Coupling(profile.nu()));
  }
  return PerturbationParams::m_lambda(profile.m(), Coupling(lambda));
}

std::vector<double> convergence_report(const CutoffProfile& profile, Complex lambda,
                                       PhysicalSheetPoint z, std::vector<double> tau_list,
                                       GridPtr grid) {
  const PerturbationParams target = flow_target(profile, lambda);
  const KernelMatrix target_kernel = resolvent_kernel(target, z, grid);
  std::vector<double> residuals;
  residuals.reserve(tau_list.size());
  for (const double tau : tau_list) {
    const KernelMatrix scaled = scaled_resolvent(profile, lambda, tau, z, grid);
    residuals.push_back(operator_norm(scaled - target_kernel));
  }
  return residuals;
}

}  // namespace rankone
