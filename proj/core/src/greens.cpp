#include <rankone/greens.hpp>

#include <rankone/gamma.hpp>

#include <cmath>

namespace rankone {

Complex Coupling::value() const {
  if (infinite_) throw PreconditionError("invalid_parameter", "coupling", "coupling is infinite");
  return value_;
}

Complex Coupling::reciprocal() const { return infinite_ ? Complex(0.0) : 1.0 / value_; }

Complex Varsigma::value() const {
  if (infinite_) throw PreconditionError("invalid_parameter", "varsigma", "varsigma is infinite");
  return value_;
}

PerturbationParams PerturbationParams::m_lambda(Complex m, Coupling lambda) {
  if (m == 0.0) {
    throw PreconditionError("invalid_parameter", "m", "m = 0 belongs to the rho family");
  }
  if (std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "family requires -1 < Re m < 1");
  }
  return PerturbationParams(Kind::MLambda, m, lambda);
}

PerturbationParams PerturbationParams::rho(Coupling r) {
  return PerturbationParams(Kind::Rho, 0.0, r);
}

bool PerturbationParams::trivial() const {
  return kind_ == Kind::MLambda ? c_.is_zero() : c_.infinite();
}

Varsigma varsigma(Complex m, const Coupling& lambda) {
  if (m == 0.0) {
    throw PreconditionError("invalid_parameter", "m", "varsigma requires m != 0");
  }
  if (lambda.infinite()) return Varsigma::infinity();
  return Varsigma(lambda.value() * kPi / std::sin(kPi * m));
}

GridVector perturbation_vector(const PerturbationParams& p, GridPtr grid) {
  const int n = grid->size();
  std::vector<Complex> h(n);
  if (p.kind() == PerturbationParams::Kind::Rho) {
    for (int j = 0; j < n; ++j) h[j] = 1.0;
  } else {
    const Complex half_m = 0.5 * p.m();
    for (int j = 0; j < n; ++j) h[j] = std::exp(half_m * grid->t(j));
  }
  return GridVector(std::move(grid), std::move(h));
}

Complex g_value(const PerturbationParams& p, PhysicalSheetPoint z) {
  if (p.trivial()) {
    throw PreconditionError("invalid_parameter", "coupling",
                            "g is undefined for the trivial member H = X");
  }
  if (p.kind() == PerturbationParams::Kind::Rho) {
    return p.coupling().value() + log_neg(z);
  }
  const Complex m = p.m();
  return -p.coupling().reciprocal() + neg_power(z, m) * kPi / std::sin(kPi * m);
}

Complex g_derivative(const PerturbationParams& p, PhysicalSheetPoint z) {
  if (p.kind() == PerturbationParams::Kind::Rho) return 1.0 / z.z();
  const Complex m = p.m();
  return -neg_power(z, m - 1.0) * kPi * m / std::sin(kPi * m);
}

Complex g_boundary(const PerturbationParams& p, BoundaryPoint bp) {
  if (p.trivial()) {
    throw PreconditionError("invalid_parameter", "coupling",
                            "g is undefined for the trivial member H = X");
  }
  if (p.kind() == PerturbationParams::Kind::Rho) {
    return p.coupling().value() + boundary_log_neg(bp);
  }
  const Complex m = p.m();
  return -p.coupling().reciprocal() + boundary_neg_power(bp, m) * kPi / std::sin(kPi * m);
}

Complex correction_coefficient(const PerturbationParams& p, PhysicalSheetPoint z) {
  if (p.trivial()) return 0.0;
  const Complex g = g_value(p, z);
  // Scale-aware pole detection near eigenvalues.
  const double scale =
      p.kind() == PerturbationParams::Kind::Rho
          ? 1.0
          : std::pow(std::abs(z.z()), p.m().real());
  if (std::abs(g) < 1e-12 * (1.0 + scale)) {
    throw PreconditionError("pole", "z", "z is numerically an eigenvalue: g(z) ~ 0");
  }
  return -1.0 / g;
}

GridVector resolvent_apply(const PerturbationParams& p, PhysicalSheetPoint z, const GridVector& v) {
  const Complex zc = z.z();
  const int n = v.size();
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) out[j] = v[j] / (zc - v.grid->x(j));
  GridVector free_part(v.grid, std::move(out));
  if (p.trivial()) return free_part;

  const Complex c = correction_coefficient(p, z);
  const GridVector h = perturbation_vector(p, v.grid);
  Complex inner = 0.0;
  for (int j = 0; j < n; ++j) inner += v.grid->w(j) * h[j] * free_part[j];
  for (int j = 0; j < n; ++j) {
    free_part.values[j] += c * h[j] / (zc - v.grid->x(j)) * inner;
  }
  return free_part;
}

KernelMatrix resolvent_kernel(const PerturbationParams& p, PhysicalSheetPoint z, GridPtr grid) {
  const Complex zc = z.z();
  const int n = grid->size();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) k(j, j) = 1.0 / ((zc - grid->x(j)) * grid->w(j));
  if (!p.trivial()) {
    const Complex c = correction_coefficient(p, z);
    const GridVector h = perturbation_vector(p, grid);
    Eigen::VectorXcd u(n);
    for (int j = 0; j < n; ++j) u[j] = h[j] / (zc - grid->x(j));
    k.noalias() += c * (u * u.transpose());
  }
  return KernelMatrix(std::move(grid), std::move(k));
}

Coupling lambda_from_rho(Complex m, const Coupling& rho) {
  if (m == 0.0) throw PreconditionError("invalid_parameter", "m", "lambda_from_rho requires m != 0");
  if (rho.infinite()) return Coupling(0.0);
  const Complex d = 1.0 - m * rho.value();
  if (d == 0.0) return Coupling::infinity();
  return Coupling(m / d);
}

Coupling rho_from_lambda(Complex m, const Coupling& lambda) {
  if (m == 0.0) throw PreconditionError("invalid_parameter", "m", "rho_from_lambda requires m != 0");
  if (lambda.is_zero()) return Coupling::infinity();
  return Coupling(1.0 / m - lambda.reciprocal());
}

Coupling kappa_from_lambda(Complex m, const Coupling& lambda) {
  if (lambda.infinite()) return Coupling::infinity();
  const Varsigma s = varsigma(m, lambda);
  return Coupling(s.value() * gamma(-m) / gamma(m));
}

Coupling lambda_from_kappa(Complex m, const Coupling& kappa) {
  if (m == 0.0) throw PreconditionError("invalid_parameter", "m", "lambda_from_kappa requires m != 0");
  if (kappa.infinite()) return Coupling::infinity();
  const Complex s = kappa.value() * gamma(m) / gamma(-m);
  return Coupling(s * std::sin(kPi * m) / kPi);
}

}  // namespace rankone
