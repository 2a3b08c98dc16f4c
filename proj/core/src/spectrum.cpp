#include <rankone/spectrum.hpp>

#include <rankone/oracles.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace rankone {

namespace {

constexpr double kBoundaryTol = 1e-10;  // |Im ln(-w)| vs pi, advisory flag

struct Candidate {
  Complex ln_neg_w;
  int k;
};

// Branch candidates ln(-w) = -(ln s + 2 pi i k)/m of (-w)^{-m} = s.
std::vector<Candidate> branch_candidates(Complex m, Complex ln_s, int k_range) {
  std::vector<Candidate> out;
  out.reserve(2 * k_range + 1);
  for (int k = -k_range; k <= k_range; ++k) {
    const Complex ln_branch = ln_s + Complex(0.0, 2.0 * kPi * k);
    out.push_back({-ln_branch / m, k});
  }
  return out;
}

}  // namespace

int eigenvalue_count_bound(Complex m) {
  if (m.real() == 0.0) {
    throw PreconditionError("invalid_parameter", "m",
                            "count bound requires Re m != 0 (case (ii) of the count rule)");
  }
  if (m == 0.0 || std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "count bound requires 0 < |Re m| < 1");
  }
  const double q = (m.real() * m.real() + m.imag() * m.imag()) / std::abs(m.real());
  return static_cast<int>(std::ceil(q - 1e-12)) - 1;
}

SpectralReport eigenvalues(const PerturbationParams& p, int k_range) {
  if (p.trivial()) {
    throw PreconditionError("invalid_parameter", "coupling",
                            "the trivial member X has no point spectrum to enumerate");
  }
  if (k_range < 1) {
    throw PreconditionError("invalid_parameter", "k_range", "k_range must be >= 1");
  }

  SpectralReport rep;

  if (p.kind() == PerturbationParams::Kind::Rho) {
    const Complex rho = p.coupling().value();
    rep.exceptional = std::abs(std::abs(rho.imag()) - kPi) < 1e-12;
    if (std::abs(rho.imag()) < kPi && !rep.exceptional) {
      const Complex w = -std::exp(-rho);
      const double residual = std::abs(g_value(p, PhysicalSheetPoint(w)));
      rep.eigenvalues.push_back({w, 0, residual});
    }
    return rep;
  }

  const Complex m = p.m();
  const Varsigma s = varsigma(m, p.coupling());
  if (s.infinite()) {
    // lambda = infinity: g = (-z)^m pi/sin(pi m) never vanishes off the cut.
    return rep;
  }
  const Complex ln_s = std::log(s.value());

  bool accepted_low = false, accepted_high = false;
  for (const Candidate& c : branch_candidates(m, ln_s, k_range)) {
    const double im = c.ln_neg_w.imag();
    if (std::abs(std::abs(im) - kPi) < kBoundaryTol) rep.exceptional = true;
    if (std::abs(im) < kPi) {
      const Complex w = -std::exp(c.ln_neg_w);
      const double residual = std::abs(g_value(p, PhysicalSheetPoint(w)));
      rep.eigenvalues.push_back({w, c.k, residual});
      if (c.k == -k_range) accepted_low = true;
      if (c.k == k_range) accepted_high = true;
    }
  }

  if (m.real() == 0.0) {
    rep.infinite_count = accepted_low && accepted_high;
  } else {
    rep.possibly_more = accepted_low || accepted_high;
    const int n_bound = eigenvalue_count_bound(m);
    rep.proposition = PropositionBound{
        n_bound, rep.count() == n_bound || rep.count() == n_bound + 1};
  }

  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const EigenvalueEntry& a, const EigenvalueEntry& b) {
              const double na = std::abs(a.w), nb = std::abs(b.w);
              if (na != nb) return na < nb;
              return a.branch < b.branch;
            });
  return rep;
}

bool is_exceptional(const PerturbationParams& p, int k_range) {
  if (p.trivial()) return false;
  if (p.kind() == PerturbationParams::Kind::Rho) {
    return std::abs(std::abs(p.coupling().value().imag()) - kPi) < 1e-12;
  }
  const Varsigma s = varsigma(p.m(), p.coupling());
  if (s.infinite()) return false;
  const Complex ln_s = std::log(s.value());
  for (const Candidate& c : branch_candidates(p.m(), ln_s, k_range)) {
    if (std::abs(std::abs(c.ln_neg_w.imag()) - kPi) < kBoundaryTol) return true;
  }
  return false;
}

KernelMatrix eigenprojection_kernel(const PerturbationParams& p, Complex w, GridPtr grid) {
  const PhysicalSheetPoint wp(w);
  const double resid = std::abs(g_value(p, wp));
  const double scale = p.kind() == PerturbationParams::Kind::Rho
                           ? 1.0
                           : std::pow(std::abs(w), p.m().real());
  if (resid > 1e-8 * (1.0 + scale)) {
    throw PreconditionError("not_eigenvalue", "w", "w does not satisfy g(w) = 0");
  }

  const int n = grid->size();
  Complex c;
  Eigen::VectorXcd u(n);
  if (p.kind() == PerturbationParams::Kind::Rho) {
    // <1|(w-X)^{-2}|1> = -1/w, never zero off the cut.
    c = -w;
    for (int j = 0; j < n; ++j) u[j] = 1.0 / (w - grid->x(j));
  } else {
    const Complex m = p.m();
    const Complex denom = m * neg_power(wp, m - 1.0) * kPi / std::sin(kPi * m);
    if (std::abs(denom) == 0.0) {
      throw std::runtime_error("eigenprojection: <h|(w-X)^{-2}|h> vanished; eigenvalue not simple");
    }
    c = std::sin(kPi * m) / (kPi * m) * neg_power(wp, 1.0 - m);
    for (int j = 0; j < n; ++j) u[j] = std::exp(0.5 * m * grid->t(j)) / (w - grid->x(j));
  }
  Eigen::MatrixXcd k = c * (u * u.transpose());
  return KernelMatrix(std::move(grid), std::move(k));
}

GridVector positive_projection_apply(const PerturbationParams& p, const GridVector& v,
                                     std::span<const double> eps_sequence) {
  if (eps_sequence.size() < 2) {
    throw PreconditionError("invalid_parameter", "eps_sequence",
                            "need at least two eps values to extrapolate");
  }
  const auto& grid = *v.grid;
  const int n = grid.size();
  const double s_min = grid.x(0);
  const double s_max = grid.x(n - 1);

  const GridVector h = p.trivial() ? GridVector() : perturbation_vector(p, v.grid);

  std::vector<std::vector<Complex>> per_eps;
  per_eps.reserve(eps_sequence.size());

  for (const double eps : eps_sequence) {
    std::vector<Complex> out(n);
    // Multiplication-operator part: Lorentzian window integrated exactly.
    for (int j = 0; j < n; ++j) {
      const double x = grid.x(j);
      const double window =
          (std::atan((s_max - x) / eps) - std::atan((s_min - x) / eps)) / kPi;
      out[j] = window * v[j];
    }

    if (!p.trivial()) {
      // Rank-one part: -(1/2 pi i) int ds [ g^{-1} q <h|R v> ](s-i eps) - (s+i eps).
      // One real division per node via the explicit reciprocal of (s +- i eps - x).
      const double eps2 = eps * eps;
      const auto run_chunk = [&](int s_begin, int s_end, std::vector<Complex>& acc) {
        std::vector<Complex> recip(n);
        std::vector<Complex> whv(n);
        for (int k = 0; k < n; ++k) whv[k] = grid.w(k) * h[k] * v[k];
        for (int is = s_begin; is < s_end; ++is) {
          const double s = grid.x(is);
          const double ws = grid.w(is);
          for (const double sign : {-1.0, +1.0}) {
            const double se = sign * eps;
            Complex inner = 0.0;
            for (int k = 0; k < n; ++k) {
              const double ar = s - grid.x(k);
              const double d = 1.0 / (ar * ar + eps2);
              recip[k] = Complex(ar * d, -se * d);
              inner += whv[k] * recip[k];
            }
            const Complex zeta(s, se);
            const Complex pref = (sign < 0 ? 1.0 : -1.0) * ws * inner / g_value(p, PhysicalSheetPoint(zeta));
            for (int j = 0; j < n; ++j) acc[j] += pref * h[j] * recip[j];
          }
        }
      };
      std::vector<Complex> acc0(n, Complex(0.0)), acc1(n, Complex(0.0));
      std::thread worker(run_chunk, 0, n / 2, std::ref(acc0));
      run_chunk(n / 2, n, acc1);
      worker.join();
      const Complex stone_norm = 1.0 / Complex(0.0, 2.0 * kPi);
      // The rank-one part of R enters with weight -1/g; the prefactor above
      // used +1/g, so the sign flips here.
      for (int j = 0; j < n; ++j) out[j] -= stone_norm * (acc0[j] + acc1[j]);
    }
    per_eps.push_back(std::move(out));
  }

  // Nodewise Richardson extrapolation to eps = 0.
  std::vector<Complex> result(n);
  std::vector<Complex> vals(eps_sequence.size());
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) vals[i] = per_eps[i][j];
    result[j] = oracles::richardson(eps_sequence, vals);
  }
  return GridVector(v.grid, std::move(result));
}

}  // namespace rankone
