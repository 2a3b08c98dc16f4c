#include <rankone/scattering.hpp>

#include <rankone/spectrum.hpp>

#include <cmath>

namespace rankone {

namespace {

// (e^{-+2 pi xi} + e^{-+ i pi m}) / (e^{-+2 pi xi} + e^{+- i pi m}),
// evaluated through e^{-|a|} ratios so large |xi| hits the asymptotic
// constants instead of overflowing.
MellinSymbol infinity_symbol(Complex m, Side side) {
  const double sg = side_sign(side);  // +1 for Plus
  const Complex num_c = std::exp(Complex(0.0, -sg * kPi) * m);
  const Complex den_c = std::exp(Complex(0.0, +sg * kPi) * m);
  auto eval = [sg, num_c, den_c](double xi) -> Complex {
    const double a = -sg * 2.0 * kPi * xi;
    if (a > 35.0) return (1.0 + num_c * std::exp(-a)) / (1.0 + den_c * std::exp(-a));
    const double e = std::exp(a);
    return (e + num_c) / (e + den_c);
  };
  return MellinSymbol(std::move(eval), "W_inf");
}

Complex cut_power(Complex m, double x, Side kernel_side) {
  // e^{+- i pi m} x^m for the Plus/Minus Moller kernel.
  const double sg = side_sign(kernel_side);
  return std::exp(Complex(0.0, sg * kPi) * m + m * std::log(x));
}

void require_not_exceptional(const PerturbationParams& p) {
  if (is_exceptional(p)) {
    throw PreconditionError("exceptional", "coupling",
                            "exceptional parameters: the Moller multiplier has a pole on (0,inf)");
  }
}

}  // namespace

MollerOperator moller_infinity(Complex m, Side side) {
  if (m == 0.0 || std::abs(m.real()) >= 1.0) {
    throw PreconditionError("invalid_parameter", "m", "moller_infinity requires -1 < Re m < 1, m != 0");
  }
  MollerOperator w{side, PerturbationParams::m_lambda(m, Coupling::infinity()), {}};
  w.terms.push_back({MollerFactor(infinity_symbol(m, side))});
  return w;
}

MollerOperator moller(const PerturbationParams& p, Side side) {
  if (p.trivial()) {
    // W^+-(X,X) = 1.
    return MollerOperator{side, p, {std::vector<MollerFactor>{}}};
  }
  require_not_exceptional(p);

  if (p.kind() == PerturbationParams::Kind::Rho) {
    const Complex rho = p.coupling().value();
    const double sg = side_sign(side);
    // From the kernel: delta + (x-y+-i0)^{-1} / g(y-+i0), g(y-+i0) = rho + ln y +- i pi.
    XMultiplier mult{
        [rho, sg](double x) { return 1.0 / (rho + std::log(x) + Complex(0.0, sg * kPi)); },
        "1/(rho+ln x+-i pi)"};
    const MellinSymbol sym = side == Side::Plus ? cauchy_symbol_plus_i0() : cauchy_symbol_minus_i0();
    MollerOperator w{side, p, {}};
    w.terms.push_back({});  // identity
    w.terms.push_back({MollerFactor(sym), MollerFactor(std::move(mult))});
    return w;
  }

  const Complex m = p.m();
  const Varsigma s = varsigma(m, p.coupling());
  if (s.infinite()) return moller_infinity(m, side);

  const Complex sv = s.value();
  XMultiplier a{[m, sv, side](double x) { return 1.0 / (1.0 - sv * cut_power(m, x, side)); },
                "1/(1-varsigma e^{+-i pi m} x^m)"};
  XMultiplier b{[m, sv, side](double x) {
                  const Complex q = sv * cut_power(m, x, side);
                  return -q / (1.0 - q);
                },
                "-varsigma e^{+-i pi m} x^m/(1-varsigma e^{+-i pi m} x^m)"};
  MollerOperator w{side, p, {}};
  w.terms.push_back({MollerFactor(std::move(a))});
  w.terms.push_back({MollerFactor(infinity_symbol(m, side)), MollerFactor(std::move(b))});
  return w;
}

GridVector apply(const MollerOperator& w, const GridVector& v) {
  GridVector total(v.grid, std::vector<Complex>(v.size(), Complex(0.0)));
  for (const auto& term : w.terms) {
    GridVector cur = v;
    for (auto it = term.rbegin(); it != term.rend(); ++it) {
      if (const auto* mult = std::get_if<XMultiplier>(&*it)) {
        for (int j = 0; j < cur.size(); ++j) cur.values[j] *= mult->f(cur.grid->x(j));
      } else {
        cur = apply_symbol(std::get<MellinSymbol>(*it), cur);
      }
    }
    for (int j = 0; j < total.size(); ++j) total.values[j] += cur[j];
  }
  return total;
}

MollerOperator transpose(const MollerOperator& w) {
  MollerOperator out{w.side, w.params, {}};
  for (const auto& term : w.terms) {
    std::vector<MollerFactor> rev;
    for (auto it = term.rbegin(); it != term.rend(); ++it) {
      if (const auto* sym = std::get_if<MellinSymbol>(&*it)) {
        rev.push_back(MollerFactor(transpose_symbol(*sym)));
      } else {
        rev.push_back(*it);
      }
    }
    out.terms.push_back(std::move(rev));
  }
  return out;
}

RelationReport verify_relations(const PerturbationParams& p,
                                std::span<const GridVector> test_vectors,
                                const RelationOptions& opts) {
  RelationReport rep;
  for (const Side side : {Side::Plus, Side::Minus}) {
    const MollerOperator w = moller(p, side);
    const MollerOperator wt = transpose(moller(p, opposite(side)));
    for (const GridVector& v : test_vectors) {
      const double vn = norm(v);
      // (pa1): W^{-+T} W^+- = 1.
      GridVector round_trip = apply(wt, apply(w, v));
      double diff = 0.0;
      for (int j = 0; j < v.size(); ++j) diff += v.grid->w(j) * std::norm(round_trip[j] - v[j]);
      rep.pa1 = std::max(rep.pa1, std::sqrt(diff) / vn);

      // (pa3) in resolvent form: W (z-X)^{-1} = (z-H)^{-1} W.
      for (const Complex z : opts.z_points) {
        const PhysicalSheetPoint zp(z);
        GridVector rx = v;
        for (int j = 0; j < v.size(); ++j) rx.values[j] = v[j] / (z - v.grid->x(j));
        const GridVector lhs = apply(w, rx);
        const GridVector rhs = resolvent_apply(p, zp, apply(w, v));
        double d = 0.0, scale = 0.0;
        for (int j = 0; j < v.size(); ++j) {
          d += v.grid->w(j) * std::norm(lhs[j] - rhs[j]);
          scale += v.grid->w(j) * std::norm(lhs[j]);
        }
        rep.pa3 = std::max(rep.pa3, std::sqrt(d) / std::max(std::sqrt(scale), 1e-300));
      }
    }
  }

  if (opts.with_pa2) {
    // (pa2): W^+ W^{-T} = 1_{[0,inf)}(H), against the Stone-formula route.
    const MollerOperator w = moller(p, Side::Plus);
    const MollerOperator wt = transpose(moller(p, Side::Minus));
    double worst = 0.0;
    for (const GridVector& v : test_vectors) {
      const GridVector lhs = apply(w, apply(wt, v));
      const GridVector rhs = positive_projection_apply(p, v, opts.eps_sequence);
      double d = 0.0;
      for (int j = 0; j < v.size(); ++j) d += v.grid->w(j) * std::norm(lhs[j] - rhs[j]);
      worst = std::max(worst, std::sqrt(d) / norm(v));
    }
    rep.pa2 = worst;
  }
  return rep;
}

KernelMatrix moller_kernel_regularized(const PerturbationParams& p, Side side, double eps,
                                       GridPtr grid) {
  if (!(eps > 0.0)) {
    throw PreconditionError("invalid_parameter", "eps", "regularized kernel requires eps > 0");
  }
  const int n = grid->size();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) k(j, j) = 1.0 / grid->w(j);
  if (!p.trivial()) {
    require_not_exceptional(p);
    const GridVector h = perturbation_vector(p, grid);
    const double sg = side_sign(side);
    std::vector<Complex> col(n);
    for (int c = 0; c < n; ++c) {
      const Complex gb = g_boundary(p, BoundaryPoint(grid->x(c), opposite(side)));
      col[c] = h[c] / gb;
    }
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        k(r, c) += h[r] * col[c] / Complex(grid->x(r) - grid->x(c), sg * eps);
      }
    }
  }
  return KernelMatrix(std::move(grid), std::move(k));
}

}  // namespace rankone
