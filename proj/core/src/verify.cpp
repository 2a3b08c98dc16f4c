#include <rankone/verify.hpp>

#include <rankone/branchcut.hpp>
#include <rankone/greens.hpp>
#include <rankone/grid.hpp>
#include <rankone/mellin.hpp>
#include <rankone/oracles.hpp>
#include <rankone/scattering.hpp>

#include <cmath>
#include <random>

namespace rankone::verify {

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

GridVector log_gaussian_bump(GridPtr grid, double center_t, double sigma = 1.0) {
  return sample(
      [center_t, sigma](double x) {
        const double t = std::log(x);
        const double u = (t - center_t) / sigma;
        return Complex(std::exp(-0.5 * u * u) / std::sqrt(x));
      },
      std::move(grid));
}

}  // namespace

SuiteResult run_appendix_suite() {
  SuiteResult res{"appendix", {}};
  const auto& eps = oracles::default_eps_sequence();

  const Complex a_sweep[10] = {
      {0.0, 0.0},  {0.15, 0.0}, {-0.2, 0.0}, {0.3, 0.0},   {-0.35, 0.0},
      {0.2, 0.1},  {-0.1, 0.3}, {0.05, -0.2}, {0.25, 0.15}, {-0.3, -0.1},
  };
  double worst = 0.0;
  for (const Complex a : a_sweep) worst = std::max(worst, oracles::verify_integral0(a).rel_err);
  res.checks.push_back({"integral0 sweep", worst, 1e-8});

  worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex a = a_sweep[i];
    const Side side = i % 2 == 0 ? Side::Plus : Side::Minus;
    worst = std::max(worst, oracles::verify_integral_pm(a, side, eps).rel_err);
  }
  res.checks.push_back({"integral_pm sweep (eps-extrapolated)", worst, 1e-6});

  const Complex m_sweep[10] = {
      {-0.5, 0.0},  {-0.25, 0.0}, {-0.75, 0.0}, {-0.1, 0.0},  {-0.9, 0.0},
      {-0.5, 0.2},  {-0.3, -0.4}, {-0.6, 0.3},  {-0.45, 0.1}, {-0.8, -0.2},
  };
  worst = 0.0;
  for (const Complex m : m_sweep) worst = std::max(worst, oracles::verify_app4(m).rel_err);
  res.checks.push_back({"app4 sweep", worst, 1e-8});

  // Substitution chain: app4(m) and integral0(m + 1/2) describe one integral.
  worst = 0.0;
  for (const Complex m : {Complex(-0.5, 0.0), Complex(-0.3, 0.2), Complex(-0.7, -0.1)}) {
    const Complex lhs = oracles::verify_app4(m).computed;
    const Complex rhs = oracles::verify_integral0(m + 0.5).computed;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  res.checks.push_back({"app4 vs integral0 substitution", worst, 1e-10});
  return res;
}

SuiteResult run_greens_suite(unsigned seed) {
  SuiteResult res{"greens", {}};
  std::mt19937_64 rng(seed);

  // Closed-form g for lambda = infinity against direct quadrature.
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex m(-0.9 + 0.8 * uniform01(rng), -0.4 + 0.8 * uniform01(rng));
    const double r = 0.3 + 2.7 * uniform01(rng);
    const double th = kPi * (0.15 + 1.7 * uniform01(rng));
    const Complex z = r * std::exp(Complex(0.0, th));
    const PerturbationParams p = PerturbationParams::m_lambda(m, Coupling::infinity());
    const Complex closed = g_value(p, PhysicalSheetPoint(z));
    const Complex quad = oracles::quad_halfline(
        [m, z](double x) { return std::exp(m * std::log(x)) / (z - x); }, 1e-11);
    worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
  }
  res.checks.push_back({"g_infinity vs quadrature (20 random)", worst, 1e-8});

  // Derivative relation via central differences, both families.
  worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex m(0.9 * uniform01(rng), -0.5 + uniform01(rng));
    const PerturbationParams p =
        m == 0.0 ? PerturbationParams::rho(Coupling(0.3))
                 : PerturbationParams::m_lambda(m, Coupling(Complex(0.7, 0.2)));
    const double r = 0.5 + 2.0 * uniform01(rng);
    const double th = kPi * (0.2 + 1.6 * uniform01(rng));
    const Complex z = r * std::exp(Complex(0.0, th));
    const double hstep = 1e-5 * (1.0 + std::abs(z));
    const Complex d_num = (g_value(p, PhysicalSheetPoint(z + hstep)) -
                           g_value(p, PhysicalSheetPoint(z - hstep))) /
                          (2.0 * hstep);
    const Complex d_closed = g_derivative(p, PhysicalSheetPoint(z));
    worst = std::max(worst, std::abs(d_num - d_closed) / std::abs(d_closed));
  }
  res.checks.push_back({"derivative relation (central differences)", worst, 1e-6});
  return res;
}

SuiteResult run_mellin_suite() {
  SuiteResult res{"mellin", {}};
  // The Cauchy profile decays like e^{-|t|/2}, so the window must be wide
  // enough that its periodization sits below the extrapolated tolerance.
  const GridPtr grid = LogGrid::make(-18.0, 18.0, 2048);
  const double sigma = 2.0;
  const GridVector v = log_gaussian_bump(grid, 0.0, sigma);
  const auto vf = [sigma](double y) {
    const double t = std::log(y) / sigma;
    return Complex(std::exp(-0.5 * t * t) / std::sqrt(y));
  };
  const std::vector<double> eps{1e-3, 5e-4, 2.5e-4};

  for (const Side side : {Side::Minus, Side::Plus}) {
    // Side labels the kernel 1/(x - y -+ i0); Minus pairs with +2 pi i/(e^{2 pi xi}+1).
    const MellinSymbol sym =
        side == Side::Minus ? cauchy_symbol_minus_i0() : cauchy_symbol_plus_i0();
    const GridVector fft_route = apply_symbol(sym, v);
    const double kernel_eps = side == Side::Minus ? -1.0 : +1.0;

    double ref = 0.0;
    for (int j = 0; j < grid->size(); ++j) ref = std::max(ref, std::abs(fft_route[j]));

    double worst_raw = 0.0, worst_extrap = 0.0;
    for (int j = grid->size() / 2 - 96; j <= grid->size() / 2 + 96; j += 16) {
      const double x = grid->x(j);
      std::vector<Complex> vals(eps.size());
      for (std::size_t ie = 0; ie < eps.size(); ++ie) {
        const Complex shift(0.0, kernel_eps * eps[ie]);
        vals[ie] = oracles::quad_halfline(
            [x, shift, &vf](double y) { return vf(y) / (x - y + shift); }, 1e-11);
      }
      worst_raw = std::max(worst_raw, std::abs(vals[0] - fft_route[j]) / ref);
      const Complex extrap = oracles::richardson(eps, vals);
      worst_extrap = std::max(worst_extrap, std::abs(extrap - fft_route[j]) / ref);
    }
    const char* tag = side == Side::Minus ? "-i0" : "+i0";
    res.checks.push_back({std::string("cauchy kernel ") + tag + " at eps=1e-3", worst_raw, 1e-3});
    res.checks.push_back({std::string("cauchy kernel ") + tag + " extrapolated", worst_extrap, 1e-5});
  }
  return res;
}

SuiteResult run_scattering_suite() {
  SuiteResult res{"scattering", {}};
  const GridPtr grid = LogGrid::make_default();
  const std::vector<GridVector> vs{log_gaussian_bump(grid, 0.0), log_gaussian_bump(grid, 0.8)};

  const PerturbationParams sets[3] = {
      PerturbationParams::m_lambda(Complex(-0.5, 0.0), Coupling(Complex(1.0, 0.0))),
      PerturbationParams::m_lambda(Complex(0.3, 0.1), Coupling(Complex(0.8, -0.2))),
      PerturbationParams::rho(Coupling(Complex(0.0, 0.0))),
  };
  double pa1 = 0.0, pa3 = 0.0;
  for (const auto& p : sets) {
    const RelationReport rep = verify_relations(p, vs);
    pa1 = std::max(pa1, rep.pa1);
    pa3 = std::max(pa3, rep.pa3);
  }
  res.checks.push_back({"(pa1) inverse relation", pa1, 1e-6});
  res.checks.push_back({"(pa3) intertwining in resolvent form", pa3, 1e-6});
  return res;
}

std::vector<SuiteResult> run_all_suites() {
  return {run_appendix_suite(), run_greens_suite(), run_mellin_suite(), run_scattering_suite()};
}

}  // namespace rankone::verify
