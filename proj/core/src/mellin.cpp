#include <rankone/mellin.hpp>

#include "fft.hpp"

#include <algorithm>
#include <cmath>

namespace rankone {

namespace {

// Signed DFT frequency: xi_k = 2 pi k~ / (n dt) with k~ in [-n/2, n/2).
double frequency(int k, int n, double dt) {
  const int ks = k < n / 2 ? k : k - n;
  return 2.0 * kPi * ks / (n * dt);
}

Complex stable_cauchy(double xi, double sg) {
  // sg * 2 pi i / (e^{sg 2 pi xi} + 1) without overflow.
  const double a = sg * 2.0 * kPi * xi;
  const Complex pref(0.0, sg * 2.0 * kPi);
  if (a > 35.0) {
    const double e = std::exp(-a);
    return pref * e / (1.0 + e);
  }
  return pref / (std::exp(a) + 1.0);
}

}  // namespace

GridVector apply_symbol(const MellinSymbol& s, const GridVector& v) {
  const auto& grid = *v.grid;
  const int n = grid.size();
  std::vector<Complex> u(n);
  for (int j = 0; j < n; ++j) u[j] = std::exp(0.5 * grid.t(j)) * v[j];
  detail::fft_forward(u);
  for (int k = 0; k < n; ++k) u[k] *= s(frequency(k, n, grid.dt()));
  detail::fft_backward(u);
  const double inv_n = 1.0 / n;
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) out[j] = std::exp(-0.5 * grid.t(j)) * u[j] * inv_n;
  return GridVector(v.grid, std::move(out));
}

MellinSymbol symbol_from_profile(const std::function<Complex(double)>& phi, const LogGrid& grid) {
  const int n = grid.size();
  const double dt = grid.dt();
  std::vector<Complex> f(n);
  for (int j = 0; j < n; ++j) f[j] = phi(grid.t(j));
  detail::fft_forward(f);
  // phihat(xi_k) = dt e^{-i xi_k t_min} sum_j f_j e^{-2 pi i jk/n}; store
  // sorted by xi for interpolation.
  std::vector<double> xs(n);
  std::vector<Complex> ys(n);
  for (int k = 0; k < n; ++k) {
    const double xi = frequency(k, n, dt);
    const int slot = (k + n / 2) % n;  // ascending xi
    xs[slot] = xi;
    ys[slot] = dt * std::exp(Complex(0.0, -xi * grid.t_min())) * f[k];
  }
  auto eval = [xs = std::move(xs), ys = std::move(ys)](double xi) -> Complex {
    if (xi <= xs.front()) return ys.front();
    if (xi >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), xi);
    const std::size_t hi = it - xs.begin();
    const double a = (xi - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return (1.0 - a) * ys[hi - 1] + a * ys[hi];
  };
  return MellinSymbol(std::move(eval), "sampled");
}

std::vector<Complex> profile_from_symbol(const MellinSymbol& s, const LogGrid& grid) {
  const int n = grid.size();
  const double dt = grid.dt();
  std::vector<Complex> f(n);
  for (int k = 0; k < n; ++k) {
    const double xi = frequency(k, n, dt);
    f[k] = s(xi) * std::exp(Complex(0.0, xi * grid.t_min()));
  }
  detail::fft_backward(f);
  const double scale = 1.0 / (n * dt);
  for (auto& v : f) v *= scale;
  return f;
}

GridVector dilation_apply(double tau, const GridVector& v, bool allow_interpolation) {
  const auto& grid = *v.grid;
  const int n = grid.size();
  const double shift = tau / grid.dt();
  const double rounded = std::round(shift);
  const double scale = std::exp(0.5 * tau);
  std::vector<Complex> out(n, Complex(0.0));
  if (std::abs(shift - rounded) < 1e-9) {
    const int p = static_cast<int>(rounded);
    for (int j = 0; j < n; ++j) {
      const int src = j + p;
      if (src >= 0 && src < n) out[j] = scale * v[src];
    }
  } else if (allow_interpolation) {
    for (int j = 0; j < n; ++j) {
      const double pos = j + shift;
      const int lo = static_cast<int>(std::floor(pos));
      const double a = pos - lo;
      Complex val = 0.0;
      if (lo >= 0 && lo < n) val += (1.0 - a) * v[lo];
      if (lo + 1 >= 0 && lo + 1 < n) val += a * v[lo + 1];
      out[j] = scale * val;
    }
  } else {
    throw PreconditionError("invalid_parameter", "tau",
                            "tau is not a grid-shift multiple and interpolation is disabled");
  }
  return GridVector(v.grid, std::move(out));
}

MellinSymbol transpose_symbol(const MellinSymbol& s) {
  return MellinSymbol([s](double xi) { return s(-xi); },
                      s.form().empty() ? std::string("transposed") : s.form() + "^T");
}

MellinSymbol dilation_symbol(double tau) {
  return MellinSymbol([tau](double xi) { return std::exp(Complex(0.0, tau * xi)); }, "U_tau");
}

MellinSymbol cauchy_symbol_minus_i0() {
  return MellinSymbol([](double xi) { return stable_cauchy(xi, +1.0); }, "1/(x-y-i0)");
}

MellinSymbol cauchy_symbol_plus_i0() {
  return MellinSymbol([](double xi) { return stable_cauchy(xi, -1.0); }, "1/(x-y+i0)");
}

}  // namespace rankone
