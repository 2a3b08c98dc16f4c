#include <rankone/oracles.hpp>

#include <cmath>
#include <cstddef>

namespace rankone::oracles {

namespace {

// G7/K15 on [-1,1].  Kronrod abscissae (positive half), Kronrod weights and
// embedded Gauss-7 weights; standard published values.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  Complex value;
  double error;
};

PanelResult gk15(const ComplexFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  Complex kron = kWgk[7] * fv[7];
  Complex gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron *= h;
  gauss *= h;
  // |K15 - G7| as the error estimate: pessimistic for K15, which is what an
  // oracle wants.
  return {kron, std::abs(kron - gauss)};
}

void adapt(const ComplexFn& f, double a, double b, double tol, int depth,
           Complex& acc, long& evals) {
  evals += 15;
  if (evals > 6'000'000) {
    throw std::runtime_error("adaptive quadrature: evaluation budget exhausted");
  }
  const PanelResult r = gk15(f, a, b);
  if (r.error <= tol || depth >= 52) {
    if (depth >= 52 && r.error > 1e3 * tol) {
      throw std::runtime_error("adaptive quadrature: runaway refinement");
    }
    acc += r.value;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, acc, evals);
  adapt(f, c, b, 0.5 * tol, depth + 1, acc, evals);
}

}  // namespace

Complex quad_finite(const ComplexFn& f, double a, double b, double tol) {
  Complex acc = 0.0;
  long evals = 0;
  adapt(f, a, b, tol, 0, acc, evals);
  return acc;
}

Complex quad_line(const ComplexFn& f, double tol) {
  // Central panel plus geometrically growing wings; a wing stops once two
  // consecutive panels contribute below the noise floor.
  Complex acc = quad_finite(f, -1.0, 1.0, 0.25 * tol);
  for (int dir = 0; dir < 2; ++dir) {
    const double sgn = dir == 0 ? 1.0 : -1.0;
    double lo = 1.0;
    int quiet = 0;
    int k = 0;
    for (; k < 48 && quiet < 2; ++k) {
      const double hi = lo * 2.0;
      const Complex panel = sgn > 0 ? quad_finite(f, lo, hi, 0.25 * tol)
                                    : quad_finite(f, -hi, -lo, 0.25 * tol);
      acc += panel;
      if (std::abs(panel) < 0.25 * tol * (1.0 + std::abs(acc))) {
        ++quiet;
      } else {
        quiet = 0;
      }
      lo = hi;
    }
    if (quiet < 2) {
      throw std::runtime_error("quad_line: integrand tail does not settle");
    }
  }
  return acc;
}

Complex quad_halfline(const ComplexFn& f, double tol) {
  // x = e^t; outside |t| <~ 700 the substitution over/underflows while any
  // integrable f contributes nothing, so those evaluations are dropped.
  return quad_line(
      [&f](double t) -> Complex {
        if (t > 700.0 || t < -740.0) return Complex(0.0);
        const double x = std::exp(t);
        return f(x) * x;
      },
      tol);
}

Complex richardson(std::span<const double> eps, std::span<const Complex> vals) {
  if (eps.size() != vals.size() || eps.empty()) {
    throw std::invalid_argument("richardson: need matching nonempty eps/value lists");
  }
  // Neville scheme evaluating the interpolating polynomial at eps = 0.
  std::vector<Complex> t(vals.begin(), vals.end());
  const std::size_t n = t.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const double e_i = eps[i];
      const double e_ij = eps[i - j];
      t[i] = (e_ij * t[i] - e_i * t[i - 1]) / (e_ij - e_i);
      if (i == j) break;
    }
  }
  return t[n - 1];
}

IdentityReport verify_integral0(Complex a, double tol) {
  if (std::abs(a.real()) >= 0.5) {
    throw PreconditionError("invalid_parameter", "a", "verify_integral0 requires -1/2 < Re a < 1/2");
  }
  // Overflow-free form of e^{at} / (e^{t/2} + e^{-t/2}).
  const auto integrand = [a](double t) -> Complex {
    if (t >= 0.0) return std::exp((a - 0.5) * t) / (1.0 + std::exp(-t));
    return std::exp((a + 0.5) * t) / (1.0 + std::exp(t));
  };
  const Complex computed = quad_line(integrand, tol);
  const Complex expected = kPi / std::cos(kPi * a);
  return {computed, expected, std::abs(computed - expected) / std::abs(expected)};
}

IdentityReport verify_integral_pm(Complex a, Side side, std::span<const double> eps, double tol) {
  if (std::abs(a.real()) >= 0.5) {
    throw PreconditionError("invalid_parameter", "a", "verify_integral_pm requires -1/2 < Re a < 1/2");
  }
  const double sg = side_sign(side);
  std::vector<Complex> vals(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double e = eps[i];
    // e^{at} / (e^{t/2} - e^{-t/2} -+ i e), rescaled by e^{-+t/2} on each half line.
    const auto integrand = [a, sg, e](double t) -> Complex {
      if (t >= 0.0) {
        return std::exp((a - 0.5) * t) /
               (1.0 - std::exp(-t) + Complex(0.0, -sg * e * std::exp(-0.5 * t)));
      }
      return std::exp((a + 0.5) * t) /
             (std::exp(t) - 1.0 + Complex(0.0, -sg * e * std::exp(0.5 * t)));
    };
    vals[i] = quad_line(integrand, tol);
  }
  const Complex computed = richardson(eps, vals);
  const Complex i2pi(0.0, sg * 2.0 * kPi);
  const Complex expected = i2pi / (std::exp(Complex(0.0, sg * 2.0 * kPi) * a) + 1.0);
  return {computed, expected, std::abs(computed - expected) / std::abs(expected)};
}

IdentityReport verify_app4(Complex m, double tol) {
  if (m.real() <= -1.0 || m.real() >= 0.0) {
    throw PreconditionError("invalid_parameter", "m", "verify_app4 requires -1 < Re m < 0");
  }
  // s = e^t turns s^m (1+s)^{-1} ds into e^{(m+1)t} / (1+e^t) dt.
  const auto integrand = [m](double t) -> Complex {
    if (t >= 0.0) return std::exp(m * t) / (1.0 + std::exp(-t));
    return std::exp((m + 1.0) * t) / (1.0 + std::exp(t));
  };
  const Complex computed = quad_line(integrand, tol);
  const Complex expected = -kPi / std::sin(kPi * m);
  return {computed, expected, std::abs(computed - expected) / std::abs(expected)};
}

}  // namespace rankone::oracles
