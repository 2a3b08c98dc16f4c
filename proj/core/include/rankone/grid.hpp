#pragma once

#include <rankone/common.hpp>

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <vector>

namespace rankone {

/// Logarithmically spaced discretization of (0,inf): nodes x_j = e^{t_j},
/// t_j = t_min + j*dt, weights w_j = x_j*dt (trapezoid in t).  n must be a
/// power of two so the same grid carries the FFT symbol calculus.
class LogGrid {
 public:
  LogGrid(double t_min, double t_max, int n);

  static std::shared_ptr<const LogGrid> make(double t_min, double t_max, int n);
  static std::shared_ptr<const LogGrid> make_default();

  int size() const { return n_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  double dt() const { return dt_; }
  double t(int j) const { return t_[j]; }
  double x(int j) const { return x_[j]; }
  double w(int j) const { return w_[j]; }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& weights() const { return w_; }
  const std::vector<double>& ts() const { return t_; }

  bool same_as(const LogGrid& other) const {
    return n_ == other.n_ && t_min_ == other.t_min_ && t_max_ == other.t_max_;
  }

  // Defaults shared by the CLI and the test suites.
  static constexpr double kDefaultTMin = -26.0;
  static constexpr double kDefaultTMax = 26.0;
  static constexpr int kDefaultN = 2048;

 private:
  double t_min_, t_max_, dt_;
  int n_;
  std::vector<double> t_, x_, w_;
};

using GridPtr = std::shared_ptr<const LogGrid>;

/// Complex samples bound to a LogGrid.
struct GridVector {
  GridPtr grid;
  std::vector<Complex> values;

  GridVector() = default;
  GridVector(GridPtr g, std::vector<Complex> v);

  int size() const { return static_cast<int>(values.size()); }
  Complex& operator[](int j) { return values[j]; }
  const Complex& operator[](int j) const { return values[j]; }
};

/// Pointwise evaluation of f at the nodes; rejects non-finite samples.
GridVector sample(const std::function<Complex(double)>& f, GridPtr grid);

void require_same_grid(const GridVector& f, const GridVector& g);

/// sum_j w_j f_j g_j (no conjugation).
Complex pair_bilinear(const GridVector& f, const GridVector& g);

/// sum_j w_j conj(f_j) g_j.
Complex pair_sesquilinear(const GridVector& f, const GridVector& g);

/// sqrt((f|f)): the L^2 norm induced by the quadrature weights.
double norm(const GridVector& f);

/// Dense integral operator K on the grid, applied as (Kv)_j = sum_k K_jk w_k v_k.
class KernelMatrix {
 public:
  KernelMatrix(GridPtr grid, Eigen::MatrixXcd entries);

  static KernelMatrix zero(GridPtr grid);
  /// The identity operator (diagonal entries 1/w_j).
  static KernelMatrix identity(GridPtr grid);

  const GridPtr& grid() const { return grid_; }
  const Eigen::MatrixXcd& entries() const { return k_; }
  Eigen::MatrixXcd& entries() { return k_; }

  GridVector apply(const GridVector& v) const;
  /// Operator with kernel K(y,x); adjoint of *this for the bilinear pairing.
  KernelMatrix transpose() const;
  /// Operator composition (this after rhs).
  KernelMatrix compose(const KernelMatrix& rhs) const;

  KernelMatrix& operator+=(const KernelMatrix& rhs);
  KernelMatrix& operator-=(const KernelMatrix& rhs);
  KernelMatrix& operator*=(Complex c);

 private:
  GridPtr grid_;
  Eigen::MatrixXcd k_;
};

KernelMatrix operator-(KernelMatrix lhs, const KernelMatrix& rhs);
KernelMatrix operator+(KernelMatrix lhs, const KernelMatrix& rhs);

/// L^2(0,inf) -> L^2(0,inf) operator norm (largest singular value of the
/// weight-symmetrized matrix), via power iteration.
double operator_norm(const KernelMatrix& k);

/// max_{j,k} |K_jk - K_kj|, normalized by max entry; 0 for self-transposed kernels.
double max_asymmetry(const KernelMatrix& k);

}  // namespace rankone
