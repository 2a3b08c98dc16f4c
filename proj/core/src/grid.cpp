#include <rankone/grid.hpp>

#include <cmath>
#include <random>

namespace rankone {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

LogGrid::LogGrid(double t_min, double t_max, int n) : t_min_(t_min), t_max_(t_max), n_(n) {
  if (!(t_min < t_max)) {
    throw PreconditionError("invalid_parameter", "tmin", "grid requires t_min < t_max");
  }
  if (n < 8 || !power_of_two(n)) {
    throw PreconditionError("invalid_parameter", "n", "grid size must be a power of two >= 8");
  }
  dt_ = (t_max - t_min) / n;
  t_.resize(n);
  x_.resize(n);
  w_.resize(n);
  for (int j = 0; j < n; ++j) {
    t_[j] = t_min + j * dt_;
    x_[j] = std::exp(t_[j]);
    w_[j] = x_[j] * dt_;
  }
}

std::shared_ptr<const LogGrid> LogGrid::make(double t_min, double t_max, int n) {
  return std::make_shared<const LogGrid>(t_min, t_max, n);
}

std::shared_ptr<const LogGrid> LogGrid::make_default() {
  return make(kDefaultTMin, kDefaultTMax, kDefaultN);
}

GridVector::GridVector(GridPtr g, std::vector<Complex> v) : grid(std::move(g)), values(std::move(v)) {
  if (!grid || static_cast<int>(values.size()) != grid->size()) {
    throw std::invalid_argument("GridVector: value count must match the grid");
  }
}

GridVector sample(const std::function<Complex(double)>& f, GridPtr grid) {
  std::vector<Complex> v(grid->size());
  for (int j = 0; j < grid->size(); ++j) {
    v[j] = f(grid->x(j));
    if (!std::isfinite(v[j].real()) || !std::isfinite(v[j].imag())) {
      throw std::runtime_error("sample: non-finite value at node x = " + std::to_string(grid->x(j)));
    }
  }
  return GridVector(std::move(grid), std::move(v));
}

void require_same_grid(const GridVector& f, const GridVector& g) {
  if (!f.grid || !g.grid || !f.grid->same_as(*g.grid)) {
    throw std::invalid_argument("grid mismatch between vectors");
  }
}

Complex pair_bilinear(const GridVector& f, const GridVector& g) {
  require_same_grid(f, g);
  Complex acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f.grid->w(j) * f[j] * g[j];
  return acc;
}

Complex pair_sesquilinear(const GridVector& f, const GridVector& g) {
  require_same_grid(f, g);
  Complex acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f.grid->w(j) * std::conj(f[j]) * g[j];
  return acc;
}

double norm(const GridVector& f) {
  double acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f.grid->w(j) * std::norm(f[j]);
  return std::sqrt(acc);
}

KernelMatrix::KernelMatrix(GridPtr grid, Eigen::MatrixXcd entries)
    : grid_(std::move(grid)), k_(std::move(entries)) {
  if (k_.rows() != grid_->size() || k_.cols() != grid_->size()) {
    throw std::invalid_argument("KernelMatrix: entry matrix must be n x n for its grid");
  }
}

KernelMatrix KernelMatrix::zero(GridPtr grid) {
  const int n = grid->size();
  return KernelMatrix(std::move(grid), Eigen::MatrixXcd::Zero(n, n));
}

KernelMatrix KernelMatrix::identity(GridPtr grid) {
  const int n = grid->size();
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) k(j, j) = 1.0 / grid->w(j);
  return KernelMatrix(std::move(grid), std::move(k));
}

GridVector KernelMatrix::apply(const GridVector& v) const {
  if (!v.grid->same_as(*grid_)) throw std::invalid_argument("grid mismatch in kernel application");
  const int n = grid_->size();
  Eigen::VectorXcd wv(n);
  for (int j = 0; j < n; ++j) wv[j] = grid_->w(j) * v[j];
  Eigen::VectorXcd out = k_ * wv;
  return GridVector(v.grid, std::vector<Complex>(out.data(), out.data() + n));
}

KernelMatrix KernelMatrix::transpose() const {
  return KernelMatrix(grid_, k_.transpose());
}

KernelMatrix KernelMatrix::compose(const KernelMatrix& rhs) const {
  if (!rhs.grid_->same_as(*grid_)) throw std::invalid_argument("grid mismatch in kernel composition");
  const int n = grid_->size();
  Eigen::MatrixXcd weighted = rhs.k_;
  for (int j = 0; j < n; ++j) weighted.row(j) *= grid_->w(j);
  return KernelMatrix(grid_, k_ * weighted);
}

KernelMatrix& KernelMatrix::operator+=(const KernelMatrix& rhs) {
  if (!rhs.grid_->same_as(*grid_)) throw std::invalid_argument("grid mismatch");
  k_ += rhs.k_;
  return *this;
}

KernelMatrix& KernelMatrix::operator-=(const KernelMatrix& rhs) {
  if (!rhs.grid_->same_as(*grid_)) throw std::invalid_argument("grid mismatch");
  k_ -= rhs.k_;
  return *this;
}

KernelMatrix& KernelMatrix::operator*=(Complex c) {
  k_ *= c;
  return *this;
}

KernelMatrix operator-(KernelMatrix lhs, const KernelMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

KernelMatrix operator+(KernelMatrix lhs, const KernelMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

double operator_norm(const KernelMatrix& k) {
  // Similarity transform M = W^{1/2} K W^{1/2} turns the weighted operator
  // norm into a plain spectral norm; power iteration on M^H M.
  const int n = k.grid()->size();
  Eigen::VectorXd sw(n);
  for (int j = 0; j < n; ++j) sw[j] = std::sqrt(k.grid()->w(j));
  Eigen::MatrixXcd m = k.entries();
  for (int j = 0; j < n; ++j) {
    m.row(j) *= sw[j];
    m.col(j) *= sw[j];
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int j = 0; j < n; ++j) v[j] = Complex(u(rng), u(rng));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 600; ++it) {
    Eigen::VectorXcd w = m * v;
    Eigen::VectorXcd y = m.adjoint() * w;
    const double yn = y.norm();
    if (yn == 0.0) return 0.0;
    const double next = std::sqrt(yn);
    y /= yn;
    const double drift = (y - v).norm();
    v = y;
    if (std::abs(next - sigma) <= 1e-10 * next && drift < 1e-8) {
      return next;
    }
    sigma = next;
  }
  return sigma;
}

double max_asymmetry(const KernelMatrix& k) {
  const auto& m = k.entries();
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 0; j < m.rows(); ++j) {
    for (int i = j + 1; i < m.cols(); ++i) {
      worst = std::max(worst, std::abs(m(j, i) - m(i, j)));
    }
  }
  return worst / scale;
}

}  // namespace rankone
