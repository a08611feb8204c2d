#include "ibstokes/poisson.hpp"

#include <fftw3.h>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace ibstokes {

void LinearSolveOptions::validate() const {
  if (!(tol > 0.0) || tol > 1e-6) {
    throw std::invalid_argument("LinearSolveOptions: tol must lie in (0, 1e-6]");
  }
  if (max_iter <= 0) throw std::invalid_argument("LinearSolveOptions: max_iter must be positive");
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

void require_nodes(const ScalarField& f, const GridSpec& grid, const char* who) {
  if (f.layout() != Layout::Nodes || f.N() != grid.N) {
    throw std::invalid_argument(std::string(who) + ": expected a node field matching the grid");
  }
}

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0; }

double matrix_inf_norm(const SpMat& A) {
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(A.rows());
  for (int k = 0; k < A.outerSize(); ++k) {
    for (SpMat::InnerIterator it(A, k); it; ++it) rows[it.row()] += std::abs(it.value());
  }
  return inf_norm(rows);
}

double backward_error(const SpMat& A, double A_norm, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& b) {
  const Eigen::VectorXd r = A * x - b;
  const double denom = A_norm * inf_norm(x) + inf_norm(b);
  return denom > 0.0 ? inf_norm(r) / denom : 0.0;
}

}  // namespace

ScalarField apply_laplacian(const ScalarField& U, double h) {
  if (U.layout() != Layout::Nodes) throw std::invalid_argument("apply_laplacian: node field required");
  const int N = U.N();
  const double inv_h2 = 1.0 / (h * h);
  ScalarField out(Layout::Nodes, N);
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      out(i, j) = (U(i - 1, j) + U(i + 1, j) + U(i, j - 1) + U(i, j + 1) - 4.0 * U(i, j)) * inv_h2;
    }
  }
  return out;
}

ScalarField apply_neumann_operator(const ScalarField& U, double h) {
  ScalarField out = apply_laplacian(U, h);
  const int N = U.N();
  for (int j = 0; j <= N; ++j) {
    out(0, j) = (U(1, j) - U(0, j)) / h;
    out(N, j) = (U(N, j) - U(N - 1, j)) / h;
  }
  for (int i = 1; i < N; ++i) {
    out(i, 0) = (U(i, 1) - U(i, 0)) / h;
    out(i, N) = (U(i, N) - U(i, N - 1)) / h;
  }
  return out;
}

NodeIndex nearest_node(const GridSpec& grid, double x, double y) {
  const int i = static_cast<int>(std::lround((x - grid.a) / grid.h));
  const int j = static_cast<int>(std::lround((y - grid.c) / grid.h));
  return {std::clamp(i, 0, grid.N), std::clamp(j, 0, grid.N)};
}

// ---------------------------------------------------------------------------
// Dirichlet

struct DirichletPoissonSolver::Impl {
  int n = 0;  // interior nodes per side, N - 1
  // direct path: K = -h^2 A on interior unknowns, symmetric positive definite
  SpMat K;
  double K_norm = 0.0;
  Eigen::SimplicialLDLT<SpMat> ldlt;
  // transform path
  std::vector<double> eigen;
  fftw_plan plan = nullptr;

  ~Impl() {
    if (plan) fftw_destroy_plan(plan);
  }
};

DirichletPoissonSolver::DirichletPoissonSolver(const GridSpec& grid, LinearSolveOptions opts)
    : grid_(grid), opts_(opts), impl_(std::make_unique<Impl>()) {
  opts_.validate();
  const int n = grid.N - 1;
  impl_->n = n;
  auto id = [n](int i, int j) { return (j - 1) * n + (i - 1); };

  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(5 * n * n));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const int r = id(i, j);
      trip.emplace_back(r, r, 4.0);
      if (i > 1) trip.emplace_back(r, id(i - 1, j), -1.0);
      if (i < n) trip.emplace_back(r, id(i + 1, j), -1.0);
      if (j > 1) trip.emplace_back(r, id(i, j - 1), -1.0);
      if (j < n) trip.emplace_back(r, id(i, j + 1), -1.0);
    }
  }
  impl_->K.resize(n * n, n * n);
  impl_->K.setFromTriplets(trip.begin(), trip.end());
  impl_->K_norm = matrix_inf_norm(impl_->K);

  if (opts_.method == SolveMethod::DirectSparse) {
    impl_->ldlt.compute(impl_->K);
    if (impl_->ldlt.info() != Eigen::Success) {
      throw SolverError("DirichletPoissonSolver: factorization failed", 0.0);
    }
  } else {
    // DST-I diagonalizes K: eigenvalue 4 - 2cos(p pi/N) - 2cos(q pi/N)
    impl_->eigen.resize(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
      impl_->eigen[p - 1] = 2.0 - 2.0 * std::cos(p * std::numbers::pi / grid.N);
    }
    // planning is not thread safe; execution on fresh buffers is
    std::vector<double> in(static_cast<std::size_t>(n * n)), out(in.size());
    impl_->plan = fftw_plan_r2r_2d(n, n, in.data(), out.data(), FFTW_RODFT00, FFTW_RODFT00,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!impl_->plan) throw SolverError("DirichletPoissonSolver: FFTW plan creation failed", 0.0);
  }
}

DirichletPoissonSolver::~DirichletPoissonSolver() = default;
DirichletPoissonSolver::DirichletPoissonSolver(DirichletPoissonSolver&&) noexcept = default;
DirichletPoissonSolver& DirichletPoissonSolver::operator=(DirichletPoissonSolver&&) noexcept = default;

ScalarField DirichletPoissonSolver::solve(const ScalarField& rhs, const ScalarField& boundary) const {
  require_nodes(rhs, grid_, "DirichletPoissonSolver::solve(rhs)");
  require_nodes(boundary, grid_, "DirichletPoissonSolver::solve(boundary)");
  const int N = grid_.N;
  const int n = impl_->n;
  const double h2 = grid_.h * grid_.h;

  Eigen::VectorXd b(n * n);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      double v = -h2 * rhs(i, j);
      if (i == 1) v += boundary(0, j);
      if (i == n) v += boundary(N, j);
      if (j == 1) v += boundary(i, 0);
      if (j == n) v += boundary(i, N);
      b[(j - 1) * n + (i - 1)] = v;
    }
  }

  Eigen::VectorXd x;
  if (opts_.method == SolveMethod::DirectSparse) {
    x = impl_->ldlt.solve(b);
  } else {
    std::vector<double> in(b.data(), b.data() + b.size()), out(in.size());
    fftw_execute_r2r(impl_->plan, in.data(), out.data());
    for (int q = 0; q < n; ++q) {
      for (int p = 0; p < n; ++p) {
        out[q * n + p] /= (impl_->eigen[p] + impl_->eigen[q]);
      }
    }
    fftw_execute_r2r(impl_->plan, out.data(), in.data());
    const double scale = 1.0 / (4.0 * N * N);
    x.resize(n * n);
    for (int k = 0; k < n * n; ++k) x[k] = in[k] * scale;
  }

  const double err = backward_error(impl_->K, impl_->K_norm, x, b);
  if (!std::isfinite(err) || err > opts_.tol) {
    throw SolverError("DirichletPoissonSolver: residual " + std::to_string(err) +
                          " exceeds tolerance " + std::to_string(opts_.tol),
                      err);
  }

  ScalarField U(Layout::Nodes, N);
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      if (i == 0 || j == 0 || i == N || j == N) U(i, j) = boundary(i, j);
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) U(i, j) = x[(j - 1) * n + (i - 1)];
  }
  return U;
}

// ---------------------------------------------------------------------------
// Neumann with pin

struct NeumannPoissonSolver::Impl {
  SpMat A;
  double A_norm = 0.0;
  Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
};

namespace {

bool is_corner(NodeIndex p, int N) {
  return (p.i == 0 || p.i == N) && (p.j == 0 || p.j == N);
}

}  // namespace

NeumannPoissonSolver::NeumannPoissonSolver(const GridSpec& grid, NodeIndex pin,
                                           LinearSolveOptions opts)
    : grid_(grid), pin_(pin), opts_(opts), impl_(std::make_unique<Impl>()) {
  opts_.validate();
  const int N = grid.N;
  if (pin.i < 0 || pin.i > N || pin.j < 0 || pin.j > N) {
    throw std::invalid_argument("NeumannPoissonSolver: pin outside the grid");
  }
  replaced_ = pin;
  if (is_corner(pin, N)) replaced_ = {pin.i == 0 ? 1 : N - 1, pin.j};

  const int m = N + 1;
  auto id = [m](int i, int j) { return j * m + i; };
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(5 * m * m));
  // interior rows scaled by h^2, boundary rows by h
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      const int r = id(i, j);
      if (NodeIndex{i, j} == replaced_) {
        trip.emplace_back(r, id(pin.i, pin.j), 1.0);
      } else if (i > 0 && i < N && j > 0 && j < N) {
        trip.emplace_back(r, r, -4.0);
        trip.emplace_back(r, id(i - 1, j), 1.0);
        trip.emplace_back(r, id(i + 1, j), 1.0);
        trip.emplace_back(r, id(i, j - 1), 1.0);
        trip.emplace_back(r, id(i, j + 1), 1.0);
      } else if (i == 0) {
        trip.emplace_back(r, id(1, j), 1.0);
        trip.emplace_back(r, r, -1.0);
      } else if (i == N) {
        trip.emplace_back(r, r, 1.0);
        trip.emplace_back(r, id(N - 1, j), -1.0);
      } else if (j == 0) {
        trip.emplace_back(r, id(i, 1), 1.0);
        trip.emplace_back(r, r, -1.0);
      } else {
        trip.emplace_back(r, r, 1.0);
        trip.emplace_back(r, id(i, N - 1), -1.0);
      }
    }
  }
  impl_->A.resize(m * m, m * m);
  impl_->A.setFromTriplets(trip.begin(), trip.end());
  impl_->A.makeCompressed();
  impl_->A_norm = matrix_inf_norm(impl_->A);
  impl_->lu.compute(impl_->A);
  if (impl_->lu.info() != Eigen::Success) {
    throw SolverError("NeumannPoissonSolver: singular system (" + impl_->lu.lastErrorMessage() + ")",
                      0.0);
  }
}

NeumannPoissonSolver::~NeumannPoissonSolver() = default;
NeumannPoissonSolver::NeumannPoissonSolver(NeumannPoissonSolver&&) noexcept = default;
NeumannPoissonSolver& NeumannPoissonSolver::operator=(NeumannPoissonSolver&&) noexcept = default;

ScalarField NeumannPoissonSolver::solve(const ScalarField& rhs) const {
  return solve(rhs, ScalarField(Layout::Nodes, grid_.N));
}

ScalarField NeumannPoissonSolver::solve(const ScalarField& rhs, const ScalarField& wall) const {
  require_nodes(rhs, grid_, "NeumannPoissonSolver::solve");
  require_nodes(wall, grid_, "NeumannPoissonSolver::solve");
  const int N = grid_.N;
  const int m = N + 1;
  const double h2 = grid_.h * grid_.h;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m * m);
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      if (NodeIndex{i, j} == replaced_) continue;
      const bool interior = i > 0 && i < N && j > 0 && j < N;
      b[j * m + i] = interior ? h2 * rhs(i, j) : grid_.h * wall(i, j);
    }
  }
  const Eigen::VectorXd x = impl_->lu.solve(b);
  const double err = backward_error(impl_->A, impl_->A_norm, x, b);
  if (impl_->lu.info() != Eigen::Success || !std::isfinite(err) || err > opts_.tol) {
    throw SolverError("NeumannPoissonSolver: residual " + std::to_string(err) +
                          " exceeds tolerance " + std::to_string(opts_.tol),
                      err);
  }
  // constants are in the null space of every other row, so removing the
  // round-off left at the pin makes it exactly zero
  const double at_pin = x[pin_.j * m + pin_.i];
  ScalarField U(Layout::Nodes, N);
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) U(i, j) = x[j * m + i] - at_pin;
  }
  return U;
}

ScalarField solve_dirichlet(const GridSpec& grid, const ScalarField& rhs,
                            const ScalarField& boundary, LinearSolveOptions opts) {
  return DirichletPoissonSolver(grid, opts).solve(rhs, boundary);
}

ScalarField solve_neumann_pinned(const GridSpec& grid, const ScalarField& rhs, NodeIndex pin,
                                 LinearSolveOptions opts) {
  return NeumannPoissonSolver(grid, pin, opts).solve(rhs);
}

}  // namespace ibstokes
