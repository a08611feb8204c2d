#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "ibstokes/grid.hpp"

namespace ibstokes {

enum class SolveMethod { DirectSparse, FastTransform };

struct LinearSolveOptions {
  SolveMethod method = SolveMethod::DirectSparse;
  /// Accepted normwise backward error |Ax-b| / (|A||x| + |b|), infinity norms.
  double tol = 1e-11;
  int max_iter = 1000;

  /// Throws std::invalid_argument unless 0 < tol <= 1e-6 and max_iter > 0.
  void validate() const;
};

/// Raised when a linear solve fails or misses its residual tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct NodeIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

/// Five-point Laplacian at interior nodes; boundary entries of the result are 0.
ScalarField apply_laplacian(const ScalarField& U, double h);

/// Row values of the forward-difference Neumann operator on a node field:
/// 5-point Laplacian at interior nodes and one-sided differences such as
/// (U(1,j) - U(0,j)) / h on the boundary. Corners use the x-direction
/// difference.
ScalarField apply_neumann_operator(const ScalarField& U, double h);

/// Dirichlet problem Delta_h U = rhs at interior nodes, U = boundary on the
/// boundary nodes. The factorization (or transform plan) is built once and
/// reused across solves.
class DirichletPoissonSolver {
 public:
  DirichletPoissonSolver(const GridSpec& grid, LinearSolveOptions opts = {});
  ~DirichletPoissonSolver();
  DirichletPoissonSolver(DirichletPoissonSolver&&) noexcept;
  DirichletPoissonSolver& operator=(DirichletPoissonSolver&&) noexcept;

  /// rhs and boundary are node fields; only their interior / boundary entries
  /// are read, respectively.
  ScalarField solve(const ScalarField& rhs, const ScalarField& boundary) const;

  const GridSpec& grid() const { return grid_; }

 private:
  struct Impl;
  GridSpec grid_;
  LinearSolveOptions opts_;
  std::unique_ptr<Impl> impl_;
};

/// Pressure-type problem: 5-point Laplacian at interior nodes, forward-difference
/// Neumann rows on the boundary (homogeneous unless wall data is given), and
/// U(pin) = 0 in place of one row.
///
/// A corner row only couples the corner to its x-neighbour, so when the pin is
/// a corner the pin equation replaces that neighbour's boundary row instead
/// (replacing the corner row itself leaves the remaining system singular).
class NeumannPoissonSolver {
 public:
  NeumannPoissonSolver(const GridSpec& grid, NodeIndex pin, LinearSolveOptions opts = {});
  ~NeumannPoissonSolver();
  NeumannPoissonSolver(NeumannPoissonSolver&&) noexcept;
  NeumannPoissonSolver& operator=(NeumannPoissonSolver&&) noexcept;

  /// Only the interior entries of rhs are read; boundary rows are homogeneous.
  ScalarField solve(const ScalarField& rhs) const;
  /// Boundary entries of `wall` are the targets of the one-sided rows, in the
  /// sense of apply_neumann_operator.
  ScalarField solve(const ScalarField& rhs, const ScalarField& wall) const;

  NodeIndex pin() const { return pin_; }
  /// Node whose equation was replaced by the pin.
  NodeIndex replaced_row() const { return replaced_; }
  const GridSpec& grid() const { return grid_; }

 private:
  struct Impl;
  GridSpec grid_;
  NodeIndex pin_;
  NodeIndex replaced_;
  LinearSolveOptions opts_;
  std::unique_ptr<Impl> impl_;
};

ScalarField solve_dirichlet(const GridSpec& grid, const ScalarField& rhs,
                            const ScalarField& boundary, LinearSolveOptions opts = {});

ScalarField solve_neumann_pinned(const GridSpec& grid, const ScalarField& rhs, NodeIndex pin,
                                 LinearSolveOptions opts = {});

/// Node nearest to (x, y), clamped to the grid.
NodeIndex nearest_node(const GridSpec& grid, double x, double y);

}  // namespace ibstokes
