#pragma once

#include <Eigen/Sparse>

#include "ibstokes/poisson.hpp"
#include "ibstokes/stokes_problem.hpp"

namespace ibstokes {

/// Staggered (marker-and-cell) discretization:
///
///   mu Lap_h U - (P(i,j) - P(i-1,j)) / h = -(G1 + F1)   at interior x-faces
///   mu Lap_h V - (P(i,j) - P(i,j-1)) / h = -(G2 + F2)   at interior y-faces
///   (U(i+1,j) - U(i,j)) / h + (V(i,j+1) - V(i,j)) / h = 0   at every cell
///
/// Boundary-normal face velocities are data. The tangential velocity uses a
/// reflected ghost u_ghost = 2 u_wall - u_interior. The divergence row of the
/// pin cell is replaced by P(pin) = 0.
struct MacSystem {
  Eigen::SparseMatrix<double> A;
  Eigen::VectorXd b;
  int N = 0;
  /// Cell whose divergence row holds the pressure pin.
  NodeIndex pin;

  int u_count() const { return (N - 1) * N; }
  int v_count() const { return N * (N - 1); }
  int p_count() const { return N * N; }
  int size() const { return u_count() + v_count() + p_count(); }

  /// Unknown numbering: U(i,j) for i = 1..N-1, then V(i,j) for j = 1..N-1,
  /// then P(i,j) over all cells.
  int u_id(int i, int j) const { return j * (N - 1) + (i - 1); }
  int v_id(int i, int j) const { return u_count() + (j - 1) * N + i; }
  int p_id(int i, int j) const { return u_count() + v_count() + j * N + i; }
};

struct MacSolution {
  ScalarField U;  // XFaces, boundary faces filled from data
  ScalarField V;  // YFaces
  ScalarField P;  // Centers
  NodeIndex pin;
  double divergence_max = 0.0;
  /// Normwise backward error of the saddle solve.
  double residual = 0.0;
};

MacSystem assemble_mac_system(const StokesProblem& problem, NodeIndex pin = {0, 0});

MacSolution solve_mac(const StokesProblem& problem, LinearSolveOptions opts = {},
                      NodeIndex pin = {0, 0});

/// max over cells of |(U(i+1,j) - U(i,j)) / h + (V(i,j+1) - V(i,j)) / h|.
double mac_divergence_max(const ScalarField& U, const ScalarField& V, double h);

/// Residuals of the momentum equations at every interior face, one field per
/// component (boundary faces 0).
struct MomentumResidual {
  ScalarField ru;
  ScalarField rv;
};
MomentumResidual mac_momentum_residual(const StokesProblem& problem, const MacSolution& sol);

/// Max over cells 1-based i,j in [2, N-2] of |Lap_h P - div_h F| with F the
/// face forces (G plus spread), divided by max|Lap_h P| + max|div_h F| over the
/// same cells so it is comparable with a normwise solver tolerance. Zero for an
/// exact solve, since the identity is a combination of solved momentum and
/// divergence rows.
double interior_pressure_identity_check(const MacSolution& solution, const StokesProblem& problem);

}  // namespace ibstokes
