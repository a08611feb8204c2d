#pragma once

#include "ibstokes/poisson.hpp"
#include "ibstokes/stokes_problem.hpp"

namespace ibstokes {

/// Node-centered solution of the three-Poisson-equation scheme.
struct ThreePoissonSolution {
  ScalarField U;
  ScalarField V;
  ScalarField P;
  NodeIndex pressure_pin;
  /// max |div_h (U,V)| at interior nodes (central differences).
  double divergence_max = 0.0;
};

/// rhs(i,j) = D^x(G1 + F1) + D^y(G2 + F2) at interior nodes, with central
/// differences and F spread onto the nodes.
ScalarField assemble_pressure_rhs(const StokesProblem& problem);

/// Targets of the pressure Neumann rows: zero, or the wall pressure gradient
/// when the problem supplies one.
ScalarField pressure_wall_rows(const StokesProblem& problem);

/// Pressure from the pinned forward-difference Neumann problem (pin at the
/// node nearest (a,c)), then
///
///   mu Lap_h U = D^x P - F1 - G1,   mu Lap_h V = D^y P - F2 - G2
///
/// at all interior nodes with the prescribed boundary velocity.
ThreePoissonSolution solve_three_poisson(const StokesProblem& problem,
                                         LinearSolveOptions opts = {});

/// Central-difference divergence at interior nodes (boundary entries are 0).
ScalarField discrete_divergence_node(const ScalarField& U, const ScalarField& V, double h);

/// Central differences (q(i+1,j) - q(i-1,j)) / 2h and (q(i,j+1) - q(i,j-1)) / 2h
/// at interior nodes.
ScalarField central_dx(const ScalarField& q, double h);
ScalarField central_dy(const ScalarField& q, double h);

}  // namespace ibstokes
