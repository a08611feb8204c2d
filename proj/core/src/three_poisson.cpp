#include "ibstokes/three_poisson.hpp"

#include <algorithm>
#include <cmath>

namespace ibstokes {

ScalarField central_dx(const ScalarField& q, double h) {
  const int N = q.N();
  ScalarField out(Layout::Nodes, N);
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) out(i, j) = (q(i + 1, j) - q(i - 1, j)) / (2.0 * h);
  }
  return out;
}

ScalarField central_dy(const ScalarField& q, double h) {
  const int N = q.N();
  ScalarField out(Layout::Nodes, N);
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) out(i, j) = (q(i, j + 1) - q(i, j - 1)) / (2.0 * h);
  }
  return out;
}

ScalarField discrete_divergence_node(const ScalarField& U, const ScalarField& V, double h) {
  ScalarField div = central_dx(U, h);
  div += central_dy(V, h);
  return div;
}

ScalarField assemble_pressure_rhs(const StokesProblem& problem) {
  problem.validate();
  const SampledForce F = total_force(problem, Layout::Nodes);
  ScalarField rhs = central_dx(F.G1, problem.grid.h);
  rhs += central_dy(F.G2, problem.grid.h);
  return rhs;
}

ScalarField pressure_wall_rows(const StokesProblem& problem) {
  const GridSpec& grid = problem.grid;
  const int N = grid.N;
  ScalarField wall(Layout::Nodes, N);
  if (!problem.boundary_pressure_gradient) return wall;
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      const bool xwall = i == 0 || i == N;
      if (!xwall && j != 0 && j != N) continue;
      const Point p = layout_point(grid, Layout::Nodes, i, j);
      const Vec2 g = problem.boundary_pressure_gradient(p.x, p.y);
      wall(i, j) = xwall ? g.x : g.y;
    }
  }
  return wall;
}

ThreePoissonSolution solve_three_poisson(const StokesProblem& problem, LinearSolveOptions opts) {
  problem.validate();
  const GridSpec& grid = problem.grid;
  const double h = grid.h;
  const int N = grid.N;

  const SampledForce F = total_force(problem, Layout::Nodes);
  ScalarField p_rhs = central_dx(F.G1, h);
  p_rhs += central_dy(F.G2, h);

  ThreePoissonSolution sol;
  sol.pressure_pin = nearest_node(grid, grid.a, grid.c);
  sol.P = NeumannPoissonSolver(grid, sol.pressure_pin, opts).solve(p_rhs, pressure_wall_rows(problem));

  ScalarField u_rhs = central_dx(sol.P, h);
  ScalarField v_rhs = central_dy(sol.P, h);
  u_rhs -= F.G1;
  v_rhs -= F.G2;
  u_rhs *= 1.0 / problem.mu;
  v_rhs *= 1.0 / problem.mu;

  ScalarField u_bc(Layout::Nodes, N), v_bc(Layout::Nodes, N);
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      if (i != 0 && j != 0 && i != N && j != N) continue;
      const Point p = layout_point(grid, Layout::Nodes, i, j);
      const Vec2 w = problem.boundary_velocity(p.x, p.y);
      u_bc(i, j) = w.x;
      v_bc(i, j) = w.y;
    }
  }

  const DirichletPoissonSolver velocity(grid, opts);
  sol.U = velocity.solve(u_rhs, u_bc);
  sol.V = velocity.solve(v_rhs, v_bc);
  sol.divergence_max = discrete_divergence_node(sol.U, sol.V, h).max_abs();
  return sol;
}

}  // namespace ibstokes
