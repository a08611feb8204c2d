#include "ibstokes/green.hpp"

#include <algorithm>
#include <cmath>

namespace ibstokes {

namespace {

void require_interior(const GridSpec& grid, NodeIndex c, const char* who) {
  if (c.i < 1 || c.i > grid.N - 1 || c.j < 1 || c.j > grid.N - 1) {
    throw std::invalid_argument(std::string(who) + ": center must be an interior node");
  }
}

ScalarField impulse(const GridSpec& grid, NodeIndex c) {
  ScalarField e(Layout::Nodes, grid.N);
  e(c.i, c.j) = 1.0 / (grid.h * grid.h);
  return e;
}

}  // namespace

DiscreteGreen dirichlet_green(const GridSpec& grid, NodeIndex center, LinearSolveOptions opts) {
  require_interior(grid, center, "dirichlet_green");
  DiscreteGreen g;
  g.bc = GreenBc::Dirichlet;
  g.center = center;
  g.field = solve_dirichlet(grid, impulse(grid, center), ScalarField(Layout::Nodes, grid.N), opts);
  return g;
}

DiscreteGreen neumann_green(const GridSpec& grid, NodeIndex center, LinearSolveOptions opts) {
  require_interior(grid, center, "neumann_green");
  if (center.i <= 1 && center.j <= 1) {
    throw std::invalid_argument("neumann_green: center must not touch the pinned corner");
  }
  DiscreteGreen g;
  g.bc = GreenBc::Neumann;
  g.center = center;
  g.pin = {0, 0};
  g.field = NeumannPoissonSolver(grid, g.pin, opts).solve(impulse(grid, center));
  return g;
}

double green_identity_residual(const GridSpec& grid, const DiscreteGreen& green) {
  const int N = grid.N;
  const ScalarField& G = green.field;
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  double worst = 0.0;

  const ScalarField rows = green.bc == GreenBc::Dirichlet ? apply_laplacian(G, grid.h)
                                                          : apply_neumann_operator(G, grid.h);
  NodeIndex replaced{-1, -1};
  if (green.bc == GreenBc::Neumann) {
    replaced = {green.pin.i == 0 ? 1 : N - 1, green.pin.j};
    worst = std::abs(G(green.pin.i, green.pin.j));
  }
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      if (NodeIndex{i, j} == replaced) continue;
      const bool boundary = i == 0 || j == 0 || i == N || j == N;
      double r = 0.0;
      if (boundary) {
        r = green.bc == GreenBc::Dirichlet ? G(i, j) : rows(i, j);
      } else {
        const double target = (NodeIndex{i, j} == green.center) ? inv_h2 : 0.0;
        r = rows(i, j) - target;
      }
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

DecayReport verify_decay(const GridSpec& grid, const DiscreteGreen& green, double boundary_margin) {
  const int N = grid.N;
  const double h = grid.h;
  const ScalarField& G = green.field;
  const Point xc = layout_point(grid, Layout::Nodes, green.center.i, green.center.j);

  DecayReport rep;
  double c0 = 0.0;
  double c1 = 0.0;
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      const Point x = layout_point(grid, Layout::Nodes, i, j);
      const double d = std::hypot(x.x - xc.x, x.y - xc.y);
      const double envelope = 0.25 + std::log(d * d + h * h) / 16.0;
      c0 = std::max(c0, (G(i, j) - envelope) / h);

      const double wall = std::min({x.x - grid.a, grid.b - x.x, x.y - grid.c, grid.d - x.y});
      if (wall < boundary_margin) continue;
      const double gx = (G(i + 1, j) - G(i - 1, j)) / (2.0 * h);
      const double gy = (G(i, j + 1) - G(i, j - 1)) / (2.0 * h);
      c1 = std::max(c1, std::hypot(gx, gy) * (d + h));
      ++rep.samples;
    }
  }
  double c2 = 0.0;
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      const Point x = layout_point(grid, Layout::Nodes, i, j);
      const double d = std::hypot(x.x - xc.x, x.y - xc.y);
      const double gx = (G(i + 1, j) - G(i - 1, j)) / (2.0 * h);
      const double gy = (G(i, j + 1) - G(i, j - 1)) / (2.0 * h);
      c2 = std::max(c2, (std::hypot(gx, gy) - c1 / (d + h)) / h);
    }
  }
  rep.C0 = c0;
  rep.C1 = c1;
  rep.C2 = c2;
  return rep;
}

}  // namespace ibstokes
