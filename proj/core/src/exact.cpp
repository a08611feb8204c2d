#include "ibstokes/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace ibstokes {

void StokesProblem::validate() const {
  if (!(mu > 0.0)) throw std::invalid_argument("StokesProblem: mu must be positive");
  if (!body_force || !boundary_velocity) {
    throw std::invalid_argument("StokesProblem: body_force and boundary_velocity are required");
  }
  if (force.size() != markers.size() || force.f2.size() != markers.size()) {
    throw std::invalid_argument("StokesProblem: force and markers differ in length");
  }
}

SampledForce sample_body_force(const StokesProblem& problem, Layout layout) {
  SampledForce out{ScalarField(layout, problem.grid.N), ScalarField(layout, problem.grid.N)};
  for (int j = 0; j < out.G1.ny(); ++j) {
    for (int i = 0; i < out.G1.nx(); ++i) {
      const Point p = layout_point(problem.grid, layout, i, j);
      const Vec2 g = problem.body_force(p.x, p.y);
      if (!std::isfinite(g.x) || !std::isfinite(g.y)) {
        throw std::invalid_argument("StokesProblem: body force is not finite at a grid point");
      }
      out.G1(i, j) = g.x;
      out.G2(i, j) = g.y;
    }
  }
  return out;
}

SampledForce total_force(const StokesProblem& problem, Layout layout) {
  SampledForce out = sample_body_force(problem, layout);
  if (problem.markers.size() > 0) {
    const SpreadFields F =
        spread_forces(problem.grid, layout, problem.markers, problem.force, problem.kernel);
    out.G1 += F.F1;
    out.G2 += F.F2;
  }
  return out;
}

}  // namespace ibstokes

namespace ibstokes::example {

bool is_inside(double x, double y) { return std::hypot(x, y) <= kRadius + 1e-12; }

State eval_inside(double x, double y) {
  const double q = x * x + y * y - 1.0;
  return {0.5 * y * q, -0.5 * x * q, 0.5 * x * y};
}

State eval_outside(double x, double y) {
  const double y2 = y * y;
  return {0.5 * y * (x * x * x * x - y2 * y2 + 2.0 * y2 - 1.0), -x * x * x * (x * x + y2 - 1.0),
          -0.5 * x * y};
}

State exact_eval(double x, double y) {
  return is_inside(x, y) ? eval_inside(x, y) : eval_outside(x, y);
}

// Inside:  grad p = (y/2, x/2),  Lap u = 4y,  Lap v = -4x.
Vec2 body_force_inside(double x, double y) { return {0.5 * y - 4.0 * y, 0.5 * x + 4.0 * x}; }

// Outside: grad p = (-y/2, -x/2),
//          Lap u = 6x^2 y - 10 y^3 + 6y,  Lap v = -22x^3 - 6x y^2 + 6x.
Vec2 body_force_outside(double x, double y) {
  const double lap_u = 6.0 * x * x * y - 10.0 * y * y * y + 6.0 * y;
  const double lap_v = -22.0 * x * x * x - 6.0 * x * y * y + 6.0 * x;
  return {-0.5 * y - lap_u, -0.5 * x - lap_v};
}

Vec2 exact_body_force(double x, double y) {
  return is_inside(x, y) ? body_force_inside(x, y) : body_force_outside(x, y);
}

double pressure_laplacian(double, double) { return 0.0; }

// On r = 1 with (x,y) = (cos t, sin t):
//   [p] = -xy,  [u_n] = y (2x^2 - 1),  [v_n] = -x (2x^2 - 1),
// so the tangential strength is fhat2 = cos 2t.
Jumps exact_jumps(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double c2 = std::cos(2.0 * theta);
  Jumps J;
  J.p = -c * s;
  J.un = s * c2;
  J.vn = -c * c2;
  J.fhat1 = J.p;
  J.fhat2 = c2;
  J.f1 = J.fhat1 * c - J.fhat2 * s;
  J.f2 = J.fhat1 * s + J.fhat2 * c;
  return J;
}

Circle interface_circle() { return Circle{{0.0, 0.0}, kRadius}; }

StokesProblem make_problem(int N, KernelKind kernel, double spacing_factor, PressureWall wall) {
  StokesProblem problem;
  problem.grid = make_grid(-kDomainHalfWidth, kDomainHalfWidth, -kDomainHalfWidth,
                           kDomainHalfWidth, N);
  problem.mu = 1.0;
  problem.body_force = [](double x, double y) { return exact_body_force(x, y); };
  problem.boundary_velocity = [](double x, double y) {
    const State s = exact_eval(x, y);
    return Vec2{s.u, s.v};
  };
  problem.markers = make_circle_markers(interface_circle(), problem.grid.h, spacing_factor);
  std::vector<double> fhat1(problem.markers.size()), fhat2(problem.markers.size());
  for (std::size_t k = 0; k < problem.markers.size(); ++k) {
    const Jumps J = exact_jumps(problem.markers.theta[k]);
    fhat1[k] = J.fhat1;
    fhat2[k] = J.fhat2;
  }
  problem.force = force_from_normal_tangential(problem.markers, fhat1, fhat2);
  problem.kernel = DeltaKernel{kernel};
  if (wall == PressureWall::ExactGradient) {
    problem.boundary_pressure_gradient = [](double x, double y) { return Vec2{-0.5 * y, -0.5 * x}; };
  }
  return problem;
}

}  // namespace ibstokes::example
