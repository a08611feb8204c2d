#pragma once

#include "ibstokes/stokes_problem.hpp"

/// Manufactured Stokes solution with a circular interface r = 1 on
/// [-2,2]x[-2,2], mu = 1:
///
///   r <= 1:  u = y (x^2 + y^2 - 1) / 2,              v = -x (x^2 + y^2 - 1) / 2,  p =  xy/2
///   r >  1:  u = y (x^4 - y^4 + 2y^2 - 1) / 2,       v = -x^3 (x^2 + y^2 - 1),    p = -xy/2
///
/// Velocity is continuous across the circle; pressure and the normal
/// derivatives of velocity jump.
namespace ibstokes::example {

struct State {
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

/// r <= 1 (with a 1e-12 tolerance) counts as inside.
bool is_inside(double x, double y);

State eval_inside(double x, double y);
State eval_outside(double x, double y);
State exact_eval(double x, double y);

/// G = grad p - Lap u for one branch.
Vec2 body_force_inside(double x, double y);
Vec2 body_force_outside(double x, double y);
Vec2 exact_body_force(double x, double y);

/// Analytic Laplacian of the pressure; xy is harmonic, so 0 on both sides.
double pressure_laplacian(double x, double y);

/// Jumps (outside minus inside) at the interface point with normal angle
/// theta, and the force density that produces them.
struct Jumps {
  double p = 0.0;      // [p] = fhat1
  double un = 0.0;     // [du/dn]
  double vn = 0.0;     // [dv/dn]
  double fhat1 = 0.0;  // normal strength
  double fhat2 = 0.0;  // tangential strength
  double f1 = 0.0;
  double f2 = 0.0;
};

Jumps exact_jumps(double theta);

inline constexpr double kRadius = 1.0;
inline constexpr double kDomainHalfWidth = 2.0;

Circle interface_circle();

/// Wall data for the pressure Neumann rows of the three-Poisson scheme. The
/// exact pressure has dp/dn = -y/2 on x = +-2 (and mirrored), so homogeneous
/// rows leave an O(1) pressure error on this example.
enum class PressureWall { ExactGradient, Homogeneous };

/// The full problem on an N x N grid with markers spaced spacing_factor * h.
StokesProblem make_problem(int N, KernelKind kernel, double spacing_factor = 1.0,
                           PressureWall wall = PressureWall::ExactGradient);

}  // namespace ibstokes::example
