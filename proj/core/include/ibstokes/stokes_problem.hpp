#pragma once

#include <functional>

#include "ibstokes/grid.hpp"
#include "ibstokes/kernels.hpp"

namespace ibstokes {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Stationary Stokes flow with a singular interface force,
///
///   grad p = mu Lap u + G + int_Gamma f(s) delta(x - X(s)) ds,   div u = 0,
///
/// with u prescribed on the boundary of the rectangle.
struct StokesProblem {
  GridSpec grid;
  double mu = 1.0;
  std::function<Vec2(double, double)> body_force;
  std::function<Vec2(double, double)> boundary_velocity;
  InterfaceMarkers markers;
  ForceDensity force;
  DeltaKernel kernel;
  /// Optional wall values of grad p. When set, the pressure Neumann rows use
  /// the x-component on the x = a, b walls (corners included) and the
  /// y-component on y = c, d; otherwise they are homogeneous.
  std::function<Vec2(double, double)> boundary_pressure_gradient;

  /// Throws std::invalid_argument on mu <= 0, missing evaluators or a
  /// marker/force size mismatch.
  void validate() const;
};

/// Body force sampled on a layout, one field per component.
struct SampledForce {
  ScalarField G1;
  ScalarField G2;
};

SampledForce sample_body_force(const StokesProblem& problem, Layout layout);

/// G + spread interface force on a layout.
SampledForce total_force(const StokesProblem& problem, Layout layout);

}  // namespace ibstokes
