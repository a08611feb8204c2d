#pragma once

#include "ibstokes/poisson.hpp"

namespace ibstokes {

enum class GreenBc { Dirichlet, Neumann };

/// Response of the bounded-lattice Laplacian to the impulse e_lm / h^2.
struct DiscreteGreen {
  GreenBc bc = GreenBc::Dirichlet;
  NodeIndex center;
  /// Only meaningful for Neumann: the pinned node (value 0).
  NodeIndex pin;
  ScalarField field;
};

/// Homogeneous Dirichlet rows on the boundary; center must be interior.
DiscreteGreen dirichlet_green(const GridSpec& grid, NodeIndex center, LinearSolveOptions opts = {});

/// Forward-difference homogeneous Neumann rows with the value at node (0,0)
/// pinned to zero. The center must be interior and not adjacent to the pin.
DiscreteGreen neumann_green(const GridSpec& grid, NodeIndex center, LinearSolveOptions opts = {});

/// Max deviation from the defining identity: interior rows equal
/// e_lm / h^2, plus boundary rows (zero values for Dirichlet, zero one-sided
/// differences for Neumann, except the row replaced by the pin).
double green_identity_residual(const GridSpec& grid, const DiscreteGreen& green);

/// Constants that make the decay envelopes hold on the sampled nodes:
///
///   G(x)          <= 1/4 + (1/16) log(d^2 + h^2) + C0 h
///   |grad_h G(x)| <= C1 / (d + h) + C2 h
///
/// with d = |x - x_lm|. C0 and C2 are clamped at zero. C1 is fitted on nodes
/// at distance >= boundary_margin from the boundary; C2 absorbs the rest.
struct DecayReport {
  double C0 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  int samples = 0;
};

DecayReport verify_decay(const GridSpec& grid, const DiscreteGreen& green,
                         double boundary_margin = 0.25);

}  // namespace ibstokes
