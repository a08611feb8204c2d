#pragma once

#include <functional>
#include <optional>

#include "ibstokes/grid.hpp"
#include "ibstokes/kernels.hpp"

namespace ibstokes {

/// Error measures of one solve against the manufactured solution.
struct ErrorTriple {
  /// sqrt(|E_u|_inf^2 + |E_v|_inf^2)
  double err_u_inf = 0.0;
  /// sqrt(h^2 sum |E_p|^2)
  double err_p_l2 = 0.0;
  /// |E_p|_inf over points at distance >= sqrt(h) from the interface
  double err_p_far = 0.0;

  friend bool operator==(const ErrorTriple&, const ErrorTriple&) = default;
};

/// The discrete pressure is defined up to a constant. The numerical pressure
/// is shifted so that it matches the exact pressure at `pin` (an index into
/// the pressure field's own layout) before errors are measured.
struct PressureReference {
  int i = 0;
  int j = 0;
};

/// Compares U, V, P against the example's exact solution at each field's own
/// layout points (nodes for the three-Poisson scheme; faces and centers for
/// MAC). Throws std::runtime_error if no pressure point lies sqrt(h) away
/// from the interface.
ErrorTriple error_norms(const GridSpec& grid, const ScalarField& U, const ScalarField& V,
                        const ScalarField& P, PressureReference ref);

/// Per-class maxima of the pressure truncation error
///
///   T = Lap_h p - D^x(G1 + F1) - D^y(G2 + F2)         interior nodes
///   T = Lap p - (p(x1) - p(x0)) / h  (and mirrored)    boundary nodes
///
/// evaluated with the exact pressure. Classes: irregular (the 5-point stencil
/// straddles the interface), regular (not straddled and outside the support
/// of the spread force differences), near (the remaining interior nodes).
struct TruncationReport {
  int N = 0;
  double regular_max = 0.0;
  double irregular_max = 0.0;
  double near_max = 0.0;
  double boundary_max = 0.0;
  int regular_count = 0;
  int irregular_count = 0;
  int near_count = 0;
  int boundary_count = 0;
};

TruncationReport truncation_diagnostics(const GridSpec& grid, KernelKind kernel);

/// Boundary-layer cancellation check for the jump in p:
///
///   lhs = sum_{dist(x_ij, Gamma) <= W h} h^2 (p(x_{i+1},y_j) - p(x_{i-1},y_j)) / (2h) Q(x_ij)
///   rhs = int_Gamma [p](s) cos(theta(s)) Q(X(s)) ds
///
/// with rhs from a fine periodic trapezoid rule over `quadrature_points`.
struct LayerSum {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

LayerSum boundary_layer_sum_check(const GridSpec& grid, const std::function<double(double, double)>& Q,
                                  double layer_width = 2.0, int quadrature_points = 1 << 14);

}  // namespace ibstokes
