#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ibstokes/grid.hpp"

namespace ibstokes {

/// Discrete delta functions, one-dimensional factors of a tensor-product
/// kernel delta_h(x) delta_h(y).
///
///   Hat     (1 - |r|/h) / h               on |r| <= h      W = 1
///   Cosine  (1 + cos(pi r / (2h))) / (4h) on |r| <= 2h     W = 2
///   Delta1  1 / h                         on -h/2 <= r < h/2  W = 1/2
///
/// Delta1 uses a half-open support so that exactly one grid point receives
/// the mass for every shift, including r = h/2.
enum class KernelKind { Hat, Cosine, Delta1 };

struct DeltaKernel {
  KernelKind kind = KernelKind::Cosine;

  /// Support half-width in units of h.
  double width() const;
};

std::string_view kernel_name(KernelKind kind);

/// Parses "hat" | "cosine" | "delta1"; throws std::invalid_argument otherwise.
KernelKind kernel_from_name(std::string_view name);

/// Comma separated list of the accepted kernel names.
std::string_view kernel_names();

/// One-dimensional kernel value at offset r (units 1/length).
double eval_kernel(KernelKind kind, double r, double h);

/// Grid indices i in [0, n) with x_i = origin + i h that lie in the support of
/// delta_h(x_i - X), paired with h * delta_h(x_i - X). Offsets are formed in
/// index space so the weights of one shift sum to one up to round-off.
std::vector<std::pair<int, double>> kernel_stencil_1d(KernelKind kind, double X, double origin,
                                                      double h, int n);

struct SpreadFields {
  ScalarField F1;
  ScalarField F2;
};

/// F(p) = sum_k f_k delta_h(p_x - X_k) delta_h(p_y - Y_k) ds_k on every point
/// of the target layout. Support that falls outside the layout is dropped.
SpreadFields spread_forces(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                           std::span<const double> f1, std::span<const double> f2,
                           DeltaKernel kernel);

SpreadFields spread_forces(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                           const ForceDensity& force, DeltaKernel kernel);

/// Scalar spreading of one strength per marker.
ScalarField spread_scalar(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                          std::span<const double> strength, DeltaKernel kernel);

/// value_k = h^2 sum_p field(p) delta_h(p_x - X_k) delta_h(p_y - Y_k).
std::vector<double> interpolate(const GridSpec& grid, const ScalarField& field,
                                const InterfaceMarkers& markers, DeltaKernel kernel);

}  // namespace ibstokes
