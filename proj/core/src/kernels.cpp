#include "ibstokes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ibstokes {

double DeltaKernel::width() const {
  switch (kind) {
    case KernelKind::Hat: return 1.0;
    case KernelKind::Cosine: return 2.0;
    case KernelKind::Delta1: return 0.5;
  }
  return 0.0;
}

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Hat: return "hat";
    case KernelKind::Cosine: return "cosine";
    case KernelKind::Delta1: return "delta1";
  }
  return "unknown";
}

std::string_view kernel_names() { return "hat, cosine, delta1"; }

KernelKind kernel_from_name(std::string_view name) {
  if (name == "hat") return KernelKind::Hat;
  if (name == "cosine") return KernelKind::Cosine;
  if (name == "delta1") return KernelKind::Delta1;
  throw std::invalid_argument("unknown kernel '" + std::string(name) +
                              "' (valid: " + std::string(kernel_names()) + ")");
}

namespace {

// Kernel as a function of the offset measured in cells, s = r / h, scaled by h.
double unit_kernel(KernelKind kind, double s) {
  const double a = std::abs(s);
  switch (kind) {
    case KernelKind::Hat:
      return a < 1.0 ? 1.0 - a : 0.0;
    case KernelKind::Cosine:
      return a < 2.0 ? 0.25 * (1.0 + std::cos(0.5 * std::numbers::pi * s)) : 0.0;
    case KernelKind::Delta1:
      return (s >= -0.5 && s < 0.5) ? 1.0 : 0.0;
  }
  return 0.0;
}

}  // namespace

double eval_kernel(KernelKind kind, double r, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("eval_kernel: h must be positive");
  return unit_kernel(kind, r / h) / h;
}

std::vector<std::pair<int, double>> kernel_stencil_1d(KernelKind kind, double X, double origin,
                                                      double h, int n) {
  std::vector<std::pair<int, double>> out;
  const double t = (X - origin) / h;
  if (kind == KernelKind::Delta1) {
    // the single i with -1/2 <= i - t < 1/2
    const int i = static_cast<int>(std::ceil(t - 0.5));
    if (i >= 0 && i < n) out.emplace_back(i, 1.0);
    return out;
  }
  const double w = DeltaKernel{kind}.width();
  const int lo = std::max(0, static_cast<int>(std::floor(t - w)));
  const int hi = std::min(n - 1, static_cast<int>(std::ceil(t + w)));
  for (int i = lo; i <= hi; ++i) {
    const double v = unit_kernel(kind, static_cast<double>(i) - t);
    if (v != 0.0) out.emplace_back(i, v);
  }
  return out;
}

ScalarField spread_scalar(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                          std::span<const double> strength, DeltaKernel kernel) {
  if (strength.size() != markers.size()) {
    throw std::invalid_argument("spread_scalar: strength and markers differ in length");
  }
  ScalarField out(target, grid.N);
  const Point o = layout_origin(grid, target);
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  for (std::size_t k = 0; k < markers.size(); ++k) {
    const auto sx = kernel_stencil_1d(kernel.kind, markers.X[k], o.x, grid.h, out.nx());
    const auto sy = kernel_stencil_1d(kernel.kind, markers.Y[k], o.y, grid.h, out.ny());
    const double q = strength[k] * markers.ds[k] * inv_h2;
    for (const auto& [j, wy] : sy) {
      for (const auto& [i, wx] : sx) out(i, j) += q * wx * wy;
    }
  }
  return out;
}

SpreadFields spread_forces(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                           std::span<const double> f1, std::span<const double> f2,
                           DeltaKernel kernel) {
  if (f1.size() != markers.size() || f2.size() != markers.size()) {
    throw std::invalid_argument("spread_forces: force and markers differ in length");
  }
  return {spread_scalar(grid, target, markers, f1, kernel),
          spread_scalar(grid, target, markers, f2, kernel)};
}

SpreadFields spread_forces(const GridSpec& grid, Layout target, const InterfaceMarkers& markers,
                           const ForceDensity& force, DeltaKernel kernel) {
  return spread_forces(grid, target, markers, force.f1, force.f2, kernel);
}

std::vector<double> interpolate(const GridSpec& grid, const ScalarField& field,
                                const InterfaceMarkers& markers, DeltaKernel kernel) {
  std::vector<double> out(markers.size(), 0.0);
  const Point o = layout_origin(grid, field.layout());
  for (std::size_t k = 0; k < markers.size(); ++k) {
    const auto sx = kernel_stencil_1d(kernel.kind, markers.X[k], o.x, grid.h, field.nx());
    const auto sy = kernel_stencil_1d(kernel.kind, markers.Y[k], o.y, grid.h, field.ny());
    double acc = 0.0;
    for (const auto& [j, wy] : sy) {
      for (const auto& [i, wx] : sx) acc += field(i, j) * wx * wy;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace ibstokes
