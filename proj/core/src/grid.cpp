#include "ibstokes/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ibstokes {

GridSpec make_grid(double a, double b, double c, double d, int N) {
  if (!(b > a) || !(d > c)) {
    throw std::invalid_argument("make_grid: domain bounds must satisfy b > a and d > c");
  }
  if (N < 4) {
    throw std::invalid_argument("make_grid: N must be at least 4, got " + std::to_string(N));
  }
  const double hx = (b - a) / N;
  const double hy = (d - c) / N;
  if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy)) {
    throw std::invalid_argument("make_grid: non-square cells (hx=" + std::to_string(hx) +
                                ", hy=" + std::to_string(hy) + ")");
  }
  return GridSpec{a, b, c, d, N, hx};
}

std::string_view layout_name(Layout layout) {
  switch (layout) {
    case Layout::Nodes: return "nodes";
    case Layout::Centers: return "centers";
    case Layout::XFaces: return "xfaces";
    case Layout::YFaces: return "yfaces";
  }
  return "unknown";
}

Layout layout_from_name(std::string_view name) {
  if (name == "nodes") return Layout::Nodes;
  if (name == "centers") return Layout::Centers;
  if (name == "xfaces") return Layout::XFaces;
  if (name == "yfaces") return Layout::YFaces;
  throw std::invalid_argument("unknown layout '" + std::string(name) + "'");
}

LayoutShape layout_shape(Layout layout, int N) {
  switch (layout) {
    case Layout::Nodes: return {N + 1, N + 1};
    case Layout::Centers: return {N, N};
    case Layout::XFaces: return {N + 1, N};
    case Layout::YFaces: return {N, N + 1};
  }
  return {};
}

Point layout_origin(const GridSpec& grid, Layout layout) {
  const double half = 0.5 * grid.h;
  switch (layout) {
    case Layout::Nodes: return {grid.a, grid.c};
    case Layout::Centers: return {grid.a + half, grid.c + half};
    case Layout::XFaces: return {grid.a, grid.c + half};
    case Layout::YFaces: return {grid.a + half, grid.c};
  }
  return {};
}

Point layout_point(const GridSpec& grid, Layout layout, int i, int j) {
  const Point o = layout_origin(grid, layout);
  return {o.x + i * grid.h, o.y + j * grid.h};
}

ScalarField::ScalarField(Layout layout, int N, double fill) : layout_(layout), N_(N) {
  const LayoutShape s = layout_shape(layout, N);
  nx_ = s.nx;
  ny_ = s.ny;
  values_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), fill);
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

namespace {
void require_same_shape(const ScalarField& lhs, const ScalarField& rhs) {
  if (lhs.layout() != rhs.layout() || lhs.N() != rhs.N()) {
    throw std::invalid_argument("ScalarField: layout or size mismatch");
  }
}
}  // namespace

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

double InterfaceMarkers::total_length() const {
  double sum = 0.0;
  for (double w : ds) sum += w;
  return sum;
}

double InterfaceMarkers::max_ds() const {
  double m = 0.0;
  for (double w : ds) m = std::max(m, w);
  return m;
}

InterfaceMarkers make_circle_markers(const Circle& circle, double h, double spacing_factor) {
  if (!(circle.R > 0.0)) throw std::invalid_argument("make_circle_markers: R must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("make_circle_markers: h must be positive");
  if (!(spacing_factor > 0.0) || spacing_factor > 2.0) {
    throw std::invalid_argument("make_circle_markers: spacing_factor must lie in (0, 2]");
  }
  const double length = 2.0 * std::numbers::pi * circle.R;
  const auto count = static_cast<std::size_t>(std::ceil(length / (spacing_factor * h)));

  InterfaceMarkers m;
  m.X.resize(count);
  m.Y.resize(count);
  m.theta.resize(count);
  m.ds.assign(count, length / static_cast<double>(count));
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    m.theta[k] = t;
    m.X[k] = circle.center.x + circle.R * std::cos(t);
    m.Y[k] = circle.center.y + circle.R * std::sin(t);
  }
  return m;
}

ForceDensity force_from_normal_tangential(const InterfaceMarkers& markers,
                                          std::span<const double> fhat1,
                                          std::span<const double> fhat2) {
  const std::size_t n = markers.size();
  if (fhat1.size() != n || fhat2.size() != n) {
    throw std::invalid_argument("force_from_normal_tangential: size mismatch with markers");
  }
  ForceDensity f;
  f.fhat1.assign(fhat1.begin(), fhat1.end());
  f.fhat2.assign(fhat2.begin(), fhat2.end());
  f.f1.resize(n);
  f.f2.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double cs = std::cos(markers.theta[k]);
    const double sn = std::sin(markers.theta[k]);
    f.f1[k] = fhat1[k] * cs - fhat2[k] * sn;
    f.f2[k] = fhat1[k] * sn + fhat2[k] * cs;
  }
  return f;
}

double dist_to_interface(Point p, const Circle& circle) {
  return std::abs(std::hypot(p.x - circle.center.x, p.y - circle.center.y) - circle.R);
}

double dist_to_interface(Point p, const InterfaceMarkers& markers) {
  const std::size_t n = markers.size();
  if (n == 0) throw std::invalid_argument("dist_to_interface: no markers");
  double best = std::hypot(p.x - markers.X[0], p.y - markers.Y[0]);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k1 = (k + 1) % n;
    const double ax = markers.X[k], ay = markers.Y[k];
    const double ex = markers.X[k1] - ax, ey = markers.Y[k1] - ay;
    const double len2 = ex * ex + ey * ey;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - ax) * ex + (p.y - ay) * ey) / len2, 0.0, 1.0);
    best = std::min(best, std::hypot(p.x - (ax + t * ex), p.y - (ay + t * ey)));
  }
  return best;
}

}  // namespace ibstokes
