#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ibstokes {

/// Uniform square-cell grid on [a,b]x[c,d] with N cells per side.
struct GridSpec {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double d = 1.0;
  int N = 8;
  double h = 0.125;
};

/// Throws std::invalid_argument on non-square cells, inverted bounds or N < 4.
GridSpec make_grid(double a, double b, double c, double d, int N);

/// Where the unknowns of a grid function live.
///
///   Nodes   x = a + i h,        y = c + j h,        (N+1) x (N+1)
///   Centers x = a + (i+1/2) h,  y = c + (j+1/2) h,  N x N
///   XFaces  x = a + i h,        y = c + (j+1/2) h,  (N+1) x N
///   YFaces  x = a + (i+1/2) h,  y = c + j h,        N x (N+1)
///
/// All indices are zero based.
enum class Layout { Nodes, Centers, XFaces, YFaces };

std::string_view layout_name(Layout layout);
Layout layout_from_name(std::string_view name);

struct LayoutShape {
  int nx = 0;
  int ny = 0;
};

LayoutShape layout_shape(Layout layout, int N);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Physical coordinate of entry (i,j) of a field with the given layout.
Point layout_point(const GridSpec& grid, Layout layout, int i, int j);

/// Coordinate of index 0 along x and y for the layout; point i is origin + i h.
Point layout_origin(const GridSpec& grid, Layout layout);

/// A grid function. Storage is x-fastest: value(i,j) = values[j*nx + i].
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(Layout layout, int N, double fill = 0.0);

  Layout layout() const { return layout_; }
  int N() const { return N_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(int i, int j) { return values_[index(i, j)]; }
  double operator()(int i, int j) const { return values_[index(i, j)]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
           static_cast<std::size_t>(i);
  }

  bool all_finite() const;
  double max_abs() const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);

 private:
  Layout layout_ = Layout::Nodes;
  int N_ = 0;
  int nx_ = 0;
  int ny_ = 0;
  std::vector<double> values_;
};

/// Samples fn(x, y) at every point of a layout.
template <class Fn>
ScalarField sample(const GridSpec& grid, Layout layout, Fn&& fn) {
  ScalarField out(layout, grid.N);
  for (int j = 0; j < out.ny(); ++j) {
    for (int i = 0; i < out.nx(); ++i) {
      const Point p = layout_point(grid, layout, i, j);
      out(i, j) = fn(p.x, p.y);
    }
  }
  return out;
}

/// Lagrangian discretization of a closed interface. Marker k is adjacent to
/// k+1 and the last marker is adjacent to the first. The unit normal
/// (cos theta, sin theta) points from the inside to the outside.
struct InterfaceMarkers {
  std::vector<double> X;
  std::vector<double> Y;
  std::vector<double> theta;
  std::vector<double> ds;

  std::size_t size() const { return X.size(); }
  double total_length() const;
  double max_ds() const;
};

struct Circle {
  Point center;
  double R = 1.0;
};

/// N_b = ceil(2 pi R / (spacing_factor h)) equally spaced markers starting at
/// angle 0, each carrying the arclength weight 2 pi R / N_b.
InterfaceMarkers make_circle_markers(const Circle& circle, double h,
                                     double spacing_factor = 1.0);

/// Cartesian and normal/tangential force strengths per unit arclength.
struct ForceDensity {
  std::vector<double> f1;
  std::vector<double> f2;
  std::vector<double> fhat1;
  std::vector<double> fhat2;

  std::size_t size() const { return f1.size(); }
};

/// Builds a ForceDensity from normal/tangential strengths at each marker.
ForceDensity force_from_normal_tangential(const InterfaceMarkers& markers,
                                          std::span<const double> fhat1,
                                          std::span<const double> fhat2);

double dist_to_interface(Point p, const Circle& circle);

/// Distance to the closed polygon through the markers.
double dist_to_interface(Point p, const InterfaceMarkers& markers);

}  // namespace ibstokes
