#include "ibstokes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ibstokes/exact.hpp"

namespace ibstokes {

namespace {

double exact_component(const example::State& s, int which) {
  return which == 0 ? s.u : (which == 1 ? s.v : s.p);
}

double max_error(const GridSpec& grid, const ScalarField& f, int which) {
  double m = 0.0;
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      const Point p = layout_point(grid, f.layout(), i, j);
      m = std::max(m, std::abs(exact_component(example::exact_eval(p.x, p.y), which) - f(i, j)));
    }
  }
  return m;
}

void require_example_grid(const GridSpec& grid, const char* who) {
  const double w = example::kDomainHalfWidth;
  if (grid.a != -w || grid.b != w || grid.c != -w || grid.d != w) {
    throw std::invalid_argument(std::string(who) + ": grid must cover the example domain");
  }
}

}  // namespace

ErrorTriple error_norms(const GridSpec& grid, const ScalarField& U, const ScalarField& V,
                        const ScalarField& P, PressureReference ref) {
  const Circle circle = example::interface_circle();
  ErrorTriple e;
  const double eu = max_error(grid, U, 0);
  const double ev = max_error(grid, V, 1);
  e.err_u_inf = std::hypot(eu, ev);

  const Point pref = layout_point(grid, P.layout(), ref.i, ref.j);
  const double shift = example::exact_eval(pref.x, pref.y).p - P(ref.i, ref.j);
  const double far = std::sqrt(grid.h);
  double sum2 = 0.0;
  double far_max = 0.0;
  int far_count = 0;
  for (int j = 0; j < P.ny(); ++j) {
    for (int i = 0; i < P.nx(); ++i) {
      const Point p = layout_point(grid, P.layout(), i, j);
      const double err = example::exact_eval(p.x, p.y).p - (P(i, j) + shift);
      sum2 += err * err;
      if (dist_to_interface(p, circle) >= far) {
        far_max = std::max(far_max, std::abs(err));
        ++far_count;
      }
    }
  }
  if (far_count == 0) {
    throw std::runtime_error("error_norms: no pressure point lies sqrt(h) away from the interface");
  }
  e.err_p_l2 = std::sqrt(grid.h * grid.h * sum2);
  e.err_p_far = far_max;
  return e;
}

TruncationReport truncation_diagnostics(const GridSpec& grid, KernelKind kernel) {
  require_example_grid(grid, "truncation_diagnostics");
  const StokesProblem problem = example::make_problem(grid.N, kernel);
  const int N = grid.N;
  const double h = grid.h;

  const SampledForce G = sample_body_force(problem, Layout::Nodes);
  const SpreadFields F =
      spread_forces(grid, Layout::Nodes, problem.markers, problem.force, problem.kernel);
  const ScalarField p = sample(grid, Layout::Nodes,
                               [](double x, double y) { return example::exact_eval(x, y).p; });
  ScalarField inside(Layout::Nodes, N);
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      const Point x = layout_point(grid, Layout::Nodes, i, j);
      inside(i, j) = example::is_inside(x.x, x.y) ? 1.0 : 0.0;
    }
  }

  TruncationReport rep;
  rep.N = N;
  for (int j = 0; j <= N; ++j) {
    for (int i = 0; i <= N; ++i) {
      const bool boundary = i == 0 || j == 0 || i == N || j == N;
      if (boundary) {
        const Point x = layout_point(grid, Layout::Nodes, i, j);
        const double lap = example::pressure_laplacian(x.x, x.y);
        double diff = 0.0;
        if (i == 0) diff = (p(1, j) - p(0, j)) / h;
        else if (i == N) diff = (p(N, j) - p(N - 1, j)) / h;
        else if (j == 0) diff = (p(i, 1) - p(i, 0)) / h;
        else diff = (p(i, N) - p(i, N - 1)) / h;
        rep.boundary_max = std::max(rep.boundary_max, std::abs(lap - diff));
        ++rep.boundary_count;
        continue;
      }
      const double lap = (p(i - 1, j) + p(i + 1, j) + p(i, j - 1) + p(i, j + 1) - 4.0 * p(i, j)) / (h * h);
      const double dx = (G.G1(i + 1, j) + F.F1(i + 1, j) - G.G1(i - 1, j) - F.F1(i - 1, j)) / (2.0 * h);
      const double dy = (G.G2(i, j + 1) + F.F2(i, j + 1) - G.G2(i, j - 1) - F.F2(i, j - 1)) / (2.0 * h);
      const double T = std::abs(lap - dx - dy);

      const double side = inside(i, j);
      const bool straddled = inside(i - 1, j) != side || inside(i + 1, j) != side ||
                             inside(i, j - 1) != side || inside(i, j + 1) != side;
      const bool force_free = F.F1(i + 1, j) == 0.0 && F.F1(i - 1, j) == 0.0 &&
                              F.F2(i, j + 1) == 0.0 && F.F2(i, j - 1) == 0.0;
      if (straddled) {
        rep.irregular_max = std::max(rep.irregular_max, T);
        ++rep.irregular_count;
      } else if (force_free) {
        rep.regular_max = std::max(rep.regular_max, T);
        ++rep.regular_count;
      } else {
        rep.near_max = std::max(rep.near_max, T);
        ++rep.near_count;
      }
    }
  }
  return rep;
}

LayerSum boundary_layer_sum_check(const GridSpec& grid, const std::function<double(double, double)>& Q,
                                  double layer_width, int quadrature_points) {
  if (quadrature_points < 16) throw std::invalid_argument("boundary_layer_sum_check: too few quadrature points");
  const Circle circle = example::interface_circle();
  const int N = grid.N;
  const double h = grid.h;
  auto p = [](double x, double y) { return example::exact_eval(x, y).p; };

  LayerSum out;
  for (int j = 1; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      const Point x = layout_point(grid, Layout::Nodes, i, j);
      if (dist_to_interface(x, circle) > layer_width * h) continue;
      const Point xr = layout_point(grid, Layout::Nodes, i + 1, j);
      const Point xl = layout_point(grid, Layout::Nodes, i - 1, j);
      const double px = (p(xr.x, xr.y) - p(xl.x, xl.y)) / (2.0 * h);
      out.lhs += h * h * px * Q(x.x, x.y);
    }
  }
  const double dtheta = 2.0 * std::numbers::pi / quadrature_points;
  for (int k = 0; k < quadrature_points; ++k) {
    const double t = k * dtheta;
    const double X = circle.center.x + circle.R * std::cos(t);
    const double Y = circle.center.y + circle.R * std::sin(t);
    out.rhs += example::exact_jumps(t).p * std::cos(t) * Q(X, Y) * circle.R * dtheta;
  }
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace ibstokes
