#include "ibstokes/mac.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <vector>

namespace ibstokes {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct WallData {
  // normal velocity on boundary faces, tangential velocity at the wall
  std::vector<double> u_left, u_right;   // U at x = a, x = b, per row j
  std::vector<double> v_bottom, v_top;   // V at y = c, y = d, per column i
  std::vector<double> u_bottom, u_top;   // wall u at interior x-face i, y = c / d
  std::vector<double> v_left, v_right;   // wall v at interior y-face j, x = a / b
};

WallData wall_data(const StokesProblem& problem) {
  const GridSpec& g = problem.grid;
  const int N = g.N;
  WallData w;
  w.u_left.resize(N);
  w.u_right.resize(N);
  w.v_bottom.resize(N);
  w.v_top.resize(N);
  w.u_bottom.assign(N + 1, 0.0);
  w.u_top.assign(N + 1, 0.0);
  w.v_left.assign(N + 1, 0.0);
  w.v_right.assign(N + 1, 0.0);
  for (int k = 0; k < N; ++k) {
    const double mid = (k + 0.5) * g.h;
    w.u_left[k] = problem.boundary_velocity(g.a, g.c + mid).x;
    w.u_right[k] = problem.boundary_velocity(g.b, g.c + mid).x;
    w.v_bottom[k] = problem.boundary_velocity(g.a + mid, g.c).y;
    w.v_top[k] = problem.boundary_velocity(g.a + mid, g.d).y;
  }
  for (int k = 1; k < N; ++k) {
    const double s = k * g.h;
    w.u_bottom[k] = problem.boundary_velocity(g.a + s, g.c).x;
    w.u_top[k] = problem.boundary_velocity(g.a + s, g.d).x;
    w.v_left[k] = problem.boundary_velocity(g.a, g.c + s).y;
    w.v_right[k] = problem.boundary_velocity(g.b, g.c + s).y;
  }
  return w;
}

}  // namespace

MacSystem assemble_mac_system(const StokesProblem& problem, NodeIndex pin) {
  problem.validate();
  const GridSpec& g = problem.grid;
  const int N = g.N;
  if (pin.i < 0 || pin.i >= N || pin.j < 0 || pin.j >= N) {
    throw std::invalid_argument("assemble_mac_system: pin cell outside the grid");
  }
  const double h = g.h;
  const double mu = problem.mu;

  MacSystem sys;
  sys.N = N;
  sys.pin = pin;
  sys.b = Eigen::VectorXd::Zero(sys.size());

  const SampledForce Fx = total_force(problem, Layout::XFaces);
  const SampledForce Fy = total_force(problem, Layout::YFaces);
  const WallData w = wall_data(problem);

  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(sys.size()) * 7);

  // Momentum rows are scaled by h^2 / mu:
  //   sum(neighbours) - 4 U - (h/mu)(P_right - P_left) = -(h^2/mu) F
  const double ph = h / mu;
  const double fh = h * h / mu;

  for (int j = 0; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      const int r = sys.u_id(i, j);
      double diag = -4.0;
      double rhs = -fh * Fx.G1(i, j);
      if (i - 1 == 0) rhs -= w.u_left[j]; else trip.emplace_back(r, sys.u_id(i - 1, j), 1.0);
      if (i + 1 == N) rhs -= w.u_right[j]; else trip.emplace_back(r, sys.u_id(i + 1, j), 1.0);
      if (j == 0) {
        diag -= 1.0;
        rhs -= 2.0 * w.u_bottom[i];
      } else {
        trip.emplace_back(r, sys.u_id(i, j - 1), 1.0);
      }
      if (j == N - 1) {
        diag -= 1.0;
        rhs -= 2.0 * w.u_top[i];
      } else {
        trip.emplace_back(r, sys.u_id(i, j + 1), 1.0);
      }
      trip.emplace_back(r, r, diag);
      trip.emplace_back(r, sys.p_id(i, j), -ph);
      trip.emplace_back(r, sys.p_id(i - 1, j), ph);
      sys.b[r] = rhs;
    }
  }

  for (int j = 1; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const int r = sys.v_id(i, j);
      double diag = -4.0;
      double rhs = -fh * Fy.G2(i, j);
      if (j - 1 == 0) rhs -= w.v_bottom[i]; else trip.emplace_back(r, sys.v_id(i, j - 1), 1.0);
      if (j + 1 == N) rhs -= w.v_top[i]; else trip.emplace_back(r, sys.v_id(i, j + 1), 1.0);
      if (i == 0) {
        diag -= 1.0;
        rhs -= 2.0 * w.v_left[j];
      } else {
        trip.emplace_back(r, sys.v_id(i - 1, j), 1.0);
      }
      if (i == N - 1) {
        diag -= 1.0;
        rhs -= 2.0 * w.v_right[j];
      } else {
        trip.emplace_back(r, sys.v_id(i + 1, j), 1.0);
      }
      trip.emplace_back(r, r, diag);
      trip.emplace_back(r, sys.p_id(i, j), -ph);
      trip.emplace_back(r, sys.p_id(i, j - 1), ph);
      sys.b[r] = rhs;
    }
  }

  // Divergence rows scaled by h.
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const int r = sys.p_id(i, j);
      if (i == pin.i && j == pin.j) {
        trip.emplace_back(r, r, 1.0);
        continue;
      }
      double rhs = 0.0;
      if (i + 1 == N) rhs -= w.u_right[j]; else trip.emplace_back(r, sys.u_id(i + 1, j), 1.0);
      if (i == 0) rhs += w.u_left[j]; else trip.emplace_back(r, sys.u_id(i, j), -1.0);
      if (j + 1 == N) rhs -= w.v_top[i]; else trip.emplace_back(r, sys.v_id(i, j + 1), 1.0);
      if (j == 0) rhs += w.v_bottom[i]; else trip.emplace_back(r, sys.v_id(i, j), -1.0);
      sys.b[r] = rhs;
    }
  }

  sys.A.resize(sys.size(), sys.size());
  sys.A.setFromTriplets(trip.begin(), trip.end());
  sys.A.makeCompressed();
  return sys;
}

double mac_divergence_max(const ScalarField& U, const ScalarField& V, double h) {
  const int N = U.N();
  double m = 0.0;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const double div = (U(i + 1, j) - U(i, j)) / h + (V(i, j + 1) - V(i, j)) / h;
      m = std::max(m, std::abs(div));
    }
  }
  return m;
}

MacSolution solve_mac(const StokesProblem& problem, LinearSolveOptions opts, NodeIndex pin) {
  opts.validate();
  const MacSystem sys = assemble_mac_system(problem, pin);
  const GridSpec& g = problem.grid;
  const int N = g.N;

  Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(sys.A);
  if (lu.info() != Eigen::Success) {
    throw SolverError("solve_mac: factorization failed (" + lu.lastErrorMessage() + ")", 0.0);
  }
  const Eigen::VectorXd x = lu.solve(sys.b);

  const Eigen::VectorXd r = sys.A * x - sys.b;
  double a_norm = 0.0;
  {
    Eigen::VectorXd rows = Eigen::VectorXd::Zero(sys.A.rows());
    for (int k = 0; k < sys.A.outerSize(); ++k) {
      for (SpMat::InnerIterator it(sys.A, k); it; ++it) rows[it.row()] += std::abs(it.value());
    }
    a_norm = rows.lpNorm<Eigen::Infinity>();
  }
  const double denom = a_norm * x.lpNorm<Eigen::Infinity>() + sys.b.lpNorm<Eigen::Infinity>();
  const double err = denom > 0.0 ? r.lpNorm<Eigen::Infinity>() / denom : 0.0;
  if (!std::isfinite(err) || err > opts.tol) {
    throw SolverError("solve_mac: residual " + std::to_string(err) + " exceeds tolerance " +
                          std::to_string(opts.tol),
                      err);
  }

  const WallData w = wall_data(problem);
  MacSolution sol;
  sol.pin = pin;
  sol.residual = err;
  sol.U = ScalarField(Layout::XFaces, N);
  sol.V = ScalarField(Layout::YFaces, N);
  sol.P = ScalarField(Layout::Centers, N);
  for (int j = 0; j < N; ++j) {
    sol.U(0, j) = w.u_left[j];
    sol.U(N, j) = w.u_right[j];
    for (int i = 1; i < N; ++i) sol.U(i, j) = x[sys.u_id(i, j)];
  }
  for (int i = 0; i < N; ++i) {
    sol.V(i, 0) = w.v_bottom[i];
    sol.V(i, N) = w.v_top[i];
    for (int j = 1; j < N; ++j) sol.V(i, j) = x[sys.v_id(i, j)];
  }
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) sol.P(i, j) = x[sys.p_id(i, j)];
  }
  sol.divergence_max = mac_divergence_max(sol.U, sol.V, g.h);
  return sol;
}

MomentumResidual mac_momentum_residual(const StokesProblem& problem, const MacSolution& sol) {
  const GridSpec& g = problem.grid;
  const int N = g.N;
  const double h = g.h;
  const double mu = problem.mu;
  const SampledForce Fx = total_force(problem, Layout::XFaces);
  const SampledForce Fy = total_force(problem, Layout::YFaces);
  const WallData w = wall_data(problem);
  const auto& U = sol.U;
  const auto& V = sol.V;
  const auto& P = sol.P;

  MomentumResidual out{ScalarField(Layout::XFaces, N), ScalarField(Layout::YFaces, N)};
  for (int j = 0; j < N; ++j) {
    for (int i = 1; i < N; ++i) {
      const double below = j == 0 ? 2.0 * w.u_bottom[i] - U(i, j) : U(i, j - 1);
      const double above = j == N - 1 ? 2.0 * w.u_top[i] - U(i, j) : U(i, j + 1);
      const double lap = (U(i - 1, j) + U(i + 1, j) + below + above - 4.0 * U(i, j)) / (h * h);
      out.ru(i, j) = mu * lap - (P(i, j) - P(i - 1, j)) / h + Fx.G1(i, j);
    }
  }
  for (int j = 1; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const double left = i == 0 ? 2.0 * w.v_left[j] - V(i, j) : V(i - 1, j);
      const double right = i == N - 1 ? 2.0 * w.v_right[j] - V(i, j) : V(i + 1, j);
      const double lap = (left + right + V(i, j - 1) + V(i, j + 1) - 4.0 * V(i, j)) / (h * h);
      out.rv(i, j) = mu * lap - (P(i, j) - P(i, j - 1)) / h + Fy.G2(i, j);
    }
  }
  return out;
}

double interior_pressure_identity_check(const MacSolution& solution, const StokesProblem& problem) {
  const GridSpec& g = problem.grid;
  const int N = g.N;
  const double h = g.h;
  const SampledForce Fx = total_force(problem, Layout::XFaces);
  const SampledForce Fy = total_force(problem, Layout::YFaces);
  const auto& P = solution.P;
  double worst = 0.0;
  double lap_max = 0.0;
  double div_max = 0.0;
  // 1-based cells 2..N-2 are 0-based 1..N-3
  for (int j = 1; j <= N - 3; ++j) {
    for (int i = 1; i <= N - 3; ++i) {
      const double lap =
          (P(i - 1, j) + P(i + 1, j) + P(i, j - 1) + P(i, j + 1) - 4.0 * P(i, j)) / (h * h);
      const double divF = (Fx.G1(i + 1, j) - Fx.G1(i, j)) / h + (Fy.G2(i, j + 1) - Fy.G2(i, j)) / h;
      worst = std::max(worst, std::abs(lap - divF));
      lap_max = std::max(lap_max, std::abs(lap));
      div_max = std::max(div_max, std::abs(divF));
    }
  }
  const double scale = lap_max + div_max;
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace ibstokes
