#include <gtest/gtest.h>

#include <cmath>

#include "ibstokes/exact.hpp"
#include "ibstokes/mac.hpp"
#include "ibstokes/three_poisson.hpp"

using namespace ibstokes;

namespace {

StokesProblem quiet_problem(int N) {
  StokesProblem pb;
  pb.grid = make_grid(-2, 2, -2, 2, N);
  pb.body_force = [](double, double) { return Vec2{}; };
  pb.boundary_velocity = [](double, double) { return Vec2{}; };
  return pb;
}

}  // namespace

TEST(Mac, SystemDimensions) {
  const auto sys = assemble_mac_system(quiet_problem(4));
  EXPECT_EQ(sys.size(), 3 * 4 + 4 * 3 + 16);
  EXPECT_EQ(sys.A.rows(), 40);
  EXPECT_EQ(sys.A.cols(), 40);
  EXPECT_EQ(sys.u_id(1, 0), 0);
  EXPECT_EQ(sys.v_id(0, 1), 12);
  EXPECT_EQ(sys.p_id(0, 0), 24);
  EXPECT_EQ(sys.p_id(3, 3), 39);
}

TEST(Mac, DivergenceRowsSumToZero) {
  const auto pb = example::make_problem(8, KernelKind::Cosine);
  const auto sys = assemble_mac_system(pb);
  Eigen::SparseMatrix<double, Eigen::RowMajor> R = sys.A;
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) {
      const int row = sys.p_id(i, j);
      if (i == sys.pin.i && j == sys.pin.j) continue;
      // interior cells couple four faces with weights summing to zero
      if (i > 0 && i < 7 && j > 0 && j < 7) {
        double s = 0.0;
        int nnz = 0;
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(R, row); it; ++it) {
          s += it.value();
          ++nnz;
        }
        EXPECT_NEAR(s, 0.0, 1e-12);
        EXPECT_EQ(nnz, 4);
      }
    }
  }
}

TEST(Mac, ZeroDataGivesZero) {
  const auto s = solve_mac(quiet_problem(16));
  EXPECT_EQ(s.U.max_abs(), 0.0);
  EXPECT_EQ(s.V.max_abs(), 0.0);
  EXPECT_EQ(s.P.max_abs(), 0.0);
}

TEST(Mac, SolutionLayouts) {
  const auto s = solve_mac(example::make_problem(16, KernelKind::Hat));
  EXPECT_EQ(s.U.layout(), Layout::XFaces);
  EXPECT_EQ(s.V.layout(), Layout::YFaces);
  EXPECT_EQ(s.P.layout(), Layout::Centers);
  EXPECT_EQ(s.P(0, 0), 0.0);
  EXPECT_TRUE(s.U.all_finite());
  EXPECT_LT(s.residual, 1e-11);
}

TEST(Mac, DiscretelyDivergenceFree) {
  for (int N : {16, 32, 64}) {
    for (KernelKind k : {KernelKind::Hat, KernelKind::Cosine, KernelKind::Delta1}) {
      const auto pb = example::make_problem(N, k);
      const auto s = solve_mac(pb);
      EXPECT_LE(s.divergence_max, 1e-9);
      EXPECT_NEAR(mac_divergence_max(s.U, s.V, pb.grid.h), s.divergence_max, 1e-15);
    }
  }
}

TEST(Mac, MomentumResidualVanishes) {
  const auto pb = example::make_problem(32, KernelKind::Cosine);
  const auto s = solve_mac(pb);
  const auto r = mac_momentum_residual(pb, s);
  EXPECT_LT(r.ru.max_abs(), 1e-8);
  EXPECT_LT(r.rv.max_abs(), 1e-8);
}

TEST(Mac, PinOnlyShiftsPressure) {
  const auto pb = example::make_problem(16, KernelKind::Cosine);
  const auto a = solve_mac(pb, {}, {0, 0});
  const auto b = solve_mac(pb, {}, {7, 9});
  EXPECT_EQ(b.P(7, 9), 0.0);
  const double shift = a.P(7, 9);
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) EXPECT_NEAR(a.P(i, j) - shift, b.P(i, j), 1e-9);
  }
  for (std::size_t k = 0; k < a.U.size(); ++k) EXPECT_NEAR(a.U.values()[k], b.U.values()[k], 1e-10);
  for (std::size_t k = 0; k < a.V.size(); ++k) EXPECT_NEAR(a.V.values()[k], b.V.values()[k], 1e-10);
}

TEST(Mac, BadPinThrows) {
  EXPECT_THROW(assemble_mac_system(quiet_problem(8), {8, 0}), std::invalid_argument);
  EXPECT_THROW(assemble_mac_system(quiet_problem(8), {0, -1}), std::invalid_argument);
}

TEST(Mac, InteriorPressureIdentity) {
  for (int N : {16, 32}) {
    const auto pb = example::make_problem(N, KernelKind::Cosine);
    const auto s = solve_mac(pb);
    EXPECT_LE(interior_pressure_identity_check(s, pb), 1e-9) << "N=" << N;
  }
}

TEST(Mac, LinearFlowIsReproduced) {
  // u = (y, x), p = 0, G = 0: the stencil reproduces linear velocity exactly.
  auto pb = quiet_problem(16);
  pb.boundary_velocity = [](double x, double y) { return Vec2{y, x}; };
  const auto s = solve_mac(pb);
  for (int j = 0; j < s.U.ny(); ++j) {
    for (int i = 0; i < s.U.nx(); ++i) {
      EXPECT_NEAR(s.U(i, j), layout_point(pb.grid, Layout::XFaces, i, j).y, 1e-10);
    }
  }
  EXPECT_LT(s.P.max_abs(), 1e-9);
}

TEST(Mac, VelocityErrorComparableToThreePoisson) {
  const auto pb = example::make_problem(64, KernelKind::Cosine);
  const auto m = solve_mac(pb);
  double err = 0.0;
  for (int j = 0; j < m.U.ny(); ++j) {
    for (int i = 0; i < m.U.nx(); ++i) {
      const Point p = layout_point(pb.grid, Layout::XFaces, i, j);
      err = std::max(err, std::abs(m.U(i, j) - example::exact_eval(p.x, p.y).u));
    }
  }
  EXPECT_LT(err, 0.05);
  EXPECT_GT(err, 1e-4);
}
