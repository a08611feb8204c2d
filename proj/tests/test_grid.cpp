#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ibstokes/field_io.hpp"
#include "ibstokes/grid.hpp"

using namespace ibstokes;

TEST(Grid, SpacingFromBounds) {
  EXPECT_DOUBLE_EQ(make_grid(-2, 2, -2, 2, 4).h, 1.0);
  EXPECT_DOUBLE_EQ(make_grid(-2, 2, -2, 2, 64).h, 0.0625);
}

TEST(Grid, RejectsBadGrids) {
  EXPECT_THROW(make_grid(0, 1, 0, 2, 4), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 0, 0, 1, 4), std::invalid_argument);
  EXPECT_THROW(make_grid(0, 1, 0, 1, 2), std::invalid_argument);
}

TEST(Grid, LayoutShapes) {
  for (int N : {4, 7, 32}) {
    EXPECT_EQ(ScalarField(Layout::Nodes, N).size(), std::size_t((N + 1) * (N + 1)));
    EXPECT_EQ(ScalarField(Layout::Centers, N).size(), std::size_t(N * N));
    const ScalarField xf(Layout::XFaces, N);
    EXPECT_EQ(xf.nx(), N + 1);
    EXPECT_EQ(xf.ny(), N);
    const ScalarField yf(Layout::YFaces, N);
    EXPECT_EQ(yf.nx(), N);
    EXPECT_EQ(yf.ny(), N + 1);
  }
}

TEST(Grid, LayoutPoints) {
  const auto g = make_grid(-2, 2, -2, 2, 4);
  const Point c = layout_point(g, Layout::Centers, 0, 0);
  EXPECT_DOUBLE_EQ(c.x, -1.5);
  EXPECT_DOUBLE_EQ(c.y, -1.5);
  const Point u = layout_point(g, Layout::XFaces, 4, 3);
  EXPECT_DOUBLE_EQ(u.x, 2.0);
  EXPECT_DOUBLE_EQ(u.y, 1.5);
  const Point v = layout_point(g, Layout::YFaces, 1, 0);
  EXPECT_DOUBLE_EQ(v.x, -0.5);
  EXPECT_DOUBLE_EQ(v.y, -2.0);
}

TEST(Grid, LayoutNamesRoundTrip) {
  for (Layout l : {Layout::Nodes, Layout::Centers, Layout::XFaces, Layout::YFaces}) {
    EXPECT_EQ(layout_from_name(layout_name(l)), l);
  }
  EXPECT_THROW(layout_from_name("edges"), std::invalid_argument);
}

TEST(Markers, CountAndWeights) {
  const auto m = make_circle_markers(Circle{{0, 0}, 1.0}, 0.125, 1.0);
  ASSERT_EQ(m.size(), 51u);
  for (double ds : m.ds) EXPECT_DOUBLE_EQ(ds, 2 * std::numbers::pi / 51);
  EXPECT_NEAR(m.total_length(), 2 * std::numbers::pi, 1e-13);
  EXPECT_DOUBLE_EQ(m.theta[0], 0.0);

  const auto fine = make_circle_markers(Circle{{0, 0}, 1.0}, 0.0625, 0.5);
  EXPECT_EQ(fine.size(), 202u);
  EXPECT_LE(fine.max_ds(), 0.0625);
}

TEST(Markers, InvariantsOverGridSizes) {
  for (int e = 2; e <= 9; ++e) {
    const double h = std::ldexp(1.0, -e);
    const auto m = make_circle_markers(Circle{{0.1, -0.2}, 0.8}, h);
    const auto n = m.size();
    EXPECT_EQ(n, static_cast<std::size_t>(std::ceil(2 * std::numbers::pi * 0.8 / h)));
    EXPECT_NEAR(m.total_length(), 2 * std::numbers::pi * 0.8, 1e-12);
    EXPECT_LE(m.max_ds(), h * (1 + 1e-12));
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(std::hypot(m.X[k] - 0.1, m.Y[k] + 0.2), 0.8, 1e-14);
    }
  }
}

TEST(Markers, RejectsBadSpacing) {
  EXPECT_THROW(make_circle_markers(Circle{{0, 0}, 1.0}, 0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(make_circle_markers(Circle{{0, 0}, 1.0}, 0.1, 2.5), std::invalid_argument);
  EXPECT_THROW(make_circle_markers(Circle{{0, 0}, -1.0}, 0.1), std::invalid_argument);
}

TEST(Force, NormalTangentialDecomposition) {
  const auto m = make_circle_markers(Circle{{0, 0}, 1.0}, 0.1);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-2, 2);
  std::vector<double> a(m.size()), b(m.size());
  for (auto& x : a) x = U(rng);
  for (auto& x : b) x = U(rng);
  const auto f = force_from_normal_tangential(m, a, b);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double c = std::cos(m.theta[k]), s = std::sin(m.theta[k]);
    EXPECT_NEAR(f.f1[k], a[k] * c - b[k] * s, 1e-12 * (1 + std::abs(f.f1[k])));
    EXPECT_NEAR(f.f2[k], a[k] * s + b[k] * c, 1e-12 * (1 + std::abs(f.f2[k])));
  }
}

TEST(Distance, CircleExamples) {
  const Circle unit{{0, 0}, 1.0};
  EXPECT_DOUBLE_EQ(dist_to_interface(Point{0, 0}, unit), 1.0);
  EXPECT_DOUBLE_EQ(dist_to_interface(Point{1, 0}, unit), 0.0);
  EXPECT_DOUBLE_EQ(dist_to_interface(Point{1.5, 0}, unit), 0.5);
}

TEST(Distance, PolygonAgreesWithCircleWithinChordBound) {
  const Circle unit{{0, 0}, 1.0};
  const auto m = make_circle_markers(unit, 0.05);
  const double bound = m.max_ds() * m.max_ds() / 2.0;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int t = 0; t < 500; ++t) {
    const Point p{U(rng), U(rng)};
    EXPECT_NEAR(dist_to_interface(p, m), dist_to_interface(p, unit), bound);
  }
}

TEST(Field, Arithmetic) {
  ScalarField a(Layout::Nodes, 4, 1.0), b(Layout::Nodes, 4, 2.0);
  a += b;
  a *= 2.0;
  a -= b;
  for (double v : a.values()) EXPECT_DOUBLE_EQ(v, 4.0);
  EXPECT_DOUBLE_EQ(a.max_abs(), 4.0);
  EXPECT_TRUE(a.all_finite());
  EXPECT_THROW(a += ScalarField(Layout::Centers, 4), std::invalid_argument);
}

TEST(FieldIo, RoundTripIsExact) {
  const auto g = make_grid(-1, 1, -1, 1, 8);
  std::mt19937 rng(3);
  std::normal_distribution<double> Z;
  for (Layout l : {Layout::Nodes, Layout::Centers, Layout::XFaces, Layout::YFaces}) {
    ScalarField f(l, 8);
    for (double& v : f.values()) v = Z(rng) * 1e3;
    std::stringstream ss;
    write_field_csv(ss, f, g.h);
    const FieldFile back = read_field_csv(ss);
    EXPECT_EQ(back.field.layout(), l);
    EXPECT_EQ(back.h, g.h);
    ASSERT_EQ(back.field.size(), f.size());
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_EQ(back.field.values()[k], f.values()[k]);
  }
}

TEST(FieldIo, HeaderAndMalformedInput) {
  std::stringstream ss;
  write_field_csv(ss, ScalarField(Layout::Centers, 4), 0.25);
  std::string first;
  std::getline(ss, first);
  EXPECT_EQ(first, "layout,N,h");

  std::stringstream bad("layout,N,h\ncenters,4,0.25\n1,2,3\n");
  EXPECT_THROW(read_field_csv(bad), std::invalid_argument);
  std::stringstream none("nope\n");
  EXPECT_THROW(read_field_csv(none), std::invalid_argument);
}
