// ibstokes: convergence studies, Green function dumps and truncation diagnostics
// for the immersed-boundary Stokes solvers.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ibstokes/analysis.hpp"
#include "ibstokes/convergence.hpp"
#include "ibstokes/field_io.hpp"
#include "ibstokes/green.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_grids(const std::string& text) {
  std::vector<int> grids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int N = 0;
    try {
      N = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--grids: '" + item + "' is not an integer");
    }
    if (pos != item.size() || N < 4) throw UsageError("--grids: bad grid size '" + item + "'");
    grids.push_back(N);
  }
  if (grids.empty()) throw UsageError("--grids: empty list");
  for (std::size_t k = 1; k < grids.size(); ++k) {
    if (grids[k] <= grids[k - 1]) throw UsageError("--grids must be strictly increasing");
    if (grids[k] % grids[k - 1] != 0) {
      throw UsageError("--grids: each N must divide the next");
    }
    if (grids[k] != 2 * grids[k - 1]) {
      std::cerr << "warning: grids " << grids[k - 1] << " -> " << grids[k]
                << " is not a doubling; rates still use log2 of the error ratio\n";
    }
  }
  return grids;
}

ibstokes::KernelKind parse_kernel(const std::string& name) {
  try {
    return ibstokes::kernel_from_name(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown kernel '" + name + "'; valid kernels: " +
                     std::string(ibstokes::kernel_names()));
  }
}

int cmd_converge(const std::string& method_text, const std::string& kernel_text,
                 const std::string& grids_text, const std::string& out, const std::string& wall_text,
                 double tol) {
  ibstokes::Method method;
  try {
    method = ibstokes::method_from_name(method_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto kernel = parse_kernel(kernel_text);
  const auto grids = parse_grids(grids_text);
  ibstokes::example::PressureWall wall;
  if (wall_text == "exact") wall = ibstokes::example::PressureWall::ExactGradient;
  else if (wall_text == "homogeneous") wall = ibstokes::example::PressureWall::Homogeneous;
  else throw UsageError("--pressure-wall must be exact or homogeneous");
  ibstokes::LinearSolveOptions opts;
  opts.tol = tol;

  ibstokes::StudyDiagnostics diag;
  const auto report = ibstokes::run_convergence_study(method, kernel, grids, opts, &diag, wall);
  std::cout << "method " << ibstokes::method_name(method) << ", kernel "
            << ibstokes::kernel_name(kernel) << "\n";
  ibstokes::print_report_table(std::cout, report);
  for (std::size_t k = 0; k < grids.size(); ++k) {
    std::cout << "N=" << grids[k] << "  max|div_h u| " << std::scientific << std::setprecision(3)
              << diag.divergence_max[k] << "  time " << std::fixed << std::setprecision(2)
              << diag.seconds[k] << " s\n";
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out);
    ibstokes::write_report_csv(f, report);
  } else {
    ibstokes::write_report_csv(std::cout, report);
  }
  return kOk;
}

int cmd_green(const std::string& bc_text, int N, const std::string& center_text,
              const std::string& out, double tol) {
  ibstokes::GreenBc bc;
  if (bc_text == "dirichlet") bc = ibstokes::GreenBc::Dirichlet;
  else if (bc_text == "neumann") bc = ibstokes::GreenBc::Neumann;
  else throw UsageError("--bc must be dirichlet or neumann");
  if (N < 8) throw UsageError("--n must be at least 8");

  double cx = 0.0, cy = 0.0;
  char comma = 0;
  std::istringstream cs(center_text);
  if (!(cs >> cx >> comma >> cy) || comma != ',' || !cs.eof()) {
    throw UsageError("--center expects x,y");
  }
  const auto grid = ibstokes::make_grid(-1.0, 1.0, -1.0, 1.0, N);
  if (!(cx > grid.a && cx < grid.b && cy > grid.c && cy < grid.d)) {
    throw UsageError("--center lies outside the open domain (-1,1)^2");
  }
  const auto center = ibstokes::nearest_node(grid, cx, cy);
  if (center.i < 1 || center.j < 1 || center.i > N - 1 || center.j > N - 1) {
    throw UsageError("--center is not at an interior node");
  }
  if (bc == ibstokes::GreenBc::Neumann && center.i <= 1 && center.j <= 1) {
    throw UsageError("--center is adjacent to the Neumann pin at node (0,0)");
  }

  ibstokes::LinearSolveOptions opts;
  opts.tol = tol;
  const auto green = bc == ibstokes::GreenBc::Dirichlet ? ibstokes::dirichlet_green(grid, center, opts)
                                                        : ibstokes::neumann_green(grid, center, opts);
  const double residual = ibstokes::green_identity_residual(grid, green);
  const auto decay = ibstokes::verify_decay(grid, green);

  std::cout << "green " << bc_text << " N=" << N << " center node (" << center.i << ',' << center.j
            << ")\n";
  if (bc == ibstokes::GreenBc::Neumann) {
    std::cout << "pin node (" << green.pin.i << ',' << green.pin.j << ") held at 0\n";
  }
  std::cout << std::scientific << std::setprecision(3) << "identity residual " << residual
            << " (limit " << 10.0 * tol << ")\n"
            << "decay C0 " << decay.C0 << "  C1 " << decay.C1 << "  C2 " << decay.C2 << "  over "
            << decay.samples << " nodes\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out);
    ibstokes::write_field_csv(f, green.field, grid.h);
  }
  return kOk;
}

int cmd_diagnose(int N, const std::string& kernel_text) {
  if (N < 16) throw UsageError("--n must be at least 16 for the sqrt(h) far-field set");
  const auto kernel = parse_kernel(kernel_text);
  const auto grid = ibstokes::make_grid(-2.0, 2.0, -2.0, 2.0, N);
  const auto t = ibstokes::truncation_diagnostics(grid, kernel);
  std::cout << "truncation of the pressure equation, N=" << N << ", kernel "
            << ibstokes::kernel_name(kernel) << "\n"
            << std::scientific << std::setprecision(4)
            << "  regular    max " << t.regular_max << "  (" << t.regular_count << " nodes)\n"
            << "  irregular  max " << t.irregular_max << "  (" << t.irregular_count << " nodes)\n"
            << "  near       max " << t.near_max << "  (" << t.near_count << " nodes)\n"
            << "  boundary   max " << t.boundary_max << "  (" << t.boundary_count << " nodes)\n";

  struct Weight {
    const char* name;
    std::function<double(double, double)> Q;
    double expected;
  };
  const std::vector<Weight> weights = {
      {"1", [](double, double) { return 1.0; }, 0.0},
      {"y", [](double, double y) { return y; }, -std::numbers::pi / 4.0},
  };
  std::cout << "layer sum of D^x p against the interface integral of [p] n_x Q\n";
  for (const auto& w : weights) {
    const auto s = ibstokes::boundary_layer_sum_check(grid, w.Q);
    std::cout << "  Q=" << w.name << "  lhs " << std::showpos << s.lhs << "  rhs " << s.rhs
              << "  gap " << std::noshowpos << s.gap << "  |lhs - (" << std::showpos << w.expected
              << std::noshowpos << ")| " << std::abs(s.lhs - w.expected) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immersed-boundary Stokes solvers on a uniform grid"};
  app.require_subcommand(1);
  double tol = 1e-11;
  app.add_option("--tol", tol, "Backward-error tolerance for linear solves")->check(CLI::PositiveNumber);

  std::string method = "three-poisson", kernel = "cosine", grids = "32,64,128", out;
  std::string pressure_wall = "exact";
  auto* converge = app.add_subcommand("converge", "Grid-refinement study on the circular-interface example");
  converge->add_option("--method", method, "three-poisson | mac");
  converge->add_option("--kernel", kernel, "hat | cosine | delta1");
  converge->add_option("--grids", grids, "Comma-separated, strictly increasing N");
  converge->add_option("--out", out, "CSV path (default: standard output)");
  converge->add_option("--pressure-wall", pressure_wall,
                       "Neumann data for the three-Poisson pressure: exact | homogeneous");

  std::string bc = "dirichlet", center = "-0.28,-0.2", green_out;
  int green_n = 64;
  auto* green = app.add_subcommand("green", "Discrete Green function on [-1,1]^2");
  green->add_option("--bc", bc, "dirichlet | neumann");
  green->add_option("--n", green_n, "Cells per side");
  green->add_option("--center", center, "x,y of the impulse; snapped to the nearest node")
      ->allow_extra_args(false);
  green->add_option("--out", green_out, "Field CSV path");

  int diag_n = 64;
  std::string diag_kernel = "cosine";
  auto* diagnose = app.add_subcommand("diagnose", "Truncation and layer-sum diagnostics");
  diagnose->add_option("--n", diag_n, "Cells per side");
  diagnose->add_option("--kernel", diag_kernel, "hat | cosine | delta1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*converge) return cmd_converge(method, kernel, grids, out, pressure_wall, tol);
    if (*green) return cmd_green(bc, green_n, center, green_out, tol);
    if (*diagnose) return cmd_diagnose(diag_n, diag_kernel);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}
