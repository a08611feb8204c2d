#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibstokes/analysis.hpp"
#include "ibstokes/exact.hpp"
#include "ibstokes/kernels.hpp"
#include "ibstokes/poisson.hpp"

namespace ibstokes {

enum class Method {
  ThreePoisson,
  Mac,
  /// Samples the exact solution instead of solving; a harness self-check.
  ExactInjection,
};

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

struct ConvergenceRow {
  int N = 0;
  ErrorTriple errors;
  /// log2(e_prev / e_this); empty on the first row or when undefined.
  std::optional<double> rate_u;
  std::optional<double> rate_p;
  std::optional<double> rate_p_far;

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::optional<double> average_u;
  std::optional<double> average_p;
  std::optional<double> average_p_far;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

/// Refinement rate log2(coarse / fine); empty unless both are positive and finite.
std::optional<double> refinement_rate(double coarse, double fine);

/// Builds rows with pairwise rates and the mean of the defined rates.
ConvergenceReport make_report(const std::vector<std::pair<int, ErrorTriple>>& errors);

/// Extra per-grid measurements that are not part of the CSV table.
struct StudyDiagnostics {
  std::vector<double> divergence_max;
  std::vector<double> seconds;
};

/// Solves the circular-interface example on each N in `grids` (strictly
/// increasing) and measures the errors.
ConvergenceReport run_convergence_study(Method method, KernelKind kernel,
                                        const std::vector<int>& grids,
                                        LinearSolveOptions opts = {},
                                        StudyDiagnostics* diagnostics = nullptr,
                                        example::PressureWall wall = example::PressureWall::ExactGradient);

/// Error triple of a single solve on an N x N grid.
ErrorTriple solve_and_measure(Method method, KernelKind kernel, int N, LinearSolveOptions opts = {},
                              double* divergence_max = nullptr,
                              example::PressureWall wall = example::PressureWall::ExactGradient);

/// CSV with header "N,err_u_inf,rate_u,err_p_l2,rate_p,err_p_far,rate_p_far",
/// one row per grid and a final "average" row. Values use 17 significant
/// digits, so parsing reproduces the report exactly.
void write_report_csv(std::ostream& os, const ConvergenceReport& report);
ConvergenceReport read_report_csv(std::istream& is);

/// Human-readable table in the column order of the CSV.
void print_report_table(std::ostream& os, const ConvergenceReport& report);

}  // namespace ibstokes
