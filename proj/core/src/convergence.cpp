#include "ibstokes/convergence.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ibstokes/exact.hpp"
#include "ibstokes/mac.hpp"
#include "ibstokes/three_poisson.hpp"

namespace ibstokes {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::ThreePoisson: return "three-poisson";
    case Method::Mac: return "mac";
    case Method::ExactInjection: return "exact";
  }
  return "unknown";
}

Method method_from_name(std::string_view name) {
  if (name == "three-poisson") return Method::ThreePoisson;
  if (name == "mac") return Method::Mac;
  if (name == "exact") return Method::ExactInjection;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (valid: three-poisson, mac, exact)");
}

std::optional<double> refinement_rate(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0) || !std::isfinite(coarse) || !std::isfinite(fine)) {
    return std::nullopt;
  }
  return std::log2(coarse / fine);
}

namespace {

std::optional<double> mean(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

ConvergenceReport make_report(const std::vector<std::pair<int, ErrorTriple>>& errors) {
  ConvergenceReport rep;
  std::vector<double> ru, rp, rf;
  for (std::size_t k = 0; k < errors.size(); ++k) {
    ConvergenceRow row;
    row.N = errors[k].first;
    row.errors = errors[k].second;
    if (k > 0) {
      const ErrorTriple& prev = errors[k - 1].second;
      row.rate_u = refinement_rate(prev.err_u_inf, row.errors.err_u_inf);
      row.rate_p = refinement_rate(prev.err_p_l2, row.errors.err_p_l2);
      row.rate_p_far = refinement_rate(prev.err_p_far, row.errors.err_p_far);
      if (row.rate_u) ru.push_back(*row.rate_u);
      if (row.rate_p) rp.push_back(*row.rate_p);
      if (row.rate_p_far) rf.push_back(*row.rate_p_far);
    }
    rep.rows.push_back(row);
  }
  rep.average_u = mean(ru);
  rep.average_p = mean(rp);
  rep.average_p_far = mean(rf);
  return rep;
}

ErrorTriple solve_and_measure(Method method, KernelKind kernel, int N, LinearSolveOptions opts,
                              double* divergence_max, example::PressureWall wall) {
  const StokesProblem problem = example::make_problem(N, kernel, 1.0, wall);
  const GridSpec& grid = problem.grid;
  switch (method) {
    case Method::ThreePoisson: {
      const ThreePoissonSolution s = solve_three_poisson(problem, opts);
      if (divergence_max) *divergence_max = s.divergence_max;
      return error_norms(grid, s.U, s.V, s.P, {s.pressure_pin.i, s.pressure_pin.j});
    }
    case Method::Mac: {
      const MacSolution s = solve_mac(problem, opts);
      if (divergence_max) *divergence_max = s.divergence_max;
      return error_norms(grid, s.U, s.V, s.P, {s.pin.i, s.pin.j});
    }
    case Method::ExactInjection: {
      auto field = [&](int which) {
        return sample(grid, Layout::Nodes, [which](double x, double y) {
          const example::State st = example::exact_eval(x, y);
          return which == 0 ? st.u : (which == 1 ? st.v : st.p);
        });
      };
      if (divergence_max) *divergence_max = 0.0;
      return error_norms(grid, field(0), field(1), field(2), {0, 0});
    }
  }
  throw std::invalid_argument("solve_and_measure: unknown method");
}

ConvergenceReport run_convergence_study(Method method, KernelKind kernel,
                                        const std::vector<int>& grids, LinearSolveOptions opts,
                                        StudyDiagnostics* diagnostics, example::PressureWall wall) {
  if (grids.empty()) throw std::invalid_argument("run_convergence_study: empty grid list");
  for (std::size_t k = 1; k < grids.size(); ++k) {
    if (grids[k] <= grids[k - 1]) {
      throw std::invalid_argument("run_convergence_study: grids must be strictly increasing");
    }
  }
  std::vector<std::pair<int, ErrorTriple>> errors;
  for (int N : grids) {
    const auto t0 = std::chrono::steady_clock::now();
    double div = 0.0;
    errors.emplace_back(N, solve_and_measure(method, kernel, N, opts, &div, wall));
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (diagnostics) {
      diagnostics->divergence_max.push_back(div);
      diagnostics->seconds.push_back(dt.count());
    }
  }
  return make_report(errors);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

constexpr std::string_view kHeader = "N,err_u_inf,rate_u,err_p_l2,rate_p,err_p_far,rate_p_far";

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_rate(const std::optional<double>& r, bool first) {
  if (r) return fmt(*r);
  return first ? "" : "n/a";
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("read_report_csv: bad number '" + s + "'");
  return v;
}

std::optional<double> parse_rate(const std::string& s) {
  if (s.empty() || s == "n/a") return std::nullopt;
  return parse_double(s);
}

}  // namespace

void write_report_csv(std::ostream& os, const ConvergenceReport& report) {
  os << kHeader << '\n';
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const ConvergenceRow& r = report.rows[k];
    const bool first = k == 0;
    os << r.N << ',' << fmt(r.errors.err_u_inf) << ',' << fmt_rate(r.rate_u, first) << ','
       << fmt(r.errors.err_p_l2) << ',' << fmt_rate(r.rate_p, first) << ','
       << fmt(r.errors.err_p_far) << ',' << fmt_rate(r.rate_p_far, first) << '\n';
  }
  os << "average,," << fmt_rate(report.average_u, false) << ",," << fmt_rate(report.average_p, false)
     << ",," << fmt_rate(report.average_p_far, false) << '\n';
}

ConvergenceReport read_report_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) {
    throw std::invalid_argument("read_report_csv: missing or unexpected header");
  }
  ConvergenceReport rep;
  bool saw_average = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 7) throw std::invalid_argument("read_report_csv: expected 7 columns");
    if (cells[0] == "average") {
      rep.average_u = parse_rate(cells[2]);
      rep.average_p = parse_rate(cells[4]);
      rep.average_p_far = parse_rate(cells[6]);
      saw_average = true;
      continue;
    }
    ConvergenceRow row;
    row.N = std::stoi(cells[0]);
    row.errors.err_u_inf = parse_double(cells[1]);
    row.rate_u = parse_rate(cells[2]);
    row.errors.err_p_l2 = parse_double(cells[3]);
    row.rate_p = parse_rate(cells[4]);
    row.errors.err_p_far = parse_double(cells[5]);
    row.rate_p_far = parse_rate(cells[6]);
    rep.rows.push_back(row);
  }
  if (!saw_average) throw std::invalid_argument("read_report_csv: missing average row");
  return rep;
}

void print_report_table(std::ostream& os, const ConvergenceReport& report) {
  auto rate = [](const std::optional<double>& r) {
    std::ostringstream s;
    if (r) s << std::fixed << std::setprecision(4) << *r;
    else s << "-";
    return s.str();
  };
  auto err = [](double e) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(4) << e;
    return s.str();
  };
  os << std::setw(6) << "N" << std::setw(14) << "|E_u|_inf" << std::setw(9) << "r"
     << std::setw(14) << "|E_p|_L2" << std::setw(9) << "r" << std::setw(14) << "|E_p,sqrt h|"
     << std::setw(9) << "r" << '\n';
  for (const auto& r : report.rows) {
    os << std::setw(6) << r.N << std::setw(14) << err(r.errors.err_u_inf) << std::setw(9)
       << rate(r.rate_u) << std::setw(14) << err(r.errors.err_p_l2) << std::setw(9) << rate(r.rate_p)
       << std::setw(14) << err(r.errors.err_p_far) << std::setw(9) << rate(r.rate_p_far) << '\n';
  }
  os << std::setw(6) << "avg" << std::setw(14) << "" << std::setw(9) << rate(report.average_u)
     << std::setw(14) << "" << std::setw(9) << rate(report.average_p) << std::setw(14) << ""
     << std::setw(9) << rate(report.average_p_far) << '\n';
}

}  // namespace ibstokes
