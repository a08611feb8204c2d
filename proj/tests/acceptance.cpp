// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--known-red k,...]
//
// Exit status is 0 when every criterion passes, or when the failing set is
// exactly the listed known-red set. FAIL lines are printed either way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ibstokes/analysis.hpp"
#include "ibstokes/convergence.hpp"
#include "ibstokes/green.hpp"
#include "ibstokes/kernels.hpp"
#include "ibstokes/mac.hpp"
#include "ibstokes/three_poisson.hpp"
#include "oracle.hpp"

using namespace ibstokes;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string fix(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

bool within_factor(double v, double ref, double factor) { return v >= ref / factor && v <= ref * factor; }

double mean_rate(const ConvergenceReport& rep, std::optional<double> ConvergenceRow::*field, std::size_t first_row) {
  double s = 0.0;
  int n = 0;
  for (std::size_t k = std::max<std::size_t>(first_row, 1); k < rep.rows.size(); ++k) {
    const auto& r = rep.rows[k].*field;
    if (!r) return NAN;
    s += *r;
    ++n;
  }
  return n ? s / n : NAN;
}

const std::vector<int> kGrids{32, 64, 128, 256};

const ConvergenceReport& cosine_study() {
  static const ConvergenceReport rep = run_convergence_study(Method::ThreePoisson, KernelKind::Cosine, kGrids);
  return rep;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& rep = cosine_study();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double rate = mean_rate(rep, &ConvergenceRow::rate_u, 1);
  const double e64 = rep.rows[1].errors.err_u_inf;
  const bool ok = rate >= 1.0 && within_factor(e64, 1.0813e-2, 4.0) && secs <= 120.0;
  return {ok, "velocity rate avg " + fix(rate) + ", N=64 error " + sci(e64) + ", " + fix(secs) + " s"};
}

Outcome c2() {
  const auto& rep = cosine_study();
  const double rp = mean_rate(rep, &ConvergenceRow::rate_p, rep.rows.size() - 3);
  const double rf = mean_rate(rep, &ConvergenceRow::rate_p_far, 1);
  const bool ok = rp >= 0.35 && rp <= 1.2 && rf >= 0.8;
  return {ok, "pressure L2 rate avg " + fix(rp) + ", far-field rate avg " + fix(rf)};
}

Outcome c3() {
  const auto rep = run_convergence_study(Method::ThreePoisson, KernelKind::Delta1, kGrids);
  const double rate = mean_rate(rep, &ConvergenceRow::rate_u, 1);
  const double e64 = rep.rows[1].errors.err_u_inf;
  const bool ok = rate >= 0.9 && within_factor(e64, 4.1643e-2, 4.0);
  return {ok, "velocity rate avg " + fix(rate) + ", N=64 error " + sci(e64)};
}

Outcome c4() {
  bool ok = true;
  std::ostringstream d;
  for (int N : {32, 64, 128}) {
    double div = 0.0;
    const auto mac = solve_and_measure(Method::Mac, KernelKind::Cosine, N, {}, &div);
    const double tp = cosine_study().rows[static_cast<std::size_t>(std::log2(N / 32))].errors.err_u_inf;
    ok = ok && div <= 1e-9 && within_factor(mac.err_u_inf, tp, 4.0);
    d << "N=" << N << " div " << sci(div) << " err " << sci(mac.err_u_inf) << " vs " << sci(tp) << "; ";
  }
  return {ok, d.str()};
}

Outcome c5() {
  const auto pb = example::make_problem(64, KernelKind::Cosine);
  const LinearSolveOptions opts;
  const auto s = solve_mac(pb, opts);
  const double r = interior_pressure_identity_check(s, pb);
  return {r <= 10.0 * opts.tol, "max identity residual " + sci(r) + " (tol " + sci(opts.tol) + ")"};
}

Outcome c6() {
  std::ostringstream d;
  bool ok = true;
  const auto g64 = make_grid(-1, 1, -1, 1, 64);
  const NodeIndex c = nearest_node(g64, -0.28, -0.2);
  const auto D = dirichlet_green(g64, c);
  const auto M = neumann_green(g64, c);
  const double rd = green_identity_residual(g64, D), rn = green_identity_residual(g64, M);
  ok = ok && rd <= 1e-9 && rn <= 1e-9;
  d << "identity " << sci(rd) << "/" << sci(rn);

  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> idx(1, 63);
  double sym = 0.0;
  for (int k = 0; k < 10; ++k) {
    const NodeIndex a{idx(rng), idx(rng)}, b{idx(rng), idx(rng)};
    sym = std::max(sym, std::abs(dirichlet_green(g64, a).field(b.i, b.j) - dirichlet_green(g64, b).field(a.i, a.j)));
  }
  ok = ok && sym <= 1e-9;
  d << ", symmetry " << sci(sym);

  const auto rep64 = verify_decay(g64, D);
  ok = ok && rep64.C0 <= 1.0;
  d << ", C0 " << fix(rep64.C0);

  std::vector<double> c1;
  for (int N : {32, 64, 128}) {
    const auto g = make_grid(-1, 1, -1, 1, N);
    c1.push_back(verify_decay(g, dirichlet_green(g, nearest_node(g, -0.28, -0.2))).C1);
  }
  const auto [lo, hi] = std::minmax_element(c1.begin(), c1.end());
  ok = ok && *lo > 0.0 && *hi / *lo <= 2.0;
  d << ", C1 " << fix(c1[0]) << "/" << fix(c1[1]) << "/" << fix(c1[2]);
  return {ok, d.str()};
}

Outcome c7() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-50.0, 50.0);
  double worst = 0.0;
  const double h = 0.03125;
  for (KernelKind k : {KernelKind::Hat, KernelKind::Cosine, KernelKind::Delta1}) {
    for (int t = 0; t < 1000; ++t) {
      const double X = U(rng) * h;
      double s = 0.0;
      for (const auto& [i, w] : kernel_stencil_1d(k, X, -100.0 * h, h, 201)) s += w;
      worst = std::max(worst, std::abs(s - 1.0));
    }
  }
  // tie: node 10 sits at offset -h/2 (kept), node 11 at +h/2 (dropped)
  const auto tie = kernel_stencil_1d(KernelKind::Delta1, 10.5 * h, 0.0, h, 32);
  const bool single = tie.size() == 1 && tie[0].second == 1.0 && tie[0].first == 10;
  const bool value_tie = eval_kernel(KernelKind::Delta1, -0.5 * h, h) == 1.0 / h &&
                         eval_kernel(KernelKind::Delta1, 0.5 * h, h) == 0.0;
  return {worst <= 1e-12 && single && value_tie,
          "max |moment - 1| " + sci(worst) + ", tie assigned to one point: " + (single && value_tie ? "yes" : "no")};
}

Outcome c8() {
  std::vector<TruncationReport> r;
  for (int N : {64, 128, 256}) r.push_back(truncation_diagnostics(make_grid(-2, 2, -2, 2, N), KernelKind::Cosine));
  bool ok = true;
  std::ostringstream d;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const double reg = r[k - 1].regular_max / r[k].regular_max;
    const double irr = r[k].irregular_max / r[k - 1].irregular_max;
    const double bnd = r[k - 1].boundary_max / r[k].boundary_max;
    ok = ok && reg >= 3 && reg <= 5 && irr >= 3 && irr <= 5 && bnd >= 0.25 && bnd <= 4;
    d << "N=" << r[k].N << " regular " << sci(r[k].regular_max) << " (ratio " << fix(reg) << ") irregular ratio "
      << fix(irr) << " boundary ratio " << fix(bnd) << "; ";
  }
  return {ok, d.str()};
}

Outcome c9() {
  const double target = -std::numbers::pi / 4.0;
  std::vector<double> gaps;
  for (int N : {64, 128, 256}) {
    const auto s = boundary_layer_sum_check(make_grid(-2, 2, -2, 2, N), [](double, double y) { return y; });
    gaps.push_back(std::abs(s.lhs - target));
  }
  const bool ok = gaps[1] < gaps[0] && gaps[2] < gaps[1] && gaps[2] <= 0.15;
  return {ok, "|lhs + pi/4| " + sci(gaps[0]) + " " + sci(gaps[1]) + " " + sci(gaps[2])};
}

Outcome c10() {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> T(0.0, 2.0 * std::numbers::pi);
  double cont = 0.0, jump = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = T(rng), x = std::cos(t), y = std::sin(t);
    const auto a = example::eval_inside(x, y), b = example::eval_outside(x, y);
    cont = std::max({cont, std::abs(a.u - b.u), std::abs(a.v - b.v)});
    const auto o = oracle::jumps(t);
    const auto j = example::exact_jumps(t);
    jump = std::max({jump, std::abs(o.p - j.p), std::abs(o.un - j.un), std::abs(o.vn - j.vn),
                     std::abs(j.p - j.fhat1)});
  }
  double mom = 0.0;
  std::uniform_real_distribution<double> R(0.05, 0.95), Ro(1.05, 1.95);
  for (int k = 0; k < 100; ++k) {
    const double t = T(rng);
    const double ri = R(rng), ro = Ro(rng);
    const auto gi = oracle::body_force(true, ri * std::cos(t), ri * std::sin(t));
    const auto Gi = example::body_force_inside(ri * std::cos(t), ri * std::sin(t));
    const auto go = oracle::body_force(false, ro * std::cos(t), ro * std::sin(t));
    const auto Go = example::body_force_outside(ro * std::cos(t), ro * std::sin(t));
    mom = std::max({mom, std::abs(gi.x - Gi.x), std::abs(gi.y - Gi.y), std::abs(go.x - Go.x), std::abs(go.y - Go.y)});
  }
  const bool ok = cont <= 1e-12 && jump <= 1e-8 && mom <= 1e-8;
  return {ok, "continuity " + sci(cont) + ", jumps " + sci(jump) + ", momentum " + sci(mom)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--known-red") == 0 && a + 1 < argc) {
      std::stringstream ss(argv[++a]);
      std::string item;
      while (std::getline(ss, item, ',')) known_red.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--known-red k,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-poisson cosine velocity convergence", c1},
      {"three-poisson cosine pressure rates", c2},
      {"three-poisson delta1 velocity convergence", c3},
      {"mac divergence and comparability", c4},
      {"mac interior pressure identity", c5},
      {"discrete green functions", c6},
      {"kernel moments and delta1 tie", c7},
      {"pressure truncation classes", c8},
      {"layer-sum quadrature", c9},
      {"exact-solution oracle closure", c10},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << criteria[k].first << ": " << o.detail
              << (o.pass || !known_red.count(id) ? "" : "  (known red)") << std::endl;
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
  if (failed.empty()) return 0;
  return failed == known_red ? 0 : 1;
}
