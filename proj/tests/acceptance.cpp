// Copyright 2026 The supersinh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: the eleven release criteria, each timed and reported as
// exactly one PASS/FAIL line with its measured deviation.  The binary exits
// nonzero when any criterion fails or the five-minute budget is exceeded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "supersinh/errors.hpp"
#include "supersinh/fieldcalc.hpp"
#include "supersinh/grassmann.hpp"
#include "supersinh/reduction.hpp"
#include "supersinh/special.hpp"
#include "supersinh/superspace.hpp"
#include "supersinh/symalg.hpp"
#include "test_util.hpp"

using namespace supersinh;
using namespace supersinh::testutil;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_s = 0.0;  // 0 = covered by the overall budget only
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double point_max(const FieldPoint& p) {
  return std::max({p.a0.max_abs_coeff(), p.a1.max_abs_coeff(),
                   p.a2.max_abs_coeff(), p.a12.max_abs_coeff()});
}

// --- criterion 1: the frozen supercommutation table ------------------------

Outcome bracket_table() {
  const TableCheck t = verify_table1(2, 1e-12);
  const bool pass = t.all_ok && t.cells.size() == 25 && t.max_dev == 0.0;
  return {pass, "25 cells, max dev " + fmt(t.max_dev)};
}

// --- criterion 2: operator identities on random superfields ----------------

Outcome operator_identities() {
  using OpFn = Superfield (*)(const Superfield&);
  struct Identity {
    OpFn A, B;
    double cx, ct;
  };
  const std::vector<Identity> identities = {
      {apply_Qx, apply_Qx, 2.0, 0.0},   // {Q_x, Q_x} = −2∂x
      {apply_Qt, apply_Qt, 0.0, -2.0},  // {Q_t, Q_t} = +2∂t
      {apply_Dx, apply_Dx, -2.0, 0.0},  // {D_x, D_x} = +2∂x
      {apply_Dt, apply_Dt, 0.0, 2.0},   // {D_t, D_t} = −2∂t
      {apply_Qx, apply_Qt, 0.0, 0.0},   {apply_Dx, apply_Dt, 0.0, 0.0},
      {apply_Dx, apply_Qx, 0.0, 0.0},   {apply_Dx, apply_Qt, 0.0, 0.0},
      {apply_Dt, apply_Qx, 0.0, 0.0},   {apply_Dt, apply_Qt, 0.0, 0.0}};
  std::mt19937_64 rng(20260815);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const SuperPolynomial p = random_superpolynomial(rng, 2, 2, 4);
    const Superfield f = from_polynomial(p);
    for (const auto& id : identities) {
      Superfield r = id.A(id.B(f)) + id.B(id.A(f));
      if (id.cx != 0.0) r = r + id.cx * apply_dx(f);
      if (id.ct != 0.0) r = r + id.ct * apply_dt(f);
      for (const auto& [x, t] : std::vector<std::pair<double, double>>{
               {0.3, 0.7}, {-1.1, 0.4}, {0.8, -1.2}}) {
        worst = std::max(worst, point_max(eval_point(r, x, t)));
      }
    }
  }
  return {worst < 1e-10, "100 fields x 10 identities, max dev " + fmt(worst)};
}

// --- criterion 3: all sixteen families annihilate their invariants ---------

Outcome invariant_annihilation() {
  double worst = 0.0;
  int families = 0;
  for (int k = 1; k <= 16; ++k) {
    const auto id = parse_subalgebra("S" + std::to_string(k));
    if (!id) return {false, "id parse failure"};
    for (double eps : {1.0, -1.0}) {
      const SubalgebraRep rep = subalgebra(*id, eps, 2);
      const InvarianceReport r = verify_invariants(rep, 3, 0.0);
      ++families;
      worst = std::max(worst, r.max_dev);
      if (!r.all_ok) {
        return {false, rep.label + " (eps " + fmt(eps) + ") leaks " +
                           fmt(r.max_dev)};
      }
      if (rep.eps == 0.0) break;  // no ε in this family
    }
  }
  return {true, std::to_string(families) + " representatives, max dev " +
                    fmt(worst) + " (exact)"};
}

// --- criterion 4: reconstruction residual correspondence -------------------

Outcome residual_correspondence() {
  std::mt19937_64 rng(424242);
  const unsigned n = 2;
  const std::vector<std::pair<SubalgebraId, double>> cases = {
      {SubalgebraId::S1, 1.0},  {SubalgebraId::S2, 1.0},
      {SubalgebraId::S3, 1.0},  {SubalgebraId::S4, 1.0},
      {SubalgebraId::S4, -1.0}, {SubalgebraId::S6, 1.0},
      {SubalgebraId::S7, 1.0},  {SubalgebraId::S8, 1.0},
      {SubalgebraId::S8, -1.0}, {SubalgebraId::S10, 1.0},
      {SubalgebraId::S11, 1.0}, {SubalgebraId::S12, 1.0},
      {SubalgebraId::S12, -1.0}};
  double worst = 0.0;
  for (const auto& [id, eps] : cases) {
    const SubalgebraRep rep = subalgebra(id, eps, n);
    for (int draw = 0; draw < 2; ++draw) {
      CurveSet c;
      c.alpha = random_even_curve(rng, n, 0.8, 0.2);
      c.eta = random_odd_curve(rng, n, 0.6);
      c.lambda = random_odd_curve(rng, n, 0.6);
      c.beta = random_even_curve(rng, n, 0.7, -0.1);
      const ReducedSolution sol = analytic_solution(id, eps, n, c, -9.0, 9.0);
      const Superfield field = reconstruct(rep, sol, 2);
      for (const auto& [x, t] : std::vector<std::pair<double, double>>{
               {0.3, 0.4}, {-0.7, 1.3}, {1.1, 0.9}, {-0.2, 0.6}}) {
        const Supernumber actual =
            pack_point(shg_residual_point(field, x, t));
        const Supernumber mapped = predicted_residual(rep, sol, x, t);
        worst = std::max(worst, max_abs_diff(actual, mapped));
      }
    }
  }
  return {worst <= 1e-9,
          "13 family cases x 2 draws x 4 points, max gap " + fmt(worst)};
}

// --- criterion 5: bosonic travelling wave ----------------------------------

Outcome bosonic_travelling_wave() {
  TravellingWaveInput in;
  in.alpha0 = Supernumber::body_element(0, 1.2);
  in.dalpha0 = Supernumber(0);
  const ReducedSolution sol = solve_S4(in);
  if (sol.energy_drift >= 1e-8) {
    return {false, "energy drift " + fmt(sol.energy_drift)};
  }
  const SubalgebraRep rep = subalgebra(SubalgebraId::S4, 1.0, 0);
  const Superfield field = reconstruct(rep, sol, 2);
  const Certification cert =
      certify(field, Window{-2.0, 2.0, -1.5, 1.5}, 1e-6, 101, 101);
  if (!cert.pass) {
    return {false, "certification residual " + fmt(cert.report.overall)};
  }
  // Quadrature along the trajectory: the energy pins C₁ = 2E + 1 and the
  // σ span between two samples equals the quartic quadrature of y = e^α.
  const double C1 = 1.0 + std::sinh(1.2) * std::sinh(1.2);
  const Quartic f =
      reduction_quartic(Supernumber(0), Supernumber::body_element(0, C1));
  const auto y_of = [&sol](double s) {
    return std::exp(sol.curves.alpha(0, s).body());
  };
  const double sa = -4.6, sb = -3.2;
  const double span = quadrature_sigma_span(f, y_of(sb), y_of(sa));
  const double qdev = std::abs(span - (sb - sa));
  const bool pass = qdev <= 1e-6;
  return {pass, "energy drift " + fmt(sol.energy_drift) + ", cert residual " +
                    fmt(cert.report.overall) + ", quadrature gap " +
                    fmt(qdev)};
}

// --- criterion 6: nilpotent sensitivities ----------------------------------

Outcome nilpotent_sensitivities() {
  const unsigned n = 2;
  const double c0 = 0.28;
  TravellingWaveInput in;
  in.alpha0 = Supernumber::body_element(n, 0.8);
  in.dalpha0 = Supernumber::body_element(n, 0.3);
  in.eta0 = Supernumber::monomial(n, 0b01, 0.4);
  in.lambda0 = Supernumber::monomial(n, 0b10, 0.7);
  in.C0 = Supernumber::monomial(n, 0b11, c0);
  const ReducedSolution sol = solve_S4(in);

  // Independent scalar integration of the body and its first-order
  // variational companion w'' = −(cosh(2α_b)·w + c₀·sinh α_b).
  double rel = 0.0;
  {
    double s = -5.0;
    double y[4] = {0.8, 0.3, 0.0, 0.0};
    const int steps = 40000;
    const double h = 10.0 / steps;
    const auto deriv = [c0](const double* y, double* d) {
      d[0] = y[1];
      d[1] = -std::sinh(y[0]) * std::cosh(y[0]);
      d[2] = y[3];
      d[3] = -(std::cosh(2 * y[0]) * y[2] + c0 * std::sinh(y[0]));
    };
    int probe = 0;
    const double probes[4] = {-2.5, 0.0, 1.3, 4.2};
    for (int i = 0; i < steps; ++i) {
      while (probe < 4 && s >= probes[probe] - 1e-9) {
        const double w = sol.curves.alpha(0, probes[probe])[0b11];
        rel = std::max(rel, std::abs(w - y[2]) / std::max(1.0, std::abs(y[2])));
        ++probe;
      }
      double k1[4], k2[4], k3[4], k4[4], tmp[4];
      deriv(y, k1);
      for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
      deriv(tmp, k2);
      for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
      deriv(tmp, k3);
      for (int j = 0; j < 4; ++j) tmp[j] = y[j] + h * k3[j];
      deriv(tmp, k4);
      for (int j = 0; j < 4; ++j) {
        y[j] += h / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
      }
      s += h;
    }
  }

  double constraint = sol.invariant_drift;
  for (double s : {-3.7, -0.9, 2.1, 4.9}) {
    const Supernumber hl = gmul(sol.curves.eta(0, s), sol.curves.lambda(0, s));
    constraint = std::max(constraint, max_abs_diff(hl, in.C0));
  }
  const bool pass = rel <= 1e-6 && constraint <= 1e-8;
  return {pass, "sensitivity rel dev " + fmt(rel) + ", constraint dev " +
                    fmt(constraint)};
}

// --- criterion 7: one-supersymmetry mirror ----------------------------------

Outcome supersymmetry_mirror() {
  // NaN-proof max: non-finite values must count as failures, not vanish in
  // the comparison.
  const auto acc = [](double& worst, double v) {
    worst = std::isfinite(v) ? std::max(worst, v) : 1e300;
  };
  double mirror = 0.0;
  for (double eps : {1.0, -1.0}) {
    // ε = −1 flips the even sector into a runaway; stay inside its horizon.
    const double lim = eps > 0 ? 3.0 : 1.2;
    const std::vector<double> probes = eps > 0
                                           ? std::vector<double>{-2.2, -0.5, 1.7, 2.9}
                                           : std::vector<double>{-0.9, -0.3, 0.4, 1.0};
    LinearOddInput in8;
    in8.eps = eps;
    in8.sigma0 = -lim;
    in8.sigma1 = lim;
    in8.steps = 2000;
    in8.n_generators = 2;
    in8.alpha0 = Supernumber::body_element(2, eps > 0 ? 0.9 : 0.2);
    in8.dalpha0 = Supernumber::body_element(2, eps > 0 ? -0.2 : 0.0);
    in8.f0 = Supernumber::body_element(2, 0.7);
    in8.df0 = Supernumber::body_element(2, 0.1);
    LinearOddInput in12 = in8;
    in12.f0 = -in8.f0;
    in12.df0 = -in8.df0;
    const ReducedSolution s8 = solve_S8(in8);
    const ReducedSolution s12 = solve_S12(in12);
    acc(mirror, s8.energy_drift);
    acc(mirror, s12.energy_drift);
    for (double s : probes) {
      acc(mirror, std::abs(s8.curves.lambda(0, s)[0b01] +
                           s12.curves.eta(0, s)[0b10]));
      acc(mirror, std::abs(s8.curves.eta(0, s)[0b01] +
                           eps * s12.curves.lambda(0, s)[0b10]));
    }
  }

  LinearOddInput r;
  r.n_generators = 1;
  r.sigma0 = -3.0;
  r.sigma1 = 3.0;
  r.steps = 2000;
  r.alpha0 = Supernumber::body_element(1, 0.9);
  r.dalpha0 = Supernumber::body_element(1, -0.2);
  r.f0 = Supernumber::body_element(1, 0.7);
  r.df0 = Supernumber::body_element(1, 0.1);
  const ReducedSolution restr = solve_S8(r);
  double bilinear = 0.0;
  for (double s : {-1.9, 0.4, 2.6}) {
    acc(bilinear,
        gmul(restr.curves.eta(0, s), restr.curves.lambda(0, s)).max_abs_coeff());
  }
  const bool pass = mirror <= 1e-8 && bilinear <= 1e-8;
  return {pass, "mirror dev " + fmt(mirror) + ", restricted-ring bilinear " +
                    fmt(bilinear)};
}

// --- criterion 8: elliptic layer --------------------------------------------

Outcome elliptic_layer() {
  double jac = 0.0;
  for (double k : {0.2, 0.5, 0.8}) {
    for (double u = -3.0; u <= 3.0; u += 0.2) {
      const JacobiValues v = jacobi_sncndn(u, k);
      jac = std::max(jac, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0));
      jac = std::max(jac,
                     std::abs(v.dn * v.dn + k * k * v.sn * v.sn - 1.0));
    }
  }
  if (jac > 1e-12) return {false, "Jacobi identity dev " + fmt(jac)};

  double ode = 0.0;
  for (double z : {0.3, 0.7, 1.1, 1.6}) {
    const auto [p, dp] = weierstrass_p(z, 3.1, -0.4);
    ode = std::max(ode,
                   std::abs(dp * dp - (4 * p * p * p - 3.1 * p + 0.4)));
  }
  if (ode >= 1e-8) return {false, "Weierstrass ODE residual " + fmt(ode)};

  // Weierstrass-form solution through a quartic root (real C₀ = 0).
  const Quartic f = reduction_quartic(Supernumber(0),
                                      Supernumber::body_element(0, 3.279));
  const auto roots = quartic_real_roots(f);
  if (roots.size() != 4) return {false, "expected 4 real roots"};
  const Supernumber y0 =
      ring_newton_root(f, Supernumber::body_element(0, roots[2]));
  double curve = 0.0;
  for (double sigma : {0.4, 0.9, 1.5}) {
    const QuarticRootSolution s = quartic_root_solution(f, y0, sigma);
    curve = std::max(curve, std::abs(4.0 * s.dy.body() * s.dy.body() -
                                     f.eval_body(s.y.body())));
  }
  if (curve > 1e-6) return {false, "energy-curve residual " + fmt(curve)};

  // Invariant bookkeeping: at C₀ = 0 the two g₂ variants are the same
  // polynomial in C₁ and must agree to machine precision; the g₃ variants
  // deviate in their C₀² terms for real C₀ — reported, never patched.
  const QuarticInvariants at0 = quartic_invariants(
      Supernumber(0), Supernumber::body_element(0, 3.279));
  if (at0.g2_max_dev > 1e-13 || at0.g3_max_dev > 1e-13) {
    return {false, "invariants disagree at C0 = 0: g2 dev " +
                       fmt(at0.g2_max_dev) + ", g3 dev " +
                       fmt(at0.g3_max_dev)};
  }
  const QuarticInvariants nil = quartic_invariants(
      Supernumber::monomial(2, 0b11, 0.8), Supernumber::body_element(2, 1.4));
  if (nil.g2_max_dev > 1e-13 || nil.g3_max_dev > 1e-13) {
    return {false, "invariants disagree for nilpotent C0"};
  }
  const QuarticInvariants off = quartic_invariants(
      Supernumber::body_element(0, 0.3), Supernumber::body_element(0, 1.4));
  if (!(off.g3_max_dev > 1e-9) || off.g2_max_dev > 1e-14) {
    return {false, "g3 deviation not reported for real C0"};
  }
  return {true, "Jacobi " + fmt(jac) + ", p ODE " + fmt(ode) +
                    ", curve " + fmt(curve) + "; g3 C0^2 gap " +
                    fmt(off.g3_max_dev) + " reported"};
}

// --- criterion 9: null solutions are forced ---------------------------------

Outcome null_only_families() {
  std::mt19937_64 rng(99);
  const unsigned n = 2;
  double zero_residual = 0.0, smallest_violation = 1e300;
  for (auto id : {SubalgebraId::S2, SubalgebraId::S3, SubalgebraId::S6,
                  SubalgebraId::S7, SubalgebraId::S10, SubalgebraId::S11}) {
    const ReducedSolution null = null_solution(id, 1.0, n, -3.0, 3.0);
    zero_residual = std::max(
        zero_residual, reduced_residuals(null, {-2.0, 0.0, 2.0}).max());
    const SubalgebraRep rep = subalgebra(id, 1.0, n);
    zero_residual = std::max(
        zero_residual, pack_point(shg_residual_point(reconstruct(rep, null, 2),
                                                     0.4, 0.8))
                           .max_abs_coeff());
    for (int draw = 0; draw < 3; ++draw) {
      CurveSet c;
      c.alpha = random_even_curve(rng, n, 0.4, 0.6);
      c.eta = random_odd_curve(rng, n, 0.6);
      c.lambda = random_odd_curve(rng, n, 0.6);
      c.beta = random_even_curve(rng, n, 0.7, -0.1);
      const ReducedSolution cand = analytic_solution(id, 1.0, n, c, -3.0, 3.0);
      smallest_violation = std::min(
          smallest_violation,
          reduced_residuals(cand, {-2.4, -0.8, 0.9, 2.7}).max());
    }
  }
  const bool pass = zero_residual < 1e-12 && smallest_violation > 1e-3;
  return {pass, "zero-solution residual " + fmt(zero_residual) +
                    ", weakest generic violation " + fmt(smallest_violation)};
}

// --- criterion 10: supersymmetry-flow covariance ----------------------------

Outcome flow_covariance() {
  const unsigned n = 3;
  TravellingWaveInput in;
  in.alpha0 = Supernumber::body_element(n, 0.8);
  in.dalpha0 = Supernumber(n);
  in.eta0 = Supernumber::monomial(n, 0b001, 0.4);
  in.lambda0 = Supernumber::monomial(n, 0b010, 0.7);
  in.C0 = Supernumber::monomial(n, 0b011, 0.28);
  const ReducedSolution sol = solve_S4(in);
  const SubalgebraRep rep = subalgebra(SubalgebraId::S4, 1.0, n);
  const Superfield field = reconstruct(rep, sol, 3);
  const Window win{-1.0, 1.0, -1.0, 1.0};
  const double before = shg_residual(field, win, 41, 41).overall;
  if (before >= 1e-6) return {false, "source field residual " + fmt(before)};

  double after = 0.0;
  for (GenId gen : {GenId::Qx, GenId::Qt}) {
    const FlowSpec spec{gen, 1.0, Supernumber::generator(n, 2)};
    const Superfield moved = transform_field(field, spec);
    after = std::max(after, shg_residual(moved, win, 41, 41).overall);
  }
  return {after < 1e-6, "residual before " + fmt(before) +
                            ", after Q-flows " + fmt(after)};
}

// --- criterion 11: the KdV fixture -------------------------------------------

Outcome kdv_fixture() {
  const TableCheck t = verify_kdv_table(2, 1e-12);
  if (!t.all_ok || t.max_dev != 0.0) {
    return {false, "bracket table dev " + fmt(t.max_dev)};
  }
  bool a1_cell = false;
  for (const auto& c : t.cells) {
    if (c.description.find("{A_1, A_1}") != std::string::npos &&
        c.description.find("-2") != std::string::npos &&
        c.description.find("C_1") != std::string::npos) {
      a1_cell = true;
    }
  }
  if (!a1_cell) return {false, "{A_1, A_1} = -2*C_1 cell missing"};

  double inv = 0.0;
  for (const auto& rep : kdv_nonstandard_reps(2)) {
    const InvarianceReport r = verify_invariants(rep, 3, 0.0);
    if (!r.all_ok) return {false, rep.label + " leaks " + fmt(r.max_dev)};
    inv = std::max(inv, r.max_dev);
  }

  // Zero field: identically vanishing residual.
  const Superfield zero = from_polynomial(SuperPolynomial::constant(
      2, Supernumber(2)));
  const double zdev =
      point_max(skdv_residual_point(zero, 1.25, 0.7, 0.4));
  if (zdev > 1e-12) return {false, "zero-field residual " + fmt(zdev)};

  // θ-free field: the body row collapses to the classical component
  // u_t + u_xxx − 3a·u²·u_x and the fermionic rows vanish (the θ1θ2 row
  // keeps its bosonic remainder, which is not constrained here).
  const unsigned n = 2;
  const double a = 1.25;
  const SuperPolynomial u =
      SuperPolynomial::monomial(n, SuperPolynomial::Key{6, 0, 0},
                                Supernumber::body_element(n + 2, 0.3)) +
      SuperPolynomial::monomial(n, SuperPolynomial::Key{2, 2, 0},
                                Supernumber::body_element(n + 2, 0.2));
  const Superfield f = from_polynomial(u);
  double cdev = 0.0;
  for (const auto& [x, t] : std::vector<std::pair<double, double>>{
           {0.7, 0.4}, {-0.5, 1.1}}) {
    const FieldPoint r = skdv_residual_point(f, a, x, t);
    const double uv = 0.3 * x * x * x + 0.2 * x * t;
    const double ux = 0.9 * x * x + 0.2 * t;
    const double classical = 0.2 * x + 1.8 - 3.0 * a * uv * uv * ux;
    cdev = std::max(cdev, std::abs(r.a0.body() - classical));
    cdev = std::max(cdev, r.a0.soul().max_abs_coeff());
    cdev = std::max(cdev,
                    std::max(r.a1.max_abs_coeff(), r.a2.max_abs_coeff()));
  }
  const bool pass = cdev <= 1e-9;
  return {pass, "table exact, invariants dev " + fmt(inv) +
                    ", classical-component dev " + fmt(cdev)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"frozen supercommutation table", 1.0, bracket_table},
      {"operator identities on random superfields", 10.0,
       operator_identities},
      {"invariant annihilation for all 16 families", 30.0,
       invariant_annihilation},
      {"reduced-residual correspondence (standard families)", 60.0,
       residual_correspondence},
      {"bosonic travelling wave: energy, certificate, quadrature", 0.0,
       bosonic_travelling_wave},
      {"nilpotent sensitivities and odd constraint", 0.0,
       nilpotent_sensitivities},
      {"one-supersymmetry mirror and restricted ring", 0.0,
       supersymmetry_mirror},
      {"elliptic layer: Jacobi, Weierstrass, quartic invariants", 0.0,
       elliptic_layer},
      {"null-only families force the zero solution", 0.0, null_only_families},
      {"supersymmetry-flow covariance of a certified solution", 0.0,
       flow_covariance},
      {"KdV fixture: table, invariants, residual", 0.0, kdv_fixture}};

  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto c0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
            .count();
    bool pass = out.pass;
    std::string budget_note;
    if (c.budget_s > 0.0) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), ", budget %.0f s", c.budget_s);
      budget_note = buf;
      if (secs >= c.budget_s) {
        pass = false;
        budget_note += " EXCEEDED";
      }
    }
    if (!pass) ++failed;
    std::printf("[%s] %2zu %-55s %s (%.2f s%s)\n", pass ? "PASS" : "FAIL",
                i + 1, c.name.c_str(), out.detail.c_str(), secs,
                budget_note.c_str());
    std::fflush(stdout);
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool in_budget = total < 300.0;
  std::printf("acceptance: %zu/%zu criteria passed in %.1f s%s\n",
              criteria.size() - failed, criteria.size(), total,
              in_budget ? "" : " (EXCEEDED the 300 s budget)");
  return (failed == 0 && in_budget) ? 0 : 1;
}
