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

#include "supersinh/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "supersinh/errors.hpp"

namespace supersinh {

// ---------------------------------------------------------------------------
// CurveFn
// ---------------------------------------------------------------------------

CurveFn::CurveFn() {
  fn_ = [](int, double) { return Supernumber(0); };
}

CurveFn CurveFn::zero(unsigned n_generators) {
  return analytic(
      n_generators,
      [n_generators](int, double) { return Supernumber(n_generators); });
}

CurveFn CurveFn::analytic(unsigned n_generators,
                          std::function<Supernumber(int, double)> derivs,
                          int max_order) {
  if (max_order < 0 || max_order > kMaxOrder) {
    throw ConfigError("curve max_order out of range");
  }
  CurveFn c;
  c.kind_ = Kind::Analytic;
  c.n_ = n_generators;
  c.max_order_ = max_order;
  c.fn_ = std::move(derivs);
  return c;
}

CurveFn CurveFn::tabulated(std::vector<double> nodes,
                           std::vector<std::vector<Supernumber>> grids) {
  if (nodes.size() < 6) {
    throw ConfigError("tabulated curve needs at least 6 nodes");
  }
  if (grids.empty() || grids.size() > kMaxOrder + 1) {
    throw ConfigError("tabulated curve needs 1..6 derivative grids");
  }
  const double h = nodes[1] - nodes[0];
  if (!(h > 0)) throw ConfigError("curve nodes must ascend");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (std::abs(nodes[i] - nodes[i - 1] - h) > 1e-9 * (1.0 + std::abs(h))) {
      throw ConfigError("curve nodes must be uniform");
    }
  }
  const unsigned n = grids[0][0].generators();
  for (const auto& g : grids) {
    if (g.size() != nodes.size()) {
      throw ConfigError("curve grid length mismatch");
    }
    for (const auto& v : g) {
      if (v.generators() != n) {
        throw ConfigError("curve grid ring size mismatch");
      }
    }
  }
  CurveFn c;
  c.kind_ = Kind::Tabulated;
  c.n_ = n;
  c.max_order_ = static_cast<int>(grids.size()) - 1;
  c.nodes_ = std::move(nodes);
  c.grids_ = std::move(grids);
  return c;
}

std::pair<double, double> CurveFn::domain() const {
  if (kind_ == Kind::Analytic) {
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  return {nodes_.front(), nodes_.back()};
}

Supernumber CurveFn::operator()(int order, double sigma) const {
  if (order < 0 || order > max_order_) {
    throw ConfigError("curve derivative order " + std::to_string(order) +
                      " unavailable (max " + std::to_string(max_order_) +
                      ")");
  }
  if (kind_ == Kind::Analytic) return fn_(order, sigma);

  const auto& grid = grids_[order];
  const std::size_t m = nodes_.size();
  const double s0 = nodes_.front();
  const double h = nodes_[1] - nodes_[0];
  if (sigma < s0 - 0.5 * h || sigma > nodes_.back() + 0.5 * h) {
    throw DomainError("curve evaluated outside its tabulated range");
  }
  auto i0 = static_cast<long>(std::floor((sigma - s0) / h)) - 2;
  i0 = std::clamp(i0, 0L, static_cast<long>(m) - 6);

  Supernumber acc(n_);
  for (int k = 0; k < 6; ++k) {  // 6-point Lagrange weights
    const double xk = nodes_[i0 + k];
    double w = 1.0;
    for (int j = 0; j < 6; ++j) {
      if (j == k) continue;
      w *= (sigma - nodes_[i0 + j]) / (xk - nodes_[i0 + j]);
    }
    acc += w * grid[i0 + k];
  }
  return acc;
}

Supernumber CurveFn::eval_ring(const Supernumber& sigma, int order) const {
  const unsigned N = std::max(sigma.generators(), n_);
  const Supernumber sw = sigma.widened(N);
  const Supernumber soul = sw.soul();
  if (!soul.has_parity(Parity::Even)) {
    throw ParityError("curve arguments must be even supernumbers");
  }
  const double b = sw.body();
  Supernumber acc = (*this)(order, b).widened(N);
  Supernumber pw = soul;
  double fact = 1.0;
  for (int k = 1; !pw.is_zero(0.0); ++k) {
    if (order + k > max_order_) {
      throw ConfigError("curve derivative order insufficient for the ring "
                        "argument's nilpotent shift");
    }
    fact *= k;
    acc += gmul((*this)(order + k, b).widened(N), pw) * (1.0 / fact);
    pw = gmul(pw, soul);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Truncated σ-Taylor arithmetic (solver-internal)
// ---------------------------------------------------------------------------

namespace {

constexpr int kSer = CurveFn::kMaxOrder + 1;  // derivative orders 0..5
constexpr double kConstraintTolerance = 1e-10;

constexpr double kBinom[kSer][kSer] = {
    {1, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0},  {1, 2, 1, 0, 0, 0},
    {1, 3, 3, 1, 0, 0},  {1, 4, 6, 4, 1, 0},  {1, 5, 10, 10, 5, 1},
};
constexpr double kFact[kSer] = {1, 1, 2, 6, 24, 120};

/// d[j] = j-th σ-derivative along the solution (not divided by j!).
struct Series {
  std::array<Supernumber, kSer> d;
  explicit Series(unsigned n = 0) { d.fill(Supernumber(n)); }
};

Series svar(double sigma, unsigned n) {
  Series s(n);
  s.d[0] = Supernumber::body_element(n, sigma);
  s.d[1] = Supernumber::body_element(n, 1.0);
  return s;
}

Series sadd(const Series& a, const Series& b) {
  Series out = a;
  for (int j = 0; j < kSer; ++j) out.d[j] += b.d[j];
  return out;
}

Series ssub(const Series& a, const Series& b) {
  Series out = a;
  for (int j = 0; j < kSer; ++j) out.d[j] -= b.d[j];
  return out;
}

Series sscale(const Series& a, double c) {
  Series out = a;
  for (int j = 0; j < kSer; ++j) out.d[j] *= c;
  return out;
}

Series slmul(const Supernumber& c, const Series& a) {
  Series out(a.d[0].generators());
  for (int j = 0; j < kSer; ++j) out.d[j] = gmul(c, a.d[j]);
  return out;
}

Series smul(const Series& a, const Series& b) {
  Series out(a.d[0].generators());
  for (int j = 0; j < kSer; ++j) {
    Supernumber acc(a.d[0].generators());
    for (int i = 0; i <= j; ++i) {
      acc += kBinom[j][i] * gmul(a.d[i], b.d[j - i]);
    }
    out.d[j] = acc;
  }
  return out;
}

/// Reciprocal of an even series (body invertible).
Series sinv(const Series& a) {
  const unsigned n = a.d[0].generators();
  Series v(n);
  v.d[0] = ginv(a.d[0]);
  for (int j = 1; j < kSer; ++j) {
    Supernumber acc(n);
    for (int i = 0; i < j; ++i) {
      acc += kBinom[j][i] * gmul(v.d[i], a.d[j - i]);
    }
    v.d[j] = -gmul(acc, v.d[0]);
  }
  return v;
}

/// sinh and cosh of a series, grown jointly from S′ = C·u′, C′ = S·u′.
std::pair<Series, Series> ssinhcosh(const Series& u) {
  const unsigned n = u.d[0].generators();
  Series sh(n), ch(n);
  sh.d[0] = gsinh(u.d[0]);
  ch.d[0] = gcosh(u.d[0]);
  for (int j = 0; j + 1 < kSer; ++j) {
    Supernumber ds(n), dc(n);
    for (int i = 0; i <= j; ++i) {
      ds += kBinom[j][i] * gmul(ch.d[i], u.d[j - i + 1]);
      dc += kBinom[j][i] * gmul(sh.d[i], u.d[j - i + 1]);
    }
    sh.d[j + 1] = ds;
    ch.d[j + 1] = dc;
  }
  return {sh, ch};
}

using TaylorRhs =
    std::function<std::vector<Series>(const Series&, const std::vector<Series>&)>;
using OutputMap = std::function<std::array<Series, 4>(
    const Series&, const std::vector<Series>&)>;

/// Fill the σ-derivatives of the state at one node by Taylor-mode
/// recursion on y′ = F(σ, y): the (k+1)-th derivative of y is the k-th
/// derivative entry of F evaluated with entries known up to order k.
std::vector<Series> node_series(const TaylorRhs& rhs, double sigma,
                                const std::vector<Supernumber>& y,
                                unsigned n) {
  const Series sv = svar(sigma, n);
  std::vector<Series> yh(y.size(), Series(n));
  for (std::size_t i = 0; i < y.size(); ++i) yh[i].d[0] = y[i];
  for (int k = 0; k + 1 < kSer; ++k) {
    const auto F = rhs(sv, yh);
    for (std::size_t i = 0; i < y.size(); ++i) yh[i].d[k + 1] = F[i].d[k];
  }
  return yh;
}

struct EngineOut {
  RingTrajectory traj;
  CurveSet curves;
};

EngineOut run_reduction_engine(unsigned n, int steps, double s0, double s1,
                               const TaylorRhs& rhs, const OutputMap& omap,
                               std::vector<Supernumber> y0) {
  if (steps < 8) throw ConfigError("reduction solve needs at least 8 steps");
  if (!(s1 > s0)) throw DomainError("sigma range must be increasing");

  const RingOde ode = [&rhs, n](double s, const std::vector<Supernumber>& y) {
    const Series sv = svar(s, n);
    std::vector<Series> yh(y.size(), Series(n));
    for (std::size_t i = 0; i < y.size(); ++i) yh[i].d[0] = y[i];
    const auto F = rhs(sv, yh);
    std::vector<Supernumber> out;
    out.reserve(y.size());
    for (const auto& f : F) out.push_back(f.d[0]);
    return out;
  };
  EngineOut eng;
  eng.traj = rk4_ring(ode, std::move(y0), s0, s1, steps);

  // Runaway branches (e.g. the sign-flipped even sector) can leave the
  // representable range in finite σ; surface that as an error rather than
  // returning curves full of infinities.
  for (std::size_t i = 0; i < eng.traj.s.size(); ++i) {
    for (const auto& v : eng.traj.y[i]) {
      for (std::uint32_t mask = 0; mask < v.dimension(); ++mask) {
        if (!std::isfinite(v[mask])) {
          throw NumericalError("reduced flow became non-finite near sigma = " +
                               std::to_string(eng.traj.s[i]) +
                               "; shrink the sigma range");
        }
      }
    }
  }

  const std::size_t m = eng.traj.s.size();
  std::array<std::vector<std::vector<Supernumber>>, 4> grids;
  for (auto& g : grids) {
    g.assign(kSer, std::vector<Supernumber>(m, Supernumber(n)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto yh = node_series(rhs, eng.traj.s[i], eng.traj.y[i], n);
    const auto out = omap(svar(eng.traj.s[i], n), yh);
    for (int c = 0; c < 4; ++c) {
      for (int j = 0; j < kSer; ++j) grids[c][j][i] = out[c].d[j];
    }
  }
  eng.curves.alpha = CurveFn::tabulated(eng.traj.s, grids[0]);
  eng.curves.eta = CurveFn::tabulated(eng.traj.s, grids[1]);
  eng.curves.lambda = CurveFn::tabulated(eng.traj.s, grids[2]);
  eng.curves.beta = CurveFn::tabulated(eng.traj.s, grids[3]);
  return eng;
}

void require_parity(const Supernumber& v, Parity p, const char* what) {
  if (!v.has_parity(p)) {
    throw ParityError(std::string(what) + " has the wrong Grassmann parity");
  }
}

double checked_sign(double eps, const char* what) {
  if (eps != 1.0 && eps != -1.0) {
    throw ConfigError(std::string(what) + " requires eps = ±1");
  }
  return eps;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

ReductionClass reduction_class(SubalgebraId id) {
  switch (id) {
    case SubalgebraId::S1:
    case SubalgebraId::S4:
    case SubalgebraId::S8:
    case SubalgebraId::S12:
      return ReductionClass::OdeSystem;
    case SubalgebraId::S2:
    case SubalgebraId::S3:
    case SubalgebraId::S6:
    case SubalgebraId::S7:
    case SubalgebraId::S10:
    case SubalgebraId::S11:
      return ReductionClass::NullOnly;
    default:
      return ReductionClass::NotReducible;
  }
}

std::vector<std::string> reduced_system_description(SubalgebraId id,
                                                    double eps) {
  const std::string e1 = "E1:  beta + sinh(alpha) = 0";
  const std::string sgn = eps >= 0 ? "+" : "-";
  switch (id) {
    case SubalgebraId::S1:
      return {e1, "E2:  lambda' - eta*cosh(alpha) = 0",
              "E3:  sigma*eta' + eta/2 - lambda*cosh(alpha) = 0",
              "E4:  alpha' + sigma*alpha'' + beta*cosh(alpha) - "
              "eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S2:
      return {e1, "E2:  eta*cosh(alpha) = 0",
              "E3:  eta' - lambda*cosh(alpha) = 0",
              "E4:  beta*cosh(alpha) - eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S3:
      return {e1, "E2:  lambda' - eta*cosh(alpha) = 0",
              "E3:  lambda*cosh(alpha) = 0",
              "E4:  beta*cosh(alpha) - eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S4:
      return {e1, "E2:  lambda' - eta*cosh(alpha) = 0",
              "E3:  (" + sgn + ")eta' + lambda*cosh(alpha) = 0",
              "E4:  (" + sgn +
                  ")alpha'' - beta*cosh(alpha) + eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S6:
      return {e1, "E2:  mu*beta - eta*cosh(alpha) = 0",
              "E3:  eta' - lambda*cosh(alpha) = 0",
              "E4:  mu*eta' - beta*cosh(alpha) + eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S7:
      return {e1, "E2:  lambda' - eta*cosh(alpha) = 0",
              "E3:  mu*alpha' + lambda*cosh(alpha) = 0",
              "E4:  mu*eta' - beta*cosh(alpha) + eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S8:
      return {e1, "E2:  (" + sgn + ")lambda' - eta*cosh(alpha) = 0",
              "E3:  eta' + mu*alpha' + lambda*cosh(alpha) = 0",
              "E4:  (" + sgn +
                  ")alpha'' + mu*eta' - beta*cosh(alpha) + "
                  "eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S10:
      return {e1, "E2:  nu*alpha' - eta*cosh(alpha) = 0",
              "E3:  eta' - lambda*cosh(alpha) = 0",
              "E4:  nu*lambda' - beta*cosh(alpha) + "
              "eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S11:
      return {e1, "E2:  lambda' - eta*cosh(alpha) = 0",
              "E3:  nu*beta + lambda*cosh(alpha) = 0",
              "E4:  nu*lambda' - beta*cosh(alpha) + "
              "eta*lambda*sinh(alpha) = 0"};
    case SubalgebraId::S12:
      return {e1, "E2:  nu*alpha' - (" + sgn +
                  ")lambda' - eta*cosh(alpha) = 0",
              "E3:  eta' - lambda*cosh(alpha) = 0",
              "E4:  (" + sgn +
                  ")alpha'' + nu*lambda' - beta*cosh(alpha) + "
                  "eta*lambda*sinh(alpha) = 0"};
    default:
      throw NotReducibleError("family " + to_string(id) +
                              " has no reduced ODE system");
  }
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

ReducedSolution solve_S4(const TravellingWaveInput& in) {
  const double eps = checked_sign(in.eps, "solve_S4");
  const unsigned n = std::max({in.alpha0.generators(), in.dalpha0.generators(),
                               in.eta0.generators(), in.lambda0.generators(),
                               in.C0.generators()});
  const Supernumber a0 = in.alpha0.widened(n), p0 = in.dalpha0.widened(n);
  const Supernumber h0 = in.eta0.widened(n), l0 = in.lambda0.widened(n);
  const Supernumber c0 = in.C0.widened(n);
  require_parity(a0, Parity::Even, "alpha0");
  require_parity(p0, Parity::Even, "dalpha0");
  require_parity(h0, Parity::Odd, "eta0");
  require_parity(l0, Parity::Odd, "lambda0");
  if (max_abs_diff(gmul(h0, l0), c0) > kConstraintTolerance) {
    throw ConstraintError("eta0*lambda0 does not match C0");
  }

  const TaylorRhs rhs = [eps](const Series&, const std::vector<Series>& y) {
    const Series &A = y[0], &P = y[1], &H = y[2], &L = y[3];
    const auto [sh, ch] = ssinhcosh(A);
    std::vector<Series> f;
    f.push_back(P);
    f.push_back(sscale(smul(sh, sadd(ch, smul(H, L))), -eps));
    f.push_back(sscale(smul(L, ch), -eps));
    f.push_back(smul(H, ch));
    return f;
  };
  const OutputMap omap = [](const Series&, const std::vector<Series>& y) {
    const auto [sh, ch] = ssinhcosh(y[0]);
    (void)ch;
    return std::array<Series, 4>{y[0], y[2], y[3], sscale(sh, -1.0)};
  };
  auto eng = run_reduction_engine(n, in.steps, in.sigma0, in.sigma1, rhs,
                                  omap, {a0, p0, h0, l0});

  ReducedSolution sol;
  sol.id = SubalgebraId::S4;
  sol.eps = eps;
  sol.n_generators = n;
  sol.curves = eng.curves;
  sol.sigma_domain = {in.sigma0, in.sigma1};
  sol.odd_invariant = c0;

  const auto energy = [eps, &c0](const Supernumber& A, const Supernumber& P) {
    const Supernumber sh = gsinh(A);
    return 0.5 * eps * gmul(P, P) + 0.5 * gmul(sh, sh) + gmul(c0, gcosh(A));
  };
  const Supernumber E0 = energy(a0, p0);
  const Supernumber hl0 = gmul(h0, l0);
  for (std::size_t i = 0; i < eng.traj.s.size(); ++i) {
    const auto& y = eng.traj.y[i];
    sol.energy_drift =
        std::max(sol.energy_drift, max_abs_diff(energy(y[0], y[1]), E0));
    sol.invariant_drift =
        std::max(sol.invariant_drift, max_abs_diff(gmul(y[2], y[3]), hl0));
  }
  return sol;
}

ReducedSolution solve_S1(const ScalingInput& in) {
  if (!(in.sigma0 > 0.0)) {
    throw DomainError("solve_S1 requires sigma > 0");
  }
  const unsigned n = std::max({in.alpha0.generators(), in.dalpha0.generators(),
                               in.eta0.generators(), in.lambda0.generators(),
                               in.C0.generators()});
  const Supernumber a0 = in.alpha0.widened(n), p0 = in.dalpha0.widened(n);
  const Supernumber h0 = in.eta0.widened(n), l0 = in.lambda0.widened(n);
  const Supernumber c0 = in.C0.widened(n);
  require_parity(a0, Parity::Even, "alpha0");
  require_parity(p0, Parity::Even, "dalpha0");
  require_parity(h0, Parity::Odd, "eta0");
  require_parity(l0, Parity::Odd, "lambda0");
  if (max_abs_diff(std::sqrt(in.sigma0) * gmul(h0, l0), c0) >
      kConstraintTolerance) {
    throw ConstraintError(
        "sqrt(sigma0)*eta0*lambda0 does not match C0");
  }

  const TaylorRhs rhs = [](const Series& sig, const std::vector<Series>& y) {
    const Series &A = y[0], &P = y[1], &H = y[2], &L = y[3];
    const auto [sh, ch] = ssinhcosh(A);
    const Series inv_s = sinv(sig);
    std::vector<Series> f;
    f.push_back(P);
    f.push_back(smul(inv_s,
                     sadd(sscale(P, -1.0),
                          sadd(smul(sh, ch), smul(smul(H, L), sh)))));
    f.push_back(smul(inv_s, ssub(smul(L, ch), sscale(H, 0.5))));
    f.push_back(smul(H, ch));
    return f;
  };
  const OutputMap omap = [](const Series&, const std::vector<Series>& y) {
    const auto [sh, ch] = ssinhcosh(y[0]);
    (void)ch;
    return std::array<Series, 4>{y[0], y[2], y[3], sscale(sh, -1.0)};
  };
  auto eng = run_reduction_engine(n, in.steps, in.sigma0, in.sigma1, rhs,
                                  omap, {a0, p0, h0, l0});

  ReducedSolution sol;
  sol.id = SubalgebraId::S1;
  sol.eps = 1.0;
  sol.n_generators = n;
  sol.curves = eng.curves;
  sol.sigma_domain = {in.sigma0, in.sigma1};
  sol.odd_invariant = c0;

  const Supernumber m0 = std::sqrt(in.sigma0) * gmul(h0, l0);
  for (std::size_t i = 0; i < eng.traj.s.size(); ++i) {
    const auto& y = eng.traj.y[i];
    const Supernumber mi = std::sqrt(eng.traj.s[i]) * gmul(y[2], y[3]);
    sol.invariant_drift = std::max(sol.invariant_drift, max_abs_diff(mi, m0));
  }
  return sol;
}

namespace {

ReducedSolution solve_linear_odd(const LinearOddInput& in, SubalgebraId id) {
  const double eps = checked_sign(in.eps, "solve_S8/solve_S12");
  const bool is_s8 = (id == SubalgebraId::S8);
  const unsigned min_gen = is_s8 ? 1 : 2;
  const unsigned n = std::max({in.n_generators, in.alpha0.generators(),
                               in.dalpha0.generators(), in.f0.generators(),
                               in.df0.generators()});
  if (n < min_gen) {
    throw ConfigError("the odd constant of this family needs a base ring "
                      "with at least " + std::to_string(min_gen) +
                      " generators");
  }
  const Supernumber a0 = in.alpha0.widened(n), p0 = in.dalpha0.widened(n);
  const Supernumber f0 = in.f0.widened(n), g0 = in.df0.widened(n);
  require_parity(a0, Parity::Even, "alpha0");
  require_parity(p0, Parity::Even, "dalpha0");
  require_parity(f0, Parity::Even, "f0");
  require_parity(g0, Parity::Even, "df0");

  // f'' = tanh(α)·α'·f' − ε·cosh²α·f + source·ε·cosh(α)·α'
  const double source = is_s8 ? -1.0 : 1.0;
  const TaylorRhs rhs = [eps, source](const Series&,
                                      const std::vector<Series>& y) {
    const Series &A = y[0], &P = y[1], &F = y[2], &G = y[3];
    const auto [sh, ch] = ssinhcosh(A);
    const Series tanh_a = smul(sh, sinv(ch));
    std::vector<Series> f;
    f.push_back(P);
    f.push_back(sscale(smul(sh, ch), -eps));
    f.push_back(G);
    f.push_back(sadd(smul(smul(tanh_a, P), G),
                     sadd(sscale(smul(smul(ch, ch), F), -eps),
                          sscale(smul(ch, P), source * eps))));
    return f;
  };
  const Supernumber odd_const = Supernumber::generator(n, is_s8 ? 0 : 1);
  const OutputMap omap = [is_s8, eps, odd_const](
                             const Series&, const std::vector<Series>& y) {
    const auto [sh, ch] = ssinhcosh(y[0]);
    const Series ratio = smul(y[3], sinv(ch));  // f'/cosh α
    Series eta(odd_const.generators()), lambda(odd_const.generators());
    if (is_s8) {
      eta = sscale(slmul(odd_const, ratio), eps);  // η = ε·μ̲·f'/cosh α
      lambda = slmul(odd_const, y[2]);             // λ = μ̲·f
    } else {
      eta = slmul(odd_const, y[2]);                // η = ν̲·f
      lambda = slmul(odd_const, ratio);            // λ = ν̲·f'/cosh α
    }
    return std::array<Series, 4>{y[0], eta, lambda, sscale(sh, -1.0)};
  };
  auto eng = run_reduction_engine(n, in.steps, in.sigma0, in.sigma1, rhs,
                                  omap, {a0, p0, f0, g0});

  ReducedSolution sol;
  sol.id = id;
  sol.eps = eps;
  sol.n_generators = n;
  sol.curves = eng.curves;
  sol.sigma_domain = {in.sigma0, in.sigma1};
  sol.odd_invariant = Supernumber(n);  // η·λ vanishes identically here

  const auto energy = [eps](const Supernumber& A, const Supernumber& P) {
    const Supernumber sh = gsinh(A);
    return 0.5 * eps * gmul(P, P) + 0.5 * gmul(sh, sh);
  };
  const Supernumber E0 = energy(a0, p0);
  for (std::size_t i = 0; i < eng.traj.s.size(); ++i) {
    const auto& y = eng.traj.y[i];
    sol.energy_drift =
        std::max(sol.energy_drift, max_abs_diff(energy(y[0], y[1]), E0));
  }
  return sol;
}

}  // namespace

ReducedSolution solve_S8(const LinearOddInput& in) {
  return solve_linear_odd(in, SubalgebraId::S8);
}

ReducedSolution solve_S12(const LinearOddInput& in) {
  return solve_linear_odd(in, SubalgebraId::S12);
}

ReducedSolution null_solution(SubalgebraId id, double eps,
                              unsigned n_generators, double sigma0,
                              double sigma1) {
  if (reduction_class(id) == ReductionClass::NotReducible) {
    throw NotReducibleError("family " + to_string(id) +
                            " has no superfield reduction");
  }
  ReducedSolution sol;
  sol.id = id;
  sol.eps = eps;
  sol.n_generators = n_generators;
  sol.curves.alpha = CurveFn::zero(n_generators);
  sol.curves.eta = CurveFn::zero(n_generators);
  sol.curves.lambda = CurveFn::zero(n_generators);
  sol.curves.beta = CurveFn::zero(n_generators);
  sol.odd_invariant = Supernumber(n_generators);
  sol.sigma_domain = {sigma0, sigma1};
  sol.trivial = true;
  return sol;
}

// ---------------------------------------------------------------------------
// Reduced equations and the residual correspondence
// ---------------------------------------------------------------------------

std::array<Supernumber, 4> reduced_equations(const ReducedSolution& sol,
                                             const Supernumber& sigma_in) {
  const unsigned N = std::max(sigma_in.generators(), sol.n_generators);
  const Supernumber sigma = sigma_in.widened(N);
  const auto ev = [&sigma](const CurveFn& c, int order) {
    return c.eval_ring(sigma, order);
  };
  const Supernumber A = ev(sol.curves.alpha, 0);
  const Supernumber A1 = ev(sol.curves.alpha, 1);
  const Supernumber H = ev(sol.curves.eta, 0);
  const Supernumber H1 = ev(sol.curves.eta, 1);
  const Supernumber L = ev(sol.curves.lambda, 0);
  const Supernumber L1 = ev(sol.curves.lambda, 1);
  const Supernumber B = ev(sol.curves.beta, 0);
  const Supernumber sh = gsinh(A), ch = gcosh(A);
  const Supernumber HLs = gmul(gmul(H, L), sh);
  const Supernumber Bch = gmul(B, ch);
  const double eps = sol.eps;

  const auto mu = [&] {
    if (N < 1) throw ConfigError("mu requires a base ring generator");
    return Supernumber::generator(N, 0);
  };
  const auto nu = [&] {
    if (N < 2) throw ConfigError("nu requires two base ring generators");
    return Supernumber::generator(N, 1);
  };

  std::array<Supernumber, 4> E{Supernumber(N), Supernumber(N), Supernumber(N),
                               Supernumber(N)};
  E[0] = B + sh;
  switch (sol.id) {
    case SubalgebraId::S1: {
      const Supernumber A2 = ev(sol.curves.alpha, 2);
      E[1] = L1 - gmul(H, ch);
      E[2] = gmul(sigma, H1) + 0.5 * H - gmul(L, ch);
      E[3] = A1 + gmul(sigma, A2) + Bch - HLs;
      break;
    }
    case SubalgebraId::S2:
      E[1] = gmul(H, ch);
      E[2] = H1 - gmul(L, ch);
      E[3] = Bch - HLs;
      break;
    case SubalgebraId::S3:
      E[1] = L1 - gmul(H, ch);
      E[2] = gmul(L, ch);
      E[3] = Bch - HLs;
      break;
    case SubalgebraId::S4: {
      const Supernumber A2 = ev(sol.curves.alpha, 2);
      E[1] = L1 - gmul(H, ch);
      E[2] = eps * H1 + gmul(L, ch);
      E[3] = eps * A2 - Bch + HLs;
      break;
    }
    case SubalgebraId::S6:
      E[1] = gmul(mu(), B) - gmul(H, ch);
      E[2] = H1 - gmul(L, ch);
      E[3] = gmul(mu(), H1) - Bch + HLs;
      break;
    case SubalgebraId::S7:
      E[1] = L1 - gmul(H, ch);
      E[2] = gmul(mu(), A1) + gmul(L, ch);
      E[3] = gmul(mu(), H1) - Bch + HLs;
      break;
    case SubalgebraId::S8: {
      const Supernumber A2 = ev(sol.curves.alpha, 2);
      E[1] = eps * L1 - gmul(H, ch);
      E[2] = H1 + gmul(mu(), A1) + gmul(L, ch);
      E[3] = eps * A2 + gmul(mu(), H1) - Bch + HLs;
      break;
    }
    case SubalgebraId::S10:
      E[1] = gmul(nu(), A1) - gmul(H, ch);
      E[2] = H1 - gmul(L, ch);
      E[3] = gmul(nu(), L1) - Bch + HLs;
      break;
    case SubalgebraId::S11:
      E[1] = L1 - gmul(H, ch);
      E[2] = gmul(nu(), B) + gmul(L, ch);
      E[3] = gmul(nu(), L1) - Bch + HLs;
      break;
    case SubalgebraId::S12: {
      const Supernumber A2 = ev(sol.curves.alpha, 2);
      E[1] = gmul(nu(), A1) - eps * L1 - gmul(H, ch);
      E[2] = H1 - gmul(L, ch);
      E[3] = eps * A2 + gmul(nu(), L1) - Bch + HLs;
      break;
    }
    default:
      throw NotReducibleError("family " + to_string(sol.id) +
                              " has no reduced system");
  }
  return E;
}

double ReducedResiduals::max() const {
  return *std::max_element(rows.begin(), rows.end());
}

ReducedResiduals reduced_residuals(const ReducedSolution& sol,
                                   const std::vector<double>& sigmas) {
  ReducedResiduals rr;
  for (double s : sigmas) {
    const auto E = reduced_equations(
        sol, Supernumber::body_element(sol.n_generators, s));
    for (int i = 0; i < 4; ++i) {
      rr.rows[i] = std::max(rr.rows[i], E[i].max_abs_coeff());
    }
  }
  return rr;
}

std::array<double, 4> residual_basis_signs(SubalgebraId id) {
  switch (id) {
    case SubalgebraId::S1:  return {-1, +1, +1, -1};
    case SubalgebraId::S2:  return {-1, -1, +1, -1};
    case SubalgebraId::S3:  return {-1, +1, -1, -1};
    case SubalgebraId::S4:  return {-1, +1, -1, +1};
    case SubalgebraId::S6:  return {-1, +1, +1, +1};
    case SubalgebraId::S7:  return {-1, +1, -1, +1};
    case SubalgebraId::S8:  return {-1, +1, -1, +1};
    case SubalgebraId::S10: return {-1, +1, +1, +1};
    case SubalgebraId::S11: return {-1, +1, -1, +1};
    case SubalgebraId::S12: return {-1, +1, +1, +1};
    default:
      throw NotReducibleError("family " + to_string(id) +
                              " has no residual correspondence");
  }
}

Supernumber predicted_residual(const SubalgebraRep& rep,
                               const ReducedSolution& sol, double x,
                               double t) {
  if (!rep.standard) {
    throw NotReducibleError("family " + to_string(rep.id) +
                            " has no residual correspondence");
  }
  if (rep.id != sol.id) {
    throw ConfigError("representative and solution families differ");
  }
  if (rep.invariants[0].base_generators() != sol.n_generators) {
    throw ConfigError("representative and solution base ring sizes differ");
  }
  const Supernumber sigma = rep.invariants[0].evaluate(x, t);
  const Supernumber tau1 = rep.invariants[1].evaluate(x, t);
  const Supernumber tau2 = rep.invariants[2].evaluate(x, t);
  const auto E = reduced_equations(sol, sigma);
  const auto s = residual_basis_signs(rep.id);
  return s[0] * E[0] + gmul(tau1, s[1] * E[1]) + gmul(tau2, s[2] * E[2]) +
         gmul(gmul(tau1, tau2), s[3] * E[3]);
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

namespace {

std::array<SuperPolynomial, Jet::kSlots> derivative_table(
    const SuperPolynomial& p) {
  std::array<SuperPolynomial, Jet::kSlots> tbl{p, p, p, p, p,
                                               p, p, p, p, p};
  for (int jx = 0; jx <= Jet::kMaxOrder; ++jx) {
    for (int jt = 0; jx + jt <= Jet::kMaxOrder; ++jt) {
      SuperPolynomial d = p;
      for (int i = 0; i < jx; ++i) d = d.derivative(Var::x);
      for (int i = 0; i < jt; ++i) d = d.derivative(Var::t);
      tbl[Jet::index(jx, jt)] = d;
    }
  }
  return tbl;
}

Jet eval_poly_jet(const std::array<SuperPolynomial, Jet::kSlots>& tbl,
                  unsigned n_ext, double x, double t, int order) {
  Jet j(n_ext, order);
  for (int jx = 0; jx <= order; ++jx) {
    for (int jt = 0; jx + jt <= order; ++jt) {
      j.at(jx, jt) = tbl[Jet::index(jx, jt)].evaluate(x, t);
    }
  }
  return j;
}

/// Taylor composition of a σ-curve with a jet-valued σ whose value entry is
/// body + nilpotent soul: Σ_j f^{(j)}(body)·(σ̂ − body)^j / j!.
Jet compose_curve(const CurveFn& curve, const Jet& sig) {
  const unsigned ne = sig.generators();
  const int order = sig.order();
  const double sb = sig.value().body();

  const Supernumber soul = sig.value().soul();
  int nil = 0;
  for (Supernumber pw = soul; !pw.is_zero(0.0); pw = gmul(pw, soul)) ++nil;
  const int top = order + nil;
  if (top > curve.max_order()) {
    throw ConfigError("curve derivative order insufficient for "
                      "reconstruction at this jet order");
  }

  const Jet delta =
      sig - Jet::constant(Supernumber::body_element(ne, sb), order);
  Jet acc = Jet::constant(
      curve(top, sb).widened(ne) * (1.0 / kFact[top]), order);
  for (int j = top - 1; j >= 0; --j) {
    acc = acc * delta +
          Jet::constant(curve(j, sb).widened(ne) * (1.0 / kFact[j]), order);
  }
  return acc;
}

struct ReconstructData {
  std::array<std::array<SuperPolynomial, Jet::kSlots>, 3> inv_tables;
  CurveSet curves;
  unsigned n_base = 0;
  int jet_order = 2;
};

std::array<Jet, 4> reconstruct_components(const ReconstructData& rd, double x,
                                          double t) {
  const unsigned ne = rd.n_base + 2;
  const Jet sig = eval_poly_jet(rd.inv_tables[0], ne, x, t, rd.jet_order);
  const Jet tau1 = eval_poly_jet(rd.inv_tables[1], ne, x, t, rd.jet_order);
  const Jet tau2 = eval_poly_jet(rd.inv_tables[2], ne, x, t, rd.jet_order);

  const Jet A = compose_curve(rd.curves.alpha, sig);
  const Jet H = compose_curve(rd.curves.eta, sig);
  const Jet L = compose_curve(rd.curves.lambda, sig);
  const Jet B = compose_curve(rd.curves.beta, sig);

  const Jet phi = A + tau1 * H + tau2 * L + (tau1 * tau2) * B;

  std::array<Jet, 4> comp{Jet(rd.n_base, rd.jet_order),
                          Jet(rd.n_base, rd.jet_order),
                          Jet(rd.n_base, rd.jet_order),
                          Jet(rd.n_base, rd.jet_order)};
  for (int jx = 0; jx <= rd.jet_order; ++jx) {
    for (int jt = 0; jx + jt <= rd.jet_order; ++jt) {
      const auto parts = unpack_components(phi.at(jx, jt), rd.n_base);
      for (int c = 0; c < 4; ++c) comp[c].at(jx, jt) = parts[c];
    }
  }
  return comp;
}

}  // namespace

Superfield reconstruct(const SubalgebraRep& rep, const ReducedSolution& sol,
                       int jet_order) {
  if (!rep.standard) {
    throw NotReducibleError("family " + to_string(rep.id) +
                            " has no superfield reconstruction");
  }
  if (rep.id != sol.id) {
    throw ConfigError("representative and solution families differ");
  }
  if (jet_order < 0 || jet_order > Jet::kMaxOrder) {
    throw ConfigError("jet order out of range");
  }
  if (rep.invariants.size() != 3 ||
      rep.invariants[0].base_generators() != sol.n_generators) {
    throw ConfigError("representative and solution base ring sizes differ");
  }

  auto rd = std::make_shared<ReconstructData>();
  for (int i = 0; i < 3; ++i) {
    rd->inv_tables[i] = derivative_table(rep.invariants[i]);
  }
  rd->curves = sol.curves;
  rd->n_base = sol.n_generators;
  rd->jet_order = jet_order;

  Superfield f;
  f.n_base = sol.n_generators;
  f.jet_order = jet_order;
  f.a0 = [rd](double x, double t) { return reconstruct_components(*rd, x, t)[0]; };
  f.a1 = [rd](double x, double t) { return reconstruct_components(*rd, x, t)[1]; };
  f.a2 = [rd](double x, double t) { return reconstruct_components(*rd, x, t)[2]; };
  f.a12 = [rd](double x, double t) { return reconstruct_components(*rd, x, t)[3]; };
  return f;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

Certification certify(const Superfield& field, const Window& window,
                      double tolerance, int nx, int nt) {
  Certification c;
  c.report = shg_residual(field, window, nx, nt);
  c.tolerance = tolerance;
  c.pass = c.report.passed(tolerance);
  return c;
}

// ---------------------------------------------------------------------------
// Non-reducible families
// ---------------------------------------------------------------------------

NonReducibilityWitness non_reducibility_witness(SubalgebraId id,
                                                unsigned n_generators) {
  if (reduction_class(id) != ReductionClass::NotReducible) {
    throw ConfigError("family " + to_string(id) +
                      " is reducible; no witness exists");
  }
  NonReducibilityWitness w;
  w.id = id;

  const auto probe_gap = [&w]() {
    const Supernumber r1 = pack_point(shg_residual_point(w.field, w.x1, w.t1));
    const Supernumber r2 = pack_point(shg_residual_point(w.field, w.x2, w.t2));
    w.residual_gap = max_abs_diff(r1, r2);
  };

  if (id == SubalgebraId::S5) {
    if (n_generators < 1) {
      throw ConfigError("the S5 witness needs one base ring generator");
    }
    const unsigned n = n_generators;
    // Φ = μ̲·θ₁·x·t  — an invariant family member (prefix μ̲).
    const Supernumber coeff =
        gmul(Supernumber::generator(n + 2, 0),
             Supernumber::generator(n + 2, theta_generator(n, 0)));
    const SuperPolynomial p = SuperPolynomial::monomial(
        n, SuperPolynomial::Key{2, 2, 0}, coeff);
    w.field = from_polynomial(p);
    w.has_field = true;
    w.x1 = 0.0; w.t1 = 1.0; w.x2 = 1.0; w.t2 = 1.0;
    probe_gap();
    w.message =
        "S5 = {mu*Q_x}: invariant superfields take the form "
        "Phi = A(t, theta2) + mu*B(x, t, theta1, theta2).  The field "
        "equations of the member Phi = mu*theta1*x*t retain the explicit "
        "coordinate x (residual changes by " +
        std::to_string(w.residual_gap) +
        " between probe points), so no reduction to ODEs in an invariant "
        "variable exists.";
  } else if (id == SubalgebraId::S9) {
    if (n_generators < 2) {
      throw ConfigError("the S9 witness needs two base ring generators");
    }
    const unsigned n = n_generators;
    // Φ = ν̲·θ₂·x·t
    const Supernumber coeff =
        gmul(Supernumber::generator(n + 2, 1),
             Supernumber::generator(n + 2, theta_generator(n, 1)));
    const SuperPolynomial p = SuperPolynomial::monomial(
        n, SuperPolynomial::Key{2, 2, 0}, coeff);
    w.field = from_polynomial(p);
    w.has_field = true;
    w.x1 = 1.0; w.t1 = 0.0; w.x2 = 1.0; w.t2 = 1.0;
    probe_gap();
    w.message =
        "S9 = {nu*Q_t}: invariant superfields take the form "
        "Phi = A(x, theta1) + nu*B(x, t, theta1, theta2).  The field "
        "equations of the member Phi = nu*theta2*x*t retain the explicit "
        "coordinate t (residual changes by " +
        std::to_string(w.residual_gap) +
        " between probe points), so no reduction to ODEs in an invariant "
        "variable exists.";
  } else {
    w.message =
        to_string(id) +
        ": the only invariant free of the nilpotent prefix is the "
        "superfield itself; every invariant combination of (x, t) carries "
        "the odd prefix, so no real reduction variable sigma exists and "
        "the family admits no reduction to ODEs.";
  }
  return w;
}

void require_reducible(SubalgebraId id, unsigned n_generators) {
  if (reduction_class(id) != ReductionClass::NotReducible) return;
  throw NotReducibleError(non_reducibility_witness(id, n_generators).message);
}

// ---------------------------------------------------------------------------
// Quadrature identity
// ---------------------------------------------------------------------------

double quadrature_sigma_span(const Quartic& f, double y1, double y2,
                             double tol) {
  if (!(y2 > y1)) {
    throw DomainError("quadrature_sigma_span requires y1 < y2");
  }
  const auto body_deriv = [&f](double y) {
    return f.c[1].body() +
           y * (2.0 * f.c[2].body() +
                y * (3.0 * f.c[3].body() + y * 4.0 * f.c[4].body()));
  };
  // Endpoints that sit on (numerically approximate) zeros of f are inset by
  // a sliver d large enough to clear the root error, and the clipped piece
  // is restored with the simple-zero closed form ∫₀^d 2 ds/√(f'·s) = 4√(d/f').
  double a = y1, b = y2, correction = 0.0;
  if (f.eval_body(y1) <= 1e-8) {
    const double fp = body_deriv(y1);
    if (fp <= 1e-8) {
      throw DomainError(
          "quadrature_sigma_span: left endpoint is not a simple zero "
          "entering a positive region");
    }
    const double d = 1e-11 * std::max(1.0, std::abs(y1));
    a = y1 + d;
    correction += 4.0 * std::sqrt(d / fp);
  }
  if (f.eval_body(y2) <= 1e-8) {
    const double fp = -body_deriv(y2);
    if (fp <= 1e-8) {
      throw DomainError(
          "quadrature_sigma_span: right endpoint is not a simple zero "
          "leaving a positive region");
    }
    const double d = 1e-11 * std::max(1.0, std::abs(y2));
    b = y2 - d;
    correction += 4.0 * std::sqrt(d / fp);
  }
  if (!(b > a)) {
    throw DomainError("quadrature_sigma_span: empty interior interval");
  }
  return correction +
         tanh_sinh_quadrature(
             [&f](double y) { return 2.0 / std::sqrt(f.eval_body(y)); }, a, b,
             tol);
}

}  // namespace supersinh
