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

#include "supersinh/fieldcalc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace supersinh {

// ---------------------------------------------------------------------------
// Jet
// ---------------------------------------------------------------------------

namespace {

constexpr int kJetIndex[4][4] = {
    // [jx][jt] with jx + jt ≤ 3; -1 elsewhere
    {0, 2, 5, 9},
    {1, 4, 8, -1},
    {3, 7, -1, -1},
    {6, -1, -1, -1},
};

double binom(int n, int k) {
  static const double table[4][4] = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  return table[n][k];
}

}  // namespace

Jet::Jet(unsigned n_generators, int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw ConfigError("jet order must lie in [0, 3]");
  }
  slots_.fill(Supernumber(n_generators));
}

Jet Jet::constant(const Supernumber& v, int order) {
  Jet j(v.generators(), order);
  j.slots_[0] = v;
  return j;
}

Jet Jet::coordinate_x(unsigned n, double x, int order) {
  Jet j(n, order);
  j.slots_[0] = Supernumber::body_element(n, x);
  if (order >= 1) j.slots_[index(1, 0)] = Supernumber::body_element(n, 1.0);
  return j;
}

Jet Jet::coordinate_t(unsigned n, double t, int order) {
  Jet j(n, order);
  j.slots_[0] = Supernumber::body_element(n, t);
  if (order >= 1) j.slots_[index(0, 1)] = Supernumber::body_element(n, 1.0);
  return j;
}

int Jet::index(int jx, int jt) {
  if (jx < 0 || jt < 0 || jx + jt > kMaxOrder) {
    throw ConfigError("jet partial out of range");
  }
  return kJetIndex[jx][jt];
}

const Supernumber& Jet::at(int jx, int jt) const {
  const int i = index(jx, jt);
  if (jx + jt > order_) {
    throw ConfigError("jet partial beyond available order");
  }
  return slots_[i];
}

Supernumber& Jet::at(int jx, int jt) {
  const int i = index(jx, jt);
  if (jx + jt > order_) {
    throw ConfigError("jet partial beyond available order");
  }
  return slots_[i];
}

Jet Jet::operator-() const {
  Jet out(*this);
  for (auto& s : out.slots_) s = -s;
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int i = 0; i < kSlots; ++i) slots_[i] += rhs.slots_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int i = 0; i < kSlots; ++i) slots_[i] -= rhs.slots_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& v : slots_) v *= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) {
  a += b;
  return a;
}

Jet operator-(Jet a, const Jet& b) {
  a -= b;
  return a;
}

Jet operator*(Jet a, double s) {
  a *= s;
  return a;
}

Jet operator*(double s, Jet a) {
  a *= s;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int order = std::min(a.order(), b.order());
  Jet out(a.generators(), order);
  for (int kx = 0; kx <= order; ++kx) {
    for (int kt = 0; kx + kt <= order; ++kt) {
      Supernumber acc(a.generators());
      for (int jx = 0; jx <= kx; ++jx) {
        for (int jt = 0; jt <= kt; ++jt) {
          acc += binom(kx, jx) * binom(kt, jt) *
                 gmul(a.at(jx, jt), b.at(kx - jx, kt - jt));
        }
      }
      out.at(kx, kt) = acc;
    }
  }
  return out;
}

Jet lmul(const Supernumber& c, const Jet& j) {
  Jet out(j.generators(), j.order());
  for (int kx = 0; kx <= j.order(); ++kx) {
    for (int kt = 0; kx + kt <= j.order(); ++kt) {
      out.at(kx, kt) = gmul(c, j.at(kx, kt));
    }
  }
  return out;
}

Jet rmul(const Jet& j, const Supernumber& c) {
  Jet out(j.generators(), j.order());
  for (int kx = 0; kx <= j.order(); ++kx) {
    for (int kt = 0; kx + kt <= j.order(); ++kt) {
      out.at(kx, kt) = gmul(j.at(kx, kt), c);
    }
  }
  return out;
}

Jet shift_x(const Jet& j) {
  if (j.order() < 1) {
    throw ConfigError("shift_x: jet has no derivative data left");
  }
  Jet out(j.generators(), j.order() - 1);
  for (int kx = 0; kx <= out.order(); ++kx) {
    for (int kt = 0; kx + kt <= out.order(); ++kt) {
      out.at(kx, kt) = j.at(kx + 1, kt);
    }
  }
  return out;
}

Jet shift_t(const Jet& j) {
  if (j.order() < 1) {
    throw ConfigError("shift_t: jet has no derivative data left");
  }
  Jet out(j.generators(), j.order() - 1);
  for (int kx = 0; kx <= out.order(); ++kx) {
    for (int kt = 0; kx + kt <= out.order(); ++kt) {
      out.at(kx, kt) = j.at(kx, kt + 1);
    }
  }
  return out;
}

Jet theta_derivative(const Jet& j, unsigned generator_index) {
  Jet out(j.generators(), j.order());
  for (int kx = 0; kx <= j.order(); ++kx) {
    for (int kt = 0; kx + kt <= j.order(); ++kt) {
      out.at(kx, kt) = j.at(kx, kt).left_derivative(generator_index);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Superfield basics
// ---------------------------------------------------------------------------

void FieldPoint::check_parity(bool even_field) const {
  const Parity body_parity = even_field ? Parity::Even : Parity::Odd;
  const Parity wing_parity = even_field ? Parity::Odd : Parity::Even;
  if (!a0.has_parity(body_parity) || !a12.has_parity(body_parity) ||
      !a1.has_parity(wing_parity) || !a2.has_parity(wing_parity)) {
    throw ParityError("superfield components have inconsistent parities");
  }
}

std::array<Jet, 4> eval_jets(const Superfield& f, double x, double t) {
  return {f.a0(x, t), f.a1(x, t), f.a2(x, t), f.a12(x, t)};
}

FieldPoint eval_point(const Superfield& f, double x, double t) {
  auto j = eval_jets(f, x, t);
  return FieldPoint{j[0].value(), j[1].value(), j[2].value(), j[3].value()};
}

Supernumber pack_point(const FieldPoint& p) {
  return pack_components(p.a0, p.a1, p.a2, p.a12);
}

FieldPoint unpack_point(const Supernumber& v, unsigned n_base) {
  auto c = unpack_components(v, n_base);
  return FieldPoint{c[0], c[1], c[2], c[3]};
}

Superfield from_polynomial(const SuperPolynomial& p) {
  for (const auto& [k, c] : p.terms()) {
    if (k.up != 0) {
      throw ConfigError("from_polynomial: polynomial depends on the field u");
    }
  }
  const unsigned n = p.base_generators();
  // Precompute all (x, t)-derivative polynomials once.
  auto table = std::make_shared<std::array<SuperPolynomial, Jet::kSlots>>();
  table->fill(SuperPolynomial(n));
  for (int jx = 0; jx <= 3; ++jx) {
    SuperPolynomial px = p;
    for (int r = 0; r < jx; ++r) px = px.derivative(Var::x);
    for (int jt = 0; jx + jt <= 3; ++jt) {
      (*table)[Jet::index(jx, jt)] = px;
      px = px.derivative(Var::t);
    }
  }
  auto component = [n, table](unsigned theta_mask) -> ComponentJetFn {
    return [n, table, theta_mask](double x, double t) -> Jet {
      Jet j(n, 3);
      for (int jx = 0; jx <= 3; ++jx) {
        for (int jt = 0; jx + jt <= 3; ++jt) {
          const Supernumber v = (*table)[Jet::index(jx, jt)].evaluate(x, t);
          j.at(jx, jt) = unpack_components(v, n)[theta_mask];
        }
      }
      return j;
    };
  };
  Superfield f;
  f.n_base = n;
  f.jet_order = 3;
  f.a0 = component(0);
  f.a1 = component(1);
  f.a2 = component(2);
  f.a12 = component(3);
  return f;
}

namespace {

/// One-dimensional central-difference stencils (offset, weight·h^order).
struct Stencil {
  std::vector<std::pair<int, double>> taps;  // weight divided by h^order later
  int order;
};

Stencil stencil_for(int order) {
  switch (order) {
    case 0:
      return {{{0, 1.0}}, 0};
    case 1:
      return {{{1, 0.5}, {-1, -0.5}}, 1};
    case 2:
      return {{{1, 1.0}, {0, -2.0}, {-1, 1.0}}, 2};
    case 3:
      return {{{2, 0.5}, {1, -1.0}, {-1, 1.0}, {-2, -0.5}}, 3};
    default:
      throw ConfigError("finite differences support order ≤ 3");
  }
}

Supernumber fd_partial(const ComponentValueFn& fn, unsigned n, double x,
                       double t, int jx, int jt, double h) {
  const Stencil sx = stencil_for(jx);
  const Stencil st = stencil_for(jt);
  auto apply = [&](double step) {
    Supernumber acc(n);
    for (auto [ox, wx] : sx.taps) {
      for (auto [ot, wt] : st.taps) {
        acc += fn(x + ox * step, t + ot * step) * (wx * wt);
      }
    }
    return acc * (1.0 / std::pow(step, jx + jt));
  };
  if (jx + jt == 0) return fn(x, t);
  // All stencils above have O(h²) truncation error; a single Richardson
  // step with h and h/2 removes it.
  const Supernumber coarse = apply(h);
  const Supernumber fine = apply(h / 2);
  return (fine * 4.0 - coarse) * (1.0 / 3.0);
}

}  // namespace

Superfield from_values(unsigned n_base, ComponentValueFn a0,
                       ComponentValueFn a1, ComponentValueFn a2,
                       ComponentValueFn a12, int jet_order, double h) {
  if (jet_order < 0 || jet_order > 3) {
    throw ConfigError("from_values: jet order must lie in [0, 3]");
  }
  auto wrap = [n_base, jet_order, h](ComponentValueFn fn) -> ComponentJetFn {
    return [n_base, jet_order, h, fn](double x, double t) -> Jet {
      Jet j(n_base, jet_order);
      for (int jx = 0; jx <= jet_order; ++jx) {
        for (int jt = 0; jx + jt <= jet_order; ++jt) {
          // Third-order stencils with tiny h lose ~h³ digits to
          // cancellation; widen the step for them.
          const double step = (jx + jt >= 3) ? std::max(h, 1e-3) : h;
          j.at(jx, jt) = fd_partial(fn, n_base, x, t, jx, jt, step);
        }
      }
      return j;
    };
  };
  Superfield f;
  f.n_base = n_base;
  f.jet_order = jet_order;
  f.a0 = wrap(std::move(a0));
  f.a1 = wrap(std::move(a1));
  f.a2 = wrap(std::move(a2));
  f.a12 = wrap(std::move(a12));
  return f;
}

namespace {

Superfield map_components(const Superfield& f, int order_drop,
                          std::function<std::array<Jet, 4>(std::array<Jet, 4>)>
                              mapper) {
  auto src = std::make_shared<Superfield>(f);
  auto shared_mapper =
      std::make_shared<decltype(mapper)>(std::move(mapper));
  auto component = [src, shared_mapper](int which) -> ComponentJetFn {
    return [src, shared_mapper, which](double x, double t) -> Jet {
      auto jets = eval_jets(*src, x, t);
      return (*shared_mapper)(std::move(jets))[which];
    };
  };
  Superfield out;
  out.n_base = f.n_base;
  out.jet_order = f.jet_order - order_drop;
  if (out.jet_order < 0) {
    throw ConfigError("superspace operator: jet order exhausted");
  }
  out.a0 = component(0);
  out.a1 = component(1);
  out.a2 = component(2);
  out.a12 = component(3);
  return out;
}

}  // namespace

Superfield apply_Dx(const Superfield& f) {
  // D_x(a0 + θ₁a1 + θ₂a2 + θ₁θ₂a12) = a1 + θ₁·∂x a0 + θ₂·a12 + θ₁θ₂·∂x a2
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {a[1], shift_x(a[0]), a[3], shift_x(a[2])};
  });
}

Superfield apply_Dt(const Superfield& f) {
  // D_t Φ = a2 − θ₁·a12 − θ₂·∂t a0 + θ₁θ₂·∂t a1
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {a[2], -a[3], -shift_t(a[0]), shift_t(a[1])};
  });
}

Superfield apply_Qx(const Superfield& f) {
  // Q_x Φ = a1 − θ₁·∂x a0 + θ₂·a12 − θ₁θ₂·∂x a2
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {a[1], -shift_x(a[0]), a[3], -shift_x(a[2])};
  });
}

Superfield apply_Qt(const Superfield& f) {
  // Q_t Φ = a2 − θ₁·a12 + θ₂·∂t a0 − θ₁θ₂·∂t a1
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {a[2], -a[3], shift_t(a[0]), -shift_t(a[1])};
  });
}

Superfield apply_dx(const Superfield& f) {
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {shift_x(a[0]), shift_x(a[1]), shift_x(a[2]), shift_x(a[3])};
  });
}

Superfield apply_dt(const Superfield& f) {
  return map_components(f, 1, [](std::array<Jet, 4> a) -> std::array<Jet, 4> {
    return {shift_t(a[0]), shift_t(a[1]), shift_t(a[2]), shift_t(a[3])};
  });
}

Superfield operator+(const Superfield& f, const Superfield& g) {
  if (f.n_base != g.n_base) {
    throw ConfigError("superfield sum: ring mismatch");
  }
  auto fs = std::make_shared<Superfield>(f);
  auto gs = std::make_shared<Superfield>(g);
  auto component = [fs, gs](ComponentJetFn Superfield::*member) -> ComponentJetFn {
    return [fs, gs, member](double x, double t) {
      return ((*fs).*member)(x, t) + ((*gs).*member)(x, t);
    };
  };
  Superfield out;
  out.n_base = f.n_base;
  out.jet_order = std::min(f.jet_order, g.jet_order);
  out.a0 = component(&Superfield::a0);
  out.a1 = component(&Superfield::a1);
  out.a2 = component(&Superfield::a2);
  out.a12 = component(&Superfield::a12);
  return out;
}

Superfield operator-(const Superfield& f, const Superfield& g) {
  return f + (-1.0 * g);
}

Superfield operator*(double s, const Superfield& f) {
  auto fs = std::make_shared<Superfield>(f);
  auto component = [fs, s](ComponentJetFn Superfield::*member) -> ComponentJetFn {
    return [fs, s, member](double x, double t) {
      return ((*fs).*member)(x, t) * s;
    };
  };
  Superfield out;
  out.n_base = f.n_base;
  out.jet_order = f.jet_order;
  out.a0 = component(&Superfield::a0);
  out.a1 = component(&Superfield::a1);
  out.a2 = component(&Superfield::a2);
  out.a12 = component(&Superfield::a12);
  return out;
}

// ---------------------------------------------------------------------------
// Residuals
// ---------------------------------------------------------------------------

FieldPoint sinh_point(const FieldPoint& p) {
  const Supernumber packed = pack_point(p);
  return unpack_point(gsinh(packed), p.a0.generators());
}

FieldPoint shg_residual_point(const Superfield& f, double x, double t) {
  if (f.jet_order < 2) {
    throw ConfigError("shg_residual_point: requires jets of order 2");
  }
  auto j = eval_jets(f, x, t);
  const FieldPoint value{j[0].value(), j[1].value(), j[2].value(),
                         j[3].value()};
  const FieldPoint sh = sinh_point(value);
  FieldPoint r;
  r.a0 = -value.a12 - sh.a0;
  r.a1 = j[2].at(1, 0) - sh.a1;
  r.a2 = j[1].at(0, 1) - sh.a2;
  r.a12 = -j[0].at(1, 1) - sh.a12;
  return r;
}

FieldPoint skdv_residual_point(const Superfield& f, double a, double x,
                               double t) {
  if (f.jet_order < 3) {
    throw ConfigError("skdv_residual_point: requires jets of order 3");
  }
  const unsigned n = f.n_base;
  auto j = eval_jets(f, x, t);

  auto pack_slot = [&](int jx, int jt) {
    return pack_components(j[0].at(jx, jt), j[1].at(jx, jt), j[2].at(jx, jt),
                           j[3].at(jx, jt));
  };
  const Supernumber A = pack_slot(0, 0);
  const Supernumber At = pack_slot(0, 1);
  const Supernumber Ax = pack_slot(1, 0);
  const Supernumber Axx = pack_slot(2, 0);
  const Supernumber Axxx = pack_slot(3, 0);

  const unsigned g1 = theta_generator(n, 0);
  const unsigned g2 = theta_generator(n, 1);
  const Supernumber th1 = Supernumber::generator(n + 2, g1);
  const Supernumber th2 = Supernumber::generator(n + 2, g2);

  auto d1 = [&](const Supernumber& v) { return v.left_derivative(g1); };
  auto d2 = [&](const Supernumber& v) { return v.left_derivative(g2); };

  const Supernumber A_t1 = d1(A), A_t2 = d2(A);
  const Supernumber Ax_t1 = d1(Ax), Ax_t2 = d2(Ax);
  const Supernumber Axx_t1 = d1(Axx), Axx_t2 = d2(Axx);
  const Supernumber A_t1t2 = d2(d1(A));
  const Supernumber Ax_t1t2 = d2(d1(Ax));

  Supernumber R = At + Axxx;
  R += gmul(gmul(gmul(th1, th2), Ax), Axx) * (-3.0 * a);
  R += gmul(gmul(th1, A), Axx_t2) * (-(a + 2.0));
  R += gmul(gmul(gmul(th1, th2), A), Axxx) * (-(a + 2.0));
  R += gmul(gmul(th2, A), Axx_t1) * (a + 2.0);
  R += gmul(gmul(th2, Ax), Ax_t1) * (2.0 * a + 1.0);
  R += gmul(Ax, A_t1t2) * (a + 2.0);
  R += gmul(A, Ax_t1t2) * (a + 2.0);
  R += gmul(gmul(th1, Ax), Ax_t2) * (-(2.0 * a + 1.0));
  R += gmul(gmul(th1, A_t2), Axx) * (-(a - 1.0));
  R += gmul(gmul(th2, A_t1), Axx) * (a - 1.0);
  R += gmul(A_t1, Ax_t2) * (-(a - 1.0));
  R += gmul(A_t2, Ax_t1) * (a - 1.0);
  R += gmul(gmul(A, A), Ax) * (-3.0 * a);

  return unpack_point(R, n);
}

// ---------------------------------------------------------------------------
// Grid surveys
// ---------------------------------------------------------------------------

std::string ResidualReport::summary() const {
  std::ostringstream os;
  os << "residual over [" << window.x0 << ", " << window.x1 << "]×["
     << window.t0 << ", " << window.t1 << "] (" << nx << "×" << nt
     << "): overall max |coeff| = " << overall << " at (x, t) = (" << worst_x
     << ", " << worst_t << "), component " << worst_component;
  return os.str();
}

unsigned worker_count_from_env(int rows) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("SUPERSINH_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || parsed < 1) {
      throw ConfigError("SUPERSINH_THREADS must be a positive integer");
    }
    workers = static_cast<unsigned>(parsed);
  }
  return std::min<unsigned>(workers, static_cast<unsigned>(std::max(rows, 1)));
}

ResidualReport survey_residual(const PointResidualFn& residual,
                               unsigned n_base, const Window& window, int nx,
                               int nt) {
  if (nx < 2 || nt < 2) {
    throw ConfigError("survey_residual: grid needs at least 2×2 points");
  }
  if (!(window.x1 > window.x0) || !(window.t1 > window.t0)) {
    throw DomainError("survey_residual: empty window");
  }
  ResidualReport rep;
  rep.window = window;
  rep.nx = nx;
  rep.nt = nt;
  rep.monomial_max.assign(std::size_t{1} << n_base, 0.0);

  struct Local {
    std::array<double, 4> component_max{};
    std::vector<double> monomial_max;
    double overall = -1.0;
    double worst_x = 0, worst_t = 0;
    int worst_component = 0;
  };

  const unsigned workers = worker_count_from_env(nt);
  std::vector<Local> locals(workers);
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run_rows = [&](unsigned w) {
    Local& loc = locals[w];
    loc.monomial_max.assign(std::size_t{1} << n_base, 0.0);
    try {
      for (int it = static_cast<int>(w); it < nt;
           it += static_cast<int>(workers)) {
        const double t =
            window.t0 + (window.t1 - window.t0) * it / double(nt - 1);
        for (int ix = 0; ix < nx; ++ix) {
          const double x =
              window.x0 + (window.x1 - window.x0) * ix / double(nx - 1);
          const FieldPoint r = residual(x, t);
          const std::array<const Supernumber*, 4> comps{&r.a0, &r.a1, &r.a2,
                                                        &r.a12};
          for (int c = 0; c < 4; ++c) {
            const double m = comps[c]->max_abs_coeff();
            loc.component_max[c] = std::max(loc.component_max[c], m);
            if (m > loc.overall) {
              loc.overall = m;
              loc.worst_x = x;
              loc.worst_t = t;
              loc.worst_component = c;
            }
            for (std::uint32_t mask = 0; mask < comps[c]->dimension();
                 ++mask) {
              loc.monomial_max[mask] =
                  std::max(loc.monomial_max[mask], std::abs((*comps[c])[mask]));
            }
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers == 1) {
    run_rows(0);
  } else {
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_rows, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  rep.overall = 0.0;
  for (const Local& loc : locals) {
    for (int c = 0; c < 4; ++c) {
      rep.component_max[c] = std::max(rep.component_max[c], loc.component_max[c]);
    }
    for (std::size_t m = 0; m < rep.monomial_max.size(); ++m) {
      rep.monomial_max[m] = std::max(rep.monomial_max[m], loc.monomial_max[m]);
    }
    if (loc.overall > rep.overall) {
      rep.overall = loc.overall;
      rep.worst_x = loc.worst_x;
      rep.worst_t = loc.worst_t;
      rep.worst_component = loc.worst_component;
    }
  }
  return rep;
}

ResidualReport shg_residual(const Superfield& f, const Window& window, int nx,
                            int nt) {
  return survey_residual(
      [&f](double x, double t) { return shg_residual_point(f, x, t); },
      f.n_base, window, nx, nt);
}

ResidualReport skdv_residual(const Superfield& f, double a,
                             const Window& window, int nx, int nt) {
  return survey_residual(
      [&f, a](double x, double t) { return skdv_residual_point(f, a, x, t); },
      f.n_base, window, nx, nt);
}

}  // namespace supersinh
