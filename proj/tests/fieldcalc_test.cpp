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

#include <cmath>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "supersinh/errors.hpp"
#include "supersinh/fieldcalc.hpp"
#include "supersinh/superspace.hpp"

#include "test_util.hpp"

using namespace supersinh;

namespace {

double point_max(const FieldPoint& p) {
  double m = 0.0;
  for (const Supernumber* c : {&p.a0, &p.a1, &p.a2, &p.a12}) {
    m = std::max(m, c->max_abs_coeff());
  }
  return m;
}

double field_dev(const Superfield& f, double x, double t) {
  return point_max(eval_point(f, x, t));
}

}  // namespace

TEST_CASE("polynomial superfields evaluate exact jets") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  const SuperPolynomial p = x * x * x * t + 2.0 * t * t;
  const Superfield f = from_polynomial(p);
  const Jet j = eval_jets(f, 1.5, -0.5)[0];
  CHECK(j.at(0, 0).body() == doctest::Approx(1.5 * 1.5 * 1.5 * -0.5 + 0.5));
  CHECK(j.at(1, 0).body() == doctest::Approx(3 * 1.5 * 1.5 * -0.5));
  CHECK(j.at(0, 1).body() == doctest::Approx(1.5 * 1.5 * 1.5 + 4 * -0.5));
  CHECK(j.at(2, 1).body() == doctest::Approx(6 * 1.5));
  CHECK(j.at(1, 1).body() == doctest::Approx(3 * 1.5 * 1.5));
}

TEST_CASE("pack and unpack field points") {
  std::mt19937_64 rng(3);
  const unsigned n = 2;
  FieldPoint p{testutil::random_value(rng, n, Parity::Even),
               testutil::random_value(rng, n, Parity::Odd),
               testutil::random_value(rng, n, Parity::Odd),
               testutil::random_value(rng, n, Parity::Even)};
  p.check_parity();
  const FieldPoint q = unpack_point(pack_point(p), n);
  CHECK(max_abs_diff(p.a0, q.a0) == 0.0);
  CHECK(max_abs_diff(p.a1, q.a1) == 0.0);
  CHECK(max_abs_diff(p.a2, q.a2) == 0.0);
  CHECK(max_abs_diff(p.a12, q.a12) == 0.0);
  // Parity violations are flagged.
  FieldPoint bad = p;
  bad.a1 = p.a0;
  CHECK_THROWS_AS(bad.check_parity(), ParityError);
}

TEST_CASE("operator anticommutators close on derivatives") {
  // {Q_x, Q_x} = -2∂x, {Q_t, Q_t} = 2∂t, {D_x, D_x} = 2∂x,
  // {D_t, D_t} = -2∂t, all mixed pairs vanish; checked on a batch of
  // pseudo-random polynomial superfields at pseudo-random points.
  std::mt19937_64 rng(20260815);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  const unsigned n = 2;
  double worst = 0.0;
  for (int k = 0; k < 30; ++k) {
    const Superfield f = from_polynomial(random_superpolynomial(rng, n, 2, 5));
    const double x = coord(rng), t = coord(rng);
    const auto acomm = [](auto&& A, auto&& B, const Superfield& g) {
      return A(B(g)) + B(A(g));
    };
    const auto qx = [](const Superfield& g) { return apply_Qx(g); };
    const auto qt = [](const Superfield& g) { return apply_Qt(g); };
    const auto dx = [](const Superfield& g) { return apply_Dx(g); };
    const auto dt = [](const Superfield& g) { return apply_Dt(g); };
    worst = std::max(worst,
                     field_dev(acomm(qx, qx, f) + 2.0 * apply_dx(f), x, t));
    worst = std::max(worst,
                     field_dev(acomm(qt, qt, f) - 2.0 * apply_dt(f), x, t));
    worst = std::max(worst,
                     field_dev(acomm(dx, dx, f) - 2.0 * apply_dx(f), x, t));
    worst = std::max(worst,
                     field_dev(acomm(dt, dt, f) + 2.0 * apply_dt(f), x, t));
    worst = std::max(worst, field_dev(acomm(qx, qt, f), x, t));
    worst = std::max(worst, field_dev(acomm(dx, dt, f), x, t));
    worst = std::max(worst, field_dev(acomm(dx, qx, f), x, t));
    worst = std::max(worst, field_dev(acomm(dx, qt, f), x, t));
    worst = std::max(worst, field_dev(acomm(dt, qx, f), x, t));
    worst = std::max(worst, field_dev(acomm(dt, qt, f), x, t));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("finite-difference jets agree with analytic jets") {
  const unsigned n = 2;
  const Supernumber soul = Supernumber::monomial(n, 0b11, 0.4);
  auto a0 = [soul, n](double x, double t) {
    return Supernumber::body_element(n, std::sin(x) * std::cos(t)) +
           x * t * soul;
  };
  auto odd1 = [n](double x, double) {
    return x * Supernumber::generator(n, 0);
  };
  auto odd2 = [n](double, double t) {
    return std::cos(t) * Supernumber::generator(n, 1);
  };
  auto a12 = [n](double x, double t) {
    return Supernumber::body_element(n, x + t * t);
  };
  const Superfield fd = from_values(n, a0, odd1, odd2, a12, 2);

  const auto jets = eval_jets(fd, 0.7, -0.3);
  CHECK(jets[0].at(1, 0).body() ==
        doctest::Approx(std::cos(0.7) * std::cos(-0.3)).epsilon(1e-8));
  CHECK(jets[0].at(1, 1)[0b11] == doctest::Approx(0.4).epsilon(1e-4));
  CHECK(jets[3].at(0, 1).body() == doctest::Approx(-0.6).epsilon(1e-7));
}

TEST_CASE("residual vanishes iff the algebraic sector is consistent") {
  // With a1 = a2 = 0 and a12 = -sinh(a0), the first residual component is
  // exactly zero and the θ1θ2 component reduces to the classical equation.
  const unsigned n = 0;
  auto a0 = [](double x, double t) {
    return Supernumber::body_element(0, 0.3 * x + 0.2 * t);
  };
  auto zero = [](double, double) { return Supernumber(0); };
  auto a12 = [](double x, double t) {
    return Supernumber::body_element(0, -std::sinh(0.3 * x + 0.2 * t));
  };
  const Superfield f = from_values(n, a0, zero, zero, a12, 2);
  const FieldPoint r = shg_residual_point(f, 0.4, -0.7);
  CHECK(r.a0.max_abs_coeff() < 1e-8);  // algebraic row satisfied
  // -∂x∂t a0 - a12·cosh a0 = sinh·cosh at this linear a0 (∂x∂t a0 = 0).
  const double u = 0.3 * 0.4 + 0.2 * -0.7;
  CHECK(r.a12.body() ==
        doctest::Approx(std::sinh(u) * std::cosh(u)).epsilon(1e-7));

  // Corrupting the algebraic sector (a12 = +sinh a0) must surface in the
  // first component.
  auto bad12 = [](double x, double t) {
    return Supernumber::body_element(0, std::sinh(0.3 * x + 0.2 * t));
  };
  const Superfield g = from_values(n, a0, zero, zero, bad12, 2);
  const FieldPoint rb = shg_residual_point(g, 0.4, -0.7);
  CHECK(rb.a0.body() == doctest::Approx(-2.0 * std::sinh(u)).epsilon(1e-7));
}

TEST_CASE("residual survey reports the worst grid point") {
  const unsigned n = 0;
  auto zero = [](double, double) { return Supernumber(0); };
  // A localized bump in a12 leaves residual ≈ |a12| peaked at the bump.
  auto a12 = [](double x, double t) {
    return Supernumber::body_element(
        0, std::exp(-10.0 * ((x - 0.5) * (x - 0.5) + t * t)));
  };
  const Superfield f = from_values(n, zero, zero, zero, a12, 2);
  const ResidualReport rep =
      shg_residual(f, Window{-1.0, 1.0, -1.0, 1.0}, 41, 41);
  CHECK(rep.overall == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(rep.worst_x == doctest::Approx(0.5).epsilon(0.1));
  CHECK(std::abs(rep.worst_t) < 0.1);
  // Components 0 and 3 both see the bump (tied magnitudes).
  CHECK((rep.worst_component == 0 || rep.worst_component == 3));
  CHECK(rep.passed(1.1));
  CHECK_FALSE(rep.passed(0.5));
}

TEST_CASE("thread count does not change survey results") {
  const unsigned n = 2;
  std::mt19937_64 rng(99);
  const Superfield f = from_polynomial(random_superpolynomial(rng, n, 2, 6));
  const Window w{-1.0, 1.0, -1.0, 1.0};
  setenv("SUPERSINH_THREADS", "1", 1);
  const ResidualReport serial = shg_residual(f, w, 21, 21);
  setenv("SUPERSINH_THREADS", "4", 1);
  const ResidualReport parallel = shg_residual(f, w, 21, 21);
  unsetenv("SUPERSINH_THREADS");
  CHECK(serial.overall == parallel.overall);
  CHECK(serial.worst_x == parallel.worst_x);
  CHECK(serial.worst_t == parallel.worst_t);
}

TEST_CASE("KdV-type residual: zero field and theta-free reduction") {
  const unsigned n = 2;
  const double a = 1.25;
  const Superfield zero = from_polynomial(SuperPolynomial::scalar(n, 0.0));
  CHECK(point_max(skdv_residual_point(zero, a, 0.3, -0.8)) == 0.0);

  // θ-free A = u(x, t): the u-component is u_t + u_xxx - 3a·u²·u_x.
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  const SuperPolynomial u = 0.3 * x * x * x + 0.2 * x * t;
  const Superfield f = from_polynomial(u);
  for (double xv : {-0.9, 0.5}) {
    for (double tv : {-0.6, 0.8}) {
      const double uv = 0.3 * xv * xv * xv + 0.2 * xv * tv;
      const double ux = 0.9 * xv * xv + 0.2 * tv;
      const double classical = 0.2 * xv + 1.8 - 3 * a * uv * uv * ux;
      const FieldPoint r = skdv_residual_point(f, a, xv, tv);
      CHECK(r.a0.body() == doctest::Approx(classical).epsilon(1e-12));
      CHECK(r.a0.soul().max_abs_coeff() < 1e-13);
    }
  }
}
