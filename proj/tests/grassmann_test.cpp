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
#include <random>

#include "doctest.h"
#include "supersinh/errors.hpp"
#include "supersinh/grassmann.hpp"

#include "test_util.hpp"

using namespace supersinh;
using testutil::random_value;

TEST_CASE("construction and coefficient access") {
  const Supernumber v = Supernumber::body_element(3, 2.5) +
                        Supernumber::monomial(3, 0b101, -0.75);
  CHECK(v.generators() == 3);
  CHECK(v.dimension() == 8);
  CHECK(v.body() == 2.5);
  CHECK(v[0b101] == -0.75);
  CHECK(v[0b001] == 0.0);
  CHECK(v.soul().body() == 0.0);
  CHECK(v.soul()[0b101] == -0.75);
  CHECK(v.max_abs_coeff() == 2.5);
  CHECK_FALSE(v.is_zero());
  CHECK(Supernumber(4).is_zero());
}

TEST_CASE("generators anticommute and square to zero") {
  const unsigned n = 4;
  for (unsigned i = 0; i < n; ++i) {
    const Supernumber gi = Supernumber::generator(n, i);
    CHECK(gmul(gi, gi).is_zero());
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      const Supernumber gj = Supernumber::generator(n, j);
      CHECK(max_abs_diff(gmul(gi, gj), -gmul(gj, gi)) == 0.0);
    }
  }
}

TEST_CASE("odd elements square to zero exactly") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const Supernumber v = random_value(rng, 4, Parity::Odd);
    CHECK(gmul(v, v).is_zero());
  }
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 25; ++k) {
    const Supernumber a = random_value(rng, 4, Parity::Even);
    const Supernumber b = random_value(rng, 4, Parity::Odd);
    const Supernumber c = random_value(rng, 4, Parity::Even) +
                          random_value(rng, 4, Parity::Odd);
    CHECK(max_abs_diff(gmul(gmul(a, b), c), gmul(a, gmul(b, c))) < 1e-13);
    CHECK(max_abs_diff(gmul(a, b + c), gmul(a, b) + gmul(a, c)) < 1e-13);
    CHECK(max_abs_diff(gmul(a + b, c), gmul(a, c) + gmul(b, c)) < 1e-13);
  }
}

TEST_CASE("monomial product sign matches reorder_sign") {
  const unsigned n = 4;
  for (std::uint32_t m1 = 0; m1 < (1u << n); ++m1) {
    for (std::uint32_t m2 = 0; m2 < (1u << n); ++m2) {
      const Supernumber prod = gmul(Supernumber::monomial(n, m1, 1.0),
                                    Supernumber::monomial(n, m2, 1.0));
      if (m1 & m2) {
        CHECK(prod.is_zero());
      } else {
        CHECK(prod[m1 | m2] == reorder_sign(m1, m2));
      }
    }
  }
}

TEST_CASE("parity bookkeeping") {
  std::mt19937_64 rng(31);
  const Supernumber e = random_value(rng, 3, Parity::Even);
  const Supernumber o = random_value(rng, 3, Parity::Odd);
  CHECK(e.parity() == Parity::Even);
  CHECK(o.parity() == Parity::Odd);
  CHECK(e.has_parity(Parity::Even));
  CHECK_FALSE(e.has_parity(Parity::Odd));
  CHECK(gmul(o, o).has_parity(Parity::Even));
  CHECK(gmul(e, o).has_parity(Parity::Odd));
  CHECK_FALSE((e + o).has_parity(Parity::Even));
}

TEST_CASE("left derivative of a monomial") {
  const unsigned n = 3;
  const Supernumber m = Supernumber::monomial(n, 0b011, 1.0);  // ξ1ξ2
  CHECK(m.left_derivative(0)[0b010] == 1.0);   // ∂ξ1(ξ1ξ2) = ξ2
  CHECK(m.left_derivative(1)[0b001] == -1.0);  // ∂ξ2(ξ1ξ2) = -ξ1
  CHECK(m.left_derivative(2).is_zero());
  // Graded Leibniz: ∂(a·b) = ∂a·b + (-1)^{|a|} a·∂b on homogeneous a.
  std::mt19937_64 rng(37);
  const Supernumber a = random_value(rng, n, Parity::Odd);
  const Supernumber b = random_value(rng, n, Parity::Even) +
                        random_value(rng, n, Parity::Odd);
  for (unsigned k = 0; k < n; ++k) {
    const Supernumber lhs = gmul(a, b).left_derivative(k);
    const Supernumber rhs =
        gmul(a.left_derivative(k), b) - gmul(a, b.left_derivative(k));
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("widen and restrict round-trip; mixed algebras are rejected") {
  std::mt19937_64 rng(41);
  const Supernumber v = random_value(rng, 2, Parity::Even);
  const Supernumber w = v.widened(5);
  CHECK(w.generators() == 5);
  CHECK(max_abs_diff(w.restricted(2), v) == 0.0);
  CHECK_THROWS_AS(
      gmul(v, Supernumber::body_element(3, 1.0)), ConfigError);
  CHECK_THROWS_AS(Supernumber::generator(4, 2).restricted(2), ConfigError);
}

TEST_CASE("inverse via the geometric series") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 15; ++k) {
    Supernumber v = random_value(rng, 4, Parity::Even, 0.6, 2.0);
    const Supernumber p = gmul(v, ginv(v));
    CHECK(max_abs_diff(p, Supernumber::body_element(4, 1.0)) < 1e-12);
  }
  Supernumber soul_only = Supernumber::monomial(3, 0b011, 1.0);
  CHECK_THROWS_AS(ginv(soul_only), NotInvertibleError);
  const Supernumber a = random_value(rng, 4, Parity::Even, 0.5, 1.5);
  const Supernumber b = random_value(rng, 4, Parity::Even, 0.5, 1.5);
  CHECK(max_abs_diff(gdiv(gmul(a, b), b), a) < 1e-12);
}

TEST_CASE("analytic functions agree with the scalar versions on bodies") {
  for (double x : {-1.3, -0.2, 0.0, 0.7, 2.1}) {
    const Supernumber v = Supernumber::body_element(2, x);
    CHECK(gsinh(v).body() == doctest::Approx(std::sinh(x)).epsilon(1e-14));
    CHECK(gcosh(v).body() == doctest::Approx(std::cosh(x)).epsilon(1e-14));
    CHECK(gtanh(v).body() == doctest::Approx(std::tanh(x)).epsilon(1e-14));
    CHECK(gexp(v).body() == doctest::Approx(std::exp(x)).epsilon(1e-14));
  }
}

TEST_CASE("hyperbolic identities hold on ring values") {
  std::mt19937_64 rng(47);
  const Supernumber one = Supernumber::body_element(4, 1.0);
  for (int k = 0; k < 15; ++k) {
    const Supernumber v = random_value(rng, 4, Parity::Even);
    const Supernumber ch = gcosh(v), sh = gsinh(v);
    CHECK(max_abs_diff(gmul(ch, ch) - gmul(sh, sh), one) < 1e-12);
    CHECK(max_abs_diff(gmul(gexp(v), gexp(-v)), one) < 1e-12);
    CHECK(max_abs_diff(gtanh(v), gmul(sh, ginv(ch))) < 1e-12);
    CHECK(max_abs_diff(gexp(v), ch + sh) < 1e-12);
  }
}

TEST_CASE("nilpotent Taylor expansion is finite and exact") {
  // exp(b + ξ1ξ2·s) = e^b·(1 + s·ξ1ξ2) exactly: ξ1ξ2 squares to zero.
  const double b = 0.4, s = 0.3;
  const Supernumber v = Supernumber::body_element(2, b) +
                        Supernumber::monomial(2, 0b11, s);
  const Supernumber e = gexp(v);
  CHECK(e.body() == doctest::Approx(std::exp(b)).epsilon(1e-15));
  CHECK(e[0b11] == doctest::Approx(s * std::exp(b)).epsilon(1e-15));
  // A 4-generator even soul truncates after the ⌊4/2⌋-th power.
  const Supernumber soul = Supernumber::monomial(4, 0b0011, 0.5) +
                           Supernumber::monomial(4, 0b1100, -0.25);
  const Supernumber g = gexp(soul);
  const Supernumber manual = Supernumber::body_element(4, 1.0) + soul +
                             0.5 * gmul(soul, soul);
  CHECK(max_abs_diff(g, manual) < 1e-15);
}

TEST_CASE("square root and powers") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 10; ++k) {
    const Supernumber v = random_value(rng, 4, Parity::Even, 0.4, 2.5);
    CHECK(max_abs_diff(gmul(gsqrt(v), gsqrt(v)), v) < 1e-12);
    CHECK(max_abs_diff(gpow(v, 0.5), gsqrt(v)) < 1e-12);
    CHECK(max_abs_diff(gpow(v, 2.0), gmul(v, v)) < 1e-12);
    CHECK(max_abs_diff(gpow(v, -1.0), ginv(v)) < 1e-12);
  }
  CHECK_THROWS_AS(gsqrt(Supernumber::body_element(2, -1.0)), DomainError);
}

TEST_CASE("gfunc consumes exactly the orders the soul needs") {
  // f with third derivatives never queried for a 2-generator soul.
  const Supernumber v = Supernumber::body_element(2, 1.0) +
                        Supernumber::monomial(2, 0b11, 2.0);
  unsigned max_order = 0;
  const Supernumber r = gfunc(v, [&](unsigned k, double x) {
    max_order = std::max(max_order, k);
    return k == 0 ? x * x : (k == 1 ? 2.0 * x : (k == 2 ? 2.0 : 0.0));
  });
  CHECK(max_order <= 1);  // one even nilpotent level
  CHECK(max_abs_diff(r, gmul(v, v)) < 1e-14);
}
