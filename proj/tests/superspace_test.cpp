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

#include <random>

#include "doctest.h"
#include "supersinh/errors.hpp"
#include "supersinh/superspace.hpp"

#include "test_util.hpp"

using namespace supersinh;

namespace {

SuperPolynomial theta(unsigned n, unsigned i) {
  return SuperPolynomial::variable(n, i == 0 ? Var::theta1 : Var::theta2);
}

}  // namespace

TEST_CASE("theta component extraction and packing round-trip") {
  std::mt19937_64 rng(7);
  const unsigned n = 2;
  for (int k = 0; k < 10; ++k) {
    const Supernumber a0 = testutil::random_value(rng, n, Parity::Even);
    const Supernumber a1 = testutil::random_value(rng, n, Parity::Odd);
    const Supernumber a2 = testutil::random_value(rng, n, Parity::Odd);
    const Supernumber a12 = testutil::random_value(rng, n, Parity::Even);
    const Supernumber packed = pack_components(a0, a1, a2, a12);
    const auto parts = unpack_components(packed, n);
    CHECK(max_abs_diff(parts[0], a0) == 0.0);
    CHECK(max_abs_diff(parts[1], a1) == 0.0);
    CHECK(max_abs_diff(parts[2], a2) == 0.0);
    CHECK(max_abs_diff(parts[3], a12) == 0.0);
  }
}

TEST_CASE("polynomial arithmetic respects theta anticommutation") {
  const unsigned n = 2;
  const SuperPolynomial t1 = theta(n, 0), t2 = theta(n, 1);
  CHECK((t1 * t1).term_count() == 0);
  CHECK((t2 * t2).term_count() == 0);
  const SuperPolynomial sym = t1 * t2 + t2 * t1;
  CHECK(sym.max_abs_coeff() == 0.0);

  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial p = x * x + t1 * t2;
  const SuperPolynomial sq = p * p;
  // (x² + θ1θ2)² = x⁴ + 2x²θ1θ2 (the nilpotent square vanishes).
  const SuperPolynomial expected =
      x * x * x * x + 2.0 * (x * x) * (t1 * t2);
  CHECK(max_abs_diff(sq, expected) < 1e-14);
}

TEST_CASE("coordinate derivatives") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  const SuperPolynomial p = x * x * x * t * t;
  CHECK(max_abs_diff(p.derivative(Var::x), 3.0 * x * x * t * t) < 1e-14);
  CHECK(max_abs_diff(p.derivative(Var::t), 2.0 * x * x * x * t) < 1e-14);
  CHECK(p.derivative(Var::theta1).max_abs_coeff() == 0.0);
}

TEST_CASE("theta derivatives anticommute") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial p = x * theta(n, 0) * theta(n, 1);
  const SuperPolynomial d12 =
      p.derivative(Var::theta1).derivative(Var::theta2);
  const SuperPolynomial d21 =
      p.derivative(Var::theta2).derivative(Var::theta1);
  CHECK(max_abs_diff(d12, -1.0 * d21) < 1e-14);
  CHECK(max_abs_diff(d12, x) < 1e-14);  // ∂θ2(∂θ1(xθ1θ2)) = ∂θ2(xθ2) = x
}

TEST_CASE("evaluation returns extended-ring values") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial p =
      3.0 * x + lmul(Supernumber::generator(n + 2, 0),
                     theta(n, 0) * SuperPolynomial::variable(n, Var::t));
  const Supernumber v = p.evaluate(2.0, 5.0);
  CHECK(v.body() == 6.0);
  // μ·θ1·t at t=5 carries mask {ξ1, θ1}.
  const std::uint32_t mask =
      1u | (std::uint32_t{1} << theta_generator(n, 0));
  CHECK(v[mask] == 5.0);
}

TEST_CASE("substitution composes correctly") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  SuperPolynomial::Substitution shift;
  shift.x = x - 2.0 * t;
  const SuperPolynomial p = x * x * t;
  const SuperPolynomial q = p.substituted(shift);
  const SuperPolynomial expected = (x - 2.0 * t) * (x - 2.0 * t) * t;
  CHECK(max_abs_diff(q, expected) < 1e-14);
}

TEST_CASE("pure scaling substitution handles half-integer powers") {
  const unsigned n = 2;
  // p = t^{1/2}·θ1 (a scale-covariant combination with a fractional power).
  SuperPolynomial p = SuperPolynomial::monomial(
      n, SuperPolynomial::Key{0, 1, 0},
      Supernumber::generator(n + 2, theta_generator(n, 0)));
  SuperPolynomial::Substitution scale;
  scale.t = 4.0 * SuperPolynomial::variable(n, Var::t);
  const SuperPolynomial q = p.substituted(scale);
  CHECK(max_abs_diff(q, 2.0 * p) < 1e-14);  // (4t)^{1/2} = 2·t^{1/2}
}

TEST_CASE("polynomial parity") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  CHECK(x.parity() == Parity::Even);
  CHECK(theta(n, 0).parity() == Parity::Odd);
  CHECK((theta(n, 0) * theta(n, 1)).parity() == Parity::Even);
  CHECK(lmul(Supernumber::generator(n + 2, 0), theta(n, 0)).parity() ==
        Parity::Even);
}

TEST_CASE("random superfield samples are even with bounded structure") {
  std::mt19937_64 rng(20260815);
  for (int k = 0; k < 10; ++k) {
    const SuperPolynomial p = random_superpolynomial(rng, 2, 2, 5);
    CHECK(p.parity() == Parity::Even);
    CHECK(p.base_generators() == 2);
    CHECK(p.term_count() <= 5);
    for (const auto& [key, coeff] : p.terms()) {
      CHECK(key.xp2 <= 4);
      CHECK(key.tp2 <= 4);
      CHECK(key.up == 0);
    }
  }
}

TEST_CASE("evaluate requires positive base for fractional powers") {
  const unsigned n = 2;
  const SuperPolynomial p = SuperPolynomial::monomial(
      n, SuperPolynomial::Key{0, 1, 0},
      Supernumber::generator(n + 2, theta_generator(n, 0)));
  CHECK_THROWS_AS(p.evaluate(1.0, -2.0), DomainError);
}
