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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "supersinh/errors.hpp"
#include "supersinh/superspace.hpp"
#include "supersinh/symalg.hpp"

using namespace supersinh;

namespace {

double bracket_dev(const SuperVectorField& a, const SuperVectorField& b) {
  double m = 0.0;
  for (auto member : {&SuperVectorField::cx, &SuperVectorField::ct,
                      &SuperVectorField::cth1, &SuperVectorField::cth2,
                      &SuperVectorField::cu}) {
    m = std::max(m, max_abs_diff(a.*member, b.*member));
  }
  return m;
}

double both_odd_sign(const SuperVectorField& a, const SuperVectorField& b) {
  return (a.parity == Parity::Odd && b.parity == Parity::Odd) ? -1.0 : 1.0;
}

}  // namespace

TEST_CASE("standard bracket table is exact") {
  const TableCheck t = verify_table1(2, 1e-12);
  CHECK(t.all_ok);
  CHECK(t.cells.size() == 25);
  CHECK(t.max_dev == 0.0);
}

TEST_CASE("KdV fixture bracket table is exact") {
  const TableCheck t = verify_kdv_table(2, 1e-12);
  CHECK(t.all_ok);
  CHECK(t.cells.size() == 25);
  CHECK(t.max_dev == 0.0);
  bool found = false;
  for (const auto& c : t.cells) {
    if (c.description.find("{A_1, A_1}") != std::string::npos) {
      found = true;
      CHECK(c.description.find("-2") != std::string::npos);
      CHECK(c.description.find("C_1") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("superbracket has graded antisymmetry") {
  const auto gens = standard_generators(2);
  for (const auto& X : gens) {
    for (const auto& Y : gens) {
      // [X, Y] = -(-1)^{|X||Y|} [Y, X]: brackets of two odd generators are
      // symmetric, every other pairing is antisymmetric.
      const SuperVectorField reflected =
          -both_odd_sign(X, Y) * superbracket(Y, X);
      CHECK(bracket_dev(superbracket(X, Y), reflected) == 0.0);
    }
  }
}

TEST_CASE("superbracket satisfies the graded Jacobi identity") {
  const auto gens = standard_generators(2);
  const SuperVectorField zero = SuperVectorField::zero(2);
  for (const auto& X : gens) {
    for (const auto& Y : gens) {
      for (const auto& Z : gens) {
        const SuperVectorField sum =
            both_odd_sign(X, Z) * superbracket(X, superbracket(Y, Z)) +
            both_odd_sign(Y, X) * superbracket(Y, superbracket(Z, X)) +
            both_odd_sign(Z, Y) * superbracket(Z, superbracket(X, Y));
        CHECK(bracket_dev(sum, zero) < 1e-12);
      }
    }
  }
}

TEST_CASE("all sixteen families annihilate their invariants") {
  for (int k = 1; k <= 16; ++k) {
    const auto id = parse_subalgebra("S" + std::to_string(k));
    REQUIRE(id.has_value());
    for (double eps : {1.0, -1.0}) {
      const SubalgebraRep rep = subalgebra(*id, eps, 2);
      const InvarianceReport r = verify_invariants(rep, 3, 0.0);
      CAPTURE(rep.label);
      CHECK(r.all_ok);
      CHECK(r.max_dev == 0.0);
      if (rep.eps == 0.0) break;  // family has no ε; one pass suffices
    }
  }
}

TEST_CASE("invariance also holds over a wider base ring") {
  for (const char* name : {"S1", "S5", "S8", "S13", "S16"}) {
    const auto id = parse_subalgebra(name);
    REQUIRE(id.has_value());
    const SubalgebraRep rep = subalgebra(*id, 1.0, 3);
    CHECK(verify_invariants(rep, 3, 0.0).all_ok);
  }
}

TEST_CASE("scaling invariants have the expected closed form") {
  const unsigned n = 2;
  const SubalgebraRep rep = subalgebra(SubalgebraId::S1, 1.0, n);
  REQUIRE(rep.invariants.size() == 3);
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  CHECK(max_abs_diff(rep.invariants[0], x * t) == 0.0);
  // τ1 = t^{1/2}·θ1 evaluates to √t·θ1.
  const Supernumber tau1 = rep.invariants[1].evaluate(0.7, 4.0);
  CHECK(tau1[std::uint32_t{1} << theta_generator(n, 0)] ==
        doctest::Approx(2.0).epsilon(1e-14));
  // τ2 = t^{-1/2}·θ2 evaluates to θ2/√t.
  const Supernumber tau2 = rep.invariants[2].evaluate(0.7, 4.0);
  CHECK(tau2[std::uint32_t{1} << theta_generator(n, 1)] ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("KdV nonstandard families annihilate their sweeps") {
  const auto reps = kdv_nonstandard_reps(2);
  CHECK(reps.size() == 3);
  for (const auto& rep : reps) {
    CAPTURE(rep.label);
    const InvarianceReport r = verify_invariants(rep, 3, 0.0);
    CHECK(r.all_ok);
    CHECK(r.max_dev == 0.0);
  }
}

TEST_CASE("coordinate flows invert and preserve their invariants") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  const SuperPolynomial t = SuperPolynomial::variable(n, Var::t);
  const SuperPolynomial th1 = SuperPolynomial::variable(n, Var::theta1);

  // Scaling flow: σ = x·t is preserved exactly.
  const FlowSpec scale{GenId::L, 0.35, std::nullopt};
  CHECK(max_abs_diff(pullback(x * t, scale), x * t) < 1e-14);
  // Forward then inverse pullback is the identity.
  const SuperPolynomial p = x * x * t + 2.0 * th1 * x;
  CHECK(max_abs_diff(pullback(pullback(p, scale), scale, true), p) < 1e-13);

  // Supersymmetry flow with an odd parameter η̲ sends x to x - η̲·θ1.
  const Supernumber eta = Supernumber::generator(n, 0);
  const FlowSpec qx{GenId::Qx, 1.0, eta};
  const SuperPolynomial moved = pullback(x, qx);
  const SuperPolynomial expected = x - lmul(extend(eta), th1);
  CHECK(max_abs_diff(moved, expected) == 0.0);
  CHECK(max_abs_diff(pullback(pullback(p, qx), qx, true), p) == 0.0);
}

TEST_CASE("flow parameters are validated") {
  const unsigned n = 2;
  const SuperPolynomial x = SuperPolynomial::variable(n, Var::x);
  // A supersymmetry flow without an odd parameter is rejected.
  const FlowSpec missing{GenId::Qx, 1.0, std::nullopt};
  CHECK_THROWS_AS(pullback(x, missing), ConfigError);
  // An even parameter is rejected.
  const FlowSpec wrong_parity{GenId::Qt, 1.0, Supernumber::body_element(n, 0.5)};
  CHECK_THROWS_AS(pullback(x, wrong_parity), ParityError);
  // A parameter from the wrong ring is rejected.
  const FlowSpec wrong_ring{GenId::Qx, 1.0, Supernumber::generator(n + 2, 0)};
  CHECK_THROWS_AS(pullback(x, wrong_ring), ConfigError);
}

TEST_CASE("subalgebra id parsing round-trips") {
  for (int k = 1; k <= 16; ++k) {
    const std::string name = "S" + std::to_string(k);
    const auto id = parse_subalgebra(name);
    REQUIRE(id.has_value());
    CHECK(to_string(*id) == name);
  }
  CHECK_FALSE(parse_subalgebra("S17").has_value());
  CHECK_FALSE(parse_subalgebra("bogus").has_value());
}
