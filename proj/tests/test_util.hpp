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

// Shared helpers for the test binaries: pseudo-random supernumbers, smooth
// ring-valued curves with all σ-derivatives in closed form, and hand-built
// reduced solutions wrapping such curves.

#pragma once

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "supersinh/grassmann.hpp"
#include "supersinh/reduction.hpp"

namespace supersinh::testutil {

/// Random supernumber with the requested parity; body (for even values)
/// drawn from [body_lo, body_hi], soul coefficients from [-0.5, 0.5].
inline Supernumber random_value(std::mt19937_64& rng, unsigned n, Parity p,
                                double body_lo = -1.0, double body_hi = 1.0) {
  std::uniform_real_distribution<double> body(body_lo, body_hi);
  std::uniform_real_distribution<double> soul(-0.5, 0.5);
  Supernumber v(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const bool odd = std::popcount(mask) % 2 == 1;
    if ((p == Parity::Odd) != odd) continue;
    v.coeff(mask) = mask == 0 ? body(rng) : soul(rng);
  }
  return v;
}

/// One smooth scalar mode a·sin(wσ + φ) + c with every derivative closed
/// form: the k-th derivative is a·w^k·sin(wσ + φ + kπ/2).
struct SmoothMode {
  double a = 0.0, w = 0.0, phi = 0.0, c = 0.0;

  double deriv(int order, double s) const {
    return a * std::pow(w, order) *
               std::sin(w * s + phi + 0.5 * std::numbers::pi * order) +
           (order == 0 ? c : 0.0);
  }
};

inline SmoothMode random_mode(std::mt19937_64& rng, double amp, double base) {
  std::uniform_real_distribution<double> u(0.2, 1.1);
  std::uniform_real_distribution<double> ph(0.0, 6.28);
  return SmoothMode{amp * u(rng), u(rng), ph(rng), base};
}

/// Analytic ring-valued curve Σ_m value_m·mode_m(σ) over Λ_n.
inline CurveFn mode_curve(unsigned n,
                          std::vector<std::pair<Supernumber, SmoothMode>> parts) {
  return CurveFn::analytic(
      n,
      [parts = std::move(parts), n](int order, double s) {
        Supernumber out(n);
        for (const auto& [value, mode] : parts) {
          out += mode.deriv(order, s) * value;
        }
        return out;
      });
}

/// Random smooth even curve: body mode + one even-soul mode.
inline CurveFn random_even_curve(std::mt19937_64& rng, unsigned n, double amp,
                                 double base) {
  std::vector<std::pair<Supernumber, SmoothMode>> parts;
  parts.emplace_back(Supernumber::body_element(n, 1.0),
                     random_mode(rng, amp, base));
  if (n >= 2) {
    Supernumber soul = random_value(rng, n, Parity::Even);
    soul.coeff(0) = 0.0;
    parts.emplace_back(soul, random_mode(rng, amp, 0.0));
  }
  return mode_curve(n, std::move(parts));
}

/// Random smooth odd curve: one mode per odd generator direction.
inline CurveFn random_odd_curve(std::mt19937_64& rng, unsigned n, double amp) {
  std::vector<std::pair<Supernumber, SmoothMode>> parts;
  for (unsigned i = 0; i < n; ++i) {
    parts.emplace_back(Supernumber::generator(n, i),
                       random_mode(rng, amp, 0.0));
  }
  return mode_curve(n, std::move(parts));
}

/// Reduced solution wrapping externally supplied analytic curves (used to
/// probe the reconstruction/residual correspondence on arbitrary data).
inline ReducedSolution analytic_solution(SubalgebraId id, double eps,
                                         unsigned n, CurveSet curves,
                                         double s0, double s1) {
  ReducedSolution sol;
  sol.id = id;
  sol.eps = eps;
  sol.n_generators = n;
  sol.curves = std::move(curves);
  sol.odd_invariant = Supernumber(n);
  sol.sigma_domain = {s0, s1};
  return sol;
}

}  // namespace supersinh::testutil
