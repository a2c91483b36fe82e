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

#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "supersinh/grassmann.hpp"

namespace supersinh {

// ---------------------------------------------------------------------------
// Jacobi elliptic functions and elliptic integrals (real arguments)
// ---------------------------------------------------------------------------

struct JacobiValues {
  double sn = 0, cn = 0, dn = 0;
};

/// sn, cn, dn with modulus k (so the parameter is m = k²), 0 ≤ k < 1,
/// computed by the descending Landen / arithmetic-geometric-mean method.
JacobiValues jacobi_sncndn(double u, double k);

/// Complete elliptic integral K(k) (modulus convention) via the AGM.
double elliptic_K(double k);

/// Carlson symmetric integral R_F(x, y, z).
double carlson_rf(double x, double y, double z);

/// Incomplete elliptic integral of the first kind, amplitude convention:
/// F(φ, k) = ∫₀^φ dϑ/√(1 − k² sin²ϑ),  |φ| ≤ π/2.
double elliptic_F(double phi, double k);

/// Argument convention: F(x, k) with x = sin φ ∈ [−1, 1].
double elliptic_F_from_argument(double x, double k);

// ---------------------------------------------------------------------------
// Weierstrass ℘ with ring-valued invariants
// ---------------------------------------------------------------------------

/// ℘(z; g₂, g₃) and ℘′(z; g₂, g₃) for real z and even-supernumber
/// invariants.  The Laurent-series seed and the duplication formula are
/// evaluated over the Grassmann ring, so nilpotent parts of g₂, g₃
/// propagate exactly (they are finite jets in the soul, not truncations).
/// Throws PoleError near z = 0 or when a duplication step lands on a pole.
std::pair<Supernumber, Supernumber> weierstrass_p(double z,
                                                  const Supernumber& g2,
                                                  const Supernumber& g3);
std::pair<double, double> weierstrass_p(double z, double g2, double g3);

// ---------------------------------------------------------------------------
// Quartic curves 4(y')² = ... and their Weierstrass data
// ---------------------------------------------------------------------------

/// Quartic polynomial f(y) = Σ_{j=0}^{4} c[j]·y^j with ring coefficients.
struct Quartic {
  std::array<Supernumber, 5> c;

  Supernumber eval(const Supernumber& y) const;
  Supernumber deriv1(const Supernumber& y) const;
  Supernumber deriv2(const Supernumber& y) const;
  double eval_body(double y) const;
};

/// The quartic of the travelling-wave energy curve,
///   f(y) = −y⁴ − 4C₀y³ + (4C₁−2)y² − 4C₀y − 1   (y = e^α),
/// with (possibly nilpotent) even constants C₀, C₁.
Quartic reduction_quartic(const Supernumber& C0, const Supernumber& C1);

/// Classical Weierstrass invariants of a quartic written in binomial form
/// f = a₀y⁴ + 4a₁y³ + 6a₂y² + 4a₃y + a₄:
///   g₂ = a₀a₄ − 4a₁a₃ + 3a₂²,
///   g₃ = a₀a₂a₄ + 2a₁a₂a₃ − a₂³ − a₀a₃² − a₁²a₄.
Supernumber weierstrass_g2_of(const Quartic& f);
Supernumber weierstrass_g3_of(const Quartic& f);

/// Both invariant variants for the travelling-wave quartic: the classical
/// ones computed from the quartic coefficients and the closed-form
/// (C₀, C₁)-parameterized expressions
///   g₂ = 4/3 − 4C₀² + (4/3)C₁(C₁−1),
///   g₃ = (4/9)C₁ − 8/27 + (2/3)C₀²C₁ − (7/3)C₀² − (8/27)C₁³ + (4/9)C₁².
/// The g₃ variants differ in their C₀² terms (they agree at C₀² = 0); both
/// are reported and the deviation is measured, not patched.
struct QuarticInvariants {
  Supernumber g2_classical, g3_classical;
  Supernumber g2_stated, g3_stated;
  double g2_max_dev = 0.0, g3_max_dev = 0.0;
};
QuarticInvariants quartic_invariants(const Supernumber& C0,
                                     const Supernumber& C1);

/// Real roots of the body quartic on a bracketing scan (deduplicated,
/// ascending).
std::vector<double> quartic_real_roots(const Quartic& f);

/// Ring-valued Newton refinement of a root seed (nilpotent corrections for
/// nilpotent coefficients converge in ≤ N steps).
Supernumber ring_newton_root(const Quartic& f, const Supernumber& seed,
                             int max_iter = 30, double tol = 1e-13);

/// Weierstrass form of the solution of 4(y')² = f(y) through a root y₀ of f:
///   y(σ) = y₀ + ¼f′(y₀)·(℘(σ/2; g₂, g₃) − f″(y₀)/24)^{-1},
/// with g₂, g₃ the classical invariants of f.  The half-argument reflects
/// the parameterization dσ = 2dy/√f.  Returns y and dy/dσ.
struct QuarticRootSolution {
  Supernumber y, dy;
};
QuarticRootSolution quartic_root_solution(const Quartic& f,
                                          const Supernumber& y0, double sigma);

/// Jacobi modulus candidate k = 2ε/(4C₁ + ε) for the travelling-wave
/// solutions; `valid` iff 0 < k² < 1 (equivalently |4C₁ + ε| > 2).
struct ModulusCheck {
  double k = 0.0;
  double k2 = 0.0;
  bool valid = false;
};
ModulusCheck jacobi_modulus(double eps, double C1_body);

/// Bundle of the elliptic data attached to a travelling-wave reduction.
struct EllipticParams {
  Supernumber g2, g3;  // classical invariants (ring-valued)
  ModulusCheck modulus;
};
EllipticParams make_elliptic_params(double eps, const Supernumber& C0,
                                    const Supernumber& C1);

// ---------------------------------------------------------------------------
// Root finding, quadrature, ring-valued Runge–Kutta
// ---------------------------------------------------------------------------

/// Brent's method on a sign-changing bracket [a, b].
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-13, int max_iter = 200);

/// Adaptive Simpson quadrature for smooth integrands.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol = 1e-10);

/// Tanh-sinh (double-exponential) quadrature; tolerates integrable
/// endpoint singularities such as 1/√(distance to a simple turning point).
double tanh_sinh_quadrature(const std::function<double(double)>& f, double a,
                            double b, double tol = 1e-10);

/// Classical fixed-step fourth-order Runge–Kutta over the Grassmann ring.
using RingOde =
    std::function<std::vector<Supernumber>(double, const std::vector<Supernumber>&)>;

struct RingTrajectory {
  std::vector<double> s;
  std::vector<std::vector<Supernumber>> y;
};

RingTrajectory rk4_ring(const RingOde& rhs, std::vector<Supernumber> y0,
                        double s0, double s1, int steps);

}  // namespace supersinh
