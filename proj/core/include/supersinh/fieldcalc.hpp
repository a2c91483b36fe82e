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
#include <string>
#include <vector>

#include "supersinh/jet.hpp"
#include "supersinh/superspace.hpp"

namespace supersinh {

/// Componentwise value of a superfield at a point:
///   Φ = a0 + θ₁·a1 + θ₂·a2 + θ₁θ₂·a12,
/// with a0, a12 even and a1, a2 odd for a bosonic (even) superfield.
struct FieldPoint {
  Supernumber a0, a1, a2, a12;

  /// Throws ParityError unless a0, a12 are even and a1, a2 odd (for
  /// `even_field` = true), or the mirrored requirement for an odd field.
  void check_parity(bool even_field = true) const;
};

/// One superfield component as a jet-valued function of (x, t).
using ComponentJetFn = std::function<Jet(double, double)>;

/// A superfield given by its four components.  Components return jets of a
/// declared order; superspace derivative operators lower that order by one.
struct Superfield {
  unsigned n_base = 0;
  int jet_order = 0;
  ComponentJetFn a0, a1, a2, a12;
};

std::array<Jet, 4> eval_jets(const Superfield& f, double x, double t);
FieldPoint eval_point(const Superfield& f, double x, double t);

/// Pack a FieldPoint into a single extended-ring value (θ-bits populated).
Supernumber pack_point(const FieldPoint& p);
FieldPoint unpack_point(const Supernumber& v, unsigned n_base);

/// Exact superfield from a polynomial in (x, t, θ₁, θ₂) (no u-dependence):
/// components are differentiated symbolically, jets carry order 3.
Superfield from_polynomial(const SuperPolynomial& p);

/// Superfield from plain component value functions; jets are built with
/// central differences of step `h` plus one Richardson extrapolation step.
using ComponentValueFn = std::function<Supernumber(double, double)>;
Superfield from_values(unsigned n_base, ComponentValueFn a0,
                       ComponentValueFn a1, ComponentValueFn a2,
                       ComponentValueFn a12, int jet_order = 2,
                       double h = 1e-5);

/// Covariant superspace derivatives D_x = ∂θ₁ + θ₁∂x, D_t = ∂θ₂ − θ₂∂t and
/// the supersymmetry generators Q_x = ∂θ₁ − θ₁∂x, Q_t = ∂θ₂ + θ₂∂t, acting
/// on component superfields.
Superfield apply_Dx(const Superfield& f);
Superfield apply_Dt(const Superfield& f);
Superfield apply_Qx(const Superfield& f);
Superfield apply_Qt(const Superfield& f);

/// ∂x / ∂t on superfields (componentwise jet shift).
Superfield apply_dx(const Superfield& f);
Superfield apply_dt(const Superfield& f);

Superfield operator+(const Superfield& f, const Superfield& g);
Superfield operator-(const Superfield& f, const Superfield& g);
Superfield operator*(double s, const Superfield& f);

/// Components of sinh(Φ) at a point, computed by the Grassmann-analytic
/// lift of sinh on the packed value.  For a bosonic field this equals
///   (sinh a0, a1·cosh a0, a2·cosh a0, a12·cosh a0 − a1a2·sinh a0).
FieldPoint sinh_point(const FieldPoint& p);

/// Pointwise residual of the supersymmetric sinh-Gordon equation
///   D_x D_t Φ = sinh Φ
/// in components (frozen closed form):
///   R0  = −a12 − sinh a0
///   R1  =  ∂x a2 − a1·cosh a0
///   R2  =  ∂t a1 − a2·cosh a0
///   R12 = −∂x∂t a0 − a12·cosh a0 + a1·a2·sinh a0.
FieldPoint shg_residual_point(const Superfield& f, double x, double t);

/// Pointwise residual of the N=2 supersymmetric KdV equation (parameter a),
/// assembled term by term over the extended ring; its θ-free component for
/// a θ-free field A = u reduces to u_t + u_xxx − 3a·u²·u_x.
FieldPoint skdv_residual_point(const Superfield& f, double a, double x,
                               double t);

/// Rectangular evaluation window.
struct Window {
  double x0 = 0, x1 = 0, t0 = 0, t1 = 0;
};

/// Grid survey of a pointwise residual.
struct ResidualReport {
  Window window;
  int nx = 0, nt = 0;
  std::array<double, 4> component_max{};  // max |coeff| per component
  double overall = 0.0;
  std::vector<double> monomial_max;  // indexed by base-ring mask
  double worst_x = 0.0, worst_t = 0.0;
  int worst_component = 0;

  bool passed(double tol) const { return overall <= tol; }
  std::string summary() const;
};

using PointResidualFn = std::function<FieldPoint(double, double)>;

/// Evaluate `residual` over an nx×nt grid on `window`; parallelized over
/// rows (worker count from the SUPERSINH_THREADS environment variable).
ResidualReport survey_residual(const PointResidualFn& residual,
                               unsigned n_base, const Window& window, int nx,
                               int nt);

ResidualReport shg_residual(const Superfield& f, const Window& window,
                            int nx = 101, int nt = 101);
ResidualReport skdv_residual(const Superfield& f, double a,
                             const Window& window, int nx = 41, int nt = 41);

}  // namespace supersinh
