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
#include <utility>
#include <vector>

#include "supersinh/fieldcalc.hpp"
#include "supersinh/special.hpp"
#include "supersinh/symalg.hpp"

namespace supersinh {

// ---------------------------------------------------------------------------
// Scalar curves of the reduction variable σ
// ---------------------------------------------------------------------------

/// Ring-valued function of one real variable with access to σ-derivatives.
/// Two backends: closed-form (`analytic`) and solver output (`tabulated`,
/// uniform nodes with exact per-order derivative grids; evaluation uses
/// 6-point local Lagrange interpolation, exact at the nodes).
class CurveFn {
 public:
  static constexpr int kMaxOrder = 5;

  CurveFn();  // identically zero over Λ_0

  static CurveFn zero(unsigned n_generators);

  /// `derivs(order, sigma)` must return the order-th σ-derivative for all
  /// orders up to `max_order`.
  static CurveFn analytic(unsigned n_generators,
                          std::function<Supernumber(int, double)> derivs,
                          int max_order = kMaxOrder);

  /// grids[j][i] = j-th derivative at nodes[i]; nodes uniform ascending.
  static CurveFn tabulated(std::vector<double> nodes,
                           std::vector<std::vector<Supernumber>> grids);

  unsigned generators() const { return n_; }
  int max_order() const { return max_order_; }

  /// Closed interval of admissible σ (unbounded for analytic curves).
  std::pair<double, double> domain() const;

  /// order-th derivative at a real σ.
  Supernumber operator()(int order, double sigma) const;

  /// Value (or order-th derivative) at a ring argument σ = b + s with
  /// nilpotent even s, via the finite Taylor sum Σ_k f^{(order+k)}(b)s^k/k!.
  /// The result lives in σ's algebra (curve coefficients are widened).
  Supernumber eval_ring(const Supernumber& sigma, int order = 0) const;

 private:
  enum class Kind { Analytic, Tabulated };

  Kind kind_ = Kind::Analytic;
  unsigned n_ = 0;
  int max_order_ = kMaxOrder;
  std::function<Supernumber(int, double)> fn_;
  std::vector<double> nodes_;
  std::vector<std::vector<Supernumber>> grids_;
};

/// The four reduced fields Φ = α + τ₁·η + τ₂·λ + τ₁τ₂·β.
struct CurveSet {
  CurveFn alpha, eta, lambda, beta;
};

// ---------------------------------------------------------------------------
// Classification of the sixteen invariant families
// ---------------------------------------------------------------------------

enum class ReductionClass {
  OdeSystem,     // genuine ODE system in σ (S1, S4, S8, S12)
  NullOnly,      // reduced system forces Φ = 0 (S2, S3, S6, S7, S10, S11)
  NotReducible,  // no invariant reduction variable exists (S5, S9, S13–S16)
};

ReductionClass reduction_class(SubalgebraId id);

/// Frozen human-readable rows E1..E4 of the reduced system (standard
/// families only; throws NotReducibleError otherwise).
std::vector<std::string> reduced_system_description(SubalgebraId id,
                                                    double eps);

// ---------------------------------------------------------------------------
// Reduced solutions
// ---------------------------------------------------------------------------

struct ReducedSolution {
  SubalgebraId id = SubalgebraId::S4;
  double eps = 1.0;
  unsigned n_generators = 0;
  CurveSet curves;
  /// Conserved odd bilinear C₀ of the run: η·λ (+ prescribed extra) for S4,
  /// σ^{1/2}·η·λ for S1; zero where the odd sector is nilpotent-degenerate.
  Supernumber odd_invariant;
  double energy_drift = 0.0;     // even first integral, travelling-wave runs
  double invariant_drift = 0.0;  // odd bilinear conservation over the grid
  std::pair<double, double> sigma_domain{0.0, 0.0};
  bool trivial = false;  // the identically-zero solution
};

/// Travelling wave (σ = x − εt):
///   ε·α″ + sinh α·cosh α + C₀·sinh α = 0,   C₀ = η·λ (conserved),
///   η′ = −ε·λ·cosh α,   λ′ = η·cosh α,   β = −sinh α,
/// integrated with the ring-valued classical Runge–Kutta scheme.  `C0` is
/// constraint metadata: it must equal η₀·λ₀ (ConstraintError otherwise) and
/// η·λ stays equal to it along the run (drift reported).  The even first
/// integral  E = (ε/2)α′² + ½sinh²α + C₀·cosh α  is monitored as well.
struct TravellingWaveInput {
  double eps = 1.0;
  double sigma0 = -5.0, sigma1 = 5.0;
  int steps = 4000;
  Supernumber alpha0, dalpha0;  // even
  Supernumber eta0, lambda0;    // odd
  Supernumber C0;               // even nilpotent; must equal η₀·λ₀
};
ReducedSolution solve_S4(const TravellingWaveInput& in);

/// Scale-invariant reduction (σ = x·t > 0):
///   α″ = (−α′ + sinh α·cosh α + η·λ·sinh α)/σ,
///   η′ = (λ·cosh α − ½η)/σ,   λ′ = η·cosh α,   β = −sinh α.
/// σ^{1/2}·η·λ is a first integral of the odd sector, so the constraint
/// η·λ = C₀·σ^{-1/2} propagates from the initial data.  `C0` is constraint
/// metadata: it must equal σ₀^{1/2}·η₀·λ₀ (ConstraintError otherwise); the
/// drift of σ^{1/2}·η·λ over the grid is reported.
struct ScalingInput {
  double sigma0 = 0.5, sigma1 = 4.0;  // requires 0 < sigma0 < sigma1
  int steps = 4000;
  Supernumber alpha0, dalpha0;  // even
  Supernumber eta0, lambda0;    // odd
  Supernumber C0;               // even nilpotent; must equal σ₀^{1/2}·η₀·λ₀
};
ReducedSolution solve_S1(const ScalingInput& in);

/// Travelling waves with one supersymmetry direction (S8 uses the odd
/// constant μ̲, S12 uses ν̲).  The even field solves the classical equation
/// ε·α″ + sinh α·cosh α = 0; the odd sector comes from the linear companion
///   f″ − tanh α·α′·f′ + ε·cosh²α·f ± ε·cosh α·α′ = 0
/// (− source sign for S8, + for S12) through
///   S8:  λ = μ̲·f,  η = (ε·μ̲/cosh α)·f′;   S12:  η = ν̲·f,
///   λ = (ν̲/cosh α)·f′;  β = −sinh α in both.
struct LinearOddInput {
  double eps = 1.0;
  double sigma0 = -5.0, sigma1 = 5.0;
  int steps = 4000;
  unsigned n_generators = 2;    // ≥ 1 for S8, ≥ 2 for S12
  Supernumber alpha0, dalpha0;  // even
  Supernumber f0, df0;          // even
};
ReducedSolution solve_S8(const LinearOddInput& in);
ReducedSolution solve_S12(const LinearOddInput& in);

/// The identically-zero solution for families whose reduced system admits
/// only Φ = 0 (class NullOnly); also valid for any standard family.
ReducedSolution null_solution(SubalgebraId id, double eps,
                              unsigned n_generators, double sigma0,
                              double sigma1);

// ---------------------------------------------------------------------------
// Reduced systems and the residual correspondence
// ---------------------------------------------------------------------------

/// Rows E1..E4 of the reduced system evaluated on the solution's curves at
/// a (possibly ring-valued) σ.  E1 = β + sinh α for every family; E2..E4
/// are family-specific (frozen forms, see reduced_system_description).
std::array<Supernumber, 4> reduced_equations(const ReducedSolution& sol,
                                             const Supernumber& sigma);

struct ReducedResiduals {
  std::array<double, 4> rows{};  // max |coefficient| per row over the grid
  double max() const;
};
ReducedResiduals reduced_residuals(const ReducedSolution& sol,
                                   const std::vector<double>& sigmas);

/// Signs (s₀..s₃) of the exact correspondence
///   R(Φ) = s₀·E1(σ) + τ₁·s₁·E2(σ) + τ₂·s₂·E3(σ) + τ₁τ₂·s₃·E4(σ)
/// between the superfield residual of a reconstructed invariant field and
/// the reduced-system rows (standard families only).
std::array<double, 4> residual_basis_signs(SubalgebraId id);

/// Right-hand side of the correspondence above as a packed extended-ring
/// value at (x, t); matches pack_point(shg_residual_point(reconstruct(...)))
/// for arbitrary curves, solution or not.
Supernumber predicted_residual(const SubalgebraRep& rep,
                               const ReducedSolution& sol, double x, double t);

// ---------------------------------------------------------------------------
// Reconstruction  Φ(x, t, θ) = α(σ) + τ₁·η(σ) + τ₂·λ(σ) + τ₁τ₂·β(σ)
// ---------------------------------------------------------------------------

/// Assemble the superfield of a reduced solution.  Jets of the invariants
/// σ, τ₁, τ₂ are evaluated exactly from their polynomial forms; curve values
/// enter through the finite Taylor composition (σ-souls are nilpotent), so
/// the component jets carry no finite-difference error.  Curves must provide
/// derivatives up to jet_order + 1 when σ has a soul, jet_order otherwise.
Superfield reconstruct(const SubalgebraRep& rep, const ReducedSolution& sol,
                       int jet_order = 2);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

struct Certification {
  ResidualReport report;
  double tolerance = 0.0;
  bool pass = false;
};

/// Survey the supersymmetric sinh-Gordon residual of `field` on a window
/// grid and compare against `tolerance`.
Certification certify(const Superfield& field, const Window& window,
                      double tolerance, int nx = 101, int nt = 101);

// ---------------------------------------------------------------------------
// Non-reducible families
// ---------------------------------------------------------------------------

struct NonReducibilityWitness {
  SubalgebraId id = SubalgebraId::S5;
  std::string message;
  bool has_field = false;
  Superfield field;  // invariant family member with explicit-coordinate residual
  double x1 = 0.0, t1 = 0.0, x2 = 0.0, t2 = 0.0;  // probe points
  double residual_gap = 0.0;  // max |R(x2,t2) − R(x1,t1)| coefficient
};

/// Certificate that a family of class NotReducible admits no reduction to
/// ODEs in an invariant variable.  For S5/S9 the witness is an explicit
/// invariant superfield whose field equations retain the excluded base
/// coordinate; for S13–S16 no unprefixed invariant base coordinate exists
/// at all.  Throws ConfigError when called on a reducible family.
NonReducibilityWitness non_reducibility_witness(SubalgebraId id,
                                                unsigned n_generators);

/// Throws NotReducibleError carrying the witness message when `id` is of
/// class NotReducible; returns normally otherwise.
void require_reducible(SubalgebraId id, unsigned n_generators);

// ---------------------------------------------------------------------------
// Quadrature identity for the travelling-wave energy curve
// ---------------------------------------------------------------------------

/// σ-span of a monotone segment of 4(y′)² = f(y):  ∫_{y1}^{y2} 2·dy/√f(y),
/// computed with tanh-sinh quadrature (tolerates turning-point endpoints
/// where f has a simple zero).  Requires f > 0 on the open interval.
double quadrature_sigma_span(const Quartic& f, double y1, double y2,
                             double tol = 1e-10);

}  // namespace supersinh
