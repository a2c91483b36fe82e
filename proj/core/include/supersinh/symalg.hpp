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
#include <optional>
#include <string>
#include <vector>

#include "supersinh/fieldcalc.hpp"
#include "supersinh/superspace.hpp"

namespace supersinh {

/// Graded vector field on the extended superspace (x, t, θ₁, θ₂, u), with
/// superpolynomial coefficients multiplying the coordinate derivations from
/// the left:  X = cx·∂x + ct·∂t + cth1·∂θ₁ + cth2·∂θ₂ + cu·∂u.
struct SuperVectorField {
  std::string name;
  Parity parity = Parity::Even;
  unsigned n_base = 0;
  SuperPolynomial cx, ct, cth1, cth2, cu;

  static SuperVectorField zero(unsigned n_base);
};

/// Declared-parity consistency: even coordinates need |c| = |X|, odd ones
/// |c| = |X|+1 (zero coefficients are unconstrained).  Throws ParityError.
void check_parity(const SuperVectorField& X);

/// Derivation action on a superpolynomial.
SuperPolynomial apply(const SuperVectorField& X, const SuperPolynomial& p);

SuperVectorField operator+(const SuperVectorField& X,
                           const SuperVectorField& Y);
SuperVectorField operator-(const SuperVectorField& X,
                           const SuperVectorField& Y);
SuperVectorField operator*(double s, const SuperVectorField& X);

/// Left multiplication by a (typically nilpotent) extended-ring constant;
/// flips the declared parity when the constant is odd.
SuperVectorField lmul(const Supernumber& c_extended,
                      const SuperVectorField& X);

/// Graded Lie bracket: [X,Y] = X∘Y − (−1)^{|X||Y|} Y∘X (an anticommutator
/// when both fields are odd).  Operand parities must be definite.
SuperVectorField superbracket(const SuperVectorField& X,
                              const SuperVectorField& Y);

/// Symmetry generators of the supersymmetric sinh-Gordon equation:
/// dilation L, translations P_x, P_t and supersymmetries Q_x, Q_t.
enum class GenId { L, Px, Pt, Qx, Qt };

SuperVectorField standard_generator(GenId id, unsigned n_base);
std::vector<SuperVectorField> standard_generators(unsigned n_base);

/// Symmetry generators of the N=2 supersymmetric KdV equation:
/// C₁ = ∂x, C₂ = ∂t, C₃ = x∂x + 3t∂t + ½θ₁∂θ₁ + ½θ₂∂θ₂ − u∂u,
/// A₁ = θ₁∂x − ∂θ₁, A₂ = θ₂∂x − ∂θ₂.
std::vector<SuperVectorField> kdv_generators(unsigned n_base);

/// One verified cell of a commutation table.
struct TableCell {
  std::string description;
  double max_dev = 0.0;
  bool ok = false;
};

struct TableCheck {
  std::vector<TableCell> cells;
  double max_dev = 0.0;
  bool all_ok = true;
};

/// Expected bracket [g_i, g_j] = Σ_k coeff[k]·g_k for a generator list.
using BracketTable = std::vector<std::vector<std::vector<double>>>;

TableCheck verify_commutation_table(const std::vector<SuperVectorField>& gens,
                                    const BracketTable& expected, double tol);

/// The full 5×5 supercommutation table of {L, P_x, P_t, Q_x, Q_t}.
TableCheck verify_table1(unsigned n_base, double tol = 1e-12);

/// The 5×5 supercommutation table of the KdV generator fixture.
TableCheck verify_kdv_table(unsigned n_base, double tol = 1e-12);

/// The sixteen inequivalent one-dimensional subalgebra families of the
/// sinh-Gordon symmetry superalgebra.  Odd parameters use the canonical
/// generators μ̲ = ξ₁ and ν̲ = ξ₂ of the base ring.
enum class SubalgebraId {
  S1, S2, S3, S4, S5, S6, S7, S8,
  S9, S10, S11, S12, S13, S14, S15, S16,
};

std::string to_string(SubalgebraId id);
std::optional<SubalgebraId> parse_subalgebra(const std::string& name);

struct SubalgebraRep {
  SubalgebraId id;
  std::string label;       // e.g. "{P_x + ε·P_t + μ·Q_x}"
  double eps = 0.0;        // ±1 where applicable, else 0
  SuperVectorField X;
  /// True when a complete invariant coordinate set (σ, τ₁, τ₂) exists and a
  /// superfield reduction Φ = A(σ, τ₁, τ₂) is available.
  bool standard = true;
  /// Standard: exactly {σ, τ₁, τ₂}.  Nonstandard: the invariant coordinates
  /// that survive (may include u itself).
  std::vector<SuperPolynomial> invariants;
  std::vector<std::string> invariant_names;
  /// Every prefix·(monomial in the sweep basis) is invariant.  For standard
  /// families the prefix is 1 and the basis is the invariant triple; for
  /// nonstandard families the prefix is the nilpotent odd constant (μ̲, ν̲
  /// or μ̲ν̲) and the basis lists the admissible coordinate combinations.
  Supernumber prefix;  // extended ring
  std::vector<SuperPolynomial> sweep_basis;
  std::vector<std::string> sweep_names;
};

/// Construct the representative subalgebra (ε must be ±1 for the ids that
/// use it and is ignored otherwise).
SubalgebraRep subalgebra(SubalgebraId id, double eps, unsigned n_base);

/// True iff X annihilates p with every coefficient exactly below `tol`.
bool annihilates(const SuperVectorField& X, const SuperPolynomial& p,
                 double tol = 0.0);

struct InvarianceCheck {
  std::string invariant;
  double max_dev = 0.0;
  bool ok = false;
};

struct InvarianceReport {
  SubalgebraId id;
  std::vector<InvarianceCheck> checks;
  bool all_ok = true;
  double max_dev = 0.0;
};

/// Verify that all listed invariants of the representative are annihilated,
/// together with prefix·(monomials of total degree ≤ `max_degree` in the
/// sweep basis).
InvarianceReport verify_invariants(const SubalgebraRep& rep,
                                   int max_degree = 3, double tol = 0.0);

/// Nonstandard invariant families on the KdV side (for the generators
/// μ·A₁, ν·A₂, μ·A₁ + ν·A₂ and C₁ − μ·A₁ − ν·A₂).
std::vector<SubalgebraRep> kdv_nonstandard_reps(unsigned n_base);

// ---------------------------------------------------------------------------
// Finite symmetry flows
// ---------------------------------------------------------------------------

/// A one-parameter flow generated by one of the standard generators: even
/// flows use the real parameter `s`; the supersymmetry flows use the odd
/// base-ring parameter `odd_param`.
struct FlowSpec {
  GenId gen = GenId::Px;
  double s = 0.0;
  std::optional<Supernumber> odd_param;  // base ring, odd
};

/// Coordinate images z ↦ flow(z) as superpolynomials.
struct CoordinateFlow {
  SuperPolynomial x_img, t_img, th1_img, th2_img;
};

CoordinateFlow flow_map(const FlowSpec& spec, unsigned n_base,
                        bool inverse = false);

/// Composition p ∘ flow (substitute the images into p).
SuperPolynomial pullback(const SuperPolynomial& p, const FlowSpec& spec,
                         bool inverse = false);

/// Transformed superfield Φ̃ = Φ ∘ flow⁻¹ (solutions map to solutions).
/// Supersymmetry flows lower the jet order by one.
Superfield transform_field(const Superfield& f, const FlowSpec& spec);

}  // namespace supersinh
