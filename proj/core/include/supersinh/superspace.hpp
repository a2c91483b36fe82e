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
#include <map>
#include <optional>
#include <random>
#include <string>

#include "supersinh/grassmann.hpp"

namespace supersinh {

/// Superspace coordinates.  `u` stands for the (even) superfield value when
/// polynomials are used as functions on the extended space (x, t, θ₁, θ₂, Φ),
/// e.g. for invariance checks of symmetry generators.
enum class Var { x, t, u, theta1, theta2 };

/// Index of the Grassmann generator representing θ_i (i = 0, 1) inside the
/// extended algebra Λ_{N+2} built on top of a base algebra Λ_N.
inline unsigned theta_generator(unsigned n_base, unsigned i) {
  return n_base + i;
}

/// Widen a base-ring supernumber into the extended ring Λ_{N+2}.
Supernumber extend(const Supernumber& base_value);

/// Inverse of `extend`; throws ConfigError if θ-bits are populated.
Supernumber strip(const Supernumber& extended_value, unsigned n_base);

/// Assemble the extended-ring value  a0 + θ₁·a1 + θ₂·a2 + θ₁θ₂·a12  from
/// base-ring components (components stand to the right of their
/// θ-monomial; reordering signs are applied internally).
Supernumber pack_components(const Supernumber& a0, const Supernumber& a1,
                            const Supernumber& a2, const Supernumber& a12);

/// Inverse of pack_components: θ-components {a0, a1, a2, a12} of an
/// extended-ring value, returned over the base ring.
std::array<Supernumber, 4> unpack_components(const Supernumber& v,
                                             unsigned n_base);

/// Polynomial on (1|2)-extended superspace with supernumber coefficients.
///
/// Terms are indexed by powers of x, t and u; θ₁, θ₂ are carried as the two
/// top generator bits of the extended coefficient ring Λ_{N+2}, so that every
/// anticommutation sign (coefficient moves, θ-derivatives, products) reduces
/// to the single bitmask sign rule of the Grassmann layer.
///
/// Powers of x and t are stored doubled (`xp2 = 2·power`) so half-integer
/// and negative exponents — which arise in scaling-invariant combinations
/// like t^{1/2}θ₁ — stay exact under multiplication and differentiation.
/// Powers of u are non-negative integers.
class SuperPolynomial {
 public:
  struct Key {
    int xp2 = 0;  // doubled power of x (may be negative or odd)
    int tp2 = 0;  // doubled power of t
    int up = 0;   // power of u (≥ 0)
    auto operator<=>(const Key&) const = default;
  };

  /// Zero polynomial over base ring Λ_N.
  explicit SuperPolynomial(unsigned n_base = 0);

  static SuperPolynomial constant(unsigned n_base, const Supernumber& c_base);
  static SuperPolynomial scalar(unsigned n_base, double c);
  static SuperPolynomial variable(unsigned n_base, Var v);

  /// Monomial c · x^{xp2/2} t^{tp2/2} u^{up} with extended-ring coefficient.
  static SuperPolynomial monomial(unsigned n_base, Key key,
                                  const Supernumber& c_extended);

  unsigned base_generators() const { return n_base_; }
  unsigned extended_generators() const { return n_base_ + 2; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, Supernumber>& terms() const { return terms_; }

  bool is_zero(double tol = 0.0) const;
  double max_abs_coeff() const;

  /// Exact parity across all terms (θ-bits included).
  Parity parity() const;

  SuperPolynomial operator-() const;
  SuperPolynomial& operator+=(const SuperPolynomial& rhs);
  SuperPolynomial& operator-=(const SuperPolynomial& rhs);
  SuperPolynomial& operator*=(double s);

  /// Partial derivative ∂/∂v.  For θ-variables this is the left derivative.
  SuperPolynomial derivative(Var v) const;

  /// Evaluate at real (x, t); the result keeps θ-content in the extended
  /// ring.  Terms with u-powers require `u_value` (extended ring).  Negative
  /// or fractional powers restrict the admissible x, t (DomainError).
  Supernumber evaluate(double x, double t,
                       const std::optional<Supernumber>& u_value = {}) const;

  struct Substitution;  // defined after the class (optional<> needs it complete)

  /// Ring-homomorphic substitution v ↦ image(v).  Images must match the
  /// parity of the variable they replace; substituted variables must appear
  /// with non-negative integer powers.
  SuperPolynomial substituted(const Substitution& images) const;

  /// θ-component polynomial: the θ-free c_m with p = Σ_m θ^m · c_m, for
  /// m ∈ {0b00, 0b01, 0b10, 0b11} (bit 0 ↔ θ₁, bit 1 ↔ θ₂).
  SuperPolynomial theta_component(unsigned theta_mask) const;

  std::string to_string() const;

 private:
  unsigned n_base_;
  std::map<Key, Supernumber> terms_;  // coefficients over Λ_{n_base_+2}

  void prune();
  void check_same_space(const SuperPolynomial& other) const;
};

struct SuperPolynomial::Substitution {
  std::optional<SuperPolynomial> x, t, u, theta1, theta2;
};

SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b);
SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b);
SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial operator*(double s, SuperPolynomial a);
SuperPolynomial operator*(SuperPolynomial a, double s);

/// Left multiplication by an extended-ring coefficient.
SuperPolynomial lmul(const Supernumber& c_extended, const SuperPolynomial& p);

bool approx_equal(const SuperPolynomial& a, const SuperPolynomial& b,
                  double tol);
double max_abs_diff(const SuperPolynomial& a, const SuperPolynomial& b);

/// Pseudo-random even polynomial superfield sample: `terms` monomials with
/// x- and t-powers up to `max_power`, θ-content drawn from {1, θ₁, θ₂, θ₁θ₂}
/// and base-ring coefficients of matching parity, so that the result is an
/// even superfield with soul content in every base-ring sector.
SuperPolynomial random_superpolynomial(std::mt19937_64& rng, unsigned n_base,
                                       int max_power, std::size_t terms);

}  // namespace supersinh
