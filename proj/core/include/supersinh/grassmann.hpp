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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "supersinh/errors.hpp"

namespace supersinh {

/// Grassmann parity of a supernumber or superspace expression.
enum class Parity { Even, Odd, Mixed };

std::ostream& operator<<(std::ostream& os, Parity p);

/// Body tolerance: a supernumber whose body is smaller than this in absolute
/// value is treated as non-invertible.
inline constexpr double kBodyTolerance = 1e-12;

/// Element of the finitely generated Grassmann algebra Λ_N over the reals.
///
/// A supernumber is stored as a dense coefficient vector indexed by a
/// generator bitmask: index `m` holds the real coefficient of the ordered
/// monomial ξ_{i1}·ξ_{i2}·…  (i1 < i2 < …) whose generator set is the bit
/// set of `m`.  Index 0 is the body.  The canonical monomial order is
/// ascending bitmask.
///
/// All binary operations require both operands to live in the same algebra
/// (equal generator count); mixing sizes throws ConfigError.
class Supernumber {
 public:
  /// Zero element of Λ_N (default: Λ_0 = ℝ, value 0).
  explicit Supernumber(unsigned n_generators = 0);

  /// Pure-body element b·1 of Λ_N.
  static Supernumber body_element(unsigned n_generators, double body);

  /// The i-th generator ξ_i (0-based, i < N).
  static Supernumber generator(unsigned n_generators, unsigned index);

  /// c times the ordered monomial with generator set `mask`.
  static Supernumber monomial(unsigned n_generators, std::uint32_t mask,
                              double coefficient);

  unsigned generators() const { return n_; }
  std::size_t dimension() const { return coeff_.size(); }

  /// Coefficient of the ordered monomial `mask` (0 ≤ mask < 2^N).
  double operator[](std::uint32_t mask) const { return coeff_[mask]; }
  double& coeff(std::uint32_t mask) { return coeff_[mask]; }

  double body() const { return coeff_[0]; }
  Supernumber soul() const;

  bool is_zero(double tol = 0.0) const;
  double max_abs_coeff() const;

  /// Exact Grassmann parity of the stored coefficients: Even if only
  /// even-degree monomials carry nonzero coefficients, Odd if only
  /// odd-degree ones do, Mixed otherwise.  The zero element is Even.
  Parity parity() const;

  /// True if every nonzero coefficient sits on a monomial of the parity
  /// `p` (Mixed accepts anything).
  bool has_parity(Parity p) const;

  /// Widen to an algebra with `n_new` ≥ N generators (coefficients carried
  /// over, new generators unused).
  Supernumber widened(unsigned n_new) const;

  /// Restrict to the first `n_new` ≤ N generators.  Throws ConfigError if a
  /// nonzero coefficient involves a dropped generator.
  Supernumber restricted(unsigned n_new) const;

  /// Left derivative ∂/∂ξ_k: removes ξ_k from each monomial containing it,
  /// with the sign (−1)^{#generators below k in the monomial}.
  Supernumber left_derivative(unsigned k) const;

  Supernumber operator-() const;
  Supernumber& operator+=(const Supernumber& rhs);
  Supernumber& operator-=(const Supernumber& rhs);
  Supernumber& operator*=(double s);

  std::string to_string() const;

 private:
  unsigned n_;
  std::vector<double> coeff_;  // size 2^n_

  void check_same_algebra(const Supernumber& other) const;
};

/// Sign (−1)^{#inversions} picked up by reordering the concatenation of two
/// disjoint ascending monomials `m1`·`m2` into a single ascending monomial.
int reorder_sign(std::uint32_t m1, std::uint32_t m2);

Supernumber gadd(const Supernumber& a, const Supernumber& b);
Supernumber gsub(const Supernumber& a, const Supernumber& b);

/// Grassmann product.  Bilinear; monomials multiply by mask union with the
/// reorder sign, and vanish when they share a generator.
Supernumber gmul(const Supernumber& a, const Supernumber& b);

inline Supernumber operator+(const Supernumber& a, const Supernumber& b) {
  return gadd(a, b);
}
inline Supernumber operator-(const Supernumber& a, const Supernumber& b) {
  return gsub(a, b);
}
inline Supernumber operator*(const Supernumber& a, const Supernumber& b) {
  return gmul(a, b);
}
Supernumber operator*(double s, const Supernumber& a);
Supernumber operator*(const Supernumber& a, double s);

bool operator==(const Supernumber& a, const Supernumber& b);

/// max |coefficient difference| (operands must share the algebra).
double max_abs_diff(const Supernumber& a, const Supernumber& b);
bool approx_equal(const Supernumber& a, const Supernumber& b, double tol);

/// Multiplicative inverse.  Writes a = b(1 + s/b) with body b and soul s and
/// expands (1 + s/b)^{-1} as a finite geometric series (the soul is
/// nilpotent).  Throws NotInvertibleError when |body| ≤ kBodyTolerance.
Supernumber ginv(const Supernumber& a);

/// Supernumber division a·b^{-1}.
Supernumber gdiv(const Supernumber& a, const Supernumber& b);

/// Lift of a real-analytic scalar function to the Grassmann algebra via the
/// finite Taylor expansion around the body:
///     f(b + s) = Σ_k f^{(k)}(b)·s^k / k!      (s nilpotent, sum finite).
/// `derivatives(k, b)` must return f^{(k)}(b) for all k needed (k = 0 up to
/// the soul's nilpotency index, at most N).
Supernumber gfunc(const Supernumber& a,
                  const std::function<double(unsigned, double)>& derivatives);

Supernumber gsinh(const Supernumber& a);
Supernumber gcosh(const Supernumber& a);
Supernumber gtanh(const Supernumber& a);
Supernumber gexp(const Supernumber& a);

/// Square root (body must be positive).
Supernumber gsqrt(const Supernumber& a);

/// Real power a^p (body must be positive unless p is a small non-negative
/// integer, in which case repeated multiplication is used).
Supernumber gpow(const Supernumber& a, double p);

std::ostream& operator<<(std::ostream& os, const Supernumber& a);

}  // namespace supersinh
