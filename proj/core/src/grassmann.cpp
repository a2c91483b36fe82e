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

#include "supersinh/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

namespace supersinh {

namespace {

constexpr unsigned kMaxGenerators = 16;

unsigned checked_generators(unsigned n) {
  if (n > kMaxGenerators) {
    throw ConfigError("Grassmann algebra with " + std::to_string(n) +
                      " generators exceeds the supported maximum of " +
                      std::to_string(kMaxGenerators));
  }
  return n;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Parity p) {
  switch (p) {
    case Parity::Even:
      return os << "even";
    case Parity::Odd:
      return os << "odd";
    case Parity::Mixed:
      return os << "mixed";
  }
  return os;
}

Supernumber::Supernumber(unsigned n_generators)
    : n_(checked_generators(n_generators)),
      coeff_(std::size_t{1} << n_generators, 0.0) {}

Supernumber Supernumber::body_element(unsigned n_generators, double body) {
  Supernumber a(n_generators);
  a.coeff_[0] = body;
  return a;
}

Supernumber Supernumber::generator(unsigned n_generators, unsigned index) {
  if (index >= n_generators) {
    throw ConfigError("generator index " + std::to_string(index) +
                      " out of range for Λ_" + std::to_string(n_generators));
  }
  return monomial(n_generators, std::uint32_t{1} << index, 1.0);
}

Supernumber Supernumber::monomial(unsigned n_generators, std::uint32_t mask,
                                  double coefficient) {
  Supernumber a(n_generators);
  if (mask >= a.coeff_.size()) {
    throw ConfigError("monomial mask " + std::to_string(mask) +
                      " out of range for Λ_" + std::to_string(n_generators));
  }
  a.coeff_[mask] = coefficient;
  return a;
}

Supernumber Supernumber::soul() const {
  Supernumber s(*this);
  s.coeff_[0] = 0.0;
  return s;
}

bool Supernumber::is_zero(double tol) const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [tol](double c) { return std::abs(c) <= tol; });
}

double Supernumber::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeff_) m = std::max(m, std::abs(c));
  return m;
}

Parity Supernumber::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (std::uint32_t m = 0; m < coeff_.size(); ++m) {
    if (coeff_[m] == 0.0) continue;
    (std::popcount(m) % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return Parity::Mixed;
  if (has_odd) return Parity::Odd;
  return Parity::Even;
}

bool Supernumber::has_parity(Parity p) const {
  if (p == Parity::Mixed) return true;
  Parity actual = parity();
  return actual == p || is_zero();
}

Supernumber Supernumber::widened(unsigned n_new) const {
  if (n_new < n_) {
    throw ConfigError("widened: target algebra is smaller than the source");
  }
  Supernumber out(n_new);
  std::copy(coeff_.begin(), coeff_.end(), out.coeff_.begin());
  return out;
}

Supernumber Supernumber::restricted(unsigned n_new) const {
  if (n_new > n_) {
    throw ConfigError("restricted: target algebra is larger than the source");
  }
  Supernumber out(n_new);
  for (std::uint32_t m = 0; m < coeff_.size(); ++m) {
    if (coeff_[m] == 0.0) continue;
    if (m >= out.coeff_.size()) {
      throw ConfigError(
          "restricted: nonzero coefficient involves a dropped generator");
    }
    out.coeff_[m] = coeff_[m];
  }
  return out;
}

Supernumber Supernumber::left_derivative(unsigned k) const {
  if (k >= n_) {
    throw ConfigError("left_derivative: generator index out of range");
  }
  const std::uint32_t bit = std::uint32_t{1} << k;
  const std::uint32_t below = bit - 1;
  Supernumber out(n_);
  for (std::uint32_t m = 0; m < coeff_.size(); ++m) {
    if (coeff_[m] == 0.0 || !(m & bit)) continue;
    const int sign = (std::popcount(m & below) % 2 == 0) ? 1 : -1;
    out.coeff_[m & ~bit] += sign * coeff_[m];
  }
  return out;
}

Supernumber Supernumber::operator-() const {
  Supernumber out(*this);
  for (double& c : out.coeff_) c = -c;
  return out;
}

void Supernumber::check_same_algebra(const Supernumber& other) const {
  if (n_ != other.n_) {
    throw ConfigError("supernumber operands live in different algebras (Λ_" +
                      std::to_string(n_) + " vs Λ_" + std::to_string(other.n_) +
                      ")");
  }
}

Supernumber& Supernumber::operator+=(const Supernumber& rhs) {
  check_same_algebra(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

Supernumber& Supernumber::operator-=(const Supernumber& rhs) {
  check_same_algebra(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

Supernumber& Supernumber::operator*=(double s) {
  for (double& c : coeff_) c *= s;
  return *this;
}

std::string Supernumber::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

int reorder_sign(std::uint32_t m1, std::uint32_t m2) {
  // For each generator j in m2, every generator of m1 above j must hop over
  // it when merging the two ascending monomials.
  int swaps = 0;
  for (std::uint32_t rest = m2; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    swaps += std::popcount(m1 >> (j + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Supernumber gadd(const Supernumber& a, const Supernumber& b) {
  Supernumber out(a);
  out += b;
  return out;
}

Supernumber gsub(const Supernumber& a, const Supernumber& b) {
  Supernumber out(a);
  out -= b;
  return out;
}

Supernumber gmul(const Supernumber& a, const Supernumber& b) {
  Supernumber out(a.generators());
  if (a.generators() != b.generators()) {
    throw ConfigError("gmul: operands live in different algebras");
  }
  const std::uint32_t dim = static_cast<std::uint32_t>(a.dimension());
  out.coeff(0) += a[0] * b[0];
  // The (i, j) and (j, i) contributions are accumulated as one fused pair so
  // that antisymmetric cancellations — an odd element times itself, graded
  // commutators of identical factors — are exact in floating point instead
  // of leaving accumulation-order residue.
  for (std::uint32_t i = 0; i + 1 < dim; ++i) {
    const double ai = a[i];
    const double bi = b[i];
    for (std::uint32_t j = i + 1; j < dim; ++j) {
      if ((i & j) != 0) continue;
      const double aj = a[j];
      const double bj = b[j];
      const double fwd =
          (ai != 0.0 && bj != 0.0) ? reorder_sign(i, j) * (ai * bj) : 0.0;
      const double rev =
          (aj != 0.0 && bi != 0.0) ? reorder_sign(j, i) * (aj * bi) : 0.0;
      if (fwd != 0.0 || rev != 0.0) out.coeff(i | j) += fwd + rev;
    }
  }
  return out;
}

Supernumber operator*(double s, const Supernumber& a) {
  Supernumber out(a);
  out *= s;
  return out;
}

Supernumber operator*(const Supernumber& a, double s) { return s * a; }

bool operator==(const Supernumber& a, const Supernumber& b) {
  return a.generators() == b.generators() && max_abs_diff(a, b) == 0.0;
}

double max_abs_diff(const Supernumber& a, const Supernumber& b) {
  if (a.generators() != b.generators()) {
    throw ConfigError("max_abs_diff: operands live in different algebras");
  }
  double m = 0.0;
  for (std::uint32_t i = 0; i < a.dimension(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

bool approx_equal(const Supernumber& a, const Supernumber& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Supernumber ginv(const Supernumber& a) {
  const double b = a.body();
  if (std::abs(b) <= kBodyTolerance) {
    throw NotInvertibleError(
        "supernumber has (numerically) vanishing body and no inverse");
  }
  // a = b(1 + u) with u = soul/b;  a^{-1} = (1/b) Σ_k (−u)^k, a finite sum.
  const Supernumber u = a.soul() * (1.0 / b);
  Supernumber sum = Supernumber::body_element(a.generators(), 1.0);
  Supernumber power = Supernumber::body_element(a.generators(), 1.0);
  for (unsigned k = 1; k <= a.generators(); ++k) {
    power = gmul(power, u) * (-1.0);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * (1.0 / b);
}

Supernumber gdiv(const Supernumber& a, const Supernumber& b) {
  return gmul(a, ginv(b));
}

Supernumber gfunc(const Supernumber& a,
                  const std::function<double(unsigned, double)>& derivatives) {
  const double b = a.body();
  const Supernumber s = a.soul();
  Supernumber out = Supernumber::body_element(a.generators(), derivatives(0, b));
  Supernumber power = Supernumber::body_element(a.generators(), 1.0);
  double factorial = 1.0;
  for (unsigned k = 1; k <= a.generators(); ++k) {
    power = gmul(power, s);
    if (power.is_zero()) break;
    factorial *= k;
    out += power * (derivatives(k, b) / factorial);
  }
  return out;
}

Supernumber gsinh(const Supernumber& a) {
  return gfunc(a, [](unsigned k, double x) {
    return (k % 2 == 0) ? std::sinh(x) : std::cosh(x);
  });
}

Supernumber gcosh(const Supernumber& a) {
  return gfunc(a, [](unsigned k, double x) {
    return (k % 2 == 0) ? std::cosh(x) : std::sinh(x);
  });
}

Supernumber gtanh(const Supernumber& a) {
  // Division of the two analytic lifts keeps the identity tanh = sinh/cosh
  // exact in the ring (cosh has unit body, hence is invertible).
  return gdiv(gsinh(a), gcosh(a));
}

Supernumber gexp(const Supernumber& a) {
  return gfunc(a, [](unsigned, double x) { return std::exp(x); });
}

Supernumber gsqrt(const Supernumber& a) {
  if (a.body() <= 0.0) {
    throw DomainError("gsqrt: body must be positive");
  }
  return gpow(a, 0.5);
}

Supernumber gpow(const Supernumber& a, double p) {
  const double rounded = std::round(p);
  if (rounded == p && p >= 0.0 && p <= 64.0) {
    Supernumber out = Supernumber::body_element(a.generators(), 1.0);
    for (unsigned k = 0; k < static_cast<unsigned>(rounded); ++k) {
      out = gmul(out, a);
    }
    return out;
  }
  if (a.body() <= 0.0) {
    throw DomainError("gpow: fractional power requires a positive body");
  }
  return gfunc(a, [p](unsigned k, double x) {
    double c = 1.0;
    for (unsigned j = 0; j < k; ++j) c *= (p - j);
    return c * std::pow(x, p - k);
  });
}

std::ostream& operator<<(std::ostream& os, const Supernumber& a) {
  bool first = true;
  for (std::uint32_t m = 0; m < a.dimension(); ++m) {
    const double c = a[m];
    if (c == 0.0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    os << std::abs(c);
    for (unsigned i = 0; i < a.generators(); ++i) {
      if (m & (std::uint32_t{1} << i)) os << "·ξ" << (i + 1);
    }
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace supersinh
