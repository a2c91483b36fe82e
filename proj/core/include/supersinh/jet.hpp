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

#include "supersinh/grassmann.hpp"

namespace supersinh {

/// Truncated Taylor data of a supernumber-valued function of (x, t): the
/// value together with all partial derivatives up to total order `order`
/// (at most 3).  Arithmetic follows the Leibniz rule and preserves the
/// left/right order of factors, so jets remain valid over the
/// non-commutative Grassmann ring.
class Jet {
 public:
  static constexpr int kMaxOrder = 3;
  static constexpr int kSlots = 10;  // (jx, jt) with jx + jt ≤ 3

  Jet() : order_(0), slots_() {}
  Jet(unsigned n_generators, int order);

  static Jet constant(const Supernumber& v, int order);
  /// Jet of the coordinate function x ↦ x (resp. t) at the point.
  static Jet coordinate_x(unsigned n_generators, double x, int order);
  static Jet coordinate_t(unsigned n_generators, double t, int order);

  int order() const { return order_; }
  unsigned generators() const { return slots_[0].generators(); }

  /// Slot index for the mixed partial ∂_x^{jx} ∂_t^{jt}.
  static int index(int jx, int jt);

  const Supernumber& at(int jx, int jt) const;
  Supernumber& at(int jx, int jt);

  const Supernumber& value() const { return slots_[0]; }

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(double s);

 private:
  int order_;
  std::array<Supernumber, kSlots> slots_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);

/// Jet product (Leibniz to the common order; factor order preserved).
Jet operator*(const Jet& a, const Jet& b);

/// Constant multiplication from the left / right (they differ when both the
/// constant and the jet are odd).
Jet lmul(const Supernumber& c, const Jet& j);
Jet rmul(const Jet& j, const Supernumber& c);

/// Jet of ∂f/∂x (order drops by one).
Jet shift_x(const Jet& j);
/// Jet of ∂f/∂t (order drops by one).
Jet shift_t(const Jet& j);

/// Left θ-derivative applied to every slot (for jets whose values carry
/// θ-content in an extended ring).
Jet theta_derivative(const Jet& j, unsigned generator_index);

}  // namespace supersinh
