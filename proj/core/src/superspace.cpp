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

#include "supersinh/superspace.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace supersinh {

namespace {

/// Parity of a monomial mask restricted to the base (ξ) generators.
int base_degree(std::uint32_t mask, unsigned n_base) {
  return std::popcount(mask & ((std::uint32_t{1} << n_base) - 1));
}

int theta_degree(std::uint32_t mask, unsigned n_base) {
  return std::popcount(mask >> n_base);
}

}  // namespace

Supernumber extend(const Supernumber& base_value) {
  return base_value.widened(base_value.generators() + 2);
}

Supernumber strip(const Supernumber& extended_value, unsigned n_base) {
  if (extended_value.generators() != n_base + 2) {
    throw ConfigError("strip: value does not live in the extended ring");
  }
  return extended_value.restricted(n_base);
}

Supernumber pack_components(const Supernumber& a0, const Supernumber& a1,
                            const Supernumber& a2, const Supernumber& a12) {
  const unsigned n = a0.generators();
  if (a1.generators() != n || a2.generators() != n || a12.generators() != n) {
    throw ConfigError("pack_components: components live in different algebras");
  }
  const Supernumber th1 = Supernumber::generator(n + 2, theta_generator(n, 0));
  const Supernumber th2 = Supernumber::generator(n + 2, theta_generator(n, 1));
  Supernumber v = extend(a0);
  v += gmul(th1, extend(a1));
  v += gmul(th2, extend(a2));
  v += gmul(gmul(th1, th2), extend(a12));
  return v;
}

std::array<Supernumber, 4> unpack_components(const Supernumber& v,
                                             unsigned n_base) {
  if (v.generators() != n_base + 2) {
    throw ConfigError("unpack_components: value does not live in Λ_{N+2}");
  }
  std::array<Supernumber, 4> comp{Supernumber(n_base), Supernumber(n_base),
                                  Supernumber(n_base), Supernumber(n_base)};
  const std::uint32_t base_mask = (std::uint32_t{1} << n_base) - 1;
  for (std::uint32_t m = 0; m < v.dimension(); ++m) {
    const double c = v[m];
    if (c == 0.0) continue;
    const std::uint32_t s = m & base_mask;
    const unsigned tdeg = theta_degree(m, n_base);
    const unsigned tmask = static_cast<unsigned>(m >> n_base);
    // Stored monomial is ξ_S·θ^m; the component convention θ^m·c needs the
    // reorder sign (−1)^{|S|·|θ|}.
    const int sign =
        (static_cast<unsigned>(base_degree(m, n_base)) * tdeg % 2 == 0) ? 1
                                                                        : -1;
    comp[tmask].coeff(s) += sign * c;
  }
  return comp;
}

SuperPolynomial::SuperPolynomial(unsigned n_base) : n_base_(n_base) {}

SuperPolynomial SuperPolynomial::constant(unsigned n_base,
                                          const Supernumber& c_base) {
  if (c_base.generators() != n_base) {
    throw ConfigError("SuperPolynomial::constant: wrong coefficient ring");
  }
  return monomial(n_base, Key{}, c_base.widened(n_base + 2));
}

SuperPolynomial SuperPolynomial::scalar(unsigned n_base, double c) {
  return monomial(n_base, Key{},
                  Supernumber::body_element(n_base + 2, c));
}

SuperPolynomial SuperPolynomial::variable(unsigned n_base, Var v) {
  switch (v) {
    case Var::x:
      return monomial(n_base, Key{2, 0, 0},
                      Supernumber::body_element(n_base + 2, 1.0));
    case Var::t:
      return monomial(n_base, Key{0, 2, 0},
                      Supernumber::body_element(n_base + 2, 1.0));
    case Var::u:
      return monomial(n_base, Key{0, 0, 1},
                      Supernumber::body_element(n_base + 2, 1.0));
    case Var::theta1:
      return monomial(n_base, Key{},
                      Supernumber::generator(n_base + 2, theta_generator(n_base, 0)));
    case Var::theta2:
      return monomial(n_base, Key{},
                      Supernumber::generator(n_base + 2, theta_generator(n_base, 1)));
  }
  throw ConfigError("SuperPolynomial::variable: unknown variable");
}

SuperPolynomial SuperPolynomial::monomial(unsigned n_base, Key key,
                                          const Supernumber& c_extended) {
  if (c_extended.generators() != n_base + 2) {
    throw ConfigError("SuperPolynomial::monomial: coefficient must live in Λ_{N+2}");
  }
  if (key.up < 0) {
    throw ConfigError("SuperPolynomial::monomial: negative u-power");
  }
  SuperPolynomial p(n_base);
  if (!c_extended.is_zero()) p.terms_.emplace(key, c_extended);
  return p;
}

bool SuperPolynomial::is_zero(double tol) const {
  for (const auto& [k, c] : terms_) {
    if (!c.is_zero(tol)) return false;
  }
  return true;
}

double SuperPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, c.max_abs_coeff());
  return m;
}

Parity SuperPolynomial::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [k, c] : terms_) {
    switch (c.parity()) {
      case Parity::Even:
        has_even = !c.is_zero() || has_even;
        break;
      case Parity::Odd:
        has_odd = true;
        break;
      case Parity::Mixed:
        return Parity::Mixed;
    }
  }
  if (has_even && has_odd) return Parity::Mixed;
  if (has_odd) return Parity::Odd;
  return Parity::Even;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial out(*this);
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

void SuperPolynomial::check_same_space(const SuperPolynomial& other) const {
  if (n_base_ != other.n_base_) {
    throw ConfigError("superpolynomial operands use different base rings");
  }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& rhs) {
  check_same_space(rhs);
  for (const auto& [k, c] : rhs.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
    }
  }
  prune();
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& rhs) {
  check_same_space(rhs);
  for (const auto& [k, c] : rhs.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, -c);
    } else {
      it->second -= c;
    }
  }
  prune();
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(double s) {
  for (auto& [k, c] : terms_) c *= s;
  prune();
  return *this;
}

void SuperPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

SuperPolynomial SuperPolynomial::derivative(Var v) const {
  SuperPolynomial out(n_base_);
  for (const auto& [k, c] : terms_) {
    switch (v) {
      case Var::x: {
        if (k.xp2 == 0) break;
        Key nk = k;
        nk.xp2 -= 2;
        out += monomial(n_base_, nk, c * (k.xp2 / 2.0));
        break;
      }
      case Var::t: {
        if (k.tp2 == 0) break;
        Key nk = k;
        nk.tp2 -= 2;
        out += monomial(n_base_, nk, c * (k.tp2 / 2.0));
        break;
      }
      case Var::u: {
        if (k.up == 0) break;
        Key nk = k;
        nk.up -= 1;
        out += monomial(n_base_, nk, c * static_cast<double>(k.up));
        break;
      }
      case Var::theta1:
        out += monomial(n_base_, k,
                        c.left_derivative(theta_generator(n_base_, 0)));
        break;
      case Var::theta2:
        out += monomial(n_base_, k,
                        c.left_derivative(theta_generator(n_base_, 1)));
        break;
    }
  }
  return out;
}

Supernumber SuperPolynomial::evaluate(
    double x, double t, const std::optional<Supernumber>& u_value) const {
  Supernumber acc(n_base_ + 2);
  for (const auto& [k, c] : terms_) {
    double w = 1.0;
    for (auto [p2, base] : {std::pair{k.xp2, x}, std::pair{k.tp2, t}}) {
      if (p2 == 0) continue;
      if (p2 % 2 == 0) {
        if (base == 0.0 && p2 < 0) {
          throw DomainError("evaluate: negative power at zero argument");
        }
        w *= std::pow(base, p2 / 2);
      } else {
        if (base <= 0.0) {
          throw DomainError(
              "evaluate: fractional power requires a positive argument");
        }
        w *= std::pow(base, p2 / 2.0);
      }
    }
    Supernumber term = c * w;
    if (k.up > 0) {
      if (!u_value) {
        throw DomainError("evaluate: polynomial depends on the field value");
      }
      term = gmul(term, gpow(*u_value, static_cast<double>(k.up)));
    }
    acc += term;
  }
  return acc;
}

SuperPolynomial SuperPolynomial::substituted(const Substitution& images) const {
  auto parity_check = [&](const std::optional<SuperPolynomial>& img,
                          Parity expected, const char* name) {
    if (!img) return;
    if (img->base_generators() != n_base_) {
      throw ConfigError("substituted: image ring mismatch");
    }
    const Parity p = img->parity();
    if (p != expected && !img->is_zero()) {
      throw ParityError(std::string("substituted: image of ") + name +
                        " has the wrong parity");
    }
  };
  parity_check(images.x, Parity::Even, "x");
  parity_check(images.t, Parity::Even, "t");
  parity_check(images.u, Parity::Even, "u");
  parity_check(images.theta1, Parity::Odd, "theta1");
  parity_check(images.theta2, Parity::Odd, "theta2");

  // An image of the form  v ↦ a·v  (pure positive rescaling) composes with
  // fractional and negative powers: v^{p} ↦ a^{p}·v^{p}.
  auto scaling_factor = [&](const std::optional<SuperPolynomial>& img,
                            Key self) -> std::optional<double> {
    if (!img || img->terms_.size() != 1) return std::nullopt;
    const auto& [key, coeff] = *img->terms_.begin();
    if (!(key == self)) return std::nullopt;
    if (!coeff.soul().is_zero()) return std::nullopt;
    return coeff.body();
  };
  const std::optional<double> x_scale = scaling_factor(images.x, Key{2, 0, 0});
  const std::optional<double> t_scale = scaling_factor(images.t, Key{0, 2, 0});

  const std::uint32_t base_mask = (std::uint32_t{1} << n_base_) - 1;
  SuperPolynomial out(n_base_);
  for (const auto& [k, c] : terms_) {
    // Integer-power requirement only where a general image actually
    // replaces the variable; untouched or rescaled variables keep their
    // (possibly fractional) powers.
    auto power_of = [&](int p2, const std::optional<SuperPolynomial>& img,
                        const std::optional<double>& scale)
        -> std::pair<int, bool> {
      if (!img || scale) return {0, false};
      if (p2 % 2 != 0 || p2 < 0) {
        throw DomainError(
            "substituted: non-scaling images require non-negative integer "
            "powers");
      }
      return {p2 / 2, true};
    };
    const auto [px, sx] = power_of(k.xp2, images.x, x_scale);
    const auto [pt, st] = power_of(k.tp2, images.t, t_scale);
    const int pu = images.u ? k.up : 0;

    double scale_weight = 1.0;
    for (auto [p2, scale] : {std::pair{k.xp2, x_scale},
                             std::pair{k.tp2, t_scale}}) {
      if (!scale || p2 == 0) continue;
      if (*scale <= 0.0 && (p2 % 2 != 0 || p2 < 0)) {
        throw DomainError(
            "substituted: fractional/negative powers need a positive "
            "rescaling");
      }
      scale_weight *= std::pow(*scale, p2 / 2.0);
    }

    for (std::uint32_t m = 0; m < (std::uint32_t{1} << (n_base_ + 2)); ++m) {
      const double real = c[m];
      if (real == 0.0) continue;
      const std::uint32_t s = m & base_mask;
      const bool th1 = (m >> n_base_) & 1u;
      const bool th2 = (m >> (n_base_ + 1)) & 1u;

      // Rebuild the ordered product  real·ξ_S · x^a · t^b · u^c · θ₁ · θ₂
      // with each substituted factor replaced by its image.
      Key residual = k;
      SuperPolynomial acc = monomial(
          n_base_, Key{},
          Supernumber::monomial(n_base_ + 2, s, real * scale_weight));
      auto apply_power = [&](const SuperPolynomial& img, int reps) {
        for (int r = 0; r < reps; ++r) acc = acc * img;
      };
      if (sx) {
        apply_power(*images.x, px);
        residual.xp2 = 0;
      }
      if (st) {
        apply_power(*images.t, pt);
        residual.tp2 = 0;
      }
      if (images.u) {
        apply_power(*images.u, pu);
        residual.up = 0;
      }
      acc = acc * monomial(n_base_, residual,
                           Supernumber::body_element(n_base_ + 2, 1.0));
      if (th1) {
        acc = acc * (images.theta1 ? *images.theta1
                                   : variable(n_base_, Var::theta1));
      }
      if (th2) {
        acc = acc * (images.theta2 ? *images.theta2
                                   : variable(n_base_, Var::theta2));
      }
      out += acc;
    }
  }
  return out;
}

SuperPolynomial SuperPolynomial::theta_component(unsigned theta_mask) const {
  if (theta_mask > 3) {
    throw ConfigError("theta_component: mask out of range");
  }
  const std::uint32_t base_mask = (std::uint32_t{1} << n_base_) - 1;
  SuperPolynomial out(n_base_);
  for (const auto& [k, c] : terms_) {
    Supernumber comp(n_base_ + 2);
    bool any = false;
    for (std::uint32_t m = 0; m < c.dimension(); ++m) {
      const double real = c[m];
      if (real == 0.0) continue;
      if (static_cast<unsigned>(m >> n_base_) != theta_mask) continue;
      const int sign =
          (static_cast<unsigned>(base_degree(m, n_base_)) *
               static_cast<unsigned>(theta_degree(m, n_base_)) % 2 ==
           0)
              ? 1
              : -1;
      comp.coeff(m & base_mask) += sign * real;
      any = true;
    }
    if (any) out += monomial(n_base_, k, comp);
  }
  return out;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    auto print_power = [&os](const char* name, int p2) {
      if (p2 == 0) return;
      os << "·" << name;
      if (p2 != 2) {
        if (p2 % 2 == 0) {
          os << "^" << (p2 / 2);
        } else {
          os << "^(" << p2 << "/2)";
        }
      }
    };
    print_power("x", k.xp2);
    print_power("t", k.tp2);
    if (k.up > 0) {
      os << "·u";
      if (k.up != 1) os << "^" << k.up;
    }
  }
  return os.str();
}

SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) {
  a += b;
  return a;
}

SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) {
  a -= b;
  return a;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial out(a.base_generators());
  if (a.base_generators() != b.base_generators()) {
    throw ConfigError("superpolynomial product: base ring mismatch");
  }
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      SuperPolynomial::Key k{ka.xp2 + kb.xp2, ka.tp2 + kb.tp2, ka.up + kb.up};
      out += SuperPolynomial::monomial(a.base_generators(), k, gmul(ca, cb));
    }
  }
  return out;
}

SuperPolynomial operator*(double s, SuperPolynomial a) {
  a *= s;
  return a;
}

SuperPolynomial operator*(SuperPolynomial a, double s) {
  a *= s;
  return a;
}

SuperPolynomial lmul(const Supernumber& c_extended, const SuperPolynomial& p) {
  SuperPolynomial out(p.base_generators());
  for (const auto& [k, c] : p.terms()) {
    out += SuperPolynomial::monomial(p.base_generators(), k,
                                     gmul(c_extended, c));
  }
  return out;
}

bool approx_equal(const SuperPolynomial& a, const SuperPolynomial& b,
                  double tol) {
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial d = a - b;
  return d.max_abs_coeff();
}

SuperPolynomial random_superpolynomial(std::mt19937_64& rng, unsigned n_base,
                                       int max_power, std::size_t terms) {
  std::uniform_int_distribution<int> power(0, max_power);
  std::uniform_int_distribution<int> theta(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const unsigned n_ext = n_base + 2;
  SuperPolynomial p = SuperPolynomial::scalar(n_base, 0.0);
  for (std::size_t k = 0; k < terms; ++k) {
    const int th = theta(rng);
    // Coefficient parity matches θ-content parity: the field stays even.
    const int want = std::popcount(static_cast<unsigned>(th)) & 1;
    Supernumber c(n_ext);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n_base); ++mask) {
      if ((std::popcount(mask) & 1) != want) continue;
      c = c + Supernumber::monomial(n_ext, mask, coeff(rng));
    }
    std::uint32_t theta_mask = 0;
    if (th & 1) theta_mask |= std::uint32_t{1} << theta_generator(n_base, 0);
    if (th & 2) theta_mask |= std::uint32_t{1} << theta_generator(n_base, 1);
    if (theta_mask != 0) {
      c = gmul(c, Supernumber::monomial(n_ext, theta_mask, 1.0));
    }
    SuperPolynomial::Key key{2 * power(rng), 2 * power(rng), 0};
    p = p + SuperPolynomial::monomial(n_base, key, c);
  }
  return p;
}

}  // namespace supersinh
