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

#include "supersinh/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supersinh/errors.hpp"

namespace supersinh {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " +
                      std::to_string(k));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Jacobi elliptic functions and elliptic integrals
// ---------------------------------------------------------------------------

JacobiValues jacobi_sncndn(double u, double k) {
  require_modulus(k);
  if (k < 1e-14) {
    return {std::sin(u), std::cos(u), 1.0};
  }

  // Arithmetic-geometric mean scale sequence.
  constexpr int kMaxLevels = 32;
  double a[kMaxLevels], c[kMaxLevels];
  a[0] = 1.0;
  c[0] = k;
  double b = std::sqrt(1.0 - k * k);
  int n = 0;
  while (n + 1 < kMaxLevels) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
    if (std::abs(c[n]) < 1e-16 * a[n]) break;
  }

  // Descending amplitude recursion.
  double phi = std::ldexp(a[n] * u, n);
  double phi_next = phi;  // amplitude one level up, needed for dn
  for (int i = n; i >= 1; --i) {
    const double ratio =
        std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi_next = phi;
    phi = 0.5 * (phi + std::asin(ratio));
  }

  JacobiValues v;
  v.sn = std::sin(phi);
  v.cn = std::cos(phi);
  const double denom = std::cos(phi_next - phi);
  v.dn = (std::abs(denom) < 1e-14) ? std::sqrt(1.0 - k * k * v.sn * v.sn)
                                   : v.cn / denom;
  return v;
}

double elliptic_K(double k) {
  require_modulus(k);
  double a = 1.0;
  double b = std::sqrt(1.0 - k * k);
  while (std::abs(a - b) > 1e-16 * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double carlson_rf(double x, double y, double z) {
  constexpr double kErrTol = 8e-4;
  constexpr double kTiny = 1e-300;
  if (std::min({x, y, z}) < 0.0 ||
      std::min({x + y, y + z, z + x}) < kTiny) {
    throw DomainError("carlson_rf arguments must be non-negative with at "
                      "most one zero");
  }
  double xt = x, yt = y, zt = z, ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    ave = (xt + yt + zt) / 3.0;
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 +
              (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) /
             std::sqrt(ave);
    }
  }
  throw NumericalError("carlson_rf did not converge");
}

double elliptic_F(double phi, double k) {
  require_modulus(k);
  if (std::abs(phi) > kPi / 2 + 1e-12) {
    throw DomainError("elliptic_F amplitude must lie in [-pi/2, pi/2]");
  }
  const double s = std::sin(phi);
  const double c2 = std::max(0.0, 1.0 - s * s);
  return s * carlson_rf(c2, 1.0 - k * k * s * s, 1.0);
}

double elliptic_F_from_argument(double x, double k) {
  require_modulus(k);
  if (std::abs(x) > 1.0 + 1e-14) {
    throw DomainError("elliptic_F argument must lie in [-1, 1]");
  }
  x = std::clamp(x, -1.0, 1.0);
  return x * carlson_rf(1.0 - x * x, 1.0 - k * k * x * x, 1.0);
}

// ---------------------------------------------------------------------------
// Weierstrass ℘ over the ring
// ---------------------------------------------------------------------------

namespace {

// Laurent coefficients c_k, k = 2..K, of ℘(z) = z^{-2} + Σ c_k z^{2k-2}.
std::vector<Supernumber> laurent_coefficients(const Supernumber& g2,
                                              const Supernumber& g3,
                                              int kmax) {
  const unsigned n = g2.generators();
  std::vector<Supernumber> c(static_cast<std::size_t>(kmax) + 1,
                             Supernumber(n));
  c[2] = g2 * (1.0 / 20.0);
  c[3] = g3 * (1.0 / 28.0);
  for (int k = 4; k <= kmax; ++k) {
    Supernumber acc(n);
    for (int m = 2; m <= k - 2; ++m) {
      acc += gmul(c[m], c[k - m]);
    }
    c[k] = acc * (3.0 / ((2.0 * k + 1.0) * (k - 3.0)));
  }
  return c;
}

}  // namespace

std::pair<Supernumber, Supernumber> weierstrass_p(double z,
                                                  const Supernumber& g2_in,
                                                  const Supernumber& g3_in) {
  const unsigned n = std::max(g2_in.generators(), g3_in.generators());
  const Supernumber g2 = g2_in.widened(n);
  const Supernumber g3 = g3_in.widened(n);

  double sign_dp = 1.0;
  if (z < 0.0) {  // ℘ is even, ℘′ is odd
    z = -z;
    sign_dp = -1.0;
  }
  if (z < 1e-9) {
    throw PoleError("weierstrass_p evaluated at the lattice pole z = 0");
  }

  int n_dup = 0;
  double z0 = z;
  while (z0 > 0.125) {
    z0 *= 0.5;
    ++n_dup;
  }

  // Seed from the Laurent series at z0.
  constexpr int kSeries = 14;
  const auto c = laurent_coefficients(g2, g3, kSeries);
  Supernumber P = Supernumber::body_element(n, 1.0 / (z0 * z0));
  Supernumber B = Supernumber::body_element(n, -2.0 / (z0 * z0 * z0));
  double zpow = 1.0;  // z0^{2k-2} accumulated
  for (int k = 2; k <= kSeries; ++k) {
    zpow *= z0 * z0;
    P += c[k] * zpow;                          // c_k z^{2k-2}
    B += c[k] * ((2.0 * k - 2.0) * zpow / z0); // (2k-2) c_k z^{2k-3}
  }

  // Argument duplication back up to z.
  const Supernumber half_g2 = g2 * 0.5;
  for (int step = 0; step < n_dup; ++step) {
    const Supernumber P2 = gmul(P, P);
    const Supernumber P3 = gmul(P2, P);
    const Supernumber G = 4.0 * P3 - gmul(g2, P) - g3;  // (℘′)²
    if (std::abs(G.body()) <= kBodyTolerance) {
      throw PoleError("weierstrass_p duplication step hit a half-period or "
                      "pole");
    }
    const Supernumber mu = 6.0 * P2 - half_g2;  // ℘″
    const Supernumber D = 4.0 * G;
    const Supernumber num = gmul(mu, mu);
    const Supernumber inv_D = ginv(D);
    const Supernumber P_next = gmul(num, inv_D) - 2.0 * P;

    // d℘(2z)/d℘(z) for the chain rule on ℘′.
    const Supernumber num_p = 24.0 * gmul(P, mu);
    const Supernumber D_p = 4.0 * (12.0 * P2 - g2);
    const Supernumber dP2dP =
        Supernumber::body_element(n, -2.0) +
        gmul(gmul(num_p, D) - gmul(num, D_p), gmul(inv_D, inv_D));
    B = 0.5 * gmul(dP2dP, B);
    P = P_next;
  }

  return {P, sign_dp * B};
}

std::pair<double, double> weierstrass_p(double z, double g2, double g3) {
  const auto [P, B] = weierstrass_p(z, Supernumber::body_element(0, g2),
                                    Supernumber::body_element(0, g3));
  return {P.body(), B.body()};
}

// ---------------------------------------------------------------------------
// Quartic curves
// ---------------------------------------------------------------------------

Supernumber Quartic::eval(const Supernumber& y) const {
  Supernumber acc = c[4];
  for (int j = 3; j >= 0; --j) {
    acc = gmul(acc, y) + c[j];
  }
  return acc;
}

Supernumber Quartic::deriv1(const Supernumber& y) const {
  Supernumber acc = 4.0 * c[4];
  for (int j = 3; j >= 1; --j) {
    acc = gmul(acc, y) + static_cast<double>(j) * c[j];
  }
  return acc;
}

Supernumber Quartic::deriv2(const Supernumber& y) const {
  // 12 c4 y² + 6 c3 y + 2 c2
  Supernumber acc = 12.0 * c[4];
  acc = gmul(acc, y) + 6.0 * c[3];
  acc = gmul(acc, y) + 2.0 * c[2];
  return acc;
}

double Quartic::eval_body(double y) const {
  double acc = c[4].body();
  for (int j = 3; j >= 0; --j) {
    acc = acc * y + c[j].body();
  }
  return acc;
}

Quartic reduction_quartic(const Supernumber& C0_in, const Supernumber& C1_in) {
  const unsigned n = std::max(C0_in.generators(), C1_in.generators());
  const Supernumber C0 = C0_in.widened(n);
  const Supernumber C1 = C1_in.widened(n);
  if (!C0.has_parity(Parity::Even) || !C1.has_parity(Parity::Even)) {
    throw ParityError("reduction_quartic constants must be even");
  }
  Quartic f;
  f.c[0] = Supernumber::body_element(n, -1.0);
  f.c[1] = -4.0 * C0;
  f.c[2] = 4.0 * C1 - Supernumber::body_element(n, 2.0);
  f.c[3] = -4.0 * C0;
  f.c[4] = Supernumber::body_element(n, -1.0);
  return f;
}

Supernumber weierstrass_g2_of(const Quartic& f) {
  const Supernumber a0 = f.c[4];
  const Supernumber a1 = f.c[3] * 0.25;
  const Supernumber a2 = f.c[2] * (1.0 / 6.0);
  const Supernumber a3 = f.c[1] * 0.25;
  const Supernumber a4 = f.c[0];
  return gmul(a0, a4) - 4.0 * gmul(a1, a3) + 3.0 * gmul(a2, a2);
}

Supernumber weierstrass_g3_of(const Quartic& f) {
  const Supernumber a0 = f.c[4];
  const Supernumber a1 = f.c[3] * 0.25;
  const Supernumber a2 = f.c[2] * (1.0 / 6.0);
  const Supernumber a3 = f.c[1] * 0.25;
  const Supernumber a4 = f.c[0];
  return gmul(gmul(a0, a2), a4) + 2.0 * gmul(gmul(a1, a2), a3) -
         gmul(gmul(a2, a2), a2) - gmul(a0, gmul(a3, a3)) -
         gmul(gmul(a1, a1), a4);
}

QuarticInvariants quartic_invariants(const Supernumber& C0_in,
                                     const Supernumber& C1_in) {
  const unsigned n = std::max(C0_in.generators(), C1_in.generators());
  const Supernumber C0 = C0_in.widened(n);
  const Supernumber C1 = C1_in.widened(n);
  const Quartic f = reduction_quartic(C0, C1);

  QuarticInvariants inv;
  inv.g2_classical = weierstrass_g2_of(f);
  inv.g3_classical = weierstrass_g3_of(f);

  const Supernumber C0sq = gmul(C0, C0);
  const Supernumber C1sq = gmul(C1, C1);
  const Supernumber one = Supernumber::body_element(n, 1.0);

  // g2 = 4/3 - 4C0² + (4/3)C1(C1 - 1)
  inv.g2_stated = Supernumber::body_element(n, 4.0 / 3.0) - 4.0 * C0sq +
                  (4.0 / 3.0) * gmul(C1, C1 - one);

  // g3 = (4/9)C1 - 8/27 + (2/3)C0²C1 - (7/3)C0² - (8/27)C1³ + (4/9)C1²
  inv.g3_stated = (4.0 / 9.0) * C1 -
                  Supernumber::body_element(n, 8.0 / 27.0) +
                  (2.0 / 3.0) * gmul(C0sq, C1) - (7.0 / 3.0) * C0sq -
                  (8.0 / 27.0) * gmul(C1sq, C1) + (4.0 / 9.0) * C1sq;

  inv.g2_max_dev = max_abs_diff(inv.g2_classical, inv.g2_stated);
  inv.g3_max_dev = max_abs_diff(inv.g3_classical, inv.g3_stated);
  return inv;
}

std::vector<double> quartic_real_roots(const Quartic& f) {
  // Trim negligible leading coefficients to get the effective degree.
  int deg = 4;
  while (deg > 0 && std::abs(f.c[deg].body()) < 1e-12) --deg;
  if (deg == 0) return {};

  double max_ratio = 0.0;
  for (int j = 0; j < deg; ++j) {
    max_ratio = std::max(max_ratio,
                         std::abs(f.c[j].body() / f.c[deg].body()));
  }
  const double R = 1.0 + max_ratio;  // Cauchy bound on root magnitude

  const int kSamples = 8000;
  const double h = 2.0 * R / kSamples;
  std::vector<double> roots;
  double x_prev = -R;
  double f_prev = f.eval_body(x_prev);
  for (int i = 1; i <= kSamples; ++i) {
    const double x = -R + i * h;
    const double fx = f.eval_body(x);
    if (f_prev == 0.0) {
      roots.push_back(x_prev);
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      roots.push_back(brent_root(
          [&f](double y) { return f.eval_body(y); }, x_prev, x));
    }
    x_prev = x;
    f_prev = fx;
  }
  if (f_prev == 0.0) roots.push_back(x_prev);

  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || std::abs(r - out.back()) > 1e-8 * (1.0 + R)) {
      out.push_back(r);
    }
  }
  return out;
}

Supernumber ring_newton_root(const Quartic& f, const Supernumber& seed,
                             int max_iter, double tol) {
  Supernumber y = seed;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Supernumber step = gmul(f.eval(y), ginv(f.deriv1(y)));
    y -= step;
    if (step.max_abs_coeff() <= tol * std::max(1.0, y.max_abs_coeff())) {
      return y;
    }
  }
  throw NumericalError("ring_newton_root did not converge");
}

QuarticRootSolution quartic_root_solution(const Quartic& f,
                                          const Supernumber& y0_in,
                                          double sigma) {
  const unsigned n = f.c[0].generators();
  const Supernumber y0 = y0_in.widened(std::max(n, y0_in.generators()));
  if (f.eval(y0).max_abs_coeff() > 1e-8) {
    throw DomainError("quartic_root_solution requires y0 to be a root of "
                      "the quartic");
  }
  const Supernumber g2 = weierstrass_g2_of(f);
  const Supernumber g3 = weierstrass_g3_of(f);
  const auto [P, dP] = weierstrass_p(0.5 * sigma, g2, g3);

  const Supernumber fp = f.deriv1(y0);
  const Supernumber shift = P - f.deriv2(y0) * (1.0 / 24.0);
  const Supernumber inv_shift = ginv(shift);

  QuarticRootSolution sol;
  sol.y = y0 + 0.25 * gmul(fp, inv_shift);
  sol.dy = -0.125 * gmul(gmul(fp, dP), gmul(inv_shift, inv_shift));
  return sol;
}

ModulusCheck jacobi_modulus(double eps, double C1_body) {
  ModulusCheck mc;
  const double denom = 4.0 * C1_body + eps;
  if (std::abs(denom) < 1e-12) {
    mc.k = std::numeric_limits<double>::infinity();
    mc.k2 = std::numeric_limits<double>::infinity();
    mc.valid = false;
    return mc;
  }
  mc.k = 2.0 * eps / denom;
  mc.k2 = mc.k * mc.k;
  mc.valid = mc.k2 > 0.0 && mc.k2 < 1.0;
  return mc;
}

EllipticParams make_elliptic_params(double eps, const Supernumber& C0,
                                    const Supernumber& C1) {
  const QuarticInvariants inv = quartic_invariants(C0, C1);
  EllipticParams p;
  p.g2 = inv.g2_classical;
  p.g3 = inv.g3_classical;
  p.modulus = jacobi_modulus(eps, C1.body());
  return p;
}

// ---------------------------------------------------------------------------
// Root finding and quadrature
// ---------------------------------------------------------------------------

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double tol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw DomainError("brent_root requires a sign-changing bracket");
  }
  double c = b, fc = fb, d = 0.0, e = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
        0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw NumericalError("brent_root did not converge");
}

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double b, double fa, double fm, double fb, double S,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double Sl = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double Sr = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double S2 = Sl + Sr;
  if (std::abs(S2 - S) <= 15.0 * tol) {
    return S2 + (S2 - S) / 15.0;
  }
  if (depth <= 0) {
    throw NumericalError("adaptive_quadrature failed to converge; the "
                         "integrand may be singular");
  }
  return simpson_recurse(f, a, m, fa, flm, fm, Sl, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, Sr, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw NumericalError("adaptive_quadrature integrand is not finite");
  }
  const double S = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, S, tol, 60);
}

double tanh_sinh_quadrature(const std::function<double(double)>& f, double a,
                            double b, double tol) {
  if (a == b) return 0.0;
  if (a > b) return -tanh_sinh_quadrature(f, b, a, tol);
  const double half = 0.5 * (b - a);

  // g(t) = w(t)·f(x(t))·half, with x mapped from (-1, 1) through s = tanh(u),
  // u = (π/2)·sinh(t).  Offsets from the endpoints are computed in the form
  // 2/(e^{2|u|}+1) so that nodes crowding the endpoints stay accurate.
  const auto node = [&](double t) -> double {
    const double u = 0.5 * kPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = 0.5 * kPi * std::cosh(t) / (ch * ch);
    if (w < 1e-280) return 0.0;
    const double off = 2.0 / (std::exp(2.0 * std::abs(u)) + 1.0);
    const double x = (u >= 0.0) ? b - half * off : a + half * off;
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      if (w < 1e-30) return 0.0;  // vanishing weight kills the node
      throw NumericalError("tanh_sinh_quadrature integrand is not finite "
                           "away from the endpoints");
    }
    return w * fx * half;
  };

  const double t_max = 4.0;
  double h = 1.0;
  double sum = node(0.0);
  for (int j = 1; j * h <= t_max; ++j) {
    sum += node(j * h) + node(-j * h);
  }
  double integral = h * sum;

  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    for (int j = 1; j * h <= t_max; j += 2) {  // new odd-index nodes
      sum += node(j * h) + node(-j * h);
    }
    const double next = h * sum;
    const double diff = std::abs(next - integral);
    integral = next;
    if (level >= 3 && diff <= tol * (1.0 + std::abs(integral))) {
      return integral;
    }
  }
  throw NumericalError("tanh_sinh_quadrature did not converge");
}

// ---------------------------------------------------------------------------
// Ring-valued Runge–Kutta
// ---------------------------------------------------------------------------

namespace {

std::vector<Supernumber> axpy(const std::vector<Supernumber>& y, double c,
                              const std::vector<Supernumber>& k) {
  std::vector<Supernumber> out = y;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += c * k[i];
  }
  return out;
}

}  // namespace

RingTrajectory rk4_ring(const RingOde& rhs, std::vector<Supernumber> y0,
                        double s0, double s1, int steps) {
  if (steps < 1) {
    throw ConfigError("rk4_ring requires at least one step");
  }
  const double h = (s1 - s0) / steps;
  RingTrajectory traj;
  traj.s.reserve(steps + 1);
  traj.y.reserve(steps + 1);
  traj.s.push_back(s0);
  traj.y.push_back(y0);

  std::vector<Supernumber> y = std::move(y0);
  for (int i = 0; i < steps; ++i) {
    const double s = s0 + i * h;
    const auto k1 = rhs(s, y);
    const auto k2 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(s + h, axpy(y, h, k3));
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    traj.s.push_back(s0 + (i + 1) * h);
    traj.y.push_back(y);
  }
  return traj;
}

}  // namespace supersinh
