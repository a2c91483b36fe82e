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

#include "supersinh/symalg.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace supersinh {

namespace {

SuperPolynomial zero_poly(unsigned n) { return SuperPolynomial(n); }

SuperPolynomial var_x(unsigned n) { return SuperPolynomial::variable(n, Var::x); }
SuperPolynomial var_t(unsigned n) { return SuperPolynomial::variable(n, Var::t); }
SuperPolynomial var_u(unsigned n) { return SuperPolynomial::variable(n, Var::u); }
SuperPolynomial var_th1(unsigned n) {
  return SuperPolynomial::variable(n, Var::theta1);
}
SuperPolynomial var_th2(unsigned n) {
  return SuperPolynomial::variable(n, Var::theta2);
}
SuperPolynomial one_poly(unsigned n) { return SuperPolynomial::scalar(n, 1.0); }

Parity flip(Parity p) {
  if (p == Parity::Even) return Parity::Odd;
  if (p == Parity::Odd) return Parity::Even;
  return Parity::Mixed;
}

bool coefficient_fits(const SuperPolynomial& c, Parity required) {
  if (c.is_zero()) return true;
  return c.parity() == required;
}

}  // namespace

SuperVectorField SuperVectorField::zero(unsigned n_base) {
  SuperVectorField X;
  X.name = "0";
  X.parity = Parity::Even;
  X.n_base = n_base;
  X.cx = X.ct = X.cth1 = X.cth2 = X.cu = zero_poly(n_base);
  return X;
}

void check_parity(const SuperVectorField& X) {
  if (X.parity == Parity::Mixed) {
    throw ParityError("vector field '" + X.name + "' has indefinite parity");
  }
  const Parity even_coeff = X.parity;
  const Parity odd_coeff = flip(X.parity);
  if (!coefficient_fits(X.cx, even_coeff) ||
      !coefficient_fits(X.ct, even_coeff) ||
      !coefficient_fits(X.cu, even_coeff) ||
      !coefficient_fits(X.cth1, odd_coeff) ||
      !coefficient_fits(X.cth2, odd_coeff)) {
    throw ParityError("vector field '" + X.name +
                      "' has coefficients inconsistent with its parity");
  }
}

SuperPolynomial apply(const SuperVectorField& X, const SuperPolynomial& p) {
  SuperPolynomial out = X.cx * p.derivative(Var::x);
  out += X.ct * p.derivative(Var::t);
  out += X.cu * p.derivative(Var::u);
  out += X.cth1 * p.derivative(Var::theta1);
  out += X.cth2 * p.derivative(Var::theta2);
  return out;
}

SuperVectorField operator+(const SuperVectorField& X,
                           const SuperVectorField& Y) {
  if (X.n_base != Y.n_base) {
    throw ConfigError("vector field sum: ring mismatch");
  }
  SuperVectorField Z;
  Z.name = X.name + " + " + Y.name;
  if (X.parity == Y.parity) {
    Z.parity = X.parity;
  } else if (X.cx.is_zero() && X.ct.is_zero() && X.cu.is_zero() &&
             X.cth1.is_zero() && X.cth2.is_zero()) {
    Z.parity = Y.parity;
  } else if (Y.cx.is_zero() && Y.ct.is_zero() && Y.cu.is_zero() &&
             Y.cth1.is_zero() && Y.cth2.is_zero()) {
    Z.parity = X.parity;
  } else {
    Z.parity = Parity::Mixed;
  }
  Z.n_base = X.n_base;
  Z.cx = X.cx + Y.cx;
  Z.ct = X.ct + Y.ct;
  Z.cu = X.cu + Y.cu;
  Z.cth1 = X.cth1 + Y.cth1;
  Z.cth2 = X.cth2 + Y.cth2;
  return Z;
}

SuperVectorField operator-(const SuperVectorField& X,
                           const SuperVectorField& Y) {
  return X + (-1.0 * Y);
}

SuperVectorField operator*(double s, const SuperVectorField& X) {
  SuperVectorField Z = X;
  Z.cx *= s;
  Z.ct *= s;
  Z.cu *= s;
  Z.cth1 *= s;
  Z.cth2 *= s;
  return Z;
}

SuperVectorField lmul(const Supernumber& c_extended,
                      const SuperVectorField& X) {
  SuperVectorField Z = X;
  Z.cx = lmul(c_extended, X.cx);
  Z.ct = lmul(c_extended, X.ct);
  Z.cu = lmul(c_extended, X.cu);
  Z.cth1 = lmul(c_extended, X.cth1);
  Z.cth2 = lmul(c_extended, X.cth2);
  const Parity cp = c_extended.parity();
  if (cp == Parity::Mixed) {
    throw ParityError("lmul: constant of indefinite parity");
  }
  if (cp == Parity::Odd) Z.parity = flip(X.parity);
  return Z;
}

SuperVectorField superbracket(const SuperVectorField& X,
                              const SuperVectorField& Y) {
  check_parity(X);
  check_parity(Y);
  const bool both_odd = X.parity == Parity::Odd && Y.parity == Parity::Odd;
  const double sign = both_odd ? 1.0 : -1.0;  // −(−1)^{|X||Y|}
  SuperVectorField Z;
  Z.name = (both_odd ? "{" : "[") + X.name + ", " + Y.name +
           (both_odd ? "}" : "]");
  Z.parity = (X.parity == Y.parity) ? Parity::Even
                                    : Parity::Odd;
  Z.n_base = X.n_base;
  Z.cx = apply(X, Y.cx) + sign * apply(Y, X.cx);
  Z.ct = apply(X, Y.ct) + sign * apply(Y, X.ct);
  Z.cu = apply(X, Y.cu) + sign * apply(Y, X.cu);
  Z.cth1 = apply(X, Y.cth1) + sign * apply(Y, X.cth1);
  Z.cth2 = apply(X, Y.cth2) + sign * apply(Y, X.cth2);
  return Z;
}

SuperVectorField standard_generator(GenId id, unsigned n) {
  SuperVectorField X = SuperVectorField::zero(n);
  switch (id) {
    case GenId::L:
      X.name = "L";
      X.cx = -2.0 * var_x(n);
      X.ct = 2.0 * var_t(n);
      X.cth1 = -1.0 * var_th1(n);
      X.cth2 = var_th2(n);
      break;
    case GenId::Px:
      X.name = "P_x";
      X.cx = one_poly(n);
      break;
    case GenId::Pt:
      X.name = "P_t";
      X.ct = one_poly(n);
      break;
    case GenId::Qx:
      X.name = "Q_x";
      X.parity = Parity::Odd;
      X.cx = -1.0 * var_th1(n);
      X.cth1 = one_poly(n);
      break;
    case GenId::Qt:
      X.name = "Q_t";
      X.parity = Parity::Odd;
      X.ct = var_th2(n);
      X.cth2 = one_poly(n);
      break;
  }
  check_parity(X);
  return X;
}

std::vector<SuperVectorField> standard_generators(unsigned n) {
  return {standard_generator(GenId::L, n), standard_generator(GenId::Px, n),
          standard_generator(GenId::Pt, n), standard_generator(GenId::Qx, n),
          standard_generator(GenId::Qt, n)};
}

std::vector<SuperVectorField> kdv_generators(unsigned n) {
  SuperVectorField C1 = SuperVectorField::zero(n);
  C1.name = "C_1";
  C1.cx = one_poly(n);

  SuperVectorField C2 = SuperVectorField::zero(n);
  C2.name = "C_2";
  C2.ct = one_poly(n);

  SuperVectorField C3 = SuperVectorField::zero(n);
  C3.name = "C_3";
  C3.cx = var_x(n);
  C3.ct = 3.0 * var_t(n);
  C3.cth1 = 0.5 * var_th1(n);
  C3.cth2 = 0.5 * var_th2(n);
  C3.cu = -1.0 * var_u(n);

  SuperVectorField A1 = SuperVectorField::zero(n);
  A1.name = "A_1";
  A1.parity = Parity::Odd;
  A1.cx = var_th1(n);
  A1.cth1 = -1.0 * one_poly(n);

  SuperVectorField A2 = SuperVectorField::zero(n);
  A2.name = "A_2";
  A2.parity = Parity::Odd;
  A2.cx = var_th2(n);
  A2.cth2 = -1.0 * one_poly(n);

  for (const auto* X : {&C1, &C2, &C3, &A1, &A2}) check_parity(*X);
  return {C1, C2, C3, A1, A2};
}

TableCheck verify_commutation_table(const std::vector<SuperVectorField>& gens,
                                    const BracketTable& expected, double tol) {
  TableCheck out;
  const std::size_t m = gens.size();
  if (expected.size() != m) {
    throw ConfigError("verify_commutation_table: expected table shape mismatch");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (expected[i].size() != m) {
      throw ConfigError(
          "verify_commutation_table: expected table shape mismatch");
    }
    for (std::size_t j = 0; j < m; ++j) {
      const SuperVectorField B = superbracket(gens[i], gens[j]);
      SuperVectorField E = SuperVectorField::zero(gens[i].n_base);
      std::ostringstream desc;
      desc << B.name << " = ";
      bool first = true;
      for (std::size_t k = 0; k < m; ++k) {
        const double c = expected[i][j][k];
        if (c == 0.0) continue;
        E = E + c * gens[k];
        if (!first) desc << " + ";
        desc << c << "·" << gens[k].name;
        first = false;
      }
      if (first) desc << "0";
      double dev = 0.0;
      for (auto member : {&SuperVectorField::cx, &SuperVectorField::ct,
                          &SuperVectorField::cu, &SuperVectorField::cth1,
                          &SuperVectorField::cth2}) {
        dev = std::max(dev, max_abs_diff(B.*member, E.*member));
      }
      out.cells.push_back(TableCell{desc.str(), dev, dev <= tol});
      out.max_dev = std::max(out.max_dev, dev);
      out.all_ok = out.all_ok && dev <= tol;
    }
  }
  return out;
}

TableCheck verify_table1(unsigned n, double tol) {
  const auto gens = standard_generators(n);
  // Rows/columns ordered (L, P_x, P_t, Q_x, Q_t); entry = coefficients of
  // the expected bracket in the same basis.
  auto row = [](std::initializer_list<std::vector<double>> cells) {
    return std::vector<std::vector<double>>(cells);
  };
  const std::vector<double> z{0, 0, 0, 0, 0};
  BracketTable expected{
      row({z, {0, 2, 0, 0, 0}, {0, 0, -2, 0, 0}, {0, 0, 0, 1, 0},
           {0, 0, 0, 0, -1}}),
      row({{0, -2, 0, 0, 0}, z, z, z, z}),
      row({{0, 0, 2, 0, 0}, z, z, z, z}),
      row({{0, 0, 0, -1, 0}, z, z, {0, -2, 0, 0, 0}, z}),
      row({{0, 0, 0, 0, 1}, z, z, z, {0, 0, 2, 0, 0}}),
  };
  return verify_commutation_table(gens, expected, tol);
}

TableCheck verify_kdv_table(unsigned n, double tol) {
  const auto gens = kdv_generators(n);
  auto row = [](std::initializer_list<std::vector<double>> cells) {
    return std::vector<std::vector<double>>(cells);
  };
  const std::vector<double> z{0, 0, 0, 0, 0};
  BracketTable expected{
      row({z, z, {1, 0, 0, 0, 0}, z, z}),
      row({z, z, {0, 3, 0, 0, 0}, z, z}),
      row({{-1, 0, 0, 0, 0}, {0, -3, 0, 0, 0}, z, {0, 0, 0, -0.5, 0},
           {0, 0, 0, 0, -0.5}}),
      row({z, z, {0, 0, 0, 0.5, 0}, {-2, 0, 0, 0, 0}, z}),
      row({z, z, {0, 0, 0, 0, 0.5}, z, {-2, 0, 0, 0, 0}}),
  };
  return verify_commutation_table(gens, expected, tol);
}

std::string to_string(SubalgebraId id) {
  return "S" + std::to_string(static_cast<int>(id) + 1);
}

std::optional<SubalgebraId> parse_subalgebra(const std::string& name) {
  std::string s = name;
  if (!s.empty() && (s[0] == 'S' || s[0] == 's')) s = s.substr(1);
  try {
    const int k = std::stoi(s);
    if (k >= 1 && k <= 16) return static_cast<SubalgebraId>(k - 1);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

namespace {

void require_ring(unsigned n, unsigned needed, SubalgebraId id) {
  if (n < needed) {
    throw ConfigError("subalgebra " + to_string(id) + " needs at least " +
                      std::to_string(needed) + " base Grassmann generators");
  }
}

double checked_eps(double eps, SubalgebraId id) {
  if (eps != 1.0 && eps != -1.0) {
    throw ConfigError("subalgebra " + to_string(id) + " requires ε = ±1");
  }
  return eps;
}

}  // namespace

SubalgebraRep subalgebra(SubalgebraId id, double eps, unsigned n) {
  SubalgebraRep rep;
  rep.id = id;
  const auto L = [&] { return standard_generator(GenId::L, n); };
  const auto Px = [&] { return standard_generator(GenId::Px, n); };
  const auto Pt = [&] { return standard_generator(GenId::Pt, n); };
  const auto Qx = [&] { return standard_generator(GenId::Qx, n); };
  const auto Qt = [&] { return standard_generator(GenId::Qt, n); };

  const Supernumber one_ext = Supernumber::body_element(n + 2, 1.0);
  auto mu_ext = [&] {
    require_ring(n, 1, id);
    return extend(Supernumber::generator(n, 0));
  };
  auto nu_ext = [&] {
    require_ring(n, 2, id);
    return extend(Supernumber::generator(n, 1));
  };

  auto set_standard = [&](std::vector<SuperPolynomial> inv,
                          std::vector<std::string> names) {
    rep.standard = true;
    rep.invariants = inv;
    rep.invariant_names = names;
    rep.prefix = one_ext;
    rep.sweep_basis = std::move(inv);
    rep.sweep_names = std::move(names);
  };

  const SuperPolynomial x = var_x(n), t = var_t(n), u = var_u(n),
                        th1 = var_th1(n), th2 = var_th2(n);

  switch (id) {
    case SubalgebraId::S1: {
      rep.label = "{L}";
      rep.X = L();
      SuperPolynomial tau1 = SuperPolynomial::monomial(
          n, SuperPolynomial::Key{0, 1, 0},
          Supernumber::generator(n + 2, theta_generator(n, 0)));
      SuperPolynomial tau2 = SuperPolynomial::monomial(
          n, SuperPolynomial::Key{0, -1, 0},
          Supernumber::generator(n + 2, theta_generator(n, 1)));
      set_standard({x * t, tau1, tau2},
                   {"σ = x·t", "τ₁ = t^{1/2}·θ₁", "τ₂ = t^{-1/2}·θ₂"});
      break;
    }
    case SubalgebraId::S2:
      rep.label = "{P_x}";
      rep.X = Px();
      set_standard({t, th1, th2}, {"σ = t", "τ₁ = θ₁", "τ₂ = θ₂"});
      break;
    case SubalgebraId::S3:
      rep.label = "{P_t}";
      rep.X = Pt();
      set_standard({x, th1, th2}, {"σ = x", "τ₁ = θ₁", "τ₂ = θ₂"});
      break;
    case SubalgebraId::S4:
      rep.eps = checked_eps(eps, id);
      rep.label = eps > 0 ? "{P_x + P_t}" : "{P_x - P_t}";
      rep.X = Px() + eps * Pt();
      set_standard({x - eps * t, th1, th2},
                   {"σ = x - ε·t", "τ₁ = θ₁", "τ₂ = θ₂"});
      break;
    case SubalgebraId::S5:
      rep.label = "{μ·Q_x}";
      rep.X = lmul(mu_ext(), Qx());
      rep.standard = false;
      rep.invariants = {t, th2, u};
      rep.invariant_names = {"t", "θ₂", "Φ"};
      rep.prefix = mu_ext();
      rep.sweep_basis = {x, t, u, th1, th2};
      rep.sweep_names = {"x", "t", "Φ", "θ₁", "θ₂"};
      break;
    case SubalgebraId::S6: {
      rep.label = "{P_x + μ·Q_x}";
      rep.X = Px() + lmul(mu_ext(), Qx());
      set_standard({t, th1 - lmul(mu_ext(), x), th2},
                   {"σ = t", "τ₁ = θ₁ - μ·x", "τ₂ = θ₂"});
      break;
    }
    case SubalgebraId::S7: {
      rep.label = "{P_t + μ·Q_x}";
      rep.X = Pt() + lmul(mu_ext(), Qx());
      set_standard({x + lmul(mu_ext(), t * th1), th1 - lmul(mu_ext(), t), th2},
                   {"σ = x + μ·t·θ₁", "τ₁ = θ₁ - μ·t", "τ₂ = θ₂"});
      break;
    }
    case SubalgebraId::S8: {
      rep.eps = checked_eps(eps, id);
      rep.label = "{P_x + ε·P_t + μ·Q_x}";
      rep.X = Px() + eps * Pt() + lmul(mu_ext(), Qx());
      set_standard({eps * x - t + lmul(mu_ext(), t * th1),
                    th1 - eps * lmul(mu_ext(), t), th2},
                   {"σ = ε·x - t + μ·t·θ₁", "τ₁ = θ₁ - ε·μ·t", "τ₂ = θ₂"});
      break;
    }
    case SubalgebraId::S9:
      rep.label = "{ν·Q_t}";
      rep.X = lmul(nu_ext(), Qt());
      rep.standard = false;
      rep.invariants = {x, th1, u};
      rep.invariant_names = {"x", "θ₁", "Φ"};
      rep.prefix = nu_ext();
      rep.sweep_basis = {x, t, u, th1, th2};
      rep.sweep_names = {"x", "t", "Φ", "θ₁", "θ₂"};
      break;
    case SubalgebraId::S10: {
      rep.label = "{P_x + ν·Q_t}";
      rep.X = Px() + lmul(nu_ext(), Qt());
      set_standard({t - lmul(nu_ext(), th2 * x), th1, th2 - lmul(nu_ext(), x)},
                   {"σ = t - ν·θ₂·x", "τ₁ = θ₁", "τ₂ = θ₂ - ν·x"});
      break;
    }
    case SubalgebraId::S11: {
      rep.label = "{P_t + ν·Q_t}";
      rep.X = Pt() + lmul(nu_ext(), Qt());
      set_standard({x, th1, th2 - lmul(nu_ext(), t)},
                   {"σ = x", "τ₁ = θ₁", "τ₂ = θ₂ - ν·t"});
      break;
    }
    case SubalgebraId::S12: {
      rep.eps = checked_eps(eps, id);
      rep.label = "{P_x + ε·P_t + ν·Q_t}";
      rep.X = Px() + eps * Pt() + lmul(nu_ext(), Qt());
      set_standard({t - eps * x - lmul(nu_ext(), x * th2), th1,
                    th2 - lmul(nu_ext(), x)},
                   {"σ = t - ε·x - ν·x·θ₂", "τ₁ = θ₁", "τ₂ = θ₂ - ν·x"});
      break;
    }
    case SubalgebraId::S13:
      rep.label = "{μ·Q_x + ν·Q_t}";
      rep.X = lmul(mu_ext(), Qx()) + lmul(nu_ext(), Qt());
      rep.standard = false;
      rep.invariants = {u};
      rep.invariant_names = {"Φ"};
      rep.prefix = gmul(mu_ext(), nu_ext());
      rep.sweep_basis = {x, t, u, th1, th2};
      rep.sweep_names = {"x", "t", "Φ", "θ₁", "θ₂"};
      break;
    case SubalgebraId::S14:
      rep.label = "{P_x + μ·Q_x + ν·Q_t}";
      rep.X = Px() + lmul(mu_ext(), Qx()) + lmul(nu_ext(), Qt());
      rep.standard = false;
      rep.invariants = {u};
      rep.invariant_names = {"Φ"};
      rep.prefix = gmul(mu_ext(), nu_ext());
      rep.sweep_basis = {t, u, th1, th2};
      rep.sweep_names = {"t", "Φ", "θ₁", "θ₂"};
      break;
    case SubalgebraId::S15:
      rep.label = "{P_t + μ·Q_x + ν·Q_t}";
      rep.X = Pt() + lmul(mu_ext(), Qx()) + lmul(nu_ext(), Qt());
      rep.standard = false;
      rep.invariants = {u};
      rep.invariant_names = {"Φ"};
      rep.prefix = gmul(mu_ext(), nu_ext());
      rep.sweep_basis = {x, u, th1, th2};
      rep.sweep_names = {"x", "Φ", "θ₁", "θ₂"};
      break;
    case SubalgebraId::S16:
      rep.eps = checked_eps(eps, id);
      rep.label = "{P_x + ε·P_t + μ·Q_x + ν·Q_t}";
      rep.X = Px() + eps * Pt() + lmul(mu_ext(), Qx()) + lmul(nu_ext(), Qt());
      rep.standard = false;
      rep.invariants = {u};
      rep.invariant_names = {"Φ"};
      rep.prefix = gmul(mu_ext(), nu_ext());
      rep.sweep_basis = {x - eps * t, u, th1, th2};
      rep.sweep_names = {"x - ε·t", "Φ", "θ₁", "θ₂"};
      break;
  }
  rep.X.name = rep.label;
  return rep;
}

bool annihilates(const SuperVectorField& X, const SuperPolynomial& p,
                 double tol) {
  return apply(X, p).is_zero(tol);
}

InvarianceReport verify_invariants(const SubalgebraRep& rep, int max_degree,
                                   double tol) {
  InvarianceReport report;
  report.id = rep.id;
  auto record = [&](const std::string& name, const SuperPolynomial& candidate) {
    const SuperPolynomial image = apply(rep.X, candidate);
    const double dev = image.max_abs_coeff();
    report.checks.push_back(InvarianceCheck{name, dev, dev <= tol});
    report.max_dev = std::max(report.max_dev, dev);
    report.all_ok = report.all_ok && dev <= tol;
  };

  for (std::size_t i = 0; i < rep.invariants.size(); ++i) {
    record(rep.invariant_names[i], rep.invariants[i]);
  }

  // Sweep prefix·(monomials in the basis) up to the requested total degree.
  // Odd basis entries appear at most once (their squares vanish anyway).
  const std::size_t nb = rep.sweep_basis.size();
  std::vector<int> exponent(nb, 0);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t pos,
                                                      int remaining) {
    if (pos == nb) {
      int total = 0;
      for (int e : exponent) total += e;
      if (total == 0) return;
      SuperPolynomial m = one_poly(rep.X.n_base);
      std::ostringstream name;
      name << "prefix·";
      bool printed = false;
      for (std::size_t i = 0; i < nb; ++i) {
        for (int r = 0; r < exponent[i]; ++r) m = m * rep.sweep_basis[i];
        if (exponent[i] > 0) {
          if (printed) name << "·";
          name << "(" << rep.sweep_names[i] << ")";
          if (exponent[i] > 1) name << "^" << exponent[i];
          printed = true;
        }
      }
      record(name.str(), lmul(rep.prefix, m));
      return;
    }
    const bool odd = rep.sweep_basis[pos].parity() == Parity::Odd;
    const int cap = odd ? 1 : remaining;
    for (int e = 0; e <= std::min(cap, remaining); ++e) {
      exponent[pos] = e;
      recurse(pos + 1, remaining - e);
    }
    exponent[pos] = 0;
  };
  recurse(0, max_degree);
  return report;
}

std::vector<SubalgebraRep> kdv_nonstandard_reps(unsigned n) {
  if (n < 2) {
    throw ConfigError("KdV nonstandard families need ≥ 2 base generators");
  }
  const auto gens = kdv_generators(n);
  const SuperVectorField& C1 = gens[0];
  const SuperVectorField& A1 = gens[3];
  const SuperVectorField& A2 = gens[4];
  const Supernumber mu = extend(Supernumber::generator(n, 0));
  const Supernumber nu = extend(Supernumber::generator(n, 1));
  const SuperPolynomial x = var_x(n), t = var_t(n), u = var_u(n),
                        th1 = var_th1(n), th2 = var_th2(n);

  std::vector<SubalgebraRep> reps;

  SubalgebraRep r1;
  r1.id = SubalgebraId::S5;  // structural analogue on the KdV side
  r1.label = "{μ·A_1}";
  r1.X = lmul(mu, A1);
  r1.standard = false;
  r1.invariants = {t, th2, u};
  r1.invariant_names = {"t", "θ₂", "A"};
  r1.prefix = mu;
  r1.sweep_basis = {x, t, u, th1, th2};
  r1.sweep_names = {"x", "t", "A", "θ₁", "θ₂"};
  reps.push_back(r1);

  SubalgebraRep r2;
  r2.id = SubalgebraId::S13;
  r2.label = "{μ·A_1 + ν·A_2}";
  r2.X = lmul(mu, A1) + lmul(nu, A2);
  r2.standard = false;
  r2.invariants = {t, u};
  r2.invariant_names = {"t", "A"};
  r2.prefix = gmul(mu, nu);
  r2.sweep_basis = {x, t, u, th1, th2};
  r2.sweep_names = {"x", "t", "A", "θ₁", "θ₂"};
  reps.push_back(r2);

  SubalgebraRep r3;
  r3.id = SubalgebraId::S14;
  r3.label = "{C_1 - μ·A_1 - ν·A_2}";
  r3.X = C1 - lmul(mu, A1) - lmul(nu, A2);
  r3.standard = false;
  r3.invariants = {t, u};
  r3.invariant_names = {"t", "A"};
  r3.prefix = gmul(mu, nu);
  r3.sweep_basis = {t, u, th1, th2};
  r3.sweep_names = {"t", "A", "θ₁", "θ₂"};
  reps.push_back(r3);

  return reps;
}

// ---------------------------------------------------------------------------
// Flows
// ---------------------------------------------------------------------------

namespace {

Supernumber checked_odd_param(const FlowSpec& spec, unsigned n) {
  if (!spec.odd_param) {
    throw ConfigError("supersymmetry flow needs an odd parameter");
  }
  Supernumber p = *spec.odd_param;
  if (p.generators() != n) {
    throw ConfigError("flow parameter lives in the wrong ring");
  }
  if (!p.has_parity(Parity::Odd)) {
    throw ParityError("supersymmetry flow parameter must be odd");
  }
  return p;
}

}  // namespace

CoordinateFlow flow_map(const FlowSpec& spec, unsigned n, bool inverse) {
  const double s = inverse ? -spec.s : spec.s;
  CoordinateFlow m{var_x(n), var_t(n), var_th1(n), var_th2(n)};
  switch (spec.gen) {
    case GenId::L:
      m.x_img = std::exp(-2.0 * s) * var_x(n);
      m.t_img = std::exp(2.0 * s) * var_t(n);
      m.th1_img = std::exp(-s) * var_th1(n);
      m.th2_img = std::exp(s) * var_th2(n);
      break;
    case GenId::Px:
      m.x_img = var_x(n) + SuperPolynomial::scalar(n, s);
      break;
    case GenId::Pt:
      m.t_img = var_t(n) + SuperPolynomial::scalar(n, s);
      break;
    case GenId::Qx: {
      Supernumber eta = checked_odd_param(spec, n);
      if (inverse) eta *= -1.0;
      const Supernumber eta_ext = extend(eta);
      m.x_img = var_x(n) - lmul(eta_ext, var_th1(n));
      m.th1_img = var_th1(n) + SuperPolynomial::monomial(
                                   n, SuperPolynomial::Key{}, eta_ext);
      break;
    }
    case GenId::Qt: {
      Supernumber eta = checked_odd_param(spec, n);
      if (inverse) eta *= -1.0;
      const Supernumber eta_ext = extend(eta);
      m.t_img = var_t(n) + lmul(eta_ext, var_th2(n));
      m.th2_img = var_th2(n) + SuperPolynomial::monomial(
                                   n, SuperPolynomial::Key{}, eta_ext);
      break;
    }
  }
  return m;
}

SuperPolynomial pullback(const SuperPolynomial& p, const FlowSpec& spec,
                         bool inverse) {
  const CoordinateFlow m = flow_map(spec, p.base_generators(), inverse);
  SuperPolynomial::Substitution sub;
  sub.x = m.x_img;
  sub.t = m.t_img;
  sub.theta1 = m.th1_img;
  sub.theta2 = m.th2_img;
  return p.substituted(sub);
}

Superfield transform_field(const Superfield& f, const FlowSpec& spec) {
  const unsigned n = f.n_base;
  switch (spec.gen) {
    case GenId::Px: {
      auto src = std::make_shared<Superfield>(f);
      const double s = spec.s;
      auto shifted = [src, s](ComponentJetFn Superfield::*member) {
        return ComponentJetFn([src, s, member](double x, double t) {
          return ((*src).*member)(x - s, t);
        });
      };
      Superfield out = f;
      out.a0 = shifted(&Superfield::a0);
      out.a1 = shifted(&Superfield::a1);
      out.a2 = shifted(&Superfield::a2);
      out.a12 = shifted(&Superfield::a12);
      return out;
    }
    case GenId::Pt: {
      auto src = std::make_shared<Superfield>(f);
      const double s = spec.s;
      auto shifted = [src, s](ComponentJetFn Superfield::*member) {
        return ComponentJetFn([src, s, member](double x, double t) {
          return ((*src).*member)(x, t - s);
        });
      };
      Superfield out = f;
      out.a0 = shifted(&Superfield::a0);
      out.a1 = shifted(&Superfield::a1);
      out.a2 = shifted(&Superfield::a2);
      out.a12 = shifted(&Superfield::a12);
      return out;
    }
    case GenId::L: {
      // Φ̃(x, t, θ) = Φ(e^{2s}x, e^{-2s}t, e^{s}θ₁, e^{-s}θ₂): components
      // pick up the θ-rescaling factors, jets pick up chain-rule factors.
      auto src = std::make_shared<Superfield>(f);
      const double ax = std::exp(2.0 * spec.s);
      const double at = std::exp(-2.0 * spec.s);
      const std::array<double, 4> comp_scale{1.0, std::exp(spec.s),
                                             std::exp(-spec.s), 1.0};
      auto remap = [src, ax, at](ComponentJetFn Superfield::*member,
                                 double scale) {
        return ComponentJetFn([src, ax, at, scale, member](double x,
                                                           double t) {
          Jet j = ((*src).*member)(ax * x, at * t);
          Jet out(j.generators(), j.order());
          for (int jx = 0; jx <= j.order(); ++jx) {
            for (int jt = 0; jx + jt <= j.order(); ++jt) {
              out.at(jx, jt) = j.at(jx, jt) *
                               (scale * std::pow(ax, jx) * std::pow(at, jt));
            }
          }
          return out;
        });
      };
      Superfield out = f;
      out.a0 = remap(&Superfield::a0, comp_scale[0]);
      out.a1 = remap(&Superfield::a1, comp_scale[1]);
      out.a2 = remap(&Superfield::a2, comp_scale[2]);
      out.a12 = remap(&Superfield::a12, comp_scale[3]);
      return out;
    }
    case GenId::Qx: {
      // Φ̃ = Φ(x + ηθ₁, t, θ₁ − η, θ₂):
      //   ã0 = a0 − η·a1,  ã1 = a1 − η·∂x a0,
      //   ã2 = a2 + η·a12, ã12 = a12 + η·∂x a2.
      const Supernumber eta = checked_odd_param(spec, n);
      auto src = std::make_shared<Superfield>(f);
      Superfield out;
      out.n_base = n;
      out.jet_order = f.jet_order - 1;
      if (out.jet_order < 0) {
        throw ConfigError("transform_field: jet order exhausted");
      }
      auto mk = [src, eta](int which) {
        return ComponentJetFn([src, eta, which](double x, double t) -> Jet {
          auto a = eval_jets(*src, x, t);
          switch (which) {
            case 0:
              return a[0] - lmul(eta, a[1]);
            case 1:
              return a[1] - lmul(eta, shift_x(a[0]));
            case 2:
              return a[2] + lmul(eta, a[3]);
            default:
              return a[3] + lmul(eta, shift_x(a[2]));
          }
        });
      };
      out.a0 = mk(0);
      out.a1 = mk(1);
      out.a2 = mk(2);
      out.a12 = mk(3);
      return out;
    }
    case GenId::Qt: {
      // Φ̃ = Φ(x, t − ηθ₂, θ₁, θ₂ − η):
      //   ã0 = a0 − η·a2,  ã1 = a1 − η·a12,
      //   ã2 = a2 + η·∂t a0, ã12 = a12 + η·∂t a1.
      const Supernumber eta = checked_odd_param(spec, n);
      auto src = std::make_shared<Superfield>(f);
      Superfield out;
      out.n_base = n;
      out.jet_order = f.jet_order - 1;
      if (out.jet_order < 0) {
        throw ConfigError("transform_field: jet order exhausted");
      }
      auto mk = [src, eta](int which) {
        return ComponentJetFn([src, eta, which](double x, double t) -> Jet {
          auto a = eval_jets(*src, x, t);
          switch (which) {
            case 0:
              return a[0] - lmul(eta, a[2]);
            case 1:
              return a[1] - lmul(eta, a[3]);
            case 2:
              return a[2] + lmul(eta, shift_t(a[0]));
            default:
              return a[3] + lmul(eta, shift_t(a[1]));
          }
        });
      };
      out.a0 = mk(0);
      out.a1 = mk(1);
      out.a2 = mk(2);
      out.a12 = mk(3);
      return out;
    }
  }
  throw ConfigError("transform_field: unknown generator");
}

}  // namespace supersinh
