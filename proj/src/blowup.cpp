#include "nqh/blowup.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "nqh/error.hpp"

namespace nqh {

std::string to_string(Chart c) {
  switch (c) {
    case Chart::V1: return "V1";
    case Chart::V2: return "V2";
    case Chart::V3: return "V3";
    case Chart::V4: return "V4";
  }
  return "?";
}

Chart parse_chart(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "v1") return Chart::V1;
  if (s == "v2") return Chart::V2;
  if (s == "v3") return Chart::V3;
  if (s == "v4") return Chart::V4;
  throw InvalidInput("unknown chart '" + name + "' (expected v1..v4)");
}

VarNames chart_vars(Chart c) {
  switch (c) {
    case Chart::V1: return {"x1", "y1"};
    case Chart::V2: return {"x2", "y2"};
    case Chart::V3: return {"x3", "y3"};
    case Chart::V4: return {"x4", "y4"};
  }
  return {"u", "v"};
}

int MonomialMap::exponent_det() const { return first.i * second.j - first.j * second.i; }

MonomialMap chart_map(Chart c) {
  switch (c) {
    case Chart::V1: return {chart_vars(c), kAmbientVars, {1, 1, 0}, {1, 1, 1}};
    case Chart::V2: return {chart_vars(c), kAmbientVars, {1, 1, 1}, {1, 0, 1}};
    case Chart::V3: return {chart_vars(c), kAmbientVars, {1, 1, 0}, {1, 2, 1}};
    case Chart::V4: return {chart_vars(c), kAmbientVars, {1, 1, 1}, {1, 1, 2}};
  }
  throw InvalidInput("chart_map: unknown chart");
}

namespace {

using IntMatrix = std::array<std::array<int, 2>, 2>;

// Row r holds the exponents of target variable r in the source variables.
IntMatrix exponents(const MonomialMap& m) { return {{{m.first.i, m.first.j}, {m.second.i, m.second.j}}}; }

}  // namespace

MonomialMap chart_transition(Chart source, Chart target) {
  if (source == Chart::V1 || target == Chart::V1) {
    throw InvalidInput("chart_transition: V1 belongs to the single blow-up, not the two-point one");
  }
  // E_target o T = E_source  <=>  [E_target] [T] = [E_source].
  IntMatrix et = exponents(chart_map(target));
  IntMatrix es = exponents(chart_map(source));
  int det = et[0][0] * et[1][1] - et[0][1] * et[1][0];
  IntMatrix inv{{{et[1][1] * det, -et[0][1] * det}, {-et[1][0] * det, et[0][0] * det}}};  // det = +-1
  IntMatrix t{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) t[r][c] = inv[r][0] * es[0][c] + inv[r][1] * es[1][c];
  }
  return {chart_vars(source), chart_vars(target), {1, t[0][0], t[0][1]}, {1, t[1][0], t[1][1]}};
}

LaurentPoly2 pullback(const LaurentPoly2& f, const MonomialMap& phi) {
  return f.substitute(phi.first, phi.second, phi.source);
}

LaurentPoly2 pullback_function(const PlanePoly& f, Chart c) { return pullback(f, chart_map(c)); }

LaurentPoly2 apply(const VectorField& v, const LaurentPoly2& f) {
  return v.cx * f.derivative(0) + v.cy * f.derivative(1);
}

VectorField hamiltonian_field(const LaurentPoly2& f) { return {-f.derivative(1), f.derivative(0)}; }

VectorField pullback_vector_field(const VectorField& v, const MonomialMap& phi) {
  const int det = phi.exponent_det();
  if (det == 0) throw InvalidInput("pullback_vector_field: singular monomial map");
  const int p = phi.first.i, q = phi.first.j, r = phi.second.i, s = phi.second.j;
  // Logarithmic components X/x and Y/y, pulled back.
  LaurentPoly2 lx = pullback(v.cx, phi).shifted(-p, -q) * Rational(1 / phi.first.coeff);
  LaurentPoly2 ly = pullback(v.cy, phi).shifted(-r, -s) * Rational(1 / phi.second.coeff);
  const Rational inv = Rational(1) / det;
  LaurentPoly2 du = (lx * Rational(s) - ly * Rational(q)).shifted(1, 0) * inv;
  LaurentPoly2 dv = (ly * Rational(p) - lx * Rational(r)).shifted(0, 1) * inv;
  return {du, dv};
}

VectorField pullback_vector_field(const VectorField& v, Chart c) { return pullback_vector_field(v, chart_map(c)); }

LaurentPoly2 divide_by_monomial_exact(const LaurentPoly2& f, int a, int b) {
  LaurentPoly2 out = f.shifted(-a, -b);
  if (!out.is_polynomial()) {
    throw InternalConsistency("division by " + f.vars()[0] + "^" + std::to_string(a) + " " + f.vars()[1] + "^" +
                              std::to_string(b) + " is not exact");
  }
  return out;
}

StrictTransform strict_transform_factorization(const PlanePoly& f, Chart c) {
  LaurentPoly2 pulled = pullback_function(f, c);
  int ex = pulled.min_exponent(0);
  int ey = pulled.min_exponent(1);
  return {ex, ey, pulled.shifted(-ex, -ey)};
}

StrictTransform strict_transform_factorization(const ParameterPoint& p, Chart c) {
  return strict_transform_factorization(build_normal_form(p), c);
}

VectorField theta_zero_of(const PlanePoly& f, int ex, int ey) {
  VectorField pulled = pullback_vector_field(hamiltonian_field(f), Chart::V4);
  return {divide_by_monomial_exact(pulled.cx, ex, ey), divide_by_monomial_exact(pulled.cy, ex, ey)};
}

VectorField theta_zero(const ParameterPoint& p) {
  return theta_zero_of(build_normal_form(p), p.M() + p.N() - 2, 2 * p.M() + p.N() - 3);
}

}  // namespace nqh
