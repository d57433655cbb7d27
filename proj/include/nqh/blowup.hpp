#pragma once

#include <string>

#include "nqh/laurent.hpp"
#include "nqh/normal_form.hpp"

namespace nqh {

enum class Chart { V1, V2, V3, V4 };

std::string to_string(Chart c);
/// "v1".."v4" (case-insensitive); throws InvalidInput otherwise.
Chart parse_chart(const std::string& name);
VarNames chart_vars(Chart c);

/// Monomial map from `source` coordinates to `target` coordinates: the target
/// variables expressed as monomials in the source variables.
struct MonomialMap {
  VarNames source;
  VarNames target;
  Monomial2 first;   // image of target.first
  Monomial2 second;  // image of target.second

  /// Determinant of the integer exponent matrix.
  int exponent_det() const;
};

/// The blow-up map of a chart into the ambient plane, e.g. V4: (x4, y4) -> (x4 y4, x4 y4^2).
MonomialMap chart_map(Chart c);

/// Coordinate change between two charts of the two-point blow-up (V2, V3, V4):
/// the map source -> target with chart_map(target) o T = chart_map(source).
MonomialMap chart_transition(Chart source, Chart target);

/// f o phi, as a Laurent polynomial in the source variables of phi.
LaurentPoly2 pullback(const LaurentPoly2& f, const MonomialMap& phi);
LaurentPoly2 pullback_function(const PlanePoly& f, Chart c);

/// cx d/d(first) + cy d/d(second), both components in the same variables.
struct VectorField {
  LaurentPoly2 cx;
  LaurentPoly2 cy;

  bool is_zero() const { return cx.is_zero() && cy.is_zero(); }
  VectorField shifted(int i, int j) const { return {cx.shifted(i, j), cy.shifted(i, j)}; }
  friend VectorField operator-(const VectorField& a, const VectorField& b) { return {a.cx - b.cx, a.cy - b.cy}; }
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// The derivation v applied to f.
LaurentPoly2 apply(const VectorField& v, const LaurentPoly2& f);

/// f_x d/dy - f_y d/dx.
VectorField hamiltonian_field(const LaurentPoly2& f);

/// The field V on the source of phi with d(phi)(V) = v o phi, by exact
/// inversion of the 2x2 logarithmic Jacobian of the monomial map. Throws
/// InvalidInput if the exponent matrix is singular.
VectorField pullback_vector_field(const VectorField& v, const MonomialMap& phi);
VectorField pullback_vector_field(const VectorField& v, Chart c);

/// f / (u^a v^b), required to stay polynomial; throws InternalConsistency otherwise.
LaurentPoly2 divide_by_monomial_exact(const LaurentPoly2& f, int a, int b);

struct StrictTransform {
  int exc_x = 0;
  int exc_y = 0;
  LaurentPoly2 rest;
};

/// Pullback of N_p to the chart split as (first)^exc_x (second)^exc_y * rest
/// with rest divisible by neither variable.
StrictTransform strict_transform_factorization(const ParameterPoint& p, Chart c);
StrictTransform strict_transform_factorization(const PlanePoly& f, Chart c);

/// E*Theta_f / (x4^ex y4^ey) on V4, where Theta_f is the Hamiltonian field of f.
VectorField theta_zero_of(const PlanePoly& f, int ex, int ey);
/// Theta_0 for the normal form: exponents (M+N-2, 2M+N-3).
VectorField theta_zero(const ParameterPoint& p);

}  // namespace nqh
