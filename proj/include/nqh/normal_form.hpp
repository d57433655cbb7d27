#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nqh/laurent.hpp"
#include "nqh/lattice.hpp"
#include "nqh/rational.hpp"

namespace nqh {

/// Polynomial in the ambient coordinates (x, y); all exponents non-negative.
using PlanePoly = LaurentPoly2;

inline const VarNames kAmbientVars{"x", "y"};

/// Exact rational values for every parameter a_{k,i}, b_{k,i} of a given (M, N).
class ParameterPoint {
 public:
  ParameterPoint(int M, int N);
  ParameterPoint(int M, int N, std::map<ParameterIndex, Rational> values);

  int M() const { return M_; }
  int N() const { return N_; }
  const std::map<ParameterIndex, Rational>& values() const { return values_; }

  const Rational& at(const ParameterIndex& idx) const;
  const Rational& a(int k, int i) const { return at({Family::A, k, i}); }
  const Rational& b(int k, int i) const { return at({Family::B, k, i}); }
  void set(const ParameterIndex& idx, const Rational& v);

  /// First violated open condition ("a_1,2 == a_1,1", ...), empty if p is in the parameter space.
  std::string violation() const;
  bool is_valid() const { return violation().empty(); }
  /// Throws InvalidParameters naming the violated condition.
  void validate() const;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;

 private:
  int M_;
  int N_;
  std::map<ParameterIndex, Rational> values_;
};

/// Seeded draw of a generic point: numerators in [-20, 20], denominators in
/// [1, 8], each value redrawn until the open conditions hold.
ParameterPoint sample_generic_parameters(int M, int N, std::uint64_t seed);

/// The factors x, y, y + x^2, the N-1 a-branches and the M-2 b-branches, in that order.
std::vector<PlanePoly> normal_form_factors(const ParameterPoint& p);
/// Expanded product of normal_form_factors; validates p first.
PlanePoly build_normal_form(const ParameterPoint& p);
/// Same expansion without the parameter-space check (for degenerate probes).
PlanePoly build_normal_form_unchecked(const ParameterPoint& p);

/// Sum of the terms of total degree exactly d.
PlanePoly homogeneous_component(const PlanePoly& f, int d);

struct ScaledPoint {
  ParameterPoint point;
  bool leaves_parameter_space = false;
};

/// (a_{k,i}, b_{k,i}) -> (lambda^{2k-3} a_{k,i}, lambda^{k-1} b_{k,i}).
/// Throws InvalidInput for lambda = 0.
ScaledPoint scale_parameters(const ParameterPoint& p, const Rational& lambda);

/// Checks N_p(lambda x, lambda^2 y) == lambda^{2M+2N-1} N_{lambda.p}(x, y) term by term.
bool verify_scaling_identity(const ParameterPoint& p, const Rational& lambda);

/// dF/d(parameter) for F(p) = build(p), exact because the normal form and all
/// its pullbacks are affine in each single parameter: F(v + 1) - F(v).
template <class Build>
auto parameter_derivative(const ParameterPoint& p, const ParameterIndex& idx, Build&& build) {
  ParameterPoint up = p;
  up.set(idx, p.at(idx) + 1);
  return build(up) - build(p);
}

/// For each legal i: d N^{(M+N+l)} / d a_{l+1,i} == x y^l N^{(M+N)} / (y + a_{1,i} x),
/// and for l >= 1: d N^{(M+N+l)} / d b_{l,i} == x^{l+1} N^{(M+N)} / y.
/// Throws UnsupportedRange unless 0 <= l <= N-2.
bool component_derivative_structure(const ParameterPoint& p, int l);

}  // namespace nqh
