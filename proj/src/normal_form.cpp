#include "nqh/normal_form.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nqh/error.hpp"

namespace nqh {

ParameterPoint::ParameterPoint(int M, int N) : M_(M), N_(N) {
  for (const auto& idx : parameter_indices(M, N)) values_.emplace(idx, Rational(0));
}

ParameterPoint::ParameterPoint(int M, int N, std::map<ParameterIndex, Rational> values)
    : ParameterPoint(M, N) {
  for (auto& [idx, v] : values) set(idx, v);
  if (values.size() != values_.size()) {
    throw InvalidParameters("expected " + std::to_string(values_.size()) + " parameters, got " +
                            std::to_string(values.size()));
  }
}

const Rational& ParameterPoint::at(const ParameterIndex& idx) const {
  auto it = values_.find(idx);
  if (it == values_.end()) throw InvalidInput("no parameter " + to_string(idx));
  return it->second;
}

void ParameterPoint::set(const ParameterIndex& idx, const Rational& v) {
  auto it = values_.find(idx);
  if (it == values_.end()) {
    throw InvalidParameters("parameter " + to_string(idx) + " does not exist for M=" + std::to_string(M_) +
                            " N=" + std::to_string(N_));
  }
  it->second = v;
}

std::string ParameterPoint::violation() const {
  for (int i = 1; i <= N_ - 1; ++i) {
    if (a(1, i) == 0) return "a_1," + std::to_string(i) + " == 0";
    for (int j = 1; j < i; ++j) {
      if (a(1, i) == a(1, j)) return "a_1," + std::to_string(i) + " == a_1," + std::to_string(j);
    }
  }
  for (int i = 1; i <= M_ - 2; ++i) {
    if (b(1, i) == 0) return "b_1," + std::to_string(i) + " == 0";
    if (b(1, i) == 1) return "b_1," + std::to_string(i) + " == 1";
    for (int j = 1; j < i; ++j) {
      if (b(1, i) == b(1, j)) return "b_1," + std::to_string(i) + " == b_1," + std::to_string(j);
    }
  }
  return {};
}

void ParameterPoint::validate() const {
  if (auto v = violation(); !v.empty()) throw InvalidParameters("parameter point outside the open set: " + v);
}

ParameterPoint sample_generic_parameters(int M, int N, std::uint64_t seed) {
  ParameterPoint p(M, N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 8);
  auto draw = [&] {
    long n = num(rng);
    long d = den(rng);
    return make_rational(n, d);
  };

  std::set<Rational> used_a, used_b;
  for (const auto& idx : parameter_indices(M, N)) {
    Rational v = draw();
    if (idx.k == 1 && idx.family == Family::A) {
      while (v == 0 || used_a.count(v)) v = draw();
      used_a.insert(v);
    } else if (idx.k == 1) {
      while (v == 0 || v == 1 || used_b.count(v)) v = draw();
      used_b.insert(v);
    }
    p.set(idx, v);
  }
  return p;
}

std::vector<PlanePoly> normal_form_factors(const ParameterPoint& p) {
  const auto& V = kAmbientVars;
  std::vector<PlanePoly> factors;
  factors.push_back(PlanePoly::monomial(1, 1, 0, V));
  factors.push_back(PlanePoly::monomial(1, 0, 1, V));
  factors.push_back(PlanePoly::monomial(1, 0, 1, V) + PlanePoly::monomial(1, 2, 0, V));
  for (int i = 1; i <= p.N() - 1; ++i) {
    PlanePoly f = PlanePoly::monomial(1, 0, 1, V);
    for (int k = 1; k <= i; ++k) f += PlanePoly::monomial(p.a(k, i), 1, k - 1, V);
    factors.push_back(std::move(f));
  }
  for (int i = 1; i <= p.M() - 2; ++i) {
    PlanePoly f = PlanePoly::monomial(1, 0, 1, V);
    for (int k = 1; k <= p.N() - 1 + 2 * i; ++k) f += PlanePoly::monomial(p.b(k, i), k + 1, 0, V);
    factors.push_back(std::move(f));
  }
  return factors;
}

PlanePoly build_normal_form_unchecked(const ParameterPoint& p) {
  return product(normal_form_factors(p), kAmbientVars);
}

PlanePoly build_normal_form(const ParameterPoint& p) {
  p.validate();
  return build_normal_form_unchecked(p);
}

PlanePoly homogeneous_component(const PlanePoly& f, int d) {
  LaurentPoly2::Terms picked;
  for (const auto& [e, c] : f.terms()) {
    if (e.i + e.j == d) picked.emplace(e, c);
  }
  return PlanePoly(f.vars(), std::move(picked));
}

ScaledPoint scale_parameters(const ParameterPoint& p, const Rational& lambda) {
  if (lambda == 0) throw InvalidInput("scale_parameters: lambda must be nonzero");
  ParameterPoint q = p;
  for (const auto& [idx, v] : p.values()) {
    int e = idx.family == Family::A ? 2 * idx.k - 3 : idx.k - 1;
    q.set(idx, v * pow(lambda, e));
  }
  bool leaves = false;
  for (int i = 1; i <= p.M() - 2; ++i) leaves = leaves || q.b(1, i) == 1;
  return {std::move(q), leaves};
}

bool verify_scaling_identity(const ParameterPoint& p, const Rational& lambda) {
  ScaledPoint scaled = scale_parameters(p, lambda);
  if (scaled.leaves_parameter_space) throw InvalidParameters("scaled point leaves the parameter space");
  PlanePoly lhs = build_normal_form(p).substitute({lambda, 1, 0}, {lambda * lambda, 0, 1}, kAmbientVars);
  PlanePoly rhs = build_normal_form(scaled.point) * pow(lambda, 2 * p.M() + 2 * p.N() - 1);
  return lhs == rhs;
}

bool component_derivative_structure(const ParameterPoint& p, int l) {
  const int M = p.M(), N = p.N();
  if (l < 0 || l > N - 2) {
    throw UnsupportedRange("component_derivative_structure: l=" + std::to_string(l) + " outside 0.." +
                           std::to_string(N - 2));
  }
  const auto& V = kAmbientVars;
  const int d = M + N + l;
  const PlanePoly lowest = homogeneous_component(build_normal_form(p), M + N);
  auto component_of = [d](const ParameterPoint& q) { return homogeneous_component(build_normal_form_unchecked(q), d); };

  bool ok = true;
  for (int i = l + 1; i <= N - 1; ++i) {
    PlanePoly lhs = parameter_derivative(p, {Family::A, l + 1, i}, component_of);
    PlanePoly branch = PlanePoly::monomial(1, 0, 1, V) + PlanePoly::monomial(p.a(1, i), 1, 0, V);
    PlanePoly rhs = PlanePoly::monomial(1, 1, l, V) * exact_divide(lowest, branch);
    ok = ok && lhs == rhs;
  }
  if (l >= 1) {
    PlanePoly over_y = exact_divide(lowest, PlanePoly::monomial(1, 0, 1, V));
    for (int i = 1; i <= M - 2; ++i) {
      PlanePoly lhs = parameter_derivative(p, {Family::B, l, i}, component_of);
      PlanePoly rhs = PlanePoly::monomial(1, l + 1, 0, V) * over_y;
      ok = ok && lhs == rhs;
    }
  }
  return ok;
}

}  // namespace nqh
