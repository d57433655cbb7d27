#include <algorithm>

#include "doctest.h"
#include "gen.hpp"
#include "nqh/cocycle.hpp"
#include "nqh/error.hpp"

using namespace nqh;

namespace {

UniPoly X() { return UniPoly::x(); }

const OracleCheck& find(const std::vector<OracleCheck>& v, const std::string& name) {
  auto it = std::find_if(v.begin(), v.end(), [&](const OracleCheck& c) { return c.name == name; });
  REQUIRE(it != v.end());
  return *it;
}

bool bezout_ok(const BezoutData& b) {
  return b.G == b.W * b.F.derivative() + b.Z * b.F && b.F == b.G * b.S && b.G.leading() == 1 &&
         (b.W.is_zero() || *b.W.degree() < *b.S.degree());
}

}  // namespace

TEST_CASE("Bezout cofactors") {
  SUBCASE("x^2") {
    BezoutData b = bezout_cofactors(X() * X());
    CHECK(b.G == X());
    CHECK(b.S == X());
    CHECK(b.W == UniPoly(make_rational(1, 2)));
    CHECK(b.Z.is_zero());
  }
  SUBCASE("squarefree") {
    UniPoly Q = X() * (X() + UniPoly(1));
    BezoutData b = bezout_cofactors(Q);
    CHECK(b.G == UniPoly(1));
    CHECK(b.S == Q);
    CHECK(bezout_ok(b));
  }
  SUBCASE("x^6 (1 + x)(1 + 2x)") {
    UniPoly Q = UniPoly::monomial(1, 6) * (UniPoly(1) + X()) * (UniPoly(1) + UniPoly(2) * X());
    BezoutData b = bezout_cofactors(Q);
    CHECK(*b.S.degree() == 3);
    CHECK(*b.W.degree() <= 2);
    CHECK(bezout_ok(b));
  }
  CHECK_THROWS_AS(bezout_cofactors(UniPoly(3)), InvalidInput);
  CHECK_THROWS_AS(bezout_cofactors(UniPoly()), InvalidInput);

  gen::Rng rng(41);
  for (int t = 0; t < 80; ++t) {
    UniPoly Q = gen::unipoly(rng, 3) * gen::unipoly(rng, 2) * gen::unipoly(rng, 2);
    UniPoly r = gen::unipoly(rng, 1);
    Q = Q * r * r;
    if (!Q.degree() || *Q.degree() < 1) continue;
    CHECK(bezout_ok(bezout_cofactors(Q)));
  }
}

TEST_CASE("local solutions satisfy the divisor-restricted identities") {
  for (int M = 2; M <= 5; ++M) {
    for (int N = 2; N <= 5; ++N) {
      CocycleEngine e(sample_generic_parameters(M, N, 3));
      for (const auto& dir : level_columns(M, N, 1)) {
        for (auto [side, chart] : {std::pair{Component::V2V4, Chart::V2}, std::pair{Component::V2V4, Chart::V4},
                                   std::pair{Component::V3V4, Chart::V3}, std::pair{Component::V3V4, Chart::V4}}) {
          const LocalSolution& s = e.local_solution(side, chart, dir);
          CHECK(s.restricted_identity_holds());
          CHECK(bezout_ok(s.bezout));
        }
      }
    }
  }
}

TEST_CASE("local solutions at (3,3)") {
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  LocalSolution v2 = local_solution(p, Component::V2V4, Chart::V2, {Family::A, 1, 1});
  CHECK(v2.bezout.G == UniPoly(1));
  CHECK(*v2.bezout.W.degree() <= 2);
  CHECK(v2.exponent == 6);

  LocalSolution v4 = local_solution(p, Component::V3V4, Chart::V4, {Family::A, 1, 1});
  CHECK(v4.exponent == 9);
  CHECK(v4.F_p == v4.F * UniPoly(Rational(1) / p.a(1, 1)));
  CHECK(v4.restricted_identity_holds());
  // The field is W S / a_{1,1} along x4 to leading order.
  CHECK(v4.tangential == v4.bezout.W * v4.bezout.S * UniPoly(Rational(1) / p.a(1, 1)));

  LocalSolution b4 = local_solution(p, Component::V2V4, Chart::V4, {Family::B, 1, 1});
  CHECK(b4.exponent == 6);
  CHECK(b4.restricted_identity_holds());

  CHECK_THROWS_AS(local_solution(p, Component::V3V4, Chart::V4, {Family::A, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(local_solution(p, Component::V3V4, Chart::V2, {Family::A, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(local_solution(p, Component::V2V4, Chart::V1, {Family::A, 1, 1}), InvalidInput);
}

TEST_CASE("cocycle coefficients at (3,3)") {
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  auto c1 = cocycle_coefficients(p, {Family::A, 1, 1}, {{-1, 0}}, Component::V3V4);
  CHECK(c1.at({-1, 0}) == 0);

  auto c2 = cocycle_coefficients(p, {Family::B, 1, 1}, {{-1, 0}}, Component::V3V4);
  CHECK(c2.at({-1, 0}) == kClosedFormSign * m4_entry_closed_form(p, 1, 1));

  auto c3 = cocycle_coefficients(p, {Family::A, 1, 1}, {{0, 0}}, Component::V2V4);
  CHECK(b0_closed_form(p) == Rational(1) / (Rational(9) * p.a(1, 1) * p.a(1, 2)));
  CHECK(c3.at({0, 0}) == kClosedFormSign * m1_entry_closed_form(p, 2, 1));
}

TEST_CASE("level matrices at (3,3)") {
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  CocycleMatrix a1 = build_level_matrix(p, 1);
  CHECK(a1.entries.rows() == 3);
  CHECK(a1.entries.block(2, 1, 0, 2).is_zero());

  CocycleMatrix a2 = build_level_matrix(p, 2);
  REQUIRE(a2.entries.rows() == 2);
  CHECK(a2.entries(0, 1) == 0);
  CHECK(a2.entries(1, 0) == 0);
  CHECK(a2.entries(0, 0) != 0);
  CHECK(a2.entries(1, 1) == a1.entries(2, 2));

  CocycleMatrix a4 = build_level_matrix(p, 4);
  REQUIRE(a4.cols.size() == 1);
  CHECK(a4.cols[0] == ParameterIndex{Family::B, 4, 1});
  CHECK_THROWS_AS(build_level_matrix(p, 5), UnsupportedRange);
  CHECK_THROWS_AS(build_level_matrix(p, 0), UnsupportedRange);
}

TEST_CASE("full matrices") {
  CocycleMatrix a = full_matrix(sample_generic_parameters(3, 3, 1));
  CHECK(a.entries.rows() == 7);
  std::vector<std::size_t> sizes;
  for (const auto& b : a.blocks) sizes.push_back(b.nrows);
  CHECK(sizes == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK(a.is_block_lower_triangular());
  CHECK(det_exact(a.entries) != 0);
  CHECK(!a.restricted);

  CocycleMatrix b = full_matrix(sample_generic_parameters(3, 4, 2));
  CHECK(b.entries.rows() == 11);
  sizes.clear();
  for (const auto& blk : b.blocks) sizes.push_back(blk.nrows);
  CHECK(sizes == std::vector<std::size_t>{4, 3, 2, 1, 1});

  for (auto [M, N] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 2}}) {
    CocycleMatrix r = full_matrix(sample_generic_parameters(M, N, 5));
    CHECK(r.restricted);
    CHECK(static_cast<int>(r.entries.rows()) == dimension(M, N));
    CHECK(det_exact(r.entries) != 0);
  }
}

TEST_CASE("propagation identities") {
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  CHECK(propagation_shift({Family::A, 1, 1}) == Exponent2{0, 0});
  CHECK(propagation_shift({Family::A, 2, 2}) == Exponent2{1, 2});
  CHECK(propagation_shift({Family::B, 3, 1}) == Exponent2{2, 2});
  for (const auto& idx : parameter_indices(3, 3)) CHECK(verify_propagation(p, idx));
  for (const auto& idx : parameter_indices(4, 5)) CHECK(verify_propagation(sample_generic_parameters(4, 5, 2), idx));
}

TEST_CASE("parameter derivative by the product rule matches differencing") {
  for (auto [M, N] : {std::pair{3, 3}, std::pair{4, 3}}) {
    ParameterPoint p = sample_generic_parameters(M, N, 6);
    for (const auto& idx : parameter_indices(M, N)) {
      CHECK(normal_form_parameter_derivative(p, idx) == parameter_derivative(p, idx, build_normal_form_unchecked));
    }
  }
}

TEST_CASE("closed-form oracles") {
  for (auto [M, N] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}, std::pair{4, 4}}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      for (const auto& c : closed_form_oracles(sample_generic_parameters(M, N, s))) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
      }
    }
  }
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  auto flipped = closed_form_oracles(p, OracleOptions{true});
  CHECK(!find(flipped, "block.M4.entries").pass);
  CHECK(find(flipped, "block.M1.entries").pass);

  auto names = closed_form_oracles(p);
  CHECK(std::is_sorted(names.begin(), names.end(), [](auto& a, auto& b) { return a.name < b.name; }));
}

TEST_CASE("closed forms on degenerate points") {
  CHECK(vandermonde({1, 2, 3, 4}) == 12);
  CHECK(vandermonde({Rational(1) / 3, Rational(1) / 3}) == 0);
  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  p.set({Family::A, 1, 2}, p.a(1, 1));
  CHECK_THROWS_AS(ktilde_closed_form(p, 1), InvalidParameters);
  CHECK_THROWS_AS(CocycleEngine{p}, InvalidParameters);
}

TEST_CASE("expansion order independence and the direct route") {
  for (auto [M, N] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{3, 5}}) {
    ParameterPoint p = sample_generic_parameters(M, N, 9);
    CocycleEngine narrow(p, EngineOptions{2});
    CocycleEngine wide(p, EngineOptions{4});
    CHECK(narrow.full_matrix().entries == wide.full_matrix().entries);
  }

  ParameterPoint p = sample_generic_parameters(3, 3, 1);
  CocycleEngine e(p);
  CocycleMatrix a = e.full_matrix();
  for (std::size_t c = 0; c < a.cols.size(); ++c) {
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      auto d = e.direct_expansion(a.rows[r].component, a.cols[c], {{a.rows[r].i, a.rows[r].j}});
      CHECK(d.coefficient(a.rows[r].i, a.rows[r].j) == a.entries(r, c));
    }
  }
  const CocycleExpansion& x = e.expansion(Component::V3V4, {Family::A, 1, 1});
  CHECK_THROWS_AS(x.coefficient(0, static_cast<int>(x.by_power.size())), InternalConsistency);
  CHECK(x.coefficient(0, -1) == 0);
}
