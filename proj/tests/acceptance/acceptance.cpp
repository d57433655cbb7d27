// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nqh/blowup.hpp"
#include "nqh/cocycle.hpp"
#include "nqh/lattice.hpp"
#include "nqh/normal_form.hpp"

using namespace nqh;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string size_tag(int M, int N) { return "(" + std::to_string(M) + "," + std::to_string(N) + ")"; }

PlanePoly mono(const Rational& c, int i, int j) { return PlanePoly::monomial(c, i, j, kAmbientVars); }

// Criteria 5 and 6 sweep the same points; engines cache their expansions.
const CocycleEngine& sweep_engine(int M, int N, std::uint64_t seed) {
  static std::map<std::tuple<int, int, std::uint64_t>, CocycleEngine> cache;
  auto key = std::tuple{M, N, seed};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, CocycleEngine(sample_generic_parameters(M, N, seed))).first;
  return it->second;
}

// 1
Outcome dimension_formula() {
  Outcome o;
  for (int M = 2; M <= 12; ++M) {
    for (int N = 2; N <= 12; ++N) {
      const int want = (M + N - 2) * (M + N - 3) / 2 + (M - 1) * (M - 2) / 2;
      const int nb = static_cast<int>(enumerate_basis(M, N).size());
      const int np = static_cast<int>(parameter_indices(M, N).size());
      if (nb != want || np != want || dimension(M, N) != want) o.fail(size_tag(M, N) + " count mismatch");
    }
  }
  if (dimension(3, 3) != 7 || dimension(6, 6) != 55) o.fail("delta(3,3) or delta(6,6)");
  o.detail = o.pass ? "2<=M,N<=12; delta(3,3)=7, delta(6,6)=55" : o.detail;
  return o;
}

// 2
Outcome normal_form_example() {
  Outcome o;
  for (std::uint64_t s = 1; s <= 5; ++s) {
    ParameterPoint p = sample_generic_parameters(3, 3, s);
    PlanePoly x = mono(1, 1, 0), y = mono(1, 0, 1);
    std::vector<PlanePoly> want{x,
                                y,
                                y + mono(1, 2, 0),
                                y + mono(p.a(1, 1), 1, 0),
                                y + mono(p.a(1, 2), 1, 0) + mono(p.a(2, 2), 1, 1),
                                y + mono(p.b(1, 1), 2, 0) + mono(p.b(2, 1), 3, 0) + mono(p.b(3, 1), 4, 0) +
                                    mono(p.b(4, 1), 5, 0)};
    auto got = normal_form_factors(p);
    PlanePoly prod = mono(1, 0, 0);
    for (const auto& f : want) prod = prod * f;
    if (got != want) o.fail("factor list differs at seed " + std::to_string(s));
    if (build_normal_form(p) != prod) o.fail("expanded product differs at seed " + std::to_string(s));
  }
  if (o.pass) o.detail = "6 factors xy(y+x^2)(y+a11 x)(y+a12 x+a22 xy)(y+b11 x^2+..+b41 x^5), 5 seeds";
  return o;
}

// 3
Outcome scaling_action() {
  Outcome o;
  std::mt19937_64 rng(2718);
  int runs = 0;
  for (int M = 2; M <= 6; ++M) {
    for (int N = 2; N <= 6; ++N) {
      for (int t = 0; t < 50; ++t) {
        ParameterPoint p = sample_generic_parameters(M, N, rng());
        Rational lambda;
        do {
          lambda = make_rational(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
        } while (lambda == 0);
        if (scale_parameters(p, lambda).leaves_parameter_space) continue;
        ++runs;
        if (!verify_scaling_identity(p, lambda)) o.fail(size_tag(M, N) + " lambda=" + to_string(lambda));
      }
    }
  }
  if (runs < 25 * 45) o.fail("too few pairs stayed in the parameter space: " + std::to_string(runs));
  if (o.pass) o.detail = std::to_string(runs) + " (p, lambda) pairs, 2<=M,N<=6";
  return o;
}

UniPoly expected_P(const ParameterPoint& p) {
  UniPoly y = UniPoly::x();
  Rational prod_a = 1;
  for (int j = 1; j <= p.N() - 1; ++j) prod_a *= p.a(1, j);
  UniPoly P = y * (y + UniPoly(1)) * UniPoly(prod_a);
  for (int j = 1; j <= p.M() - 2; ++j) P = P * (y + UniPoly(p.b(1, j)));
  return P;
}

UniPoly expected_J(const ParameterPoint& p) {
  UniPoly x = UniPoly::x();
  UniPoly J = x;
  for (int j = 1; j <= p.N() - 1; ++j) J = J * (UniPoly(1) + UniPoly(p.a(1, j)) * x);
  return J;
}

// 4
Outcome pullback_factorizations() {
  Outcome o;
  for (int M = 3; M <= 6; ++M) {
    for (int N = 3; N <= 6; ++N) {
      for (std::uint64_t s = 1; s <= 10; ++s) {
        ParameterPoint p = sample_generic_parameters(M, N, s);
        const std::string at = size_tag(M, N) + " seed " + std::to_string(s);
        PlanePoly f = build_normal_form(p);
        auto v4 = strict_transform_factorization(f, Chart::V4);
        auto v3 = strict_transform_factorization(f, Chart::V3);
        auto v2 = strict_transform_factorization(f, Chart::V2);
        if (v4.exc_x != M + N || v4.exc_y != 2 * M + N) o.fail(at + ": V4 exponents");
        if (v3.exc_x != 2 * M + N) o.fail(at + ": V3 exponent");
        if (v2.exc_y != M + N) o.fail(at + ": V2 exponent");
        if (pullback_function(f, Chart::V3).slice(0, 2 * M + N) != expected_P(p)) o.fail(at + ": P(y3)");
        if (pullback_function(f, Chart::V2).slice(1, M + N) != expected_J(p)) o.fail(at + ": J(x2)");
      }
    }
  }
  if (o.pass) o.detail = "V4 (M+N,2M+N), V3 2M+N, V2 M+N, P(y3), J(x2); 3<=M,N<=6 x 10 points";
  return o;
}

// 5
Outcome zero_block() {
  Outcome o;
  for (int M = 3; M <= 6; ++M) {
    for (int N = 3; N <= 6; ++N) {
      for (std::uint64_t s = 1; s <= 10; ++s) {
        CocycleMatrix a1 = sweep_engine(M, N, s).level_matrix(1);
        // Rows of V3V4 against columns of the a family.
        const std::size_t na = static_cast<std::size_t>(N - 1), nb = static_cast<std::size_t>(M - 2);
        for (std::size_t r = 0; r < na; ++r)
          if (a1.rows[r].component != Component::V2V4 || a1.cols[r].family != Family::A) o.fail("level-1 layout");
        if (!a1.entries.block(na, nb, 0, na).is_zero()) o.fail(size_tag(M, N) + " seed " + std::to_string(s));
      }
    }
  }
  if (o.pass) o.detail = "M3 == 0, 3<=M,N<=6 x 10 points";
  return o;
}

// 6
Outcome closed_forms() {
  Outcome o;
  std::size_t checks = 0;
  for (int M = 3; M <= 6; ++M) {
    for (int N = 3; N <= 6; ++N) {
      for (std::uint64_t s = 1; s <= 10; ++s) {
        for (const auto& c : closed_form_oracles(sweep_engine(M, N, s))) {
          ++checks;
          if (!c.pass) o.fail(size_tag(M, N) + " seed " + std::to_string(s) + " " + c.name + ": " + c.detail);
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " oracle comparisons, sign " + std::to_string(kClosedFormSign);
  return o;
}

// 7
Outcome universality() {
  Outcome o;
  std::ostringstream times;
  for (auto [M, N] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}, std::pair{4, 4}, std::pair{5, 4}, std::pair{4, 5},
                      std::pair{5, 5}}) {
    double worst = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      auto t0 = Clock::now();
      CocycleMatrix a = full_matrix(sample_generic_parameters(M, N, s));
      const bool ok = det_exact(a.entries) != 0 && a.is_block_lower_triangular();
      worst = std::max(worst, seconds_since(t0));
      if (!ok) o.fail(size_tag(M, N) + " seed " + std::to_string(s) + ": singular");
    }
    if (M == 3 && N == 3 && worst >= 5) o.fail("(3,3) took " + std::to_string(worst) + " s");
    if (M == 5 && N == 5 && worst >= 120) o.fail("(5,5) took " + std::to_string(worst) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s %.2fs", size_tag(M, N).c_str(), worst);
    times << buf;
  }
  if (o.pass) o.detail = "det != 0 at 10 points each; slowest point per size:" + times.str();
  return o;
}

// 8
Outcome propagation() {
  Outcome o;
  int n = 0;
  for (int M = 2; M <= 5; ++M) {
    for (int N = 2; N <= 5; ++N) {
      ParameterPoint p = sample_generic_parameters(M, N, 1);
      for (const auto& idx : parameter_indices(M, N)) {
        ++n;
        if (!verify_propagation(p, idx)) o.fail(size_tag(M, N) + " " + to_string(idx));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " directions, 2<=M,N<=5";
  return o;
}

// 9
Outcome level_partition() {
  Outcome o;
  for (int M = 2; M <= 12; ++M) {
    for (int N = 2; N <= 12; ++N) {
      std::vector<BasisMonomial> all;
      for (int k = 1; k <= max_level(M, N); ++k) {
        auto rows = level_rows(M, N, k);
        if (rows.size() != level_columns(M, N, k).size()) o.fail(size_tag(M, N) + " level " + std::to_string(k));
        all.insert(all.end(), rows.begin(), rows.end());
      }
      if (all != enumerate_basis(M, N)) o.fail(size_tag(M, N) + " union");
    }
  }
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= max_level(3, 3); ++k) sizes.push_back(level_rows(3, 3, k).size());
  if (sizes != std::vector<std::size_t>{3, 2, 1, 1}) o.fail("(3,3) block sizes");
  if (o.pass) o.detail = "2<=M,N<=12; (3,3) blocks 3,2,1,1";
  return o;
}

// 10
Outcome component_structure() {
  Outcome o;
  for (auto [M, N] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}, std::pair{4, 4}}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      ParameterPoint p = sample_generic_parameters(M, N, s);
      for (int l = 0; l <= N - 2; ++l)
        if (!component_derivative_structure(p, l)) o.fail(size_tag(M, N) + " l=" + std::to_string(l));
    }
  }
  if (o.pass) o.detail = "all l at (3,3),(3,4),(4,3),(4,4)";
  return o;
}

// 11
Outcome margin_independence() {
  Outcome o;
  for (auto [M, N] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}, std::pair{4, 4}, std::pair{5, 5}}) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      ParameterPoint p = sample_generic_parameters(M, N, s);
      CocycleEngine base(p, EngineOptions{2});
      CocycleEngine doubled(p, EngineOptions{4});
      if (base.full_matrix().entries != doubled.full_matrix().entries) o.fail(size_tag(M, N) + " seed " + std::to_string(s));
    }
  }
  if (o.pass) o.detail = "margin 2 vs 4: identical matrices";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0: no wall-clock bound
  };
  const std::vector<Criterion> criteria{
      {"dimension formula", dimension_formula, 1},
      {"normal form example (3,3)", normal_form_example, 1},
      {"scaling action", scaling_action, 10},
      {"pullback factorizations", pullback_factorizations, 30},
      {"zero block M3", zero_block, 0},
      {"closed-form oracles", closed_forms, 0},
      {"universality det != 0", universality, 0},
      {"propagation", propagation, 0},
      {"level partition", level_partition, 0},
      {"component derivative structure", component_structure, 0},
      {"expansion-order independence", margin_independence, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(t0);
    if (o.pass && criteria[i].budget_s > 0 && took >= criteria[i].budget_s) {
      o.fail("over the " + std::to_string(static_cast<int>(criteria[i].budget_s)) + " s budget");
    }
    std::printf("%s criterion %2zu %-32s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, took,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%s: %zu/%zu criteria\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
