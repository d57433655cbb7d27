#include "nqh/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nqh/error.hpp"

namespace nqh {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_check_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw InvalidInput("unknown check status '" + s + "'");
}

namespace {

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), CheckStatus::Skipped, std::move(why)}; }

// Runs fn and turns a library exception into a failed check.
template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return check(name, false, std::string("exception: ") + e.what());
  }
}

PlanePoly expected_v1_strict(const ParameterPoint& p) {
  const VarNames V = chart_vars(Chart::V1);
  std::vector<LaurentPoly2> f;
  f.push_back(LaurentPoly2::monomial(1, 1, 0, V));
  f.push_back(LaurentPoly2::monomial(1, 0, 1, V));
  f.push_back(LaurentPoly2::monomial(1, 0, 1, V) + LaurentPoly2::monomial(1, 1, 0, V));
  for (int i = 1; i <= p.N() - 1; ++i) {
    LaurentPoly2 g = LaurentPoly2::monomial(1, 0, 1, V);
    for (int k = 1; k <= i; ++k) g += LaurentPoly2::monomial(p.a(k, i), k - 1, k - 1, V);
    f.push_back(std::move(g));
  }
  for (int i = 1; i <= p.M() - 2; ++i) {
    LaurentPoly2 g = LaurentPoly2::monomial(1, 0, 1, V);
    for (int k = 1; k <= p.N() - 1 + 2 * i; ++k) g += LaurentPoly2::monomial(p.b(k, i), k, 0, V);
    f.push_back(std::move(g));
  }
  return product(f, V);
}

// P(y3) = y3 (y3 + 1) prod a_{1,j} prod (y3 + b_{1,j}).
UniPoly expected_P(const ParameterPoint& p) {
  UniPoly out = UniPoly::x() * (UniPoly::x() + UniPoly(1));
  Rational pa = 1;
  for (int j = 1; j <= p.N() - 1; ++j) pa *= p.a(1, j);
  out = out * UniPoly(pa);
  for (int j = 1; j <= p.M() - 2; ++j) out = out * (UniPoly::x() + UniPoly(p.b(1, j)));
  return out;
}

// J(x2) = x2 prod (1 + a_{1,j} x2).
UniPoly expected_J(const ParameterPoint& p) {
  UniPoly out = UniPoly::x();
  for (int j = 1; j <= p.N() - 1; ++j) out = out * (UniPoly(1) + UniPoly::monomial(p.a(1, j), 1));
  return out;
}

std::vector<CheckResult> pullback_checks(const CocycleEngine& e) {
  const ParameterPoint& p = e.point();
  const int M = p.M(), N = p.N();
  std::vector<CheckResult> out;

  const LaurentPoly2& v4 = e.chart_pullback(Chart::V4);
  const LaurentPoly2& v3 = e.chart_pullback(Chart::V3);
  const LaurentPoly2& v2 = e.chart_pullback(Chart::V2);
  {
    const int ex = v4.min_exponent(0), ey = v4.min_exponent(1);
    out.push_back(check("pullback.V4.exponents", ex == M + N && ey == 2 * M + N,
                        "(" + std::to_string(ex) + ", " + std::to_string(ey) + ")"));
  }
  out.push_back(check("pullback.V3.exponent", v3.min_exponent(0) == 2 * M + N,
                      "x3^" + std::to_string(v3.min_exponent(0))));
  out.push_back(check("pullback.V2.exponent", v2.min_exponent(1) == M + N, "y2^" + std::to_string(v2.min_exponent(1))));
  out.push_back(guarded("pullback.V3.restriction", [&] {
    UniPoly got = v3.slice(0, 2 * M + N);
    return check("pullback.V3.restriction", got == expected_P(p), "P(y3) = " + got.to_string("y3"));
  }));
  out.push_back(guarded("pullback.V2.restriction", [&] {
    UniPoly got = v2.slice(1, M + N);
    return check("pullback.V2.restriction", got == expected_J(p), "J(x2) = " + got.to_string("x2"));
  }));
  out.push_back(guarded("pullback.V1.strict_transform", [&] {
    LaurentPoly2 got = pullback_function(e.normal_form(), Chart::V1);
    bool ok = got == expected_v1_strict(p).shifted(M + N - 1, 0);
    return check("pullback.V1.strict_transform", ok, "x1^" + std::to_string(M + N - 1) + " times the strict product");
  }));
  out.push_back(check("chart_transition.V3", pullback(v4, chart_transition(Chart::V3, Chart::V4)) == v3,
                      "x4 = 1/y3, y4 = x3 y3"));
  out.push_back(check("chart_transition.V2", pullback(v4, chart_transition(Chart::V2, Chart::V4)) == v2,
                      "x4 = x2^2 y2, y4 = 1/x2"));
  out.push_back(guarded("theta0.exponents", [&] {
    const VectorField& t = e.theta0();
    bool nonvanishing = t.cx.min_exponent(1) == 0 && t.cy.min_exponent(0) == 0;
    bool maximal = true;
    try {
      (void)theta_zero_of(e.normal_form(), M + N - 2, 2 * M + N - 2);
      maximal = false;
    } catch (const InternalConsistency&) {
    }
    return check("theta0.exponents", nonvanishing && maximal,
                 std::string(nonvanishing ? "nonzero on both divisors" : "vanishes on a divisor") +
                     (maximal ? ", exponent maximal" : ", one more y4 divides"));
  }));
  return out;
}

std::vector<CheckResult> local_checks(const CocycleEngine& e) {
  const ParameterPoint& p = e.point();
  bool restricted = true, cofactors = true, leading = true;
  std::string where_r, where_c, where_l;
  int count = 0;
  for (const auto& dir : level_columns(p.M(), p.N(), 1)) {
    for (auto [side, chart] : {std::pair{Component::V2V4, Chart::V2}, std::pair{Component::V2V4, Chart::V4},
                               std::pair{Component::V3V4, Chart::V3}, std::pair{Component::V3V4, Chart::V4}}) {
      const LocalSolution& s = e.local_solution(side, chart, dir);
      const std::string tag = to_string(dir) + " " + to_string(chart) + "/" + to_string(side);
      ++count;
      if (restricted && !s.restricted_identity_holds()) restricted = false, where_r = tag;
      const BezoutData& b = s.bezout;
      const UniPoly Fd = b.F.derivative();
      const bool inv = b.G == b.W * Fd + b.Z * b.F && b.F == b.G * b.S &&
                       (b.W.is_zero() || *b.W.degree() < *b.S.degree()) && b.G.leading() == 1;
      if (cofactors && !inv) cofactors = false, where_c = tag;
      const LaurentPoly2 fp = pullback_function(normal_form_parameter_derivative(p, dir), chart);
      const LaurentPoly2 residual = apply(s.field, e.chart_pullback(chart)) - fp;
      if (leading && !residual.is_zero() && residual.min_exponent(s.divisor_var) <= s.exponent) {
        leading = false, where_l = tag;
      }
    }
  }
  const std::string all = std::to_string(count) + " direction/chart pairs";
  return {check("bezout.cofactor_invariants", cofactors, cofactors ? all : "fails at " + where_c),
          check("bezout.restricted_identity", restricted, restricted ? all : "fails at " + where_r),
          check("local_solution.leading_order", leading, leading ? all : "fails at " + where_l)};
}

CheckResult lattice_check(int M, int N) {
  std::vector<BasisMonomial> from_levels;
  bool sizes = true;
  for (int k = 1; k <= max_level(M, N); ++k) {
    auto rows = level_rows(M, N, k);
    sizes = sizes && rows.size() == level_columns(M, N, k).size();
    from_levels.insert(from_levels.end(), rows.begin(), rows.end());
  }
  auto basis = enumerate_basis(M, N);
  const bool same = from_levels == basis;
  std::ostringstream d;
  d << "block sizes";
  for (int k = 1; k <= max_level(M, N); ++k) d << (k == 1 ? " " : ",") << level_rows(M, N, k).size();
  return check("basis.level_partition", same && sizes, d.str());
}

CheckResult propagation_check(const ParameterPoint& p) {
  int n = 0;
  for (const auto& idx : parameter_indices(p.M(), p.N())) {
    ++n;
    if (!verify_propagation(p, idx)) return check("propagation", false, "fails for " + to_string(idx));
  }
  return check("propagation", true, std::to_string(n) + " directions");
}

CheckResult scaling_check(const ParameterPoint& p) {
  const Rational lambdas[] = {make_rational(2, 1), make_rational(-3, 1), make_rational(1, 2), make_rational(-5, 3)};
  int used = 0;
  for (const auto& l : lambdas) {
    if (scale_parameters(p, l).leaves_parameter_space) continue;
    ++used;
    if (!verify_scaling_identity(p, l)) return check("scaling", false, "fails at lambda = " + to_string(l));
  }
  return check("scaling", true, std::to_string(used) + " values of lambda");
}

CheckResult structure_check(const ParameterPoint& p) {
  for (int l = 0; l <= p.N() - 2; ++l) {
    if (!component_derivative_structure(p, l)) return check("structure.component_derivatives", false, "fails at l = " + std::to_string(l));
  }
  return check("structure.component_derivatives", true, "l = 0.." + std::to_string(p.N() - 2));
}

CheckResult margin_check(const CocycleEngine& e) {
  CocycleEngine wide(e.point(), EngineOptions{4});
  const bool same = wide.full_matrix().entries == e.full_matrix().entries;
  return check("expansion.margin_independence", same, same ? "margins 2 and 4 agree" : "entries depend on the margin");
}

CheckResult direct_route_check(const CocycleEngine& e) {
  const ParameterPoint& p = e.point();
  if (p.M() > 4 || p.N() > 4) return skipped("expansion.direct_route", "run only for M, N <= 4");
  const CocycleMatrix A = e.full_matrix();
  for (std::size_t c = 0; c < A.cols.size(); ++c) {
    for (Component side : {Component::V2V4, Component::V3V4}) {
      std::vector<Exponent2> window;
      std::vector<std::size_t> at;
      for (std::size_t r = 0; r < A.rows.size(); ++r) {
        if (A.rows[r].component != side) continue;
        window.push_back({A.rows[r].i, A.rows[r].j});
        at.push_back(r);
      }
      if (window.empty()) continue;
      CocycleExpansion d = e.direct_expansion(side, A.cols[c], window);
      for (std::size_t n = 0; n < at.size(); ++n) {
        if (d.coefficient(window[n].i, window[n].j) != A.entries(at[n], c)) {
          return check("expansion.direct_route", false, "differs at column " + to_string(A.cols[c]));
        }
      }
    }
  }
  return check("expansion.direct_route", true, std::to_string(A.cols.size()) + " columns re-solved");
}

}  // namespace

std::vector<CheckResult> verify_point(const ParameterPoint& p, const VerifyOptions& options) {
  p.validate();
  const int M = p.M(), N = p.N();
  std::vector<CheckResult> out;
  out.push_back(check("basis.dimension",
                      static_cast<int>(enumerate_basis(M, N).size()) == dimension(M, N) &&
                          static_cast<int>(parameter_indices(M, N).size()) == dimension(M, N),
                      "delta = " + std::to_string(dimension(M, N))));
  out.push_back(guarded("basis.level_partition", [&] { return lattice_check(M, N); }));
  out.push_back(guarded("scaling", [&] { return scaling_check(p); }));
  out.push_back(guarded("structure.component_derivatives", [&] { return structure_check(p); }));
  out.push_back(guarded("propagation", [&] { return propagation_check(p); }));

  std::optional<CocycleEngine> engine;
  try {
    engine.emplace(p);
  } catch (const std::exception& ex) {
    out.push_back(check("engine", false, std::string("exception: ") + ex.what()));
  }
  if (engine) {
    for (auto& c : pullback_checks(*engine)) out.push_back(std::move(c));
    try {
      for (auto& c : local_checks(*engine)) out.push_back(std::move(c));
    } catch (const std::exception& ex) {
      out.push_back(check("bezout.restricted_identity", false, std::string("exception: ") + ex.what()));
    }
    try {
      for (auto& c : closed_form_oracles(*engine, OracleOptions{options.flip_m4_sign})) {
        out.push_back(check(c.name, c.pass, c.detail));
      }
    } catch (const std::exception& ex) {
      out.push_back(check("matrix.invertible", false, std::string("exception: ") + ex.what()));
    }
    out.push_back(guarded("expansion.margin_independence", [&] { return margin_check(*engine); }));
    out.push_back(guarded("expansion.direct_route", [&] { return direct_route_check(*engine); }));
  }
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

namespace {

// Merges per-trial results: a check fails if it failed in any trial.
std::vector<CheckResult> merge_trials(const std::vector<std::vector<CheckResult>>& trials, std::uint64_t seed) {
  std::map<std::string, CheckResult> merged;
  std::map<std::string, int> passes;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    for (const auto& c : trials[t]) {
      auto [it, fresh] = merged.emplace(c.name, c);
      if (c.status == CheckStatus::Pass) ++passes[c.name];
      if (c.status == CheckStatus::Fail && (fresh || it->second.status != CheckStatus::Fail)) {
        it->second = c;
        it->second.detail = "seed " + std::to_string(seed + t) + ": " + c.detail;
      } else if (!fresh && c.status == CheckStatus::Pass && it->second.status == CheckStatus::Skipped) {
        it->second = c;
      }
    }
  }
  std::vector<CheckResult> out;
  for (auto& [name, c] : merged) {
    if (c.status == CheckStatus::Pass && trials.size() > 1) {
      c.detail = std::to_string(passes[name]) + "/" + std::to_string(trials.size()) + " trials; " + c.detail;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

VerificationReport run_verification(int M, int N, std::uint64_t seed, const VerifyOptions& options) {
  if (options.trials < 1) throw InvalidInput("trials must be at least 1");
  dimension(M, N);
  std::vector<std::vector<CheckResult>> per_trial;
  for (int t = 0; t < options.trials; ++t) {
    per_trial.push_back(verify_point(sample_generic_parameters(M, N, seed + static_cast<std::uint64_t>(t)), options));
  }
  return {M, N, seed, options.trials, merge_trials(per_trial, seed)};
}

VerificationReport run_verification(const ParameterPoint& p, std::uint64_t seed, const VerifyOptions& options) {
  return {p.M(), p.N(), seed, 1, verify_point(p, options)};
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"command", "verify"}, {"M", M}, {"N", N}, {"seed", seed}, {"trials", trials}, {"passed", passed()}, {"checks", cs}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  r.M = j.at("M").get<int>();
  r.N = j.at("N").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<int>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), parse_check_status(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  }
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "verify M=" << M << " N=" << N << " seed=" << seed << " trials=" << trials << "\n";
  int fails = 0, skips = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) ++fails;
    if (c.status == CheckStatus::Skipped) ++skips;
    std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    out << "  " << tag << "  " << c.name << "  " << c.detail << "\n";
  }
  out << (fails == 0 ? "all checks passed" : std::to_string(fails) + " check(s) failed");
  if (skips) out << " (" << skips << " skipped)";
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

json to_json(const BasisMonomial& b) {
  return {{"i", b.i}, {"j", b.j}, {"component", to_string(b.component)}, {"level", b.level}};
}

json to_json(const ParameterPoint& p) {
  json values = json::object();
  for (const auto& [idx, v] : p.values()) values[to_string(idx)] = to_string(v);
  return {{"M", p.M()}, {"N", p.N()}, {"values", values}};
}

json to_json(const CocycleMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array(), blocks = json::array();
  for (const auto& r : m.rows) rows.push_back(to_json(r));
  for (const auto& c : m.cols) cols.push_back(to_string(c));
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(to_string(m.entries(r, c)));
    entries.push_back(row);
  }
  for (const auto& b : m.blocks) {
    blocks.push_back({{"level", b.level},
                      {"rows", {b.row0, b.row0 + b.nrows}},
                      {"cols", {b.col0, b.col0 + b.ncols}}});
  }
  return {{"rows", rows}, {"cols", cols}, {"entries", entries}, {"blocks", blocks}, {"restricted", m.restricted}};
}

MatrixReport build_matrix_report(const ParameterPoint& p, std::uint64_t seed, std::optional<int> level,
                                 OracleOptions options) {
  CocycleEngine engine(p);
  MatrixReport r;
  r.M = p.M();
  r.N = p.N();
  r.seed = seed;
  r.level = level;
  const CocycleMatrix full = engine.full_matrix();
  if (level) {
    if (*level < 1 || *level > max_level(p.M(), p.N())) {
      throw UnsupportedRange("level " + std::to_string(*level) + " outside 1.." + std::to_string(max_level(p.M(), p.N())));
    }
    r.matrix = engine.level_matrix(*level);
    r.determinants.emplace_back("A_" + std::to_string(*level), det_exact(r.matrix.entries));
    if (*level == 1) {
      const std::size_t n1 = static_cast<std::size_t>(p.N() - 1), n4 = static_cast<std::size_t>(p.M() - 2);
      r.determinants.emplace_back("M1", det_exact(r.matrix.entries.block(0, n1, 0, n1)));
      r.determinants.emplace_back("M4", det_exact(r.matrix.entries.block(n1, n4, n1, n4)));
    }
  } else {
    r.matrix = full;
    r.determinants.emplace_back("A", det_exact(full.entries));
    for (const auto& b : full.blocks) {
      r.determinants.emplace_back("A_" + std::to_string(b.level), det_exact(full.diagonal_block(b.level)));
    }
  }
  r.oracles = closed_form_oracles(engine, options);
  return r;
}

bool MatrixReport::passed() const {
  return std::all_of(oracles.begin(), oracles.end(), [](const OracleCheck& c) { return c.pass; });
}

json MatrixReport::to_json() const {
  json dets = json::object();
  for (const auto& [name, v] : determinants) dets[name] = to_string(v);
  json orc = json::array();
  for (const auto& c : oracles) orc.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  json out = nqh::to_json(matrix);
  out["command"] = "matrix";
  out["M"] = M;
  out["N"] = N;
  out["seed"] = seed;
  out["level"] = level ? json(*level) : json(nullptr);
  out["determinants"] = dets;
  out["oracles"] = orc;
  out["passed"] = passed();
  return out;
}

std::string MatrixReport::to_text() const {
  std::ostringstream out;
  out << "matrix M=" << M << " N=" << N << " seed=" << seed;
  if (level) out << " level=" << *level;
  out << "  (" << matrix.rows.size() << "x" << matrix.cols.size() << ")\n";
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < matrix.entries.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.entries.cols(); ++c) {
      cells.push_back(nqh::to_string(matrix.entries(r, c)));
      width = std::max(width, cells.back().size());
    }
  }
  out << "columns:";
  for (const auto& c : matrix.cols) out << " " << nqh::to_string(c);
  out << "\n";
  for (std::size_t r = 0; r < matrix.entries.rows(); ++r) {
    const auto& b = matrix.rows[r];
    std::ostringstream label;
    label << "(" << b.i << "," << b.j << ")" << nqh::to_string(b.component) << " k=" << b.level;
    out << "  " << label.str() << std::string(label.str().size() < 18 ? 18 - label.str().size() : 1, ' ');
    for (std::size_t c = 0; c < matrix.entries.cols(); ++c) {
      const std::string& s = cells[r * matrix.entries.cols() + c];
      out << std::string(width - s.size() + 1, ' ') << s;
    }
    out << "\n";
  }
  out << "blocks:";
  for (const auto& b : matrix.blocks) out << " A_" << b.level << "[" << b.nrows << "x" << b.ncols << "]";
  out << "\ndeterminants:\n";
  for (const auto& [name, v] : determinants) out << "  " << name << " = " << nqh::to_string(v) << "\n";
  out << "oracles:\n";
  for (const auto& c : oracles) out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
  return out.str();
}

}  // namespace nqh
