// Command-line front end: dim, basis, normal-form, pullback, matrix, verify.
//
// Exit status: 0 all checks pass, 1 an identity failed, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nqh/error.hpp"
#include "nqh/param_io.hpp"
#include "nqh/report.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  int M = 0;
  int N = 0;
  std::uint64_t seed = 1;
  std::string params;
  std::string format = "text";
};

void add_size(CLI::App* cmd, Common& c) {
  cmd->add_option("M", c.M, "Multiplicity parameter M (>= 2)")->required();
  cmd->add_option("N", c.N, "Multiplicity parameter N (>= 2)")->required();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_point(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for the sampled parameter point");
  cmd->add_option("--params", c.params, "Parameter file (overrides --seed)")->check(CLI::ExistingFile);
}

bool json_out(const Common& c) { return c.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

nqh::ParameterPoint load_point(const Common& c) {
  nqh::dimension(c.M, c.N);
  if (c.params.empty()) return nqh::sample_generic_parameters(c.M, c.N, c.seed);
  nqh::ParameterPoint p = nqh::read_parameter_file(c.params);
  if (p.M() != c.M || p.N() != c.N) {
    throw nqh::InvalidInput("parameter file is for M=" + std::to_string(p.M()) + " N=" + std::to_string(p.N()) +
                            ", command asked for M=" + std::to_string(c.M) + " N=" + std::to_string(c.N));
  }
  p.validate();
  return p;
}

int cmd_dim(const Common& c) {
  const int delta = nqh::dimension(c.M, c.N);
  const auto basis = nqh::enumerate_basis(c.M, c.N);
  if (json_out(c)) {
    json rows = json::array();
    for (const auto& b : basis) rows.push_back(nqh::to_json(b));
    emit({{"command", "dim"}, {"M", c.M}, {"N", c.N}, {"dimension", delta}, {"basis", rows}});
    return 0;
  }
  std::cout << "delta(" << c.M << "," << c.N << ") = " << delta << "\n";
  for (const auto& b : basis) {
    std::cout << "  x4^" << b.i << " y4^" << b.j << "  [" << nqh::to_string(b.component) << ", level " << b.level
              << "]\n";
  }
  return 0;
}

int cmd_basis(const Common& c, std::optional<int> level) {
  const int top = nqh::max_level(c.M, c.N);
  if (level && (*level < 1 || *level > top)) {
    throw nqh::UnsupportedRange("level " + std::to_string(*level) + " outside 1.." + std::to_string(top));
  }
  const int lo = level ? *level : 1, hi = level ? *level : top;
  json levels = json::array();
  for (int k = lo; k <= hi; ++k) {
    json rows = json::array(), cols = json::array();
    for (const auto& b : nqh::level_rows(c.M, c.N, k)) rows.push_back(nqh::to_json(b));
    for (const auto& p : nqh::level_columns(c.M, c.N, k)) cols.push_back(nqh::to_string(p));
    levels.push_back({{"level", k}, {"rows", rows}, {"cols", cols}});
  }
  if (json_out(c)) {
    emit({{"command", "basis"}, {"M", c.M}, {"N", c.N}, {"dimension", nqh::dimension(c.M, c.N)}, {"levels", levels}});
    return 0;
  }
  std::cout << "basis M=" << c.M << " N=" << c.N << "  delta=" << nqh::dimension(c.M, c.N) << "\n";
  for (const auto& l : levels) {
    std::cout << "level " << l["level"].get<int>() << ":\n    rows:";
    for (const auto& r : l["rows"]) {
      std::cout << " (" << r["i"].get<int>() << "," << r["j"].get<int>() << ")" << r["component"].get<std::string>();
    }
    std::cout << "\n    cols:";
    for (const auto& col : l["cols"]) std::cout << " " << col.get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

int cmd_normal_form(const Common& c) {
  const nqh::ParameterPoint p = load_point(c);
  const nqh::PlanePoly f = nqh::build_normal_form(p);
  const std::string doc = nqh::write_parameters(p);
  const bool round_trip = nqh::read_parameters(doc) == p;
  const auto factors = nqh::normal_form_factors(p);
  if (json_out(c)) {
    json fs = json::array();
    for (const auto& g : factors) fs.push_back(g.to_string());
    json terms = json::array();
    for (const auto& [e, v] : f.terms()) terms.push_back({e.i, e.j, nqh::to_string(v)});
    emit({{"command", "normal-form"},
          {"M", c.M},
          {"N", c.N},
          {"seed", c.seed},
          {"parameters", nqh::to_json(p)["values"]},
          {"factors", fs},
          {"expanded", f.to_string()},
          {"terms", terms},
          {"lowest_degree", f.min_total_degree()},
          {"round_trip", round_trip}});
    return round_trip ? 0 : kExitFail;
  }
  std::cout << "normal form M=" << c.M << " N=" << c.N << " seed=" << c.seed << "\nfactors:\n";
  for (const auto& g : factors) std::cout << "  (" << g.to_string() << ")\n";
  std::cout << "expanded (" << f.size() << " terms, lowest degree " << f.min_total_degree() << "):\n  "
            << f.to_string() << "\nparameters:\n"
            << doc << "round trip: " << (round_trip ? "ok" : "FAILED") << "\n";
  return round_trip ? 0 : kExitFail;
}

int cmd_pullback(const Common& c, const std::string& chart_name) {
  const nqh::Chart chart = nqh::parse_chart(chart_name);
  const nqh::ParameterPoint p = load_point(c);
  const nqh::StrictTransform st = nqh::strict_transform_factorization(p, chart);
  const nqh::LaurentPoly2 pulled = nqh::pullback_function(nqh::build_normal_form(p), chart);
  const nqh::VarNames vars = nqh::chart_vars(chart);

  json restrictions = json::object();
  for (int var = 0; var < 2; ++var) {
    const int e = var == 0 ? st.exc_x : st.exc_y;
    if (e == 0) continue;
    restrictions[vars[static_cast<std::size_t>(var)] + "^" + std::to_string(e)] =
        pulled.slice(var, e).to_string(vars[static_cast<std::size_t>(1 - var)]);
  }
  if (json_out(c)) {
    json terms = json::array();
    for (const auto& [e, v] : pulled.terms()) terms.push_back({e.i, e.j, nqh::to_string(v)});
    emit({{"command", "pullback"},
          {"M", c.M},
          {"N", c.N},
          {"seed", c.seed},
          {"chart", nqh::to_string(chart)},
          {"variables", {vars[0], vars[1]}},
          {"monomial_factor", {st.exc_x, st.exc_y}},
          {"strict_transform", st.rest.to_string()},
          {"leading_coefficients", restrictions},
          {"terms", terms}});
    return 0;
  }
  std::cout << "pullback to " << nqh::to_string(chart) << " (" << vars[0] << ", " << vars[1] << "), M=" << c.M
            << " N=" << c.N << " seed=" << c.seed << "\n"
            << "  monomial factor: " << vars[0] << "^" << st.exc_x << " " << vars[1] << "^" << st.exc_y << "\n"
            << "  strict transform (" << st.rest.size() << " terms): " << st.rest.to_string() << "\n";
  for (const auto& [k, v] : restrictions.items()) std::cout << "  coefficient of " << k << ": " << v.get<std::string>() << "\n";
  return 0;
}

int cmd_matrix(const Common& c, std::optional<int> level, bool inject) {
  const nqh::ParameterPoint p = load_point(c);
  const nqh::MatrixReport r = nqh::build_matrix_report(p, c.seed, level, nqh::OracleOptions{inject});
  if (json_out(c)) {
    emit(r.to_json());
  } else {
    std::cout << r.to_text();
  }
  return r.passed() ? 0 : kExitFail;
}

int cmd_verify(const Common& c, int trials, bool inject) {
  nqh::VerifyOptions opt{trials, inject};
  nqh::VerificationReport r = c.params.empty() ? nqh::run_verification(c.M, c.N, c.seed, opt)
                                               : nqh::run_verification(load_point(c), c.seed, opt);
  if (json_out(c)) {
    emit(r.to_json());
  } else {
    std::cout << r.to_text();
  }
  return r.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal forms, blow-up charts and cocycle matrices of a plane-curve family"};
  app.require_subcommand(1);

  Common dim_c, basis_c, nf_c, pb_c, mx_c, vf_c;
  std::optional<int> basis_level, matrix_level;
  std::string chart = "v4";
  int trials = 3;
  std::string fault;

  auto* dim = app.add_subcommand("dim", "Dimension and basis monomials");
  add_size(dim, dim_c);

  auto* basis = app.add_subcommand("basis", "Row labels and parameter columns by level");
  add_size(basis, basis_c);
  basis->add_option("--level", basis_level, "Only this level");

  auto* nf = app.add_subcommand("normal-form", "Build and expand the normal form");
  add_size(nf, nf_c);
  add_point(nf, nf_c);

  auto* pb = app.add_subcommand("pullback", "Pull the normal form back to a blow-up chart");
  add_size(pb, pb_c);
  add_point(pb, pb_c);
  pb->add_option("--chart", chart, "Chart")->check(CLI::IsMember({"v1", "v2", "v3", "v4"}, CLI::ignore_case));

  auto* mx = app.add_subcommand("matrix", "Exact cocycle matrix, blocks and determinants");
  add_size(mx, mx_c);
  add_point(mx, mx_c);
  mx->add_option("--level", matrix_level, "Only the diagonal block of this level");
  mx->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"m4-sign"}));

  auto* vf = app.add_subcommand("verify", "Run every identity check");
  add_size(vf, vf_c);
  add_point(vf, vf_c);
  vf->add_option("--trials", trials, "Number of sampled points (seed, seed+1, ...)")->check(CLI::PositiveNumber);
  vf->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"m4-sign"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool inject = fault == "m4-sign";
  try {
    if (*dim) return cmd_dim(dim_c);
    if (*basis) return cmd_basis(basis_c, basis_level);
    if (*nf) return cmd_normal_form(nf_c);
    if (*pb) return cmd_pullback(pb_c, chart);
    if (*mx) return cmd_matrix(mx_c, matrix_level, inject);
    if (*vf) return cmd_verify(vf_c, trials, inject);
  } catch (const nqh::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nqh::UnsupportedRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "identity check failed: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
