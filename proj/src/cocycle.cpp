#include "nqh/cocycle.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "nqh/error.hpp"

namespace nqh {

namespace {

Chart other_chart(Component side) { return side == Component::V2V4 ? Chart::V2 : Chart::V3; }

int divisor_var(Component side, Chart chart) {
  if (chart == Chart::V4) return side == Component::V2V4 ? 0 : 1;
  if (chart == Chart::V2 && side == Component::V2V4) return 1;
  if (chart == Chart::V3 && side == Component::V3V4) return 0;
  throw InvalidInput("chart " + to_string(chart) + " does not meet overlap " + to_string(side));
}

ParameterIndex base_direction(const ParameterIndex& d) { return {d.family, 1, d.i}; }

int component_of(const Exponent2& e, int var) { return var == 0 ? e.i : e.j; }

// Terms of f with exponent e in `var`, as an exact series in the other variable.
TruncatedLaurent slice_series(const LaurentPoly2& f, int var, int e) {
  std::map<int, Rational> cs;
  for (const auto& [ex, c] : f.terms()) {
    if (component_of(ex, var) == e) cs.emplace(component_of(ex, 1 - var), c);
  }
  if (cs.empty()) return {};
  const int lo = cs.begin()->first;
  std::vector<Rational> v(static_cast<std::size_t>(cs.rbegin()->first - lo + 1));
  for (const auto& [k, c] : cs) v[static_cast<std::size_t>(k - lo)] = c;
  return TruncatedLaurent(lo, std::move(v), TruncatedLaurent::kExact);
}

// Phi = num / den expanded first in the divisor variable d, then in t.
CocycleExpansion expand_ratio(Component side, const ParameterIndex& dir, const VectorField& diff,
                              const VectorField& theta, int S, int T) {
  const int dv = side == Component::V2V4 ? 0 : 1;
  const LaurentPoly2& num = dv == 0 ? diff.cy : diff.cx;
  const LaurentPoly2& den = dv == 0 ? theta.cy : theta.cx;
  if (!num.is_zero() && num.min_exponent(dv) < 0) {
    throw InternalConsistency("cocycle has a pole along the divisor on overlap " + to_string(side));
  }
  if (den.is_zero() || den.min_exponent(dv) != 0) {
    throw InternalConsistency("Theta_0 component vanishes identically on the divisor");
  }

  std::vector<TruncatedLaurent> chi, c;
  int chi_floor = 0;
  for (int u = 0; u <= S; ++u) {
    chi.push_back(slice_series(num, dv, u));
    c.push_back(slice_series(den, dv, u));
    chi_floor = std::min(chi_floor, chi.back().floor());
  }
  const UniPoly c0 = den.slice(dv, 0);
  const int v0 = c[0].floor();
  const int precision = T - chi_floor + (S + 1) * std::max(0, v0) + 2;

  std::vector<TruncatedLaurent> R;
  R.push_back(TruncatedLaurent::inverse_of(c0, precision));
  for (int s = 1; s <= S; ++s) {
    TruncatedLaurent acc;
    for (int u = 1; u <= s; ++u) acc = acc + c[static_cast<std::size_t>(u)] * R[static_cast<std::size_t>(s - u)];
    R.push_back(-(R[0] * acc));
  }

  CocycleExpansion out;
  out.side = side;
  out.direction = dir;
  out.divisor_var = dv;
  for (int s = 0; s <= S; ++s) {
    TruncatedLaurent phi;
    for (int u = 0; u <= s; ++u) phi = phi + chi[static_cast<std::size_t>(u)] * R[static_cast<std::size_t>(s - u)];
    out.by_power.push_back(std::move(phi));
  }
  return out;
}

std::string join_mismatch(const std::string& what, const Rational& got, const Rational& want) {
  return what + ": constructed " + to_string(got) + ", closed form " + to_string(want);
}

}  // namespace

// ---------------------------------------------------------------------------

BezoutData bezout_cofactors(const UniPoly& F) {
  if (!F.degree() || *F.degree() < 1) throw InvalidInput("bezout_cofactors: polynomial must be nonconstant");
  const UniPoly Fd = F.derivative();
  const ExtendedGcd eg = extended_gcd(F, Fd);
  BezoutData out;
  out.F = F;
  out.G = eg.gcd;
  out.S = exact_div(F, out.G);
  out.W = eg.t % out.S;
  out.Z = exact_div(out.G - out.W * Fd, F);
  return out;
}

bool LocalSolution::restricted_identity_holds() const {
  return F_p == tangential * F.derivative() + UniPoly(Rational(exponent)) * normal * F;
}

Rational CocycleExpansion::coefficient(int i, int j) const {
  const int d = divisor_var == 0 ? i : j;
  const int t = divisor_var == 0 ? j : i;
  if (d < 0) return 0;
  if (d >= static_cast<int>(by_power.size())) {
    throw InternalConsistency("cocycle expansion computed only to divisor order " +
                              std::to_string(static_cast<int>(by_power.size()) - 1));
  }
  return by_power[static_cast<std::size_t>(d)].coeff(t);
}

RationalMatrix CocycleMatrix::diagonal_block(int level) const {
  for (const auto& b : blocks) {
    if (b.level == level) return entries.block(b.row0, b.nrows, b.col0, b.ncols);
  }
  throw UnsupportedRange("no block at level " + std::to_string(level));
}

bool CocycleMatrix::is_block_lower_triangular() const {
  for (const auto& b : blocks) {
    for (std::size_t r = b.row0; r < b.row0 + b.nrows; ++r) {
      for (std::size_t c = b.col0 + b.ncols; c < entries.cols(); ++c) {
        if (entries(r, c) != 0) return false;
      }
    }
  }
  return true;
}

Exponent2 propagation_shift(const ParameterIndex& d) {
  return d.family == Family::A ? Exponent2{d.k - 1, 2 * d.k - 2} : Exponent2{d.k - 1, d.k - 1};
}

PlanePoly normal_form_parameter_derivative(const ParameterPoint& p, const ParameterIndex& idx) {
  (void)p.at(idx);
  auto factors = normal_form_factors(p);
  const std::size_t pos =
      idx.family == Family::A ? 3 + static_cast<std::size_t>(idx.i - 1) : 3 + static_cast<std::size_t>(p.N() - 1 + idx.i - 1);
  factors[pos] = idx.family == Family::A ? PlanePoly::monomial(1, 1, idx.k - 1, kAmbientVars)
                                         : PlanePoly::monomial(1, idx.k + 1, 0, kAmbientVars);
  return product(factors, kAmbientVars);
}

// ---------------------------------------------------------------------------

struct CocycleEngine::Impl {
  ParameterPoint p;
  EngineOptions options;
  PlanePoly nf;
  std::map<Chart, LaurentPoly2> pulled;
  VectorField theta;
  mutable std::map<ParameterIndex, PlanePoly> derivatives;
  mutable std::map<std::tuple<int, int, ParameterIndex>, LocalSolution> solutions;
  mutable std::map<std::pair<int, ParameterIndex>, CocycleExpansion> expansions;
  mutable std::optional<CocycleMatrix> full;

  Impl(ParameterPoint point, EngineOptions opt) : p(std::move(point)), options(opt) {
    nf = build_normal_form(p);
    for (Chart c : {Chart::V2, Chart::V3, Chart::V4}) pulled.emplace(c, pullback_function(nf, c));
    theta = theta_zero_of(nf, p.M() + p.N() - 2, 2 * p.M() + p.N() - 3);
  }

  const PlanePoly& derivative(const ParameterIndex& d) const {
    auto it = derivatives.find(d);
    if (it == derivatives.end()) it = derivatives.emplace(d, normal_form_parameter_derivative(p, d)).first;
    return it->second;
  }

  // Transported field of the other chart minus the V4 field, both for direction d
  // of any level: level-k fields are the level-1 ones times the propagation monomial.
  VectorField difference(Component side, const ParameterIndex& d, const LocalSolution& other,
                         const LocalSolution& own) const {
    const Chart oc = other_chart(side);
    const Exponent2 sh = propagation_shift(d);
    VectorField xo = other.field;
    VectorField x4 = own.field;
    if (sh.i != 0 || sh.j != 0) {
      LaurentPoly2 m = pullback(LaurentPoly2::monomial(1, sh.i, sh.j, chart_vars(Chart::V4)),
                                chart_transition(oc, Chart::V4));
      xo = {m * xo.cx, m * xo.cy};
      x4 = x4.shifted(sh.i, sh.j);
    }
    return pullback_vector_field(xo, chart_transition(Chart::V4, oc)) - x4;
  }
};

CocycleEngine::CocycleEngine(ParameterPoint p, EngineOptions options)
    : impl_(std::make_unique<Impl>(std::move(p), options)) {}
CocycleEngine::~CocycleEngine() = default;
CocycleEngine::CocycleEngine(CocycleEngine&&) noexcept = default;
CocycleEngine& CocycleEngine::operator=(CocycleEngine&&) noexcept = default;

const ParameterPoint& CocycleEngine::point() const { return impl_->p; }
const PlanePoly& CocycleEngine::normal_form() const { return impl_->nf; }
const LaurentPoly2& CocycleEngine::chart_pullback(Chart c) const {
  auto it = impl_->pulled.find(c);
  if (it == impl_->pulled.end()) throw InvalidInput("chart " + to_string(c) + " is not part of the covering");
  return it->second;
}
const VectorField& CocycleEngine::theta0() const { return impl_->theta; }

const LocalSolution& CocycleEngine::local_solution(Component side, Chart chart, const ParameterIndex& dir) const {
  if (dir.k != 1) throw InvalidInput("local solutions are built for level-1 directions, got " + to_string(dir));
  (void)impl_->p.at(dir);
  const auto key = std::make_tuple(static_cast<int>(side), static_cast<int>(chart), dir);
  if (auto it = impl_->solutions.find(key); it != impl_->solutions.end()) return it->second;

  const int dv = divisor_var(side, chart);
  const LaurentPoly2& f = chart_pullback(chart);
  const LaurentPoly2 fp = pullback_function(impl_->derivative(dir), chart);

  LocalSolution s;
  s.chart = chart;
  s.side = side;
  s.direction = dir;
  s.divisor_var = dv;
  s.exponent = f.min_exponent(dv);
  if (s.exponent < 1) throw InternalConsistency("normal form does not vanish on the divisor");
  if (!fp.is_zero() && fp.min_exponent(dv) < s.exponent) {
    throw InternalConsistency("parameter derivative vanishes to lower order than the normal form");
  }
  s.F = f.slice(dv, s.exponent);
  s.F_p = fp.slice(dv, s.exponent);
  s.bezout = bezout_cofactors(s.F);
  const UniPoly q = exact_div(s.F_p, s.bezout.G);
  s.tangential = q * s.bezout.W;
  s.normal = q * s.bezout.Z * UniPoly(make_rational(1, s.exponent));

  const VarNames vars = chart_vars(chart);
  const int tv = 1 - dv;
  LaurentPoly2 lt = LaurentPoly2::from_unipoly(s.tangential, tv, vars);
  LaurentPoly2 ln = LaurentPoly2::from_unipoly(s.normal, tv, vars).shifted(dv == 0 ? 1 : 0, dv == 1 ? 1 : 0);
  s.field = dv == 0 ? VectorField{ln, lt} : VectorField{lt, ln};
  return impl_->solutions.emplace(key, std::move(s)).first->second;
}

const CocycleExpansion& CocycleEngine::expansion(Component side, const ParameterIndex& dir) const {
  if (dir.k != 1) throw InvalidInput("expansion: level-1 direction expected, got " + to_string(dir));
  const auto key = std::make_pair(static_cast<int>(side), dir);
  if (auto it = impl_->expansions.find(key); it != impl_->expansions.end()) return it->second;

  const int M = impl_->p.M(), N = impl_->p.N();
  const int dv = side == Component::V2V4 ? 0 : 1;
  int dmax = 0, tmax = 0;
  for (int k = 1; k <= max_level(M, N); ++k) {
    for (const auto& row : level_rows(M, N, k)) {
      if (row.component != side) continue;
      for (const auto& col : parameter_indices(M, N)) {
        if (col.family != dir.family || col.i != dir.i) continue;
        const Exponent2 sh = propagation_shift(col);
        const Exponent2 rel{row.i - sh.i, row.j - sh.j};
        dmax = std::max(dmax, component_of(rel, dv));
        tmax = std::max(tmax, component_of(rel, 1 - dv));
      }
    }
  }
  const int margin = impl_->options.truncation_margin;
  const LocalSolution& other = local_solution(side, other_chart(side), dir);
  const LocalSolution& own = local_solution(side, Chart::V4, dir);
  CocycleExpansion e =
      expand_ratio(side, dir, impl_->difference(side, dir, other, own), impl_->theta, dmax + margin, tmax + margin);
  return impl_->expansions.emplace(key, std::move(e)).first->second;
}

CocycleExpansion CocycleEngine::direct_expansion(Component side, const ParameterIndex& dir,
                                                 const std::vector<Exponent2>& window) const {
  (void)impl_->p.at(dir);
  const ParameterIndex base = base_direction(dir);
  const int dv = side == Component::V2V4 ? 0 : 1;
  int dmax = 0, tmax = 0;
  for (const auto& w : window) {
    dmax = std::max(dmax, component_of(w, dv));
    tmax = std::max(tmax, component_of(w, 1 - dv));
  }
  const int margin = impl_->options.truncation_margin;
  const LocalSolution& other = local_solution(side, other_chart(side), base);
  const LocalSolution& own = local_solution(side, Chart::V4, base);
  return expand_ratio(side, dir, impl_->difference(side, dir, other, own), impl_->theta, dmax + margin,
                      tmax + margin);
}

Rational CocycleEngine::entry(const BasisMonomial& row, const ParameterIndex& col) const {
  const Exponent2 sh = propagation_shift(col);
  return expansion(row.component, base_direction(col)).coefficient(row.i - sh.i, row.j - sh.j);
}

CocycleMatrix CocycleEngine::level_matrix(int k) const {
  const int M = impl_->p.M(), N = impl_->p.N();
  CocycleMatrix out;
  out.M = M;
  out.N = N;
  out.restricted = M < 3 || N < 3;
  out.rows = level_rows(M, N, k);
  out.cols = level_columns(M, N, k);
  out.entries = RationalMatrix(out.rows.size(), out.cols.size());
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t c = 0; c < out.cols.size(); ++c) out.entries(r, c) = entry(out.rows[r], out.cols[c]);
  }
  out.blocks.push_back({k, 0, out.rows.size(), 0, out.cols.size()});
  return out;
}

CocycleMatrix CocycleEngine::full_matrix() const {
  if (impl_->full) return *impl_->full;
  const int M = impl_->p.M(), N = impl_->p.N();
  CocycleMatrix out;
  out.M = M;
  out.N = N;
  out.restricted = M < 3 || N < 3;
  for (int k = 1; k <= max_level(M, N); ++k) {
    auto rows = level_rows(M, N, k);
    auto cols = level_columns(M, N, k);
    out.blocks.push_back({k, out.rows.size(), rows.size(), out.cols.size(), cols.size()});
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    out.cols.insert(out.cols.end(), cols.begin(), cols.end());
  }
  if (out.rows.size() != out.cols.size()) {
    throw InternalConsistency("row and column counts differ: " + std::to_string(out.rows.size()) + " vs " +
                              std::to_string(out.cols.size()));
  }
  out.entries = RationalMatrix(out.rows.size(), out.cols.size());
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t c = 0; c < out.cols.size(); ++c) out.entries(r, c) = entry(out.rows[r], out.cols[c]);
  }
  impl_->full = out;
  return out;
}

// ---------------------------------------------------------------------------

LocalSolution local_solution(const ParameterPoint& p, Component side, Chart chart, const ParameterIndex& direction) {
  return CocycleEngine(p).local_solution(side, chart, direction);
}

std::map<Exponent2, Rational> cocycle_coefficients(const ParameterPoint& p, const ParameterIndex& direction,
                                                   const std::vector<Exponent2>& window, Component side) {
  CocycleEngine engine(p);
  CocycleExpansion e = engine.direct_expansion(side, direction, window);
  std::map<Exponent2, Rational> out;
  for (const auto& w : window) out[w] = e.coefficient(w.i, w.j);
  return out;
}

CocycleMatrix build_level_matrix(const ParameterPoint& p, int k) {
  if (k < 1 || k > max_level(p.M(), p.N())) {
    throw UnsupportedRange("level " + std::to_string(k) + " outside 1.." + std::to_string(max_level(p.M(), p.N())));
  }
  return CocycleEngine(p).level_matrix(k);
}

CocycleMatrix full_matrix(const ParameterPoint& p) { return CocycleEngine(p).full_matrix(); }

bool verify_propagation(const ParameterPoint& p, const ParameterIndex& direction) {
  p.validate();
  auto on_v4 = [](const ParameterPoint& q) { return pullback_function(build_normal_form_unchecked(q), Chart::V4); };
  const LaurentPoly2 lhs = parameter_derivative(p, direction, on_v4);
  const Exponent2 sh = propagation_shift(direction);
  const LaurentPoly2 rhs = parameter_derivative(p, base_direction(direction), on_v4).shifted(sh.i, sh.j);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace {

Rational prod_a1(const ParameterPoint& p) {
  Rational out = 1;
  for (int j = 1; j <= p.N() - 1; ++j) out *= p.a(1, j);
  return out;
}

}  // namespace

Rational vandermonde(const std::vector<Rational>& x) {
  Rational out = 1;
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t s = r + 1; s < x.size(); ++s) out *= x[s] - x[r];
  }
  return out;
}

namespace {

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// Determinant of M4 restricted to rows and columns j0..M-2.
Rational det_m4_tail(const ParameterPoint& p, int j0) {
  const int M = p.M(), N = p.N();
  const int q = M - 1 - j0;
  Rational num = 1;
  std::vector<Rational> nodes;
  for (int i = j0; i <= M - 2; ++i) {
    num *= sign_power(i + 1) * pow(p.b(1, i), M - 2 + q) * utilde_at_root(p, i);
    nodes.push_back(Rational(1) / p.b(1, i));
  }
  return vandermonde(nodes) * num / pow(Rational(2 * M + N) * prod_a1(p), q);
}

}  // namespace

Rational ktilde_closed_form(const ParameterPoint& p, int i) {
  p.validate();
  const int N = p.N();
  const Rational& ai = p.a(1, i);
  Rational den = 1;
  for (int j = 1; j <= N - 1; ++j) {
    if (j == i) continue;
    const Rational& aj = p.a(1, j);
    den *= aj * (Rational(1) / aj - Rational(1) / ai);
  }
  return sign_power(N) * pow(ai, N - 1) / den;
}

Rational utilde_at_root(const ParameterPoint& p, int i) {
  p.validate();
  const int M = p.M();
  const Rational& bi = p.b(1, i);
  // R(y) = y (y + 1) prod (y + b_j); R'(-b_i) is the product over the other roots.
  Rational rprime = -bi * (Rational(1) - bi);
  for (int j = 1; j <= M - 2; ++j) {
    if (j != i) rprime *= p.b(1, j) - bi;
  }
  return pow(Rational(-1) / bi, M - 1) / rprime;
}

Rational b0_closed_form(const ParameterPoint& p) {
  p.validate();
  return Rational(1) / (Rational(2 * p.M() + p.N()) * prod_a1(p));
}

Rational m1_entry_closed_form(const ParameterPoint& p, int j, int i) {
  const int M = p.M(), N = p.N();
  const Rational& ai = p.a(1, i);
  const Rational kt = ktilde_closed_form(p, i);
  if (j != N - 1) return sign_power(N + j) * kt / (Rational(M + N) * pow(ai, N + j));
  return (-kt / pow(ai, 2 * N - 1) - b0_closed_form(p) / ai) / Rational(M + N);
}

Rational m4_entry_closed_form(const ParameterPoint& p, int j, int i) {
  const int M = p.M(), N = p.N();
  const Rational& bi = p.b(1, i);
  return sign_power(j + 1) * pow(bi, 2 * M - j - 3) * utilde_at_root(p, i) /
         (Rational(2 * M + N) * prod_a1(p));
}

Rational det_m1_closed_form(const ParameterPoint& p) {
  const int M = p.M(), N = p.N();
  Rational out = sign_power(N * N - 1) / pow(Rational(M + N), N - 1) * Rational(2 * M + 2 * N - 1) /
                 Rational(2 * M + N);
  for (int i = 1; i <= N - 1; ++i) out *= ktilde_closed_form(p, i) / pow(p.a(1, i), N + 1);
  for (int i = 1; i <= N - 1; ++i) {
    for (int j = i + 1; j <= N - 1; ++j) out *= Rational(1) / p.a(1, i) - Rational(1) / p.a(1, j);
  }
  return out;
}

Rational det_m1k_closed_form(const ParameterPoint& p, int k) {
  const int M = p.M(), N = p.N();
  if (k < 2 || k > N - 1) throw UnsupportedRange("det_m1k_closed_form: k outside 2..N-1");
  const int n = N - k;
  Rational out = 1;
  for (int j = 1; j <= n; ++j) out *= sign_power(N + j);
  std::vector<Rational> nodes;
  for (int i = k; i <= N - 1; ++i) {
    out *= ktilde_closed_form(p, i) / (Rational(M + N) * pow(p.a(1, i), N + 1));
    nodes.push_back(Rational(1) / p.a(1, i));
  }
  return out * vandermonde(nodes);
}

Rational det_m4k_closed_form(const ParameterPoint& p, int k) {
  const int M = p.M(), N = p.N();
  if (k < N || k > max_level(M, N) || M < 3) throw UnsupportedRange("det_m4k_closed_form: k outside N..N+2M-5");
  return det_m4_tail(p, M - 1 - level_q(M, N, k));
}

namespace {

struct OracleSink {
  std::vector<OracleCheck> checks;
  void add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

std::string level_name(int k, const std::string& what) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "level_%02d.", k);
  return buf + what;
}

// Compares m(r, c) against sign * want(r, c); detail names the first mismatch.
template <class Want>
std::pair<bool, std::string> compare_entries(const RationalMatrix& m, const Rational& sign, Want&& want) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational w = sign * want(r, c);
      if (m(r, c) != w) {
        return {false, join_mismatch("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")", m(r, c), w)};
      }
    }
  }
  return {true, std::to_string(m.rows() * m.cols()) + " entries agree"};
}

std::pair<bool, std::string> compare_value(const std::string& what, const Rational& got, const Rational& want) {
  if (got == want) return {true, what + " = " + to_string(got)};
  return {false, join_mismatch(what, got, want)};
}

}  // namespace

std::vector<OracleCheck> closed_form_oracles(const CocycleEngine& engine, OracleOptions options) {
  const ParameterPoint& p = engine.point();
  const int M = p.M(), N = p.N();
  const Rational sign = kClosedFormSign;
  const Rational m4_sign = options.flip_m4_sign ? -sign : sign;
  const std::size_t n1 = static_cast<std::size_t>(N - 1), n4 = static_cast<std::size_t>(M - 2);
  OracleSink out;

  const CocycleMatrix A = engine.full_matrix();
  const RationalMatrix A1 = A.diagonal_block(1);
  const RationalMatrix M1 = A1.block(0, n1, 0, n1);
  const RationalMatrix M2 = A1.block(0, n1, n1, n4);
  const RationalMatrix M3 = A1.block(n1, n4, 0, n1);
  const RationalMatrix M4 = A1.block(n1, n4, n1, n4);

  {
    auto [ok, d] = compare_entries(M1, sign, [&](std::size_t r, std::size_t c) {
      return m1_entry_closed_form(p, static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    });
    out.add("block.M1.entries", ok, d);
    auto [okd, dd] = compare_value("det M1", det_exact(M1), pow(sign, N - 1) * det_m1_closed_form(p));
    out.add("block.M1.det", okd, dd);
  }
  out.add("block.M2.zero", M2.is_zero(), M2.is_zero() ? "zero" : "nonzero entries");
  out.add("block.M3.zero", M3.is_zero(), M3.is_zero() ? "zero" : "nonzero entries");
  {
    auto [ok, d] = compare_entries(M4, m4_sign, [&](std::size_t r, std::size_t c) {
      return m4_entry_closed_form(p, static_cast<int>(r) + 1, static_cast<int>(c) + 1);
    });
    out.add("block.M4.entries", ok, d);
    const Rational want = M >= 3 ? pow(m4_sign, M - 2) * det_m4_tail(p, 1) : Rational(1);
    auto [okd, dd] = compare_value("det M4", det_exact(M4), want);
    out.add("block.M4.det", okd, dd);
  }

  // Bezout-side values: constructed cofactors against the closed forms.
  {
    const LocalSolution& v2 = engine.local_solution(Component::V2V4, Chart::V2, {Family::A, 1, 1});
    const UniPoly kt = v2.bezout.W.reversed(N - 1);
    bool ok = true;
    std::string d = std::to_string(N - 1) + " values agree";
    for (int i = 1; i <= N - 1 && ok; ++i) {
      const Rational got = kt.eval(-p.a(1, i)), want = ktilde_closed_form(p, i);
      if (got != want) ok = false, d = join_mismatch("Ktilde(-a_1," + std::to_string(i) + ")", got, want);
    }
    out.add("bezout.Ktilde", ok, d);

    const LocalSolution& v4 = engine.local_solution(Component::V2V4, Chart::V4, {Family::A, 1, 1});
    auto [okb, db] = compare_value("B(0)", v4.bezout.W.coeff(0), b0_closed_form(p));
    out.add("bezout.B0", okb, db);
  }
  {
    bool ok = true;
    std::string d = M >= 3 ? std::to_string(M - 2) + " values agree" : "no b-branches";
    if (M >= 3) {
      const LocalSolution& v3 = engine.local_solution(Component::V3V4, Chart::V3, {Family::A, 1, 1});
      const UniPoly ut = (v3.bezout.W * UniPoly(prod_a1(p))).reversed(M - 1);
      for (int i = 1; i <= M - 2 && ok; ++i) {
        const Rational got = ut.eval(Rational(-1) / p.b(1, i)), want = utilde_at_root(p, i);
        if (got != want) ok = false, d = join_mismatch("Utilde(-1/b_1," + std::to_string(i) + ")", got, want);
      }
    }
    out.add("bezout.Utilde", ok, d);
  }
  {
    bool ok = true;
    for (int i = 1; i <= N - 1; ++i) ok = ok && ktilde_closed_form(p, i) != 0;
    out.add("nonvanishing.Ktilde", ok, ok ? "all nonzero" : "a value vanishes");
    ok = true;
    for (int i = 1; i <= M - 2; ++i) ok = ok && utilde_at_root(p, i) != 0;
    out.add("nonvanishing.Utilde", ok, ok ? "all nonzero" : "a value vanishes");
  }

  for (int k = 2; k <= max_level(M, N); ++k) {
    const RationalMatrix Ak = A.diagonal_block(k);
    if (k <= N - 1) {
      const std::size_t n = static_cast<std::size_t>(N - k);
      const RationalMatrix m1k = Ak.block(0, n, 0, n);
      auto [ok, d] = compare_entries(m1k, sign, [&](std::size_t r, std::size_t c) {
        return m1_entry_closed_form(p, static_cast<int>(r) + 1, k + static_cast<int>(c));
      });
      out.add(level_name(k, "M1k.entries"), ok, d);
      auto [okd, dd] = compare_value("det M1^" + std::to_string(k), det_exact(m1k),
                                     pow(sign, N - k) * det_m1k_closed_form(p, k));
      out.add(level_name(k, "M1k.det"), okd, dd);
      const RationalMatrix m4 = Ak.block(n, n4, n, n4);
      out.add(level_name(k, "M4.propagated"), m4 == M4, m4 == M4 ? "equal to level-1 M4" : "differs from level-1 M4");
      const RationalMatrix lower = Ak.block(n, n4, 0, n);
      out.add(level_name(k, "lower.zero"), lower.is_zero(), lower.is_zero() ? "zero" : "nonzero entries");
    } else {
      const int q = level_q(M, N, k);
      const int j0 = M - 1 - q;
      auto [ok, d] = compare_entries(Ak, m4_sign, [&](std::size_t r, std::size_t c) {
        return m4_entry_closed_form(p, j0 + static_cast<int>(r), j0 + static_cast<int>(c));
      });
      out.add(level_name(k, "M4k.entries"), ok, d);
      auto [okd, dd] =
          compare_value("det M4^" + std::to_string(k), det_exact(Ak), pow(m4_sign, q) * det_m4k_closed_form(p, k));
      out.add(level_name(k, "M4k.det"), okd, dd);
    }
  }

  out.add("matrix.block_lower_triangular", A.is_block_lower_triangular(),
          A.is_block_lower_triangular() ? "zero above the diagonal blocks" : "nonzero entry above a diagonal block");
  {
    Rational blocks = 1;
    for (const auto& b : A.blocks) blocks *= det_exact(A.diagonal_block(b.level));
    const Rational full = det_exact(A.entries);
    out.add("matrix.det_factorizes", full == blocks, join_mismatch("det", full, blocks));
    out.add("matrix.invertible", full != 0, "det = " + to_string(full));
  }

  std::sort(out.checks.begin(), out.checks.end(),
            [](const OracleCheck& a, const OracleCheck& b) { return a.name < b.name; });
  return out.checks;
}

std::vector<OracleCheck> closed_form_oracles(const ParameterPoint& p, OracleOptions options) {
  return closed_form_oracles(CocycleEngine(p), options);
}

}  // namespace nqh
