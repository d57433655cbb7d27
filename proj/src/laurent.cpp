#include "nqh/laurent.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "nqh/error.hpp"

namespace nqh {

LaurentPoly2::LaurentPoly2(VarNames vars, Terms terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly2 LaurentPoly2::constant(const Rational& c, VarNames vars) {
  return monomial(c, 0, 0, std::move(vars));
}

LaurentPoly2 LaurentPoly2::monomial(const Rational& c, int i, int j, VarNames vars) {
  LaurentPoly2 p(std::move(vars));
  p.add_term({i, j}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::from_unipoly(const UniPoly& u, int var, VarNames vars) {
  LaurentPoly2 p(std::move(vars));
  const auto& cs = u.coefficients();
  for (std::size_t d = 0; d < cs.size(); ++d) {
    int e = static_cast<int>(d);
    p.add_term(var == 0 ? Exponent2{e, 0} : Exponent2{0, e}, cs[d]);
  }
  return p;
}

void LaurentPoly2::add_term(const Exponent2& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly2::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, var == 0 ? e.i : e.j);
  return m;
}

int LaurentPoly2::max_exponent(int var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, var == 0 ? e.i : e.j);
  return m;
}

int LaurentPoly2::min_total_degree() const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.i + e.j);
  return m;
}

bool LaurentPoly2::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.i >= 0 && t.first.j >= 0; });
}

LaurentPoly2 LaurentPoly2::derivative(int var) const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_) {
    int n = var == 0 ? e.i : e.j;
    if (n == 0) continue;
    Exponent2 d = var == 0 ? Exponent2{e.i - 1, e.j} : Exponent2{e.i, e.j - 1};
    out.add_term(d, c * n);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(int i, int j) const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent2{e.i + i, e.j + j}, c);
  return out;
}

UniPoly LaurentPoly2::slice(int var, int e) const {
  std::vector<std::pair<int, Rational>> picked;
  int top = -1;
  for (const auto& [ex, c] : terms_) {
    int here = var == 0 ? ex.i : ex.j;
    if (here != e) continue;
    int other = var == 0 ? ex.j : ex.i;
    if (other < 0) throw InvalidInput("LaurentPoly2::slice: negative exponent in " + vars_[var == 0 ? 1 : 0]);
    picked.emplace_back(other, c);
    top = std::max(top, other);
  }
  std::vector<Rational> v(static_cast<std::size_t>(top + 1));
  for (auto& [d, c] : picked) v[static_cast<std::size_t>(d)] = c;
  return UniPoly(std::move(v));
}

LaurentPoly2 LaurentPoly2::substitute(const Monomial2& image_first, const Monomial2& image_second,
                                      VarNames target_vars) const {
  if (image_first.coeff == 0 || image_second.coeff == 0) {
    throw InvalidInput("substitute: monomial image must be nonzero");
  }
  LaurentPoly2 out(std::move(target_vars));
  for (const auto& [e, c] : terms_) {
    Rational k = c * pow(image_first.coeff, e.i) * pow(image_second.coeff, e.j);
    Exponent2 t{image_first.i * e.i + image_second.i * e.j, image_first.j * e.i + image_second.j * e.j};
    out.add_term(t, k);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
  }
  return out;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent2, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    int dl = l.first.i + l.first.j, dr = r.first.i + r.first.j;
    if (dl != dr) return dl > dr;
    return l.first.i > r.first.i;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    std::string mono;
    auto power = [&](const std::string& v, int n) {
      if (n == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (n != 1) mono += "^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
    };
    power(vars_[0], e.i);
    power(vars_[1], e.j);
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

LaurentPoly2 exact_divide(const LaurentPoly2& f, const LaurentPoly2& g) {
  if (g.is_zero()) throw InvalidInput("exact_divide: division by zero");
  if (!f.is_polynomial() || !g.is_polynomial()) throw InvalidInput("exact_divide: Laurent input");
  // Lex order on (i, j): the std::map ordering, so the leading term is the last one.
  auto lead_g = std::prev(g.terms().end());
  LaurentPoly2 rem = f;
  LaurentPoly2 quot(f.vars());
  while (!rem.is_zero()) {
    auto lead_r = std::prev(rem.terms().end());
    int di = lead_r->first.i - lead_g->first.i;
    int dj = lead_r->first.j - lead_g->first.j;
    if (di < 0 || dj < 0) throw InternalConsistency("exact_divide: divisor does not divide");
    Rational c = lead_r->second / lead_g->second;
    LaurentPoly2 t = LaurentPoly2::monomial(c, di, dj, f.vars());
    quot += t;
    rem -= t * g;
  }
  return quot;
}

LaurentPoly2 product(const std::vector<LaurentPoly2>& factors, const VarNames& vars) {
  LaurentPoly2 acc = LaurentPoly2::constant(1, vars);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace nqh
