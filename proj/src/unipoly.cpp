#include "nqh/unipoly.hpp"

#include <algorithm>

#include "nqh/error.hpp"

namespace nqh {

namespace {
const Rational kZero = 0;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(const Rational& constant) : coeffs_{constant} { trim(); }
UniPoly::UniPoly(int constant) : coeffs_{Rational(constant)} { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidInput("UniPoly::monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& UniPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(d)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

UniPoly UniPoly::reversed(int n) const {
  auto d = degree();
  if (!d) return {};
  if (*d > n) throw InvalidInput("UniPoly::reversed: degree exceeds n");
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= *d; ++k) v[static_cast<std::size_t>(n - k)] = coeffs_[static_cast<std::size_t>(k)];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw InvalidInput("UniPoly::shifted: negative shift");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = static_cast<int>(coeffs_.size()) - 1; d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (!unit || d == 0) out += a.get_str();
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const int db = *b.degree();
  std::vector<Rational> rem = a.coefficients();
  if (static_cast<int>(rem.size()) - 1 < db) return {UniPoly{}, a};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
  const Rational inv_lead = 1 / b.leading();
  const auto& bc = b.coefficients();
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    Rational c = rem[static_cast<std::size_t>(d)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(d - db)] = c;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(d - db + k)] -= c * bc[static_cast<std::size_t>(k)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalConsistency("exact_div: nonzero remainder " + r.to_string());
  return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("extended_gcd: both inputs are zero");
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = 1, s1 = 0;
  UniPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return extended_gcd(a, b).gcd;
}

}  // namespace nqh
