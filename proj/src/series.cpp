#include "nqh/series.hpp"

#include <algorithm>
#include <string>

#include "nqh/error.hpp"

namespace nqh {

RationalFunction1::RationalFunction1(UniPoly numerator, UniPoly denominator) {
  if (denominator.is_zero()) throw InvalidInput("RationalFunction1: zero denominator");
  UniPoly g = gcd(numerator, denominator);
  num_ = exact_div(numerator, g);
  den_ = exact_div(denominator, g);
  Rational inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

namespace {

// x-adic valuation of a nonzero polynomial.
int valuation(const UniPoly& p) {
  const auto& cs = p.coefficients();
  int v = 0;
  while (cs[static_cast<std::size_t>(v)] == 0) ++v;
  return v;
}

// Power series of num/unit up to degree n, unit(0) != 0.
std::vector<Rational> series_quotient(const UniPoly& num, const std::vector<Rational>& unit, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(n + 1, 0)));
  const Rational inv0 = 1 / unit[0];
  for (int k = 0; k <= n; ++k) {
    Rational acc = num.coeff(k);
    int top = std::min<int>(k, static_cast<int>(unit.size()) - 1);
    for (int m = 1; m <= top; ++m) {
      acc -= unit[static_cast<std::size_t>(m)] * out[static_cast<std::size_t>(k - m)];
    }
    out[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return out;
}

}  // namespace

std::map<int, Rational> laurent_expand(const RationalFunction1& r, int lo, int hi) {
  if (lo > hi) throw InvalidInput("laurent_expand: empty window");
  const UniPoly& den = r.denominator();
  const int v = valuation(den);
  std::vector<Rational> unit(den.coefficients().begin() + v, den.coefficients().end());
  // r = x^(-v) * (num / unit); coefficient of x^k is series coefficient k + v.
  std::vector<Rational> s = series_quotient(r.numerator(), unit, hi + v);
  std::map<int, Rational> out;
  for (int k = lo; k <= hi; ++k) {
    int idx = k + v;
    out[k] = idx >= 0 ? s[static_cast<std::size_t>(idx)] : Rational(0);
  }
  return out;
}

TruncatedLaurent::TruncatedLaurent(int floor, std::vector<Rational> coeffs, int ceiling)
    : floor_(floor), coeffs_(std::move(coeffs)), ceiling_(ceiling) {
  if (ceiling_ < kExact) {
    int keep = std::max(0, ceiling_ - floor_ + 1);
    if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
  }
}

TruncatedLaurent TruncatedLaurent::from_poly(const UniPoly& p, int shift) {
  return TruncatedLaurent(shift, p.coefficients(), kExact);
}

TruncatedLaurent TruncatedLaurent::inverse_of(const UniPoly& p, int ceiling) {
  if (p.is_zero()) throw InvalidInput("TruncatedLaurent::inverse_of: zero polynomial");
  const int v = valuation(p);
  auto window = laurent_expand(RationalFunction1(UniPoly(1), p), -v, std::max(ceiling, -v));
  std::vector<Rational> cs;
  cs.reserve(window.size());
  for (auto& [k, c] : window) cs.push_back(c);
  return TruncatedLaurent(-v, std::move(cs), std::max(ceiling, -v));
}

Rational TruncatedLaurent::coeff(int k) const {
  if (k > ceiling_) {
    throw InternalConsistency("series coefficient t^" + std::to_string(k) + " beyond known order " +
                              std::to_string(ceiling_));
  }
  int idx = k - floor_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

TruncatedLaurent TruncatedLaurent::truncated(int ceiling) const {
  return TruncatedLaurent(floor_, coeffs_, std::min(ceiling, ceiling_));
}

TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  int floor = std::min(a.floor_, b.floor_);
  int ceiling = std::min(a.ceiling_, b.ceiling_);
  int top = std::max(a.floor_ + static_cast<int>(a.coeffs_.size()), b.floor_ + static_cast<int>(b.coeffs_.size()));
  if (ceiling < TruncatedLaurent::kExact) top = std::min(top, ceiling + 1);
  std::vector<Rational> cs(static_cast<std::size_t>(std::max(0, top - floor)));
  for (std::size_t n = 0; n < cs.size(); ++n) {
    int k = floor + static_cast<int>(n);
    int ia = k - a.floor_, ib = k - b.floor_;
    if (ia >= 0 && ia < static_cast<int>(a.coeffs_.size())) cs[n] += a.coeffs_[static_cast<std::size_t>(ia)];
    if (ib >= 0 && ib < static_cast<int>(b.coeffs_.size())) cs[n] += b.coeffs_[static_cast<std::size_t>(ib)];
  }
  return TruncatedLaurent(floor, std::move(cs), ceiling);
}

TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  const int floor = a.floor_ + b.floor_;
  // Known up to min(ceil_a + floor_b, ceil_b + floor_a).
  long ca = a.ceiling_ >= TruncatedLaurent::kExact ? TruncatedLaurent::kExact : static_cast<long>(a.ceiling_) + b.floor_;
  long cb = b.ceiling_ >= TruncatedLaurent::kExact ? TruncatedLaurent::kExact : static_cast<long>(b.ceiling_) + a.floor_;
  int ceiling = static_cast<int>(std::min<long>({ca, cb, TruncatedLaurent::kExact}));
  std::size_t len = a.coeffs_.empty() || b.coeffs_.empty() ? 0 : a.coeffs_.size() + b.coeffs_.size() - 1;
  if (ceiling < TruncatedLaurent::kExact) {
    len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(0, ceiling - floor + 1)));
  }
  std::vector<Rational> cs(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncatedLaurent(floor, std::move(cs), ceiling);
}

TruncatedLaurent TruncatedLaurent::operator-() const {
  TruncatedLaurent out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

}  // namespace nqh
