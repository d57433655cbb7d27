#pragma once

#include <limits>
#include <map>
#include <vector>

#include "nqh/rational.hpp"
#include "nqh/unipoly.hpp"

namespace nqh {

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction1 {
 public:
  RationalFunction1(UniPoly numerator, UniPoly denominator);
  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

 private:
  UniPoly num_;
  UniPoly den_;
};

/// Coefficients c_k of x^k, lo <= k <= hi, of the Laurent expansion at x = 0.
/// Every k of the window is present in the result, zeros included.
std::map<int, Rational> laurent_expand(const RationalFunction1& r, int lo, int hi);

/// Truncated Laurent series sum_{k >= floor} c_k t^k, known exactly for all
/// k <= ceiling. Coefficients below `floor` are exactly zero; coefficients
/// above `ceiling` are unknown.
class TruncatedLaurent {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  TruncatedLaurent() = default;
  TruncatedLaurent(int floor, std::vector<Rational> coeffs, int ceiling);
  /// Exact series of a Laurent polynomial t^shift * p(t).
  static TruncatedLaurent from_poly(const UniPoly& p, int shift = 0);
  /// 1/p expanded at 0, known up to t^ceiling.
  static TruncatedLaurent inverse_of(const UniPoly& p, int ceiling);

  int floor() const { return floor_; }
  int ceiling() const { return ceiling_; }
  /// Throws InternalConsistency if k lies above the known ceiling.
  Rational coeff(int k) const;

  TruncatedLaurent truncated(int ceiling) const;

  friend TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b);
  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b);
  TruncatedLaurent operator-() const;

 private:
  int floor_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[n] is the coefficient of t^(floor_ + n)
  int ceiling_ = kExact;
};

}  // namespace nqh
