#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nqh/rational.hpp"

namespace nqh {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and no degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& constant);  // NOLINT: implicit scalar embedding
  UniPoly(int constant);              // NOLINT

  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<int> degree() const;
  const Rational& coeff(int d) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// x^n * p(1/x); requires n >= degree().
  UniPoly reversed(int n) const;
  /// Multiplies by x^k (k >= 0).
  UniPoly shifted(int k) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws InvalidInput on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throwing InternalConsistency when the remainder is not zero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // gcd = s * a + t * b
  UniPoly t;
};

/// Classical extended Euclid. Throws InvalidInput when both inputs are zero.
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace nqh
