#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>

#include "nqh/rational.hpp"
#include "nqh/unipoly.hpp"

namespace nqh {

struct Exponent2 {
  int i = 0;  // exponent of the first variable
  int j = 0;  // exponent of the second variable
  friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

/// c * u^i * v^j with integer exponents; the image of a variable under a
/// monomial chart map.
struct Monomial2 {
  Rational coeff = 1;
  int i = 0;
  int j = 0;
};

using VarNames = std::array<std::string, 2>;

/// Sparse polynomial in two variables with integer (possibly negative)
/// exponents. Zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exponent2, Rational>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(VarNames vars) : vars_(std::move(vars)) {}
  LaurentPoly2(VarNames vars, Terms terms);

  static LaurentPoly2 constant(const Rational& c, VarNames vars);
  static LaurentPoly2 monomial(const Rational& c, int i, int j, VarNames vars);
  /// Embeds p(first) (var = 0) or p(second) (var = 1).
  static LaurentPoly2 from_unipoly(const UniPoly& p, int var, VarNames vars);

  const VarNames& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int i, int j) const;

  /// Smallest exponent of variable `var` over all terms; 0 for the zero polynomial.
  int min_exponent(int var) const;
  int max_exponent(int var) const;
  int min_total_degree() const;
  bool is_polynomial() const;

  LaurentPoly2 derivative(int var) const;
  /// Multiplies by u^i v^j.
  LaurentPoly2 shifted(int i, int j) const;
  /// Terms whose exponent of `var` equals e, with that variable removed,
  /// returned as a polynomial in the other variable. Throws InvalidInput if
  /// the other variable carries a negative exponent in that slice.
  UniPoly slice(int var, int e) const;
  /// Ring homomorphism determined by monomial images of the two variables.
  LaurentPoly2 substitute(const Monomial2& image_first, const Monomial2& image_second,
                          VarNames target_vars) const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Rational& c);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Rational& c) { return a *= c; }
  friend LaurentPoly2 operator*(const Rational& c, LaurentPoly2 a) { return a *= c; }
  /// Equality of terms; variable labels are presentation only.
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

  /// Human-readable, highest total degree first.
  std::string to_string() const;

 private:
  void add_term(const Exponent2& e, const Rational& c);
  VarNames vars_{"x", "y"};
  Terms terms_;
};

/// Exact multivariate division of polynomials (non-negative exponents) by
/// lexicographic long division. Throws InternalConsistency if g does not
/// divide f, InvalidInput if g = 0.
LaurentPoly2 exact_divide(const LaurentPoly2& f, const LaurentPoly2& g);

/// Product of a list of factors.
LaurentPoly2 product(const std::vector<LaurentPoly2>& factors, const VarNames& vars);

}  // namespace nqh
