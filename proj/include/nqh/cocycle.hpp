#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "nqh/blowup.hpp"
#include "nqh/lattice.hpp"
#include "nqh/matrix.hpp"
#include "nqh/normal_form.hpp"
#include "nqh/series.hpp"

namespace nqh {

/// Bezout data of a univariate F against its derivative:
/// G = gcd(F, F') monic, S = F / G, and G = W F' + Z F with deg W < deg S.
struct BezoutData {
  UniPoly F;
  UniPoly G;
  UniPoly S;
  UniPoly W;
  UniPoly Z;
};

/// Throws InvalidInput for constant F.
BezoutData bezout_cofactors(const UniPoly& F);

/// Leading-order solution of dN~/dp = alpha dN~/du + beta dN~/dv in one chart
/// near the divisor component met by one overlap.
///
/// Writing N~ = d^e (F(t) + O(d)) and dN~/dp = d^e (F_p(t) + O(d)), with d the
/// divisor variable and t the other one, the field is
///     tangential(t) d/dt + d * normal(t) d/dd,
/// where F_p = tangential F' + e normal F holds as a polynomial identity.
struct LocalSolution {
  Chart chart = Chart::V4;
  Component side = Component::V3V4;
  ParameterIndex direction;
  int divisor_var = 0;
  int exponent = 0;
  UniPoly F;
  UniPoly F_p;
  BezoutData bezout;
  UniPoly tangential;
  UniPoly normal;
  VectorField field;

  /// F_p == tangential F' + exponent * normal * F.
  bool restricted_identity_holds() const;
};

/// Laurent coefficients of the cocycle ratio Phi = X_t / Theta0_t on one
/// overlap, where X = (other chart solution, moved to V4) - (V4 solution) and
/// t is the V4 variable that does not vanish on the divisor.
struct CocycleExpansion {
  Component side = Component::V3V4;
  ParameterIndex direction;
  int divisor_var = 1;                    // in V4: 0 = x4, 1 = y4
  std::vector<TruncatedLaurent> by_power;  // by_power[s]: coefficient of divisor^s, a series in t

  /// Coefficient of x4^i y4^j. Negative divisor powers are zero; powers past
  /// the computed order throw InternalConsistency.
  Rational coefficient(int i, int j) const;
};

/// Exact matrix of the tangent map on the cohomology basis.
struct CocycleMatrix {
  struct Block {
    int level = 1;
    std::size_t row0 = 0, nrows = 0, col0 = 0, ncols = 0;
  };
  int M = 0, N = 0;
  std::vector<BasisMonomial> rows;
  std::vector<ParameterIndex> cols;
  RationalMatrix entries;
  std::vector<Block> blocks;  // diagonal blocks, ordered by level
  bool restricted = false;    // M < 3 or N < 3

  RationalMatrix diagonal_block(int level) const;
  /// Zero above the diagonal blocks.
  bool is_block_lower_triangular() const;
};

struct EngineOptions {
  int truncation_margin = 2;
};

/// All cocycle computations for one parameter point; pullbacks, Theta_0,
/// local solutions and expansions are computed once and cached.
class CocycleEngine {
 public:
  explicit CocycleEngine(ParameterPoint p, EngineOptions options = {});
  ~CocycleEngine();
  CocycleEngine(CocycleEngine&&) noexcept;
  CocycleEngine& operator=(CocycleEngine&&) noexcept;

  const ParameterPoint& point() const;
  const PlanePoly& normal_form() const;
  const LaurentPoly2& chart_pullback(Chart c) const;
  const VectorField& theta0() const;

  /// chart must be V4 or the other chart of the overlap; direction must have level 1.
  const LocalSolution& local_solution(Component side, Chart chart, const ParameterIndex& direction) const;
  /// Level-1 expansion on the window needed for the full matrix.
  const CocycleExpansion& expansion(Component side, const ParameterIndex& direction) const;
  /// Expansion for a direction of any level built directly from the shifted
  /// fields x4^{k-1} y4^{2k-2} X (a) or x4^{k-1} y4^{k-1} Y (b) in each chart,
  /// without reading shifted coefficients. The window lists the monomials x4^i y4^j
  /// that must be readable from the result.
  CocycleExpansion direct_expansion(Component side, const ParameterIndex& direction,
                                    const std::vector<Exponent2>& window) const;

  Rational entry(const BasisMonomial& row, const ParameterIndex& col) const;
  CocycleMatrix level_matrix(int k) const;
  CocycleMatrix full_matrix() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Propagation monomial of a direction: (k-1, 2k-2) for a, (k-1, k-1) for b.
Exponent2 propagation_shift(const ParameterIndex& direction);

/// dN_p/d(parameter) from the product rule on the factor carrying it.
PlanePoly normal_form_parameter_derivative(const ParameterPoint& p, const ParameterIndex& idx);

LocalSolution local_solution(const ParameterPoint& p, Component side, Chart chart, const ParameterIndex& direction);
std::map<Exponent2, Rational> cocycle_coefficients(const ParameterPoint& p, const ParameterIndex& direction,
                                                   const std::vector<Exponent2>& window, Component side);
CocycleMatrix build_level_matrix(const ParameterPoint& p, int k);
CocycleMatrix full_matrix(const ParameterPoint& p);

/// dN~/da_{k,i} == x4^{k-1} y4^{2k-2} dN~/da_{1,i} on V4 (b: x4^{k-1} y4^{k-1}),
/// both sides obtained by differencing the expanded pullback.
bool verify_propagation(const ParameterPoint& p, const ParameterIndex& direction);

// ---------------------------------------------------------------------------
// Closed forms.

/// Global sign relating the constructed blocks to the closed forms under the
/// convention Theta_f = f_x d/dy - f_y d/dx. Determined at (3,3) and frozen.
inline constexpr int kClosedFormSign = 1;

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OracleOptions {
  /// Test hook: negate the closed-form M4 entries so the comparison must fail.
  bool flip_m4_sign = false;
};

/// prod_{r < s} (x_s - x_r), the determinant of the matrix (x_c^r).
Rational vandermonde(const std::vector<Rational>& nodes);

/// K~(-a_{1,i}) = (-1)^N a^{N-1} / prod_{j != i} a_j (1/a_j - 1/a_i).
Rational ktilde_closed_form(const ParameterPoint& p, int i);
/// U~(-1/b_{1,i}) by evaluating U = (P ^ P') / P' at the root -b_{1,i} of
/// P(y3) = y3 (y3 + 1) prod a_{1,j} prod (y3 + b_{1,j}), with P ^ P' = prod a_{1,j}.
Rational utilde_at_root(const ParameterPoint& p, int i);
/// 1 / ((2M+N) prod a_{1,j}).
Rational b0_closed_form(const ParameterPoint& p);
/// Entry (j, i) of M1 and of M4, 1-based.
Rational m1_entry_closed_form(const ParameterPoint& p, int j, int i);
Rational m4_entry_closed_form(const ParameterPoint& p, int j, int i);
Rational det_m1_closed_form(const ParameterPoint& p);
/// Minors at level k: columns a_{k,k..N-1} (2 <= k <= N-1), resp. b_{k,M-1-q_k..M-2} (k >= N).
Rational det_m1k_closed_form(const ParameterPoint& p, int k);
Rational det_m4k_closed_form(const ParameterPoint& p, int k);

/// The closed forms above throw InvalidParameters outside the parameter space.
std::vector<OracleCheck> closed_form_oracles(const CocycleEngine& engine, OracleOptions options = {});
std::vector<OracleCheck> closed_form_oracles(const ParameterPoint& p, OracleOptions options = {});

}  // namespace nqh
