#pragma once

#include <compare>
#include <string>
#include <vector>

namespace nqh {

/// Which chart overlap a cocycle coordinate is read from.
enum class Component { V2V4 = 24, V3V4 = 34 };

std::string to_string(Component c);

/// A monomial x4^i y4^j of the cohomology basis, with its level and overlap.
struct BasisMonomial {
  int i = 0;
  int j = 0;
  Component component = Component::V2V4;
  int level = 1;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

enum class Family { A, B };

/// Index (family, k, i) of a normal-form parameter a_{k,i} or b_{k,i}.
struct ParameterIndex {
  Family family = Family::A;
  int k = 1;
  int i = 1;
  friend auto operator<=>(const ParameterIndex&, const ParameterIndex&) = default;
};

std::string to_string(const ParameterIndex& p);

/// (M+N-2)(M+N-3)/2 + (M-1)(M-2)/2. Throws UnsupportedRange for M < 2 or N < 2.
int dimension(int M, int N);

/// True iff (i, j) lies in the basis region for (M, N).
bool in_basis_region(int M, int N, int i, int j);

/// Brute-force scan of the basis region, ordered by level, then 24 before 34,
/// then in the display order of the level rows.
std::vector<BasisMonomial> enumerate_basis(int M, int N);

/// Parameters in column order: by level k, a-family before b-family, i increasing.
std::vector<ParameterIndex> parameter_indices(int M, int N);

/// Highest level of the block structure, max(1, N + 2M - 5).
int max_level(int M, int N);

/// Strict integer part ]x] for x = num/2: the m with m < x <= m + 1.
int strict_floor_half(int num);

/// q_k = ](k - 1 + (N - 1))/2] + M - k, the block size at levels k >= N.
int level_q(int M, int N, int k);

/// Row labels of the diagonal block A_k, in display order.
std::vector<BasisMonomial> level_rows(int M, int N, int k);

/// Columns of A_k: the parameters with that level, in column order.
std::vector<ParameterIndex> level_columns(int M, int N, int k);

}  // namespace nqh
