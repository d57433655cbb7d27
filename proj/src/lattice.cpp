#include "nqh/lattice.hpp"

#include <algorithm>

#include "nqh/error.hpp"

namespace nqh {

std::string to_string(Component c) { return c == Component::V2V4 ? "24" : "34"; }

std::string to_string(const ParameterIndex& p) {
  return std::string(p.family == Family::A ? "a" : "b") + "_" + std::to_string(p.k) + "," + std::to_string(p.i);
}

namespace {

void require_range(int M, int N) {
  if (M < 2 || N < 2) {
    throw UnsupportedRange("need M >= 2 and N >= 2, got M=" + std::to_string(M) + " N=" + std::to_string(N));
  }
}

// Level and overlap of a basis point: on or below the diagonal j <= i the
// point belongs to the a-side rows read on V2 n V4, above it to the b-side
// rows read on V3 n V4.
BasisMonomial classify(int i, int j) {
  if (j <= i) return {i, j, Component::V2V4, i + 1};
  return {i, j, Component::V3V4, j + 1};
}

}  // namespace

int dimension(int M, int N) {
  require_range(M, N);
  return (M + N - 2) * (M + N - 3) / 2 + (M - 1) * (M - 2) / 2;
}

bool in_basis_region(int M, int N, int i, int j) {
  if (i < 0 && j < 0) return false;
  return j - 2 * i + (N - 1) > 0 && j - i - (M - 1) < 0;
}

std::vector<BasisMonomial> enumerate_basis(int M, int N) {
  require_range(M, N);
  // The region is bounded: i >= 0 forces j < i + M - 1 and j > 2i - N + 1,
  // so i < M + N - 2; i < 0 forces 0 <= j < i + M - 1.
  const int bound = 2 * (M + N) + 4;
  std::vector<BasisMonomial> out;
  for (int i = -bound; i <= bound; ++i) {
    for (int j = -bound; j <= bound; ++j) {
      if (in_basis_region(M, N, i, j)) out.push_back(classify(i, j));
    }
  }
  std::sort(out.begin(), out.end(), [](const BasisMonomial& l, const BasisMonomial& r) {
    if (l.level != r.level) return l.level < r.level;
    if (l.component != r.component) return l.component == Component::V2V4;
    if (l.component == Component::V2V4) return l.j < r.j;
    return l.i > r.i;
  });
  return out;
}

std::vector<ParameterIndex> parameter_indices(int M, int N) {
  require_range(M, N);
  std::vector<ParameterIndex> out;
  for (int i = 1; i <= N - 1; ++i) {
    for (int k = 1; k <= i; ++k) out.push_back({Family::A, k, i});
  }
  for (int i = 1; i <= M - 2; ++i) {
    for (int k = 1; k <= N - 1 + 2 * i; ++k) out.push_back({Family::B, k, i});
  }
  std::sort(out.begin(), out.end(), [](const ParameterIndex& l, const ParameterIndex& r) {
    if (l.k != r.k) return l.k < r.k;
    if (l.family != r.family) return l.family == Family::A;
    return l.i < r.i;
  });
  return out;
}

int max_level(int M, int N) {
  require_range(M, N);
  return std::max(1, N + 2 * M - 5);
}

int strict_floor_half(int num) {
  // m < num/2 <= m + 1  <=>  m = ceil(num/2) - 1.
  int ceil_half = num >= 0 ? (num + 1) / 2 : -((-num) / 2);
  return ceil_half - 1;
}

int level_q(int M, int N, int k) { return strict_floor_half(k - 1 + (N - 1)) + M - k; }

std::vector<BasisMonomial> level_rows(int M, int N, int k) {
  const int top = max_level(M, N);
  if (k < 1 || k > top) {
    throw UnsupportedRange("level " + std::to_string(k) + " outside 1.." + std::to_string(top));
  }
  std::vector<BasisMonomial> rows;
  if (k == 1) {
    for (int j = -(N - 2); j <= 0; ++j) rows.push_back({0, j, Component::V2V4, 1});
    for (int i = -1; i >= -(M - 2); --i) rows.push_back({i, 0, Component::V3V4, 1});
  } else if (k <= N - 1) {
    for (int j = 2 * k - N; j <= k - 1; ++j) rows.push_back({k - 1, j, Component::V2V4, k});
    for (int i = k - 2; i >= -(M - k - 1); --i) rows.push_back({i, k - 1, Component::V3V4, k});
  } else {
    const int q = level_q(M, N, k);
    for (int i = k + q - M; i >= k + 1 - M; --i) rows.push_back({i, k - 1, Component::V3V4, k});
  }
  return rows;
}

std::vector<ParameterIndex> level_columns(int M, int N, int k) {
  std::vector<ParameterIndex> out;
  for (const auto& p : parameter_indices(M, N)) {
    if (p.k == k) out.push_back(p);
  }
  return out;
}

}  // namespace nqh
