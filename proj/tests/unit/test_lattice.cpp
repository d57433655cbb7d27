#include <algorithm>
#include <set>

#include "doctest.h"
#include "nqh/error.hpp"
#include "nqh/lattice.hpp"

using namespace nqh;

namespace {

std::set<std::pair<int, int>> points(const std::vector<BasisMonomial>& v) {
  std::set<std::pair<int, int>> out;
  for (const auto& b : v) out.insert({b.i, b.j});
  return out;
}

}  // namespace

TEST_CASE("dimension") {
  CHECK(dimension(3, 3) == 7);
  CHECK(dimension(2, 2) == 1);
  CHECK(dimension(6, 6) == 55);
  CHECK(dimension(4, 3) == 13);
  CHECK_THROWS_AS(dimension(1, 3), UnsupportedRange);
  CHECK_THROWS_AS(dimension(3, 1), UnsupportedRange);
}

TEST_CASE("basis at (3,3) and (2,2)") {
  auto b = enumerate_basis(3, 3);
  CHECK(points(b) == std::set<std::pair<int, int>>{{0, -1}, {0, 0}, {-1, 0}, {1, 1}, {0, 1}, {1, 2}, {2, 3}});
  CHECK(b.size() == 7);
  auto b22 = enumerate_basis(2, 2);
  REQUIRE(b22.size() == 1);
  CHECK(b22[0].i == 0);
  CHECK(b22[0].j == 0);
}

TEST_CASE("basis, parameters and dimension agree for 2 <= M, N <= 12") {
  for (int M = 2; M <= 12; ++M) {
    for (int N = 2; N <= 12; ++N) {
      auto basis = enumerate_basis(M, N);
      CHECK(static_cast<int>(basis.size()) == dimension(M, N));
      CHECK(static_cast<int>(parameter_indices(M, N).size()) == dimension(M, N));
      for (const auto& b : basis) {
        CHECK(in_basis_region(M, N, b.i, b.j));
        CHECK((b.i >= 0 || b.j >= 0));
      }
    }
  }
}

TEST_CASE("parameter indices") {
  auto p = parameter_indices(3, 3);
  std::vector<ParameterIndex> want{{Family::A, 1, 1}, {Family::A, 1, 2}, {Family::B, 1, 1}, {Family::A, 2, 2},
                                   {Family::B, 2, 1}, {Family::B, 3, 1}, {Family::B, 4, 1}};
  CHECK(p == want);
  auto p22 = parameter_indices(2, 2);
  REQUIRE(p22.size() == 1);
  CHECK(to_string(p22[0]) == "a_1,1");
  auto p43 = parameter_indices(4, 3);
  CHECK(std::count_if(p43.begin(), p43.end(), [](auto& x) { return x.family == Family::A; }) == 3);
  CHECK(std::count_if(p43.begin(), p43.end(), [](auto& x) { return x.family == Family::B; }) == 10);
  for (const auto& idx : parameter_indices(5, 4)) {
    if (idx.family == Family::A) {
      CHECK((idx.i >= 1 && idx.i <= 3 && idx.k >= 1 && idx.k <= idx.i));
    } else {
      CHECK((idx.i >= 1 && idx.i <= 3 && idx.k >= 1 && idx.k <= 4 - 1 + 2 * idx.i));
    }
  }
}

TEST_CASE("strict integer part") {
  CHECK(strict_floor_half(4) == 1);  // ]2] = 1
  CHECK(strict_floor_half(5) == 2);  // ]5/2] = 2
  CHECK(strict_floor_half(1) == 0);
  CHECK(strict_floor_half(0) == -1);
  CHECK(level_q(3, 3, 3) == 1);
  CHECK(level_q(3, 3, 4) == 1);
}

TEST_CASE("level rows at (3,3)") {
  auto l1 = level_rows(3, 3, 1);
  REQUIRE(l1.size() == 3);
  CHECK(l1[0] == BasisMonomial{0, -1, Component::V2V4, 1});
  CHECK(l1[1] == BasisMonomial{0, 0, Component::V2V4, 1});
  CHECK(l1[2] == BasisMonomial{-1, 0, Component::V3V4, 1});
  auto l3 = level_rows(3, 3, 3);
  REQUIRE(l3.size() == 1);
  CHECK(l3[0] == BasisMonomial{1, 2, Component::V3V4, 3});
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= 4; ++k) sizes.push_back(level_rows(3, 3, k).size());
  CHECK(sizes == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK_THROWS_AS(level_rows(3, 3, 5), UnsupportedRange);
  CHECK_THROWS_AS(level_rows(3, 3, 0), UnsupportedRange);
}

TEST_CASE("levels partition the basis and match the column counts") {
  for (int M = 2; M <= 8; ++M) {
    for (int N = 2; N <= 8; ++N) {
      std::vector<BasisMonomial> all;
      for (int k = 1; k <= max_level(M, N); ++k) {
        auto rows = level_rows(M, N, k);
        CHECK(rows.size() == level_columns(M, N, k).size());
        std::size_t want = k == 1 ? static_cast<std::size_t>(N - 1 + M - 2)
                           : k <= N - 1 ? static_cast<std::size_t>(N - k + M - 2)
                                        : static_cast<std::size_t>(level_q(M, N, k));
        CHECK(rows.size() == want);
        for (const auto& r : rows) CHECK(r.level == k);
        all.insert(all.end(), rows.begin(), rows.end());
      }
      CHECK(all == enumerate_basis(M, N));
      CHECK(points(all).size() == all.size());
    }
  }
}
