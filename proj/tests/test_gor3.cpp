#include <doctest.h>

#include <algorithm>

#include "multconj/error.hpp"
#include "multconj/gor3.hpp"
#include "multconj/sweep.hpp"
#include "oracles.hpp"

using namespace multconj;

namespace {

DegreeMatrixGor3 G(std::vector<Degree> a, std::vector<Degree> b, Degree d) {
  return DegreeMatrixGor3::validate(std::move(a), std::move(b), d);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(G({2}, {2}, 5).d() == 5);
  CHECK(G({1}, {1}, 1).t() == 1);
  CHECK_THROWS_AS(G({2}, {2}, 1), CenterTooSmall);
  CHECK_THROWS_AS(G({1, 2}, {1, 2}, 3), NotMonotone);
}

TEST_CASE("shifts") {
  CHECK(shifts(G({2}, {2}, 5)) == Gor3Shifts{2, 4, 9, 5, 7, 9});
  CHECK(shifts(G({1, 1}, {1, 1}, 1)) == Gor3Shifts{2, 3, 5, 2, 3, 5});
  CHECK(shifts(G({1, 1}, {2, 1}, 1)) == Gor3Shifts{2, 3, 7, 4, 5, 7});
}

TEST_CASE("multiplicity_pfaffian") {
  CHECK(multiplicity_pfaffian(G({2}, {2}, 5)) == 20);
  CHECK(multiplicity_pfaffian(G({1}, {1}, 1)) == 1);
  CHECK(multiplicity_pfaffian(G({1, 1}, {2, 1}, 1)) == 12);
  CHECK(multiplicity_pfaffian(G({1, 1}, {1, 2}, 1)) == 13);
}

TEST_CASE("betti_table") {
  CHECK(betti_table(G({1, 1}, {1, 1}, 1)) == BettiTable(3, {{{2, 5}}, {{3, 5}}, {{5, 1}}}));
  CHECK(betti_table(G({1, 1}, {2, 1}, 1)) ==
        BettiTable::from_shifts(3, {{2, 2, 3, 3, 4}, {5, 5, 4, 4, 3}, {7}}));
  CHECK(betti_table(G({1}, {1}, 1)) == BettiTable(3, {{{1, 3}}, {{2, 3}}, {{3, 1}}}));
  // Complete intersection of type (a, b, d + b - a).
  CHECK(betti_table(G({2}, {2}, 5)) == BettiTable::from_shifts(3, {{2, 2, 5}, {4, 7, 7}, {9}}));
}

TEST_CASE("linkage") {
  CHECK(linkage_check(G({1, 1}, {2, 1}, 1)) == 12);
  CHECK(linkage_check(G({1, 1}, {1, 1}, 1)) == 5);
  CHECK(linkage_check(G({1}, {1}, 1)) == 1);
}

TEST_CASE("extend") {
  auto x = extend(G({1}, {1}, 1), 1, 1);
  CHECK(x.e_before == 1);
  CHECK(x.e_after == 5);
  CHECK(x.matrix == G({1, 1}, {1, 1}, 1));
  x = extend(G({1}, {1}, 1), 1, 2);
  CHECK(x.e_after == 13);
  CHECK_THROWS_AS(extend(G({2}, {2}, 5), 3, 3), NotMonotone);
}

TEST_CASE("routes, self-duality and grid shape over a range") {
  for_each_gor3(3, 4, [](const DegreeMatrixGor3& g) {
    const Integer e = multiplicity_pfaffian(g);
    const auto table = betti_table(g);
    CHECK(e == multiplicity(table));
    CHECK(e == oracles::multiplicity_by_moment(table));
    CHECK(e == linkage_multiplicity(g));

    const auto s = shifts(g);
    CHECK(shift_summary(table) == ShiftSummary{{s.m1, s.m2, s.m3}, {s.M1, s.M2, s.M3}});

    std::vector<Degree> alpha, beta;
    for (const auto& [shift, rank] : table.step(1))
      for (Integer k = 0; k < rank; ++k) alpha.push_back(s.m3 - shift);
    for (const auto& [shift, rank] : table.step(2))
      for (Integer k = 0; k < rank; ++k) beta.push_back(shift);
    std::sort(alpha.begin(), alpha.end());
    CHECK(alpha == beta);
    CHECK(alpha.size() == 2 * g.t() + 1);
    for (Degree x : generator_degrees(g)) {
      CHECK(x > 0);
      CHECK(x < s.m3);
    }

    const auto grid = degree_grid(g);
    const std::size_t n = grid.size();
    const auto base = full_matrix(g.base());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(grid[i][j] == grid[n - 1 - j][n - 1 - i]);
    CHECK(grid[g.t()][g.t()] == g.d());
    for (std::size_t i = 0; i < g.t(); ++i)
      for (std::size_t j = 0; j <= g.t(); ++j) CHECK(grid[g.t() + 1 + i][g.t() + j] == base[i][j]);
  });
}
