#include <doctest.h>

#include "multconj/betti.hpp"
#include "multconj/error.hpp"
#include "oracles.hpp"

using namespace multconj;

namespace {

KPolynomial poly(std::vector<long> c) {
  KPolynomial k;
  for (long x : c) k.coeffs.push_back(x);
  return k;
}

BettiTable ci(std::vector<Degree> degrees) {
  // Koszul complex on forms of the given degrees (two or three of them).
  if (degrees.size() == 2)
    return BettiTable::from_shifts(2, {degrees, {degrees[0] + degrees[1]}});
  const Degree s = degrees[0] + degrees[1] + degrees[2];
  return BettiTable::from_shifts(
      3, {degrees, {s - degrees[0], s - degrees[1], s - degrees[2]}, {s}});
}

BettiTable gor3_table() {
  return BettiTable::from_shifts(3, {{2, 2, 3, 3, 4}, {3, 4, 4, 5, 5}, {7}});
}
BettiTable pure235() {
  return BettiTable::from_shifts(3, {{2, 2, 2, 2, 2}, {3, 3, 3, 3, 3}, {5}});
}

}  // namespace

TEST_CASE("table validation and aggregation") {
  auto t = BettiTable::from_shifts(2, {{2, 2, 3}, {3, 4}});
  CHECK(t.step(1).at(2) == 2);
  CHECK(t.step(1).at(3) == 1);
  CHECK(t.max_shift() == 4);

  CHECK_THROWS_AS(BettiTable(2, {{{1, 1}}}), InputError);  // codim > p
  CHECK_THROWS_AS(BettiTable(1, {{}}), InputError);
  CHECK_THROWS_AS(BettiTable(1, {{{0, 1}}}), InputError);
  CHECK_THROWS_AS(BettiTable(1, {{{2, 0}}}), InputError);
  CHECK_THROWS_AS(BettiTable(1, {{{BettiTable::kMaxShift + 1, 1}}}), InputError);
}

TEST_CASE("k_polynomial") {
  CHECK(k_polynomial(ci({2, 3})) == poly({1, 0, -1, -1, 0, 1}));
  CHECK(k_polynomial(gor3_table()) == poly({1, 0, -2, -1, 1, 2, 0, -1}));
  CHECK(k_polynomial(BettiTable::from_shifts(1, {{1}})) == poly({1, -1}));
  CHECK(k_polynomial(gor3_table()).evaluate_at_one() == 0);
  CHECK(k_polynomial(gor3_table()).degree() == 7);
}

TEST_CASE("division by powers of 1-s") {
  CHECK(divide_by_one_minus_s(poly({1, 0, -2, 0, 1}), 2) == poly({1, 2, 1}));
  CHECK_THROWS_AS(divide_by_one_minus_s(poly({1, 1}), 1), DivisionError);
  // Codimension 3 declared on a codimension-2 resolution.
  CHECK_THROWS_AS(multiplicity(BettiTable(3, {{{2, 1}, {3, 1}}, {{5, 1}}, {{6, 1}}})),
                  DivisionError);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(ci({2, 3})) == 6);
  CHECK(multiplicity(gor3_table()) == 12);
  CHECK(multiplicity(pure235()) == 5);
  CHECK(multiplicity(BettiTable::from_shifts(1, {{1}})) == 1);

  for (Degree x = 1; x <= 6; ++x)
    for (Degree y = x; y <= 6; ++y) {
      CHECK(multiplicity(ci({x, y})) == x * y);
      for (Degree z = y; z <= 6; ++z) {
        CHECK(multiplicity(ci({x, y, z})) == x * y * z);
        CHECK(oracles::multiplicity_by_moment(ci({x, y, z})) == x * y * z);
      }
    }
  CHECK(oracles::multiplicity_by_moment(gor3_table()) == 12);
}

TEST_CASE("shift_summary and purity") {
  auto s = shift_summary(ci({2, 3}));
  CHECK(s.min == std::vector<Degree>{2, 5});
  CHECK(s.max == std::vector<Degree>{3, 5});

  s = shift_summary(gor3_table());
  CHECK(s.min == std::vector<Degree>{2, 3, 7});
  CHECK(s.max == std::vector<Degree>{4, 5, 7});

  auto p = purity(pure235());
  CHECK(p.pure);
  CHECK(p.quasi_pure);
  p = purity(gor3_table());
  CHECK_FALSE(p.pure);
  CHECK_FALSE(p.quasi_pure);
  p = purity(ShiftSummary{{2, 4}, {3, 5}});
  CHECK_FALSE(p.pure);
  CHECK(p.quasi_pure);
}

TEST_CASE("huneke_miller") {
  CHECK(huneke_miller(pure235()) == 5);
  CHECK(huneke_miller(ci({1, 1})) == 1);
  CHECK(huneke_miller(BettiTable::from_shifts(2, {{2, 2}, {4}})) == 4);
  CHECK_THROWS_AS(huneke_miller(gor3_table()), NotPure);
  // Pure shifts 1, 2, 4 at p = 3: 8 is not divisible by 6.
  CHECK_THROWS_AS(huneke_miller(BettiTable::from_shifts(3, {{1}, {2}, {4}})),
                  DivisibilityError);
}

TEST_CASE("genus_dim2") {
  CHECK(genus_dim2(ci({1, 1})) == 0);
  CHECK(genus_dim2(ci({2, 2})) == 1);
  CHECK(genus_dim2(BettiTable::from_shifts(2, {{2, 2, 3}, {3, 4}})) == 1);
  // Plane curves of degree k: g = (k-1)(k-2)/2, here as a CI of type (1, k).
  for (Degree k = 1; k <= 8; ++k) CHECK(genus_dim2(ci({1, k})) == (k - 1) * (k - 2) / 2);
  // Complete intersections (x, y) in P^3: g = 1 + xy(x+y-4)/2.
  for (Degree x = 1; x <= 5; ++x)
    for (Degree y = x; y <= 5; ++y) CHECK(genus_dim2(ci({x, y})) == 1 + x * y * (x + y - 4) / 2);
}
