#include "multconj/bounds.hpp"

#include "multconj/error.hpp"

namespace multconj {

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer product(const std::vector<Degree>& xs) {
  Integer p = 1;
  for (Degree x : xs) p *= x;
  return p;
}

}  // namespace

BoundVerdict make_verdict(std::string name, Integer lhs, Integer rhs, int denominator) {
  BoundVerdict v{std::move(name), std::move(lhs), std::move(rhs), denominator, false, false};
  v.holds = v.lhs <= v.rhs;
  v.sharp = v.lhs == v.rhs;
  return v;
}

BoundPair hhs_bounds(const ShiftSummary& shifts, int codim, const Integer& e) {
  const int k = static_cast<int>(factorial(codim));
  const Integer scaled = k * e;
  return {make_verdict("hhs_lower", product(shifts.min), scaled, k),
          make_verdict("hhs_upper", scaled, product(shifts.max), k)};
}

BoundPair cm2_bounds(const Cm2Shifts& s, const Integer& e) {
  const Integer spread = Integer(s.M2 - s.m2) + (s.M1 - s.m1);
  const Integer lower = Integer(s.m1) * s.m2 + Integer(s.M2 - s.M1) * spread;
  const Integer upper = Integer(s.M1) * s.M2 - Integer(s.m2 - s.m1) * spread;
  return {make_verdict("cm2_lower", lower, 2 * e, 2),
          make_verdict("cm2_upper", 2 * e, upper, 2)};
}

BoundPair gor3_bounds(const Gor3Shifts& s, const Integer& e) {
  const Integer spread = Integer(s.M2 - s.m2) + (s.M1 - s.m1);
  const Integer gap = s.M3 - s.M2;
  const Integer lower = Integer(s.m1) * s.m2 * s.m3 + gap * gap * spread;
  const Integer upper = 2 * Integer(s.M1) * s.M2 * s.M3 - Integer(s.M3) * spread;

  const Integer lower_alt =
      Integer(s.m1) * s.m2 * s.m3 + 2 * Integer(s.m1) * s.m1 * (s.m3 - s.m1 - s.m2);
  const Integer upper_alt =
      2 * Integer(s.M1) * s.M2 * s.M3 - 2 * Integer(s.M3) * (s.M1 + s.M2 - s.M3);
  if (lower != lower_alt || upper != upper_alt)
    throw InternalMismatch("Gorenstein bounds disagree with their equivalent forms");

  return {make_verdict("gor3_lower", lower, 6 * e, 6),
          make_verdict("gor3_upper", 12 * e, upper, 12)};
}

EntryBoundResult entry_bound(const DegreeMatrixCM2& A, const Integer& e) {
  EntryBoundResult r;
  const auto grid = full_matrix(A);
  r.all_entries_at_least_two = true;
  for (const auto& row : grid)
    for (Degree x : row)
      if (x < 2) r.all_entries_at_least_two = false;
  if (A.t() >= 2) {
    r.corner_value = A.a().front() - 2 * grid[1][0] + 1;
    r.corner_condition = r.corner_value >= 0;
  }
  const auto s = shifts(A);
  const Integer rhs = Integer(s.M1) * s.M2 - 2 * Integer(s.M1 - s.m1) - 2 * Integer(s.M2 - s.m2);
  r.bound = make_verdict("entry_bound", 2 * e, rhs, 2);
  return r;
}

SrinivasanResult srinivasan_bounds(const ShiftSummary& shifts, const Integer& e) {
  if (shifts.min.size() != 3 || shifts.max.size() != 3)
    throw InputError("Srinivasan bounds need three-step shifts");
  const auto& m = shifts.min;
  const auto& M = shifts.max;
  const Integer scaled = 6 * e;
  return {make_verdict("srinivasan_lower", Integer(m[0]) * M[1] * M[2], scaled, 6),
          make_verdict("srinivasan_upper", scaled, Integer(M[0]) * m[1] * m[2], 6),
          purity(shifts).quasi_pure};
}

Sharpness sharpness(const ShiftSummary& shifts, int codim, const Integer& e) {
  const Integer scaled = factorial(codim) * e;
  Sharpness s;
  s.lower_sharp = scaled == product(shifts.min);
  s.upper_sharp = scaled == product(shifts.max);
  s.pure = shifts.min == shifts.max;
  if (s.lower_sharp != s.upper_sharp || s.upper_sharp != s.pure)
    throw CharacterizationViolated("lower sharp = " + std::to_string(s.lower_sharp) +
                                   ", upper sharp = " + std::to_string(s.upper_sharp) +
                                   ", pure = " + std::to_string(s.pure));
  return s;
}

}  // namespace multconj
