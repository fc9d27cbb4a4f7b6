#pragma once

#include <string>

#include "multconj/betti.hpp"
#include "multconj/cm2.hpp"
#include "multconj/gor3.hpp"
#include "multconj/integer.hpp"

namespace multconj {

/// One inequality `lhs <= rhs` after multiplying through by `denominator`.
/// For a lower bound on e, lhs is the cleared bound and rhs is
/// denominator * e; for an upper bound the roles swap.
struct BoundVerdict {
  std::string name;
  Integer lhs;
  Integer rhs;
  int denominator = 1;
  bool holds = false;
  bool sharp = false;
};

BoundVerdict make_verdict(std::string name, Integer lhs, Integer rhs, int denominator);

struct BoundPair {
  BoundVerdict lower;
  BoundVerdict upper;
};

/// prod m_i / p! <= e <= prod M_i / p!, cleared by p!.
BoundPair hhs_bounds(const ShiftSummary& shifts, int codim, const Integer& e);

/// Codimension-2 refinement, cleared by 2:
///   2e >= m_1 m_2 + (M_2 - M_1)(M_2 - m_2 + M_1 - m_1)
///   2e <= M_1 M_2 - (m_2 - m_1)(M_2 - m_2 + M_1 - m_1)
BoundPair cm2_bounds(const Cm2Shifts& s, const Integer& e);

/// Codimension-3 Gorenstein refinement:
///   6e  >= m_1 m_2 m_3 + (M_3 - M_2)^2 (M_2 - m_2 + M_1 - m_1)
///   12e <= 2 M_1 M_2 M_3 - M_3 (M_2 - m_2 + M_1 - m_1)
/// The equivalent forms m_1 m_2 m_3 + 2 m_1^2 (m_3 - m_1 - m_2) and
/// 2 M_1 M_2 M_3 - 2 M_3 (M_1 + M_2 - M_3) are evaluated as well; a
/// mismatch throws InternalMismatch.
BoundPair gor3_bounds(const Gor3Shifts& s, const Integer& e);

/// Upper bound 2e <= M_1 M_2 - 2(M_1 - m_1) - 2(M_2 - m_2) together with the
/// two sufficient conditions offered for it: every entry of the degree matrix
/// is at least 2, or (t >= 2 and a_1 - 2 d + 1 >= 0) where d is the entry
/// just below a_1. Reported, never enforced.
struct EntryBoundResult {
  bool all_entries_at_least_two = false;
  bool corner_condition = false;
  Degree corner_value = 0;  // a_1 - 2d + 1, 0 when t = 1
  BoundVerdict bound;

  bool hypothesis() const { return all_entries_at_least_two || corner_condition; }
};

EntryBoundResult entry_bound(const DegreeMatrixCM2& A, const Integer& e);

/// Srinivasan's quasi-pure Gorenstein bounds, cleared by 6:
///   m_1 M_2 M_3 <= 6e <= M_1 m_2 m_3.
struct SrinivasanResult {
  BoundVerdict lower;
  BoundVerdict upper;
  bool quasi_pure = false;
};

SrinivasanResult srinivasan_bounds(const ShiftSummary& shifts, const Integer& e);

struct Sharpness {
  bool lower_sharp = false;
  bool upper_sharp = false;
  bool pure = false;
};

/// Throws CharacterizationViolated unless lower_sharp, upper_sharp and pure
/// all agree.
Sharpness sharpness(const ShiftSummary& shifts, int codim, const Integer& e);

}  // namespace multconj
