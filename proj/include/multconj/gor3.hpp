#pragma once

#include <vector>

#include "multconj/betti.hpp"
#include "multconj/cm2.hpp"
#include "multconj/integer.hpp"

namespace multconj {

/// Degree matrix of the skew-symmetric presentation of a codimension-3
/// Gorenstein ideal with 2t+1 generators. It is symmetric about the
/// anti-diagonal, carries the codimension-2 block `base` in its lower right
/// corner and the center entry d.
class DegreeMatrixGor3 {
 public:
  /// Throws the DegreeMatrixCM2 errors, or CenterTooSmall when d < a_1.
  static DegreeMatrixGor3 validate(std::vector<Degree> a, std::vector<Degree> b, Degree d);

  const DegreeMatrixCM2& base() const { return base_; }
  Degree d() const { return d_; }
  std::size_t t() const { return base_.t(); }

  friend bool operator==(const DegreeMatrixGor3&, const DegreeMatrixGor3&) = default;
  friend auto operator<=>(const DegreeMatrixGor3&, const DegreeMatrixGor3&) = default;

 private:
  DegreeMatrixGor3(DegreeMatrixCM2 base, Degree d) : base_(std::move(base)), d_(d) {}

  DegreeMatrixCM2 base_;
  Degree d_;
};

struct Gor3Shifts {
  Degree m1, m2, m3, M1, M2, M3;

  friend bool operator==(const Gor3Shifts&, const Gor3Shifts&) = default;
};

struct Gor3Extension {
  DegreeMatrixGor3 matrix;
  Gor3Shifts before;
  Gor3Shifts after;
  Integer e_before;
  Integer e_after;
};

/// m_1 = sum a, m_2 = m_1 + b_t, m_3 = d + 2 sum b and, by self-duality,
/// M_1 = m_3 - m_2, M_2 = m_3 - m_1, M_3 = m_3.
Gor3Shifts shifts(const DegreeMatrixGor3& G);
ShiftSummary shift_summary(const DegreeMatrixGor3& G);

/// Generator degrees alpha_1 <= ... <= alpha_{2t+1}: the generators of the
/// codimension-2 ideal J = base together with m_3 minus its syzygies.
std::vector<Degree> generator_degrees(const DegreeMatrixGor3& G);

/// (2t+1) x (2t+1) grid with entry (i, j) = m_3 - alpha_i - alpha_{2t+2-j}.
std::vector<std::vector<Degree>> degree_grid(const DegreeMatrixGor3& G);

/// Closed form from the entries of the skew-symmetric matrix:
/// sum_j b_j (a_1+..+a_j) (d + sum_{i<j}(2 b_i - a_i) + b_j - a_j).
Integer multiplicity_pfaffian(const DegreeMatrixGor3& G);

/// Self-dual resolution 0 -> R(-m_3) -> (+) R(-beta_i) -> (+) R(-alpha_i),
/// beta_i = m_3 - alpha_i.
BettiTable betti_table(const DegreeMatrixGor3& G);

/// (m_1 + M_2 - 4) e(R/J) - (2g - 2) with J = base read as a curve of genus
/// g: the multiplicity obtained by linking J to a residual through a
/// complete intersection of type (m_1, M_2).
Integer linkage_multiplicity(const DegreeMatrixGor3& G);

/// linkage_multiplicity, throwing InternalMismatch if it differs from
/// multiplicity_pfaffian.
Integer linkage_check(const DegreeMatrixGor3& G);

/// Appends (a, b) to the base block, keeping d. Throws NotMonotone unless
/// b >= a and b_t >= a; InternalMismatch if any of the six shift deltas, the
/// multiplicity recursion e + b(m_1 + a)(M_2 + b - a), or the genus
/// recursion of the underlying basic double link fail.
Gor3Extension extend(const DegreeMatrixGor3& G, Degree a, Degree b);

}  // namespace multconj
