#pragma once

#include <vector>

#include "multconj/betti.hpp"
#include "multconj/integer.hpp"
#include "multconj/oracle.hpp"

namespace multconj {

/// Degree matrix of a codimension-2 Cohen-Macaulay ideal, given by its main
/// diagonal a_1..a_t and superdiagonal b_1..b_t. The remaining t x (t+1)
/// entries are determined by these 2t numbers.
///
/// Validity: a_i >= 1, b_i >= a_i, and b_i >= a_{i+1} for i < t. These three
/// clauses are equivalent to entries increasing to the right and upwards.
class DegreeMatrixCM2 {
 public:
  /// Throws InputError (length mismatch or empty), InvalidDiagonal or
  /// NotMonotone.
  static DegreeMatrixCM2 validate(std::vector<Degree> a, std::vector<Degree> b);

  std::size_t t() const { return a_.size(); }
  const std::vector<Degree>& a() const { return a_; }
  const std::vector<Degree>& b() const { return b_; }

  friend bool operator==(const DegreeMatrixCM2&, const DegreeMatrixCM2&) = default;
  friend auto operator<=>(const DegreeMatrixCM2&, const DegreeMatrixCM2&) = default;

 private:
  DegreeMatrixCM2(std::vector<Degree> a, std::vector<Degree> b)
      : a_(std::move(a)), b_(std::move(b)) {}

  std::vector<Degree> a_;
  std::vector<Degree> b_;
};

struct Cm2Shifts {
  Degree m1, m2, M1, M2;

  friend bool operator==(const Cm2Shifts&, const Cm2Shifts&) = default;
};

/// Generator degrees e_1 <= ... <= e_m, syzygy degrees f_1 <= ... <= f_{m-1},
/// u_i = f_i - e_i and v_i = f_i - e_{i+1}.
struct UVData {
  std::size_t m = 0;
  std::vector<Degree> e;
  std::vector<Degree> f;
  std::vector<Degree> u;
  std::vector<Degree> v;
};

struct Cm2Extension {
  DegreeMatrixCM2 matrix;
  Cm2Shifts before;
  Cm2Shifts after;
  Integer e_before;
  /// e + m_1' b, checked against the u/v formula on the extended matrix.
  Integer e_after;
};

Cm2Shifts shifts(const DegreeMatrixCM2& A);

/// Shifts as a two-step summary (m_1, m_2) / (M_1, M_2).
ShiftSummary shift_summary(const DegreeMatrixCM2& A);

/// Full t x (t+1) grid, row-major. Entry (i, j) = f_i - e_j with the
/// diagonal equal to a and the superdiagonal equal to b.
std::vector<std::vector<Degree>> full_matrix(const DegreeMatrixCM2& A);

/// Degrees a_1+..+a_j + b_{j+1}+..+b_t for j = 0..t, in that order.
std::vector<Degree> generator_degrees(const DegreeMatrixCM2& A);
/// Degrees a_1+..+a_j + b_j+..+b_t for j = 1..t, in that order.
std::vector<Degree> syzygy_degrees(const DegreeMatrixCM2& A);

/// Sorted degrees and u/v lists. Throws InternalMismatch if the sign
/// constraints or the sum identities for e_1, e_m, f_1, f_{m-1} fail.
UVData uv_data(const DegreeMatrixCM2& A);

/// sum u_i (v_i + ... + v_{m-1}); the dual form sum v_i (u_1 + ... + u_i)
/// is evaluated too and must agree (InternalMismatch otherwise).
Integer multiplicity_uv(const DegreeMatrixCM2& A);

/// Both Herzog-Srinivasan identities on uv_data(A).
bool hs_identities(const DegreeMatrixCM2& A);

/// Hilbert-Burch resolution: p = c = 2.
BettiTable betti_table(const DegreeMatrixCM2& A);

/// Monomial ideal (x^{a_1+..+a_j} y^{b_{j+1}+..+b_t} : j = 0..t) with degree
/// matrix A.
MonomialStaircase witness_monomial_ideal(const DegreeMatrixCM2& A);

/// Appends the row (a, b): basic double link of the ideal by a complete
/// intersection. Throws NotMonotone unless b >= a and b_t >= a; throws
/// InternalMismatch if the shift deltas or the multiplicity recursion fail.
Cm2Extension extend(const DegreeMatrixCM2& A, Degree a, Degree b);

}  // namespace multconj
