#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "multconj/integer.hpp"

namespace multconj {

/// Graded Betti numbers of a minimal free resolution of R/I.
///
/// Step 0 (the ring itself, rank 1 in degree 0) is implicit. Steps are
/// numbered 1..p; each step maps shift -> rank. Entries with the same
/// (step, shift) are aggregated on insertion. The table never cancels
/// consecutive-step terms.
class BettiTable {
 public:
  /// Largest shift accepted; the K-polynomial is stored densely.
  static constexpr Degree kMaxShift = Degree{1} << 22;

  using Step = std::map<Degree, Integer>;

  /// Throws InputError unless every step is nonempty, every shift is in
  /// [1, kMaxShift], every rank is >= 1 and 1 <= codim <= p.
  BettiTable(int codim, std::vector<Step> steps);

  /// Builds a table from per-step shift lists; repeated shifts become ranks.
  static BettiTable from_shifts(int codim,
                                const std::vector<std::vector<Degree>>& shifts);

  int codim() const { return codim_; }
  int projective_dimension() const { return static_cast<int>(steps_.size()); }
  const std::vector<Step>& steps() const { return steps_; }
  /// Step i, 1-based.
  const Step& step(int i) const { return steps_.at(static_cast<std::size_t>(i - 1)); }
  Degree max_shift() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int codim_;
  std::vector<Step> steps_;
};

/// Integer polynomial in s, coefficient i at index i.
struct KPolynomial {
  std::vector<Integer> coeffs;

  Integer at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Integer{0}; }
  Integer evaluate_at_one() const;
  /// Largest index with a nonzero coefficient, -1 for the zero polynomial.
  long degree() const;

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

struct ShiftSummary {
  std::vector<Degree> min;  // m_1..m_p
  std::vector<Degree> max;  // M_1..M_p

  friend bool operator==(const ShiftSummary&, const ShiftSummary&) = default;
};

struct Purity {
  bool pure = false;
  bool quasi_pure = false;
};

/// Sum_i (-1)^i Sum_j beta_{i,j} s^j including the constant 1 of step 0.
KPolynomial k_polynomial(const BettiTable& table);

/// Exact quotient K(s) / (1-s)^power; throws DivisionError when inexact.
KPolynomial divide_by_one_minus_s(const KPolynomial& k, int power);

/// Hilbert-series numerator after removing (1-s)^codim.
KPolynomial reduced_numerator(const BettiTable& table);

/// e(R/I) = Q(1) where K(s) = (1-s)^c Q(s).
Integer multiplicity(const BettiTable& table);

ShiftSummary shift_summary(const BettiTable& table);

/// pure: m_i = M_i at every step; quasi-pure: m_i >= M_{i-1} for i >= 2.
Purity purity(const BettiTable& table);
Purity purity(const ShiftSummary& shifts);

/// (prod d_i) / p! for a pure Cohen-Macaulay table, cross-checked against
/// multiplicity(). Throws NotPure, DivisibilityError, InputError (codim != p)
/// or InternalMismatch.
Integer huneke_miller(const BettiTable& table);

/// Arithmetic genus of the quotient read as a curve: with
/// Q(s) = K(s)/(1-s)^c = sum q_i s^i, the Hilbert polynomial of Q/(1-s)^2 is
/// e*t + 1 - g, so g = 1 + sum q_i (i - 1).
Integer genus_dim2(const BettiTable& table);

}  // namespace multconj
