#pragma once

#include <vector>

#include "multconj/integer.hpp"

namespace multconj {

/// Exponent pair of a monomial x^x_exp y^y_exp.
struct Exponent {
  Degree x = 0;
  Degree y = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Minimal generators of an Artinian monomial ideal in two variables, sorted
/// with x strictly increasing and y strictly decreasing. The first generator
/// is a pure y-power and the last a pure x-power.
class MonomialStaircase {
 public:
  const std::vector<Exponent>& gens() const { return gens_; }

  friend bool operator==(const MonomialStaircase&, const MonomialStaircase&) = default;

 private:
  explicit MonomialStaircase(std::vector<Exponent> gens) : gens_(std::move(gens)) {}
  friend MonomialStaircase minimalize(std::vector<Exponent> gens);

  std::vector<Exponent> gens_;
};

/// Drops generators divisible by another one and sorts the rest. Throws
/// InputError on an empty list or negative exponent, NotArtinian when no
/// pure power of x or of y is present.
MonomialStaircase minimalize(std::vector<Exponent> gens);

/// Number of monomials outside the ideal, summed level by level in y.
Integer colength(const MonomialStaircase& staircase);

/// Same ideal with x and y exchanged.
MonomialStaircase transpose(const MonomialStaircase& staircase);

}  // namespace multconj
