#include "multconj/betti.hpp"

#include <algorithm>
#include <string>

#include "multconj/error.hpp"

namespace multconj {

BettiTable::BettiTable(int codim, std::vector<Step> steps)
    : codim_(codim), steps_(std::move(steps)) {
  if (steps_.empty()) throw InputError("betti table needs at least one step");
  if (codim_ < 1 || codim_ > projective_dimension())
    throw InputError("codim must lie in 1..p, got " + std::to_string(codim_));
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].empty())
      throw InputError("step " + std::to_string(i + 1) + " is empty");
    for (const auto& [shift, rank] : steps_[i]) {
      if (shift < 1 || shift > kMaxShift)
        throw InputError("shift " + std::to_string(shift) + " out of range in step " +
                         std::to_string(i + 1));
      if (rank < 1)
        throw InputError("rank must be positive in step " + std::to_string(i + 1));
    }
  }
}

BettiTable BettiTable::from_shifts(int codim,
                                   const std::vector<std::vector<Degree>>& shifts) {
  std::vector<Step> steps(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (Degree j : shifts[i]) steps[i][j] += 1;
  return BettiTable(codim, std::move(steps));
}

Degree BettiTable::max_shift() const {
  Degree best = 0;
  for (const auto& step : steps_) best = std::max(best, step.rbegin()->first);
  return best;
}

Integer KPolynomial::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

long KPolynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<long>(i);
  return -1;
}

KPolynomial k_polynomial(const BettiTable& table) {
  KPolynomial k;
  k.coeffs.assign(static_cast<std::size_t>(table.max_shift()) + 1, Integer{0});
  k.coeffs[0] = 1;
  for (int i = 1; i <= table.projective_dimension(); ++i) {
    const bool odd = (i % 2) != 0;
    for (const auto& [shift, rank] : table.step(i)) {
      auto& c = k.coeffs[static_cast<std::size_t>(shift)];
      if (odd)
        c -= rank;
      else
        c += rank;
    }
  }
  return k;
}

KPolynomial divide_by_one_minus_s(const KPolynomial& k, int power) {
  // K = (1-s) Q  <=>  q_i = k_0 + ... + k_i, exact iff sum k_i = 0.
  std::vector<Integer> q = k.coeffs;
  for (int round = 0; round < power; ++round) {
    Integer running = 0;
    for (auto& c : q) {
      running += c;
      c = running;
    }
    if (running != 0)
      throw DivisionError("(1-s)^" + std::to_string(power) +
                          " does not divide the K-polynomial");
    if (!q.empty()) q.pop_back();
  }
  return KPolynomial{std::move(q)};
}

KPolynomial reduced_numerator(const BettiTable& table) {
  return divide_by_one_minus_s(k_polynomial(table), table.codim());
}

Integer multiplicity(const BettiTable& table) {
  return reduced_numerator(table).evaluate_at_one();
}

ShiftSummary shift_summary(const BettiTable& table) {
  ShiftSummary s;
  for (const auto& step : table.steps()) {
    s.min.push_back(step.begin()->first);
    s.max.push_back(step.rbegin()->first);
  }
  return s;
}

Purity purity(const ShiftSummary& shifts) {
  Purity p;
  p.pure = shifts.min == shifts.max;
  p.quasi_pure = true;
  for (std::size_t i = 1; i < shifts.min.size(); ++i)
    if (shifts.min[i] < shifts.max[i - 1]) p.quasi_pure = false;
  return p;
}

Purity purity(const BettiTable& table) { return purity(shift_summary(table)); }

Integer huneke_miller(const BettiTable& table) {
  const auto shifts = shift_summary(table);
  if (shifts.min != shifts.max) throw NotPure("resolution is not pure");
  const int p = table.projective_dimension();
  if (table.codim() != p)
    throw InputError("Huneke-Miller formula needs codim = projective dimension");

  Integer product = 1;
  Integer factorial = 1;
  for (int i = 0; i < p; ++i) {
    product *= shifts.min[static_cast<std::size_t>(i)];
    factorial *= i + 1;
  }
  if (product % factorial != 0)
    throw DivisibilityError(to_string(factorial) + " does not divide " + to_string(product));
  Integer e = product / factorial;
  const Integer via_series = multiplicity(table);
  if (e != via_series)
    throw InternalMismatch("Huneke-Miller gives " + to_string(e) +
                           " but the Hilbert series gives " + to_string(via_series));
  return e;
}

Integer genus_dim2(const BettiTable& table) {
  const auto q = reduced_numerator(table);
  Integer g = 1;
  for (std::size_t i = 0; i < q.coeffs.size(); ++i)
    g += q.coeffs[i] * (static_cast<long>(i) - 1);
  return g;
}

}  // namespace multconj
