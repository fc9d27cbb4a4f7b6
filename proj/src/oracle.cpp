#include "multconj/oracle.hpp"

#include <algorithm>

#include "multconj/error.hpp"

namespace multconj {

MonomialStaircase minimalize(std::vector<Exponent> gens) {
  if (gens.empty()) throw InputError("monomial ideal needs at least one generator");
  for (const auto& g : gens)
    if (g.x < 0 || g.y < 0) throw InputError("negative exponent in monomial generator");

  std::sort(gens.begin(), gens.end());
  // After sorting by (x, y), a generator is redundant iff some earlier one
  // has y <= its y.
  std::vector<Exponent> kept;
  for (const auto& g : gens)
    if (kept.empty() || g.y < kept.back().y) kept.push_back(g);

  if (kept.front().x != 0) throw NotArtinian("no pure power of y among the generators");
  if (kept.back().y != 0) throw NotArtinian("no pure power of x among the generators");
  return MonomialStaircase(std::move(kept));
}

Integer colength(const MonomialStaircase& staircase) {
  const auto& g = staircase.gens();
  // For y in [g[k+1].y, g[k].y) the row of standard monomials is x < g[k+1].x.
  Integer total = 0;
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    total += Integer(g[k + 1].x) * (g[k].y - g[k + 1].y);
  return total;
}

MonomialStaircase transpose(const MonomialStaircase& staircase) {
  std::vector<Exponent> swapped;
  swapped.reserve(staircase.gens().size());
  for (const auto& g : staircase.gens()) swapped.push_back({g.y, g.x});
  return minimalize(std::move(swapped));
}

}  // namespace multconj
