#include "multconj/gor3.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "multconj/error.hpp"

namespace multconj {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw InternalMismatch(what);
}

}  // namespace

DegreeMatrixGor3 DegreeMatrixGor3::validate(std::vector<Degree> a, std::vector<Degree> b,
                                            Degree d) {
  auto base = DegreeMatrixCM2::validate(std::move(a), std::move(b));
  if (d < base.a().front())
    throw CenterTooSmall("d = " + std::to_string(d) + " < a_1 = " +
                         std::to_string(base.a().front()));
  if (d > (Degree{1} << 20)) throw InputError("center entry too large");
  return DegreeMatrixGor3(std::move(base), d);
}

Gor3Shifts shifts(const DegreeMatrixGor3& G) {
  const auto j = shifts(G.base());
  const Degree m3 = G.d() + 2 * j.M1;
  Gor3Shifts s{j.m1, j.m2, m3, m3 - j.m2, m3 - j.m1, m3};
  check(s.M2 - s.m2 == s.M1 - s.m1 && s.M1 - s.m1 == s.m3 - s.m1 - s.m2,
        "M_2 - m_2 = M_1 - m_1 = m_3 - m_1 - m_2 fails");
  return s;
}

ShiftSummary shift_summary(const DegreeMatrixGor3& G) {
  const auto s = shifts(G);
  return {{s.m1, s.m2, s.m3}, {s.M1, s.M2, s.M3}};
}

std::vector<Degree> generator_degrees(const DegreeMatrixGor3& G) {
  const Degree m3 = shifts(G).m3;
  auto alpha = generator_degrees(G.base());
  for (Degree f : syzygy_degrees(G.base())) alpha.push_back(m3 - f);
  std::sort(alpha.begin(), alpha.end());
  return alpha;
}

std::vector<std::vector<Degree>> degree_grid(const DegreeMatrixGor3& G) {
  const Degree m3 = shifts(G).m3;
  const auto alpha = generator_degrees(G);
  const std::size_t n = alpha.size();
  std::vector<std::vector<Degree>> grid(n, std::vector<Degree>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = m3 - alpha[i] - alpha[n - 1 - j];
  return grid;
}

Integer multiplicity_pfaffian(const DegreeMatrixGor3& G) {
  const auto& a = G.base().a();
  const auto& b = G.base().b();
  Integer e = 0;
  Degree a_prefix = 0;
  Degree offset = 0;  // sum_{i<j} (2 b_i - a_i)
  for (std::size_t j = 0; j < a.size(); ++j) {
    a_prefix += a[j];
    e += Integer(b[j]) * a_prefix * (G.d() + offset + b[j] - a[j]);
    offset += 2 * b[j] - a[j];
  }
  return e;
}

BettiTable betti_table(const DegreeMatrixGor3& G) {
  const Degree m3 = shifts(G).m3;
  const auto alpha = generator_degrees(G);
  std::vector<Degree> beta;
  beta.reserve(alpha.size());
  for (Degree x : alpha) beta.push_back(m3 - x);
  return BettiTable::from_shifts(3, {alpha, beta, {m3}});
}

Integer linkage_multiplicity(const DegreeMatrixGor3& G) {
  const auto s = shifts(G);
  const auto j_table = betti_table(G.base());
  const Integer e_j = multiplicity(j_table);
  const Integer g = genus_dim2(j_table);
  return Integer(s.m1 + s.M2 - 4) * e_j - (2 * g - 2);
}

Integer linkage_check(const DegreeMatrixGor3& G) {
  Integer e = linkage_multiplicity(G);
  const Integer pfaffian = multiplicity_pfaffian(G);
  if (e != pfaffian)
    throw InternalMismatch("linkage formula gives " + to_string(e) +
                           " but the Pfaffian formula gives " + to_string(pfaffian));
  return e;
}

Gor3Extension extend(const DegreeMatrixGor3& G, Degree a, Degree b) {
  const Degree c = G.base().b().back();
  if (b < a)
    throw NotMonotone("extension needs b >= a (b = " + std::to_string(b) +
                      ", a = " + std::to_string(a) + ")");
  if (c < a)
    throw NotMonotone("extension needs b_t >= a (b_t = " + std::to_string(c) +
                      ", a = " + std::to_string(a) + ")");

  auto new_a = G.base().a();
  auto new_b = G.base().b();
  new_a.push_back(a);
  new_b.push_back(b);
  auto extended = DegreeMatrixGor3::validate(std::move(new_a), std::move(new_b), G.d());

  const auto s = shifts(G);
  const auto s2 = shifts(extended);
  check(s2.m1 == s.m1 + a, "m_1' != m_1 + a");
  check(s2.m2 == s.m2 + a + b - c, "m_2' != m_2 + a + b - c");
  check(s2.m3 == s.m3 + 2 * b, "m_3' != m_3 + 2b");
  check(s2.M1 == s.M1 + b + c - a, "M_1' != M_1 + b + c - a");
  check(s2.M2 == s.M2 + 2 * b - a, "M_2' != M_2 + 2b - a");
  check(s2.M3 == s.M3 + 2 * b, "M_3' != M_3 + 2b");

  // Genus of the codimension-2 block under the basic double link, cleared by 2:
  // 2g' = 2g + b(m_1 + a)(m_1 + a + b - 4) + 2b e(R/J).
  const auto j_table = betti_table(G.base());
  const auto j2_table = betti_table(extended.base());
  const Integer g = genus_dim2(j_table);
  const Integer g2 = genus_dim2(j2_table);
  const Integer lhs = 2 * g2;
  const Integer rhs = 2 * g + Integer(b) * (s.m1 + a) * (s.m1 + a + b - 4) +
                      2 * Integer(b) * multiplicity(j_table);
  check(lhs == rhs, "genus recursion of the basic double link fails");

  Integer e = multiplicity_pfaffian(G);
  Integer e_after = e + Integer(b) * (s.m1 + a) * (s.M2 + b - a);
  if (e_after != multiplicity_pfaffian(extended))
    throw InternalMismatch("multiplicity recursion disagrees with the Pfaffian formula");
  return {std::move(extended), s, s2, std::move(e), std::move(e_after)};
}

}  // namespace multconj
