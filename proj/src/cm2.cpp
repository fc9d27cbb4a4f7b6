#include "multconj/cm2.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "multconj/error.hpp"

namespace multconj {

namespace {

Degree sum(const std::vector<Degree>& xs, std::size_t from, std::size_t to) {
  return std::accumulate(xs.begin() + static_cast<long>(from),
                         xs.begin() + static_cast<long>(to), Degree{0});
}

// Degrees here stay far below 2^62 because validate() bounds every entry.
constexpr Degree kMaxEntry = Degree{1} << 20;

void check(bool ok, const char* what) {
  if (!ok) throw InternalMismatch(what);
}

}  // namespace

DegreeMatrixCM2 DegreeMatrixCM2::validate(std::vector<Degree> a, std::vector<Degree> b) {
  if (a.empty()) throw InputError("degree matrix needs t >= 1");
  if (a.size() != b.size())
    throw InputError("a and b must have equal length (got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()) + ")");
  const std::size_t t = a.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (a[i] < 1)
      throw InvalidDiagonal("a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                            " must be >= 1");
    if (a[i] > kMaxEntry || b[i] > kMaxEntry)
      throw InputError("degree matrix entry too large");
    if (b[i] < a[i])
      throw NotMonotone("b_" + std::to_string(i + 1) + " = " + std::to_string(b[i]) +
                        " < a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]));
    if (i + 1 < t && b[i] < a[i + 1])
      throw NotMonotone("b_" + std::to_string(i + 1) + " = " + std::to_string(b[i]) +
                        " < a_" + std::to_string(i + 2) + " = " + std::to_string(a[i + 1]));
  }
  return DegreeMatrixCM2(std::move(a), std::move(b));
}

Cm2Shifts shifts(const DegreeMatrixCM2& A) {
  const auto& a = A.a();
  const auto& b = A.b();
  const Degree m1 = sum(a, 0, a.size());
  const Degree M1 = sum(b, 0, b.size());
  return {m1, m1 + b.back(), M1, a.front() + M1};
}

ShiftSummary shift_summary(const DegreeMatrixCM2& A) {
  const auto s = shifts(A);
  return {{s.m1, s.m2}, {s.M1, s.M2}};
}

std::vector<std::vector<Degree>> full_matrix(const DegreeMatrixCM2& A) {
  const auto& a = A.a();
  const auto& b = A.b();
  const std::size_t t = A.t();
  // Column degrees E_j relative to E_1 = 0: E_{j+1} = E_j + a_j - b_j.
  // Row degrees F_i = a_i + E_i.
  std::vector<Degree> col(t + 1, 0);
  for (std::size_t j = 0; j < t; ++j) col[j + 1] = col[j] + a[j] - b[j];
  std::vector<std::vector<Degree>> grid(t, std::vector<Degree>(t + 1));
  for (std::size_t i = 0; i < t; ++i) {
    const Degree row = a[i] + col[i];
    for (std::size_t j = 0; j <= t; ++j) grid[i][j] = row - col[j];
  }
  return grid;
}

std::vector<Degree> generator_degrees(const DegreeMatrixCM2& A) {
  const auto& a = A.a();
  const auto& b = A.b();
  const std::size_t t = A.t();
  std::vector<Degree> out;
  for (std::size_t j = 0; j <= t; ++j) out.push_back(sum(a, 0, j) + sum(b, j, t));
  return out;
}

std::vector<Degree> syzygy_degrees(const DegreeMatrixCM2& A) {
  const auto& a = A.a();
  const auto& b = A.b();
  const std::size_t t = A.t();
  std::vector<Degree> out;
  for (std::size_t j = 1; j <= t; ++j) out.push_back(sum(a, 0, j) + sum(b, j - 1, t));
  return out;
}

UVData uv_data(const DegreeMatrixCM2& A) {
  UVData d;
  d.e = generator_degrees(A);
  d.f = syzygy_degrees(A);
  std::sort(d.e.begin(), d.e.end());
  std::sort(d.f.begin(), d.f.end());
  d.m = d.e.size();
  const std::size_t n = d.f.size();
  for (std::size_t i = 0; i < n; ++i) {
    d.u.push_back(d.f[i] - d.e[i]);
    d.v.push_back(d.f[i] - d.e[i + 1]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    check(d.u[i] >= d.v[i] && d.v[i] >= 0, "u_i >= v_i >= 0 fails");
    if (i + 1 < n) check(d.u[i + 1] >= d.v[i], "u_{i+1} >= v_i fails");
  }
  const Degree su = sum(d.u, 0, n);
  const Degree sv = sum(d.v, 0, n);
  check(d.e.front() == sv, "e_1 != v_1 + ... + v_{m-1}");
  check(d.e.back() == su, "e_m != u_1 + ... + u_{m-1}");
  check(d.f.front() == sv + d.u.front(), "f_1 != sum v + u_1");
  check(d.f.back() == su + d.v.back(), "f_{m-1} != sum u + v_{m-1}");
  return d;
}

Integer multiplicity_uv(const DegreeMatrixCM2& A) {
  const auto d = uv_data(A);
  const std::size_t n = d.u.size();

  Integer by_tails = 0;
  Degree tail = 0;
  for (std::size_t i = n; i-- > 0;) {
    tail += d.v[i];
    by_tails += Integer(d.u[i]) * tail;
  }

  Integer by_heads = 0;
  Degree head = 0;
  for (std::size_t i = 0; i < n; ++i) {
    head += d.u[i];
    by_heads += Integer(d.v[i]) * head;
  }

  if (by_tails != by_heads)
    throw InternalMismatch("u/v multiplicity forms disagree: " + to_string(by_tails) +
                           " vs " + to_string(by_heads));
  return by_tails;
}

bool hs_identities(const DegreeMatrixCM2& A) {
  const auto d = uv_data(A);
  const std::size_t n = d.u.size();

  // tail[k] = v_k + ... + v_n (1-based k), tail[n+1] = 0.
  std::vector<Integer> tail(n + 2, 0);
  for (std::size_t k = n; k >= 1; --k) tail[k] = tail[k + 1] + d.v[k - 1];
  Integer lhs_v = 0;
  for (std::size_t i = 2; i <= n; ++i)
    lhs_v += Integer(d.v[i - 2] + d.v[i - 1]) * tail[i];
  const Integer rhs_v = tail[1] * tail[2];

  // head[k] = u_1 + ... + u_k, head[0] = 0.
  std::vector<Integer> head(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) head[k] = head[k - 1] + d.u[k - 1];
  Integer lhs_u = 0;
  for (std::size_t i = 1; i + 1 <= n; ++i)
    lhs_u += Integer(d.u[i - 1] + d.u[i]) * head[i];
  const Integer rhs_u = head[n] * head[n - 1];

  return lhs_v == rhs_v && lhs_u == rhs_u;
}

BettiTable betti_table(const DegreeMatrixCM2& A) {
  return BettiTable::from_shifts(2, {generator_degrees(A), syzygy_degrees(A)});
}

MonomialStaircase witness_monomial_ideal(const DegreeMatrixCM2& A) {
  const auto& a = A.a();
  const auto& b = A.b();
  const std::size_t t = A.t();
  std::vector<Exponent> gens;
  for (std::size_t j = 0; j <= t; ++j) gens.push_back({sum(a, 0, j), sum(b, j, t)});
  return minimalize(std::move(gens));
}

Cm2Extension extend(const DegreeMatrixCM2& A, Degree a, Degree b) {
  const Degree c = A.b().back();
  if (b < a)
    throw NotMonotone("extension needs b >= a (b = " + std::to_string(b) +
                      ", a = " + std::to_string(a) + ")");
  if (c < a)
    throw NotMonotone("extension needs b_t >= a (b_t = " + std::to_string(c) +
                      ", a = " + std::to_string(a) + ")");

  auto new_a = A.a();
  auto new_b = A.b();
  new_a.push_back(a);
  new_b.push_back(b);
  auto extended = DegreeMatrixCM2::validate(std::move(new_a), std::move(new_b));

  const auto before = shifts(A);
  const auto after = shifts(extended);
  check(after.m1 == before.m1 + a, "m_1' != m_1 + a");
  check(after.M1 == before.M1 + b, "M_1' != M_1 + b");
  check(after.m2 == before.m2 + a + b - c, "m_2' != m_2 + a + b - c");
  check(after.M2 == before.M2 + b, "M_2' != M_2 + b");

  Integer e = multiplicity_uv(A);
  Integer e_after = e + Integer(after.m1) * b;
  if (e_after != multiplicity_uv(extended))
    throw InternalMismatch("basic double link recursion disagrees with the u/v formula");
  return {std::move(extended), before, after, std::move(e), std::move(e_after)};
}

}  // namespace multconj
