// Acceptance checks, one PASS/FAIL line per criterion. All comparisons are
// exact. Run with no argument for every criterion or with a number 1..8.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "multconj/betti.hpp"
#include "multconj/bounds.hpp"
#include "multconj/cm2.hpp"
#include "multconj/error.hpp"
#include "multconj/gor3.hpp"
#include "multconj/oracle.hpp"
#include "multconj/report.hpp"
#include "multconj/sweep.hpp"
#include "oracles.hpp"

using namespace multconj;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Integer three_routes(const DegreeMatrixCM2& A, Outcome& out) {
  const Integer uv = multiplicity_uv(A);
  const Integer betti = multiplicity(betti_table(A));
  const Integer stair = colength(witness_monomial_ideal(A));
  out.expect(uv == betti && betti == stair,
             Instance::of(A).label() + ": routes " + to_string(uv) + "/" + to_string(betti) +
                 "/" + to_string(stair));
  return uv;
}

void ac1(Outcome& out) {
  const auto start = Clock::now();
  const auto A = DegreeMatrixCM2::validate({2, 2, 1}, {2, 2, 1});
  const auto s = shifts(A);
  out.expect(s == Cm2Shifts{5, 6, 5, 7}, "shifts");
  const Integer e = three_routes(A, out);
  out.expect(e == 17, "e = " + to_string(e));
  const auto r = entry_bound(A, e);
  out.expect(!r.all_entries_at_least_two && !r.corner_condition, "hypotheses should fail");
  out.expect(r.corner_value == -1, "a1 - 2d + 1 = " + std::to_string(r.corner_value));
  out.expect(r.bound.lhs == 34 && r.bound.rhs == 33 && !r.bound.holds, "cleared bound");
  const double t = seconds_since(start);
  out.expect(t < 1.0, "runtime " + std::to_string(t));
  out.detail << (out.pass ? "m1=M1=5 m2=6 M2=7 e=17 (3 routes), a1-2d+1=-1, 34 > 33" : "");
}

void ac2(Outcome& out) {
  const auto start = Clock::now();
  for (Degree t = 2; t <= 50; ++t) {
    std::vector<Degree> a(static_cast<std::size_t>(t), 2);
    a.back() = 1;
    const auto A = DegreeMatrixCM2::validate(a, a);
    const std::string tag = "t=" + std::to_string(t) + ": ";
    const auto s = shifts(A);
    out.expect(s == Cm2Shifts{2 * t - 1, 2 * t, 2 * t - 1, 2 * t + 1}, tag + "shifts");
    const Integer e = three_routes(A, out);
    out.expect(e == 2 * t * t - 1, tag + "e = " + to_string(e));
    const auto r = entry_bound(A, e);
    out.expect(r.bound.lhs == 4 * t * t - 2 && r.bound.rhs == 4 * t * t - 3 && !r.bound.holds,
               tag + "cleared bound " + to_string(r.bound.lhs) + " vs " + to_string(r.bound.rhs));
  }
  const double t = seconds_since(start);
  out.expect(t < 1.0, "runtime " + std::to_string(t));
  out.detail << (out.pass ? "e=2t^2-1 and 4t^2-2 > 4t^2-3 for every t" : "");
}

void ac3(Outcome& out) {
  const auto start = Clock::now();
  const auto G = DegreeMatrixGor3::validate({2}, {2}, 5);
  const Integer e = multiplicity_pfaffian(G);
  out.expect(e == 20, "e = " + to_string(e));
  out.expect(multiplicity(betti_table(G)) == 20 && linkage_multiplicity(G) == 20,
             "routes disagree");
  const auto s = shifts(G);
  const auto sr = srinivasan_bounds(shift_summary(G), e);
  out.expect(sr.lower.lhs == 126 && sr.lower.rhs == 120 && !sr.lower.holds, "srinivasan lower");
  const auto g = gor3_bounds(s, e);
  out.expect(g.lower.lhs == 96 && g.lower.rhs == 120 && g.lower.holds, "gor3 lower");
  out.expect(g.upper.holds, "gor3 upper");
  const double t = seconds_since(start);
  out.expect(t < 1.0, "runtime " + std::to_string(t));
  if (out.pass)
    out.detail << "e=20, 6e=120 < 126, 96 <= 120, " << g.upper.lhs << " <= " << g.upper.rhs;
}

SweepReport full_sweep(Family family, int t_max, Degree entry_max, Outcome& out, double limit) {
  SweepConfig c;
  c.family = family;
  c.t_max = t_max;
  c.entry_max = entry_max;
  c.jobs = 1;
  const auto start = Clock::now();
  auto r = verify_all(c);
  const double t = seconds_since(start);
  out.expect(r.anomalies.empty(), std::to_string(r.anomalies.size()) + " anomalies");
  for (const auto& a : r.anomalies) out.detail << "; " << a.instance.label() << " " << a.check;
  out.expect(r.instances_checked > 0, "no instances");
  out.expect(t < limit, "runtime " + std::to_string(t));
  if (out.pass)
    out.detail << r.instances_checked << " instances, " << r.extensions_checked
               << " extensions, 0 anomalies, " << static_cast<int>(t * 10) / 10.0 << " s";
  return r;
}

void ac4(Outcome& out) { full_sweep(Family::cm2, 4, 6, out, 60.0); }
void ac5(Outcome& out) { full_sweep(Family::gor3, 3, 5, out, 120.0); }

void ac6(Outcome& out) {
  std::size_t checked = 0;
  for (const auto& [family, t_max, entry_max] :
       {std::tuple{Family::cm2, 4, Degree{6}}, std::tuple{Family::gor3, 3, Degree{5}}}) {
    SweepConfig c;
    c.family = family;
    c.t_max = t_max;
    c.entry_max = entry_max;
    c.checks = {checks::kHunekeMiller};
    std::vector<InstanceRow> pure;
    auto r = verify_all(c, [&](const InstanceRow& row) {
      if (row.purity.pure) pure.push_back(row);
    });
    out.expect(r.anomalies.empty(), "sweep anomalies");
    out.expect(pure.size() == r.pure_instances, "pure count");
    for (const auto& row : pure) {
      const int p = static_cast<int>(row.shifts.min.size());
      Integer product = 1, factorial = 1;
      for (int i = 0; i < p; ++i) {
        product *= row.shifts.min[static_cast<std::size_t>(i)];
        factorial *= i + 1;
      }
      out.expect(product % factorial == 0, row.instance.label() + ": p! does not divide");
      out.expect(product == factorial * row.e, row.instance.label() + ": p! e != prod d_i");
      ++checked;
    }
  }
  out.expect(checked > 0, "no pure instances met");
  if (out.pass) out.detail << checked << " pure instances, p! e = prod d_i on each";
}

void ac7(Outcome& out) {
  SweepConfig c;
  c.t_max = 2;
  c.entry_max = 4;
  std::string json1, json8, csv1, csv8;
  for (unsigned jobs : {1u, 8u}) {
    c.jobs = jobs;
    const auto h = hunt(HuntTarget::srinivasan_upper_gor3, c);
    std::string csv = csv_header() + "\n";
    for (const auto& row : h.candidates) csv += csv_row(row) + "\n";
    (jobs == 1 ? json1 : json8) = to_json(h).dump(2);
    (jobs == 1 ? csv1 : csv8) = csv;
    out.expect(h.candidates.empty(), "srinivasan_upper_gor3 has candidates at jobs " +
                                         std::to_string(jobs));
  }
  out.expect(json1 == json8 && csv1 == csv8, "reports differ between 1 and 8 jobs");

  if (out.pass) out.detail << "srinivasan_upper_gor3: byte-identical empty report at 1 and 8 jobs; ";

  c.t_max = 3;
  c.entry_max = 4;
  c.jobs = 1;
  const auto h = hunt(HuntTarget::prop24_bound, c, true);
  out.expect(h.candidates.empty(),
             "prop24_bound under its hypothesis: " + std::to_string(h.candidates.size()) +
                 " candidates");
  for (const auto& row : h.candidates)
    out.detail << " [" << row.instance.label() << " e=" << row.e
               << " a1-2d+1=" << row.entry->corner_value << " 2e=" << row.entry->bound.lhs
               << " > " << row.entry->bound.rhs << "]";
  if (out.pass) out.detail << "prop24_bound under its hypothesis: 0 candidates";
}

void ac8(Outcome& out) {
  const auto n_cm2 = enumerate_cm2(1, 2).size();
  const auto n_gor3 = enumerate_gor3(1, 2).size();
  out.expect(n_cm2 == 3, "enumerate_cm2(1,2) = " + std::to_string(n_cm2));
  out.expect(n_gor3 == 5, "enumerate_gor3(1,2) = " + std::to_string(n_gor3));

  const auto cm2 = enumerate_cm2(2, 3);
  const auto want = oracles::brute_cm2(2, 3);
  bool same = cm2.size() == want.size();
  for (std::size_t i = 0; same && i < cm2.size(); ++i)
    same = cm2[i].a() == want[i].first && cm2[i].b() == want[i].second;
  out.expect(same, "cm2 enumeration differs from brute force");

  const auto gor3 = enumerate_gor3(2, 3);
  const auto want3 = oracles::brute_gor3(2, 3);
  same = gor3.size() == want3.size();
  for (std::size_t i = 0; same && i < gor3.size(); ++i)
    same = gor3[i].base().a() == want3[i].a && gor3[i].base().b() == want3[i].b &&
           gor3[i].d() == want3[i].d;
  out.expect(same, "gor3 enumeration differs from brute force");
  if (out.pass)
    out.detail << "3 and 5; t<=2, E<=3: " << cm2.size() << " cm2 and " << gor3.size()
               << " gor3 match brute force";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"AC1 matrix a=b=(2,2,1)", ac1},
      {"AC2 rows of 2s over a row of 1s, t=2..50", ac2},
      {"AC3 complete intersection (2,2,5)", ac3},
      {"AC4 cm2 sweep t<=4 entries<=6", ac4},
      {"AC5 gor3 sweep t<=3 entries<=5", ac5},
      {"AC6 Huneke-Miller on pure instances", ac6},
      {"AC7 hunt determinism and prop24 under hypothesis", ac7},
      {"AC8 enumeration counts", ac8},
  };

  std::size_t only = 0;
  if (argc > 1) only = static_cast<std::size_t>(std::atoi(argv[1]));
  if (only > criteria.size()) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 2;
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && i + 1 != only) continue;
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& ex) {
      out.expect(false, std::string("exception: ") + ex.what());
    }
    std::printf("%s %s: %s\n", out.pass ? "PASS" : "FAIL", criteria[i].first,
                out.detail.str().c_str());
    if (!out.pass) ++failed;
  }
  return failed ? 1 : 0;
}
