#include "multconj/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "multconj/error.hpp"
#include "multconj/oracle.hpp"

namespace multconj {

std::string to_string(Family family) { return family == Family::cm2 ? "cm2" : "gor3"; }

Family parse_family(const std::string& name) {
  if (name == "cm2") return Family::cm2;
  if (name == "gor3") return Family::gor3;
  throw InputError("unknown family '" + name + "'");
}

Instance Instance::of(const DegreeMatrixCM2& A) { return {Family::cm2, A.a(), A.b(), {}}; }

Instance Instance::of(const DegreeMatrixGor3& G) {
  return {Family::gor3, G.base().a(), G.base().b(), G.d()};
}

namespace {

std::string join(const std::vector<Degree>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string Instance::label() const {
  std::string out = to_string(family) + " a=(" + join(a) + ") b=(" + join(b) + ")";
  if (d) out += " d=" + std::to_string(*d);
  return out;
}

InstanceRow evaluate(const DegreeMatrixCM2& A) {
  InstanceRow row;
  row.instance = Instance::of(A);
  row.shifts = shift_summary(A);
  row.e = multiplicity_uv(A);
  row.purity = purity(row.shifts);
  row.hhs = hhs_bounds(row.shifts, 2, row.e);
  row.refined = cm2_bounds(shifts(A), row.e);
  row.entry = entry_bound(A, row.e);
  return row;
}

InstanceRow evaluate(const DegreeMatrixGor3& G) {
  InstanceRow row;
  row.instance = Instance::of(G);
  row.shifts = shift_summary(G);
  row.e = multiplicity_pfaffian(G);
  row.purity = purity(row.shifts);
  row.hhs = hhs_bounds(row.shifts, 3, row.e);
  row.refined = gor3_bounds(shifts(G), row.e);
  row.srinivasan = srinivasan_bounds(row.shifts, row.e);
  return row;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void enumerate_size(std::size_t t, Degree entry_max,
                    const std::function<void(const DegreeMatrixCM2&)>& fn) {
  std::vector<Degree> a(t), b(t);
  std::function<void(std::size_t)> fill_b = [&](std::size_t i) {
    if (i == t) {
      fn(DegreeMatrixCM2::validate(a, b));
      return;
    }
    const Degree lo = std::max(a[i], i + 1 < t ? a[i + 1] : Degree{0});
    for (Degree v = lo; v <= entry_max; ++v) {
      b[i] = v;
      fill_b(i + 1);
    }
  };
  std::function<void(std::size_t)> fill_a = [&](std::size_t i) {
    if (i == t) {
      fill_b(0);
      return;
    }
    for (Degree v = 1; v <= entry_max; ++v) {
      a[i] = v;
      fill_a(i + 1);
    }
  };
  fill_a(0);
}

}  // namespace

void for_each_cm2(int t_max, Degree entry_max,
                  const std::function<void(const DegreeMatrixCM2&)>& fn) {
  for (int t = 1; t <= t_max; ++t) enumerate_size(static_cast<std::size_t>(t), entry_max, fn);
}

void for_each_gor3(int t_max, Degree entry_max,
                   const std::function<void(const DegreeMatrixGor3&)>& fn) {
  for_each_cm2(t_max, entry_max, [&](const DegreeMatrixCM2& A) {
    for (Degree d = A.a().front(); d <= entry_max; ++d)
      fn(DegreeMatrixGor3::validate(A.a(), A.b(), d));
  });
}

std::vector<DegreeMatrixCM2> enumerate_cm2(int t_max, Degree entry_max) {
  std::vector<DegreeMatrixCM2> out;
  for_each_cm2(t_max, entry_max, [&](const DegreeMatrixCM2& A) { out.push_back(A); });
  return out;
}

std::vector<DegreeMatrixGor3> enumerate_gor3(int t_max, Degree entry_max) {
  std::vector<DegreeMatrixGor3> out;
  for_each_gor3(t_max, entry_max, [&](const DegreeMatrixGor3& G) { out.push_back(G); });
  return out;
}

// ---------------------------------------------------------------------------
// Verification

std::vector<std::string> all_checks(Family family) {
  using namespace checks;
  if (family == Family::cm2)
    return {kMultiplicityRoutes, kResolutionFacts, kHsIdentities, kShiftAgreement,
            kRefinedBounds,      kHhsBounds,       kSharpness,    kHunekeMiller,
            kExtension};
  return {kMultiplicityRoutes, kSelfDuality, kShiftAgreement, kRefinedBounds,
          kHhsBounds,          kSharpness,   kHunekeMiller,   kExtension};
}

namespace {

/// Everything one instance contributes to a report.
struct Outcome {
  std::optional<InstanceRow> row;
  std::vector<Anomaly> anomalies;
  std::size_t extensions = 0;
  bool pure = false;
  bool sharp = false;
};

class Recorder {
 public:
  Recorder(const Instance& instance, const std::set<std::string>& enabled, Outcome& out)
      : instance_(instance), enabled_(enabled), out_(out) {}

  bool on(const char* check) const { return enabled_.count(check) != 0; }

  void fail(const char* check, Integer lhs, Integer rhs, std::string detail) {
    out_.anomalies.push_back({instance_, check, std::move(lhs), std::move(rhs), std::move(detail)});
  }

  void expect_equal(const char* check, const Integer& lhs, const Integer& rhs,
                    const std::string& detail) {
    if (lhs != rhs) fail(check, lhs, rhs, detail);
  }

  void expect(const char* check, bool ok, const std::string& detail) {
    if (!ok) fail(check, 0, 0, detail);
  }

  void expect_holds(const char* check, const BoundVerdict& v) {
    if (!v.holds) fail(check, v.lhs, v.rhs, v.name + " violated");
  }

  /// Runs fn, turning any library error into an anomaly of `check`.
  template <class Fn>
  bool guarded(const char* check, Fn&& fn) {
    try {
      fn();
      return true;
    } catch (const std::exception& ex) {
      fail(check, 0, 0, ex.what());
      return false;
    }
  }

 private:
  const Instance& instance_;
  const std::set<std::string>& enabled_;
  Outcome& out_;
};

void check_strictly_increasing(Recorder& rec, const ShiftSummary& s) {
  for (std::size_t i = 1; i < s.min.size(); ++i) {
    rec.expect(checks::kShiftAgreement, s.min[i - 1] < s.min[i], "m_i < m_{i+1} fails");
    rec.expect(checks::kShiftAgreement, s.max[i - 1] < s.max[i], "M_i < M_{i+1} fails");
  }
}

void check_common(Recorder& rec, Outcome& out, const InstanceRow& row, const BettiTable& table,
                  int codim) {
  using namespace checks;
  if (rec.on(kRefinedBounds)) {
    rec.expect_holds(kRefinedBounds, row.refined.lower);
    rec.expect_holds(kRefinedBounds, row.refined.upper);
  }
  if (rec.on(kHhsBounds)) {
    rec.expect_holds(kHhsBounds, row.hhs.lower);
    rec.expect_holds(kHhsBounds, row.hhs.upper);
    // The refined bounds sit inside the conjectured ones once both are scaled
    // to the refined denominator.
    const int scale = row.refined.lower.denominator / row.hhs.lower.denominator;
    if (row.refined.lower.lhs < row.hhs.lower.lhs * scale)
      rec.fail(kHhsBounds, row.refined.lower.lhs, row.hhs.lower.lhs * scale,
               "refined lower bound below the conjectured one");
    const int scale_up = row.refined.upper.denominator / row.hhs.upper.denominator;
    if (row.refined.upper.rhs > row.hhs.upper.rhs * scale_up)
      rec.fail(kHhsBounds, row.refined.upper.rhs, row.hhs.upper.rhs * scale_up,
               "refined upper bound above the conjectured one");
  }
  if (rec.on(kSharpness)) {
    rec.guarded(kSharpness, [&] {
      const auto s = sharpness(row.shifts, codim, row.e);
      out.sharp = s.lower_sharp;
    });
  }
  out.pure = row.purity.pure;
  if (rec.on(kHunekeMiller) && row.purity.pure) {
    rec.guarded(kHunekeMiller, [&] {
      rec.expect_equal(kHunekeMiller, huneke_miller(table), row.e,
                       "pure table: prod d_i / p! differs from e");
    });
  }
}

Outcome verify_one(const DegreeMatrixCM2& A, Degree entry_max,
                   const std::set<std::string>& enabled) {
  using namespace checks;
  Outcome out;
  const Instance instance = Instance::of(A);
  Recorder rec(instance, enabled, out);

  InstanceRow row;
  if (!rec.guarded(kResolutionFacts, [&] { row = evaluate(A); })) return out;
  const BettiTable table = betti_table(A);

  if (rec.on(kResolutionFacts)) rec.guarded(kResolutionFacts, [&] { uv_data(A); });

  if (rec.on(kMultiplicityRoutes)) {
    rec.guarded(kMultiplicityRoutes, [&] {
      const Integer via_series = multiplicity(table);
      const Integer via_staircase = colength(witness_monomial_ideal(A));
      rec.expect_equal(kMultiplicityRoutes, row.e, via_series, "u/v vs Hilbert series");
      rec.expect_equal(kMultiplicityRoutes, row.e, via_staircase, "u/v vs staircase");
      rec.expect(kMultiplicityRoutes, via_series >= 1, "multiplicity below 1");
    });
  }

  if (rec.on(kHsIdentities))
    rec.expect(kHsIdentities, hs_identities(A), "Herzog-Srinivasan identity fails");

  if (rec.on(kShiftAgreement)) {
    rec.expect(kShiftAgreement, shift_summary(table) == row.shifts,
               "matrix shifts differ from table shifts");
    check_strictly_increasing(rec, row.shifts);
  }

  check_common(rec, out, row, table, 2);

  if (rec.on(kExtension)) {
    const Degree c = A.b().back();
    for (Degree a = 1; a <= std::min(c, entry_max); ++a)
      for (Degree b = a; b <= entry_max; ++b) {
        ++out.extensions;
        rec.guarded(kExtension, [&] {
          const auto ext = extend(A, a, b);
          rec.expect_equal(kExtension, ext.e_before, row.e, "extension base multiplicity");
        });
      }
  }

  out.row = std::move(row);
  return out;
}

Outcome verify_one(const DegreeMatrixGor3& G, Degree entry_max,
                   const std::set<std::string>& enabled) {
  using namespace checks;
  Outcome out;
  const Instance instance = Instance::of(G);
  Recorder rec(instance, enabled, out);

  InstanceRow row;
  if (!rec.guarded(kRefinedBounds, [&] { row = evaluate(G); })) return out;
  const BettiTable table = betti_table(G);
  const auto s = shifts(G);

  if (rec.on(kMultiplicityRoutes)) {
    rec.guarded(kMultiplicityRoutes, [&] {
      const Integer via_series = multiplicity(table);
      rec.expect_equal(kMultiplicityRoutes, row.e, via_series, "Pfaffian vs Hilbert series");
      rec.expect_equal(kMultiplicityRoutes, row.e, linkage_check(G), "Pfaffian vs linkage");
      rec.expect(kMultiplicityRoutes, via_series >= 1, "multiplicity below 1");
    });
  }

  if (rec.on(kSelfDuality)) {
    rec.guarded(kSelfDuality, [&] {
      std::map<Degree, Integer> dual;
      for (const auto& [shift, rank] : table.step(1)) {
        rec.expect(kSelfDuality, shift > 0 && shift < s.m3, "generator degree outside (0, m_3)");
        dual[s.m3 - shift] += rank;
      }
      rec.expect(kSelfDuality, dual == table.step(2), "syzygies are not m_3 minus generators");
      rec.expect(kSelfDuality,
                 table.step(3).size() == 1 && table.step(3).begin()->first == s.m3 &&
                     table.step(3).begin()->second == 1,
                 "last module is not R(-m_3)");
      Integer count = 0;
      for (const auto& [shift, rank] : table.step(1)) count += rank;
      rec.expect_equal(kSelfDuality, count, 2 * G.t() + 1, "generator count != 2t+1");
      const auto ts = shift_summary(table);
      rec.expect(kSelfDuality, ts.min[2] == ts.max[2], "m_3 != M_3");
      rec.expect(kSelfDuality, ts.max[0] == ts.min[2] - ts.min[1], "M_1 != m_3 - m_2");
      rec.expect(kSelfDuality, ts.max[1] == ts.min[2] - ts.min[0], "M_2 != m_3 - m_1");

      const auto grid = degree_grid(G);
      const std::size_t n = grid.size();
      const std::size_t t = G.t();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (grid[i][j] != grid[n - 1 - j][n - 1 - i])
            rec.fail(kSelfDuality, grid[i][j], grid[n - 1 - j][n - 1 - i],
                     "degree grid not symmetric about the anti-diagonal");
      rec.expect_equal(kSelfDuality, grid[t][t], G.d(), "center entry != d");
      const auto block = full_matrix(G.base());
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j <= t; ++j)
          if (grid[t + 1 + i][t + j] != block[i][j])
            rec.fail(kSelfDuality, grid[t + 1 + i][t + j], block[i][j],
                     "lower right block differs from the codimension-2 matrix");
    });
  }

  if (rec.on(kShiftAgreement)) {
    rec.expect(kShiftAgreement, shift_summary(table) == row.shifts,
               "matrix shifts differ from table shifts");
    check_strictly_increasing(rec, row.shifts);
  }

  check_common(rec, out, row, table, 3);

  if (rec.on(kExtension)) {
    const Degree c = G.base().b().back();
    for (Degree a = 1; a <= std::min(c, entry_max); ++a)
      for (Degree b = a; b <= entry_max; ++b) {
        ++out.extensions;
        rec.guarded(kExtension, [&] {
          const auto ext = extend(G, a, b);
          rec.expect_equal(kExtension, ext.e_before, row.e, "extension base multiplicity");
        });
      }
  }

  out.row = std::move(row);
  return out;
}

/// Applies `work` to every item on `jobs` threads, block by block, and hands
/// results to `consume` strictly in item order.
template <class Item, class Result, class Work, class Consume>
void ordered_parallel(const std::vector<Item>& items, unsigned jobs, Work work,
                      Consume consume) {
  constexpr std::size_t kBlock = 4096;
  jobs = std::max(1u, jobs);
  std::vector<std::optional<Result>> slots;
  for (std::size_t start = 0; start < items.size(); start += kBlock) {
    const std::size_t end = std::min(items.size(), start + kBlock);
    slots.assign(end - start, std::nullopt);
    if (jobs == 1) {
      for (std::size_t i = start; i < end; ++i) slots[i - start] = work(items[i]);
    } else {
      std::atomic<std::size_t> next{start};
      std::vector<std::thread> pool;
      for (unsigned k = 0; k < jobs; ++k)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < end; i = next++) slots[i - start] = work(items[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (auto& slot : slots) consume(std::move(*slot));
  }
}

std::set<std::string> resolve_checks(const SweepConfig& config) {
  const auto known = all_checks(config.family);
  if (config.checks.empty()) return {known.begin(), known.end()};
  for (const auto& name : config.checks)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw InputError("unknown check '" + name + "' for family " + to_string(config.family));
  return config.checks;
}

template <class Matrix>
void run_sweep(const std::vector<Matrix>& items, const SweepConfig& config,
               const std::set<std::string>& enabled, const RowSink& sink, SweepReport& report) {
  ordered_parallel<Matrix, Outcome>(
      items, config.jobs,
      [&](const Matrix& m) { return verify_one(m, config.entry_max, enabled); },
      [&](Outcome&& out) {
        ++report.instances_checked;
        report.extensions_checked += out.extensions;
        for (auto& a : out.anomalies) report.anomalies.push_back(std::move(a));
        if (!out.row) return;
        if (out.pure) ++report.pure_instances;
        if (out.sharp) report.sharp_cases.push_back(out.row->instance);
        if (out.row->entry && !out.row->entry->bound.holds)
          report.entry_bound_findings.push_back({out.row->instance, *out.row->entry});
        if (out.row->srinivasan && !out.row->srinivasan->upper.holds)
          report.srinivasan_upper_findings.push_back(*out.row);
        if (sink) sink(*out.row);
      });
}

}  // namespace

SweepReport verify_all(const SweepConfig& config, const RowSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.config = config;
  const auto enabled = resolve_checks(config);
  report.config.checks = enabled;

  if (config.family == Family::cm2)
    run_sweep(enumerate_cm2(config.t_max, config.entry_max), config, enabled, sink, report);
  else
    run_sweep(enumerate_gor3(config.t_max, config.entry_max), config, enabled, sink, report);

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Hunting

std::string to_string(HuntTarget target) {
  return target == HuntTarget::srinivasan_upper_gor3 ? "srinivasan_upper_gor3" : "prop24_bound";
}

HuntTarget parse_target(const std::string& name) {
  if (name == "srinivasan_upper_gor3") return HuntTarget::srinivasan_upper_gor3;
  if (name == "prop24_bound") return HuntTarget::prop24_bound;
  throw UnknownTarget("unknown hunt target '" + name + "'");
}

Family family_of(HuntTarget target) {
  return target == HuntTarget::srinivasan_upper_gor3 ? Family::gor3 : Family::cm2;
}

namespace {

struct HuntOutcome {
  bool examined = false;
  std::optional<InstanceRow> candidate;
};

}  // namespace

HuntReport hunt(HuntTarget target, const SweepConfig& config, bool require_hypothesis) {
  HuntReport report;
  report.target = target;
  report.t_max = config.t_max;
  report.entry_max = config.entry_max;
  report.require_hypothesis = require_hypothesis && target == HuntTarget::prop24_bound;

  auto consume = [&](HuntOutcome&& out) {
    if (out.examined) ++report.instances_checked;
    if (out.candidate) report.candidates.push_back(std::move(*out.candidate));
  };

  if (target == HuntTarget::srinivasan_upper_gor3) {
    ordered_parallel<DegreeMatrixGor3, HuntOutcome>(
        enumerate_gor3(config.t_max, config.entry_max), config.jobs,
        [](const DegreeMatrixGor3& G) {
          HuntOutcome out{true, std::nullopt};
          auto row = evaluate(G);
          if (!row.srinivasan->upper.holds) out.candidate = std::move(row);
          return out;
        },
        consume);
  } else {
    const bool restrict = report.require_hypothesis;
    ordered_parallel<DegreeMatrixCM2, HuntOutcome>(
        enumerate_cm2(config.t_max, config.entry_max), config.jobs,
        [restrict](const DegreeMatrixCM2& A) {
          HuntOutcome out;
          auto row = evaluate(A);
          if (restrict && !row.entry->hypothesis()) return out;
          out.examined = true;
          if (!row.entry->bound.holds) out.candidate = std::move(row);
          return out;
        },
        consume);
  }
  return report;
}

}  // namespace multconj
