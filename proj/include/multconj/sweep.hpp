#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multconj/betti.hpp"
#include "multconj/bounds.hpp"
#include "multconj/cm2.hpp"
#include "multconj/gor3.hpp"
#include "multconj/integer.hpp"

namespace multconj {

enum class Family { cm2, gor3 };

std::string to_string(Family family);
Family parse_family(const std::string& name);

/// A degree matrix from either family, as plain parameters.
struct Instance {
  Family family = Family::cm2;
  std::vector<Degree> a;
  std::vector<Degree> b;
  std::optional<Degree> d;

  static Instance of(const DegreeMatrixCM2& A);
  static Instance of(const DegreeMatrixGor3& G);

  /// "cm2 a=(2,2,1) b=(2,2,1)" or "gor3 a=(2) b=(2) d=5".
  std::string label() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Every quantity computed for one matrix: shifts, multiplicity and all
/// bound verdicts that apply to its family.
struct InstanceRow {
  Instance instance;
  ShiftSummary shifts;
  Integer e;
  Purity purity;
  BoundPair hhs;
  BoundPair refined;  // cm2_bounds or gor3_bounds
  std::optional<EntryBoundResult> entry;          // cm2 only
  std::optional<SrinivasanResult> srinivasan;     // gor3 only
};

InstanceRow evaluate(const DegreeMatrixCM2& A);
InstanceRow evaluate(const DegreeMatrixGor3& G);

/// All valid matrices with t <= t_max and every a_i, b_i <= entry_max,
/// ordered by t and then lexicographically in (a_1..a_t, b_1..b_t).
std::vector<DegreeMatrixCM2> enumerate_cm2(int t_max, Degree entry_max);
/// Same order on (a, b, d) with a_1 <= d <= entry_max.
std::vector<DegreeMatrixGor3> enumerate_gor3(int t_max, Degree entry_max);

void for_each_cm2(int t_max, Degree entry_max,
                  const std::function<void(const DegreeMatrixCM2&)>& fn);
void for_each_gor3(int t_max, Degree entry_max,
                   const std::function<void(const DegreeMatrixGor3&)>& fn);

/// Check names understood by verify_all.
namespace checks {
inline constexpr const char* kMultiplicityRoutes = "multiplicity_routes";
inline constexpr const char* kHsIdentities = "hs_identities";
inline constexpr const char* kResolutionFacts = "resolution_facts";
inline constexpr const char* kShiftAgreement = "shift_agreement";
inline constexpr const char* kSelfDuality = "self_duality";
inline constexpr const char* kRefinedBounds = "refined_bounds";
inline constexpr const char* kHhsBounds = "hhs_bounds";
inline constexpr const char* kSharpness = "sharpness";
inline constexpr const char* kExtension = "extension";
inline constexpr const char* kHunekeMiller = "huneke_miller";
}  // namespace checks

/// Names of every check that applies to a family, in report order.
std::vector<std::string> all_checks(Family family);

struct SweepConfig {
  Family family = Family::cm2;
  int t_max = 1;
  Degree entry_max = 1;
  /// Subset of all_checks(family); empty selects all of them.
  std::set<std::string> checks;
  unsigned jobs = 1;
};

struct Anomaly {
  Instance instance;
  std::string check;
  Integer lhs;
  Integer rhs;
  std::string detail;
};

/// Failure of the entry-condition upper bound on one matrix.
struct EntryBoundFinding {
  Instance instance;
  EntryBoundResult result;
};

struct SweepReport {
  SweepConfig config;
  std::size_t instances_checked = 0;
  std::size_t extensions_checked = 0;
  std::size_t pure_instances = 0;
  std::vector<Anomaly> anomalies;
  /// Instances where the conjectured bounds are attained (pure ones).
  std::vector<Instance> sharp_cases;
  std::vector<EntryBoundFinding> entry_bound_findings;
  /// Gorenstein instances violating Srinivasan's upper bound.
  std::vector<InstanceRow> srinivasan_upper_findings;
  /// Wall clock; not part of any serialized report.
  double runtime_seconds = 0;
};

using RowSink = std::function<void(const InstanceRow&)>;

/// Runs every selected check on every enumerated instance. Rows reach `sink`
/// in enumeration order regardless of config.jobs. Throws InputError on an
/// unknown check name.
SweepReport verify_all(const SweepConfig& config, const RowSink& sink = {});

enum class HuntTarget { srinivasan_upper_gor3, prop24_bound };

std::string to_string(HuntTarget target);
/// Throws UnknownTarget.
HuntTarget parse_target(const std::string& name);
Family family_of(HuntTarget target);

struct HuntReport {
  HuntTarget target = HuntTarget::srinivasan_upper_gor3;
  int t_max = 0;
  Degree entry_max = 0;
  /// prop24_bound only: skip matrices satisfying neither sufficient condition.
  bool require_hypothesis = false;
  std::size_t instances_checked = 0;
  std::vector<InstanceRow> candidates;
};

/// Every instance in range violating the target inequality. config.family
/// is ignored; the target decides it.
HuntReport hunt(HuntTarget target, const SweepConfig& config, bool require_hypothesis = false);

}  // namespace multconj
