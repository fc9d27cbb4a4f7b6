#include "multconj/report.hpp"

#include <limits>

#include "multconj/error.hpp"

namespace multconj {

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

namespace {

std::vector<Degree> degree_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw InputError(std::string("missing integer list '") + key + "'");
  std::vector<Degree> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer())
      throw InputError(std::string("'") + key + "' must contain integers");
    out.push_back(x.get<Degree>());
  }
  return out;
}

Degree degree_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("missing integer '") + key + "'");
  return j.at(key).get<Degree>();
}

json verdict_pair(const BoundPair& p) { return json::array({to_json(p.lower), to_json(p.upper)}); }

}  // namespace

json to_json(const DegreeMatrixCM2& A) {
  return {{"type", "cm2"}, {"a", A.a()}, {"b", A.b()}};
}

json to_json(const DegreeMatrixGor3& G) {
  return {{"type", "gor3"}, {"a", G.base().a()}, {"b", G.base().b()}, {"d", G.d()}};
}

json to_json(const MonomialStaircase& S) {
  json gens = json::array();
  for (const auto& g : S.gens()) gens.push_back({g.x, g.y});
  return {{"type", "monomial2"}, {"gens", gens}};
}

json to_json(const BettiTable& table) {
  json steps = json::array();
  for (const auto& step : table.steps()) {
    json entries = json::array();
    for (const auto& [shift, rank] : step) entries.push_back({shift, integer_json(rank)});
    steps.push_back(entries);
  }
  return {{"type", "betti"}, {"codim", table.codim()}, {"steps", steps}};
}

json to_json(const Instance& instance) {
  json j = {{"type", to_string(instance.family)}, {"a", instance.a}, {"b", instance.b}};
  if (instance.d) j["d"] = *instance.d;
  return j;
}

json to_json(const BoundVerdict& v) {
  return {{"name", v.name},
          {"lhs", integer_json(v.lhs)},
          {"rhs", integer_json(v.rhs)},
          {"denominator", v.denominator},
          {"holds", v.holds},
          {"sharp", v.sharp}};
}

json to_json(const InstanceRow& row) {
  json j = {{"instance", to_json(row.instance)},
            {"m", row.shifts.min},
            {"M", row.shifts.max},
            {"e", integer_json(row.e)},
            {"pure", row.purity.pure},
            {"quasi_pure", row.purity.quasi_pure},
            {"hhs", verdict_pair(row.hhs)},
            {"refined", verdict_pair(row.refined)}};
  if (row.entry) {
    j["entry_bound"] = {{"all_entries_at_least_two", row.entry->all_entries_at_least_two},
                        {"corner_condition", row.entry->corner_condition},
                        {"corner_value", row.entry->corner_value},
                        {"bound", to_json(row.entry->bound)}};
  }
  if (row.srinivasan) {
    j["srinivasan"] = {{"quasi_pure", row.srinivasan->quasi_pure},
                       {"lower", to_json(row.srinivasan->lower)},
                       {"upper", to_json(row.srinivasan->upper)}};
  }
  return j;
}

BettiTable betti_from_json(const json& j) {
  if (!j.contains("codim") || !j.at("codim").is_number_integer())
    throw InputError("betti table needs integer 'codim'");
  if (!j.contains("steps") || !j.at("steps").is_array())
    throw InputError("betti table needs 'steps'");
  std::vector<BettiTable::Step> steps;
  for (const auto& step : j.at("steps")) {
    if (!step.is_array()) throw InputError("each step must be a list of [shift, rank]");
    BettiTable::Step s;
    for (const auto& entry : step) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer())
        throw InputError("betti entries must be [shift, rank] integer pairs");
      s[entry[0].get<Degree>()] += entry[1].get<std::int64_t>();
    }
    steps.push_back(std::move(s));
  }
  return BettiTable(j.at("codim").get<int>(), std::move(steps));
}

InputObject parse_input(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("type")) {
    if (j.contains("steps")) return betti_from_json(j);
    throw InputError("input object needs a 'type'");
  }
  if (!j.at("type").is_string()) throw InputError("'type' must be a string");
  const auto type = j.at("type").get<std::string>();
  if (type == "cm2") return DegreeMatrixCM2::validate(degree_list(j, "a"), degree_list(j, "b"));
  if (type == "gor3")
    return DegreeMatrixGor3::validate(degree_list(j, "a"), degree_list(j, "b"),
                                      degree_field(j, "d"));
  if (type == "monomial2") {
    if (!j.contains("gens") || !j.at("gens").is_array())
      throw InputError("monomial2 needs 'gens'");
    std::vector<Exponent> gens;
    for (const auto& g : j.at("gens")) {
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
          !g[1].is_number_integer())
        throw InputError("monomial generators must be [p, q] integer pairs");
      gens.push_back({g[0].get<Degree>(), g[1].get<Degree>()});
    }
    return minimalize(std::move(gens));
  }
  if (type == "betti") return betti_from_json(j);
  throw InputError("unknown input type '" + type + "'");
}

std::vector<InputObject> parse_inputs(const json& j) {
  std::vector<InputObject> out;
  if (j.is_array())
    for (const auto& item : j) out.push_back(parse_input(item));
  else
    out.push_back(parse_input(j));
  return out;
}

json to_json(const SweepReport& report) {
  json checks = json::array();
  for (const auto& name : all_checks(report.config.family))
    if (report.config.checks.count(name)) checks.push_back(name);

  json anomalies = json::array();
  for (const auto& a : report.anomalies)
    anomalies.push_back({{"instance", to_json(a.instance)},
                         {"check", a.check},
                         {"lhs", integer_json(a.lhs)},
                         {"rhs", integer_json(a.rhs)},
                         {"detail", a.detail}});

  json sharp = json::array();
  for (const auto& s : report.sharp_cases) sharp.push_back(to_json(s));

  json j = {{"family", to_string(report.config.family)},
            {"t_max", report.config.t_max},
            {"entry_max", report.config.entry_max},
            {"checks", checks},
            {"instances_checked", report.instances_checked},
            {"extensions_checked", report.extensions_checked},
            {"pure_instances", report.pure_instances},
            {"anomaly_count", report.anomalies.size()},
            {"anomalies", anomalies},
            {"sharp_cases", sharp}};

  if (report.config.family == Family::cm2) {
    json findings = json::array();
    std::size_t under_hypothesis = 0;
    for (const auto& f : report.entry_bound_findings) {
      if (f.result.hypothesis()) ++under_hypothesis;
      findings.push_back({{"instance", to_json(f.instance)},
                          {"all_entries_at_least_two", f.result.all_entries_at_least_two},
                          {"corner_condition", f.result.corner_condition},
                          {"corner_value", f.result.corner_value},
                          {"bound", to_json(f.result.bound)}});
    }
    j["prop24_violations_under_hypothesis"] = under_hypothesis;
    j["prop24_findings"] = findings;
  } else {
    json findings = json::array();
    for (const auto& row : report.srinivasan_upper_findings) findings.push_back(to_json(row));
    j["srinivasan_upper_findings"] = findings;
  }
  return j;
}

json to_json(const HuntReport& report) {
  json candidates = json::array();
  for (const auto& row : report.candidates) candidates.push_back(to_json(row));
  return {{"target", to_string(report.target)},
          {"family", to_string(family_of(report.target))},
          {"t_max", report.t_max},
          {"entry_max", report.entry_max},
          {"require_hypothesis", report.require_hypothesis},
          {"instances_checked", report.instances_checked},
          {"candidate_count", report.candidates.size()},
          {"candidates", candidates}};
}

namespace {

std::string join(const std::vector<Degree>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string verdict_cell(const BoundVerdict& v) {
  if (v.sharp) return "sharp";
  return v.holds ? "holds" : "violated";
}

std::string shift_cell(const ShiftSummary& s, bool max, std::size_t i) {
  const auto& xs = max ? s.max : s.min;
  return i < xs.size() ? std::to_string(xs[i]) : "";
}

}  // namespace

std::string csv_header() {
  return "family,t,a,b,d,m1,m2,m3,M1,M2,M3,e,hhs_lower,hhs_upper,cm2_lower,cm2_upper,"
         "gor3_lower,gor3_upper,entry_bound,entry_hypothesis,srinivasan_lower,"
         "srinivasan_upper,pure,quasi_pure";
}

std::string csv_row(const InstanceRow& row) {
  const bool cm2 = row.instance.family == Family::cm2;
  std::vector<std::string> cells;
  cells.push_back(to_string(row.instance.family));
  cells.push_back(std::to_string(row.instance.a.size()));
  cells.push_back(join(row.instance.a, ';'));
  cells.push_back(join(row.instance.b, ';'));
  cells.push_back(row.instance.d ? std::to_string(*row.instance.d) : "");
  for (std::size_t i = 0; i < 3; ++i) cells.push_back(shift_cell(row.shifts, false, i));
  for (std::size_t i = 0; i < 3; ++i) cells.push_back(shift_cell(row.shifts, true, i));
  cells.push_back(row.e.str());
  cells.push_back(verdict_cell(row.hhs.lower));
  cells.push_back(verdict_cell(row.hhs.upper));
  cells.push_back(cm2 ? verdict_cell(row.refined.lower) : "");
  cells.push_back(cm2 ? verdict_cell(row.refined.upper) : "");
  cells.push_back(cm2 ? "" : verdict_cell(row.refined.lower));
  cells.push_back(cm2 ? "" : verdict_cell(row.refined.upper));
  cells.push_back(row.entry ? verdict_cell(row.entry->bound) : "");
  cells.push_back(row.entry ? (row.entry->hypothesis() ? "1" : "0") : "");
  cells.push_back(row.srinivasan ? verdict_cell(row.srinivasan->lower) : "");
  cells.push_back(row.srinivasan ? verdict_cell(row.srinivasan->upper) : "");
  cells.push_back(row.purity.pure ? "1" : "0");
  cells.push_back(row.purity.quasi_pure ? "1" : "0");

  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

}  // namespace multconj
