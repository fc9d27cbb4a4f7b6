// multconj: multiplicities, bounds and exhaustive sweeps for codimension-2
// Cohen-Macaulay and codimension-3 Gorenstein degree matrices.
//
// Exit status: 0 success, 1 anomaly / route disagreement / hunt hit,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multconj/betti.hpp"
#include "multconj/bounds.hpp"
#include "multconj/cm2.hpp"
#include "multconj/error.hpp"
#include "multconj/gor3.hpp"
#include "multconj/oracle.hpp"
#include "multconj/report.hpp"
#include "multconj/sweep.hpp"

using namespace multconj;

namespace {

constexpr int kOk = 0;
constexpr int kAnomaly = 1;
constexpr int kInvalid = 2;

struct Options {
  bool cm2 = false;
  bool gor3 = false;
  std::vector<Degree> a;
  std::vector<Degree> b;
  std::optional<Degree> d;
  std::string input;
  std::string format = "text";
  std::string out;
  int t_max = 1;
  Degree entry_max = 1;
  unsigned jobs = 1;
  std::string target;
  bool require_hypothesis = false;
};

std::vector<InputObject> read_inputs(const Options& opt) {
  if (!opt.input.empty()) {
    if (opt.cm2 || opt.gor3)
      throw InputError("--input cannot be combined with --cm2/--gor3");
    std::ifstream in(opt.input);
    if (!in) throw InputError("cannot open " + opt.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& ex) {
      throw InputError(std::string("bad JSON in ") + opt.input + ": " + ex.what());
    }
    return parse_inputs(j);
  }
  if (opt.cm2 == opt.gor3) throw InputError("choose exactly one of --cm2, --gor3 or --input");
  if (opt.cm2) {
    if (opt.d) throw InputError("--d only applies to --gor3");
    return {DegreeMatrixCM2::validate(opt.a, opt.b)};
  }
  if (!opt.d) throw InputError("--gor3 needs --d");
  return {DegreeMatrixGor3::validate(opt.a, opt.b, *opt.d)};
}

std::string yes_no(bool x) { return x ? "yes" : "no"; }

std::string verdict_line(const BoundVerdict& v) {
  std::ostringstream os;
  os << v.name << ": " << v.lhs << " <= " << v.rhs << " (x" << v.denominator << ") "
     << (v.sharp ? "sharp" : v.holds ? "holds" : "VIOLATED");
  return os.str();
}

std::string join(const std::vector<Degree>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

using Routes = std::vector<std::pair<std::string, Integer>>;

Routes routes_of(const DegreeMatrixCM2& A) {
  return {{"uv", multiplicity_uv(A)},
          {"betti", multiplicity(betti_table(A))},
          {"staircase", colength(witness_monomial_ideal(A))}};
}

Routes routes_of(const DegreeMatrixGor3& G) {
  return {{"pfaffian", multiplicity_pfaffian(G)},
          {"betti", multiplicity(betti_table(G))},
          {"linkage", linkage_multiplicity(G)}};
}

Routes routes_of(const MonomialStaircase& S) {
  return {{"staircase", colength(S)}, {"transposed", colength(transpose(S))}};
}

Routes routes_of(const BettiTable& table) {
  Routes r{{"betti", multiplicity(table)}};
  if (purity(table).pure && table.codim() == table.projective_dimension()) {
    const auto s = shift_summary(table);
    Integer product = 1, factorial = 1;
    for (std::size_t i = 0; i < s.min.size(); ++i) {
      product *= s.min[i];
      factorial *= static_cast<long>(i + 1);
    }
    if (product % factorial == 0) r.push_back({"huneke_miller", product / factorial});
  }
  return r;
}

bool agree(const Routes& r) {
  for (const auto& [name, value] : r)
    if (value != r.front().second) return false;
  return true;
}

std::string label_of(const InputObject& obj) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeMatrixCM2> || std::is_same_v<T, DegreeMatrixGor3>)
          return Instance::of(x).label();
        else
          return to_json(x).dump();
      },
      obj);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt, std::ostream& out) {
  const auto objects = read_inputs(opt);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& obj : objects)
      arr.push_back(std::visit([](const auto& x) { return to_json(x); }, obj));
    out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else {
    for (const auto& obj : objects) out << "valid: " << label_of(obj) << "\n";
  }
  return kOk;
}

void compute_text(const InputObject& obj, std::ostream& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeMatrixCM2> || std::is_same_v<T, DegreeMatrixGor3>) {
          const auto row = evaluate(x);
          out << row.instance.label() << "\n";
          const auto& s = row.shifts;
          for (std::size_t i = 0; i < s.min.size(); ++i)
            out << "m" << i + 1 << "=" << s.min[i] << " ";
          for (std::size_t i = 0; i < s.max.size(); ++i)
            out << "M" << i + 1 << "=" << s.max[i] << (i + 1 < s.max.size() ? " " : "\n");
          out << "e=" << row.e << "\n";
          out << "routes:";
          for (const auto& [name, value] : routes_of(x)) out << " " << name << "=" << value;
          out << "\n";
          out << "pure=" << yes_no(row.purity.pure)
              << " quasi_pure=" << yes_no(row.purity.quasi_pure) << "\n";
          out << verdict_line(row.hhs.lower) << "\n" << verdict_line(row.hhs.upper) << "\n";
          out << verdict_line(row.refined.lower) << "\n"
              << verdict_line(row.refined.upper) << "\n";
          if (row.entry) {
            out << verdict_line(row.entry->bound) << "\n";
            out << "entry_hypotheses: all_entries_at_least_two="
                << yes_no(row.entry->all_entries_at_least_two)
                << " corner_condition=" << yes_no(row.entry->corner_condition);
            if (x.t() >= 2) out << " (a1-2d+1=" << row.entry->corner_value << ")";
            out << "\n";
          }
          if (row.srinivasan) {
            out << verdict_line(row.srinivasan->lower) << "\n"
                << verdict_line(row.srinivasan->upper) << "\n";
          }
        } else if constexpr (std::is_same_v<T, MonomialStaircase>) {
          out << label_of(obj) << "\n";
          out << "colength=" << colength(x) << "\n";
        } else {
          out << label_of(obj) << "\n";
          const auto s = shift_summary(x);
          const auto p = purity(x);
          out << "m=" << join(s.min) << " M=" << join(s.max) << "\n";
          out << "e=" << multiplicity(x) << "\n";
          out << "pure=" << yes_no(p.pure) << " quasi_pure=" << yes_no(p.quasi_pure) << "\n";
          if (p.pure && x.codim() == x.projective_dimension())
            out << "huneke_miller=" << huneke_miller(x) << "\n";
          out << "genus_dim2=" << genus_dim2(x) << "\n";
        }
      },
      obj);
}

json compute_json(const InputObject& obj) {
  return std::visit(
      [&](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        json routes = json::object();
        for (const auto& [name, value] : routes_of(x)) routes[name] = integer_json(value);
        if constexpr (std::is_same_v<T, DegreeMatrixCM2> || std::is_same_v<T, DegreeMatrixGor3>) {
          json j = to_json(evaluate(x));
          j["routes"] = routes;
          return j;
        } else if constexpr (std::is_same_v<T, MonomialStaircase>) {
          return {{"input", to_json(x)}, {"colength", integer_json(colength(x))}};
        } else {
          const auto s = shift_summary(x);
          const auto p = purity(x);
          return {{"input", to_json(x)},
                  {"m", s.min},
                  {"M", s.max},
                  {"e", integer_json(multiplicity(x))},
                  {"pure", p.pure},
                  {"quasi_pure", p.quasi_pure},
                  {"genus_dim2", integer_json(genus_dim2(x))},
                  {"routes", routes}};
        }
      },
      obj);
}

int cmd_compute(const Options& opt, std::ostream& out) {
  const auto objects = read_inputs(opt);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& obj : objects) arr.push_back(compute_json(obj));
    out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << csv_header() << "\n";
    for (const auto& obj : objects) {
      if (const auto* A = std::get_if<DegreeMatrixCM2>(&obj)) out << csv_row(evaluate(*A)) << "\n";
      else if (const auto* G = std::get_if<DegreeMatrixGor3>(&obj))
        out << csv_row(evaluate(*G)) << "\n";
      else
        throw InputError("csv output only covers cm2/gor3 matrices");
    }
  } else {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (i) out << "\n";
      compute_text(objects[i], out);
    }
  }
  return kOk;
}

int cmd_oracle_check(const Options& opt, std::ostream& out) {
  const auto objects = read_inputs(opt);
  bool all_agree = true;
  json arr = json::array();
  if (opt.format == "csv") out << "input,routes,agree\n";
  for (const auto& obj : objects) {
    const auto routes = std::visit([](const auto& x) { return routes_of(x); }, obj);
    const bool ok = agree(routes);
    all_agree = all_agree && ok;
    if (opt.format == "json") {
      json r = json::object();
      for (const auto& [name, value] : routes) r[name] = integer_json(value);
      arr.push_back({{"input", label_of(obj)}, {"routes", r}, {"agree", ok}});
    } else if (opt.format == "csv") {
      std::string cells;
      for (const auto& [name, value] : routes)
        cells += (cells.empty() ? "" : ";") + name + "=" + value.str();
      out << "\"" << label_of(obj) << "\"," << cells << "," << (ok ? 1 : 0) << "\n";
    } else {
      out << label_of(obj) << ":";
      for (const auto& [name, value] : routes) out << " " << name << "=" << value;
      out << (ok ? " agree" : " DISAGREE") << "\n";
    }
  }
  if (opt.format == "json") out << arr.dump(2) << "\n";
  return all_agree ? kOk : kAnomaly;
}

SweepConfig sweep_config(const Options& opt, Family family) {
  if (opt.t_max < 0 || opt.entry_max < 0) throw InputError("--t-max and --entry-max must be >= 0");
  SweepConfig config;
  config.family = family;
  config.t_max = opt.t_max;
  config.entry_max = opt.entry_max;
  config.jobs = std::max(1u, opt.jobs);
  return config;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  if (opt.cm2 == opt.gor3) throw InputError("sweep needs exactly one of --cm2, --gor3");
  const auto config = sweep_config(opt, opt.cm2 ? Family::cm2 : Family::gor3);

  SweepReport report;
  if (opt.format == "csv") {
    out << csv_header() << "\n";
    report = verify_all(config, [&](const InstanceRow& row) { out << csv_row(row) << "\n"; });
  } else {
    report = verify_all(config);
  }

  if (opt.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (opt.format == "text") {
    out << "family: " << to_string(config.family) << "  t_max: " << config.t_max
        << "  entry_max: " << config.entry_max << "\n";
    out << "instances checked: " << report.instances_checked << "\n";
    out << "extensions checked: " << report.extensions_checked << "\n";
    out << "pure instances: " << report.pure_instances << "\n";
    out << "sharp cases: " << report.sharp_cases.size() << "\n";
    if (config.family == Family::cm2) {
      std::size_t under = 0;
      for (const auto& f : report.entry_bound_findings) under += f.result.hypothesis();
      out << "prop24 bound failures: " << report.entry_bound_findings.size()
          << " (under hypothesis: " << under << ")\n";
    } else {
      out << "srinivasan upper failures: " << report.srinivasan_upper_findings.size() << "\n";
    }
    out << "anomalies: " << report.anomalies.size() << "\n";
    for (const auto& a : report.anomalies)
      out << "  " << a.instance.label() << " [" << a.check << "] " << a.lhs << " vs " << a.rhs
          << ": " << a.detail << "\n";
  }
  std::cerr << "sweep finished in " << report.runtime_seconds << " s\n";
  return report.anomalies.empty() ? kOk : kAnomaly;
}

int cmd_hunt(const Options& opt, std::ostream& out) {
  const auto target = parse_target(opt.target);
  const auto config = sweep_config(opt, family_of(target));
  const auto report = hunt(target, config, opt.require_hypothesis);

  if (opt.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << csv_header() << "\n";
    for (const auto& row : report.candidates) out << csv_row(row) << "\n";
  } else {
    out << "target: " << to_string(report.target) << "  t_max: " << report.t_max
        << "  entry_max: " << report.entry_max
        << (report.require_hypothesis ? "  (hypothesis required)" : "") << "\n";
    out << "instances checked: " << report.instances_checked << "\n";
    out << "candidates: " << report.candidates.size() << "\n";
    for (const auto& row : report.candidates) out << "  " << row.instance.label() << " e=" << row.e << "\n";
  }
  return report.candidates.empty() ? kOk : kAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicity bounds for codimension-2 CM and codimension-3 Gorenstein algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_matrix_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--cm2", opt.cm2, "Codimension-2 Cohen-Macaulay degree matrix");
    cmd->add_flag("--gor3", opt.gor3, "Codimension-3 Gorenstein degree matrix");
    cmd->add_option("--a", opt.a, "Main diagonal a_1,...,a_t")->delimiter(',');
    cmd->add_option("--b", opt.b, "Superdiagonal b_1,...,b_t")->delimiter(',');
    cmd->add_option("--d", opt.d, "Center entry (gor3)");
    cmd->add_option("--input", opt.input, "JSON file with one input object or an array");
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out, "Write output to FILE instead of stdout");
  };
  auto add_range_flags = [&](CLI::App* cmd) {
    cmd->add_option("--t-max", opt.t_max, "Largest t")->required();
    cmd->add_option("--entry-max", opt.entry_max, "Bound on every a_i, b_i, d")->required();
    cmd->add_option("--jobs", opt.jobs, "Worker threads");
  };

  auto* validate = app.add_subcommand("validate", "Validate an input");
  add_matrix_flags(validate);
  add_output_flags(validate);
  auto* compute = app.add_subcommand("compute", "Shifts, multiplicity and bound verdicts");
  add_matrix_flags(compute);
  add_output_flags(compute);
  auto* oracle = app.add_subcommand("oracle-check", "Compare all multiplicity routes");
  add_matrix_flags(oracle);
  add_output_flags(oracle);
  auto* sweep = app.add_subcommand("sweep", "Exhaustive invariant verification");
  sweep->add_flag("--cm2", opt.cm2, "Sweep codimension-2 matrices");
  sweep->add_flag("--gor3", opt.gor3, "Sweep Gorenstein matrices");
  add_range_flags(sweep);
  add_output_flags(sweep);
  auto* hunt_cmd = app.add_subcommand("hunt", "Search a range for violations of an open bound");
  hunt_cmd->add_option("--target", opt.target, "srinivasan_upper_gor3 | prop24_bound")->required();
  hunt_cmd->add_flag("--require-hypothesis", opt.require_hypothesis,
                     "prop24_bound: only matrices satisfying one of its sufficient conditions");
  add_range_flags(hunt_cmd);
  add_output_flags(hunt_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return kInvalid;
    }
  }
  std::ostream& out = opt.out.empty() ? std::cout : file;

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (compute->parsed()) return cmd_compute(opt, out);
    if (oracle->parsed()) return cmd_oracle_check(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (hunt_cmd->parsed()) return cmd_hunt(opt, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "anomaly: " << e.what() << "\n";
    return kAnomaly;
  }
  return kInvalid;
}
