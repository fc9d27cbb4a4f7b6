#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "multconj/betti.hpp"
#include "multconj/bounds.hpp"
#include "multconj/cm2.hpp"
#include "multconj/gor3.hpp"
#include "multconj/oracle.hpp"
#include "multconj/sweep.hpp"

namespace multconj {

using json = nlohmann::ordered_json;

/// Anything the CLI accepts as input.
using InputObject = std::variant<DegreeMatrixCM2, DegreeMatrixGor3, MonomialStaircase, BettiTable>;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_json(const Integer& value);

json to_json(const DegreeMatrixCM2& A);
json to_json(const DegreeMatrixGor3& G);
json to_json(const MonomialStaircase& S);
json to_json(const BettiTable& table);
json to_json(const Instance& instance);
json to_json(const BoundVerdict& verdict);
json to_json(const InstanceRow& row);

/// Dispatches on "type" (cm2, gor3, monomial2, betti); an object without
/// "type" but with "steps" is read as a Betti table. Throws InputError.
InputObject parse_input(const json& j);
/// One object or an array of objects.
std::vector<InputObject> parse_inputs(const json& j);

BettiTable betti_from_json(const json& j);

/// Summary, anomalies, sharp cases and findings. Runtime is left out so the
/// output only depends on the configuration.
json to_json(const SweepReport& report);
json to_json(const HuntReport& report);

/// Fixed column set shared by sweep and hunt CSV output.
std::string csv_header();
std::string csv_row(const InstanceRow& row);

}  // namespace multconj
