#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace multconj {

/// Exact signed integer used for ranks, coefficients, multiplicities and
/// every cleared bound. Degrees and shifts stay machine-sized (Degree) since
/// they index polynomial coefficients.
using Integer = boost::multiprecision::cpp_int;
using Degree = std::int64_t;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace multconj
