#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace drf {

// Exact arithmetic over Q. All dimension counts computed by the toolkit are
// field-independent in characteristic 0, so big-integer rationals are the
// whole scalar story: no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serialized form is "p/q", or just "p" when q = 1.
std::string format_rational(const Rat& r);

// Accepts "p" and "p/q" with optional leading '-'. Throws std::invalid_argument
// on anything else (including q = 0).
Rat parse_rational(const std::string& text);

} // namespace drf
