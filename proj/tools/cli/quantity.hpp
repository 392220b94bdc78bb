#pragma once

// Numeric command-line values: unit-suffixed quantities, angle expressions and grids.

#include <string_view>
#include <vector>

namespace cavq::cli {

enum class Dimension { None, Length, Time, Frequency, Power };

/// "15cm", "980nm", "2.6us", "1kHz", "20W", "1e-18". Returns the SI value.
/// Throws std::invalid_argument on malformed text or a unit of the wrong dimension.
double parse_quantity(std::string_view text, Dimension dim);

/// Literal or pi-expression: "pi/2", "-3*pi/4", "2pi", "(pi+1)/2", "1.5e-3".
double parse_angle(std::string_view text);

/// "a:b:n" (n evenly spaced points, inclusive) or a comma list of angle expressions.
std::vector<double> parse_grid(std::string_view text);

/// Comma-separated positive integers, e.g. "10,100,1000".
std::vector<long long> parse_int_list(std::string_view text);

}  // namespace cavq::cli
