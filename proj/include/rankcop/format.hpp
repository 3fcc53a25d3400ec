#pragma once

#include <optional>
#include <string>

namespace rankcop {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

// Parses a finite double, requiring the whole string to be consumed.
std::optional<double> parse_double(const std::string& text);

}  // namespace rankcop
