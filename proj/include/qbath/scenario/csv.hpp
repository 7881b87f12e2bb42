#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qbath::csv {

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);
double parse_double(std::string_view s);

std::string join(const std::vector<std::string>& fields);
std::vector<std::string> split(std::string_view line);

}  // namespace qbath::csv
