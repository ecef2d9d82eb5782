#pragma once

#include <string>

namespace chipcost {

/// Shortest round-trip decimal form of a double; locale-independent, so
/// CSV output is byte-stable across runs and machines.
std::string format_number(double value);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace chipcost
