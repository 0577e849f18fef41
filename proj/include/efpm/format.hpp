#pragma once

#include <string>

namespace efpm {

// Locale-independent number rendering shared by every text output.

/// Fixed notation with `decimals` digits after the point. Negative zero
/// prints as zero; non-finite values print as "nan", "inf" or "-inf".
std::string format_fixed(double value, int decimals);

/// Shortest text that parses back to exactly `value`.
std::string format_shortest(double value);

}  // namespace efpm
