#pragma once

#include <string>

namespace qwalk {

/// 17 significant digits; negative zero printed as 0.
std::string format_double(double v);
/// Fixed-point with the given number of decimals; negative zero removed.
std::string format_fixed(double v, int decimals);

/// Write to path via a sibling temp file and rename; "-" or empty writes
/// to stdout.
void write_output(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace qwalk
