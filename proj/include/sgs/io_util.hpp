#pragma once

#include <string>

namespace sgs {

// Shortest round-trip decimal rendering ("%.17g" trimmed); stable across runs.
std::string fmt_double(double v);

// Write via temp file + rename so readers never observe partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace sgs
