#pragma once

#include <string>
#include <vector>

#include "sgs/automaton.hpp"

namespace sgs {

// Catalog resolution order: explicit dir argument, then SPECTRA_CATALOG_DIR,
// then the directory baked in at build time.
std::string catalog_dir(const std::string& override_dir = "");

std::vector<std::string> catalog_groups(const std::string& dir = "");

AutomatonSpec load_group(const std::string& id, const std::string& dir = "");

std::string read_file(const std::string& path);

}  // namespace sgs
