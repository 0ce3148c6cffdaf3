#include "sgs/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgs {

namespace fs = std::filesystem;

std::string catalog_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("SPECTRA_CATALOG_DIR"); env && *env) return env;
  return SGS_CATALOG_DIR;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> catalog_groups(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(catalog_dir(dir))) {
    if (e.is_regular_file() && e.path().extension() == ".json")
      out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutomatonSpec load_group(const std::string& id, const std::string& dir) {
  fs::path p = fs::path(catalog_dir(dir)) / (id + ".json");
  if (!fs::exists(p)) throw std::runtime_error("unknown group '" + id + "' (no file " + p.string() + ")");
  return parse_automaton(read_file(p.string()));
}

}  // namespace sgs
