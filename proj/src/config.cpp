#include "gengraph/config.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "gengraph/errors.hpp"

namespace gengraph {

int Caps::resolved_threads() const {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Caps load_caps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("config file " + path + ": " + e.what());
  }
  Caps caps;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "enumeration_cap") caps.enumeration_cap = it.value().get<int>();
    else if (key == "scan_cap") caps.scan_cap = it.value().get<int>();
    else if (key == "lattice_cap") caps.lattice_cap = it.value().get<long long>();
    else if (key == "lattice_hard_cap") caps.lattice_hard_cap = it.value().get<long long>();
    else if (key == "connectivity_cap") caps.connectivity_cap = it.value().get<int>();
    else if (key == "circuit_cap") caps.circuit_cap = it.value().get<int>();
    else if (key == "threads") caps.threads = it.value().get<int>();
    else if (key == "degree_limit") caps.degree_limit = it.value().get<int>();
    else throw input_error("config file " + path + ": unknown key \"" + key + "\"");
  }
  return caps;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("GENGRAPH_CACHE_DIR"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::string(xdg) + "/gengraph";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/gengraph";
  return ".gengraph-cache";
}

}  // namespace gengraph
