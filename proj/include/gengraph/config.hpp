#pragma once

#include <string>

namespace gengraph {

inline constexpr const char* kVersion = "0.1.0";

// Degree bound of the internal permutation representation.
inline constexpr int kMaxSupportedDegree = 64;

// Resource caps for the exhaustive computations. One struct feeds every
// module so a single profile (file and/or flags) controls a whole run.
struct Caps {
  int enumeration_cap = 9;    // largest n for element enumeration / degree scans
  int scan_cap = 8;           // largest n for normalizer-by-scan
  long long lattice_cap = 10000;       // largest |G| for overgroup lattices
  long long lattice_hard_cap = 25000;  // overage allowed with a warning (Alt_8)
  int connectivity_cap = 7;   // largest n for connectivity BFS
  int circuit_cap = 5;        // largest n for Euler circuit construction
  int threads = 0;            // 0 = hardware concurrency
  int degree_limit = 24;      // largest permutation degree accepted in I/O

  int resolved_threads() const;
};

// Loads caps from a JSON file; unknown keys are rejected.
Caps load_caps_file(const std::string& path);

// Default cache directory: $GENGRAPH_CACHE_DIR, else $XDG_CACHE_HOME/gengraph,
// else ~/.cache/gengraph.
std::string default_cache_dir();

}  // namespace gengraph
