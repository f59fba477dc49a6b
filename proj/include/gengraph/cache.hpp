#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gengraph {

// Persistent result cache: one JSON file per entry under a cache directory.
// Keys embed the code version, so results never survive algorithm changes.
// Writes are atomic (temp file + rename).
class ResultCache {
public:
  explicit ResultCache(std::string dir);

  const std::string& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;

  struct Stats {
    size_t entries = 0;
    uint64_t bytes = 0;
  };
  Stats stats() const;
  size_t clear() const;

  struct Entry {
    std::string key;
    std::string payload;
  };
  std::vector<Entry> entries() const;  // sorted by key

private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace gengraph
