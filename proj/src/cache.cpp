#include "gengraph/cache.hpp"

#include <algorithm>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gengraph/errors.hpp"

namespace fs = std::filesystem;

namespace gengraph {

namespace {

std::string fnv_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string timestamp() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec)
    throw io_error("cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string ResultCache::path_for(const std::string& key) const {
  return dir_ + "/" + fnv_hex(key) + ".json";
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // corrupt entry: treat as a miss
  }
  if (j.value("key", std::string()) != key) return std::nullopt;
  return j.value("payload", std::string());
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
  const nlohmann::json j{
      {"key", key}, {"created_at", timestamp()}, {"payload", payload}};
  const std::string final_path = path_for(key);
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) throw io_error("cannot write cache file " + tmp_path);
    out << j.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp_path, final_path, ec);
  if (ec) throw io_error("cannot finalize cache file " + final_path + ": " + ec.message());
}

ResultCache::Stats ResultCache::stats() const {
  Stats s;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    ++s.entries;
    s.bytes += entry.file_size();
  }
  return s;
}

size_t ResultCache::clear() const {
  size_t removed = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::error_code ec;
    if (fs::remove(entry.path(), ec)) ++removed;
  }
  return removed;
}

std::vector<ResultCache::Entry> ResultCache::entries() const {
  std::vector<Entry> out;
  for (const auto& file : fs::directory_iterator(dir_)) {
    if (!file.is_regular_file() || file.path().extension() != ".json") continue;
    std::ifstream in(file.path());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception&) {
      continue;
    }
    out.push_back({j.value("key", std::string()), j.value("payload", std::string())});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });
  return out;
}

}  // namespace gengraph
