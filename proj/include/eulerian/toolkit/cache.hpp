#pragma once

// Single-file table cache. Layout (format_version 1):
//
//   {"format_version": 1,
//    "tables": [{"key": "<kind>:<n>:<r>[:<statistic>]", "table": <to_json>}, ...],
//    "checksum": "<crc32 of tables.dump(), 8 hex digits>"}

#include <boost/crc.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>

#include "eulerian/toolkit/export.hpp"

namespace eulerian::toolkit {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheEnvVar = "EULERIAN_LAB_CACHE";
inline constexpr const char* kDefaultCacheFile = "eulerian_lab.cache.json";

inline std::string cache_key(TableKind kind, int n, int r,
                             std::optional<StatFamily> family = std::nullopt) {
  std::string key = std::string(to_string(kind)) + ":" + std::to_string(n) + ":" + std::to_string(r);
  if (family) key += std::string(":") + to_string(*family);
  return key;
}

struct CacheFile {
  int format_version = kCacheFormatVersion;
  std::map<std::string, CountTable> tables;
};

inline std::string checksum_of(const std::string& payload) {
  boost::crc_32_type crc;
  crc.process_bytes(payload.data(), payload.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

inline std::string serialize_cache(const CacheFile& cache) {
  json tables = json::array();
  for (const auto& [key, t] : cache.tables) tables.push_back({{"key", key}, {"table", to_json(t)}});
  const auto payload = tables.dump();
  json doc{{"format_version", cache.format_version},
           {"tables", std::move(tables)},
           {"checksum", checksum_of(payload)}};
  return doc.dump() + "\n";
}

inline CacheFile deserialize_cache(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format_version") || !doc.contains("tables") ||
      !doc.contains("checksum")) {
    throw ParseError("cache is missing format_version, tables or checksum");
  }
  const int version = doc["format_version"].is_number_integer() ? doc["format_version"].get<int>() : -1;
  if (version != kCacheFormatVersion) {
    throw ParseError("cache format_version " + std::to_string(version) + " is not supported (expected " +
                     std::to_string(kCacheFormatVersion) + ")");
  }
  if (!doc["checksum"].is_string() || doc["checksum"].get<std::string>() != checksum_of(doc["tables"].dump())) {
    throw ParseError("cache checksum mismatch");
  }
  CacheFile cache;
  cache.format_version = version;
  for (const auto& entry : doc["tables"]) {
    if (!entry.contains("key") || !entry.contains("table")) throw ParseError("malformed cache entry");
    cache.tables.emplace(entry["key"].get<std::string>(), table_from_json(entry["table"]));
  }
  return cache;
}

inline void save_cache(const CacheFile& cache, const std::filesystem::path& path) {
  write_text(path, serialize_cache(cache));
}

inline CacheFile load_cache(const std::filesystem::path& path) {
  try {
    return deserialize_cache(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Explicit path, else $EULERIAN_LAB_CACHE, else the default file name.
inline std::filesystem::path resolve_cache_path(const std::string& explicit_path = {}) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  return kDefaultCacheFile;
}

}  // namespace eulerian::toolkit
