#pragma once

// CSV and JSON renderings of CountTable. Counts are written as decimal
// strings in JSON so no consumer has to hold them in a fixed-width integer.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "eulerian/count_table.hpp"
#include "eulerian/toolkit/bfile.hpp"

namespace eulerian::toolkit {

using json = nlohmann::json;

enum class Format { csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ParseError("unknown format '" + std::string(s) + "' (expected csv or json)");
}

/// Dense row-major CSV. One row per row key (all indices but the last);
/// one column per value of the last index over the union of the rows'
/// natural extents. Cells outside a row's extent are left empty.
inline std::string to_csv(const CountTable& t) {
  const auto names = index_names(t.kind());
  const auto a = names.size();
  const auto keys = row_keys(t);
  std::string out;
  for (std::size_t i = 0; i + 1 < a; ++i) out += (i ? "," : "") + names[i];
  if (keys.empty()) return out + "\n";
  int lo = column_extent(t.kind(), keys.front()[0]).first;
  int hi = column_extent(t.kind(), keys.front()[0]).second;
  for (const auto& key : keys) {
    const auto [l, h] = column_extent(t.kind(), key[0]);
    lo = std::min(lo, l);
    hi = std::max(hi, h);
  }
  for (int c = lo; c <= hi; ++c) out += "," + names[a - 1] + "=" + std::to_string(c);
  out += "\n";
  for (const auto& key : keys) {
    for (std::size_t i = 0; i + 1 < a; ++i) out += (i ? "," : "") + std::to_string(key[i]);
    const auto [l, h] = column_extent(t.kind(), key[0]);
    for (int c = lo; c <= hi; ++c) {
      out += ",";
      if (c < l || c > h) continue;
      Index idx = key;
      idx[a - 1] = c;
      out += to_decimal(t.get(idx));
    }
    out += "\n";
  }
  return out;
}

/// {kind, method, params, entries: [{<index>: int, ..., value: "decimal"}]}
/// with one entry per nonzero cell.
inline json to_json(const CountTable& t) {
  const auto names = index_names(t.kind());
  json params = json::object();
  if (t.family()) params["statistic"] = to_string(*t.family());
  if (!t.entries().empty()) {
    params["n_min"] = t.entries().begin()->first[0];
    params["n_max"] = t.entries().rbegin()->first[0];
  }
  json entries = json::array();
  for (const auto& [idx, v] : t.entries()) {
    json e = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) e[names[i]] = idx[i];
    e["value"] = to_decimal(v);
    entries.push_back(std::move(e));
  }
  return json{{"kind", to_string(t.kind())},
              {"method", to_string(t.method())},
              {"params", std::move(params)},
              {"entries", std::move(entries)}};
}

inline CountTable table_from_json(const json& j) {
  try {
    const auto kind = parse_table_kind(j.at("kind").get<std::string>());
    const auto method = parse_method(j.at("method").get<std::string>());
    std::optional<StatFamily> family;
    if (j.at("params").contains("statistic")) {
      family = parse_stat_family(j.at("params").at("statistic").get<std::string>());
    }
    CountTable t(kind, method, family);
    const auto names = index_names(kind);
    for (const auto& e : j.at("entries")) {
      Index idx{0, 0, 0, 0};
      for (std::size_t i = 0; i < names.size(); ++i) idx[i] = e.at(names[i]).get<int>();
      t.set(idx, parse_decimal(e.at("value").get<std::string>()));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  }
}

inline std::string render(const CountTable& t, Format f) {
  return f == Format::csv ? to_csv(t) : to_json(t).dump(2) + "\n";
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Writes to `destination`, or to `fallback` when destination is "-" or empty.
inline void export_table(const CountTable& t, Format f, const std::string& destination,
                         std::ostream& fallback = std::cout) {
  const auto text = render(t, f);
  if (destination.empty() || destination == "-") {
    fallback << text;
  } else {
    write_text(destination, text);
  }
}

}  // namespace eulerian::toolkit
