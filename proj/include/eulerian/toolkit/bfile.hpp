#pragma once

// OEIS b-file ingestion: one "index value" pair per line, '#' comments.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/count_table.hpp"
#include "eulerian/report.hpp"

namespace eulerian::toolkit {

struct BFileSequence {
  long long offset = 0;
  std::vector<BigInt> values;
  std::string source_id;
};

inline BFileSequence parse_bfile(std::string_view text, std::string source_id = {}) {
  BFileSequence out;
  out.source_id = std::move(source_id);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    }
    long long index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": bad index '" + index_text + "'");
    }
    BigInt value;
    try {
      value = parse_decimal(value_text);
    } catch (const ParseError&) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": bad value '" + value_text + "'");
    }
    if (first) {
      out.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": non-contiguous index " +
                       std::to_string(index) + " (expected " + std::to_string(expected) + ")");
    }
    ++expected;
    out.values.push_back(std::move(value));
  }
  return out;
}

/// "b120434.txt" -> "A120434"; other names are used verbatim.
inline std::string source_id_from_path(const std::filesystem::path& path) {
  const auto stem = path.stem().string();
  if (stem.size() == 7 && stem[0] == 'b') return "A" + stem.substr(1);
  return stem;
}

inline BFileSequence load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open b-file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str(), source_id_from_path(path));
}

inline std::string to_bfile(const std::vector<BigInt>& values, long long offset,
                            std::string_view header = {}) {
  std::string out;
  if (!header.empty()) out += "# " + std::string(header) + "\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(offset + static_cast<long long>(i)) + " " + to_decimal(values[i]) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reading a table as a flat sequence

/// Natural column range [lo, hi] of the last index for a row. Cells inside
/// the range are dense (zero-filled); cells outside are not part of the row.
///   eulerian      m   in 0..n-1
///   last_element  k   in 1..n
///   tree_R        x   in 1..n-1
///   tree_T        ell in 2..max(2, n-1)
inline std::pair<int, int> column_extent(TableKind kind, int n) {
  switch (kind) {
    case TableKind::eulerian: return {0, n - 1};
    case TableKind::last_element: return {1, n};
    case TableKind::tree_R: return {1, n - 1};
    case TableKind::tree_T: return {2, std::max(2, n - 1)};
  }
  return {0, -1};
}

/// Row keys (every index but the last) in row-major order. For the two-index
/// kinds every n between the smallest and largest present row is emitted,
/// so an all-zero row still occupies its place in the read.
inline std::vector<Index> row_keys(const CountTable& t) {
  const auto a = arity(t.kind());
  std::vector<Index> keys;
  for (const auto& [idx, _] : t.entries()) {
    Index key = idx;
    key[a - 1] = 0;
    if (keys.empty() || keys.back() != key) keys.push_back(key);
  }
  if (!keys.empty() && a == 2) {
    std::vector<Index> dense;
    for (int n = keys.front()[0]; n <= keys.back()[0]; ++n) dense.push_back({n, 0, 0, 0});
    return dense;
  }
  return keys;
}

struct ReadOrder {
  int n_min = 1;
  int n_max = 1'000'000;
};

/// Row-major dense read of the table over rows with n_min <= n <= n_max.
inline std::vector<BigInt> read_row_major(const CountTable& t, const ReadOrder& order) {
  const auto a = arity(t.kind());
  std::vector<BigInt> out;
  for (const auto& key : row_keys(t)) {
    if (key[0] < order.n_min || key[0] > order.n_max) continue;
    const auto [lo, hi] = column_extent(t.kind(), key[0]);
    for (int c = lo; c <= hi; ++c) {
      Index idx = key;
      idx[a - 1] = c;
      out.push_back(t.get(idx));
    }
  }
  return out;
}

/// Element-wise comparison of the table's row-major read against a
/// reference sequence, up to the shorter length. A FAIL carries the first
/// mismatching sequence position.
inline VerificationReport crosscheck_sequence(const CountTable& table, const ReadOrder& order,
                                              const BFileSequence& ref) {
  const auto start = std::chrono::steady_clock::now();
  const auto ours = read_row_major(table, order);
  const auto overlap = std::min(ours.size(), ref.values.size());
  if (overlap == 0) throw PreconditionViolation("crosscheck_sequence: empty overlap");
  VerificationReport rep;
  rep.subject = "crosscheck:" + (ref.source_id.empty() ? std::string("sequence") : ref.source_id);
  rep.ranges = std::string(to_string(table.kind())) + " rows n=" + std::to_string(order.n_min) +
               ".." + (order.n_max >= 1'000'000 ? std::string("max") : std::to_string(order.n_max)) +
               ", overlap " + std::to_string(overlap);
  rep.lhs_label = "table (row-major)";
  rep.rhs_label = "reference";
  for (std::size_t i = 0; i < overlap; ++i) {
    ++rep.tuples_checked;
    if (ours[i] != ref.values[i]) {
      rep.verdict = Verdict::fail;
      Counterexample cx;
      cx.at = {{"index", ref.offset + static_cast<long long>(i)}};
      cx.lhs = ours[i];
      cx.rhs = ref.values[i];
      rep.counterexample = std::move(cx);
      break;
    }
  }
  rep.wall_time = std::chrono::steady_clock::now() - start;
  return rep;
}

}  // namespace eulerian::toolkit
