#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/permutation.hpp"

namespace eulerian {

/// What a table's index tuple means.
///   eulerian      (n, m)        A(n,m)
///   last_element  (n, r, m, k)  permutations of [n] with m r-statistics ending in k
///   tree_R        (n, ell, x)   R(n, ell, x)
///   tree_T        (n, ell)      T(n, ell)
enum class TableKind { eulerian, last_element, tree_R, tree_T };

enum class Method { enumeration, recurrence, closed_form };

inline const char* to_string(TableKind k) {
  switch (k) {
    case TableKind::eulerian: return "eulerian";
    case TableKind::last_element: return "last_element";
    case TableKind::tree_R: return "tree_R";
    case TableKind::tree_T: return "tree_T";
  }
  return "?";
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::enumeration: return "enumeration";
    case Method::recurrence: return "recurrence";
    case Method::closed_form: return "closed_form";
  }
  return "?";
}

inline TableKind parse_table_kind(std::string_view s) {
  if (s == "eulerian") return TableKind::eulerian;
  if (s == "last_element") return TableKind::last_element;
  if (s == "tree_R") return TableKind::tree_R;
  if (s == "tree_T") return TableKind::tree_T;
  throw ParseError("unknown table kind '" + std::string(s) + "'");
}

inline Method parse_method(std::string_view s) {
  if (s == "enumeration") return Method::enumeration;
  if (s == "recurrence") return Method::recurrence;
  if (s == "closed_form") return Method::closed_form;
  throw ParseError("unknown method '" + std::string(s) + "'");
}

inline std::vector<std::string> index_names(TableKind k) {
  switch (k) {
    case TableKind::eulerian: return {"n", "m"};
    case TableKind::last_element: return {"n", "r", "m", "k"};
    case TableKind::tree_R: return {"n", "ell", "x"};
    case TableKind::tree_T: return {"n", "ell"};
  }
  return {};
}

inline std::size_t arity(TableKind k) { return index_names(k).size(); }

/// Unused trailing slots are zero.
using Index = std::array<int, 4>;

/// Sparse table of exact nonnegative counts. Zero cells are not stored.
class CountTable {
 public:
  CountTable(TableKind kind, Method method, std::optional<StatFamily> family = std::nullopt)
      : kind_(kind), method_(method), family_(family) {}

  TableKind kind() const { return kind_; }
  Method method() const { return method_; }
  std::optional<StatFamily> family() const { return family_; }

  BigInt get(const Index& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  void set(const Index& idx, BigInt value) {
    if (value < 0) throw PreconditionViolation("CountTable: counts are nonnegative");
    if (value == 0) {
      entries_.erase(idx);
    } else {
      entries_[idx] = std::move(value);
    }
  }

  void add(const Index& idx, const BigInt& value) { set(idx, get(idx) + value); }

  const std::map<Index, BigInt>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& [_, v] : entries_) s += v;
    return s;
  }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  TableKind kind_;
  Method method_;
  std::optional<StatFamily> family_;
  std::map<Index, BigInt> entries_;
};

}  // namespace eulerian
