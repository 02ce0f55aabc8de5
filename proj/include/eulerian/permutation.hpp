#pragma once

/// Permutations of [n] in one-line notation and the per-permutation
/// statistics built on them: r-descents, r-ascents, r-excedances and
/// r-anti-excedances.
///
/// Every public accessor is 1-indexed, so `p(i)` reads the same as the
/// usual sigma(i). Storage is a plain vector underneath.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eulerian/error.hpp"

namespace eulerian {

inline constexpr int kDefaultEnumerationBound = 11;

class Permutation;

namespace detail {
std::vector<int>& mutable_word(Permutation& p);
}

class Permutation {
 public:
  /// Validates that `values` is a rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidPermutation("permutation must be nonempty");
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n) {
        throw InvalidPermutation("entry " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidPermutation("duplicate entry " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n) {
    if (n < 1) throw InvalidPermutation("permutation must be nonempty");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(values_.size()); }

  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const {
    if (i < 1 || i > size()) throw PreconditionViolation("position out of range");
    return (*this)(i);
  }

  int first() const { return values_.front(); }
  int last() const { return values_.back(); }

  /// Position i with sigma(i) = value.
  int position_of(int value) const {
    auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end()) throw PreconditionViolation("value not present");
    return static_cast<int>(it - values_.begin()) + 1;
  }

  std::span<const int> word() const { return values_; }

  /// Digits concatenated when n <= 9 ("51283647"), comma separated otherwise.
  std::string to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend std::vector<int>& detail::mutable_word(Permutation& p);
  std::vector<int> values_;
};

namespace detail {
inline std::vector<int>& mutable_word(Permutation& p) { return p.values_; }
}  // namespace detail

/// Parses "51283647" (single digits, n <= 9) or "5,1,2,8" style words.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("invalid permutation word '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(start, end - start);
      if (tok.empty() || tok.size() > 9 ||
          !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("invalid permutation word '" + std::string(text) + "'");
      }
      values.push_back(std::stoi(std::string(tok)));
      start = end + 1;
    }
  }
  return Permutation(std::move(values));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(q));
}

// ---------------------------------------------------------------------------
// Statistics

enum class StatFamily { descent, ascent, excedance, anti_excedance };

inline const char* to_string(StatFamily f) {
  switch (f) {
    case StatFamily::descent: return "descent";
    case StatFamily::ascent: return "ascent";
    case StatFamily::excedance: return "excedance";
    case StatFamily::anti_excedance: return "anti_excedance";
  }
  return "?";
}

inline StatFamily parse_stat_family(std::string_view s) {
  if (s == "descent") return StatFamily::descent;
  if (s == "ascent") return StatFamily::ascent;
  if (s == "excedance") return StatFamily::excedance;
  if (s == "anti_excedance" || s == "anti-excedance") return StatFamily::anti_excedance;
  throw ParseError("unknown statistic '" + std::string(s) + "'");
}

/// A statistic family together with its threshold r >= 1. A plain descent is
/// `StatKind::descent(1)`, a big descent is `StatKind::descent(2)`.
class StatKind {
 public:
  StatKind(StatFamily family, int r) : family_(family), r_(r) {
    if (r < 1) throw PreconditionViolation("statistic threshold r must be >= 1");
  }
  static StatKind descent(int r = 1) { return {StatFamily::descent, r}; }
  static StatKind ascent(int r = 1) { return {StatFamily::ascent, r}; }
  static StatKind excedance(int r = 1) { return {StatFamily::excedance, r}; }
  static StatKind anti_excedance(int r = 1) { return {StatFamily::anti_excedance, r}; }

  StatFamily family() const { return family_; }
  int r() const { return r_; }

  friend bool operator==(const StatKind&, const StatKind&) = default;

 private:
  StatFamily family_;
  int r_;
};

namespace detail {

// Position i is 1-based; `w` is the 0-based word.
inline bool stat_holds(std::span<const int> w, StatKind s, std::size_t i) {
  const int r = s.r();
  const int pos = static_cast<int>(i) + 1;
  switch (s.family()) {
    case StatFamily::descent: return w[i] >= w[i + 1] + r;
    case StatFamily::ascent: return w[i] + r <= w[i + 1];
    case StatFamily::excedance: return w[i] >= pos + r;
    case StatFamily::anti_excedance: return w[i] <= pos - r;
  }
  return false;
}

// Descent-like families scan positions 1..n-1, excedance-like 1..n.
inline std::size_t stat_scan_length(std::size_t n, StatFamily f) {
  return (f == StatFamily::descent || f == StatFamily::ascent) ? n - 1 : n;
}

}  // namespace detail

inline int count_stat(std::span<const int> word, StatKind s) {
  int count = 0;
  const std::size_t len = detail::stat_scan_length(word.size(), s.family());
  for (std::size_t i = 0; i < len; ++i) count += detail::stat_holds(word, s, i) ? 1 : 0;
  return count;
}

inline int count_stat(const Permutation& p, StatKind s) { return count_stat(p.word(), s); }

/// Sorted 1-based positions at which the statistic holds.
inline std::vector<int> positions_stat(const Permutation& p, StatKind s) {
  std::vector<int> out;
  const auto w = p.word();
  const std::size_t len = detail::stat_scan_length(w.size(), s.family());
  for (std::size_t i = 0; i < len; ++i) {
    if (detail::stat_holds(w, s, i)) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

inline int descents(const Permutation& p, int r = 1) { return count_stat(p, StatKind::descent(r)); }
inline int excedances(const Permutation& p, int r = 1) {
  return count_stat(p, StatKind::excedance(r));
}

/// Cyclic rotation of the one-line word so that `value` lands at position n.
inline Permutation rotate_to_end(const Permutation& p, int value) {
  if (value < 1 || value > p.size()) {
    throw PreconditionViolation("rotate_to_end: value " + std::to_string(value) + " out of range");
  }
  const auto w = p.word();
  const auto pos = static_cast<std::size_t>(p.position_of(value));  // 1-based
  std::vector<int> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pos % w.size()), out.end());
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

inline void check_enumeration_bound(int n, int bound, const char* what) {
  if (n < 1) throw PreconditionViolation(std::string(what) + ": n must be >= 1");
  if (n > bound) {
    throw BoundExceeded(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(bound));
  }
}

/// Visits every permutation of [n] whose first entry is `first`, in
/// lexicographic order. The permutation object is reused between calls.
template <class Visit>
void for_each_permutation_with_first(int n, int first, Visit&& visit,
                                     int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_permutations");
  if (first < 1 || first > n) throw PreconditionViolation("first element out of range");
  Permutation p = Permutation::identity(n);
  auto& w = detail::mutable_word(p);
  w.erase(w.begin() + (first - 1));
  w.insert(w.begin(), first);
  do {
    visit(std::as_const(p));
  } while (std::next_permutation(w.begin(), w.end()) && w.front() == first);
}

/// Visits all n! permutations of [n] once each, lexicographically.
template <class Visit>
void for_each_permutation(int n, Visit&& visit, int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_permutations");
  for (int first = 1; first <= n; ++first) for_each_permutation_with_first(n, first, visit, bound);
}

inline std::vector<Permutation> enumerate_permutations(int n, int bound = kDefaultEnumerationBound) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, bound);
  return out;
}

/// Folds `visit(acc, p)` over S_n using up to `jobs` threads. The work is
/// split into n partitions by first element; partition accumulators are
/// merged with `+=` in partition order, so the result does not depend on
/// `jobs`.
template <class Acc, class Visit>
Acc fold_permutations(int n, int jobs, const Acc& zero, Visit visit,
                      int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_permutations");
  std::vector<Acc> parts(static_cast<std::size_t>(n), zero);
  auto run = [&](int first) {
    Acc& acc = parts[static_cast<std::size_t>(first - 1)];
    for_each_permutation_with_first(n, first, [&](const Permutation& p) { visit(acc, p); }, bound);
  };
  const int workers = std::clamp(jobs, 1, n);
  if (workers == 1) {
    for (int first = 1; first <= n; ++first) run(first);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (int first = t + 1; first <= n; first += workers) run(first);
      });
    }
  }
  Acc out = zero;
  for (auto& part : parts) out += part;
  return out;
}

}  // namespace eulerian
