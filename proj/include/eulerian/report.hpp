#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/bigint.hpp"

namespace eulerian {

enum class Verdict { pass, fail };

inline const char* to_string(Verdict v) { return v == Verdict::pass ? "PASS" : "FAIL"; }

struct Counterexample {
  /// Named coordinates of the failing tuple, e.g. {{"n",4},{"ell",2}}.
  std::vector<std::pair<std::string, long long>> at;
  BigInt lhs;
  BigInt rhs;
  /// Set once both sides have been recomputed from scratch by direct
  /// enumeration; true when the recomputation reproduces the inequality.
  std::optional<bool> revalidated;
  BigInt revalidated_lhs;
  BigInt revalidated_rhs;

  std::string tuple_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(at[i].second);
    }
    return out + ")";
  }

  std::string labels_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (i > 0) out += ",";
      out += at[i].first;
    }
    return out + ")";
  }
};

struct VerificationReport {
  std::string subject;
  /// Human-readable description of the swept ranges.
  std::string ranges;
  std::string lhs_label;
  std::string rhs_label;
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> counterexample;
  std::size_t tuples_checked = 0;
  std::chrono::duration<double> wall_time{0};
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::pass; }
};

}  // namespace eulerian
