#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "eulerian/report.hpp"

namespace eulerian::toolkit {

inline std::string format_seconds(std::chrono::duration<double> d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", d.count());
  return buf;
}

inline std::string to_text(const VerificationReport& r) {
  std::string out = r.subject + ": " + to_string(r.verdict) + "  (" + std::to_string(r.tuples_checked) +
                    " tuples, " + r.ranges + ", " + format_seconds(r.wall_time) + ")\n";
  out += "  lhs: " + r.lhs_label + "\n";
  out += "  rhs: " + r.rhs_label + "\n";
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    out += "  counterexample " + cx.labels_string() + " = " + cx.tuple_string() + ": " +
           to_decimal(cx.lhs) + " != " + to_decimal(cx.rhs);
    if (cx.revalidated) {
      out += *cx.revalidated ? "  [re-validated by direct enumeration]"
                             : "  [RE-VALIDATION FAILED: direct enumeration gave " +
                                   to_decimal(cx.revalidated_lhs) + " vs " +
                                   to_decimal(cx.revalidated_rhs) + "]";
    }
    out += "\n";
  }
  for (const auto& note : r.notes) out += "  note: " + note + "\n";
  return out;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j{{"subject", r.subject},
                   {"verdict", to_string(r.verdict)},
                   {"ranges", r.ranges},
                   {"lhs", r.lhs_label},
                   {"rhs", r.rhs_label},
                   {"tuples_checked", r.tuples_checked},
                   {"wall_time_s", r.wall_time.count()},
                   {"notes", r.notes}};
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    nlohmann::json at = nlohmann::json::object();
    for (const auto& [name, v] : cx.at) at[name] = v;
    j["counterexample"] = {{"at", at},
                           {"order", cx.labels_string()},
                           {"lhs", to_decimal(cx.lhs)},
                           {"rhs", to_decimal(cx.rhs)}};
    if (cx.revalidated) {
      j["counterexample"]["revalidated"] = *cx.revalidated;
      j["counterexample"]["revalidated_lhs"] = to_decimal(cx.revalidated_lhs);
      j["counterexample"]["revalidated_rhs"] = to_decimal(cx.revalidated_rhs);
    }
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace eulerian::toolkit
