#pragma once

#include "eulerian/bigint.hpp"

namespace eulerian {

/// C(a, b) for integer a >= 0; zero when b < 0 or b > a.
inline BigInt binomial(long long a, long long b) {
  if (a < 0) throw PreconditionViolation("binomial: upper index must be >= 0");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;
  }
  return out;
}

}  // namespace eulerian
