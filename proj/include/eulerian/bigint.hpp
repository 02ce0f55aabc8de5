#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "eulerian/error.hpp"

namespace eulerian {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Accepts an optional leading '-' followed by decimal digits only.
inline BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("invalid integer literal '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace eulerian
