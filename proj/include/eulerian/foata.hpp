#pragma once

// Foata's fundamental transformation: cut the one-line word before every
// left-to-right maximum and read each block as a cycle.

#include <algorithm>
#include <vector>

#include "eulerian/permutation.hpp"

namespace eulerian {

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;

  std::vector<int> concatenated() const {
    std::vector<int> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Blocks begin at every left-to-right record; the first block starts at
/// position 1.
inline BlockDecomposition record_blocks(const Permutation& p) {
  BlockDecomposition out;
  int record = 0;
  for (int v : p.word()) {
    if (v > record) {
      out.blocks.emplace_back();
      record = v;
    }
    out.blocks.back().push_back(v);
  }
  return out;
}

/// phi(a_{i,j}) = a_{i,j+1}, wrapping inside each record block.
inline Permutation foata_transform(const Permutation& p) {
  std::vector<int> phi(static_cast<std::size_t>(p.size()));
  for (const auto& block : record_blocks(p).blocks) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      phi[static_cast<std::size_t>(block[j] - 1)] = block[(j + 1) % block.size()];
    }
  }
  return Permutation(std::move(phi));
}

/// Cycles of p, each rotated to start at its maximum, ordered by increasing
/// maximum. Fixed points appear as singleton cycles.
inline std::vector<std::vector<int>> max_first_cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = p(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

/// Two-sided inverse of foata_transform: concatenate max_first_cycles.
inline Permutation foata_inverse(const Permutation& p) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& c : max_first_cycles(p)) word.insert(word.end(), c.begin(), c.end());
  return Permutation(std::move(word));
}

}  // namespace eulerian
