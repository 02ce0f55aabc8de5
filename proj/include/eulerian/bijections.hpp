#pragma once

/// The constructive maps relating r-descents, r-excedances and the last
/// entry of a permutation. Each map checks its domain eagerly and throws
/// PreconditionViolation instead of returning a meaningless permutation.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/foata.hpp"
#include "eulerian/permutation.hpp"

namespace eulerian {

struct MapDescriptor {
  std::string_view name;
  std::string_view domain;
  std::string_view codomain;
};

inline std::span<const MapDescriptor> map_registry() {
  static constexpr std::array<MapDescriptor, 6> kMaps{{
      {"exc_to_desc", "any p in S_n; m r-excedances, last entry k",
       "S_n; m r-descents, last entry k"},
      {"desc_to_exc", "any p in S_n; m r-descents, last entry k",
       "S_n; m r-excedances, last entry k"},
      {"rotate_small_last", "p(n) <= r; m r-descents", "rotation ending in k2 <= r; m r-descents"},
      {"shift_to_n", "p(n) = 1; m (r+1)-excedances", "phi(n) = n; m r-excedances"},
      {"remove_max_at", "p(i) = n", "S_{n-1}; last entry and r-excedances kept when i > n-r"},
      {"relabel_one_to_n", "any p in S_n",
       "value 1 becomes n, others decrement; last entry k >= 2 becomes k-1"},
  }};
  return kMaps;
}

/// Writes the inverse of p in cycle form (largest first, cycles by increasing
/// maximum) and drops the brackets, i.e. foata_inverse(inverse(p)). Keeps the
/// last entry and sends r-excedances of p to r-descents of the image, for
/// every r. Example: 6214573 -> 2457613.
inline Permutation exc_to_desc(const Permutation& p) { return foata_inverse(inverse(p)); }

inline Permutation desc_to_exc(const Permutation& p) { return inverse(foata_transform(p)); }

/// Rotates p (whose last entry is at most r) so that it ends in k2 <= r.
/// Neither cut point can straddle an r-descent, so the count is preserved.
inline Permutation rotate_small_last(const Permutation& p, int r, int k2) {
  if (r < 1) throw PreconditionViolation("rotate_small_last: r must be >= 1");
  if (p.last() > r) {
    throw PreconditionViolation("rotate_small_last: last entry " + std::to_string(p.last()) +
                                " exceeds r=" + std::to_string(r));
  }
  if (k2 < 1 || k2 > r || k2 > p.size()) {
    throw PreconditionViolation("rotate_small_last: target " + std::to_string(k2) +
                                " must satisfy 1 <= k2 <= min(r, n)");
  }
  return rotate_to_end(p, k2);
}

/// phi(n) = n and phi(i) = p(i) - 1 otherwise; requires p(n) = 1. An
/// (r+1)-excedance of p at i is exactly an r-excedance of phi at i.
inline Permutation shift_to_n(const Permutation& p, int r) {
  if (r < 1) throw PreconditionViolation("shift_to_n: r must be >= 1");
  if (p.last() != 1) throw PreconditionViolation("shift_to_n: permutation must end in 1");
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(i - 1)] = p(i) - 1;
  out.back() = n;
  return Permutation(std::move(out));
}

/// Deletes the maximum n sitting at position i.
inline Permutation remove_max_at(const Permutation& p, int i) {
  const int n = p.size();
  if (n < 2) throw PreconditionViolation("remove_max_at: needs n >= 2");
  if (i < 1 || i > n || p(i) != n) {
    throw PreconditionViolation("remove_max_at: p(" + std::to_string(i) + ") is not n");
  }
  std::vector<int> out(p.word().begin(), p.word().end());
  out.erase(out.begin() + (i - 1));
  return Permutation(std::move(out));
}

/// 1 becomes n, every other value decrements; positions are unchanged.
inline Permutation relabel_one_to_n(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(p.word().begin(), p.word().end());
  for (int& v : out) v = (v == 1) ? n : v - 1;
  return Permutation(std::move(out));
}

}  // namespace eulerian
