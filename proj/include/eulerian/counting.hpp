#pragma once

/// Exact Eulerian-type counts by three independent routes: exhaustive
/// enumeration over S_n, recurrences, and closed forms.
///
/// Conventions: A(n,m) = 0 unless n >= 1 and 0 <= m <= n-1, with A(1,0) = 1.
/// A(n,m,k) additionally fixes the last entry k; A_r(n,m,k) counts
/// r-descents (or any other StatKind) instead of descents.

#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/binomial.hpp"
#include "eulerian/count_table.hpp"
#include "eulerian/permutation.hpp"
#include "eulerian/trees.hpp"

namespace eulerian {

// ---------------------------------------------------------------------------
// A(n, m)

/// Rows of the Euler triangle from A(n,m) = (n-m) A(n-1,m-1) + (m+1) A(n-1,m).
class EulerianRecurrence {
 public:
  BigInt operator()(int n, int m) {
    if (n < 1 || m < 0 || m > n - 1) return 0;
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
  }

  const std::vector<BigInt>& row(int n) {
    if (n < 1) throw PreconditionViolation("Eulerian row: n must be >= 1");
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)];
  }

 private:
  void extend_to(int n) {
    if (rows_.empty()) rows_ = {{}, {BigInt(1)}};
    for (int k = static_cast<int>(rows_.size()); k <= n; ++k) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(static_cast<std::size_t>(k));
      for (int m = 0; m < k; ++m) {
        BigInt v = 0;
        if (m >= 1) v += BigInt(k - m) * prev[static_cast<std::size_t>(m - 1)];
        if (m <= k - 2) v += BigInt(m + 1) * prev[static_cast<std::size_t>(m)];
        row[static_cast<std::size_t>(m)] = std::move(v);
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<std::vector<BigInt>> rows_;
};

inline CountTable eulerian_recurrence(int n_max) {
  if (n_max < 1) throw PreconditionViolation("eulerian_recurrence: n_max must be >= 1");
  EulerianRecurrence rec;
  CountTable out(TableKind::eulerian, Method::recurrence);
  for (int n = 1; n <= n_max; ++n) {
    const auto& row = rec.row(n);
    for (int m = 0; m < n; ++m) out.set({n, m, 0, 0}, row[static_cast<std::size_t>(m)]);
  }
  return out;
}

/// A(n,m) = sum_{k=0}^{m+1} (-1)^k C(n+1,k) (m+1-k)^n.
inline BigInt eulerian_closed_form(int n, int m) {
  if (n < 1) throw PreconditionViolation("eulerian_closed_form: n must be >= 1");
  if (m < 0 || m > n - 1) {
    throw PreconditionViolation("eulerian_closed_form: m must lie in 0..n-1");
  }
  BigInt s = 0;
  for (int k = 0; k <= m + 1; ++k) {
    BigInt term = binomial(n + 1, k) * ipow(BigInt(m + 1 - k), static_cast<unsigned>(n));
    s += (k % 2 == 0) ? term : BigInt(-term);
  }
  return s;
}

inline CountTable eulerian_closed_form_table(int n_max) {
  CountTable out(TableKind::eulerian, Method::closed_form);
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m < n; ++m) out.set({n, m, 0, 0}, eulerian_closed_form(n, m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Dense (statistic count, last entry) tally for one n; merged with +=.
class LastElementTally {
 public:
  explicit LastElementTally(int n)
      : n_(n), cells_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {}

  void record(int m, int k) { ++cells_[slot(m, k)]; }
  unsigned long long at(int m, int k) const { return cells_[slot(m, k)]; }
  int n() const { return n_; }

  LastElementTally& operator+=(const LastElementTally& other) {
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
    return *this;
  }

 private:
  std::size_t slot(int m, int k) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(k);
  }
  int n_;
  std::vector<unsigned long long> cells_;
};

/// Exhaustive tally over S_n of (count_stat(p, stat), p(n)). The table is
/// indexed (n, r, m, k) and carries the statistic family.
inline CountTable count_by_enumeration(int n, StatKind stat, int jobs = 1,
                                       int bound = kDefaultEnumerationBound) {
  const auto tally = fold_permutations(
      n, jobs, LastElementTally(n),
      [stat](LastElementTally& acc, const Permutation& p) {
        acc.record(count_stat(p, stat), p.last());
      },
      bound);
  CountTable out(TableKind::last_element, Method::enumeration, stat.family());
  for (int m = 0; m <= n; ++m) {
    for (int k = 1; k <= n; ++k) out.set({n, stat.r(), m, k}, tally.at(m, k));
  }
  return out;
}

/// A(n, .) for 1 <= n <= n_max, summing count_by_enumeration over k.
inline CountTable eulerian_by_enumeration(int n_max, int jobs = 1,
                                          int bound = kDefaultEnumerationBound) {
  CountTable out(TableKind::eulerian, Method::enumeration);
  for (int n = 1; n <= n_max; ++n) {
    const auto t = count_by_enumeration(n, StatKind::descent(1), jobs, bound);
    for (const auto& [idx, v] : t.entries()) out.add({n, idx[2], 0, 0}, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// A(n, m, k) without enumeration
//
// For 1 <= k < n the recursive-tree correspondence gives
// A(n,m,k) = R(n+1, m+1, k+1), evaluated through the R recurrence. The last
// column k = n is outside that correspondence (x = n+1 is not a tree label);
// there the final step is an ascent, so A(n,m,n) = A(n-1,m).

class LastElementRecurrence {
 public:
  BigInt operator()(int n, int m, int k) {
    if (n < 1) throw PreconditionViolation("A(n,m,k): n must be >= 1");
    if (k < 1 || k > n) throw PreconditionViolation("A(n,m,k): k must lie in 1..n");
    if (m < 0 || m > n - 1) return 0;
    if (n == 1) return 1;
    if (k == n) return eulerian_(n - 1, m);
    return trees_(n + 1, m + 1, k + 1);
  }

 private:
  RRecurrence trees_;
  EulerianRecurrence eulerian_;
};

inline BigInt a_nmk_recurrence(int n, int m, int k) {
  LastElementRecurrence rec;
  return rec(n, m, k);
}

// ---------------------------------------------------------------------------
// Polynomials

/// Exact coefficients, index = power of x, no trailing zeros.
struct PolyCoeffs {
  std::vector<BigInt> coefficients;

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }
  friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;
};

/// A_n(x) = sum_m A(n,m) x^m.
inline PolyCoeffs eulerian_polynomial(int n) {
  if (n < 1) throw PreconditionViolation("eulerian_polynomial: n must be >= 1");
  EulerianRecurrence rec;
  PolyCoeffs out{rec.row(n)};
  out.trim();
  return out;
}

/// Power series of A_n(x) / (1-x)^{n+1} truncated at degree_max, by
/// convolution with sum_j C(j+n, n) x^j. Coefficient m should be (m+1)^n.
inline PolyCoeffs ogf_coefficients(int n, int degree_max) {
  if (degree_max < 0) throw PreconditionViolation("ogf_coefficients: degree_max must be >= 0");
  const auto poly = eulerian_polynomial(n);
  PolyCoeffs out;
  out.coefficients.assign(static_cast<std::size_t>(degree_max) + 1, 0);
  for (int d = 0; d <= degree_max; ++d) {
    BigInt s = 0;
    for (int i = 0; i <= d && i < static_cast<int>(poly.coefficients.size()); ++i) {
      s += poly.coefficients[static_cast<std::size_t>(i)] * binomial(d - i + n, n);
    }
    out.coefficients[static_cast<std::size_t>(d)] = std::move(s);
  }
  out.trim();
  return out;
}

}  // namespace eulerian
