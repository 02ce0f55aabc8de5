#pragma once

/// Recursive (increasing) trees on the labels 0..n-1, rooted at 0, stored
/// as parent arrays with parent(v) < v.
///
/// R(n, ell, x) counts such trees with ell vertices of degree one (the root
/// included when it has a single child) whose smallest rooted path, the walk
/// from 0 that always steps to the smallest child, ends at x.

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/binomial.hpp"
#include "eulerian/count_table.hpp"
#include "eulerian/permutation.hpp"

namespace eulerian {

class RecursiveTree {
 public:
  /// `parents[v-1]` is the parent of vertex v, for v = 1..n-1.
  explicit RecursiveTree(std::vector<int> parents) : parents_(std::move(parents)) {
    for (std::size_t i = 0; i < parents_.size(); ++i) {
      const int v = static_cast<int>(i) + 1;
      if (parents_[i] < 0 || parents_[i] >= v) {
        throw PreconditionViolation("RecursiveTree: parent of " + std::to_string(v) +
                                    " must lie in 0.." + std::to_string(v - 1));
      }
    }
  }

  int size() const { return static_cast<int>(parents_.size()) + 1; }
  int parent(int v) const { return parents_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& parents() const { return parents_; }

  /// Children of every vertex, ascending.
  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(size()));
    for (int v = 1; v < size(); ++v) out[static_cast<std::size_t>(parent(v))].push_back(v);
    return out;
  }

  friend bool operator==(const RecursiveTree&, const RecursiveTree&) = default;

 private:
  std::vector<int> parents_;
};

struct TreeStats {
  int n = 0;
  int ell = 0;
  int x = 0;
  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

inline TreeStats tree_stats(const RecursiveTree& t) {
  const int n = t.size();
  if (n < 2) throw PreconditionViolation("tree_stats: smallest rooted path needs n >= 2");
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> smallest_child(static_cast<std::size_t>(n), -1);
  for (int v = 1; v < n; ++v) {
    const auto p = static_cast<std::size_t>(t.parent(v));
    ++degree[p];
    ++degree[static_cast<std::size_t>(v)];
    if (smallest_child[p] < 0) smallest_child[p] = v;
  }
  TreeStats s{n, 0, 0};
  s.ell = static_cast<int>(std::count(degree.begin(), degree.end(), 1));
  while (smallest_child[static_cast<std::size_t>(s.x)] >= 0) {
    s.x = smallest_child[static_cast<std::size_t>(s.x)];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Visits the trees whose last vertex n-1 hangs from `last_parent`; the
/// remaining parent choices run as an odometer.
template <class Visit>
void for_each_tree_with_last_parent(int n, int last_parent, Visit&& visit,
                                    int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_trees");
  if (n == 1) {
    visit(RecursiveTree({}));
    return;
  }
  if (last_parent < 0 || last_parent > n - 2) {
    throw PreconditionViolation("enumerate_trees: last parent out of range");
  }
  std::vector<int> parents(static_cast<std::size_t>(n - 1), 0);
  parents.back() = last_parent;
  const std::size_t free = parents.size() - 1;  // vertices 1..n-2
  while (true) {
    visit(RecursiveTree(parents));
    std::size_t i = free;
    for (;;) {
      if (i == 0) return;
      --i;
      if (parents[i] < static_cast<int>(i)) {  // vertex i+1 may pick 0..i
        ++parents[i];
        break;
      }
      parents[i] = 0;
    }
  }
}

/// All (n-1)! recursive trees on n vertices, each once.
template <class Visit>
void for_each_tree(int n, Visit&& visit, int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_trees");
  if (n == 1) {
    for_each_tree_with_last_parent(1, 0, visit, bound);
    return;
  }
  for (int lp = 0; lp <= n - 2; ++lp) for_each_tree_with_last_parent(n, lp, visit, bound);
}

inline std::vector<RecursiveTree> enumerate_trees(int n, int bound = kDefaultEnumerationBound) {
  std::vector<RecursiveTree> out;
  for_each_tree(n, [&](const RecursiveTree& t) { out.push_back(t); }, bound);
  return out;
}

/// R(n, ., .) for a single n by exhaustive enumeration, as a tree_R table.
inline CountTable tally_trees(int n, int jobs = 1, int bound = kDefaultEnumerationBound) {
  check_enumeration_bound(n, bound, "enumerate_trees");
  if (n < 2) throw PreconditionViolation("tally_trees: needs n >= 2");
  // cells[lp][ell * n + x]
  const auto width = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n);
  std::vector<std::vector<unsigned long long>> cells(static_cast<std::size_t>(n - 1),
                                                     std::vector<unsigned long long>(width, 0));
  auto run = [&](int lp) {
    auto& c = cells[static_cast<std::size_t>(lp)];
    for_each_tree_with_last_parent(
        n, lp,
        [&](const RecursiveTree& t) {
          const auto s = tree_stats(t);
          ++c[static_cast<std::size_t>(s.ell) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(s.x)];
        },
        bound);
  };
  const int workers = std::clamp(jobs, 1, n - 1);
  if (workers == 1) {
    for (int lp = 0; lp <= n - 2; ++lp) run(lp);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int lp = w; lp <= n - 2; lp += workers) run(lp);
      });
    }
  }
  CountTable out(TableKind::tree_R, Method::enumeration);
  for (int ell = 0; ell <= n; ++ell) {
    for (int x = 0; x < n; ++x) {
      BigInt total = 0;
      for (const auto& c : cells) {
        total += c[static_cast<std::size_t>(ell) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(x)];
      }
      out.set({n, ell, x, 0}, total);
    }
  }
  return out;
}

/// R(n, ell, x) by enumeration.
inline BigInt count_R(int n, int ell, int x, int bound = kDefaultEnumerationBound) {
  return tally_trees(n, 1, bound).get({n, ell, x, 0});
}

/// T(n, ell) = sum over x of R(n, ell, x), by enumeration.
inline BigInt count_T(int n, int ell, int bound = kDefaultEnumerationBound) {
  const auto table = tally_trees(n, 1, bound);
  BigInt s = 0;
  for (int x = 0; x < n; ++x) s += table.get({n, ell, x, 0});
  return s;
}

/// T(n, .) rows for 2 <= n <= n_max as a tree_T table, by enumeration.
inline CountTable tally_T(int n_max, int jobs = 1, int bound = kDefaultEnumerationBound) {
  CountTable out(TableKind::tree_T, Method::enumeration);
  for (int n = 2; n <= n_max; ++n) {
    const auto rows = tally_trees(n, jobs, bound);
    for (const auto& [idx, v] : rows.entries()) out.add({n, idx[1], 0, 0}, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The R recurrence
//
//   R(n,l,x) = sum_{i=max(x,2)}^{n-2} R(n-1,l-1,i) + sum_{i=1}^{max(x-1,1)} R(n-1,l,i)
//
// with R(2,2,1) = 1 and R(n,l,x) = 0 unless 1 <= x <= n-1.

class RRecurrence {
 public:
  BigInt operator()(int n, int ell, int x) {
    if (n < 2) throw PreconditionViolation("R recurrence: needs n >= 2");
    if (ell < 0 || ell > n || x < 1 || x > n - 1) return 0;
    extend_to(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(ell)]
                [static_cast<std::size_t>(x)];
  }

  /// R(n, ., .) rows as a tree_R table.
  CountTable table(int n) {
    CountTable out(TableKind::tree_R, Method::recurrence);
    for (int ell = 0; ell <= n; ++ell) {
      for (int x = 1; x <= n - 1; ++x) out.set({n, ell, x, 0}, (*this)(n, ell, x));
    }
    return out;
  }

 private:
  // rows_[n][ell][x] for 0 <= ell <= n, 0 <= x <= n-1.
  using Row = std::vector<std::vector<BigInt>>;

  static Row blank(int n) {
    return Row(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  }

  void extend_to(int n) {
    if (rows_.empty()) {
      rows_.resize(3);
      rows_[2] = blank(2);
      rows_[2][2][1] = 1;
    }
    for (int m = static_cast<int>(rows_.size()); m <= n; ++m) {
      const Row& prev = rows_[static_cast<std::size_t>(m - 1)];
      // prefix[l][j] = sum_{i=1}^{j} R(m-1, l, i)
      Row prefix = blank(m);
      for (int l = 0; l <= m - 1; ++l) {
        for (int j = 1; j <= m - 2; ++j) {
          prefix[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] =
              prefix[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - 1)] +
              prev[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
        }
      }
      auto pre = [&](int l, int j) -> BigInt {
        if (l < 0 || l > m - 1) return 0;
        j = std::min(j, m - 2);
        return j < 1 ? BigInt(0) : prefix[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      };
      Row row = blank(m);
      for (int l = 0; l <= m; ++l) {
        for (int x = 1; x <= m - 1; ++x) {
          BigInt v = 0;
          const int lo = std::max(x, 2);
          if (lo <= m - 2) v += pre(l - 1, m - 2) - pre(l - 1, lo - 1);
          v += pre(l, std::max(x - 1, 1));
          row[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)] = std::move(v);
        }
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<Row> rows_;
};

inline BigInt count_R_recurrence(int n, int ell, int x) {
  RRecurrence r;
  return r(n, ell, x);
}

/// sum_{j=0}^{ell-2} (-1)^j (ell-1-j) C(n,j) (ell-j)^n, evaluated as written.
/// This does not agree with count_T; the verification harness reports the
/// disagreement.
inline BigInt t_closed_form(int n, int ell) {
  if (ell < 2) throw PreconditionViolation("t_closed_form: needs ell >= 2");
  if (n < 0) throw PreconditionViolation("t_closed_form: needs n >= 0");
  BigInt s = 0;
  for (int j = 0; j <= ell - 2; ++j) {
    BigInt term = BigInt(ell - 1 - j) * binomial(n, j) * ipow(BigInt(ell - j), static_cast<unsigned>(n));
    s += (j % 2 == 0) ? term : BigInt(-term);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Tree to permutation

/// Preorder walk visiting children largest-first, writing label+1, followed
/// by exchanging the values 1 and 2. The image of a tree with statistics
/// (n, ell, x) starts with 2, has ell-1 descents, and ends in x+1 when
/// x >= 2 (in 1 when x = 1). The map is a bijection onto the permutations
/// of [n] that start with 2.
inline Permutation tree_to_permutation(const RecursiveTree& t) {
  const int n = t.size();
  if (n < 2) throw PreconditionViolation("tree_to_permutation: needs n >= 2");
  const auto kids = t.children();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const int label = v + 1;
    word.push_back(label == 1 ? 2 : label == 2 ? 1 : label);
    // ascending push, so the largest child is popped first
    for (int c : kids[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  return Permutation(std::move(word));
}

}  // namespace eulerian
