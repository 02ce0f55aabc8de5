#pragma once

/// Identity verification harness.
///
/// Every identity is written once as a template over a "source" of counts.
/// The sweep source reads cached enumeration tables and, where the identity
/// names one, the recurrence route; the direct source recounts everything
/// from scratch with a predicate loop over S_n or over recursive trees.
/// A sweep walks all tuples of the requested ranges; a failing tuple with
/// the smallest (n, r, m, k, x) becomes the counterexample and is then
/// recomputed through the direct source.

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "eulerian/bijections.hpp"
#include "eulerian/counting.hpp"
#include "eulerian/report.hpp"
#include "eulerian/toolkit/bfile.hpp"
#include "eulerian/trees.hpp"

namespace eulerian {

enum class IdentityId {
  worpitzky_classic,
  worpitzky_generalized,
  thm4_desc_exc,
  thm6_rotation,
  thm7_shift,
  thm8_recurrence,
  cor_1_2_exc,
  thm10_tree_perm,
  thm10_cor_excedance,
  thm10_cor_big_exc,
  thm10_cor_big_desc,
  t_closed_form,
  ogf_theorem2,
  row_sums,
  footnote_2eulerian,
};

inline constexpr std::array kAllIdentities{
    IdentityId::worpitzky_classic,   IdentityId::worpitzky_generalized,
    IdentityId::thm4_desc_exc,       IdentityId::thm6_rotation,
    IdentityId::thm7_shift,          IdentityId::thm8_recurrence,
    IdentityId::cor_1_2_exc,         IdentityId::thm10_tree_perm,
    IdentityId::thm10_cor_excedance, IdentityId::thm10_cor_big_exc,
    IdentityId::thm10_cor_big_desc,  IdentityId::t_closed_form,
    IdentityId::ogf_theorem2,        IdentityId::row_sums,
    IdentityId::footnote_2eulerian,
};

inline const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::worpitzky_classic: return "worpitzky_classic";
    case IdentityId::worpitzky_generalized: return "worpitzky_generalized";
    case IdentityId::thm4_desc_exc: return "thm4_desc_exc";
    case IdentityId::thm6_rotation: return "thm6_rotation";
    case IdentityId::thm7_shift: return "thm7_shift";
    case IdentityId::thm8_recurrence: return "thm8_recurrence";
    case IdentityId::cor_1_2_exc: return "cor_1_2_exc";
    case IdentityId::thm10_tree_perm: return "thm10_tree_perm";
    case IdentityId::thm10_cor_excedance: return "thm10_cor_excedance";
    case IdentityId::thm10_cor_big_exc: return "thm10_cor_big_exc";
    case IdentityId::thm10_cor_big_desc: return "thm10_cor_big_desc";
    case IdentityId::t_closed_form: return "t_closed_form";
    case IdentityId::ogf_theorem2: return "ogf_theorem2";
    case IdentityId::row_sums: return "row_sums";
    case IdentityId::footnote_2eulerian: return "footnote_2eulerian";
  }
  return "?";
}

inline IdentityId parse_identity_id(std::string_view s) {
  for (auto id : kAllIdentities) {
    if (s == to_string(id)) return id;
  }
  throw ParseError("unknown identity id '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Generalized Worpitzky

/// Which reading of the generalized Worpitzky identity to evaluate:
///   lhs = (x+1)^(n-k+1+offset) x^(k-1)
///   rhs = sum_i A(n,i,k) C(upper, n-1),  upper = x+i or x+k
class WorpitzkyVariant {
 public:
  enum class Upper { x_plus_i, x_plus_k };

  WorpitzkyVariant(int lhs_exponent_offset, Upper upper)
      : offset_(lhs_exponent_offset), upper_(upper) {
    if (offset_ != 0 && offset_ != -1) {
      throw PreconditionViolation("WorpitzkyVariant: exponent offset must be 0 or -1");
    }
  }

  static WorpitzkyVariant printed() { return {0, Upper::x_plus_i}; }
  static WorpitzkyVariant corrected() { return {-1, Upper::x_plus_i}; }
  static std::array<WorpitzkyVariant, 4> all() {
    return {WorpitzkyVariant{0, Upper::x_plus_i}, WorpitzkyVariant{0, Upper::x_plus_k},
            WorpitzkyVariant{-1, Upper::x_plus_i}, WorpitzkyVariant{-1, Upper::x_plus_k}};
  }

  /// "printed", "corrected", or "offset=<0|-1>,upper=<x+i|x+k>".
  static WorpitzkyVariant parse(std::string_view s) {
    if (s == "printed") return printed();
    if (s == "corrected") return corrected();
    for (const auto& v : all()) {
      if (s == v.name()) return v;
    }
    throw ParseError("unknown Worpitzky variant '" + std::string(s) + "'");
  }

  int lhs_exponent_offset() const { return offset_; }
  Upper binom_upper() const { return upper_; }

  std::string name() const {
    return "offset=" + std::to_string(offset_) +
           ",upper=" + (upper_ == Upper::x_plus_i ? "x+i" : "x+k");
  }

  friend bool operator==(const WorpitzkyVariant&, const WorpitzkyVariant&) = default;

 private:
  int offset_;
  Upper upper_;
};

namespace detail {

template <class ANmk>
std::pair<BigInt, BigInt> worpitzky_sides(int n, int k, int x, const WorpitzkyVariant& v,
                                          ANmk&& a_nmk) {
  if (k < 1 || k > n) throw PreconditionViolation("generalized Worpitzky: needs n >= k >= 1");
  if (x < 0) throw PreconditionViolation("generalized Worpitzky: needs x >= 0");
  const int exponent = n - k + 1 + v.lhs_exponent_offset();
  BigInt lhs = ipow(BigInt(x + 1), static_cast<unsigned>(exponent)) *
               ipow(BigInt(x), static_cast<unsigned>(k - 1));
  BigInt rhs = 0;
  for (int i = 0; i <= n; ++i) {
    const int upper = x + (v.binom_upper() == WorpitzkyVariant::Upper::x_plus_i ? i : k);
    rhs += a_nmk(n, i, k) * binomial(upper, n - 1);
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace detail

/// Both sides of the generalized identity at (n, k, x); A(n,i,k) comes from
/// the recurrence route.
inline std::pair<BigInt, BigInt> worpitzky_generalized_eval(int n, int k, int x,
                                                            const WorpitzkyVariant& variant) {
  LastElementRecurrence rec;
  return detail::worpitzky_sides(n, k, x, variant,
                                 [&](int nn, int i, int kk) { return rec(nn, i, kk); });
}

// ---------------------------------------------------------------------------
// The function-counting argument behind the generalized identity
//
// Admissible functions f: [n] -> {0..x} have f(k) = 0 and f(i) != 0 for
// i < k. S(sigma), for sigma ending in k, holds the admissible f with
// f(sigma(j)) >= f(sigma(j+1)) at descents of sigma and > elsewhere.

inline constexpr long long kFunctionSearchLimit = 10'000'000;

namespace detail {

template <class Visit>
void for_each_function(int n, int x, Visit&& visit, long long limit) {
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= (x + 1);
    if (space > limit) {
      throw BoundExceeded("function search space (x+1)^n exceeds " + std::to_string(limit));
    }
  }
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(std::as_const(f));
    std::size_t i = f.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (f[i] < x) {
        ++f[i];
        break;
      }
      f[i] = 0;
    }
  }
}

inline bool admissible(const std::vector<int>& f, int k) {
  if (f[static_cast<std::size_t>(k - 1)] != 0) return false;
  for (int i = 1; i < k; ++i) {
    if (f[static_cast<std::size_t>(i - 1)] == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Brute-force count of admissible f: [n] -> {0..x}.
inline BigInt count_constrained_functions(int n, int k, int x,
                                          long long limit = kFunctionSearchLimit) {
  if (k < 1 || k > n) throw PreconditionViolation("count_constrained_functions: needs 1 <= k <= n");
  if (x < 0) throw PreconditionViolation("count_constrained_functions: needs x >= 0");
  unsigned long long count = 0;
  detail::for_each_function(
      n, x, [&](const std::vector<int>& f) { count += detail::admissible(f, k) ? 1 : 0; }, limit);
  return count;
}

/// `f[i-1]` holds f(i). True when f satisfies the chain conditions of
/// S(p); admissibility of f is checked separately.
inline bool sigma_set_membership(std::span<const int> f, const Permutation& p) {
  if (static_cast<int>(f.size()) != p.size()) {
    throw PreconditionViolation("sigma_set_membership: function and permutation sizes differ");
  }
  for (int j = 1; j < p.size(); ++j) {
    const int a = f[static_cast<std::size_t>(p(j) - 1)];
    const int b = f[static_cast<std::size_t>(p(j + 1) - 1)];
    const bool ok = p(j) > p(j + 1) ? a >= b : a > b;
    if (!ok) return false;
  }
  return true;
}

struct PartitionCheck {
  std::size_t functions = 0;        // admissible functions
  std::size_t permutations = 0;     // permutations ending in k
  std::size_t uncovered = 0;        // admissible f in no S(sigma)
  std::size_t multiply_covered = 0; // admissible f in two or more S(sigma)
  std::size_t size_mismatches = 0;  // sigma with |S(sigma)| != C(x + des, n-1)
  bool ok() const { return uncovered == 0 && multiply_covered == 0 && size_mismatches == 0; }
};

/// Checks that the S(sigma), sigma ending in k, partition the admissible
/// functions and that |S(sigma)| = C(x + des(sigma), n-1).
inline PartitionCheck check_function_partition(int n, int k, int x,
                                               long long limit = kFunctionSearchLimit) {
  if (k < 1 || k > n) throw PreconditionViolation("check_function_partition: needs 1 <= k <= n");
  std::vector<Permutation> sigmas;
  for_each_permutation(n, [&](const Permutation& p) {
    if (p.last() == k) sigmas.push_back(p);
  });
  PartitionCheck out;
  out.permutations = sigmas.size();
  std::vector<unsigned long long> set_sizes(sigmas.size(), 0);
  detail::for_each_function(
      n, x,
      [&](const std::vector<int>& f) {
        if (!detail::admissible(f, k)) return;
        ++out.functions;
        int hits = 0;
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
          if (sigma_set_membership(f, sigmas[s])) {
            ++hits;
            ++set_sizes[s];
          }
        }
        if (hits == 0) ++out.uncovered;
        if (hits > 1) ++out.multiply_covered;
      },
      limit);
  for (std::size_t s = 0; s < sigmas.size(); ++s) {
    if (BigInt(set_sizes[s]) != binomial(x + descents(sigmas[s]), n - 1)) ++out.size_mismatches;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep configuration

struct Ranges {
  int min_n = 1;
  int max_n = 7;
  int max_r = 3;
  int max_x = 6;
  int max_degree = 12;

  std::string describe() const {
    return "n=" + std::to_string(min_n) + ".." + std::to_string(max_n) +
           " r<=" + std::to_string(max_r) + " x<=" + std::to_string(max_x) +
           " degree<=" + std::to_string(max_degree);
  }
};

struct VerifyOptions {
  WorpitzkyVariant variant = WorpitzkyVariant::printed();
  /// Directory holding OEIS b-files (b120434.txt, b144696.txt).
  std::optional<std::filesystem::path> oeis_dir;
  int jobs = 1;
  int bound = kDefaultEnumerationBound;
};

/// Tuples compare lexicographically on (n, r, m, k, x). Identities that do
/// not use a slot leave it at zero.
struct Tuple {
  int n = 0;
  int r = 0;
  int m = 0;
  int k = 0;
  int x = 0;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

struct SlotLabel {
  const char* name;
  int Tuple::*field;
};

/// Which tuple slots an identity uses and what they are called.
inline std::vector<SlotLabel> tuple_layout(IdentityId id) {
  switch (id) {
    case IdentityId::worpitzky_classic: return {{"n", &Tuple::n}, {"x", &Tuple::x}};
    case IdentityId::worpitzky_generalized:
      return {{"n", &Tuple::n}, {"k", &Tuple::k}, {"x", &Tuple::x}};
    case IdentityId::thm4_desc_exc:
    case IdentityId::thm8_recurrence:
      return {{"n", &Tuple::n}, {"r", &Tuple::r}, {"m", &Tuple::m}, {"k", &Tuple::k}};
    case IdentityId::thm6_rotation:
      return {{"n", &Tuple::n}, {"r", &Tuple::r}, {"m", &Tuple::m}, {"k1", &Tuple::k},
              {"k2", &Tuple::x}};
    case IdentityId::thm7_shift: return {{"n", &Tuple::n}, {"r", &Tuple::r}, {"m", &Tuple::m}};
    case IdentityId::cor_1_2_exc: return {{"n", &Tuple::n}, {"m", &Tuple::m}, {"k", &Tuple::k}};
    case IdentityId::thm10_tree_perm:
    case IdentityId::thm10_cor_excedance:
    case IdentityId::thm10_cor_big_exc:
    case IdentityId::thm10_cor_big_desc:
      return {{"n", &Tuple::n}, {"ell", &Tuple::m}, {"x", &Tuple::x}};
    case IdentityId::t_closed_form:
    case IdentityId::footnote_2eulerian: return {{"n", &Tuple::n}, {"ell", &Tuple::m}};
    case IdentityId::ogf_theorem2: return {{"n", &Tuple::n}, {"m", &Tuple::m}};
    case IdentityId::row_sums: return {{"n", &Tuple::n}};
  }
  return {};
}

inline std::pair<std::string, std::string> side_labels(IdentityId id) {
  switch (id) {
    case IdentityId::worpitzky_classic: return {"x^n", "sum_m A(n,m) C(x+m,n)"};
    case IdentityId::worpitzky_generalized:
      return {"(x+1)^(n-k+1+offset) x^(k-1)", "sum_i A(n,i,k) C(upper,n-1)"};
    case IdentityId::thm4_desc_exc:
      return {"#{r-descents=m, last=k} (map images when class sizes agree)",
              "#{r-excedances=m, last=k}"};
    case IdentityId::thm6_rotation: return {"A_r(n,m,k1)", "A_r(n,m,k2)"};
    case IdentityId::thm7_shift: return {"A_{r+1}(n,m,1)", "A_r(n,m,n)"};
    case IdentityId::thm8_recurrence:
      return {"A_{r+1}(n,m,k)",
              "A_r(n,m+1,k-1) + (r-1)(A_r(n-1,m,k-1) - A_r(n-1,m+1,k-1))"};
    case IdentityId::cor_1_2_exc: return {"A(n,m,k)", "A_2(n+1,m-1,k+1)"};
    case IdentityId::thm10_tree_perm: return {"R(n,ell,x)", "A(n-1,ell-1,x-1)"};
    case IdentityId::thm10_cor_excedance:
      return {"R(n,ell,x)", "#{p in S_(n-1): last=x-1, excedances=ell-1}"};
    case IdentityId::thm10_cor_big_exc:
      return {"R(n,ell,x)", "#{p in S_(n-1): last=x, big excedances=ell-2}"};
    case IdentityId::thm10_cor_big_desc:
      return {"R(n,ell,x)", "#{p in S_(n-1): last=x, big descents=ell-2}"};
    case IdentityId::t_closed_form:
      return {"sum_j (-1)^j (ell-1-j) C(n,j) (ell-j)^n", "T(n,ell) by enumeration"};
    case IdentityId::ogf_theorem2: return {"[x^m] A_n(x)/(1-x)^(n+1)", "(m+1)^n"};
    case IdentityId::row_sums: return {"sum_m A(n,m)", "n!"};
    case IdentityId::footnote_2eulerian:
      return {"T(n-1,ell-2)", "#{p in S_n: big descents=ell}"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Count sources

/// Cached enumeration tables plus the recurrence routes.
class SweepSource {
 public:
  SweepSource(int jobs, int bound) : jobs_(jobs), bound_(bound) {}

  /// #{p in S_n : count_stat(p, s) = m, p(n) = k}; zero outside the domain.
  BigInt perm_count(int n, StatKind s, int m, int k) {
    if (n < 1 || k < 1 || k > n || m < 0 || m > n) return 0;
    const auto key = std::make_tuple(n, static_cast<int>(s.family()), s.r());
    auto it = perm_.find(key);
    if (it == perm_.end()) it = perm_.emplace(key, count_by_enumeration(n, s, jobs_, bound_)).first;
    return it->second.get({n, s.r(), m, k});
  }

  BigInt eulerian(int n, int m) { return eulerian_(n, m); }

  BigInt a_nmk(int n, int m, int k) { return a_nmk_(n, m, k); }

  BigInt R(int n, int ell, int x) {
    if (n < 2) return 0;
    auto it = trees_.find(n);
    if (it == trees_.end()) it = trees_.emplace(n, tally_trees(n, jobs_, bound_)).first;
    return it->second.get({n, ell, x, 0});
  }

  BigInt T(int n, int ell) {
    BigInt s = 0;
    for (int x = 0; x < n; ++x) s += R(n, ell, x);
    return s;
  }

  BigInt ogf_coefficient(int n, int m, int degree_max) {
    auto it = ogf_.find(n);
    if (it == ogf_.end()) it = ogf_.emplace(n, ogf_coefficients(n, degree_max)).first;
    const auto& c = it->second.coefficients;
    return m < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(m)] : BigInt(0);
  }

  /// #{p : r-excedances = m, last = k, and exc_to_desc(p) has r-descents = m, last = k}.
  BigInt thm4_map_images(int n, int r, int m, int k) {
    const auto key = std::make_pair(n, r);
    auto it = map_images_.find(key);
    if (it == map_images_.end()) {
      auto tally = fold_permutations(
          n, jobs_, LastElementTally(n),
          [r](LastElementTally& acc, const Permutation& p) {
            const auto img = exc_to_desc(p);
            const int e = excedances(p, r);
            if (img.last() == p.last() && descents(img, r) == e) acc.record(e, p.last());
          },
          bound_);
      it = map_images_.emplace(key, std::move(tally)).first;
    }
    if (k < 1 || k > n || m < 0 || m > n) return 0;
    return it->second.at(m, k);
  }

 private:
  int jobs_;
  int bound_;
  std::map<std::tuple<int, int, int>, CountTable> perm_;
  std::map<int, CountTable> trees_;
  std::map<int, PolyCoeffs> ogf_;
  std::map<std::pair<int, int>, LastElementTally> map_images_;
  EulerianRecurrence eulerian_;
  LastElementRecurrence a_nmk_;
};

/// Recounts from scratch on every call by looping over S_n or over trees.
class DirectSource {
 public:
  explicit DirectSource(int bound) : bound_(bound) {}

  BigInt perm_count(int n, StatKind s, int m, int k) {
    if (n < 1 || k < 1 || k > n || m < 0 || m > n) return 0;
    unsigned long long c = 0;
    for_each_permutation(
        n, [&](const Permutation& p) { c += (p.last() == k && count_stat(p, s) == m) ? 1 : 0; },
        bound_);
    return c;
  }

  BigInt eulerian(int n, int m) {
    if (n < 1) return 0;
    unsigned long long c = 0;
    for_each_permutation(n, [&](const Permutation& p) { c += descents(p) == m ? 1 : 0; }, bound_);
    return c;
  }

  BigInt a_nmk(int n, int m, int k) { return perm_count(n, StatKind::descent(1), m, k); }

  BigInt R(int n, int ell, int x) {
    if (n < 2) return 0;
    unsigned long long c = 0;
    for_each_tree(
        n, [&](const RecursiveTree& t) { c += tree_stats(t) == TreeStats{n, ell, x} ? 1 : 0; },
        bound_);
    return c;
  }

  BigInt T(int n, int ell) {
    if (n < 2) return 0;
    unsigned long long c = 0;
    for_each_tree(n, [&](const RecursiveTree& t) { c += tree_stats(t).ell == ell ? 1 : 0; }, bound_);
    return c;
  }

  /// Coefficient m of A_n(x)/(1-x)^{n+1}, with A(n, .) counted directly and
  /// (1-x)^{-(n+1)} expanded by repeated prefix sums instead of binomials.
  BigInt ogf_coefficient(int n, int m, int /*degree_max*/) {
    std::vector<BigInt> series(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i <= std::min(m, n - 1); ++i) series[static_cast<std::size_t>(i)] = eulerian(n, i);
    for (int pass = 0; pass <= n; ++pass) {
      for (std::size_t j = 1; j < series.size(); ++j) series[j] += series[j - 1];
    }
    return series.back();
  }

  BigInt thm4_map_images(int n, int r, int m, int k) {
    unsigned long long c = 0;
    for_each_permutation(
        n,
        [&](const Permutation& p) {
          if (p.last() != k || excedances(p, r) != m) return;
          const auto img = exc_to_desc(p);
          c += (img.last() == k && descents(img, r) == m) ? 1 : 0;
        },
        bound_);
    return c;
  }

 private:
  int bound_;
};

// ---------------------------------------------------------------------------
// Identity evaluation

template <class Source>
std::pair<BigInt, BigInt> evaluate_identity(IdentityId id, const Tuple& t, Source& src,
                                            const Ranges& ranges, const VerifyOptions& opts) {
  const auto desc = [](int r) { return StatKind::descent(r); };
  switch (id) {
    case IdentityId::worpitzky_classic: {
      BigInt rhs = 0;
      for (int m = 0; m < t.n; ++m) rhs += src.eulerian(t.n, m) * binomial(t.x + m, t.n);
      return {ipow(BigInt(t.x), static_cast<unsigned>(t.n)), rhs};
    }
    case IdentityId::worpitzky_generalized:
      return detail::worpitzky_sides(t.n, t.k, t.x, opts.variant,
                                     [&](int n, int i, int k) { return src.a_nmk(n, i, k); });
    case IdentityId::thm4_desc_exc: {
      BigInt d = src.perm_count(t.n, desc(t.r), t.m, t.k);
      BigInt e = src.perm_count(t.n, StatKind::excedance(t.r), t.m, t.k);
      if (d != e) return {d, e};
      return {src.thm4_map_images(t.n, t.r, t.m, t.k), e};
    }
    case IdentityId::thm6_rotation:
      return {src.perm_count(t.n, desc(t.r), t.m, t.k), src.perm_count(t.n, desc(t.r), t.m, t.x)};
    case IdentityId::thm7_shift:
      return {src.perm_count(t.n, desc(t.r + 1), t.m, 1), src.perm_count(t.n, desc(t.r), t.m, t.n)};
    case IdentityId::thm8_recurrence: {
      BigInt rhs = src.perm_count(t.n, desc(t.r), t.m + 1, t.k - 1) +
                   BigInt(t.r - 1) * (src.perm_count(t.n - 1, desc(t.r), t.m, t.k - 1) -
                                      src.perm_count(t.n - 1, desc(t.r), t.m + 1, t.k - 1));
      return {src.perm_count(t.n, desc(t.r + 1), t.m, t.k), rhs};
    }
    case IdentityId::cor_1_2_exc:
      return {src.perm_count(t.n, desc(1), t.m, t.k), src.perm_count(t.n + 1, desc(2), t.m - 1, t.k + 1)};
    case IdentityId::thm10_tree_perm:
      return {src.R(t.n, t.m, t.x), src.perm_count(t.n - 1, desc(1), t.m - 1, t.x - 1)};
    case IdentityId::thm10_cor_excedance:
      return {src.R(t.n, t.m, t.x), src.perm_count(t.n - 1, StatKind::excedance(1), t.m - 1, t.x - 1)};
    case IdentityId::thm10_cor_big_exc:
      return {src.R(t.n, t.m, t.x), src.perm_count(t.n - 1, StatKind::excedance(2), t.m - 2, t.x)};
    case IdentityId::thm10_cor_big_desc:
      return {src.R(t.n, t.m, t.x), src.perm_count(t.n - 1, desc(2), t.m - 2, t.x)};
    case IdentityId::t_closed_form: return {t_closed_form(t.n, t.m), src.T(t.n, t.m)};
    case IdentityId::ogf_theorem2:
      return {src.ogf_coefficient(t.n, t.m, ranges.max_degree),
              ipow(BigInt(t.m + 1), static_cast<unsigned>(t.n))};
    case IdentityId::row_sums: {
      BigInt s = 0;
      for (int m = 0; m < t.n; ++m) s += src.eulerian(t.n, m);
      return {s, factorial(t.n)};
    }
    case IdentityId::footnote_2eulerian: {
      BigInt lhs = (t.m >= 2 && t.n - 1 >= 2) ? src.T(t.n - 1, t.m - 2) : BigInt(0);
      BigInt rhs = 0;
      for (int k = 1; k <= t.n; ++k) rhs += src.perm_count(t.n, desc(2), t.m, k);
      return {lhs, rhs};
    }
  }
  throw PreconditionViolation("evaluate_identity: unknown identity");
}

/// All tuples an identity is checked on, in increasing (n, r, m, k, x) order.
inline std::vector<Tuple> sweep_tuples(IdentityId id, const Ranges& rg) {
  std::vector<Tuple> out;
  const int n0 = std::max(1, rg.min_n);
  switch (id) {
    case IdentityId::worpitzky_classic:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int x = 0; x <= rg.max_x; ++x) out.push_back({n, 0, 0, 0, x});
      break;
    case IdentityId::worpitzky_generalized:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int k = 1; k <= n; ++k)
          for (int x = 0; x <= rg.max_x; ++x) out.push_back({n, 0, 0, k, x});
      break;
    case IdentityId::thm4_desc_exc:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int r = 1; r <= rg.max_r; ++r)
          for (int m = 0; m < n; ++m)
            for (int k = 1; k <= n; ++k) out.push_back({n, r, m, k, 0});
      break;
    case IdentityId::thm6_rotation:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int r = 1; r <= rg.max_r; ++r)
          for (int m = 0; m < n; ++m)
            for (int k1 = 1; k1 <= std::min(r, n); ++k1)
              for (int k2 = k1 + 1; k2 <= std::min(r, n); ++k2) out.push_back({n, r, m, k1, k2});
      break;
    case IdentityId::thm7_shift:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int r = 1; r <= rg.max_r; ++r)
          for (int m = 0; m < n; ++m) out.push_back({n, r, m, 0, 0});
      break;
    case IdentityId::thm8_recurrence:
      for (int n = std::max(2, n0); n <= rg.max_n; ++n)
        for (int r = 1; r <= rg.max_r; ++r)
          for (int m = 0; m < n; ++m)
            for (int k = 2; k <= n; ++k) out.push_back({n, r, m, k, 0});
      break;
    case IdentityId::cor_1_2_exc:
      for (int n = std::max(2, n0); n <= rg.max_n; ++n)
        for (int m = 0; m < n; ++m)
          for (int k = 1; k < n; ++k) out.push_back({n, 0, m, k, 0});
      break;
    case IdentityId::thm10_tree_perm:
    case IdentityId::thm10_cor_excedance:
    case IdentityId::thm10_cor_big_exc:
    case IdentityId::thm10_cor_big_desc:
      for (int n = std::max(3, n0); n <= rg.max_n; ++n)
        for (int ell = 0; ell <= n; ++ell)
          for (int x = 2; x <= n - 1; ++x) out.push_back({n, 0, ell, 0, x});
      break;
    case IdentityId::t_closed_form:
      for (int n = std::max(2, n0); n <= rg.max_n; ++n)
        for (int ell = 2; ell <= n; ++ell) out.push_back({n, 0, ell, 0, 0});
      break;
    case IdentityId::ogf_theorem2:
      for (int n = n0; n <= rg.max_n; ++n)
        for (int m = 0; m <= rg.max_degree; ++m) out.push_back({n, 0, m, 0, 0});
      break;
    case IdentityId::row_sums:
      for (int n = n0; n <= rg.max_n; ++n) out.push_back({n, 0, 0, 0, 0});
      break;
    case IdentityId::footnote_2eulerian:
      for (int n = std::max(3, n0); n <= rg.max_n; ++n)
        for (int ell = 2; ell <= n; ++ell) out.push_back({n, 0, ell, 0, 0});
      break;
  }
  return out;
}

/// Largest permutation or tree size the identity enumerates on `rg`.
inline int required_enumeration_size(IdentityId id, const Ranges& rg) {
  return id == IdentityId::cor_1_2_exc ? rg.max_n + 1 : rg.max_n;
}

inline Counterexample make_counterexample(IdentityId id, const Tuple& t, BigInt lhs, BigInt rhs) {
  Counterexample cx;
  for (const auto& slot : tuple_layout(id)) cx.at.emplace_back(slot.name, t.*(slot.field));
  cx.lhs = std::move(lhs);
  cx.rhs = std::move(rhs);
  return cx;
}

/// Recomputes both sides at `t` from scratch by direct enumeration and
/// records whether the same unequal pair comes back.
inline void revalidate(IdentityId id, const Tuple& t, Counterexample& cx, const Ranges& ranges,
                       const VerifyOptions& opts) {
  DirectSource direct(opts.bound);
  auto [lhs, rhs] = evaluate_identity(id, t, direct, ranges, opts);
  cx.revalidated = (lhs != rhs) && lhs == cx.lhs && rhs == cx.rhs;
  cx.revalidated_lhs = std::move(lhs);
  cx.revalidated_rhs = std::move(rhs);
}

namespace detail {

inline void check_ranges(IdentityId id, const Ranges& rg, const VerifyOptions& opts) {
  if (rg.max_n < 1 || rg.min_n > rg.max_n) throw PreconditionViolation("verify: empty n range");
  if (rg.max_r < 1) throw PreconditionViolation("verify: max_r must be >= 1");
  if (rg.max_x < 0 || rg.max_degree < 0) throw PreconditionViolation("verify: negative bound");
  const int need = required_enumeration_size(id, rg);
  if (need > opts.bound) {
    throw BoundExceeded(std::string("verify ") + to_string(id) + ": needs enumeration of size " +
                        std::to_string(need) + " beyond bound " + std::to_string(opts.bound));
  }
}

inline std::string yes_no(bool b) { return b ? "holds" : "fails"; }

inline void add_notes(IdentityId id, const Ranges& rg, const VerifyOptions& opts,
                      SweepSource& src, VerificationReport& rep);

}  // namespace detail

/// Smallest failing tuple (lexicographic on (n, r, m, k, x)), if any,
/// together with the sweep's tuple count.
inline std::pair<std::optional<Counterexample>, std::size_t> sweep_identity(
    IdentityId id, const Ranges& ranges, const VerifyOptions& opts, SweepSource& src) {
  detail::check_ranges(id, ranges, opts);
  std::optional<Tuple> worst;
  std::optional<Counterexample> cx;
  std::size_t checked = 0;
  for (const auto& t : sweep_tuples(id, ranges)) {
    ++checked;
    auto [lhs, rhs] = evaluate_identity(id, t, src, ranges, opts);
    if (lhs != rhs && (!worst || t < *worst)) {
      worst = t;
      cx = make_counterexample(id, t, std::move(lhs), std::move(rhs));
    }
  }
  if (cx) revalidate(id, *worst, *cx, ranges, opts);
  return {std::move(cx), checked};
}

inline std::optional<Counterexample> find_minimal_counterexample(IdentityId id, const Ranges& ranges,
                                                                 const VerifyOptions& opts = {}) {
  SweepSource src(opts.jobs, opts.bound);
  return sweep_identity(id, ranges, opts, src).first;
}

inline VerificationReport verify(IdentityId id, const Ranges& ranges, const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  SweepSource src(opts.jobs, opts.bound);
  VerificationReport rep;
  rep.subject = to_string(id);
  rep.ranges = ranges.describe();
  std::tie(rep.lhs_label, rep.rhs_label) = side_labels(id);
  auto [cx, checked] = sweep_identity(id, ranges, opts, src);
  rep.tuples_checked = checked;
  if (cx) {
    rep.verdict = Verdict::fail;
    rep.counterexample = std::move(cx);
  }
  detail::add_notes(id, ranges, opts, src, rep);
  rep.wall_time = std::chrono::steady_clock::now() - start;
  return rep;
}

// ---------------------------------------------------------------------------
// Notes attached to individual identities

namespace detail {

inline std::vector<std::pair<std::string, std::vector<BigInt>>> two_eulerian_candidates(
    SweepSource& src, int max_n) {
  std::vector<BigInt> big_desc, trees_t;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= std::max(0, n - 2); ++m) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += src.perm_count(n, StatKind::descent(2), m, k);
      big_desc.push_back(s);
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int ell = 2; ell <= std::max(2, n - 1); ++ell) trees_t.push_back(src.T(n, ell));
  }
  return {{"big-descent triangle B(n,m), n>=1, m=0..max(0,n-2)", big_desc},
          {"tree triangle T(n,ell), n>=2, ell=2..max(2,n-1)", trees_t}};
}

inline void two_eulerian_bfile_notes(const VerifyOptions& opts, const Ranges& rg, SweepSource& src,
                                 VerificationReport& rep) {
  if (!opts.oeis_dir) {
    rep.notes.push_back("OEIS b-files: no directory given; reference comparison skipped");
    return;
  }
  const auto candidates = two_eulerian_candidates(src, rg.max_n);
  const std::array<std::pair<const char*, int>, 2> refs{{{"A120434", 1}, {"A144696", 2}}};
  for (const auto& [id, factor] : refs) {
    const auto path = *opts.oeis_dir / ("b" + std::string(id).substr(1) + ".txt");
    if (!std::filesystem::exists(path)) {
      rep.notes.push_back(std::string(id) + ": " + path.string() +
                          " not found; fetch https://oeis.org/" + id + "/b" +
                          std::string(id).substr(1) + ".txt manually");
      continue;
    }
    toolkit::BFileSequence ref;
    try {
      ref = toolkit::load_bfile(path);
    } catch (const Error& e) {
      rep.notes.push_back(std::string(id) + ": unreadable b-file (" + e.what() + ")");
      continue;
    }
    for (const auto& [name, seq] : candidates) {
      // Alignment 0 reads our rows from the first one; alignment 1 skips it.
      for (int skip_rows = 0; skip_rows <= 1; ++skip_rows) {
        const std::size_t skip = skip_rows == 0 ? 0 : 1;
        const std::size_t overlap =
            seq.size() > skip ? std::min(seq.size() - skip, ref.values.size()) : 0;
        bool match = overlap > 0;
        for (std::size_t i = 0; i < overlap && match; ++i) {
          match = seq[skip + i] == ref.values[i] * factor;
        }
        rep.notes.push_back(std::string(id) + (factor == 2 ? " (x2)" : "") + " vs " + name +
                            ", skip " + std::to_string(skip_rows) + " leading term(s): " +
                            (match ? "aligns" : "does not align") + " over " +
                            std::to_string(overlap) + " terms");
      }
    }
  }
}

inline void add_notes(IdentityId id, const Ranges& rg, const VerifyOptions& opts, SweepSource& src,
                      VerificationReport& rep) {
  switch (id) {
    case IdentityId::worpitzky_generalized: {
      rep.notes.push_back("variant " + opts.variant.name());
      std::size_t values = 0, mismatches = 0;
      LastElementRecurrence rec;
      for (int n = std::max(1, rg.min_n); n <= rg.max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
          for (int i = 0; i < n; ++i) {
            ++values;
            if (rec(n, i, k) != src.perm_count(n, StatKind::descent(1), i, k)) ++mismatches;
          }
        }
      }
      rep.notes.push_back("A(n,i,k) recurrence vs enumeration: " + std::to_string(values) +
                          " values, " + std::to_string(mismatches) + " mismatches");
      if (mismatches > 0) rep.verdict = Verdict::fail;
      break;
    }
    case IdentityId::thm8_recurrence: {
      for (int r = 1; r <= rg.max_r; ++r) {
        bool ok = true;
        for (const auto& t : sweep_tuples(id, rg)) {
          if (t.r != r) continue;
          auto [l, rr] = evaluate_identity(id, t, src, rg, opts);
          if (l != rr) {
            ok = false;
            break;
          }
        }
        rep.notes.push_back("r=" + std::to_string(r) + ": " + yes_no(ok));
      }
      break;
    }
    case IdentityId::cor_1_2_exc: {
      bool ok = true;
      for (int n = std::max(2, rg.min_n); n <= rg.max_n && ok; ++n)
        for (int m = 0; m < n && ok; ++m)
          for (int k = 1; k < n && ok; ++k)
            ok = src.perm_count(n, StatKind::descent(1), m, k) ==
                 src.perm_count(n, StatKind::descent(2), m - 1, k + 1);
      rep.notes.push_back("same-size reading A(n,m,k) = A_2(n,m-1,k+1), k<n: " + yes_no(ok) +
                          " on the swept range");
      break;
    }
    case IdentityId::thm10_tree_perm: {
      bool col_ok = true;
      for (int n = std::max(3, rg.min_n); n <= rg.max_n; ++n)
        for (int ell = 0; ell <= n; ++ell)
          col_ok = col_ok && src.R(n, ell, 1) == src.perm_count(n - 1, StatKind::descent(1), ell - 1, 1);
      rep.notes.push_back("x=1 column (outside the stated domain): R(n,ell,1) = A(n-1,ell-1,1) " +
                          yes_no(col_ok));
      std::size_t trees = 0, bad = 0;
      for (int n = std::max(2, rg.min_n); n <= rg.max_n; ++n) {
        for_each_tree(
            n,
            [&](const RecursiveTree& t) {
              ++trees;
              const auto s = tree_stats(t);
              const auto p = tree_to_permutation(t);
              const int want_last = s.x >= 2 ? s.x + 1 : 1;
              if (p.first() != 2 || p.last() != want_last || descents(p) != s.ell - 1) ++bad;
            },
            opts.bound);
      }
      rep.notes.push_back("tree_to_permutation: " + std::to_string(trees) +
                          " trees, " + std::to_string(bad) +
                          " violating (first=2, last=x+1 for x>=2, descents=ell-1)");
      break;
    }
    case IdentityId::footnote_2eulerian: {
      bool shifted = true;
      for (int n = std::max(2, rg.min_n); n <= rg.max_n; ++n) {
        for (int ell = 0; ell <= n; ++ell) {
          BigInt b = 0;
          if (ell >= 2) {
            for (int k = 1; k <= n - 1; ++k) b += src.perm_count(n - 1, StatKind::descent(2), ell - 2, k);
          }
          shifted = shifted && src.T(n, ell) == b;
        }
      }
      rep.notes.push_back("shifted alignment T(n,ell) = #{p in S_(n-1): big descents=ell-2}: " +
                          yes_no(shifted));
      two_eulerian_bfile_notes(opts, rg, src, rep);
      break;
    }
    case IdentityId::thm4_desc_exc:
      rep.notes.push_back("lhs reports exc_to_desc images wherever the class sizes agree");
      break;
    default: break;
  }
}

}  // namespace detail

}  // namespace eulerian
