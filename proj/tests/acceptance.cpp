// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every line is PASS. All comparisons are exact integer equality; the only
// tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eulerian/bijections.hpp"
#include "eulerian/counting.hpp"
#include "eulerian/foata.hpp"
#include "eulerian/identities.hpp"
#include "eulerian/toolkit/cli.hpp"
#include "eulerian/trees.hpp"
#include "property_binaries.hpp"

using namespace eulerian;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitTriangle = 5.0;
constexpr double kLimitFoata = 10.0;
constexpr double kLimitThm4 = 60.0;
constexpr double kLimitThm67 = 60.0;
constexpr double kLimitTrees = 60.0;
constexpr double kLimitWorpitzky = 120.0;
constexpr double kLimitDiscrepancy = 60.0;
constexpr double kLimitProperties = 600.0;
constexpr double kLimitOeis = 30.0;

const std::filesystem::path kData = EULERIAN_TEST_DATA;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "eulerian_lab");
  std::ostringstream o, e;
  const int code = toolkit::cli_main(args, o, e);
  if (out) *out = o.str();
  return code;
}

Ranges ranges(int max_n, int max_r = 3, int max_x = 6) {
  Ranges r;
  r.max_n = max_n;
  r.max_r = max_r;
  r.max_x = max_x;
  return r;
}

std::string describe(const VerificationReport& rep) {
  std::string s = rep.subject + " " + to_string(rep.verdict);
  if (rep.counterexample) {
    const auto& cx = *rep.counterexample;
    s += " at " + cx.labels_string() + "=" + cx.tuple_string() + " " + to_decimal(cx.lhs) + " vs " +
         to_decimal(cx.rhs) + (cx.revalidated.value_or(false) ? " (re-validated)" : " (NOT re-validated)");
  }
  return s;
}

Outcome triangle() {
  Outcome o;
  std::string out;
  o.require(run_cli({"triangle", "--kind", "eulerian", "--n", "6"}, &out) == 0, "triangle exit code");
  o.require(out == toolkit::read_text(kData / "euler_triangle.csv"), "triangle output differs from the golden Euler triangle");
  const auto rec = eulerian_recurrence(8);
  o.require(rec.entries() == eulerian_closed_form_table(8).entries(), "closed form differs from recurrence");
  o.require(rec.entries() == eulerian_by_enumeration(8).entries(), "enumeration differs from recurrence");
  if (o.ok) o.detail = "rows 1..6 exact; three methods agree on n<=8";
  return o;
}

Outcome foata_suite() {
  Outcome o;
  long long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> images;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto phi = foata_transform(p);
      images.insert(phi);
      ++checked;
      o.require(foata_inverse(phi) == p, "roundtrip fails at " + p.to_string());
      for (int r = 1; r <= 3; ++r) {
        o.require(count_stat(p, StatKind::descent(r)) == count_stat(phi, StatKind::anti_excedance(r)),
                  "descent/anti-excedance transfer fails at " + p.to_string());
      }
    });
    o.require(images.size() == factorial(n), "not injective at n=" + std::to_string(n));
  }
  o.require(foata_transform(Permutation({5, 1, 2, 8, 3, 6, 4, 7})) == Permutation({2, 5, 6, 7, 1, 4, 8, 3}),
            "51283647 example");
  o.require(exc_to_desc(Permutation({6, 2, 1, 4, 5, 7, 3})) == Permutation({2, 4, 5, 7, 6, 1, 3}),
            "6214573 example");
  if (o.ok) o.detail = std::to_string(checked) + " permutations, n<=7, r in {1,2,3}; both worked examples exact";
  return o;
}

Outcome thm4_gate() {
  Outcome o;
  VerifyOptions opts;
  opts.jobs = 1;
  const auto rep = verify(IdentityId::thm4_desc_exc, ranges(7, 3), opts);
  o.require(rep.passed(), describe(rep));
  o.detail = describe(rep) + ", " + std::to_string(rep.tuples_checked) + " tuples";
  return o;
}

Outcome thm67_gates() {
  Outcome o;
  const auto six = verify(IdentityId::thm6_rotation, ranges(7, 4));
  const auto seven = verify(IdentityId::thm7_shift, ranges(7, 3));
  o.require(six.passed(), describe(six));
  o.require(seven.passed(), describe(seven));
  o.detail = describe(six) + " (r<=4); " + describe(seven) + " (r<=3)";
  return o;
}

Outcome tree_suite() {
  Outcome o;
  for (int n = 1; n <= 9; ++n) {
    long long c = 0;
    for_each_tree(n, [&](const RecursiveTree&) { ++c; });
    o.require(BigInt(c) == factorial(n - 1), "tree count at n=" + std::to_string(n));
  }
  RRecurrence rec;
  for (int n = 2; n <= 8; ++n) {
    const auto table = tally_trees(n);
    for (int ell = 0; ell <= n; ++ell) {
      for (int x = 0; x < n; ++x) {
        o.require(rec(n, ell, x) == table.get({n, ell, x, 0}), "R recurrence at n=" + std::to_string(n));
      }
    }
    if (n >= 3) {
      const auto perms = count_by_enumeration(n - 1, StatKind::descent(1));
      for (int ell = 1; ell <= n; ++ell) {
        for (int x = 2; x < n; ++x) {
          o.require(table.get({n, ell, x, 0}) == perms.get({n - 1, 1, ell - 1, x - 1}),
                    "R(n,ell,x) = A(n-1,ell-1,x-1) at n=" + std::to_string(n));
        }
      }
    }
  }
  o.require(count_R(4, 2, 1) == 1 && count_R(4, 3, 1) == 1 && count_R(4, 2, 2) == 1 && count_R(4, 3, 2) == 1 &&
                count_R(4, 2, 3) == 2,
            "n=4 tree classes");
  if (o.ok) o.detail = "(n-1)! for n<=9; recurrence = enumeration n<=8; n=4 classes; R = A(n-1,.,.) n<=8, x>=2";
  return o;
}

Outcome worpitzky_suite() {
  Outcome o;
  const auto classic = verify(IdentityId::worpitzky_classic, ranges(7, 3, 8));
  o.require(classic.passed(), describe(classic));
  VerifyOptions corrected;
  corrected.variant = WorpitzkyVariant::corrected();
  const auto good = verify(IdentityId::worpitzky_generalized, ranges(7, 3, 6), corrected);
  o.require(good.passed(), describe(good));
  const auto printed = verify(IdentityId::worpitzky_generalized, ranges(7, 3, 6));
  o.require(!printed.passed() && printed.counterexample && printed.counterexample->revalidated.value_or(false),
            "printed variant: " + describe(printed));
  std::size_t partitions = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int x = 0; x <= 3; ++x) {
        const auto c = check_function_partition(n, k, x);
        ++partitions;
        o.require(c.ok(), "partition property at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              " x=" + std::to_string(x));
      }
    }
  }
  if (o.ok) {
    o.detail = "classic n<=7 x<=8; corrected PASS; printed " + describe(printed) + "; " +
               std::to_string(partitions) + " partition cases n<=5 x<=3";
  }
  return o;
}

Outcome discrepancy_reports() {
  Outcome o;
  std::string detail;
  for (auto id : {IdentityId::t_closed_form, IdentityId::cor_1_2_exc, IdentityId::thm8_recurrence}) {
    const auto rep = verify(id, ranges(7));
    if (!rep.passed()) {
      o.require(rep.counterexample && rep.counterexample->revalidated.value_or(false),
                std::string(to_string(id)) + " counterexample not re-validated");
    }
    const int code = run_cli({"verify", "--id", to_string(id), "--max-n", "7"});
    o.require(code == (rep.passed() ? 0 : 1), std::string(to_string(id)) + " exit code " + std::to_string(code));
    detail += (detail.empty() ? "" : "; ") + describe(rep);
  }
  // The (4,2) tuple, 16 vs 4, is the first failure once rows below n=4 are excluded.
  Ranges from4 = ranges(7);
  from4.min_n = 4;
  const auto t4 = verify(IdentityId::t_closed_form, from4);
  o.require(t4.counterexample && t4.counterexample->tuple_string() == "(4,2)" && t4.counterexample->lhs == 16 &&
                t4.counterexample->rhs == 4,
            "t_closed_form from n=4: " + describe(t4));
  if (o.ok) o.detail = detail + "; from n=4: " + t4.counterexample->tuple_string() + " 16 vs 4";
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::size_t binaries = 0;
  for (const char* exe : {EULERIAN_PROPERTY_BINARIES}) {
    ++binaries;
    const std::string cmd = std::string("\"") + exe + "\" \"[property]\" > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    o.require(status == 0, std::string("property tests failed in ") + exe);
  }
  if (o.ok) o.detail = "[property] tests green in " + std::to_string(binaries) + " module suites";
  return o;
}

Outcome oeis_crosscheck() {
  Outcome o;
  const auto ref = toolkit::load_bfile(kData / "euler_triangle_rowmajor.b.txt");
  const auto rep = toolkit::crosscheck_sequence(eulerian_recurrence(6), {1, 6}, ref);
  o.require(rep.passed(), "Euler triangle b-file: " + describe(rep));
  VerifyOptions opts;
  opts.oeis_dir = kData / "oeis";
  const auto foot = verify(IdentityId::footnote_2eulerian, ranges(7), opts);
  std::size_t bfile_notes = 0;
  for (const auto& n : foot.notes) bfile_notes += n.rfind("A1", 0) == 0;
  o.require(bfile_notes >= 2, "2-Eulerian check recorded no b-file findings");
  if (o.ok) {
    o.detail = "Euler triangle b-file " + std::to_string(rep.tuples_checked) + " terms PASS; 2-Eulerian: " + describe(foot) +
               ", " + std::to_string(bfile_notes) + " b-file notes";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Euler triangle reproduction", kLimitTriangle, triangle},
      {2, "Foata suite", kLimitFoata, foata_suite},
      {3, "descent/excedance gate", kLimitThm4, thm4_gate},
      {4, "rotation and shift gates", kLimitThm67, thm67_gates},
      {5, "recursive-tree suite", kLimitTrees, tree_suite},
      {6, "Worpitzky suite", kLimitWorpitzky, worpitzky_suite},
      {7, "discrepancy reports", kLimitDiscrepancy, discrepancy_reports},
      {8, "property suite", kLimitProperties, property_suite},
      {9, "OEIS cross-check", kLimitOeis, oeis_crosscheck},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.ok = false;
      o.detail += " [over time limit " + std::to_string(c.limit) + " s]";
    }
    all = all && o.ok;
    std::printf("%s %d %s (%.2f s / %.0f s): %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
