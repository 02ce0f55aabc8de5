#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "eulerian/toolkit/cli.hpp"

using namespace eulerian;
using namespace eulerian::toolkit;

namespace {

const std::filesystem::path kData = EULERIAN_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "eulerian_lab");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "eulerian_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("triangle reproduces the Euler triangle", "[cli]") {
  const auto r = run({"triangle", "--kind", "eulerian", "--n", "6", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == read_text(kData / "euler_triangle.csv"));
  for (const char* method : {"enumeration", "closed_form"}) {
    CHECK(run({"triangle", "--n", "6", "--method", method}).out == r.out);
  }
}

TEST_CASE("triangle kinds and formats", "[cli]") {
  const auto j = run({"triangle", "--n", "4", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  CHECK(json::parse(j.out)["entries"].size() == 10);

  const auto last = run({"triangle", "--kind", "last_element", "--n", "4", "--r", "2"});
  CHECK(last.code == kExitOk);
  CHECK(last.out.rfind("n,r,m,k=1,k=2,k=3,k=4\n", 0) == 0);
  CHECK(last.out.find("4,2,1,4,4,4,2\n") != std::string::npos);

  const auto rec = run({"triangle", "--kind", "last_element", "--n", "6", "--method", "recurrence"});
  const auto en = run({"triangle", "--kind", "last_element", "--n", "6", "--method", "enumeration"});
  CHECK(rec.code == kExitOk);
  CHECK(rec.out == en.out);

  CHECK(run({"triangle", "--kind", "tree_R", "--n", "7"}).out ==
        run({"triangle", "--kind", "tree_R", "--n", "7", "--method", "enumeration"}).out);
  const auto t = run({"triangle", "--kind", "tree_T", "--n", "6"});
  CHECK(t.out.find("6,16,66,36,2\n") != std::string::npos);

  CHECK(run({"triangle", "--kind", "tree_T", "--n", "6", "--method", "closed_form"}).code == kExitUsage);
  CHECK(run({"triangle", "--kind", "bogus", "--n", "3"}).code == kExitUsage);
  CHECK(run({"triangle", "--n", "14", "--method", "enumeration"}).code == kExitUsage);
}

TEST_CASE("triangle writes to --out and uses the cache", "[cli]") {
  const auto out = scratch("t.csv");
  CHECK(run({"triangle", "--n", "6", "--out", out.string()}).code == kExitOk);
  CHECK(read_text(out) == read_text(kData / "euler_triangle.csv"));

  const auto cache = scratch("cli.cache.json");
  std::filesystem::remove(cache);
  const auto first = run({"triangle", "--n", "7", "--cache", cache.string()});
  REQUIRE(std::filesystem::exists(cache));
  const auto second = run({"triangle", "--n", "7", "--cache", cache.string()});
  CHECK(first.out == second.out);
  CHECK(load_cache(cache).tables.size() == 1);
}

TEST_CASE("stats and foata", "[cli]") {
  const auto s = run({"stats", "--perm", "6214573"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("excedance r=1: 2 at {1,6}") != std::string::npos);
  CHECK(s.out.find("inverse 3274516") != std::string::npos);
  const auto sj = run({"stats", "--perm", "2457613", "--format", "json"});
  CHECK(json::parse(sj.out)["descent"]["count"] == 2);

  CHECK(run({"foata", "--perm", "51283647"}).out == "25671483\n");
  CHECK(run({"foata", "--perm", "3274516", "--inverse"}).out == "2457613\n");
  CHECK(run({"foata", "--perm", "51283647", "--blocks"}).out == "blocks 5 1 2 | 8 3 6 4 7\n25671483\n");
  CHECK(run({"foata", "--perm", "5128"}).code == kExitUsage);
  CHECK(run({"stats", "--perm", "1x"}).code == kExitUsage);
}

TEST_CASE("trees", "[cli]") {
  const auto r = run({"trees", "--n", "4", "--list"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("parents [0,1,2] ell=2 x=3 perm=2134") != std::string::npos);
  CHECK(r.out.find("4,2,1,1,2\n") != std::string::npos);
  CHECK(run({"trees", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("verify exit codes follow the verdict", "[cli]") {
  const auto pass = run({"verify", "--id", "thm4_desc_exc", "--max-n", "6"});
  CHECK(pass.code == kExitOk);
  CHECK(pass.out.find("PASS") != std::string::npos);

  const auto fail = run({"verify", "--id", "t_closed_form", "--max-n", "6"});
  CHECK(fail.code == kExitFail);
  CHECK(fail.out.find("counterexample (n,ell) = (2,2): 4 != 1") != std::string::npos);
  CHECK(fail.out.find("re-validated") != std::string::npos);

  const auto j = run({"verify", "--id", "worpitzky_generalized", "--variant", "corrected", "--format", "json"});
  CHECK(j.code == kExitOk);
  CHECK(json::parse(j.out)["verdict"] == "PASS");

  CHECK(run({"verify", "--id", "all", "--max-n", "5"}).code == kExitFail);
  CHECK(run({"verify", "--id", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--id", "row_sums", "--max-n", "13"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("config file supplies defaults that flags override", "[cli]") {
  const auto cfg = scratch("lab.toml");
  write_text(cfg, "bound = 5\n");
  CHECK(run({"--config", cfg.string(), "verify", "--id", "row_sums", "--max-n", "6"}).code == kExitUsage);
  CHECK(run({"--config", cfg.string(), "--bound", "11", "verify", "--id", "row_sums", "--max-n", "6"}).code ==
        kExitOk);
}

TEST_CASE("oeis-check", "[cli]") {
  const auto bfile = (kData / "euler_triangle_rowmajor.b.txt").string();
  CHECK(run({"oeis-check", "--bfile", bfile, "--kind", "eulerian", "--n", "6"}).code == kExitOk);
  const auto off = run({"oeis-check", "--bfile", bfile, "--kind", "eulerian", "--n", "7", "--n-min", "2"});
  CHECK(off.code == kExitFail);
  CHECK(run({"oeis-check", "--bfile", "/nonexistent/b1.txt", "--n", "6"}).code == kExitUsage);
}

TEST_CASE("cache subcommand", "[cli]") {
  const auto path = scratch("sub.cache.json");
  const auto saved = run({"cache", "save", "--n", "6", "--path", path.string()});
  CHECK(saved.code == kExitOk);
  const auto shown = run({"cache", "show", "--path", path.string()});
  CHECK(shown.code == kExitOk);
  CHECK(shown.out.find("eulerian:6:1:recurrence") != std::string::npos);
  write_text(path, "{}");
  CHECK(run({"cache", "show", "--path", path.string()}).code == kExitUsage);
}
