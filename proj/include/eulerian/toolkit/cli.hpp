#pragma once

/// Command-line front end. Exit codes: 0 success or PASS, 1 a verification
/// FAIL, 2 usage or input error.
///
/// Subcommands: triangle, stats, foata, trees, verify, oeis-check, cache.
/// Global options (--jobs, --bound) and any subcommand option may also be
/// set from a TOML config file given with --config; flags on the command
/// line take precedence.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eulerian/bijections.hpp"
#include "eulerian/counting.hpp"
#include "eulerian/foata.hpp"
#include "eulerian/identities.hpp"
#include "eulerian/toolkit/bfile.hpp"
#include "eulerian/toolkit/cache.hpp"
#include "eulerian/toolkit/export.hpp"
#include "eulerian/toolkit/report_io.hpp"
#include "eulerian/trees.hpp"

namespace eulerian::toolkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct TableRequest {
  TableKind kind = TableKind::eulerian;
  int n = 6;
  int r = 1;
  StatFamily family = StatFamily::descent;
  std::optional<Method> method;
};

inline Method default_method(TableKind kind) {
  return (kind == TableKind::eulerian || kind == TableKind::tree_R) ? Method::recurrence
                                                                    : Method::enumeration;
}

/// Builds the table a `triangle` or `oeis-check` invocation asks for.
inline CountTable build_table(const TableRequest& req, int jobs, int bound) {
  const Method method = req.method.value_or(default_method(req.kind));
  if (req.n < 1) throw PreconditionViolation("--n must be >= 1");
  switch (req.kind) {
    case TableKind::eulerian:
      switch (method) {
        case Method::recurrence: return eulerian_recurrence(req.n);
        case Method::closed_form: return eulerian_closed_form_table(req.n);
        case Method::enumeration: return eulerian_by_enumeration(req.n, jobs, bound);
      }
      break;
    case TableKind::last_element: {
      const StatKind stat(req.family, req.r);
      if (method == Method::enumeration) return count_by_enumeration(req.n, stat, jobs, bound);
      if (method == Method::recurrence && stat == StatKind::descent(1)) {
        LastElementRecurrence rec;
        CountTable t(TableKind::last_element, Method::recurrence, StatFamily::descent);
        for (int m = 0; m < req.n; ++m)
          for (int k = 1; k <= req.n; ++k) t.set({req.n, 1, m, k}, rec(req.n, m, k));
        return t;
      }
      throw PreconditionViolation("last_element tables: recurrence exists only for descents with r=1");
    }
    case TableKind::tree_R:
      if (req.n < 2) throw PreconditionViolation("tree tables need --n >= 2");
      if (method == Method::enumeration) return tally_trees(req.n, jobs, bound);
      if (method == Method::recurrence) {
        RRecurrence rec;
        return rec.table(req.n);
      }
      break;
    case TableKind::tree_T:
      if (req.n < 2) throw PreconditionViolation("tree tables need --n >= 2");
      if (method == Method::enumeration) return tally_T(req.n, jobs, bound);
      if (method == Method::recurrence) {
        RRecurrence rec;
        CountTable t(TableKind::tree_T, Method::recurrence);
        for (int n = 2; n <= req.n; ++n)
          for (int ell = 0; ell <= n; ++ell)
            for (int x = 1; x < n; ++x) t.add({n, ell, 0, 0}, rec(n, ell, x));
        return t;
      }
      break;
  }
  throw PreconditionViolation(std::string("method ") + to_string(method) + " is not available for " +
                              to_string(req.kind) + " tables");
}

/// Cache key of a request: cache_key plus the method actually used.
inline std::string request_cache_key(const TableRequest& req) {
  const auto method = req.method.value_or(default_method(req.kind));
  std::string key = req.kind == TableKind::last_element ? cache_key(req.kind, req.n, req.r, req.family)
                                                        : cache_key(req.kind, req.n, req.r);
  return key + ":" + to_string(method);
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name).
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Eulerian-number toolkit: tables, permutation statistics, the Foata map, "
               "recursive trees and an identity verification harness"};
  if (!args.empty()) app.name(std::filesystem::path(args.front()).filename().string());
  app.set_config("--config", "", "TOML config file (flags override)");
  app.fallthrough();
  app.require_subcommand(1);

  int jobs = 1;
  int bound = kDefaultEnumerationBound;
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--bound", bound, "Largest n allowed for exhaustive enumeration")
      ->check(CLI::Range(1, 13));

  // triangle
  auto* tri = app.add_subcommand("triangle", "Print a table of counts");
  std::string tri_kind = "eulerian", tri_stat = "descent", tri_method, tri_format = "csv", tri_out, tri_cache;
  TableRequest tri_req;
  tri->add_option("--kind", tri_kind, "eulerian | last_element | tree_R | tree_T")->capture_default_str();
  tri->add_option("--n", tri_req.n, "Size (largest row for triangle kinds)")->required();
  tri->add_option("--r", tri_req.r, "Statistic threshold (last_element)")->capture_default_str();
  tri->add_option("--stat", tri_stat, "descent | ascent | excedance | anti_excedance")->capture_default_str();
  tri->add_option("--method", tri_method, "enumeration | recurrence | closed_form");
  tri->add_option("--format", tri_format, "csv | json")->capture_default_str();
  tri->add_option("--out", tri_out, "Output path (default stdout)");
  tri->add_option("--cache", tri_cache, "Cache file (default $EULERIAN_LAB_CACHE when set)");

  // stats
  auto* st = app.add_subcommand("stats", "Statistics of one permutation");
  std::string st_perm, st_format = "text";
  int st_r = 1;
  st->add_option("--perm", st_perm, "One-line word, e.g. 6214573 or 10,2,1,...")->required();
  st->add_option("--r", st_r, "Threshold r")->capture_default_str()->check(CLI::PositiveNumber);
  st->add_option("--format", st_format, "text | json")->capture_default_str();

  // foata
  auto* fo = app.add_subcommand("foata", "Foata transform of a permutation");
  std::string fo_perm;
  bool fo_inverse = false, fo_blocks = false;
  fo->add_option("--perm", fo_perm, "One-line word")->required();
  fo->add_flag("--inverse", fo_inverse, "Apply the inverse transform");
  fo->add_flag("--blocks", fo_blocks, "Also print the record blocks");

  // trees
  auto* tr = app.add_subcommand("trees", "Recursive trees: R(n,ell,x) and T(n,ell)");
  int tr_n = 4;
  bool tr_list = false;
  std::string tr_method = "enumeration", tr_format = "csv";
  tr->add_option("--n", tr_n, "Number of vertices")->required();
  tr->add_flag("--list", tr_list, "List every tree with its statistics");
  tr->add_option("--method", tr_method, "enumeration | recurrence")->capture_default_str();
  tr->add_option("--format", tr_format, "csv | json")->capture_default_str();

  // verify
  auto* ve = app.add_subcommand("verify", "Run the identity verification harness");
  std::string ve_id, ve_variant = "printed", ve_oeis, ve_format = "text";
  Ranges ve_ranges;
  ve->add_option("--id", ve_id, "Identity id or 'all'")->required();
  ve->add_option("--min-n", ve_ranges.min_n)->capture_default_str();
  ve->add_option("--max-n", ve_ranges.max_n)->capture_default_str();
  ve->add_option("--max-r", ve_ranges.max_r)->capture_default_str();
  ve->add_option("--max-x", ve_ranges.max_x)->capture_default_str();
  ve->add_option("--max-degree", ve_ranges.max_degree)->capture_default_str();
  ve->add_option("--variant", ve_variant, "Worpitzky reading: printed | corrected | offset=..,upper=..")
      ->capture_default_str();
  ve->add_option("--oeis-dir", ve_oeis, "Directory with b120434.txt / b144696.txt");
  ve->add_option("--format", ve_format, "text | json")->capture_default_str();

  // oeis-check
  auto* oe = app.add_subcommand("oeis-check", "Compare a table against a local b-file");
  std::string oe_bfile, oe_kind = "eulerian", oe_method, oe_stat = "descent", oe_format = "text";
  TableRequest oe_req;
  ReadOrder oe_order;
  oe->add_option("--bfile", oe_bfile, "b-file path")->required();
  oe->add_option("--kind", oe_kind)->capture_default_str();
  oe->add_option("--n", oe_req.n, "Largest row")->required();
  oe->add_option("--n-min", oe_order.n_min, "First row read")->capture_default_str();
  oe->add_option("--r", oe_req.r)->capture_default_str();
  oe->add_option("--stat", oe_stat)->capture_default_str();
  oe->add_option("--method", oe_method);
  oe->add_option("--format", oe_format, "text | json")->capture_default_str();

  // cache
  auto* ca = app.add_subcommand("cache", "Build or inspect the table cache");
  std::string ca_action, ca_path;
  int ca_n = 8;
  ca->add_option("action", ca_action, "save | show")->required()->check(CLI::IsMember({"save", "show"}));
  ca->add_option("--path", ca_path, "Cache file (default $EULERIAN_LAB_CACHE or ./eulerian_lab.cache.json)");
  ca->add_option("--n", ca_n, "Largest n stored by 'save'")->capture_default_str();

  try {
    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tri->parsed()) {
      tri_req.kind = parse_table_kind(tri_kind);
      tri_req.family = parse_stat_family(tri_stat);
      if (!tri_method.empty()) tri_req.method = parse_method(tri_method);
      const auto fmt = parse_format(tri_format);
      std::optional<std::filesystem::path> cache_path;
      if (!tri_cache.empty() || std::getenv(kCacheEnvVar)) cache_path = resolve_cache_path(tri_cache);
      const auto key = request_cache_key(tri_req);
      std::optional<CountTable> table;
      CacheFile cache;
      if (cache_path && std::filesystem::exists(*cache_path)) {
        cache = load_cache(*cache_path);
        if (auto it = cache.tables.find(key); it != cache.tables.end()) table = it->second;
      }
      if (!table) {
        table = build_table(tri_req, jobs, bound);
        if (cache_path) {
          cache.tables.insert_or_assign(key, *table);
          save_cache(cache, *cache_path);
        }
      }
      export_table(*table, fmt, tri_out, out);
      return kExitOk;
    }

    if (st->parsed()) {
      const auto p = parse_permutation(st_perm);
      const std::array<StatFamily, 4> families{StatFamily::descent, StatFamily::ascent,
                                               StatFamily::excedance, StatFamily::anti_excedance};
      if (st_format == "json") {
        json j{{"permutation", p.to_string()}, {"n", p.size()}, {"r", st_r}};
        for (auto f : families) {
          const StatKind s(f, st_r);
          j[to_string(f)] = {{"count", count_stat(p, s)}, {"positions", positions_stat(p, s)}};
        }
        out << j.dump(2) << "\n";
      } else if (st_format == "text") {
        out << "permutation " << p.to_string() << " (n=" << p.size() << ")\n";
        for (auto f : families) {
          const StatKind s(f, st_r);
          out << to_string(f) << " r=" << st_r << ": " << count_stat(p, s) << " at "
              << detail::join(positions_stat(p, s)) << "\n";
        }
        out << "inverse " << inverse(p).to_string() << "\n";
      } else {
        throw ParseError("unknown format '" + st_format + "' (expected text or json)");
      }
      return kExitOk;
    }

    if (fo->parsed()) {
      const auto p = parse_permutation(fo_perm);
      if (fo_blocks) {
        std::string line;
        for (const auto& b : record_blocks(p).blocks) {
          if (!line.empty()) line += " | ";
          for (std::size_t j = 0; j < b.size(); ++j) line += (j ? " " : "") + std::to_string(b[j]);
        }
        out << "blocks " << line << "\n";
      }
      out << (fo_inverse ? foata_inverse(p) : foata_transform(p)).to_string() << "\n";
      return kExitOk;
    }

    if (tr->parsed()) {
      if (tr_n < 2) throw PreconditionViolation("--n must be >= 2");
      const auto fmt = parse_format(tr_format);
      if (tr_list) {
        check_enumeration_bound(tr_n, std::min(bound, 8), "trees --list");
        for_each_tree(tr_n, [&](const RecursiveTree& t) {
          const auto s = tree_stats(t);
          std::string parents;
          for (int v : t.parents()) parents += (parents.empty() ? "" : ",") + std::to_string(v);
          out << "parents [" << parents << "] ell=" << s.ell << " x=" << s.x
              << " perm=" << tree_to_permutation(t).to_string() << "\n";
        }, bound);
      }
      TableRequest req{TableKind::tree_R, tr_n, 1, StatFamily::descent, parse_method(tr_method)};
      export_table(build_table(req, jobs, bound), fmt, "", out);
      req.kind = TableKind::tree_T;
      export_table(build_table(req, jobs, bound), fmt, "", out);
      return kExitOk;
    }

    if (ve->parsed()) {
      VerifyOptions opts;
      opts.variant = WorpitzkyVariant::parse(ve_variant);
      if (!ve_oeis.empty()) opts.oeis_dir = ve_oeis;
      opts.jobs = jobs;
      opts.bound = bound;
      std::vector<IdentityId> ids;
      if (ve_id == "all") {
        ids.assign(kAllIdentities.begin(), kAllIdentities.end());
      } else {
        ids.push_back(parse_identity_id(ve_id));
      }
      if (ve_format != "text" && ve_format != "json") {
        throw ParseError("unknown format '" + ve_format + "' (expected text or json)");
      }
      bool all_pass = true;
      json reports = json::array();
      for (auto id : ids) {
        const auto rep = verify(id, ve_ranges, opts);
        all_pass = all_pass && rep.passed();
        if (ve_format == "json") {
          reports.push_back(to_json(rep));
        } else {
          out << to_text(rep);
        }
      }
      if (ve_format == "json") out << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return all_pass ? kExitOk : kExitFail;
    }

    if (oe->parsed()) {
      oe_req.kind = parse_table_kind(oe_kind);
      oe_req.family = parse_stat_family(oe_stat);
      if (!oe_method.empty()) oe_req.method = parse_method(oe_method);
      oe_order.n_max = oe_req.n;
      const auto table = build_table(oe_req, jobs, bound);
      const auto ref = load_bfile(oe_bfile);
      const auto rep = crosscheck_sequence(table, oe_order, ref);
      if (oe_format == "json") {
        out << to_json(rep).dump(2) << "\n";
      } else {
        out << to_text(rep);
      }
      return rep.passed() ? kExitOk : kExitFail;
    }

    if (ca->parsed()) {
      const auto path = resolve_cache_path(ca_path);
      if (ca_action == "save") {
        CacheFile cache;
        const auto add = [&](const TableRequest& req) {
          cache.tables.insert_or_assign(request_cache_key(req), build_table(req, jobs, bound));
        };
        add({TableKind::eulerian, ca_n, 1, StatFamily::descent, Method::recurrence});
        for (int n = 1; n <= std::min(ca_n, bound); ++n) {
          add({TableKind::last_element, n, 1, StatFamily::descent, Method::enumeration});
        }
        if (ca_n >= 2) add({TableKind::tree_R, ca_n, 1, StatFamily::descent, Method::recurrence});
        save_cache(cache, path);
        out << "saved " << cache.tables.size() << " tables to " << path.string() << "\n";
      } else {
        const auto cache = load_cache(path);
        out << path.string() << ": format_version " << cache.format_version << ", "
            << cache.tables.size() << " tables\n";
        for (const auto& [key, t] : cache.tables) {
          out << "  " << key << " (" << t.support_size() << " nonzero cells)\n";
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eulerian::toolkit
