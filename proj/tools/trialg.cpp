#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trialg/catalog.hpp"
#include "trialg/error.hpp"
#include "trialg/generate.hpp"
#include "trialg/identities.hpp"
#include "trialg/iso.hpp"
#include "trialg/parallel.hpp"
#include "trialg/polysolve.hpp"

namespace {

using trialg::Json;

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kInconclusive = 3 };

struct Source {
  std::string path;
  std::string name;
  std::string params;

  void attach(CLI::App* cmd, const std::string& prefix = "") {
    std::string p = prefix.empty() ? "" : prefix + "-";
    cmd->add_option("--" + (prefix.empty() ? std::string("input") : prefix), path, "msc JSON document");
    cmd->add_option("--" + p + "name", name, "catalog entry");
    cmd->add_option("--" + p + "params", params, "parameter values, e.g. a1=1,b2=-1/2");
  }

  trialg::Msc load(const std::string& what) const {
    if (!path.empty() && !name.empty()) throw trialg::Error(what + ": give a file or a catalog name, not both");
    if (!name.empty()) {
      std::optional<trialg::Assignment> a;
      if (!params.empty() || !trialg::family(name).params.empty()) a = trialg::parse_params(params);
      return trialg::catalog_get(name, a);
    }
    if (path.empty()) throw trialg::Error(what + ": no input given");
    std::ifstream in(path);
    if (!in) throw trialg::Error(what + ": cannot read '" + path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw trialg::Error(what + ": invalid JSON: " + e.what());
    }
    return trialg::msc_from_json(doc);
  }
};

struct Output {
  std::string path;

  void attach(CLI::App* cmd) { cmd->add_option("--out", path, "write the JSON document here instead of stdout"); }

  void write(const Json& doc) const {
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw trialg::Error("cannot write '" + path + "'");
  }
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw trialg::Error("primes: '" + item + "' is not an integer");
    if (!trialg::is_prime(v)) throw trialg::Error("primes: " + item + " is not prime");
    out.push_back(v);
  }
  if (out.empty()) throw trialg::Error("primes: empty list");
  return out;
}

std::vector<mpq_class> parse_grid(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(trialg::parse_scalar(item, trialg::Ring::rationals()).rational());
  }
  return out;
}

int report_exit(const trialg::Report& r) { return r.ok() ? kOk : kFalse; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for n-ary algebras given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: TRIALG_JOBS or 1)")->envname("TRIALG_JOBS");
  Output out;

  auto* gen = app.add_subcommand("generate", "n-algebra generated by a binary algebra");
  Source gen_src;
  gen_src.attach(gen);
  std::size_t arity = 3;
  gen->add_option("--arity", arity, "arity of the generated algebra")->capture_default_str();
  out.attach(gen);

  auto* assoc = app.add_subcommand("assoc", "associativity residuals and verdict");
  Source assoc_src;
  assoc_src.attach(assoc);
  out.attach(assoc);

  auto* iso = app.add_subcommand("iso", "isomorphisms over GF(p)");
  Source iso_a, iso_b;
  iso_a.attach(iso, "a");
  iso_b.attach(iso, "b");
  std::uint64_t prime = 0;
  bool iso_all = false, iso_first = false;
  iso->add_option("--prime", prime, "prime p")->required();
  iso->add_flag("--all", iso_all, "list every witness (default)");
  iso->add_flag("--first", iso_first, "stop at the first witness");
  out.attach(iso);

  auto* express = app.add_subcommand("express", "find a binary algebra generating a 3-algebra");
  Source ex_src;
  ex_src.attach(express);
  std::string primes = "5,7";
  bool groebner = false;
  trialg::GroebnerCaps caps;
  express->add_option("--primes", primes, "primes for exhaustive sweeps")->capture_default_str();
  express->add_flag("--groebner", groebner, "run Buchberger when no rational witness is found");
  express->add_option("--max-pairs", caps.max_pairs, "Groebner pair cap")->capture_default_str();
  express->add_option("--max-degree", caps.max_degree, "Groebner degree cap")->capture_default_str();
  out.attach(express);

  auto* catalog = app.add_subcommand("catalog", "dump embedded algebras and claims");
  std::string cat_name, cat_params;
  catalog->add_option("--name", cat_name, "print one entry instead of the bundle");
  catalog->add_option("--params", cat_params, "parameter values for --name");
  out.attach(catalog);

  auto* table1 = app.add_subcommand("table1-verify", "compare generated 3-algebras with the table");
  out.attach(table1);

  auto* scan = app.add_subcommand("totassoc-scan", "grid points where a family is totally associative");
  std::string scan_family, scan_grid;
  scan->add_option("--family", scan_family, "catalog family")->required();
  scan->add_option("--grid", scan_grid, "comma-separated rationals used for every parameter");
  out.attach(scan);

  auto* replay = app.add_subcommand("paper-replay", "replay every embedded claim");
  out.attach(replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (*gen) {
      trialg::Msc m = gen_src.load("input");
      if (m.arity() != 2) throw trialg::Error("input: expected arity 2, got " + std::to_string(m.arity()));
      out.write(trialg::msc_to_json(trialg::generate_nary(m, arity)));
      return kOk;
    }
    if (*assoc) {
      trialg::Msc m = assoc_src.load("input");
      trialg::AssocReport r = trialg::assoc_report(m);
      out.write(trialg::assoc_report_to_json(r));
      return r.verdict ? kOk : kFalse;
    }
    if (*iso) {
      trialg::Msc a = iso_a.load("a");
      trialg::Msc b = iso_b.load("b");
      if (iso_all && iso_first) throw trialg::Error("--all and --first are exclusive");
      trialg::IsoSearchResult r = trialg::iso_search(a, b, prime, {!iso_first, trialg::resolve_jobs(jobs)});
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      out.write(trialg::iso_result_to_json(r));
      return r.witnesses.empty() ? kFalse : kOk;
    }
    if (*express) {
      trialg::Msc m = ex_src.load("input");
      trialg::ExpressOptions opts;
      opts.primes = parse_primes(primes);
      opts.groebner = groebner;
      opts.caps = caps;
      opts.jobs = trialg::resolve_jobs(jobs);
      trialg::SolveOutcome r = trialg::certify_expressibility(m, opts);
      out.write(trialg::solve_outcome_to_json(r));
      switch (r.status) {
        case trialg::SolveStatus::witness: return kOk;
        case trialg::SolveStatus::no_solution_mod_p:
        case trialg::SolveStatus::certified_empty_over_closure: return kFalse;
        case trialg::SolveStatus::inconclusive: return kInconclusive;
      }
    }
    if (*catalog) {
      if (cat_name.empty()) {
        if (!cat_params.empty()) throw trialg::Error("--params needs --name");
        out.write(trialg::catalog_bundle());
      } else {
        std::optional<trialg::Assignment> a;
        if (!cat_params.empty()) a = trialg::parse_params(cat_params);
        out.write(trialg::msc_to_json(trialg::catalog_get(cat_name, a)));
      }
      return kOk;
    }
    if (*table1) {
      trialg::Report r = trialg::table1_verify();
      out.write(r.to_json());
      return report_exit(r);
    }
    if (*scan) {
      std::vector<mpq_class> grid = scan_grid.empty() ? trialg::default_scan_grid() : parse_grid(scan_grid);
      auto points = trialg::totassoc_scan(scan_family, grid);
      Json g = Json::array();
      for (const auto& x : grid) g.push_back(x.get_str());
      Json pts = Json::array();
      for (const auto& p : points) pts.push_back(trialg::assignment_to_json(p));
      out.write(Json{{"family", scan_family}, {"grid", g}, {"points", pts}});
      return kOk;
    }
    if (*replay) {
      trialg::Report r = trialg::paper_replay(trialg::resolve_jobs(jobs));
      out.write(r.to_json());
      return report_exit(r);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
