// upsilon: command-line front end for building and checking tilings of Z^n by the shape Upsilon_n.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "upsilon/audit.hpp"
#include "upsilon/codes.hpp"
#include "upsilon/constructions.hpp"
#include "upsilon/error.hpp"
#include "upsilon/lattice.hpp"
#include "upsilon/report.hpp"
#include "upsilon/search.hpp"
#include "upsilon/svg.hpp"
#include "upsilon/tiling.hpp"

namespace {

using namespace upsilon;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;
constexpr int kBudget = 4;

// Largest window `exist` will build and verify a witness for.
constexpr std::uint64_t kWitnessCellLimit = 500'000'000;

struct Options {
  unsigned threads = 0;

  int base = 2;
  int t = 0;
  std::string out;

  std::string method;
  std::string code_path;

  std::string tiling_path;
  bool audit = false;
  bool min_dist = false;
  std::string format = "text";

  std::string point;

  std::size_t n = 0;
  Coord p = 0;
  std::size_t max_solutions = 1;
  bool no_symmetry = false;
  std::uint64_t node_budget = 10'000'000;
};

VerifyOptions verify_options(const Options& o, bool min_distance) {
  VerifyOptions v;
  v.threads = o.threads;
  v.min_distance = min_distance;
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_gen_code(const Options& o) {
  const BlockCode code = o.base == 2 ? binary_hamming(o.t) : ternary_hamming(o.t);
  save_code(o.out, code);
  const auto verdict = is_perfect(code);
  std::cout << "q: " << code.q() << "\n"
            << "size: " << code.size() << "\n"
            << "length: " << code.length() << "\n"
            << "min_distance: " << (code.size() < 2 ? std::string("n/a") : std::to_string(min_hamming_distance(code)))
            << "\n"
            << "perfect: " << yes_no(verdict.perfect) << "\n"
            << "wrote " << o.out << "\n";
  return kOk;
}

int cmd_build_tiling(const Options& o) {
  const BlockCode code = load_code(o.code_path);
  PeriodicTiling tiling = o.method == "binary"      ? from_binary_perfect(code)
                          : o.method == "punctured" ? punctured_construction(code)
                                                    : from_ternary_perfect(code);
  save_tiling(o.out, tiling);
  const auto report = verify(tiling, verify_options(o, false));
  std::cout << "n: " << tiling.dimension() << "\n"
            << "p: " << tiling.period() << "\n"
            << "count: " << tiling.size() << "\n"
            << "cells_total: " << report.cells_total << "\n"
            << "is_tiling: " << (report.is_tiling ? "true" : "false") << "\n"
            << "wrote " << o.out << "\n";
  return report.is_tiling ? kOk : kNegative;
}

int cmd_verify(const Options& o) {
  const PeriodicTiling tiling = load_tiling(o.tiling_path);
  const auto report = verify(tiling, verify_options(o, o.min_dist));
  std::optional<AuditReport> audit;
  if (o.audit && report.is_tiling) {
    const Point origin(tiling.dimension());
    const auto& base = tiling.contains(origin) ? tiling : normalize(tiling, tiling.codewords().front());
    audit = structural_audit(base, report);
  }
  const bool ok = report.is_tiling && (!audit || audit->passed());
  if (o.format == "tree") {
    nlohmann::json j;
    j["verify"] = to_json(report);
    if (audit) j["audit"] = to_json(*audit);
    j["result"] = ok ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(report);
    if (o.audit && !audit) std::cout << "audit: skipped (not a tiling)\n";
    if (audit) std::cout << to_text(*audit);
    std::cout << "result: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_locate(const Options& o) {
  const BlockCode code = load_code(o.code_path);
  std::istringstream in(o.point);
  std::vector<Coord> coords;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in --point", 0);
    coords.push_back(v);
  }
  const Point a(std::move(coords));
  const bool binary = o.method == "binary";
  const Point x = binary ? locate_tile_binary(a, code) : locate_tile_ternary(a, code);
  const Coord p = binary ? 4 : 12;
  const bool ok = covers(x, a);
  std::cout << "point: " << a.to_string() << "\n"
            << "codeword: " << x.to_string() << "\n"
            << "codeword_mod_p: " << x.mod(p).to_string() << "\n"
            << "offset: " << (x - a).to_string() << "\n"
            << "covers: " << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kNegative;
}

int cmd_exist(const Options& o) {
  const auto adm = admissible_dimension(o.n);
  const auto cert = nonexistence_certificate(o.n);
  std::cout << "n: " << o.n << "\n"
            << "admissible: " << yes_no(adm.admissible) << "\n";
  if (adm.admissible) std::cout << "family: base " << adm.base << ", t " << adm.t << "\n";
  std::cout << "forced_period: " << cert.forced_period << "\n"
            << "shape_size: " << cert.shape_size << "\n"
            << "window_size: " << cert.window_size << "\n"
            << "divides: " << (cert.divides ? "true" : "false") << "\n";
  if (!adm.admissible) {
    std::cout << "conclusion: " << cert.conclusion << "\n";
    return kNegative;
  }
  const Coord p = adm.base == 2 ? 4 : 12;
  const long double cells = std::pow(static_cast<long double>(p), static_cast<long double>(o.n));
  if (cells > static_cast<long double>(kWitnessCellLimit)) {
    std::cout << "witness: skipped (window exceeds " << kWitnessCellLimit << " cells)\n"
              << "conclusion: admissible, witness not built\n";
    return kOk;
  }
  const PeriodicTiling tiling =
      adm.base == 2 ? from_binary_perfect(binary_hamming(adm.t)) : from_ternary_perfect(ternary_hamming(adm.t));
  const auto report = verify(tiling, verify_options(o, false));
  std::cout << "witness: " << (adm.base == 2 ? "binary" : "ternary") << " construction, " << tiling.size()
            << " codewords over Z_" << p << "^" << o.n << "\n"
            << "witness_verified: " << (report.is_tiling ? "true" : "false") << "\n"
            << "conclusion: " << (report.is_tiling ? "tiling exists" : "witness failed") << "\n";
  return report.is_tiling ? kOk : kNegative;
}

int cmd_search(const Options& o) {
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.p = o.p;
  cfg.max_solutions = o.max_solutions;
  cfg.symmetry_breaking = !o.no_symmetry;
  cfg.node_budget = o.node_budget;
  const auto res = search_tilings(cfg);
  std::cout << "n: " << o.n << "\n"
            << "p: " << o.p << "\n";
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    std::cout << "solution " << i + 1 << ":";
    for (const auto& x : res.solutions[i].codewords()) std::cout << ' ' << x.to_string();
    std::cout << "\n";
  }
  std::cout << to_text(res);
  std::cout << "result: " << (res.solutions.empty() ? "none found" : "found") << "\n";
  if (res.status == SearchStatus::BudgetExhausted && res.solutions.empty()) return kBudget;
  return res.solutions.empty() ? kNegative : kOk;
}

int cmd_export_svg(const Options& o) {
  const PeriodicTiling tiling = load_tiling(o.tiling_path);
  const std::string svg = render_svg(tiling);
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + o.out + " for writing");
  out << svg;
  if (!out) throw InvalidArgument("write to " + o.out + " failed");
  std::cout << "cells: " << tiling.period() * tiling.period() << "\n"
            << "tiles: " << tiling.size() << "\n"
            << "wrote " << o.out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilings of Z^n by the shape Upsilon_n: codes, constructions, verification and search"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for verification (0 = hardware count)");

  auto* gen = app.add_subcommand("gen-code", "Write a binary or ternary Hamming code");
  gen->add_option("--base", o.base, "Alphabet size")->required()->check(CLI::IsMember({2, 3}));
  gen->add_option("--t", o.t, "Number of parity checks")->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, "Output CODE v1 file")->required();

  auto* build = app.add_subcommand("build-tiling", "Build a periodic tiling from a perfect code");
  build->add_option("--method", o.method)->required()->check(CLI::IsMember({"binary", "punctured", "ternary"}));
  build->add_option("--code", o.code_path, "CODE v1 input")->required();
  build->add_option("--out", o.out, "Output TILING v1 file")->required();

  auto* ver = app.add_subcommand("verify", "Check that a TILING v1 file is an exact cover");
  ver->add_option("--tiling", o.tiling_path)->required();
  ver->add_flag("--audit", o.audit, "Run the structural audit on a verified tiling");
  ver->add_flag("--min-dist", o.min_dist, "Report the minimum torus cross distance");
  ver->add_option("--format", o.format)->check(CLI::IsMember({"text", "tree"}));

  auto* loc = app.add_subcommand("locate", "Find the tile covering a point");
  loc->add_option("--tiling-method", o.method)->required()->check(CLI::IsMember({"binary", "ternary"}));
  loc->add_option("--code", o.code_path, "CODE v1 input")->required();
  loc->add_option("--point", o.point, "Space-separated integer coordinates")->required();

  auto* ex = app.add_subcommand("exist", "Decide whether a tiling of Z^n exists");
  ex->add_option("--n", o.n)->required()->check(CLI::Range(1, 4096));

  auto* se = app.add_subcommand("search", "Backtracking search for tilings of Z_p^n");
  se->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  se->add_option("--p", o.p)->required();
  se->add_option("--max-solutions", o.max_solutions, "Stop after K solutions (0 = all)");
  se->add_flag("--no-symmetry", o.no_symmetry, "Do not fix the origin as a codeword");
  se->add_option("--node-budget", o.node_budget, "Placement attempts before giving up");

  auto* svg = app.add_subcommand("export-svg", "Draw a planar tiling");
  svg->add_option("--tiling", o.tiling_path)->required();
  svg->add_option("--out", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen_code(o);
    if (*build) return cmd_build_tiling(o);
    if (*ver) return cmd_verify(o);
    if (*loc) return cmd_locate(o);
    if (*ex) return cmd_exist(o);
    if (*se) return cmd_search(o);
    if (*svg) return cmd_export_svg(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
