// igpt: maximal subgroups of free idempotent generated semigroups over
// T_n and PT_n, from the D-class grid up to group identification.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "igpt/errors.hpp"
#include "igpt/groupid.hpp"
#include "igpt/report.hpp"

namespace {

using namespace igpt;

constexpr int kExitOk = 0;
constexpr int kExitUndecided = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStructural = 3;

struct RunConfig {
  std::string monoid = "pt";
  std::size_t n = 4;
  std::size_t k = 2;
  std::string output = "text";
  std::string dot_path;
  std::string gap_path;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t workers = 1;
  std::string anchor = "lex";
  std::uint64_t seed = 0;
  std::size_t max_n = 7;
  bool reverse_tiebreak = false;
  bool raw_enumeration = false;
  bool no_eliminate = false;
  bool simplify = false;
  bool timings = false;
  bool quick = false;
};

void validate(RunConfig const& cfg) {
  parse_monoid(cfg.monoid);
  parse_anchor_rule(cfg.anchor);
  if (cfg.output != "json" && cfg.output != "text")
    throw PreconditionError("--output must be json or text");
  if (cfg.n < 1) throw PreconditionError("--n must be at least 1");
  if (cfg.n > cfg.max_n)
    throw PreconditionError("n = " + std::to_string(cfg.n) +
                            " exceeds the cap " + std::to_string(cfg.max_n) +
                            " (raise it with --max-n)");
  if (cfg.k > cfg.n) throw PreconditionError("--k must not exceed --n");
  if (cfg.workers < 1) throw PreconditionError("--workers must be positive");
  if (cfg.max_cosets < 1) throw PreconditionError("--max-cosets must be positive");
}

void write_file(std::string const& path, std::string const& body) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << body;
}

IdentifyOptions identify_options(RunConfig const& cfg) {
  IdentifyOptions o;
  o.anchor_rule = parse_anchor_rule(cfg.anchor);
  o.reverse_tiebreak = cfg.reverse_tiebreak;
  o.eliminate_partial = !cfg.no_eliminate;
  o.raw_enumeration = cfg.raw_enumeration;
  o.max_cosets = cfg.max_cosets;
  o.workers = cfg.workers;
  return o;
}

bool verdict_expected(IdentificationReport const& r) {
  if (r.k == 0 || r.k == r.n) return r.verdict == Verdict::Trivial;
  if (r.k + 1 == r.n) return r.verdict == Verdict::FreeOfRank;
  return r.verdict == Verdict::SymmetricK;
}

std::string report_text(IdentificationReport const& r, bool timings) {
  std::ostringstream os;
  os << to_string(r.monoid) << " n=" << r.n << " k=" << r.k << " ("
     << to_string(r.anchor_rule) << " anchors)\n"
     << "  grid           " << r.rows << " rows x " << r.cols << " cols, "
     << r.generators << " group cells\n"
     << "  relators       type1 " << r.type1 << ", type2 " << r.type2
     << ", type3 " << r.type3 << "\n"
     << "  squares        " << r.all_group_squares << " all-group, "
     << r.singular_squares << " singular\n"
     << "  simplified     " << r.simplified_generators << " generators, "
     << r.simplified_relators << " relators\n"
     << "  order          "
     << (r.order ? std::to_string(*r.order) : std::string(to_string(r.order_kind)))
     << "\n";
  if (r.free_rank) os << "  free rank      " << *r.free_rank << "\n";
  os << "  abelianization " << r.abelian.to_string() << "\n"
     << "  sandwich hom   " << (r.hom_valid ? "valid" : "INVALID")
     << ", image order " << r.image_order << "\n"
     << "  verdict        " << to_string(r.verdict) << "\n";
  for (auto const& d : r.diagnostics) os << "  note: " << d << "\n";
  if (timings)
    for (auto const& [stage, ms] : r.timings_ms)
      os << "  time " << stage << ": " << ms << " ms\n";
  return os.str();
}

int run_corpus(RunConfig const& cfg) {
  struct Case {
    Monoid monoid;
    std::size_t n, k;
  };
  std::vector<Case> cases;
  for (Monoid m : {Monoid::Partial, Monoid::Total})
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 4}})
      if (!(cfg.quick && n == 6)) cases.push_back({m, std::size_t(n), std::size_t(k)});
  cases.push_back({Monoid::Partial, 3, 2});
  cases.push_back({Monoid::Partial, 4, 3});
  for (std::size_t n = 1; n <= 5; ++n) {
    cases.push_back({Monoid::Partial, n, 0});
    cases.push_back({Monoid::Partial, n, n});
  }

  auto opts = identify_options(cfg);
  json rows = json::array();
  bool all_ok = true;
  std::ostringstream table;
  table << "monoid  n  k  generators  type3     order  abelian  verdict        ok\n";
  for (auto const& c : cases) {
    auto r = identify(c.n, c.k, c.monoid, opts);
    bool ok = verdict_expected(r);
    all_ok = all_ok && ok;
    rows.push_back({{"monoid", to_string(c.monoid)},
                    {"n", c.n},
                    {"k", c.k},
                    {"verdict", to_string(r.verdict)},
                    {"order", r.order ? json(*r.order) : json(nullptr)},
                    {"free_rank", r.free_rank ? json(*r.free_rank) : json(nullptr)},
                    {"expected", ok}});
    std::string order = r.order ? std::to_string(*r.order)
                        : r.free_rank ? "F" + std::to_string(*r.free_rank)
                                      : "?";
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %2zu %2zu  %10zu  %5zu  %8s  %-7s  %-13s  %s\n",
                  std::string(to_string(c.monoid)).c_str(), c.n, c.k,
                  r.generators, r.type3, order.c_str(),
                  r.abelian.to_string().c_str(),
                  std::string(to_string(r.verdict)).c_str(), ok ? "yes" : "NO");
    table << line;
  }
  if (cfg.output == "json")
    std::cout << json{{"cases", rows}, {"all_expected", all_ok}}.dump(2) << "\n";
  else
    std::cout << table.str();
  return all_ok ? kExitOk : kExitUndecided;
}

int run(std::string const& command, RunConfig const& cfg) {
  validate(cfg);
  Monoid monoid = parse_monoid(cfg.monoid);
  bool as_json = cfg.output == "json";

  if (command == "identify") {
    auto r = identify(cfg.n, cfg.k, monoid, identify_options(cfg));
    if (as_json)
      std::cout << report_json(r, cfg.timings).dump(2) << "\n";
    else
      std::cout << report_text(r, cfg.timings);
    return r.verdict == Verdict::Undecided ? kExitUndecided : kExitOk;
  }
  if (command == "corpus") return run_corpus(cfg);

  auto grid = DClassGrid::build(cfg.n, cfg.k, monoid);
  if (command == "grid") {
    if (as_json) {
      std::cout << grid_json(grid).dump(2) << "\n";
    } else {
      std::cout << "rows " << grid.row_count() << "\ncols " << grid.col_count()
                << "\ngroup_cells " << grid.cell_count() << "\nbase "
                << grid.base().to_string() << " at (" << grid.base_row() + 1
                << "," << grid.base_col() + 1 << ")\n";
    }
    return kExitOk;
  }
  if (command == "free-rank") {
    auto g = gh_graph(grid);
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, to_dot(g, grid));
    std::size_t rank = free_rank(g, grid.cell_id(grid.base_row(), grid.base_col()));
    if (as_json)
      std::cout << json{{"free_rank", rank}}.dump(2) << "\n";
    else
      std::cout << rank << "\n";
    return kExitOk;
  }

  auto sys = build_schreier(grid, {.reverse_tiebreak = cfg.reverse_tiebreak});
  if (command == "schreier") {
    auto bad = verify_schreier(grid, sys);
    json out = schreier_json(grid, sys);
    out["violations"] = bad;
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      for (auto const& col : out["columns"])
        std::cout << "r[" << col["image"].get<std::string>()
                  << "] = " << col["r"].dump() << "\n";
      std::cout << (bad.empty() ? "verified\n" : "VIOLATIONS\n");
      for (auto const& b : bad) std::cout << "  " << b << "\n";
    }
    return bad.empty() ? kExitOk : kExitStructural;
  }

  auto singulars = enumerate_singular_squares(grid, cfg.workers);
  if (command == "squares") {
    if (as_json) {
      std::cout << squares_json(singulars).dump(2) << "\n";
    } else {
      std::cout << count_all_group_squares(grid) << " all-group squares, "
                << singulars.size() << " singular\n";
      for (auto const& s : singulars)
        std::cout << "  rows " << s.square.top + 1 << "," << s.square.bottom + 1
                  << " cols " << s.square.left + 1 << "," << s.square.right + 1
                  << " by " << s.witness.epsilon.to_string() << " case "
                  << to_string(s.witness.kind) << "\n";
    }
    return kExitOk;
  }

  if (command == "presentation") {
    auto anchor = anchors(grid, parse_anchor_rule(cfg.anchor));
    auto p = build_presentation(grid, sys, anchor, singulars);
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, to_dot(gh_graph(grid), grid));
    if (cfg.simplify) {
      if (monoid == Monoid::Partial && !cfg.no_eliminate && !grid.degenerate() &&
          cfg.k + 2 <= cfg.n)
        p = eliminate_partial_rows(p, grid, singulars, anchor);
      p = tietze_simplify(p);
    }
    if (!cfg.gap_path.empty()) write_file(cfg.gap_path, to_gap(p));
    if (as_json) {
      std::cout << presentation_json(p).dump(2) << "\n";
    } else {
      std::cout << p.generator_count() << " generators, " << p.relators().size()
                << " relators\n";
      for (auto const& r : p.relators())
        std::cout << "  " << p.word_to_string(r.word) << "  [" << to_string(r.kind)
                  << "]\n";
    }
    return kExitOk;
  }
  throw PreconditionError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal subgroups of IG(E) over T_n and PT_n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--monoid", cfg.monoid, "t or pt")->capture_default_str();
    sub->add_option("--n", cfg.n, "degree")->capture_default_str();
    sub->add_option("--k", cfg.k, "rank of the D-class")->capture_default_str();
    sub->add_option("--output", cfg.output, "json or text")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads for square search");
    sub->add_option("--anchor", cfg.anchor, "lex, lex-greatest or two-step");
    sub->add_flag("--reverse-tiebreak", cfg.reverse_tiebreak,
                  "reverse the Schreier search tie-breaks");
    sub->add_option("--max-n", cfg.max_n, "refuse degrees above this")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  };

  std::vector<std::pair<std::string, std::string>> commands{
      {"grid", "D-class dimensions and group cells"},
      {"schreier", "Schreier system of representatives, verified"},
      {"squares", "singular squares with witnesses"},
      {"presentation", "presentation of the maximal subgroup"},
      {"identify", "identify the maximal subgroup"},
      {"free-rank", "cycle rank of the Graham-Houghton graph component"},
      {"corpus", "run the regression matrix"},
  };
  for (auto const& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "presentation" || name == "free-rank")
      sub->add_option("--dot", cfg.dot_path, "write the Graham-Houghton graph");
    if (name == "presentation") {
      sub->add_option("--gap", cfg.gap_path, "write a GAP file");
      sub->add_flag("--simplify", cfg.simplify, "apply Tietze simplification");
      sub->add_flag("--no-eliminate", cfg.no_eliminate,
                    "keep partial-row generators when simplifying");
    }
    if (name == "identify" || name == "corpus") {
      sub->add_option("--max-cosets", cfg.max_cosets)->capture_default_str();
      sub->add_flag("--raw-enumeration", cfg.raw_enumeration,
                    "enumerate cosets on the unsimplified presentation");
      sub->add_flag("--no-eliminate", cfg.no_eliminate,
                    "keep partial-row generators when simplifying");
      sub->add_flag("--timings", cfg.timings, "include stage timings");
    }
    if (name == "corpus") sub->add_flag("--quick", cfg.quick, "skip n = 6");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, cfg);
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cout << json{{"error", "structural"}, {"command", command},
                      {"message", e.what()}}
                     .dump(2)
              << "\n";
    return kExitStructural;
  }
}
