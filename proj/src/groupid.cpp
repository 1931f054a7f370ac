#include "igpt/groupid.hpp"

#include <chrono>
#include <set>

#include "igpt/errors.hpp"
#include "igpt/squares.hpp"

namespace igpt {

std::vector<Permutation> rees_hom(DClassGrid const& grid,
                                  SchreierSystem const& sys,
                                  std::vector<std::size_t> const& anchor) {
  std::vector<Permutation> psi;
  psi.reserve(grid.cell_count());
  std::vector<std::optional<Permutation>> anchor_entry(grid.row_count());
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    Cell c = grid.cell(id);
    auto& pa = anchor_entry[c.row];
    if (!pa) pa = sandwich(grid, sys, anchor, anchor[c.row], c.row);
    auto p = sandwich(grid, sys, anchor, c.col, c.row);
    if (!pa || !p)
      throw StructuralError("zero sandwich entry at generator " +
                            generator_name(c));
    psi.push_back(*pa * p->inverse());
  }
  return psi;
}

bool verify_hom(GroupPresentation const& p,
                std::vector<Permutation> const& psi) {
  if (psi.size() != p.generator_count()) return false;
  if (psi.empty()) return p.relators().empty();
  std::vector<Permutation> inv;
  inv.reserve(psi.size());
  for (auto const& g : psi) inv.push_back(g.inverse());
  for (auto const& r : p.relators()) {
    Permutation acc = Permutation::identity(psi.front().degree());
    for (Letter l : r.word) acc = acc * (l.inverse() ? inv[l.gen()] : psi[l.gen()]);
    if (!acc.is_identity()) return false;
  }
  return true;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::SymmetricK: return "SYMMETRIC_K";
    case Verdict::FreeOfRank: return "FREE_OF_RANK";
    case Verdict::Trivial: return "TRIVIAL";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Finite: return "finite";
    case OrderKind::InfiniteFree: return "infinite_free";
    case OrderKind::Unknown: return "unknown";
  }
  return "?";
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}
  void lap(std::string const& name) {
    auto now = std::chrono::steady_clock::now();
    sink_[name] =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  std::map<std::string, double>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::size_t image_order(std::vector<Permutation> const& psi) {
  std::set<Permutation> distinct(psi.begin(), psi.end());
  return perm_group_order({distinct.begin(), distinct.end()});
}

}  // namespace

IdentificationReport identify(std::size_t n, std::size_t k, Monoid monoid,
                              IdentifyOptions const& opts) {
  if (k > n) throw PreconditionError("rank exceeds degree");
  IdentificationReport rep;
  rep.n = n;
  rep.k = k;
  rep.monoid = monoid;
  rep.anchor_rule = opts.anchor_rule;
  Stopwatch clock(rep.timings_ms);

  auto grid = DClassGrid::build(n, k, monoid);
  rep.rows = grid.row_count();
  rep.cols = grid.col_count();
  rep.generators = grid.cell_count();
  clock.lap("grid");

  auto sys = build_schreier(grid, {.reverse_tiebreak = opts.reverse_tiebreak});
  auto anchor = anchors(grid, opts.anchor_rule);
  clock.lap("schreier");

  if (grid.degenerate()) {
    if (grid.cell_count() != 1)
      throw StructuralError("degenerate D-class with more than one idempotent");
    auto p = build_presentation(grid, sys, anchor, {});
    rep.type1 = p.count(RelatorKind::Type1);
    rep.type2 = p.count(RelatorKind::Type2);
    rep.abelian = abelian_invariants(p);
    auto psi = rees_hom(grid, sys, anchor);
    rep.hom_valid = verify_hom(p, psi);
    rep.image_order = image_order(psi);
    auto table = todd_coxeter(p, opts.max_cosets);
    if (table.status == CosetStatus::Complete) {
      rep.order_kind = OrderKind::Finite;
      rep.order = table.cosets;
    }
    rep.verdict = rep.order == 1u ? Verdict::Trivial : Verdict::Undecided;
    if (rep.verdict == Verdict::Undecided)
      rep.diagnostics.push_back("single-idempotent class is not trivial");
    clock.lap("identify");
    return rep;
  }

  rep.all_group_squares = count_all_group_squares(grid);
  auto singulars = enumerate_singular_squares(grid, opts.workers);
  rep.singular_squares = singulars.size();
  clock.lap("squares");

  auto p = build_presentation(grid, sys, anchor, singulars);
  rep.type1 = p.count(RelatorKind::Type1);
  rep.type2 = p.count(RelatorKind::Type2);
  rep.type3 = p.count(RelatorKind::Type3);
  clock.lap("presentation");

  auto psi = rees_hom(grid, sys, anchor);
  rep.hom_valid = verify_hom(p, psi);
  rep.image_order = image_order(psi);
  clock.lap("hom");

  if (k + 1 == n) {
    if (rep.all_group_squares != 0 || rep.type3 != 0)
      throw StructuralError("rank n-1 class has 2x2 squares of idempotents");
    auto g = gh_graph(grid);
    rep.free_rank = free_rank(g, grid.cell_id(grid.base_row(), grid.base_col()));
    rep.order_kind = OrderKind::InfiniteFree;
    auto simplified = tietze_simplify(p);
    rep.simplified_generators = simplified.generator_count();
    rep.simplified_relators = simplified.relators().size();
    rep.abelian = abelian_invariants(simplified);
    clock.lap("simplify");
    if (rep.abelian.free_rank != *rep.free_rank || !rep.abelian.torsion.empty()) {
      rep.diagnostics.push_back("abelianization " + rep.abelian.to_string() +
                                " disagrees with cycle rank " +
                                std::to_string(*rep.free_rank));
      rep.verdict = Verdict::Undecided;
    } else if (simplified.relators().size() != 0 ||
               simplified.generator_count() != *rep.free_rank) {
      rep.diagnostics.push_back("simplified presentation is not visibly free");
      rep.verdict = Verdict::Undecided;
    } else {
      rep.verdict = Verdict::FreeOfRank;
    }
    return rep;
  }

  GroupPresentation reduced = p;
  if (monoid == Monoid::Partial && opts.eliminate_partial)
    reduced = eliminate_partial_rows(p, grid, singulars, anchor);
  auto simplified = tietze_simplify(reduced);
  rep.simplified_generators = simplified.generator_count();
  rep.simplified_relators = simplified.relators().size();
  clock.lap("simplify");

  rep.abelian = abelian_invariants(simplified);
  clock.lap("abelian");

  auto table = todd_coxeter(opts.raw_enumeration ? p : simplified,
                            opts.max_cosets);
  clock.lap("enumerate");
  if (table.status == CosetStatus::Complete) {
    rep.order_kind = OrderKind::Finite;
    rep.order = table.cosets;
  } else {
    rep.diagnostics.push_back("coset enumeration overflowed at " +
                              std::to_string(opts.max_cosets) + " cosets");
  }

  std::uint64_t expect = factorial(k);
  if (rep.order == expect && rep.hom_valid && rep.image_order == expect) {
    rep.verdict = Verdict::SymmetricK;
  } else {
    rep.verdict = Verdict::Undecided;
    if (rep.order && *rep.order != expect)
      rep.diagnostics.push_back("order " + std::to_string(*rep.order) +
                                " differs from k! = " + std::to_string(expect));
    if (!rep.hom_valid)
      rep.diagnostics.push_back("sandwich map violates a relator");
    if (rep.image_order != expect)
      rep.diagnostics.push_back("sandwich map image has order " +
                                std::to_string(rep.image_order));
  }
  return rep;
}

}  // namespace igpt
