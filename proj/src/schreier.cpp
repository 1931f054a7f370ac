#include "igpt/schreier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "igpt/errors.hpp"

namespace igpt {

PartialMap word_value(DClassGrid const& grid, EWord const& w) {
  PartialMap v = PartialMap::identity(grid.n());
  for (std::size_t letter : w) v = v * grid.idempotent(letter);
  return v;
}

SchreierSystem build_schreier(DClassGrid const& grid,
                              SchreierOptions const& opts) {
  std::size_t ncols = grid.col_count();
  SchreierSystem sys;
  sys.root = grid.base_col();
  sys.r.assign(ncols, {});
  sys.r_inv.assign(ncols, {});
  sys.parent.assign(ncols, std::nullopt);

  std::vector<bool> seen(ncols, false);
  seen[sys.root] = true;
  std::deque<std::size_t> queue{sys.root};

  auto ordered = [&](std::vector<std::size_t> v) {
    if (opts.reverse_tiebreak) std::reverse(v.begin(), v.end());
    return v;
  };

  while (!queue.empty()) {
    std::size_t lambda = queue.front();
    queue.pop_front();
    for (std::size_t via : ordered(grid.col_cells(lambda))) {
      std::size_t row = grid.cell(via).row;
      if (opts.total_rows_only && !grid.row_is_total(row)) continue;
      for (std::size_t to : ordered(grid.row_cells(row))) {
        std::size_t mu = grid.cell(to).col;
        if (seen[mu]) continue;
        seen[mu] = true;
        sys.r[mu] = sys.r[lambda];
        sys.r[mu].push_back(to);
        sys.r_inv[mu] = {via};
        sys.r_inv[mu].insert(sys.r_inv[mu].end(), sys.r_inv[lambda].begin(),
                             sys.r_inv[lambda].end());
        sys.parent[mu] = SchreierParent{lambda, to};
        queue.push_back(mu);
      }
    }
  }

  std::string missing;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (seen[c]) continue;
    if (!missing.empty()) missing += ", ";
    missing += grid.cols()[c].to_string();
  }
  if (!missing.empty())
    throw StructuralError("column graph is disconnected; unreachable: " +
                          missing);
  return sys;
}

namespace {

// Every element of the base L-class: one per (row, bijection from the
// row's blocks onto the base image).
std::vector<PartialMap> base_l_class(DClassGrid const& grid) {
  auto const& target = grid.cols()[grid.base_col()].elements;
  std::vector<PartialMap> out;
  std::vector<std::size_t> perm(grid.k());
  for (auto const& kp : grid.rows()) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      PartialMap x(grid.n());
      for (std::size_t b = 0; b < kp.blocks.size(); ++b)
        for (Point p : kp.blocks[b]) x.set(p, target[perm[b]]);
      out.push_back(x);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

std::vector<std::string> verify_schreier(DClassGrid const& grid,
                                         SchreierSystem const& sys) {
  std::vector<std::string> bad;
  std::size_t ncols = grid.col_count();
  if (sys.r.size() != ncols || sys.r_inv.size() != ncols ||
      sys.parent.size() != ncols) {
    bad.push_back("system does not cover every column exactly once");
    return bad;
  }
  if (sys.root != grid.base_col()) bad.push_back("root is not the base column");
  if (!sys.r[sys.root].empty()) bad.push_back("r[root] is not the empty word");

  for (std::size_t c = 0; c < ncols; ++c) {
    for (auto const* w : {&sys.r[c], &sys.r_inv[c]})
      for (std::size_t letter : *w)
        if (letter >= grid.cell_count())
          bad.push_back("column " + std::to_string(c) +
                        ": letter is not a group cell");
  }
  if (!bad.empty()) return bad;

  std::set<EWord> words(sys.r.begin(), sys.r.end());
  for (std::size_t c = 0; c < ncols; ++c) {
    auto const& w = sys.r[c];
    for (std::size_t len = 0; len < w.size(); ++len) {
      if (!words.contains(EWord(w.begin(), w.begin() + len))) {
        bad.push_back("column " + std::to_string(c) +
                      ": a prefix of r is not a representative");
        break;
      }
    }
    if (c == sys.root) continue;
    auto const& par = sys.parent[c];
    if (!par) {
      bad.push_back("column " + std::to_string(c) + ": no parent");
      continue;
    }
    EWord expect = sys.r[par->col];
    expect.push_back(par->letter);
    if (expect != w)
      bad.push_back("column " + std::to_string(c) +
                    ": r is not r[parent] followed by the parent letter");
  }

  std::vector<PartialMap> value(ncols), inv_value(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    value[c] = word_value(grid, sys.r[c]);
    inv_value[c] = word_value(grid, sys.r_inv[c]);
  }
  constexpr std::size_t kReportCap = 32;
  std::size_t failures = 0;
  for (auto const& x : base_l_class(grid)) {
    KernelPartition kx = kernel(x);
    for (std::size_t c = 0; c < ncols; ++c) {
      PartialMap y = x * value[c];
      std::string why;
      if (rank(y) != grid.k() || !(image(y) == grid.cols()[c]))
        why = "does not land in the target L-class";
      else if (!(kernel(y) == kx))
        why = "leaves the R-class";
      else if (!(y * inv_value[c] == x))
        why = "is not inverted by r_inv";
      if (why.empty()) continue;
      if (++failures <= kReportCap)
        bad.push_back("column " + std::to_string(c) + ": " + x.to_string() +
                      " " + why);
    }
  }
  if (failures > kReportCap)
    bad.push_back(std::to_string(failures - kReportCap) +
                  " further bijection failures");
  return bad;
}

SchreierSystem lift_total_schreier(DClassGrid const& total,
                                   DClassGrid const& partial) {
  if (total.monoid() != Monoid::Total || partial.monoid() != Monoid::Partial)
    throw PreconditionError("lift expects a T_n grid and a PT_n grid");
  if (total.n() != partial.n() || total.k() != partial.k())
    throw PreconditionError("lift expects grids with equal n and k");

  SchreierSystem base = build_schreier(total);
  auto to_partial_cell = [&](std::size_t id) {
    Cell c = total.cell(id);
    auto r = partial.find_row(total.rows()[c.row]);
    auto l = partial.find_col(total.cols()[c.col]);
    if (!r || !l || !partial.is_group(*r, *l))
      throw StructuralError("total group cell missing from partial grid");
    return partial.cell_id(*r, *l);
  };
  auto to_partial_col = [&](std::size_t col) {
    return *partial.find_col(total.cols()[col]);
  };

  SchreierSystem lifted;
  std::size_t ncols = partial.col_count();
  lifted.root = to_partial_col(base.root);
  lifted.r.assign(ncols, {});
  lifted.r_inv.assign(ncols, {});
  lifted.parent.assign(ncols, std::nullopt);
  for (std::size_t c = 0; c < total.col_count(); ++c) {
    std::size_t pc = to_partial_col(c);
    for (std::size_t letter : base.r[c])
      lifted.r[pc].push_back(to_partial_cell(letter));
    for (std::size_t letter : base.r_inv[c])
      lifted.r_inv[pc].push_back(to_partial_cell(letter));
    if (base.parent[c])
      lifted.parent[pc] = SchreierParent{to_partial_col(base.parent[c]->col),
                                         to_partial_cell(base.parent[c]->letter)};
  }

  auto bad = verify_schreier(partial, lifted);
  if (!bad.empty())
    throw StructuralError("lifted Schreier system fails on PT_n: " +
                          bad.front());
  return lifted;
}

}  // namespace igpt
