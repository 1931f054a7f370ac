#include "igpt/dclass.hpp"

#include <algorithm>

#include "igpt/errors.hpp"
#include "igpt/schreier.hpp"

namespace igpt {

namespace {

PartialMap default_base(std::size_t n, std::size_t k) {
  PartialMap e(n);
  if (k == 0) return e;
  for (std::size_t j = 0; j < n; ++j)
    e.set(j, static_cast<Point>(std::min(j, k - 1)));
  return e;
}

}  // namespace

DClassGrid DClassGrid::build(std::size_t n, std::size_t k, Monoid monoid,
                             std::optional<PartialMap> base) {
  DClassGrid g;
  g.n_ = n;
  g.k_ = k;
  g.monoid_ = monoid;
  g.rows_ = enumerate_kernels(n, k, monoid);
  g.cols_ = enumerate_images(n, k);

  PartialMap e = base ? *base : default_base(n, k);
  if (e.degree() != n) throw PreconditionError("base has the wrong degree");
  if (!is_idempotent(e)) throw PreconditionError("base is not idempotent");
  if (rank(e) != k) throw PreconditionError("base does not have rank k");
  if (monoid == Monoid::Total && !e.is_total())
    throw PreconditionError("base is not a total transformation");

  for (std::size_t r = 0; r < g.rows_.size(); ++r) g.row_index_[g.rows_[r]] = r;

  g.cell_at_.assign(g.rows_.size() * g.cols_.size(), kNoCell);
  g.row_cells_.resize(g.rows_.size());
  g.col_cells_.resize(g.cols_.size());
  for (std::size_t r = 0; r < g.rows_.size(); ++r) {
    for (std::size_t c = 0; c < g.cols_.size(); ++c) {
      if (!is_transversal(g.rows_[r], g.cols_[c])) continue;
      std::size_t id = g.cells_.size();
      g.cell_at_[r * g.cols_.size() + c] = id;
      g.cells_.push_back({r, c});
      g.idempotents_.push_back(idempotent_from_cell(n, g.rows_[r], g.cols_[c]));
      g.row_cells_[r].push_back(id);
    }
  }
  for (std::size_t id = 0; id < g.cells_.size(); ++id)
    g.col_cells_[g.cells_[id].col].push_back(id);

  g.base_row_ = g.row_index_.at(kernel(e));
  g.base_col_ = *g.find_col(image(e));
  return g;
}

std::optional<std::size_t> DClassGrid::find_row(
    KernelPartition const& kp) const {
  auto it = row_index_.find(kp);
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DClassGrid::find_col(ImageSet const& im) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), im);
  if (it == cols_.end() || !(*it == im)) return std::nullopt;
  return static_cast<std::size_t>(it - cols_.begin());
}

Permutation DClassGrid::base_permutation(PartialMap const& h) const {
  auto const& pts = cols_[base_col_].elements;
  std::vector<std::uint8_t> img(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    Point y = h[pts[p]];
    auto it = std::find(pts.begin(), pts.end(), y);
    if (y == kUndefined || it == pts.end())
      throw StructuralError("element " + h.to_string() +
                            " does not permute the base image");
    img[p] = static_cast<std::uint8_t>(it - pts.begin());
  }
  return Permutation(std::move(img));
}

std::string_view to_string(AnchorRule r) {
  switch (r) {
    case AnchorRule::LexLeast: return "lex";
    case AnchorRule::LexGreatest: return "lex-greatest";
    case AnchorRule::TwoStep: return "two-step";
  }
  return "?";
}

AnchorRule parse_anchor_rule(std::string_view s) {
  if (s == "lex") return AnchorRule::LexLeast;
  if (s == "lex-greatest") return AnchorRule::LexGreatest;
  if (s == "two-step") return AnchorRule::TwoStep;
  throw PreconditionError("unknown anchor rule '" + std::string(s) + "'");
}

std::vector<std::size_t> anchors(DClassGrid const& grid, AnchorRule rule) {
  std::vector<std::size_t> out(grid.row_count());
  for (std::size_t r = 0; r < grid.row_count(); ++r) {
    auto const& cells = grid.row_cells(r);
    if (cells.empty())
      throw StructuralError("row " + grid.rows()[r].to_string() +
                            " has no group cell");
    bool greatest = rule == AnchorRule::LexGreatest ||
                    (rule == AnchorRule::TwoStep && !grid.row_is_total(r));
    out[r] = grid.cell(greatest ? cells.back() : cells.front()).col;
  }
  if (rule == AnchorRule::TwoStep && grid.monoid() == Monoid::Partial &&
      grid.k() >= 1) {
    // First step: anchors of the T_n grid, carried over by kernel.
    auto total = DClassGrid::build(grid.n(), grid.k(), Monoid::Total,
                                   grid.base());
    auto total_anchor = anchors(total, AnchorRule::LexLeast);
    for (std::size_t tr = 0; tr < total.row_count(); ++tr) {
      auto r = grid.find_row(total.rows()[tr]);
      if (!r) throw StructuralError("total row missing from partial grid");
      out[*r] = *grid.find_col(total.cols()[total_anchor[tr]]);
    }
  }
  out[grid.base_row()] = grid.base_col();
  return out;
}

std::optional<Permutation> sandwich(DClassGrid const& grid,
                                    SchreierSystem const& sys,
                                    std::vector<std::size_t> const& anchor,
                                    std::size_t col, std::size_t row) {
  PartialMap q = grid.base() * word_value(grid, sys.r[col]);
  std::size_t a = anchor[row];
  PartialMap t = grid.idempotent(row, a) * word_value(grid, sys.r_inv[a]);
  PartialMap p = q * t;
  bool nonzero = rank(p) == grid.k();
  if (nonzero != grid.is_group(row, col)) {
    throw StructuralError("sandwich entry at row " + std::to_string(row) +
                          ", column " + std::to_string(col) +
                          " disagrees with the group-cell test");
  }
  if (!nonzero) return std::nullopt;
  return grid.base_permutation(p);
}

}  // namespace igpt
