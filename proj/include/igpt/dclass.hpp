#pragma once

// The rank-k D-class of T_n or PT_n as a grid of H-classes. Rows are
// kernels (R-classes), columns are image sets (L-classes); a cell is a
// group H-class exactly when its image is a transversal of its kernel.
// Group cells are numbered densely in (row, column) order, and that
// number doubles as the presentation generator X_{row,col}.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "igpt/perm.hpp"
#include "igpt/ptrans.hpp"

namespace igpt {

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(Cell const&, Cell const&) = default;
};

inline constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

class DClassGrid {
 public:
  // Default base: the total idempotent j -> j (j <= k), j -> k (j > k);
  // for k = 0 the empty map.
  static DClassGrid build(std::size_t n, std::size_t k, Monoid monoid,
                          std::optional<PartialMap> base = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  Monoid monoid() const noexcept { return monoid_; }
  // k in {0, n}: a single idempotent, trivial maximal subgroup.
  bool degenerate() const noexcept { return k_ == 0 || k_ == n_; }

  std::vector<KernelPartition> const& rows() const noexcept { return rows_; }
  std::vector<ImageSet> const& cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_.size(); }
  bool row_is_total(std::size_t r) const noexcept {
    return rows_[r].is_full(n_);
  }

  bool is_group(std::size_t r, std::size_t c) const noexcept {
    return cell_at_[r * cols_.size() + c] != kNoCell;
  }
  // Dense group-cell index, or kNoCell.
  std::size_t cell_id(std::size_t r, std::size_t c) const noexcept {
    return cell_at_[r * cols_.size() + c];
  }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  Cell cell(std::size_t id) const noexcept { return cells_[id]; }
  PartialMap const& idempotent(std::size_t id) const noexcept {
    return idempotents_[id];
  }
  PartialMap const& idempotent(std::size_t r, std::size_t c) const {
    return idempotents_[cell_id(r, c)];
  }
  // Group cell ids of a row (ascending column) / column (ascending row).
  std::vector<std::size_t> const& row_cells(std::size_t r) const noexcept {
    return row_cells_[r];
  }
  std::vector<std::size_t> const& col_cells(std::size_t c) const noexcept {
    return col_cells_[c];
  }

  std::size_t base_row() const noexcept { return base_row_; }
  std::size_t base_col() const noexcept { return base_col_; }
  PartialMap const& base() const noexcept {
    return idempotent(base_row_, base_col_);
  }

  std::optional<std::size_t> find_row(KernelPartition const& kp) const;
  std::optional<std::size_t> find_col(ImageSet const& im) const;

  // Restriction of an element of the base H-class to the base image,
  // as a permutation of positions in cols()[base_col()].
  Permutation base_permutation(PartialMap const& h) const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  Monoid monoid_ = Monoid::Partial;
  std::vector<KernelPartition> rows_;
  std::vector<ImageSet> cols_;
  std::vector<std::size_t> cell_at_;
  std::vector<Cell> cells_;
  std::vector<PartialMap> idempotents_;
  std::vector<std::vector<std::size_t>> row_cells_;
  std::vector<std::vector<std::size_t>> col_cells_;
  std::map<KernelPartition, std::size_t> row_index_;
  std::size_t base_row_ = 0;
  std::size_t base_col_ = 0;
};

enum class AnchorRule {
  LexLeast,
  LexGreatest,
  // Total rows anchored as in the T_n grid (lex-least), the remaining
  // partial rows extended with the lex-greatest group column.
  TwoStep,
};

std::string_view to_string(AnchorRule r);
AnchorRule parse_anchor_rule(std::string_view s);

// Column chosen per row. The base row is always anchored at the base
// column. Throws StructuralError on a row without group cells.
std::vector<std::size_t> anchors(DClassGrid const& grid,
                                 AnchorRule rule = AnchorRule::LexLeast);

struct SchreierSystem;

// Rees sandwich entry p_{col,row}: q_col * t_row restricted to the base
// image, or nullopt for zero. Throws StructuralError when the entry is
// nonzero exactly off the group cells.
std::optional<Permutation> sandwich(DClassGrid const& grid,
                                    SchreierSystem const& sys,
                                    std::vector<std::size_t> const& anchor,
                                    std::size_t col, std::size_t row);

}  // namespace igpt
