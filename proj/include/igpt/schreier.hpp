#pragma once

// Schreier systems of representatives: prefix-closed words r[col] over the
// group-cell idempotents whose values move L_base onto L_col by right
// multiplication, together with words r_inv[col] that move it back.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "igpt/dclass.hpp"

namespace igpt {

// Letters are group-cell ids of the ambient grid.
using EWord = std::vector<std::size_t>;

struct SchreierParent {
  std::size_t col = 0;
  std::size_t letter = 0;
  friend bool operator==(SchreierParent const&,
                         SchreierParent const&) = default;
};

struct SchreierSystem {
  std::size_t root = 0;
  std::vector<EWord> r;
  std::vector<EWord> r_inv;
  std::vector<std::optional<SchreierParent>> parent;

  friend bool operator==(SchreierSystem const&,
                         SchreierSystem const&) = default;
};

// Product of the letters' idempotents; the empty word is the identity.
PartialMap word_value(DClassGrid const& grid, EWord const& w);

struct SchreierOptions {
  // Visit columns in descending order and prefer the greatest row.
  bool reverse_tiebreak = false;
  // Use letters from full-domain rows only.
  bool total_rows_only = false;
};

// Breadth-first search over columns from the base column. Throws
// StructuralError listing the columns it could not reach.
SchreierSystem build_schreier(DClassGrid const& grid,
                              SchreierOptions const& opts = {});

// Human-readable violations; empty when `sys` is a Schreier system for
// `grid`. The bijection property is checked on every element of L_base.
std::vector<std::string> verify_schreier(DClassGrid const& grid,
                                         SchreierSystem const& sys);

// A Schreier system for the T_n grid, rewritten in the letters of the
// PT_n grid and re-verified there. Throws StructuralError on failure.
SchreierSystem lift_total_schreier(DClassGrid const& total,
                                   DClassGrid const& partial);

}  // namespace igpt
