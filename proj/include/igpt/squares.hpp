#pragma once

// 2x2 squares of idempotents in a D-class and their singularity.
//
//     e R f          (top, left)    (top, right)
//     L   L
//     g R h          (bottom, left) (bottom, right)
//
// An idempotent eps singularizes (e, f, g, h) in case A when
// eps e = e, eps g = g and f eps = e, and in case B when e = eps g,
// e eps = e and f eps = f.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "igpt/dclass.hpp"

namespace igpt {

struct Square {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::size_t left = 0;
  std::size_t right = 0;

  bool degenerate() const noexcept { return top == bottom || left == right; }
  friend auto operator<=>(Square const&, Square const&) = default;
};

// A nondegenerate square whose four cells are group cells. Throws
// PreconditionError otherwise.
Square make_square(DClassGrid const& grid, std::size_t top, std::size_t bottom,
                   std::size_t left, std::size_t right);

enum class SingularCase { LeftRightA, UpDownB };
std::string_view to_string(SingularCase c);

struct SingularityWitness {
  PartialMap epsilon;
  SingularCase kind = SingularCase::LeftRightA;
};

// Case test on raw maps. The identities implied by each case are checked
// as well; a violation throws StructuralError.
std::optional<SingularCase> singularizes(PartialMap const& eps,
                                         PartialMap const& e,
                                         PartialMap const& f,
                                         PartialMap const& g,
                                         PartialMap const& h);

// Same test on a grid square. Degenerate squares are not applicable and
// give nullopt.
std::optional<SingularCase> singularizes(PartialMap const& eps,
                                         DClassGrid const& grid,
                                         Square const& sq);

struct SingularSquare {
  // Canonical position: top < bottom, left < right.
  Square square;
  // The orientation of `square` that the witness singularizes.
  Square oriented;
  SingularityWitness witness;
};

// Idempotents of rank >= k in the grid's monoid, in (rank, kernel, image)
// order. These are the only candidates for singularizing the class.
std::vector<PartialMap> witness_pool(DClassGrid const& grid);

// Nondegenerate squares (unordered rows and columns) whose cells are all
// group cells.
std::size_t count_all_group_squares(DClassGrid const& grid);

// Every singular square once, with the first witness in pool order,
// sorted by (top, bottom, left, right). The result does not depend on
// `workers`.
std::vector<SingularSquare> enumerate_singular_squares(DClassGrid const& grid,
                                                       std::size_t workers = 1);

struct Lemma1Completion {
  PartialMap alpha_total;
  PartialMap beta_total;
  PartialMap epsilon;
};

// Extends R-related partial idempotents alpha, beta (common domain A of
// size < n) to total maps by sending the complement of A where min(A)
// goes, and builds the idempotent eps with (x beta) eps = x alpha for
// x in A, identity elsewhere. Postconditions are checked and throw
// StructuralError; bad inputs throw PreconditionError.
Lemma1Completion lemma1_complete(PartialMap const& alpha,
                                 PartialMap const& beta);

// {a, b, c, d} with a R b, c R d, a L c, b L d multiplies as a
// rectangular band: xy is the member with x's kernel and y's image.
bool is_rectangular_band(std::span<PartialMap const> members);

}  // namespace igpt
