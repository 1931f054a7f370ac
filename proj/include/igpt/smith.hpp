#pragma once

// Abelian invariants via the Smith normal form of the relator exponent
// matrix, in exact big-integer arithmetic.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "igpt/presentation.hpp"

namespace igpt {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct AbelianInvariants {
  // Invariant factors > 1, ascending, each dividing the next.
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  friend bool operator==(AbelianInvariants const&,
                         AbelianInvariants const&) = default;
  // "Z^2 x Z_2 x Z_6" style; "1" for the trivial group.
  std::string to_string() const;
};

// Nonzero diagonal of the Smith normal form of `m` (columns are the
// generators), each dividing the next, all positive.
std::vector<BigInt> smith_diagonal(IntMatrix m);

AbelianInvariants abelian_invariants(GroupPresentation const& p);

}  // namespace igpt
