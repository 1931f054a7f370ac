#pragma once

// Coset enumeration over the trivial subgroup (HLT strategy with
// coincidence processing). A complete table is the regular permutation
// representation, so its size is the group order.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "igpt/presentation.hpp"

namespace igpt {

enum class CosetStatus { Complete, Overflow };

struct CosetTable {
  CosetStatus status = CosetStatus::Overflow;
  std::size_t generators = 0;
  std::size_t cosets = 0;
  // Row-major, 2 * generators columns indexed by Letter::code(); coset 0
  // is the subgroup. Filled only when Complete.
  std::vector<std::uint32_t> table;

  std::uint32_t operator()(std::size_t coset, Letter l) const {
    return table[coset * 2 * generators + l.code()];
  }
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Gives up with Overflow once more than `max_cosets` cosets have been
// defined in total.
CosetTable todd_coxeter(GroupPresentation const& p,
                        std::size_t max_cosets = kDefaultMaxCosets);

// Every entry defined, each generator column a permutation inverse to its
// partner column, and every relator traced from every coset closes up.
bool coset_table_consistent(CosetTable const& t, GroupPresentation const& p);

}  // namespace igpt
