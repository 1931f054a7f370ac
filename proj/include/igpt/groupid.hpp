#pragma once

// Identification of the maximal subgroup presented by build_presentation:
// coset enumeration for the order, Smith normal form for the abelian
// invariants, and a homomorphism onto the base H-class (a copy of S_k)
// read off the Rees sandwich entries. Order k! together with a surjection
// onto S_k pins the group down as S_k.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igpt/dclass.hpp"
#include "igpt/perm.hpp"
#include "igpt/presentation.hpp"
#include "igpt/schreier.hpp"
#include "igpt/smith.hpp"
#include "igpt/todd_coxeter.hpp"

namespace igpt {

// psi(X_{i,l}) = p_{a(i),i} * p_{l,i}^-1, indexed by group-cell id. Anchor
// generators map to the identity. Throws StructuralError on a zero
// sandwich entry at a group cell.
std::vector<Permutation> rees_hom(DClassGrid const& grid,
                                  SchreierSystem const& sys,
                                  std::vector<std::size_t> const& anchor);

// Whether every relator of `p` evaluates to the identity under `psi`.
bool verify_hom(GroupPresentation const& p,
                std::vector<Permutation> const& psi);

enum class Verdict { SymmetricK, FreeOfRank, Trivial, Undecided };
std::string_view to_string(Verdict v);

enum class OrderKind { Finite, InfiniteFree, Unknown };
std::string_view to_string(OrderKind k);

struct IdentifyOptions {
  AnchorRule anchor_rule = AnchorRule::LexLeast;
  bool reverse_tiebreak = false;
  // Rewrite partial-row generators into total-row ones before simplifying.
  bool eliminate_partial = true;
  // Enumerate cosets on the unsimplified presentation.
  bool raw_enumeration = false;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t workers = 1;
};

struct IdentificationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Monoid monoid = Monoid::Partial;
  AnchorRule anchor_rule = AnchorRule::LexLeast;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t generators = 0;
  std::size_t type1 = 0;
  std::size_t type2 = 0;
  std::size_t type3 = 0;
  std::size_t all_group_squares = 0;
  std::size_t singular_squares = 0;
  std::size_t simplified_generators = 0;
  std::size_t simplified_relators = 0;

  OrderKind order_kind = OrderKind::Unknown;
  std::optional<std::uint64_t> order;
  std::optional<std::size_t> free_rank;
  AbelianInvariants abelian;
  bool hom_valid = false;
  std::size_t image_order = 0;
  Verdict verdict = Verdict::Undecided;
  std::vector<std::string> diagnostics;
  std::map<std::string, double> timings_ms;
};

std::uint64_t factorial(std::size_t k);

// Full pipeline for the rank-k D-class of T_n (Total) or PT_n (Partial).
IdentificationReport identify(std::size_t n, std::size_t k, Monoid monoid,
                              IdentifyOptions const& opts = {});

}  // namespace igpt
