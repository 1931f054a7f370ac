#pragma once

// Group presentations over the group cells of a D-class grid, the
// Graham-Houghton graph, and Tietze simplification.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "igpt/dclass.hpp"
#include "igpt/schreier.hpp"
#include "igpt/squares.hpp"

namespace igpt {

// Generator g with exponent +1 is code 2g, exponent -1 is code 2g + 1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t gen, bool inverse)
      : code_(gen * 2 + (inverse ? 1u : 0u)) {}
  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t gen() const noexcept { return code_ >> 1; }
  constexpr bool inverse() const noexcept { return code_ & 1u; }
  constexpr int exponent() const noexcept { return inverse() ? -1 : 1; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr Letter inverted() const noexcept { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

using Word = std::vector<Letter>;

Word inverse(Word const& w);
Word free_reduce(Word const& w);
// Free and cyclic reduction.
Word cyclic_reduce(Word const& w);
// Least rotation of the cyclic reduction of w or of its inverse.
Word canonical_form(Word const& w);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

enum class RelatorKind { Type1, Type2, Type3, Tietze };
std::string_view to_string(RelatorKind k);

struct Relator {
  Word word;
  RelatorKind kind = RelatorKind::Tietze;
};

class GroupPresentation {
 public:
  GroupPresentation() = default;
  explicit GroupPresentation(std::vector<std::string> generator_names);

  std::size_t add_generator(std::string name);
  // Stores the free reduction of w unless it is empty or has the
  // canonical form of a stored relator. Returns whether it was stored.
  bool add_relator(Word const& w, RelatorKind kind);

  std::size_t generator_count() const noexcept { return names_.size(); }
  std::vector<std::string> const& generator_names() const noexcept {
    return names_;
  }
  std::vector<Relator> const& relators() const noexcept { return relators_; }
  std::size_t count(RelatorKind kind) const;
  std::size_t total_length() const;

  std::string word_to_string(Word const& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<Relator> relators_;
  std::unordered_set<Word, WordHash> seen_;
};

// "X_<row>_<col>", one-based.
std::string generator_name(Cell c);

// Generators are the group cells in id order. Relators:
//   (1) X_{i,anchor(i)} for every row i;
//   (2) X_{i,l} X_{i,m}^-1 whenever r[l] followed by e_{im} is r[m];
//   (3) X_{i,l}^-1 X_{i,m} X_{j,m}^-1 X_{j,l} for each singular square.
GroupPresentation build_presentation(DClassGrid const& grid,
                                     SchreierSystem const& sys,
                                     std::vector<std::size_t> const& anchor,
                                     std::vector<SingularSquare> const& singulars);

// Bipartite graph: rows and columns as vertices, group cells as edges.
struct GHGraph {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Cell> edges;
};

GHGraph gh_graph(DClassGrid const& grid);
// Cycle rank E - V + 1 of the component containing the edge `root_cell`.
std::size_t free_rank(GHGraph const& g, std::size_t root_cell);

struct TietzeOptions {
  // Skip an elimination if it would produce a relator longer than this
  // (0 = no limit).
  std::size_t max_relator_length = 0;
};

// Repeatedly drops trivial and duplicate relators and eliminates a
// generator that occurs exactly once in some relator, shortest relator
// first and least generator first. Surviving generators keep their names.
GroupPresentation tietze_simplify(GroupPresentation const& p,
                                  TietzeOptions const& opts = {});

// Rewrites every generator of a partial row through the completion of its
// row into a total row:
//   X_{i,l} = X_{j,a(i)}^-1 X_{j,l},   X_{i,a(i)} = 1,
// where j is the total row supplied by lemma1_complete. `p` must be the
// build_presentation output for `grid`. The result has the total-row
// generators only. Throws StructuralError when a needed square is missing
// from `singulars`.
GroupPresentation eliminate_partial_rows(
    GroupPresentation const& p, DClassGrid const& grid,
    std::vector<SingularSquare> const& singulars,
    std::vector<std::size_t> const& anchor);

// Export formats.
std::string to_gap(GroupPresentation const& p);
std::string to_dot(GHGraph const& g, DClassGrid const& grid);

}  // namespace igpt
