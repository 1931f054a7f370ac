#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace igpt {

// A bijection of {0,...,k-1}, acting on the right like the maps in
// ptrans: x(gh) = (xg)h.
class Permutation {
 public:
  Permutation() = default;
  // Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t k);

  std::size_t degree() const noexcept { return img_.size(); }
  std::uint8_t operator[](std::size_t x) const noexcept { return img_[x]; }
  std::vector<std::uint8_t> const& images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // One-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

Permutation operator*(Permutation const& g, Permutation const& h);

// Order of the group generated by `gens`, by closure. An empty generating
// set gives the trivial group.
std::size_t perm_group_order(std::vector<Permutation> const& gens);

}  // namespace igpt
