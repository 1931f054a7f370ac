#pragma once

// Partial transformations of {1,...,n}, composed left to right:
// x(ab) = (xa)b. Points are stored 0-based; text I/O is 1-based.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace igpt {

enum class Monoid { Total, Partial };

std::string_view to_string(Monoid m);
Monoid parse_monoid(std::string_view s);

using Point = std::uint8_t;
inline constexpr Point kUndefined = 0xFF;
inline constexpr std::size_t kMaxDegree = 16;

class PartialMap {
 public:
  PartialMap() = default;
  // The empty map of degree n.
  explicit PartialMap(std::size_t n);

  static PartialMap identity(std::size_t n);
  // Images are 0-based; kUndefined marks points outside the domain.
  static PartialMap from_images(std::vector<Point> const& images);
  // 1-based list, 0 meaning undefined: {2,2,0} is [2,2,-].
  static PartialMap from_one_based(std::vector<int> const& images);
  // Parses the textual form "[2,2,-]".
  static PartialMap parse(std::string_view text);

  std::size_t degree() const noexcept { return n_; }
  Point operator[](std::size_t x) const noexcept { return img_[x]; }
  bool defined(std::size_t x) const noexcept { return img_[x] != kUndefined; }
  void set(std::size_t x, Point y) noexcept { img_[x] = y; }

  bool is_total() const noexcept;
  std::size_t domain_size() const noexcept;

  // "[2,2,-]"
  std::string to_string() const;

  friend bool operator==(PartialMap const&, PartialMap const&) = default;
  friend auto operator<=>(PartialMap const&, PartialMap const&) = default;

  std::size_t hash() const noexcept;

 private:
  static constexpr std::array<Point, kMaxDegree> blank() {
    std::array<Point, kMaxDegree> a{};
    a.fill(kUndefined);
    return a;
  }

  std::uint8_t n_ = 0;
  std::array<Point, kMaxDegree> img_ = blank();
};

// Left-to-right product.
PartialMap compose(PartialMap const& a, PartialMap const& b);
inline PartialMap operator*(PartialMap const& a, PartialMap const& b) {
  return compose(a, b);
}

// Partition of a subset of the ground set. Blocks are sorted and ordered
// by their minimum, so equality is structural.
struct KernelPartition {
  std::vector<Point> domain;
  std::vector<std::vector<Point>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  bool is_full(std::size_t n) const noexcept { return domain.size() == n; }
  std::string to_string() const;

  friend bool operator==(KernelPartition const&,
                         KernelPartition const&) = default;
};

// Row order: larger domains first, then lexicographic on the block list.
bool operator<(KernelPartition const& a, KernelPartition const& b);

struct ImageSet {
  std::vector<Point> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Point p) const noexcept;
  std::string to_string() const;

  friend bool operator==(ImageSet const&, ImageSet const&) = default;
  friend auto operator<=>(ImageSet const&, ImageSet const&) = default;
};

KernelPartition kernel(PartialMap const& a);
ImageSet image(PartialMap const& a);
std::size_t rank(PartialMap const& a);
ImageSet fixpoints(PartialMap const& a);
bool is_idempotent(PartialMap const& a);

// Whether `im` meets every block of `kp` exactly once and lies in its domain.
bool is_transversal(KernelPartition const& kp, ImageSet const& im);

// The unique idempotent with kernel `kp` and image `im`.
// Throws PreconditionError when `im` is not a transversal of `kp`.
PartialMap idempotent_from_cell(std::size_t n, KernelPartition const& kp,
                                ImageSet const& im);

// All rank-k idempotents of T_n or PT_n, ordered by (kernel, image).
std::vector<PartialMap> enumerate_idempotents(std::size_t n, std::size_t k,
                                              Monoid monoid);

// Every element of T_n or PT_n, ordered by images.
std::vector<PartialMap> enumerate_monoid(std::size_t n, Monoid monoid);

// Row index set: partitions of subsets of size >= k into k blocks
// (only full-domain partitions for Total), sorted by operator<.
std::vector<KernelPartition> enumerate_kernels(std::size_t n, std::size_t k,
                                               Monoid monoid);

// Column index set: k-subsets in lexicographic order.
std::vector<ImageSet> enumerate_images(std::size_t n, std::size_t k);

}  // namespace igpt

template <>
struct std::hash<igpt::PartialMap> {
  std::size_t operator()(igpt::PartialMap const& a) const noexcept {
    return a.hash();
  }
};
