#include "igpt/ptrans.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "igpt/errors.hpp"

namespace igpt {

std::string_view to_string(Monoid m) {
  return m == Monoid::Total ? "t" : "pt";
}

Monoid parse_monoid(std::string_view s) {
  if (s == "t" || s == "T" || s == "total") return Monoid::Total;
  if (s == "pt" || s == "PT" || s == "partial") return Monoid::Partial;
  throw PreconditionError("unknown monoid '" + std::string(s) +
                          "' (expected t or pt)");
}

PartialMap::PartialMap(std::size_t n) {
  if (n > kMaxDegree) {
    throw PreconditionError("degree " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxDegree));
  }
  n_ = static_cast<std::uint8_t>(n);
}

PartialMap PartialMap::identity(std::size_t n) {
  PartialMap a(n);
  for (std::size_t x = 0; x < n; ++x) a.img_[x] = static_cast<Point>(x);
  return a;
}

PartialMap PartialMap::from_images(std::vector<Point> const& images) {
  PartialMap a(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    Point y = images[x];
    if (y != kUndefined && y >= images.size()) {
      throw PreconditionError("image " + std::to_string(int(y) + 1) +
                              " out of range 1.." +
                              std::to_string(images.size()));
    }
    a.img_[x] = y;
  }
  return a;
}

PartialMap PartialMap::from_one_based(std::vector<int> const& images) {
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (int y : images) {
    if (y < 0 || y > static_cast<int>(images.size())) {
      throw PreconditionError("image " + std::to_string(y) +
                              " out of range 1.." +
                              std::to_string(images.size()));
    }
    zero_based.push_back(y == 0 ? kUndefined : static_cast<Point>(y - 1));
  }
  return from_images(zero_based);
}

PartialMap PartialMap::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw PreconditionError("malformed partial map '" + std::string(text) +
                            "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> images;
  if (!trim(text).empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      std::string_view tok = trim(text.substr(
          start, comma == std::string_view::npos ? comma : comma - start));
      if (tok == "-") {
        images.push_back(0);
      } else {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
          throw PreconditionError("malformed entry '" + std::string(tok) +
                                  "' in partial map");
        }
        images.push_back(v);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return from_one_based(images);
}

bool PartialMap::is_total() const noexcept {
  for (std::size_t x = 0; x < n_; ++x)
    if (img_[x] == kUndefined) return false;
  return true;
}

std::size_t PartialMap::domain_size() const noexcept {
  std::size_t d = 0;
  for (std::size_t x = 0; x < n_; ++x) d += img_[x] != kUndefined;
  return d;
}

std::string PartialMap::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < n_; ++x) {
    if (x) out += ',';
    out += img_[x] == kUndefined ? std::string("-")
                                 : std::to_string(int(img_[x]) + 1);
  }
  return out + "]";
}

std::size_t PartialMap::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t x = 0; x < n_; ++x) h = h * 31 + img_[x];
  return h;
}

PartialMap compose(PartialMap const& a, PartialMap const& b) {
  if (a.degree() != b.degree()) {
    throw DimensionError("cannot compose maps of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  PartialMap c(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) {
    Point y = a[x];
    if (y != kUndefined) c.set(x, b[y]);
  }
  return c;
}

namespace {

std::string point_list(std::vector<Point> const& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(int(pts[i]) + 1);
  }
  return out + "}";
}

}  // namespace

std::string KernelPartition::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ',';
    out += point_list(blocks[b]);
  }
  return out + "}";
}

bool operator<(KernelPartition const& a, KernelPartition const& b) {
  if (a.domain.size() != b.domain.size())
    return a.domain.size() > b.domain.size();
  return a.blocks < b.blocks;
}

bool ImageSet::contains(Point p) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), p);
}

std::string ImageSet::to_string() const { return point_list(elements); }

KernelPartition kernel(PartialMap const& a) {
  KernelPartition kp;
  std::array<int, kMaxDegree> block_of;
  block_of.fill(-1);
  for (std::size_t x = 0; x < a.degree(); ++x) {
    if (!a.defined(x)) continue;
    kp.domain.push_back(static_cast<Point>(x));
    int& b = block_of[a[x]];
    if (b < 0) {
      b = static_cast<int>(kp.blocks.size());
      kp.blocks.emplace_back();
    }
    kp.blocks[b].push_back(static_cast<Point>(x));
  }
  // Blocks were opened in order of their least element, so they are
  // already canonical.
  return kp;
}

ImageSet image(PartialMap const& a) {
  std::array<bool, kMaxDegree> hit{};
  for (std::size_t x = 0; x < a.degree(); ++x)
    if (a.defined(x)) hit[a[x]] = true;
  ImageSet im;
  for (std::size_t y = 0; y < a.degree(); ++y)
    if (hit[y]) im.elements.push_back(static_cast<Point>(y));
  return im;
}

std::size_t rank(PartialMap const& a) { return image(a).size(); }

ImageSet fixpoints(PartialMap const& a) {
  ImageSet fx;
  for (std::size_t x = 0; x < a.degree(); ++x)
    if (a[x] == x) fx.elements.push_back(static_cast<Point>(x));
  return fx;
}

bool is_idempotent(PartialMap const& a) { return image(a) == fixpoints(a); }

bool is_transversal(KernelPartition const& kp, ImageSet const& im) {
  if (im.size() != kp.blocks.size()) return false;
  for (auto const& block : kp.blocks) {
    std::size_t hits = 0;
    for (Point p : block) hits += im.contains(p);
    if (hits != 1) return false;
  }
  return true;
}

PartialMap idempotent_from_cell(std::size_t n, KernelPartition const& kp,
                                ImageSet const& im) {
  if (!is_transversal(kp, im)) {
    throw PreconditionError("image " + im.to_string() +
                            " is not a transversal of kernel " +
                            kp.to_string());
  }
  PartialMap e(n);
  for (auto const& block : kp.blocks) {
    Point rep = *std::find_if(block.begin(), block.end(),
                              [&](Point p) { return im.contains(p); });
    for (Point p : block) e.set(p, rep);
  }
  return e;
}

namespace {

// Set partitions of `pts` into exactly k blocks, canonical block order.
void partitions_into(std::vector<Point> const& pts, std::size_t k,
                     std::vector<std::vector<std::vector<Point>>>& out) {
  std::vector<std::vector<Point>> blocks;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    std::size_t left = pts.size() - idx;
    if (blocks.size() + left < k) return;
    if (idx == pts.size()) {
      if (blocks.size() == k) out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(pts[idx]);
      self(self, idx + 1);
      blocks[b].pop_back();
    }
    if (blocks.size() < k) {
      blocks.push_back({pts[idx]});
      self(self, idx + 1);
      blocks.pop_back();
    }
  };
  rec(rec, 0);
}

void check_rank(std::size_t n, std::size_t k, Monoid monoid) {
  if (n == 0 || n > kMaxDegree)
    throw PreconditionError("degree must lie in 1.." +
                            std::to_string(kMaxDegree));
  if (k > n)
    throw PreconditionError("rank " + std::to_string(k) + " exceeds degree " +
                            std::to_string(n));
  if (monoid == Monoid::Total && k == 0)
    throw PreconditionError("T_n has no elements of rank 0");
}

}  // namespace

std::vector<KernelPartition> enumerate_kernels(std::size_t n, std::size_t k,
                                               Monoid monoid) {
  check_rank(n, k, monoid);
  std::vector<KernelPartition> rows;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t m = static_cast<std::size_t>(__builtin_popcount(mask));
    if (m < k) continue;
    if (monoid == Monoid::Total && m != n) continue;
    std::vector<Point> dom;
    for (std::size_t x = 0; x < n; ++x)
      if (mask & (1u << x)) dom.push_back(static_cast<Point>(x));
    std::vector<std::vector<std::vector<Point>>> parts;
    partitions_into(dom, k, parts);
    for (auto& blocks : parts) rows.push_back({dom, std::move(blocks)});
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<ImageSet> enumerate_images(std::size_t n, std::size_t k) {
  std::vector<ImageSet> cols;
  std::vector<Point> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == k) {
      cols.push_back({pick});
      return;
    }
    for (std::size_t y = from; y + (k - pick.size()) <= n; ++y) {
      pick.push_back(static_cast<Point>(y));
      self(self, y + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return cols;
}

std::vector<PartialMap> enumerate_idempotents(std::size_t n, std::size_t k,
                                              Monoid monoid) {
  std::vector<PartialMap> out;
  auto cols = enumerate_images(n, k);
  for (auto const& kp : enumerate_kernels(n, k, monoid))
    for (auto const& im : cols)
      if (is_transversal(kp, im)) out.push_back(idempotent_from_cell(n, kp, im));
  return out;
}

std::vector<PartialMap> enumerate_monoid(std::size_t n, Monoid monoid) {
  if (n == 0 || n > 8)
    throw PreconditionError("enumerate_monoid supports degrees 1..8");
  std::size_t base = monoid == Monoid::Total ? n : n + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  std::vector<PartialMap> out;
  out.reserve(total);
  std::vector<Point> images(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t x = n; x-- > 0;) {
      std::size_t d = c % base;
      c /= base;
      images[x] = d == n ? kUndefined : static_cast<Point>(d);
    }
    out.push_back(PartialMap::from_images(images));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace igpt
