#include "igpt/perm.hpp"

#include <set>

#include "igpt/errors.hpp"

namespace igpt {

Permutation::Permutation(std::vector<std::uint8_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto y : img_) {
    if (y >= img_.size() || seen[y])
      throw PreconditionError("permutation images are not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::uint8_t> img(k);
  for (std::size_t x = 0; x < k; ++x) img[x] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    inv[img_[x]] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (done[x] || img_[x] == x) continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!done[y]) {
      done[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
      y = img_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const& g, Permutation const& h) {
  if (g.degree() != h.degree())
    throw DimensionError("permutation degrees differ");
  std::vector<std::uint8_t> img(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x) img[x] = h[g[x]];
  return Permutation(std::move(img));
}

std::size_t perm_group_order(std::vector<Permutation> const& gens) {
  if (gens.empty()) return 1;
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& g : frontier) {
      for (auto const& s : gens) {
        auto gs = g * s;
        if (seen.insert(gs).second) next.push_back(std::move(gs));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace igpt
