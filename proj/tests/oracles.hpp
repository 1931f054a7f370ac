#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <set>
#include <vector>

#include "igpt/perm.hpp"
#include "igpt/presentation.hpp"
#include "igpt/ptrans.hpp"

namespace oracle {

using igpt::PartialMap;

// Raw image vector, kUndefined for undefined points.
inline std::vector<std::uint8_t> images(PartialMap const& a) {
  std::vector<std::uint8_t> v(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) v[x] = a[x];
  return v;
}

// Every partial (or total) map of degree n, by counting in base n+1.
inline std::vector<PartialMap> all_maps(std::size_t n, bool total) {
  std::vector<PartialMap> out;
  std::size_t base = total ? n : n + 1;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t x = 0; x < n; ++x)
      v[x] = digit[x] == n ? igpt::kUndefined : static_cast<std::uint8_t>(digit[x]);
    out.push_back(PartialMap::from_images(v));
    std::size_t i = 0;
    while (i < n && ++digit[i] == base) digit[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Pointwise product without using igpt::compose.
inline PartialMap product(PartialMap const& a, PartialMap const& b) {
  std::vector<std::uint8_t> v(a.degree(), igpt::kUndefined);
  for (std::size_t x = 0; x < a.degree(); ++x)
    if (a[x] != igpt::kUndefined) v[x] = b[a[x]];
  return PartialMap::from_images(v);
}

// Green's relations from principal ideals of a finite monoid given as a
// full element list.
class Green {
 public:
  explicit Green(std::vector<PartialMap> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
    for (auto const& a : elems_) {
      std::set<std::size_t> right, left, two;
      for (auto const& s : elems_) {
        right.insert(index_.at(product(a, s)));
        left.insert(index_.at(product(s, a)));
      }
      for (auto const& s : elems_)
        for (auto const& t : elems_) two.insert(index_.at(product(product(s, a), t)));
      right_.push_back(std::move(right));
      left_.push_back(std::move(left));
      two_.push_back(std::move(two));
    }
  }
  std::vector<PartialMap> const& elements() const { return elems_; }
  bool R(std::size_t a, std::size_t b) const { return right_[a] == right_[b]; }
  bool L(std::size_t a, std::size_t b) const { return left_[a] == left_[b]; }
  // D = J in a finite monoid.
  bool D(std::size_t a, std::size_t b) const { return two_[a] == two_[b]; }
  std::size_t d_class_count() const {
    return std::set<std::set<std::size_t>>(two_.begin(), two_.end()).size();
  }

 private:
  std::vector<PartialMap> elems_;
  std::map<PartialMap, std::size_t> index_;
  std::vector<std::set<std::size_t>> right_, left_, two_;
};

// Closure of a set of maps under composition.
inline std::set<PartialMap> closure(std::vector<PartialMap> const& gens) {
  std::set<PartialMap> seen(gens.begin(), gens.end());
  std::vector<PartialMap> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<PartialMap> next;
    for (auto const& a : frontier)
      for (auto const& g : gens) {
        auto ag = product(a, g);
        if (seen.insert(ag).second) next.push_back(ag);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Order of a permutation group given by generator image lists, by
// breadth-first closure of words in the generators.
inline std::size_t perm_closure_order(
    std::vector<std::vector<int>> const& gens) {
  if (gens.empty()) return 1;
  std::size_t n = gens.front().size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const& p : frontier)
      for (auto const& g : gens) {
        std::vector<int> q(n);
        for (std::size_t x = 0; x < n; ++x) q[x] = g[p[x]];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Whether the relators hold for the given permutation images.
inline bool relators_hold(igpt::GroupPresentation const& p,
                          std::vector<std::vector<int>> const& gens) {
  std::size_t n = gens.front().size();
  for (auto const& r : p.relators()) {
    std::vector<int> acc(n);
    std::iota(acc.begin(), acc.end(), 0);
    for (auto l : r.word) {
      auto const& g = gens[l.gen()];
      std::vector<int> step(n);
      if (l.inverse()) {
        for (std::size_t x = 0; x < n; ++x) step[g[x]] = static_cast<int>(x);
      } else {
        step = g;
      }
      for (auto& v : acc) v = step[v];
    }
    for (std::size_t x = 0; x < n; ++x)
      if (acc[x] != static_cast<int>(x)) return false;
  }
  return true;
}

// |Hom(G, Z_m)| by trying every assignment of the generators.
inline std::size_t hom_count_cyclic(igpt::GroupPresentation const& p,
                                    std::size_t m) {
  std::size_t g = p.generator_count();
  std::vector<std::size_t> val(g, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (auto const& r : p.relators()) {
      long long s = 0;
      for (auto l : r.word) s += l.exponent() * static_cast<long long>(val[l.gen()]);
      if (((s % (long long)m) + (long long)m) % (long long)m != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < g && ++val[i] == m) val[i++] = 0;
    if (i == g) break;
  }
  return count;
}

// |Hom(Z^r x Z_d1 x ..., Z_m)| = m^r * prod gcd(d_i, m).
inline std::size_t predicted_hom_count(std::vector<long long> const& torsion,
                                       std::size_t free_rank, std::size_t m) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < free_rank; ++i) c *= m;
  for (long long d : torsion) c *= std::gcd(static_cast<std::size_t>(d), m);
  return c;
}

// A small presentation together with what is known about the group it
// defines. Finite groups carry a faithful permutation model whose closure
// gives the order; infinite ones carry none.
struct KnownGroup {
  std::string name;
  igpt::GroupPresentation presentation;
  std::vector<std::vector<int>> model;
  std::optional<std::size_t> order;
  std::vector<long long> torsion;
  std::size_t free_rank = 0;
};

// Relators written as strings over a, b, c; upper case is the inverse.
inline igpt::GroupPresentation parse_presentation(
    std::size_t gens, std::vector<std::string> const& relators) {
  std::vector<std::string> names;
  for (std::size_t g = 0; g < gens; ++g) names.push_back(std::string(1, char('a' + g)));
  igpt::GroupPresentation p(names);
  for (auto const& r : relators) {
    igpt::Word w;
    for (char ch : r) {
      bool inv = ch >= 'A' && ch <= 'Z';
      w.push_back(igpt::Letter(std::uint32_t((inv ? ch - 'A' : ch - 'a')), inv));
    }
    p.add_relator(w, igpt::RelatorKind::Tietze);
  }
  return p;
}

inline std::vector<KnownGroup> known_groups() {
  auto pp = parse_presentation;
  return {
      {"cyclic 3", pp(1, {"aaa"}), {{1, 2, 0}}, 3, {3}, 0},
      {"cyclic 5", pp(1, {"aaaaa"}), {{1, 2, 3, 4, 0}}, 5, {5}, 0},
      {"cyclic 6", pp(1, {"aaaaaa"}), {{1, 2, 3, 4, 5, 0}}, 6, {6}, 0},
      {"S3 Coxeter", pp(2, {"aa", "bb", "ababab"}), {{1, 0, 2}, {0, 2, 1}}, 6, {2}, 0},
      {"S3 dihedral", pp(2, {"aaa", "bb", "abab"}), {{1, 2, 0}, {1, 0, 2}}, 6, {2}, 0},
      {"dihedral 8", pp(2, {"aaaa", "bb", "abab"}), {{1, 2, 3, 0}, {0, 3, 2, 1}}, 8, {2, 2}, 0},
      {"dihedral 10", pp(2, {"aaaaa", "bb", "abab"}),
       {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, 10, {2}, 0},
      {"quaternion", pp(2, {"aaaa", "aaBB", "Baba"}),
       {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, 8, {2, 2}, 0},
      {"A4", pp(2, {"aa", "bbb", "ababab"}), {{1, 0, 3, 2}, {1, 2, 0, 3}}, 12, {3}, 0},
      {"S4 Coxeter", pp(3, {"aa", "bb", "cc", "ababab", "bcbcbc", "acac"}),
       {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}, 24, {2}, 0},
      {"Z2 x Z3", pp(2, {"aa", "bbb", "abAB"}), {{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}}, 6, {6}, 0},
      {"Klein four", pp(2, {"aa", "bb", "abab"}), {{1, 0, 2, 3}, {0, 1, 3, 2}}, 4, {2, 2}, 0},
      {"trivial", pp(2, {"a", "b"}), {{0}, {0}}, 1, {}, 0},
      {"free rank 1", pp(1, {}), {}, std::nullopt, {}, 1},
      {"free rank 2", pp(2, {}), {}, std::nullopt, {}, 2},
      {"free rank 3", pp(3, {}), {}, std::nullopt, {}, 3},
      {"Z x Z2", pp(2, {"aa"}), {}, std::nullopt, {2}, 1},
      {"Z^3 by a commutator", pp(3, {"abAB"}), {}, std::nullopt, {}, 3},
  };
}

}  // namespace oracle
