#include "igpt/todd_coxeter.hpp"

#include <algorithm>

#include "igpt/errors.hpp"

namespace igpt {

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class Enumerator {
 public:
  Enumerator(GroupPresentation const& p, std::size_t max_cosets)
      : cols_(2 * p.generator_count()), max_(max_cosets) {
    for (auto const& r : p.relators()) {
      Word w = cyclic_reduce(r.word);
      if (!w.empty()) rels_.push_back(std::move(w));
    }
    new_coset();
  }

  CosetTable run() {
    for (std::uint32_t c = 0; c < parent_.size(); ++c) {
      if (overflow_) break;
      for (auto const& w : rels_) {
        if (!alive(c)) break;
        scan_and_fill(c, w);
        if (overflow_) break;
      }
      for (std::uint32_t x = 0; x < cols_ && alive(c) && !overflow_; ++x)
        if (at(c, x) == kNone) define(c, x);
    }
    CosetTable out;
    out.generators = cols_ / 2;
    if (overflow_) return out;
    compact(out);
    return out;
  }

 private:
  std::uint32_t& at(std::uint32_t c, std::uint32_t x) {
    return table_[std::size_t(c) * cols_ + x];
  }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    return c;
  }

  void define(std::uint32_t c, std::uint32_t x) {
    if (parent_.size() >= max_) {
      overflow_ = true;
      return;
    }
    std::uint32_t d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  void scan_and_fill(std::uint32_t c, Word const& w) {
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    while (true) {
      while (i < j && at(f, w[i].code()) != kNone) f = at(f, w[i++].code());
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1].code() ^ 1u) != kNone)
        b = at(b, w[--j].code() ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i].code()) = b;
        at(b, w[i].code() ^ 1u) = f;
        return;
      }
      define(f, w[i].code());
      if (overflow_) return;
    }
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    q.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> q;
    merge(a, b, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::uint32_t e = q[i];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::uint32_t f = at(e, x);
        if (f == kNone) continue;
        at(f, x ^ 1u) = kNone;
        std::uint32_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kNone) {
          merge(f1, at(e1, x), q);
        } else if (at(f1, x ^ 1u) != kNone) {
          merge(e1, at(f1, x ^ 1u), q);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1u) = e1;
        }
      }
    }
  }

  void compact(CosetTable& out) {
    std::vector<std::uint32_t> index(parent_.size(), kNone);
    std::uint32_t live = 0;
    for (std::uint32_t c = 0; c < parent_.size(); ++c)
      if (alive(c)) index[c] = live++;
    out.status = CosetStatus::Complete;
    out.cosets = live;
    out.table.assign(std::size_t(live) * cols_, kNone);
    for (std::uint32_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::uint32_t d = at(c, x);
        if (d == kNone || !alive(d))
          throw StructuralError("coset table incomplete after enumeration");
        out.table[std::size_t(index[c]) * cols_ + x] = index[d];
      }
    }
  }

  std::uint32_t cols_;
  std::size_t max_;
  std::vector<Word> rels_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> table_;
  bool overflow_ = false;
};

}  // namespace

CosetTable todd_coxeter(GroupPresentation const& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw PreconditionError("max_cosets must be positive");
  return Enumerator(p, max_cosets).run();
}

bool coset_table_consistent(CosetTable const& t, GroupPresentation const& p) {
  if (t.status != CosetStatus::Complete) return false;
  std::size_t cols = 2 * t.generators;
  if (t.generators != p.generator_count() || t.table.size() != t.cosets * cols)
    return false;
  for (std::size_t c = 0; c < t.cosets; ++c) {
    for (std::uint32_t x = 0; x < cols; ++x) {
      std::uint32_t d = t.table[c * cols + x];
      if (d >= t.cosets || t.table[d * cols + (x ^ 1u)] != c) return false;
    }
  }
  for (auto const& r : p.relators()) {
    for (std::size_t c = 0; c < t.cosets; ++c) {
      std::size_t d = c;
      for (Letter l : r.word) d = t(d, l);
      if (d != c) return false;
    }
  }
  return true;
}

}  // namespace igpt
