#include "igpt/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "igpt/errors.hpp"

namespace igpt {

Word inverse(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word free_reduce(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

namespace {

// Least rotation, two-pointer minimum expression method.
Word least_rotation(Word const& w) {
  std::size_t n = w.size();
  if (n < 2) return w;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = w[(i + k) % n], b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  std::size_t start = std::min(i, j);
  Word out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(w[(start + t) % n]);
  return out;
}

}  // namespace

Word canonical_form(Word const& w) {
  Word r = cyclic_reduce(w);
  Word a = least_rotation(r);
  Word b = least_rotation(inverse(r));
  return std::min(a, b);
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = w.size();
  for (Letter l : w) h = h * 1000003u ^ l.code();
  return h;
}

std::string_view to_string(RelatorKind k) {
  switch (k) {
    case RelatorKind::Type1: return "type1";
    case RelatorKind::Type2: return "type2";
    case RelatorKind::Type3: return "type3";
    case RelatorKind::Tietze: return "tietze";
  }
  return "?";
}

GroupPresentation::GroupPresentation(std::vector<std::string> generator_names)
    : names_(std::move(generator_names)) {}

std::size_t GroupPresentation::add_generator(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

bool GroupPresentation::add_relator(Word const& w, RelatorKind kind) {
  for (Letter l : w)
    if (l.gen() >= names_.size())
      throw PreconditionError("relator references unknown generator");
  Word r = free_reduce(w);
  if (r.empty()) return false;
  if (!seen_.insert(canonical_form(r)).second) return false;
  relators_.push_back({std::move(r), kind});
  return true;
}

std::size_t GroupPresentation::count(RelatorKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(relators_.begin(), relators_.end(),
                    [&](Relator const& r) { return r.kind == kind; }));
}

std::size_t GroupPresentation::total_length() const {
  std::size_t len = 0;
  for (auto const& r : relators_) len += r.word.size();
  return len;
}

std::string GroupPresentation::word_to_string(Word const& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += '*';
    out += names_[w[t].gen()];
    if (w[t].inverse()) out += "^-1";
  }
  return out;
}

std::string generator_name(Cell c) {
  return "X_" + std::to_string(c.row + 1) + "_" + std::to_string(c.col + 1);
}

GroupPresentation build_presentation(
    DClassGrid const& grid, SchreierSystem const& sys,
    std::vector<std::size_t> const& anchor,
    std::vector<SingularSquare> const& singulars) {
  std::vector<std::string> names;
  names.reserve(grid.cell_count());
  for (std::size_t id = 0; id < grid.cell_count(); ++id)
    names.push_back(generator_name(grid.cell(id)));
  GroupPresentation p(std::move(names));
  auto gen = [&](std::size_t r, std::size_t c) {
    std::size_t id = grid.cell_id(r, c);
    if (id == kNoCell) throw StructuralError("relator uses a non-group cell");
    return static_cast<std::uint32_t>(id);
  };

  for (std::size_t i = 0; i < grid.row_count(); ++i)
    p.add_relator({Letter(gen(i, anchor[i]), false)}, RelatorKind::Type1);

  std::map<EWord, std::size_t> col_of_word;
  for (std::size_t c = 0; c < grid.col_count(); ++c) col_of_word[sys.r[c]] = c;
  for (std::size_t mu = 0; mu < grid.col_count(); ++mu) {
    auto const& w = sys.r[mu];
    if (w.empty()) continue;
    Cell last = grid.cell(w.back());
    if (last.col != mu) continue;
    auto it = col_of_word.find(EWord(w.begin(), w.end() - 1));
    if (it == col_of_word.end()) continue;
    std::size_t lambda = it->second, i = last.row;
    p.add_relator({Letter(gen(i, lambda), false), Letter(gen(i, mu), true)},
                  RelatorKind::Type2);
  }

  for (auto const& s : singulars) {
    auto const& q = s.square;
    p.add_relator({Letter(gen(q.top, q.left), true),
                   Letter(gen(q.top, q.right), false),
                   Letter(gen(q.bottom, q.right), true),
                   Letter(gen(q.bottom, q.left), false)},
                  RelatorKind::Type3);
  }
  return p;
}

GHGraph gh_graph(DClassGrid const& grid) {
  GHGraph g{grid.row_count(), grid.col_count(), {}};
  for (std::size_t id = 0; id < grid.cell_count(); ++id)
    g.edges.push_back(grid.cell(id));
  return g;
}

std::size_t free_rank(GHGraph const& g, std::size_t root_cell) {
  if (root_cell >= g.edges.size())
    throw PreconditionError("free_rank: root cell is not an edge");
  std::size_t nv = g.rows + g.cols;
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto const& e : g.edges) parent[find(e.row)] = find(g.rows + e.col);
  std::size_t comp = find(g.edges[root_cell].row);
  std::size_t vertices = 0, edges = 0;
  for (std::size_t v = 0; v < nv; ++v) vertices += find(v) == comp;
  for (auto const& e : g.edges) edges += find(e.row) == comp;
  return edges - vertices + 1;
}

namespace {

// Mutable relator store used during simplification.
class TietzeState {
 public:
  TietzeState(GroupPresentation const& p, TietzeOptions const& opts)
      : opts_(opts),
        occ_(p.generator_count()),
        alive_gen_(p.generator_count(), true) {
    for (auto const& r : p.relators()) insert(cyclic_reduce(r.word), r.kind);
  }

  void run() {
    while (!pending_.empty()) {
      auto [len, id] = *pending_.begin();
      pending_.erase(pending_.begin());
      if (!alive_[id]) continue;
      try_eliminate(id);
    }
  }

  GroupPresentation result(GroupPresentation const& p) const {
    std::vector<std::uint32_t> renumber(alive_gen_.size(), 0);
    std::vector<std::string> names;
    for (std::size_t g = 0; g < alive_gen_.size(); ++g) {
      if (!alive_gen_[g]) continue;
      renumber[g] = static_cast<std::uint32_t>(names.size());
      names.push_back(p.generator_names()[g]);
    }
    GroupPresentation out(std::move(names));
    for (std::size_t id = 0; id < words_.size(); ++id) {
      if (!alive_[id]) continue;
      Word w;
      for (Letter l : words_[id]) w.emplace_back(renumber[l.gen()], l.inverse());
      out.add_relator(w, kinds_[id]);
    }
    return out;
  }

 private:
  void insert(Word w, RelatorKind kind) {
    if (w.empty()) return;
    Word canon = canonical_form(w);
    if (canon_.contains(canon)) return;
    std::size_t id = words_.size();
    canon_.insert(canon);
    for (Letter l : w) occ_[l.gen()].push_back(id);
    words_.push_back(std::move(w));
    canons_.push_back(std::move(canon));
    kinds_.push_back(kind);
    alive_.push_back(true);
    pending_.insert({words_.back().size(), id});
  }

  void kill(std::size_t id) {
    alive_[id] = false;
    canon_.erase(canons_[id]);
    pending_.erase({words_[id].size(), id});
  }

  void try_eliminate(std::size_t id) {
    Word const& w = words_[id];
    std::map<std::uint32_t, std::size_t> seen;
    for (Letter l : w) ++seen[l.gen()];
    for (auto [x, cnt] : seen) {
      if (cnt != 1) continue;
      auto pos = std::find_if(w.begin(), w.end(),
                              [x = x](Letter l) { return l.gen() == x; });
      // w = u x^e v, so x^e = u^-1 v^-1 and x = (v u)^-e.
      Word vu(pos + 1, w.end());
      vu.insert(vu.end(), w.begin(), pos);
      Word replacement = pos->inverse() ? vu : inverse(vu);
      if (opts_.max_relator_length && !fits(x, replacement)) continue;
      eliminate(id, x, replacement);
      return;
    }
  }

  bool fits(std::uint32_t x, Word const& replacement) const {
    for (std::size_t rid : occ_[x]) {
      if (!alive_[rid]) continue;
      std::size_t len = 0;
      for (Letter l : words_[rid])
        len += l.gen() == x ? replacement.size() : 1;
      if (len > opts_.max_relator_length) return false;
    }
    return true;
  }

  void eliminate(std::size_t id, std::uint32_t x, Word const& replacement) {
    kill(id);
    alive_gen_[x] = false;
    Word rep_inv = inverse(replacement);
    std::vector<std::size_t> touched = std::move(occ_[x]);
    occ_[x].clear();
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t rid : touched) {
      if (!alive_[rid]) continue;
      Word next;
      bool hit = false;
      for (Letter l : words_[rid]) {
        if (l.gen() != x) {
          next.push_back(l);
          continue;
        }
        hit = true;
        auto const& sub = l.inverse() ? rep_inv : replacement;
        next.insert(next.end(), sub.begin(), sub.end());
      }
      if (!hit) continue;
      RelatorKind kind = kinds_[rid];
      kill(rid);
      insert(cyclic_reduce(next), kind);
    }
  }

  TietzeOptions opts_;
  std::vector<Word> words_;
  std::vector<Word> canons_;
  std::vector<RelatorKind> kinds_;
  std::vector<bool> alive_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<bool> alive_gen_;
  std::unordered_set<Word, WordHash> canon_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

GroupPresentation tietze_simplify(GroupPresentation const& p,
                                  TietzeOptions const& opts) {
  TietzeState state(p, opts);
  state.run();
  return state.result(p);
}

GroupPresentation eliminate_partial_rows(
    GroupPresentation const& p, DClassGrid const& grid,
    std::vector<SingularSquare> const& singulars,
    std::vector<std::size_t> const& anchor) {
  if (grid.monoid() != Monoid::Partial)
    throw PreconditionError("eliminate_partial_rows expects a PT_n grid");
  if (p.generator_count() != grid.cell_count())
    throw PreconditionError("presentation does not match the grid");

  std::set<Square> singular;
  for (auto const& s : singulars) singular.insert(s.square);

  // New generator numbering: total-row cells in id order.
  std::vector<std::uint32_t> renumber(grid.cell_count(), 0);
  std::vector<std::string> names;
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    if (!grid.row_is_total(grid.cell(id).row)) continue;
    renumber[id] = static_cast<std::uint32_t>(names.size());
    names.push_back(p.generator_names()[id]);
  }

  std::vector<Word> subst(grid.cell_count());
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    Cell c = grid.cell(id);
    if (grid.row_is_total(c.row)) {
      subst[id] = {Letter(renumber[id], false)};
      continue;
    }
    std::size_t a = anchor[c.row];
    if (c.col == a) continue;  // X_{i,a(i)} = 1
    auto done = lemma1_complete(grid.idempotent(c.row, a), grid.idempotent(id));
    auto j = grid.find_row(kernel(done.alpha_total));
    if (!j || !grid.row_is_total(*j) || !grid.is_group(*j, a) ||
        !grid.is_group(*j, c.col))
      throw StructuralError("completion of " + generator_name(c) +
                            " does not land in a total row");
    Square key{std::min(c.row, *j), std::max(c.row, *j), std::min(a, c.col),
               std::max(a, c.col)};
    if (!singular.contains(key))
      throw StructuralError("no singular square eliminates " +
                            generator_name(c));
    subst[id] = {Letter(renumber[grid.cell_id(*j, a)], true),
                 Letter(renumber[grid.cell_id(*j, c.col)], false)};
  }

  GroupPresentation out(std::move(names));
  for (auto const& r : p.relators()) {
    Word w;
    for (Letter l : r.word) {
      Word const& s = subst[l.gen()];
      Word piece = l.inverse() ? inverse(s) : s;
      w.insert(w.end(), piece.begin(), piece.end());
    }
    out.add_relator(w, r.kind);
  }
  return out;
}

std::string to_gap(GroupPresentation const& p) {
  std::ostringstream os;
  os << "F := FreeGroup(";
  if (p.generator_count() == 0) {
    os << "0";
  } else {
    os << "[";
    for (std::size_t g = 0; g < p.generator_count(); ++g)
      os << (g ? ", " : "") << '"' << p.generator_names()[g] << '"';
    os << "]";
  }
  os << ");;\n";
  os << "gens := GeneratorsOfGroup(F);;\n";
  os << "rels := [";
  bool first = true;
  for (auto const& r : p.relators()) {
    os << (first ? "\n  " : ",\n  ");
    first = false;
    for (std::size_t t = 0; t < r.word.size(); ++t) {
      if (t) os << '*';
      os << "gens[" << r.word[t].gen() + 1 << "]";
      if (r.word[t].inverse()) os << "^-1";
    }
  }
  os << (first ? "];;\n" : "\n];;\n");
  os << "G := F / rels;;\n";
  return os.str();
}

std::string to_dot(GHGraph const& g, DClassGrid const& grid) {
  std::ostringstream os;
  os << "graph GrahamHoughton {\n";
  for (std::size_t r = 0; r < g.rows; ++r)
    os << "  r" << r + 1 << " [shape=box, label=\"" << grid.rows()[r].to_string()
       << "\"];\n";
  for (std::size_t c = 0; c < g.cols; ++c)
    os << "  c" << c + 1 << " [shape=circle, label=\""
       << grid.cols()[c].to_string() << "\"];\n";
  for (auto const& e : g.edges)
    os << "  r" << e.row + 1 << " -- c" << e.col + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace igpt
