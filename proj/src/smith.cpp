#include "igpt/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "igpt/errors.hpp"

namespace igpt {

std::string AbelianInvariants::to_string() const {
  std::string out;
  if (free_rank > 0)
    out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto const& d : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z_" + d.str();
  }
  return out.empty() ? "1" : out;
}

std::vector<BigInt> smith_diagonal(IntMatrix a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a.front().size() : 0;
  for (auto const& row : a)
    if (row.size() != cols) throw DimensionError("ragged integer matrix");

  auto row_axpy = [&](std::size_t dst, std::size_t src, BigInt const& q) {
    for (std::size_t j = 0; j < cols; ++j)
      if (a[src][j] != 0) a[dst][j] -= q * a[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, BigInt const& q) {
    for (std::size_t i = 0; i < rows; ++i)
      if (a[i][src] != 0) a[i][dst] -= q * a[i][src];
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        // Remaining block is zero.
        t = std::min(rows, cols);
        break;
      }
      std::swap(a[t], a[pi]);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(i, t, a[i][t] / a[t][t]);
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_axpy(t, i, BigInt(-1));
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      diag.push_back(abs(a[t][t]));
      break;
    }
  }
  for (std::size_t t = 1; t < diag.size(); ++t)
    if (diag[t] % diag[t - 1] != 0)
      throw StructuralError("Smith diagonal violates the divisibility chain");
  return diag;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

SparseRow axpy(SparseRow const& s, SparseRow const& r, BigInt const& q) {
  // s - q * r
  SparseRow out;
  std::size_t i = 0, j = 0;
  while (i < s.size() || j < r.size()) {
    if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
      out.push_back(s[i++]);
    } else if (i == s.size() || r[j].first < s[i].first) {
      out.emplace_back(r[j].first, -q * r[j].second);
      ++j;
    } else {
      BigInt v = s[i].second - q * r[j].second;
      if (v != 0) out.emplace_back(s[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

BigInt const* coeff(SparseRow const& row, std::uint32_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](auto const& entry, std::uint32_t c) { return entry.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

AbelianInvariants abelian_invariants(GroupPresentation const& p) {
  std::size_t gens = p.generator_count();

  std::set<SparseRow> unique;
  for (auto const& r : p.relators()) {
    std::map<std::uint32_t, long long> sums;
    for (Letter l : r.word) sums[l.gen()] += l.exponent();
    SparseRow row;
    for (auto [g, v] : sums)
      if (v != 0) row.emplace_back(g, BigInt(v));
    if (row.empty()) continue;
    if (row.front().second < 0)
      for (auto& e : row) e.second = -e.second;
    unique.insert(std::move(row));
  }
  std::vector<SparseRow> rows(unique.begin(), unique.end());
  std::vector<bool> alive(rows.size(), true);
  std::vector<std::vector<std::size_t>> col_rows(gens);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto const& e : rows[i]) col_rows[e.first].push_back(i);

  // Sparse phase: pivot on unit entries, shortest rows first. Each pivot
  // contributes an invariant factor 1 and removes one generator.
  std::size_t units = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (alive[i]) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return rows[x].size() < rows[y].size();
    });
    for (std::size_t r : order) {
      if (!alive[r]) continue;
      auto unit = std::find_if(rows[r].begin(), rows[r].end(), [](auto const& e) {
        return e.second == 1 || e.second == -1;
      });
      if (unit == rows[r].end()) continue;
      std::uint32_t c = unit->first;
      BigInt u = unit->second;
      SparseRow pivot = rows[r];
      alive[r] = false;
      std::vector<std::size_t> touched = std::move(col_rows[c]);
      col_rows[c].clear();
      for (std::size_t s : touched) {
        if (!alive[s]) continue;
        BigInt const* sv = coeff(rows[s], c);
        if (!sv) continue;
        rows[s] = axpy(rows[s], pivot, *sv * u);
        if (rows[s].empty()) {
          alive[s] = false;
          continue;
        }
        for (auto const& e : pivot)
          if (e.first != c) col_rows[e.first].push_back(s);
      }
      ++units;
      changed = true;
    }
  }

  std::set<SparseRow> rest;
  std::set<std::uint32_t> used_cols;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!alive[i]) continue;
    rest.insert(rows[i]);
    for (auto const& e : rows[i]) used_cols.insert(e.first);
  }
  std::map<std::uint32_t, std::size_t> col_index;
  for (auto c : used_cols) col_index.emplace(c, col_index.size());
  IntMatrix dense;
  for (auto const& row : rest) {
    std::vector<BigInt> d(col_index.size());
    for (auto const& e : row) d[col_index.at(e.first)] = e.second;
    dense.push_back(std::move(d));
  }

  AbelianInvariants out;
  auto diag = smith_diagonal(std::move(dense));
  for (auto const& d : diag)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = gens - units - diag.size();
  return out;
}

}  // namespace igpt
