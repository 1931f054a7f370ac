#include "igpt/squares.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "igpt/errors.hpp"

namespace igpt {

Square make_square(DClassGrid const& grid, std::size_t top, std::size_t bottom,
                   std::size_t left, std::size_t right) {
  Square sq{top, bottom, left, right};
  if (top >= grid.row_count() || bottom >= grid.row_count() ||
      left >= grid.col_count() || right >= grid.col_count())
    throw PreconditionError("square index out of range");
  if (sq.degenerate()) throw PreconditionError("degenerate square");
  if (!grid.is_group(top, left) || !grid.is_group(top, right) ||
      !grid.is_group(bottom, left) || !grid.is_group(bottom, right))
    throw PreconditionError("square has a non-group cell");
  return sq;
}

std::string_view to_string(SingularCase c) {
  return c == SingularCase::LeftRightA ? "a" : "b";
}

std::optional<SingularCase> singularizes(PartialMap const& eps,
                                         PartialMap const& e,
                                         PartialMap const& f,
                                         PartialMap const& g,
                                         PartialMap const& h) {
  if (eps * e == e && eps * g == g && f * eps == e) {
    if (!(eps * f == f && eps * h == h && e * eps == e && g * eps == g &&
          h * eps == g))
      throw StructuralError("case (a) holds but its consequences fail for " +
                            eps.to_string());
    return SingularCase::LeftRightA;
  }
  if (eps * g == e && e * eps == e && f * eps == f) {
    if (!(eps * e == e && eps * f == f && eps * h == f && g * eps == g &&
          h * eps == h))
      throw StructuralError("case (b) holds but its consequences fail for " +
                            eps.to_string());
    return SingularCase::UpDownB;
  }
  return std::nullopt;
}

std::optional<SingularCase> singularizes(PartialMap const& eps,
                                         DClassGrid const& grid,
                                         Square const& sq) {
  if (sq.degenerate()) return std::nullopt;
  make_square(grid, sq.top, sq.bottom, sq.left, sq.right);
  return singularizes(eps, grid.idempotent(sq.top, sq.left),
                      grid.idempotent(sq.top, sq.right),
                      grid.idempotent(sq.bottom, sq.left),
                      grid.idempotent(sq.bottom, sq.right));
}

std::vector<PartialMap> witness_pool(DClassGrid const& grid) {
  std::vector<PartialMap> pool;
  for (std::size_t r = std::max<std::size_t>(grid.k(), 1); r <= grid.n(); ++r) {
    auto idem = enumerate_idempotents(grid.n(), r, grid.monoid());
    pool.insert(pool.end(), idem.begin(), idem.end());
  }
  return pool;
}

namespace {

std::vector<std::size_t> common_cols(DClassGrid const& grid, std::size_t i,
                                     std::size_t j) {
  std::vector<std::size_t> a, b, out;
  for (auto id : grid.row_cells(i)) a.push_back(grid.cell(id).col);
  for (auto id : grid.row_cells(j)) b.push_back(grid.cell(id).col);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<std::size_t> intersect(std::vector<std::size_t> const& a,
                                   std::vector<std::size_t> const& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Pool indices (ascending) acting as a left identity on each row and as a
// right identity on each column. Both are class properties: eps x = x for
// all x in R_i iff eps e = e for one idempotent e of R_i, dually for L.
struct PoolIndex {
  std::vector<std::vector<std::size_t>> left_fixing;
  std::vector<std::vector<std::size_t>> right_fixing;
};

PoolIndex index_pool(DClassGrid const& grid,
                     std::vector<PartialMap> const& pool) {
  PoolIndex idx;
  idx.left_fixing.resize(grid.row_count());
  idx.right_fixing.resize(grid.col_count());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    auto const& eps = pool[p];
    for (std::size_t r = 0; r < grid.row_count(); ++r) {
      auto const& e = grid.idempotent(grid.row_cells(r).front());
      if (eps * e == e) idx.left_fixing[r].push_back(p);
    }
    for (std::size_t c = 0; c < grid.col_count(); ++c) {
      if (grid.col_cells(c).empty()) continue;
      auto const& e = grid.idempotent(grid.col_cells(c).front());
      if (e * eps == e) idx.right_fixing[c].push_back(p);
    }
  }
  return idx;
}

struct Found {
  std::size_t pool_index;
  Square oriented;
  SingularCase kind;
};

// The four orientations of a square, in a fixed order.
std::array<Square, 4> orientations(std::size_t i, std::size_t j,
                                   std::size_t l, std::size_t m) {
  return {Square{i, j, l, m}, Square{i, j, m, l}, Square{j, i, l, m},
          Square{j, i, m, l}};
}

std::optional<Found> first_witness(
    DClassGrid const& grid, std::vector<PartialMap> const& pool,
    std::vector<std::size_t> const& cand_a,
    std::vector<std::size_t> const& cand_b, std::size_t i, std::size_t j,
    std::size_t l, std::size_t m) {
  auto sqs = orientations(i, j, l, m);
  auto cell = [&](std::size_t r, std::size_t c) -> PartialMap const& {
    return grid.idempotent(r, c);
  };
  // Case A with rows {i, j} left-fixed: f eps = e on the top row.
  std::optional<Found> a;
  for (std::size_t p : cand_a) {
    for (auto const& s : sqs) {
      if (cell(s.top, s.right) * pool[p] == cell(s.top, s.left)) {
        a = Found{p, s, SingularCase::LeftRightA};
        break;
      }
    }
    if (a) break;
  }
  // Case B with columns {l, m} right-fixed: eps g = e on the left column.
  std::optional<Found> b;
  for (std::size_t p : cand_b) {
    if (a && p >= a->pool_index) break;
    for (auto const& s : sqs) {
      if (pool[p] * cell(s.bottom, s.left) == cell(s.top, s.left)) {
        b = Found{p, s, SingularCase::UpDownB};
        break;
      }
    }
    if (b) break;
  }
  if (b) return b;
  return a;
}

}  // namespace

std::size_t count_all_group_squares(DClassGrid const& grid) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.row_count(); ++i)
    for (std::size_t j = i + 1; j < grid.row_count(); ++j) {
      std::size_t c = common_cols(grid, i, j).size();
      count += c * (c - (c > 0)) / 2;
    }
  return count;
}

std::vector<SingularSquare> enumerate_singular_squares(DClassGrid const& grid,
                                                       std::size_t workers) {
  if (grid.degenerate() || grid.row_count() < 2 || grid.col_count() < 2)
    return {};
  auto pool = witness_pool(grid);
  auto idx = index_pool(grid, pool);

  std::size_t ncols = grid.col_count();
  std::vector<std::vector<std::size_t>> col_pair_fix(ncols * ncols);
  for (std::size_t l = 0; l < ncols; ++l)
    for (std::size_t m = l + 1; m < ncols; ++m)
      col_pair_fix[l * ncols + m] =
          intersect(idx.right_fixing[l], idx.right_fixing[m]);

  workers = std::max<std::size_t>(workers, 1);
  std::vector<std::vector<SingularSquare>> partial(workers);
  auto run = [&](std::size_t w) {
    auto& out = partial[w];
    for (std::size_t i = w; i < grid.row_count(); i += workers) {
      for (std::size_t j = i + 1; j < grid.row_count(); ++j) {
        auto cols = common_cols(grid, i, j);
        if (cols.size() < 2) continue;
        auto cand_a = intersect(idx.left_fixing[i], idx.left_fixing[j]);
        for (std::size_t x = 0; x < cols.size(); ++x) {
          for (std::size_t y = x + 1; y < cols.size(); ++y) {
            std::size_t l = cols[x], m = cols[y];
            auto found = first_witness(grid, pool, cand_a,
                                       col_pair_fix[l * ncols + m], i, j, l, m);
            if (!found) continue;
            auto const& eps = pool[found->pool_index];
            if (singularizes(eps, grid, found->oriented) != found->kind)
              throw StructuralError("witness failed re-validation");
            out.push_back({Square{i, j, l, m}, found->oriented,
                           SingularityWitness{eps, found->kind}});
          }
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  std::vector<SingularSquare> all;
  for (auto& part : partial)
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(all.begin(), all.end(),
            [](auto const& a, auto const& b) { return a.square < b.square; });
  return all;
}

Lemma1Completion lemma1_complete(PartialMap const& alpha,
                                 PartialMap const& beta) {
  if (alpha.degree() != beta.degree())
    throw DimensionError("lemma1_complete: degrees differ");
  std::size_t n = alpha.degree();
  if (!is_idempotent(alpha) || !is_idempotent(beta))
    throw PreconditionError("lemma1_complete: inputs must be idempotent");
  KernelPartition rho = kernel(alpha);
  if (!(rho == kernel(beta)))
    throw PreconditionError("lemma1_complete: inputs are not R-related");
  if (rho.domain.size() >= n)
    throw PreconditionError("lemma1_complete: inputs must be properly partial");
  if (rho.domain.empty())
    throw PreconditionError("lemma1_complete: inputs must have nonempty domain");

  Point a0 = rho.domain.front();
  Lemma1Completion out{alpha, beta, PartialMap::identity(n)};
  for (std::size_t c = 0; c < n; ++c) {
    if (alpha.defined(c)) continue;
    out.alpha_total.set(c, alpha[a0]);
    out.beta_total.set(c, beta[a0]);
  }
  for (Point x : rho.domain) out.epsilon.set(beta[x], alpha[x]);

  // rho' : rho with the block of a0 absorbing the complement of A.
  KernelPartition rho_prime = rho;
  rho_prime.domain.clear();
  for (std::size_t x = 0; x < n; ++x)
    rho_prime.domain.push_back(static_cast<Point>(x));
  for (std::size_t c = 0; c < n; ++c)
    if (!alpha.defined(c)) rho_prime.blocks.front().push_back(static_cast<Point>(c));
  std::sort(rho_prime.blocks.front().begin(), rho_prime.blocks.front().end());

  auto const& ap = out.alpha_total;
  auto const& bp = out.beta_total;
  auto const& eps = out.epsilon;
  if (!ap.is_total() || !bp.is_total())
    throw StructuralError("lemma1_complete: extensions are not total");
  if (!(kernel(ap) == rho_prime) || !(kernel(bp) == rho_prime))
    throw StructuralError("lemma1_complete: extension kernels differ from rho'");
  if (!(image(ap) == image(alpha)) || !(image(bp) == image(beta)))
    throw StructuralError("lemma1_complete: extensions changed the image");
  if (!is_idempotent(eps) || rank(eps) < rank(alpha))
    throw StructuralError("lemma1_complete: epsilon is not a valid witness");
  std::array<PartialMap, 4> band{alpha, beta, ap, bp};
  if (!is_rectangular_band(band))
    throw StructuralError("lemma1_complete: not a rectangular band");
  if (singularizes(eps, alpha, beta, ap, bp) != SingularCase::LeftRightA)
    throw StructuralError("lemma1_complete: epsilon does not satisfy case (a)");
  return out;
}

bool is_rectangular_band(std::span<PartialMap const> members) {
  for (auto const& x : members) {
    for (auto const& y : members) {
      PartialMap xy = x * y;
      auto expect = std::find_if(members.begin(), members.end(),
                                 [&](PartialMap const& z) {
                                   return kernel(z) == kernel(x) &&
                                          image(z) == image(y);
                                 });
      if (expect == members.end() || !(*expect == xy)) return false;
    }
  }
  return true;
}

}  // namespace igpt
