#include <random>

#include "doctest.h"
#include "igpt/errors.hpp"
#include "igpt/squares.hpp"
#include "oracles.hpp"

using namespace igpt;

namespace {

PartialMap pm(std::vector<int> v) { return PartialMap::from_one_based(v); }

using oracle::product;

// Case (a) and case (b) written out with the independent product.
bool raw_case_a(PartialMap const& eps, PartialMap const& e, PartialMap const& f,
                PartialMap const& g) {
  return product(eps, e) == e && product(eps, g) == g && product(f, eps) == e;
}
bool raw_case_b(PartialMap const& eps, PartialMap const& e, PartialMap const& f,
                PartialMap const& g) {
  return product(eps, g) == e && product(e, eps) == e && product(f, eps) == f;
}

struct Corners {
  PartialMap e, f, g, h;
};
Corners corners(DClassGrid const& grid, Square const& s) {
  return {grid.idempotent(s.top, s.left), grid.idempotent(s.top, s.right),
          grid.idempotent(s.bottom, s.left), grid.idempotent(s.bottom, s.right)};
}

}  // namespace

TEST_SUITE("squares") {
  TEST_CASE("degenerate squares are rejected") {
    auto g = DClassGrid::build(4, 2, Monoid::Partial);
    auto c = g.cell(0);
    CHECK_THROWS_AS(make_square(g, c.row, c.row, c.col, c.col), PreconditionError);
    Square degenerate{c.row, c.row, c.col, c.col};
    CHECK(degenerate.degenerate());
    CHECK_FALSE(singularizes(g.idempotent(0), g, degenerate));
    CHECK_THROWS_AS(make_square(g, 0, 1, 0, g.col_count()), PreconditionError);
  }

  TEST_CASE("the n = 3 completion example") {
    auto alpha = pm({1, 1, 0});
    auto beta = pm({2, 2, 0});
    auto out = lemma1_complete(alpha, beta);
    CHECK(out.alpha_total == pm({1, 1, 1}));
    CHECK(out.beta_total == pm({2, 2, 2}));
    CHECK(out.epsilon == pm({1, 1, 3}));
    CHECK(singularizes(out.epsilon, alpha, beta, out.alpha_total, out.beta_total) ==
          SingularCase::LeftRightA);
    CHECK(raw_case_a(out.epsilon, alpha, beta, out.alpha_total));
  }

  TEST_CASE("completion with alpha equal to beta") {
    auto alpha = pm({1, 1, 0, 4});
    auto out = lemma1_complete(alpha, alpha);
    CHECK(out.alpha_total == out.beta_total);
    CHECK(out.alpha_total == pm({1, 1, 1, 4}));
    CHECK(raw_case_a(out.epsilon, alpha, alpha, out.alpha_total));
    CHECK(is_idempotent(out.epsilon));
  }

  TEST_CASE("completion preconditions") {
    CHECK_THROWS_AS(lemma1_complete(pm({1, 1, 3}), pm({1, 1, 3})), PreconditionError);
    CHECK_THROWS_AS(lemma1_complete(pm({1, 1, 0}), pm({1, 2, 0})), PreconditionError);
    CHECK_THROWS_AS(lemma1_complete(pm({2, 2, 0}), pm({1, 2, 0})), PreconditionError);
    CHECK_THROWS_AS(lemma1_complete(pm({1, 0}), pm({1, 0, 0})), DimensionError);
  }

  TEST_CASE("completion holds for every R-related partial pair, n = 4") {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto idem = enumerate_idempotents(4, k, Monoid::Partial);
      std::size_t pairs = 0;
      for (auto const& a : idem)
        for (auto const& b : idem) {
          if (a.is_total() || !(kernel(a) == kernel(b))) continue;
          ++pairs;
          auto out = lemma1_complete(a, b);
          REQUIRE(out.alpha_total.is_total());
          REQUIRE(out.beta_total.is_total());
          REQUIRE(kernel(out.alpha_total) == kernel(out.beta_total));
          REQUIRE(image(out.alpha_total) == image(a));
          REQUIRE(image(out.beta_total) == image(b));
          REQUIRE(product(out.epsilon, out.epsilon) == out.epsilon);
          REQUIRE(rank(out.epsilon) >= k);
          REQUIRE(raw_case_a(out.epsilon, a, b, out.alpha_total));
          std::array<PartialMap, 4> band{a, b, out.alpha_total, out.beta_total};
          REQUIRE(is_rectangular_band(band));
        }
      CHECK(pairs > 0);
    }
  }

  TEST_CASE("rectangular band law") {
    auto a = pm({1, 1, 3});
    auto b = pm({2, 2, 3});
    std::array<PartialMap, 2> good{a, b};
    CHECK(is_rectangular_band(good));
    std::array<PartialMap, 2> bad{pm({1, 1, 3}), pm({1, 2, 2})};
    CHECK_FALSE(is_rectangular_band(bad));
  }

  TEST_CASE("no squares when k = n - 1") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto g = DClassGrid::build(n, n - 1, Monoid::Partial);
      CHECK(count_all_group_squares(g) == 0);
      CHECK(enumerate_singular_squares(g).empty());
    }
  }

  TEST_CASE("witness soundness") {
    for (auto m : {Monoid::Total, Monoid::Partial})
      for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}, {4, 1}}) {
        auto g = DClassGrid::build(n, k, m);
        auto singulars = enumerate_singular_squares(g);
        if (k >= 2) CHECK_FALSE(singulars.empty());
        for (auto const& s : singulars) {
          auto const& o = s.oriented;
          auto [e, f, gg, h] = corners(g, o);
          auto const& eps = s.witness.epsilon;
          REQUIRE(product(eps, eps) == eps);
          REQUIRE(rank(eps) >= std::size_t(k));
          if (m == Monoid::Total) REQUIRE(eps.is_total());
          bool ok = s.witness.kind == SingularCase::LeftRightA
                        ? raw_case_a(eps, e, f, gg)
                        : raw_case_b(eps, e, f, gg);
          REQUIRE(ok);
          // the canonical square is the same set of cells
          REQUIRE(std::min(o.top, o.bottom) == s.square.top);
          REQUIRE(std::max(o.top, o.bottom) == s.square.bottom);
          REQUIRE(std::min(o.left, o.right) == s.square.left);
          REQUIRE(std::max(o.left, o.right) == s.square.right);
        }
        CHECK(std::is_sorted(singulars.begin(), singulars.end(),
                             [](auto const& a, auto const& b) {
                               return a.square < b.square;
                             }));
      }
  }

  TEST_CASE("squares that no pool member singularizes really are not singular") {
    // Exhaustive over PT_4, k = 2, using raw condition evaluation in every
    // orientation against every idempotent of rank >= 2.
    auto g = DClassGrid::build(4, 2, Monoid::Partial);
    auto singulars = enumerate_singular_squares(g);
    std::set<Square> found;
    for (auto const& s : singulars) found.insert(s.square);
    std::vector<PartialMap> pool;
    for (auto const& a : oracle::all_maps(4, false))
      if (rank(a) >= 2 && product(a, a) == a) pool.push_back(a);
    CHECK(pool.size() == witness_pool(g).size());
    std::size_t squares = 0;
    for (std::size_t i = 0; i < g.row_count(); ++i)
      for (std::size_t j = i + 1; j < g.row_count(); ++j)
        for (std::size_t l = 0; l < g.col_count(); ++l)
          for (std::size_t m = l + 1; m < g.col_count(); ++m) {
            if (!g.is_group(i, l) || !g.is_group(i, m) || !g.is_group(j, l) ||
                !g.is_group(j, m))
              continue;
            ++squares;
            bool singular = false;
            for (auto [t, b] : {std::pair{i, j}, {j, i}})
              for (auto [lf, rt] : {std::pair{l, m}, {m, l}}) {
                auto [e, f, gg, h] = corners(g, Square{t, b, lf, rt});
                for (auto const& eps : pool)
                  singular = singular || raw_case_a(eps, e, f, gg) ||
                             raw_case_b(eps, e, f, gg);
              }
            REQUIRE(singular == (found.count(Square{i, j, l, m}) > 0));
          }
    CHECK(squares == count_all_group_squares(g));
  }

  TEST_CASE("random idempotents on random squares, n = 4") {
    std::mt19937 rng(7);
    auto g = DClassGrid::build(4, 2, Monoid::Partial);
    auto pool = witness_pool(g);
    std::size_t none = 0, trials = 0;
    std::uniform_int_distribution<std::size_t> row(0, g.row_count() - 1),
        col(0, g.col_count() - 1), pick(0, pool.size() - 1);
    while (trials < 2000) {
      Square s{row(rng), row(rng), col(rng), col(rng)};
      if (s.degenerate() || !g.is_group(s.top, s.left) || !g.is_group(s.top, s.right) ||
          !g.is_group(s.bottom, s.left) || !g.is_group(s.bottom, s.right))
        continue;
      ++trials;
      auto const& eps = pool[pick(rng)];
      auto got = singularizes(eps, g, s);
      auto [e, f, gg, h] = corners(g, s);
      if (!got) {
        ++none;
        REQUIRE_FALSE(raw_case_a(eps, e, f, gg));
        REQUIRE_FALSE(raw_case_b(eps, e, f, gg));
      } else if (*got == SingularCase::LeftRightA) {
        REQUIRE(raw_case_a(eps, e, f, gg));
        // the consequences of case (a)
        REQUIRE(product(eps, f) == f);
        REQUIRE(product(eps, h) == h);
        REQUIRE(product(e, eps) == e);
        REQUIRE(product(gg, eps) == gg);
        REQUIRE(product(h, eps) == gg);
      } else {
        REQUIRE(raw_case_b(eps, e, f, gg));
      }
    }
    CHECK(none > trials / 2);
  }

  TEST_CASE("T_n squares stay singular in PT_n with the same witness") {
    for (std::size_t n = 3; n <= 5; ++n)
      for (std::size_t k = 1; k + 1 < n; ++k) {
        auto t = DClassGrid::build(n, k, Monoid::Total);
        auto p = DClassGrid::build(n, k, Monoid::Partial);
        for (auto const& s : enumerate_singular_squares(t)) {
          auto const& o = s.oriented;
          Square lifted{*p.find_row(t.rows()[o.top]), *p.find_row(t.rows()[o.bottom]),
                        o.left, o.right};
          REQUIRE(singularizes(s.witness.epsilon, p, lifted) == s.witness.kind);
        }
      }
  }

  TEST_CASE("every partial-row cell pair completes to a singular square") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
      auto g = DClassGrid::build(n, k, Monoid::Partial);
      std::set<Square> found;
      for (auto const& s : enumerate_singular_squares(g)) found.insert(s.square);
      for (std::size_t i = 0; i < g.row_count(); ++i) {
        if (g.row_is_total(i)) continue;
        auto const& cells = g.row_cells(i);
        for (std::size_t x = 0; x < cells.size(); ++x)
          for (std::size_t y = x + 1; y < cells.size(); ++y) {
            auto const& a = g.idempotent(cells[x]);
            auto const& b = g.idempotent(cells[y]);
            auto out = lemma1_complete(a, b);
            auto j = g.find_row(kernel(out.alpha_total));
            REQUIRE(j);
            REQUIRE(g.row_is_total(*j));
            std::size_t l = g.cell(cells[x]).col, m = g.cell(cells[y]).col;
            REQUIRE(g.idempotent(*j, l) == out.alpha_total);
            REQUIRE(g.idempotent(*j, m) == out.beta_total);
            Square sq{std::min(i, *j), std::max(i, *j), l, m};
            REQUIRE(found.count(sq) == 1);
          }
      }
    }
  }

  TEST_CASE("worker count does not change the result") {
    auto g = DClassGrid::build(5, 2, Monoid::Partial);
    auto one = enumerate_singular_squares(g, 1);
    for (std::size_t w : {2, 3, 8}) {
      auto many = enumerate_singular_squares(g, w);
      REQUIRE(many.size() == one.size());
      for (std::size_t i = 0; i < one.size(); ++i) {
        REQUIRE(many[i].square == one[i].square);
        REQUIRE(many[i].oriented == one[i].oriented);
        REQUIRE(many[i].witness.epsilon == one[i].witness.epsilon);
        REQUIRE(many[i].witness.kind == one[i].witness.kind);
      }
    }
  }
}
