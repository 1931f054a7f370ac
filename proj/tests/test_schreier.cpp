#include "doctest.h"
#include "igpt/errors.hpp"
#include "igpt/schreier.hpp"
#include "oracles.hpp"

using namespace igpt;

TEST_SUITE("schreier") {
  TEST_CASE("shape on PT_3, k = 2") {
    auto g = DClassGrid::build(3, 2, Monoid::Partial);
    auto sys = build_schreier(g);
    CHECK(sys.root == g.base_col());
    CHECK(sys.r[sys.root].empty());
    CHECK(sys.r_inv[sys.root].empty());
    CHECK_FALSE(sys.parent[sys.root]);
    for (std::size_t c = 0; c < g.col_count(); ++c) {
      CHECK(sys.r[c].size() <= 1);
      CHECK(sys.r[c].size() == sys.r_inv[c].size());
    }
    CHECK(verify_schreier(g, sys).empty());
  }

  TEST_CASE("prefix closure and representatives land in the right L-class") {
    for (auto m : {Monoid::Total, Monoid::Partial})
      for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; k < n; ++k)
          for (bool rev : {false, true}) {
            auto g = DClassGrid::build(n, k, m);
            auto sys = build_schreier(g, {.reverse_tiebreak = rev});
            for (std::size_t c = 0; c < g.col_count(); ++c) {
              if (c == sys.root) continue;
              REQUIRE(sys.parent[c]);
              auto const& par = *sys.parent[c];
              EWord prefix(sys.r[c].begin(), sys.r[c].end() - 1);
              REQUIRE(prefix == sys.r[par.col]);
              REQUIRE(sys.r[c].back() == par.letter);
              REQUIRE(g.cell(par.letter).col == c);
              auto x = oracle::product(g.base(), word_value(g, sys.r[c]));
              REQUIRE(kernel(x) == kernel(g.base()));
              REQUIRE(image(x) == g.cols()[c]);
              auto back = oracle::product(x, word_value(g, sys.r_inv[c]));
              REQUIRE(back == g.base());
            }
          }
  }

  TEST_CASE("verification passes for every grid with n <= 5") {
    for (auto m : {Monoid::Total, Monoid::Partial})
      for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t k = 1; k < n; ++k) {
          auto g = DClassGrid::build(n, k, m);
          CHECK_MESSAGE(verify_schreier(g, build_schreier(g)).empty(),
                        to_string(m), " n=", n, " k=", k);
          CHECK(verify_schreier(g, build_schreier(g, {.reverse_tiebreak = true})).empty());
        }
  }

  TEST_CASE("fault injection is detected") {
    auto g = DClassGrid::build(3, 2, Monoid::Partial);
    auto sys = build_schreier(g);
    std::size_t a = (sys.root + 1) % g.col_count();
    std::size_t b = (sys.root + 2) % g.col_count();
    std::swap(sys.r_inv[a], sys.r_inv[b]);
    CHECK_FALSE(verify_schreier(g, sys).empty());

    auto broken = build_schreier(g);
    broken.r[a].push_back(broken.r[a].front());
    CHECK_FALSE(verify_schreier(g, broken).empty());
  }

  TEST_CASE("degenerate grids") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto g = DClassGrid::build(n, n, Monoid::Partial);
      REQUIRE(g.col_count() == 1);
      SchreierSystem sys{0, {{}}, {{}}, {std::nullopt}};
      CHECK(verify_schreier(g, sys).empty());
      CHECK(build_schreier(g) == sys);
    }
  }

  TEST_CASE("construction is deterministic") {
    auto g = DClassGrid::build(5, 2, Monoid::Partial);
    CHECK(build_schreier(g) == build_schreier(g));
    auto rev = build_schreier(g, {.reverse_tiebreak = true});
    CHECK(verify_schreier(g, rev).empty());
  }

  TEST_CASE("total-row letters only") {
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t k = 1; k < n; ++k) {
        auto p = DClassGrid::build(n, k, Monoid::Partial);
        auto sys = build_schreier(p, {.total_rows_only = true});
        for (std::size_t c = 0; c < p.col_count(); ++c)
          for (auto id : sys.r[c]) REQUIRE(p.row_is_total(p.cell(id).row));
        CHECK(verify_schreier(p, sys).empty());
      }
  }

  TEST_CASE("the T_n system lifts to PT_n") {
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t k = 1; k < n; ++k) {
        auto t = DClassGrid::build(n, k, Monoid::Total);
        auto p = DClassGrid::build(n, k, Monoid::Partial);
        auto lifted = lift_total_schreier(t, p);
        CHECK(verify_schreier(p, lifted).empty());
        auto native = build_schreier(t);
        for (std::size_t c = 0; c < p.col_count(); ++c) {
          REQUIRE(lifted.r[c].size() == native.r[c].size());
          for (std::size_t i = 0; i < lifted.r[c].size(); ++i) {
            auto pc = p.cell(lifted.r[c][i]);
            auto tc = t.cell(native.r[c][i]);
            REQUIRE(p.row_is_total(pc.row));
            REQUIRE(p.rows()[pc.row] == t.rows()[tc.row]);
            REQUIRE(pc.col == tc.col);
          }
        }
      }
    auto t = DClassGrid::build(4, 2, Monoid::Total);
    CHECK_THROWS_AS(lift_total_schreier(t, t), PreconditionError);
    CHECK_THROWS_AS(
        lift_total_schreier(t, DClassGrid::build(4, 3, Monoid::Partial)),
        PreconditionError);
  }
}
