#include "doctest.h"
#include "igpt/report.hpp"

using namespace igpt;

TEST_SUITE("report") {
  TEST_CASE("identification report fields") {
    auto j = report_json(identify(4, 2, Monoid::Partial));
    CHECK(j["verdict"] == "SYMMETRIC_K");
    CHECK(j["order"] == 2);
    CHECK(j["generators"] == 54);
    CHECK(j["relators"]["type1"] == 25);
    CHECK(j["relators"]["type2"] == 5);
    CHECK(j["abelian_invariants"]["torsion"] == json::array({2}));
    CHECK(j["hom_valid"] == true);
    CHECK_FALSE(j.contains("timings_ms"));
    CHECK(report_json(identify(4, 2, Monoid::Partial), true).contains("timings_ms"));

    auto f = report_json(identify(3, 2, Monoid::Partial));
    CHECK(f["verdict"] == "FREE_OF_RANK");
    CHECK(f["free_rank"] == 1);
    CHECK(f["order"].is_null());
  }

  TEST_CASE("output is identical across runs and worker counts") {
    auto a = report_json(identify(5, 2, Monoid::Partial, {.workers = 1})).dump();
    auto b = report_json(identify(5, 2, Monoid::Partial, {.workers = 4})).dump();
    CHECK(a == b);
    auto g = DClassGrid::build(5, 3, Monoid::Partial);
    CHECK(squares_json(enumerate_singular_squares(g, 1)).dump() ==
          squares_json(enumerate_singular_squares(g, 3)).dump());
  }

  TEST_CASE("grid, Schreier and presentation views") {
    auto g = DClassGrid::build(3, 2, Monoid::Partial);
    auto gj = grid_json(g);
    CHECK(gj["rows"] == 6);
    CHECK(gj["cols"] == 3);
    CHECK(gj["group_cells"] == 9);
    auto sys = build_schreier(g);
    auto sj = schreier_json(g, sys);
    CHECK(sj["columns"].size() == 3);
    CHECK(sj["columns"][sys.root]["r"].empty());
    auto p = build_presentation(g, sys, anchors(g), {});
    auto pj = presentation_json(p);
    CHECK(pj["generators"].size() == 9);
    CHECK(pj["relators"].size() == p.relators().size());
    CHECK(pj["provenance"][0] == "type1");
  }
}
