#include "igpt/report.hpp"

namespace igpt {

json grid_json(DClassGrid const& grid) {
  return json{{"n", grid.n()},
              {"k", grid.k()},
              {"monoid", to_string(grid.monoid())},
              {"rows", grid.row_count()},
              {"cols", grid.col_count()},
              {"group_cells", grid.cell_count()},
              {"base", {{"row", grid.base_row() + 1}, {"col", grid.base_col() + 1}}},
              {"base_idempotent", grid.base().to_string()}};
}

json schreier_json(DClassGrid const& grid, SchreierSystem const& sys) {
  auto word = [&](EWord const& w) {
    json out = json::array();
    for (auto id : w) {
      Cell c = grid.cell(id);
      out.push_back({c.row + 1, c.col + 1});
    }
    return out;
  };
  json cols = json::array();
  for (std::size_t c = 0; c < grid.col_count(); ++c) {
    cols.push_back({{"col", c + 1},
                    {"image", grid.cols()[c].to_string()},
                    {"r", word(sys.r[c])},
                    {"r_inv", word(sys.r_inv[c])}});
  }
  return json{{"root", sys.root + 1}, {"columns", std::move(cols)}};
}

json squares_json(std::vector<SingularSquare> const& singulars) {
  json out = json::array();
  for (auto const& s : singulars) {
    auto const& o = s.oriented;
    out.push_back(
        {{"rows", {s.square.top + 1, s.square.bottom + 1}},
         {"cols", {s.square.left + 1, s.square.right + 1}},
         {"witness",
          {{"map", s.witness.epsilon.to_string()},
           {"case", to_string(s.witness.kind)},
           {"oriented",
            {{"rows", {o.top + 1, o.bottom + 1}},
             {"cols", {o.left + 1, o.right + 1}}}}}}});
  }
  return out;
}

json presentation_json(GroupPresentation const& p) {
  json rels = json::array();
  json kinds = json::array();
  for (auto const& r : p.relators()) {
    json w = json::array();
    for (Letter l : r.word)
      w.push_back({p.generator_names()[l.gen()], l.exponent()});
    rels.push_back(std::move(w));
    kinds.push_back(to_string(r.kind));
  }
  return json{{"generators", p.generator_names()},
              {"relators", std::move(rels)},
              {"provenance", std::move(kinds)}};
}

json report_json(IdentificationReport const& r, bool with_timings) {
  json torsion = json::array();
  for (auto const& d : r.abelian.torsion) {
    if (d <= BigInt(std::numeric_limits<std::int64_t>::max()))
      torsion.push_back(static_cast<std::int64_t>(d));
    else
      torsion.push_back(d.str());
  }
  json out{
      {"n", r.n},
      {"k", r.k},
      {"monoid", to_string(r.monoid)},
      {"anchor_rule", to_string(r.anchor_rule)},
      {"grid", {{"rows", r.rows}, {"cols", r.cols}}},
      {"generators", r.generators},
      {"relators",
       {{"type1", r.type1},
        {"type2", r.type2},
        {"type3", r.type3},
        {"total", r.type1 + r.type2 + r.type3}}},
      {"squares",
       {{"all_group", r.all_group_squares}, {"singular", r.singular_squares}}},
      {"simplified",
       {{"generators", r.simplified_generators},
        {"relators", r.simplified_relators}}},
      {"order", r.order ? json(*r.order) : json(nullptr)},
      {"order_kind", to_string(r.order_kind)},
      {"free_rank", r.free_rank ? json(*r.free_rank) : json(nullptr)},
      {"abelian_invariants",
       {{"torsion", std::move(torsion)}, {"free_rank", r.abelian.free_rank}}},
      {"hom_valid", r.hom_valid},
      {"image_order", r.image_order},
      {"verdict", to_string(r.verdict)},
      {"diagnostics", r.diagnostics},
  };
  if (with_timings) out["timings_ms"] = r.timings_ms;
  return out;
}

}  // namespace igpt
