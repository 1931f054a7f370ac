#pragma once

// JSON views of the pipeline objects, as emitted by the CLI.

#include "json.hpp"

#include "igpt/dclass.hpp"
#include "igpt/groupid.hpp"
#include "igpt/presentation.hpp"
#include "igpt/schreier.hpp"
#include "igpt/squares.hpp"

namespace igpt {

using json = nlohmann::ordered_json;

// {n,k,monoid,rows,cols,group_cells,base:{row,col}}, indices one-based.
json grid_json(DClassGrid const& grid);

// Words as lists of [row, col] cell coordinates, one-based.
json schreier_json(DClassGrid const& grid, SchreierSystem const& sys);

// [{rows:[i,j], cols:[l,m], witness:{map, case}}]
json squares_json(std::vector<SingularSquare> const& singulars);

// {generators:[...], relators:[[["X_3_1",-1],["X_3_2",1]],...]}
json presentation_json(GroupPresentation const& p);

json report_json(IdentificationReport const& r, bool with_timings = false);

}  // namespace igpt
