#pragma once

#include <vector>

#include "rxc/grid.hpp"
#include "rxc/instances.hpp"
#include "rxc/puzzle.hpp"

namespace rxc {

Alphabet binary_alphabet();

// V x (E + 1) puzzle over {0,1}. Column j < E needs a 1 (edge j is
// covered), the last column holds at most k 1s, and row i is either all 0
// or the incidence row of vertex i followed by 1.
Puzzle vc_reduce(const GraphInstance& g);

// The cover read off a crossword of vc_reduce(g): vertices whose row ends
// in 1 (1-based).
std::vector<std::size_t> cover_from_grid(const Grid& x);

// clauses x variables puzzle over {0,1}. Every column is 0* | 1*, i.e. one
// truth value per variable; row i accepts any row that satisfies clause i at
// one of its three positions. Needs an exact 3-CNF.
Puzzle threesat_reduce(const CnfFormula& f);

std::vector<bool> assignment_from_grid(const Grid& x);

}  // namespace rxc
