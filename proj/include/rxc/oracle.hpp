#pragma once

#include <cstdint>
#include <vector>

#include "rxc/grid.hpp"
#include "rxc/instances.hpp"
#include "rxc/puzzle.hpp"
#include "rxc/regex.hpp"

// Deliberately naive reference implementations for tests. Nothing here uses
// the automata or the solver.
namespace rxc::oracle {

// Membership by direct recursion on the definition of L(r).
bool structural_match(const Regex& r, const Word& w);

struct BruteForceOptions {
    std::uint64_t cap = std::uint64_t{1} << 24;  // max grids scanned
};

// Every grid of the given size whose lines match, in row-major lex order.
std::vector<Grid> brute_force_crosswords(const Puzzle& p, std::size_t m, std::size_t n,
                                         const BruteForceOptions& options = {});

bool brute_force_vertex_cover(const GraphInstance& g);

std::uint64_t brute_force_sat_count(const CnfFormula& f);

}  // namespace rxc::oracle
