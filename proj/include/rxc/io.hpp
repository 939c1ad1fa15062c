#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rxc/grid.hpp"
#include "rxc/instances.hpp"
#include "rxc/puzzle.hpp"
#include "rxc/turing.hpp"

// Text formats. Every reader skips blank lines and lines whose first
// non-blank character is '#', and reports problems as Error with the
// offending line number.
namespace rxc::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// alphabet = t1 t2 ...
// rows = m            (optional)
// cols = n            (optional)
// R* = <regex>        or one "R = <regex>" line per row
// C* = <regex>        or one "C = <regex>" line per column
Puzzle parse_puzzle(std::string_view text);
std::string format_puzzle(const Puzzle& p, const std::vector<std::string>& comments = {});

// "m n", then m lines of n whitespace-separated tokens.
Grid parse_grid(std::string_view text, const Alphabet& alphabet);
std::string format_grid(const Grid& g);

// blank = B / start = q0 / halt = qh / tape = B a # / delta q g = q' g' L|R
TuringMachine parse_machine(std::string_view text);
std::string format_machine(const TuringMachine& m);

// A tape from whitespace-separated symbol names, or from a string whose
// characters are each a symbol name.
Tape parse_tape(const TuringMachine& m, std::string_view text);

// DIMACS: "p cnf V C", clauses of nonzero literals ended by 0, 'c' comments.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

// "V E" then E lines "u v" (1-based). The cover budget comes from the caller.
GraphInstance parse_graph(std::string_view text, std::size_t k);
std::string format_graph(const GraphInstance& g);

}  // namespace rxc::io
