#pragma once

#include <optional>

#include "rxc/grid.hpp"
#include "rxc/regex.hpp"
#include "rxc/turing.hpp"

namespace rxc {

// Pieces of the row and column expressions for one machine, kept apart so
// tests can probe each of them.
struct TableauParts {
    NodePtr unscanned;  // U
    NodePtr t_left;   // null when no transition moves left
    NodePtr t_right;  // null when no transition moves right
    NodePtr transitions;  // T = T_L | T_R | halting scanned markers
    NodePtr d, e, f, s;
    NodePtr x, y, h, z, w;
};

TableauParts tableau_parts(const MarkerAlphabet& markers);

// The first row <B|q1>[B,q0][w1]..[wn][B]+. Throws when the machine's first
// transition is not (q0,B) -> (q1,B,L) with q1 != q0.
NodePtr initial_row(const MarkerAlphabet& markers, const Tape& w);

// R = I_w | U*TU*.
Regex build_row_expr(const MarkerAlphabet& markers, const Tape& w);

// The same shape with a caller-supplied first-row expression.
Regex row_expr_with_initial(const MarkerAlphabet& markers, NodePtr initial);

// C = S & W. Independent of the input.
Regex build_col_expr(const MarkerAlphabet& markers);

// C | [B]+, which admits never-scanned blank columns.
Regex squarify_col_expr(const Regex& c, const MarkerAlphabet& markers);

// Appends all-blank columns until the grid is square. Requires m >= n.
Grid pad_to_square(const Grid& tableau, const MarkerAlphabet& markers);

}  // namespace rxc
