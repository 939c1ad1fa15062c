#pragma once

#include "rxc/grid.hpp"
#include "rxc/regex.hpp"

namespace rxc {

// Base alphabet plus three fresh edge symbols: heart (left edge), diamond
// (corner) and spade (bottom edge). They are spelled hrt, dmd and spd, with
// primes appended until the spelling is unused.
struct MergeCode {
    Alphabet base;
    Alphabet extended;
    Symbol heart;
    Symbol diamond;
    Symbol spade;
};

MergeCode merge_code(const Alphabet& base);

struct Merged {
    MergeCode code;
    Regex e;
};

// E = hrt R | dmd spd spd spd* | C spd | hrt hrt hrt* dmd. With
// `check_plural` the pair is first run through is_plural, which throws Error
// when it fails.
Merged merge_rc(const Regex& r, const Regex& c, bool check_plural = true);

// Prepends the column hrt^m and appends the row dmd spd^n.
Grid rho_encode(const Grid& x, const MergeCode& code);

struct RhoDecoded {
    Grid inner;
    bool transposed = false;
};

// Strips the first column and last row of y, or of its transpose when
// `allow_transpose` and y itself does not have the edge layout.
RhoDecoded rho_decode(const Grid& y, const MergeCode& code, bool allow_transpose = true);

}  // namespace rxc
