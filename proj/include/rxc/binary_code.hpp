#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rxc/error.hpp"
#include "rxc/grid.hpp"
#include "rxc/regex.hpp"

namespace rxc {

// Binary encoding of a k-letter alphabet. With l = 3k, s_0 = 0^(l-2)11 and
// s_i is s_0 rotated left by i places. Letter c becomes the word s_{3c} and,
// in grids, the l x l square S_c whose row i is s_{(3c+i) mod l}.
class BinaryCode {
public:
    explicit BinaryCode(std::size_t k);

    std::size_t k() const noexcept { return k_; }
    std::size_t ell() const noexcept { return ell_; }
    const Alphabet& bits() const noexcept { return bits_; }
    Symbol zero() const noexcept { return Symbol{0}; }
    Symbol one() const noexcept { return Symbol{1}; }

    // Bit o of s_j, without materializing anything.
    bool bit(std::size_t j, std::size_t o) const noexcept { return (o + j) % ell_ >= ell_ - 2; }
    const Word& s(std::size_t j) const { return s_.at(j); }
    // j with block == s_j, if any.
    std::optional<std::size_t> shift_of(const Word& block) const;

    Grid square(std::size_t c) const;
    // Images for the letters of `source` (which must have at most k letters).
    Homomorphism homomorphism(const Alphabet& source) const;

private:
    std::size_t k_;
    std::size_t ell_;
    Alphabet bits_;
    std::vector<Word> s_;
};

BinaryCode binary_code(std::size_t k);

// Subexpressions of f(k, R), exposed for tests.
struct BinaryParts {
    NodePtr alignment;                 // A = 1^l (0^l)+
    std::vector<NodePtr> calibration;  // C_0 .. C_{l-1}
    NodePtr duplication;               // D
    NodePtr generic_encoding;          // s_0 h(Sigma+)
};

// With `allow_zero_tail` false, D_0 repeats only s_{3c} for c >= 1, which
// rejects encoding-region rows whose later blocks are s_0. The default
// admits s_0 after the first block.
NodePtr duplication_expr(const BinaryCode& code, bool allow_zero_tail = true);

BinaryParts binary_parts(const BinaryCode& code);

// F = 1(A | C) | 0(D | s_0 h(R)) over {0,1}. R must be positive and use at
// most k letters; letter ids are the code indices.
Regex binarize_expr(std::size_t k, const Regex& r);
Regex binarize_expr(const BinaryCode& code, const Regex& r);

// Lazily evaluated encoding of a grid. Indices are zero-based; index 0 is
// the alignment row or column.
class PsiView {
public:
    PsiView(const BinaryCode& code, const Grid& x);

    std::size_t rows() const noexcept { return (x_.m() + 1) * code_.ell() + 1; }
    std::size_t cols() const noexcept { return (x_.n() + 1) * code_.ell() + 1; }
    bool bit(std::size_t r, std::size_t c) const;
    Word row(std::size_t r) const;
    Word col(std::size_t c) const;
    Grid materialize() const;

private:
    const BinaryCode& code_;
    const Grid& x_;
};

Grid psi_encode(std::size_t k, const Grid& x);
Grid psi_encode(const BinaryCode& code, const Grid& x);

// Raised by psi_decode with the number of the first structural property that
// fails. 0 is a shape problem; 1..8 are, in checking order 3, 2, 1, 4..8:
//   1 calibration squares have two 1s in every row and column
//   2 no line but the first row and column is an alignment line
//   3 the first row and column are alignment lines
//   4 the next l lines are calibration lines, the rest encoding lines
//   5 calibration line i uses shift i
//   6 calibration squares equal S_0
//   7 lines 0 mod l of the encoding region start with s_0 then letter codes
//   8 every encoding square is some S_c
class DecodeError : public Error {
public:
    DecodeError(int claim, const std::string& detail)
        : Error("decode fails property " + std::to_string(claim) + ": " + detail), claim_(claim) {}
    int claim() const noexcept { return claim_; }

private:
    int claim_;
};

// Inverse of psi_encode. The result uses `target` (default: tokens 0..k-1).
Grid psi_decode(std::size_t k, const Grid& y);
Grid psi_decode(const BinaryCode& code, const Grid& y, const Alphabet& target);

Alphabet digit_alphabet(std::size_t k);

}  // namespace rxc
