#pragma once

#include <cstddef>
#include <vector>

#include "rxc/alphabet.hpp"

namespace rxc {

// An m-by-n array of symbols, stored row-major.
class Grid {
public:
    Grid(Alphabet alphabet, std::size_t m, std::size_t n, Symbol fill = Symbol{0});
    Grid(Alphabet alphabet, std::size_t m, std::size_t n, std::vector<Symbol> cells);
    static Grid from_rows(Alphabet alphabet, const std::vector<Word>& rows);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<Symbol>& cells() const noexcept { return cells_; }

    Symbol at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Symbol s);
    Word row(std::size_t i) const;
    Word col(std::size_t j) const;
    Grid transpose() const;

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.cells_ == b.cells_ && a.alphabet_ == b.alphabet_;
    }
    // Row-major lexicographic order by symbol id; dimensions compared first.
    friend bool operator<(const Grid& a, const Grid& b);

private:
    Alphabet alphabet_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Symbol> cells_;
};

}  // namespace rxc
