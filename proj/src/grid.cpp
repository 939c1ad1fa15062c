#include "rxc/grid.hpp"

#include <string>
#include <tuple>

#include "rxc/error.hpp"

namespace rxc {

Grid::Grid(Alphabet alphabet, std::size_t m, std::size_t n, Symbol fill)
    : Grid(std::move(alphabet), m, n, std::vector<Symbol>(m * n, fill)) {}

Grid::Grid(Alphabet alphabet, std::size_t m, std::size_t n, std::vector<Symbol> cells)
    : alphabet_(std::move(alphabet)), m_(m), n_(n), cells_(std::move(cells)) {
    if (m_ == 0 || n_ == 0) throw DimensionError("grid dimensions must be positive");
    if (cells_.size() != m_ * n_) throw DimensionError("grid cell count does not match dimensions");
    for (Symbol s : cells_) {
        if (!alphabet_.contains(s)) throw Error("grid cell symbol outside alphabet");
    }
}

Grid Grid::from_rows(Alphabet alphabet, const std::vector<Word>& rows) {
    if (rows.empty()) throw DimensionError("grid needs at least one row");
    std::vector<Symbol> cells;
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw DimensionError("ragged grid rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return Grid(std::move(alphabet), rows.size(), rows.front().size(), std::move(cells));
}

void Grid::set(std::size_t i, std::size_t j, Symbol s) {
    if (!alphabet_.contains(s)) throw Error("grid cell symbol outside alphabet");
    cells_[i * n_ + j] = s;
}

Word Grid::row(std::size_t i) const {
    return Word(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Word Grid::col(std::size_t j) const {
    Word w(m_);
    for (std::size_t i = 0; i < m_; ++i) w[i] = cells_[i * n_ + j];
    return w;
}

Grid Grid::transpose() const {
    std::vector<Symbol> t(cells_.size());
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) t[j * m_ + i] = cells_[i * n_ + j];
    }
    return Grid(alphabet_, n_, m_, std::move(t));
}

bool operator<(const Grid& a, const Grid& b) {
    return std::tie(a.m_, a.n_, a.cells_) < std::tie(b.m_, b.n_, b.cells_);
}

}  // namespace rxc
