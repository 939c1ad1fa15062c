#include "rxc/puzzle.hpp"

#include <string>

#include "rxc/error.hpp"

namespace rxc {

LineSpec LineSpec::uniform(Regex r) { return LineSpec(true, {std::move(r)}); }

LineSpec LineSpec::per_line(std::vector<Regex> rs) {
    if (rs.empty()) throw Error("per-line expressions need at least one entry");
    return LineSpec(false, std::move(rs));
}

std::optional<std::size_t> LineSpec::line_count() const noexcept {
    if (uniform_) return std::nullopt;
    return exprs_.size();
}

const Regex& LineSpec::at(std::size_t i) const { return uniform_ ? exprs_.front() : exprs_.at(i); }

void Puzzle::validate() const {
    for (const auto* spec : {&rows, &cols}) {
        for (const auto& r : spec->expressions()) {
            if (!(r.alphabet() == alphabet)) throw Error("expression alphabet differs from puzzle alphabet");
        }
    }
    if (fixed_m && *fixed_m == 0) throw DimensionError("row count must be positive");
    if (fixed_n && *fixed_n == 0) throw DimensionError("column count must be positive");
    if (fixed_m && rows.line_count() && *rows.line_count() != *fixed_m) {
        throw DimensionError("row list length differs from the fixed row count");
    }
    if (fixed_n && cols.line_count() && *cols.line_count() != *fixed_n) {
        throw DimensionError("column list length differs from the fixed column count");
    }
}

void Puzzle::check_dimensions(std::size_t m, std::size_t n) const {
    if (m == 0 || n == 0) throw DimensionError("grid dimensions must be positive");
    if (rows.line_count() && *rows.line_count() != m) {
        throw DimensionError("puzzle has " + std::to_string(*rows.line_count()) + " row expressions, grid has " +
                             std::to_string(m) + " rows");
    }
    if (cols.line_count() && *cols.line_count() != n) {
        throw DimensionError("puzzle has " + std::to_string(*cols.line_count()) +
                             " column expressions, grid has " + std::to_string(n) + " columns");
    }
    if (fixed_m && *fixed_m != m) throw DimensionError("puzzle fixes the row count at " + std::to_string(*fixed_m));
    if (fixed_n && *fixed_n != n) {
        throw DimensionError("puzzle fixes the column count at " + std::to_string(*fixed_n));
    }
}

Puzzle Puzzle::uniform(const Regex& r, const Regex& c) {
    Puzzle p{r.alphabet(), LineSpec::uniform(r), LineSpec::uniform(c), std::nullopt, std::nullopt};
    p.validate();
    return p;
}

Puzzle Puzzle::transposed() const { return Puzzle{alphabet, cols, rows, fixed_n, fixed_m}; }

}  // namespace rxc
