#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rxc/regex.hpp"

namespace rxc {

// Either one expression shared by every line, or one expression per line.
class LineSpec {
public:
    static LineSpec uniform(Regex r);
    static LineSpec per_line(std::vector<Regex> rs);

    bool is_uniform() const noexcept { return uniform_; }
    // Number of lines fixed by a per-line list.
    std::optional<std::size_t> line_count() const noexcept;
    const Regex& at(std::size_t i) const;
    const std::vector<Regex>& expressions() const noexcept { return exprs_; }

private:
    LineSpec(bool uniform, std::vector<Regex> exprs) : uniform_(uniform), exprs_(std::move(exprs)) {}

    bool uniform_;
    std::vector<Regex> exprs_;
};

struct Puzzle {
    Alphabet alphabet;
    LineSpec rows;
    LineSpec cols;
    std::optional<std::size_t> fixed_m;
    std::optional<std::size_t> fixed_n;

    // Throws when the invariants do not hold.
    void validate() const;
    // Throws DimensionError when m x n is incompatible with the specs.
    void check_dimensions(std::size_t m, std::size_t n) const;
    // The (R, C) puzzle with both specs uniform.
    static Puzzle uniform(const Regex& r, const Regex& c);
    // Swaps rows and columns.
    Puzzle transposed() const;
};

}  // namespace rxc
