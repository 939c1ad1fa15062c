#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rxc {

// Undirected graph with 1-based vertices plus a cover budget.
struct GraphInstance {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t k = 1;

    void validate() const;
};

struct Literal {
    std::uint32_t var = 0;  // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::vector<Literal>> clauses;

    void validate() const;
    // assignment[v] is the value of variable v.
    bool satisfied_by(const std::vector<bool>& assignment) const;
    // Every clause has three literals over strictly increasing variables.
    bool is_exact_three_cnf() const;
};

}  // namespace rxc
