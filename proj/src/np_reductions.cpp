#include "rxc/np_reductions.hpp"

#include "rxc/error.hpp"

namespace rxc {

Alphabet binary_alphabet() { return Alphabet(std::vector<std::string>{"0", "1"}); }

namespace {

const Symbol kZero{0}, kOne{1};

NodePtr any_bit() { return re::alt({re::lit(kZero), re::lit(kOne)}); }

}  // namespace

Puzzle vc_reduce(const GraphInstance& g) {
    g.validate();
    const Alphabet bits = binary_alphabet();
    const std::size_t m = g.vertices, n = g.edges.size();

    std::vector<Regex> rows;
    for (std::size_t v = 1; v <= m; ++v) {
        Word incidence(n, kZero);
        for (std::size_t j = 0; j < n; ++j) {
            if (g.edges[j].first == v || g.edges[j].second == v) incidence[j] = kOne;
        }
        incidence.push_back(kOne);
        rows.emplace_back(bits, re::alt({re::word(incidence), re::star(re::lit(kZero))}));
    }

    std::vector<Regex> cols;
    const Regex covered(bits, re::cat({re::star(re::lit(kZero)), re::lit(kOne), re::star(any_bit())}));
    for (std::size_t j = 0; j < n; ++j) cols.push_back(covered);
    NodePtr budget = re::cat({re::power(re::cat({re::star(re::lit(kZero)), re::opt(re::lit(kOne))}), g.k),
                              re::star(re::lit(kZero))});
    cols.emplace_back(bits, budget);

    Puzzle p{bits, LineSpec::per_line(std::move(rows)), LineSpec::per_line(std::move(cols)), m, n + 1};
    p.validate();
    return p;
}

std::vector<std::size_t> cover_from_grid(const Grid& x) {
    std::vector<std::size_t> cover;
    for (std::size_t i = 0; i < x.m(); ++i) {
        if (x.at(i, x.n() - 1) == kOne) cover.push_back(i + 1);
    }
    return cover;
}

Puzzle threesat_reduce(const CnfFormula& f) {
    f.validate();
    if (!f.is_exact_three_cnf()) throw Error("formula is not an exact 3-CNF with increasing variables");
    const Alphabet bits = binary_alphabet();
    const std::size_t n = f.variables;

    std::vector<Regex> rows;
    for (const auto& clause : f.clauses) {
        std::vector<NodePtr> alts;
        for (const Literal& lit : clause) {
            alts.push_back(re::cat({re::power(any_bit(), lit.var), re::lit(lit.positive ? kOne : kZero),
                                    re::power(any_bit(), n - 1 - lit.var)}));
        }
        rows.emplace_back(bits, re::alt(std::move(alts)));
    }
    const Regex constant(bits, re::alt({re::star(re::lit(kZero)), re::star(re::lit(kOne))}));
    Puzzle p{bits, LineSpec::per_line(std::move(rows)), LineSpec::uniform(constant), f.clauses.size(), n};
    p.validate();
    return p;
}

std::vector<bool> assignment_from_grid(const Grid& x) {
    std::vector<bool> a(x.n());
    for (std::size_t j = 0; j < x.n(); ++j) a[j] = x.at(0, j) == kOne;
    return a;
}

}  // namespace rxc
