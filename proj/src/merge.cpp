#include "rxc/merge.hpp"

#include <optional>

#include "rxc/error.hpp"
#include "rxc/solver.hpp"

namespace rxc {

namespace {

std::string fresh(const Alphabet& a, std::string name) {
    while (a.find(name)) name += '\'';
    return name;
}

std::optional<Grid> strip_edges(const Grid& y, const MergeCode& code) {
    const std::size_t m = y.m(), n = y.n();
    if (m < 2 || n < 2) return std::nullopt;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (y.at(i, 0) != code.heart) return std::nullopt;
    }
    if (y.at(m - 1, 0) != code.diamond) return std::nullopt;
    for (std::size_t j = 1; j < n; ++j) {
        if (y.at(m - 1, j) != code.spade) return std::nullopt;
    }
    Grid inner(code.base, m - 1, n - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            const Symbol s = y.at(i, j);
            if (!code.base.contains(s)) return std::nullopt;
            inner.set(i, j - 1, s);
        }
    }
    return inner;
}

}  // namespace

MergeCode merge_code(const Alphabet& base) {
    MergeCode code{base, base, {}, {}, {}};
    const std::string hrt = fresh(base, "hrt");
    const std::string dmd = fresh(base, "dmd");
    const std::string spd = fresh(base, "spd");
    code.extended = base.extended({hrt, dmd, spd});
    code.heart = code.extended.symbol(hrt);
    code.diamond = code.extended.symbol(dmd);
    code.spade = code.extended.symbol(spd);
    return code;
}

Merged merge_rc(const Regex& r, const Regex& c, bool check_plural) {
    if (!(r.alphabet() == c.alphabet())) throw Error("row and column expressions use different alphabets");
    if (check_plural && !is_plural(r, c)) throw Error("row/column pair is not plural");
    MergeCode code = merge_code(r.alphabet());
    const NodePtr hrt = re::lit(code.heart), dmd = re::lit(code.diamond), spd = re::lit(code.spade);
    NodePtr e = re::alt({
        re::cat({hrt, r.node()}),
        re::cat({dmd, spd, spd, re::star(spd)}),
        re::cat({c.node(), spd}),
        re::cat({hrt, hrt, re::star(hrt), dmd}),
    });
    Regex merged(code.extended, e);
    return {std::move(code), std::move(merged)};
}

Grid rho_encode(const Grid& x, const MergeCode& code) {
    if (!(x.alphabet() == code.base)) throw Error("grid is not over the merge base alphabet");
    const std::size_t m = x.m(), n = x.n();
    Grid y(code.extended, m + 1, n + 1, code.spade);
    for (std::size_t i = 0; i < m; ++i) {
        y.set(i, 0, code.heart);
        for (std::size_t j = 0; j < n; ++j) y.set(i, j + 1, x.at(i, j));
    }
    y.set(m, 0, code.diamond);
    return y;
}

RhoDecoded rho_decode(const Grid& y, const MergeCode& code, bool allow_transpose) {
    if (!(y.alphabet() == code.extended)) throw Error("grid is not over the merged alphabet");
    if (auto inner = strip_edges(y, code)) return {std::move(*inner), false};
    if (allow_transpose) {
        if (auto inner = strip_edges(y.transpose(), code)) return {std::move(*inner), true};
    }
    throw Error("grid does not carry the edge markers in either orientation");
}

}  // namespace rxc
