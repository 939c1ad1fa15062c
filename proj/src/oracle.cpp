#include "rxc/oracle.hpp"

#include <bit>
#include <map>
#include <tuple>

#include "rxc/error.hpp"

namespace rxc::oracle {

namespace {

class Matcher {
public:
    explicit Matcher(const Word& w) : w_(w) {}

    // Does n match w[i, j)?
    bool match(const RegexNode& n, std::size_t i, std::size_t j) {
        auto key = std::make_tuple(&n, std::size_t{0}, i, j);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool v = false;
        const auto& ch = n.children();
        switch (n.kind()) {
            case RegexKind::Epsilon: v = i == j; break;
            case RegexKind::Literal: v = j == i + 1 && w_[i] == n.symbol(); break;
            case RegexKind::Concat: v = concat(n, 0, i, j); break;
            case RegexKind::Union:
                for (const auto& c : ch) v = v || match(*c, i, j);
                break;
            case RegexKind::Intersect:
                v = true;
                for (const auto& c : ch) v = v && match(*c, i, j);
                break;
            case RegexKind::Star: v = star(n.child(), i, j); break;
            case RegexKind::Plus:
                for (std::size_t k = i; k <= j && !v; ++k) v = match(n.child(), i, k) && star(n.child(), k, j);
                break;
            case RegexKind::Optional: v = i == j || match(n.child(), i, j); break;
        }
        memo_[key] = v;
        return v;
    }

private:
    // Children idx.. of a concatenation match w[i, j).
    bool concat(const RegexNode& n, std::size_t idx, std::size_t i, std::size_t j) {
        if (idx == n.children().size()) return i == j;
        auto key = std::make_tuple(&n, idx + 1, i, j);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool v = false;
        for (std::size_t k = i; k <= j && !v; ++k) {
            v = match(*n.children()[idx], i, k) && concat(n, idx + 1, k, j);
        }
        memo_[key] = v;
        return v;
    }

    // Zero or more nonempty pieces, each matching c.
    bool star(const RegexNode& c, std::size_t i, std::size_t j) {
        if (i == j) return true;
        auto key = std::make_tuple(&c, SIZE_MAX, i, j);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool v = false;
        for (std::size_t k = i + 1; k <= j && !v; ++k) v = match(c, i, k) && star(c, k, j);
        memo_[key] = v;
        return v;
    }

    const Word& w_;
    std::map<std::tuple<const RegexNode*, std::size_t, std::size_t, std::size_t>, bool> memo_;
};

// All words of length len over k symbols, indexed in lex order, mapped to
// membership in r.
std::vector<bool> membership_table(const Regex& r, std::size_t len) {
    const std::size_t k = r.alphabet().size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= k;
    std::vector<bool> table(total);
    Word w(len);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t v = idx;
        for (std::size_t p = len; p-- > 0;) {
            w[p] = Symbol{static_cast<std::uint32_t>(v % k)};
            v /= k;
        }
        table[idx] = structural_match(r, w);
    }
    return table;
}

}  // namespace

bool structural_match(const Regex& r, const Word& w) {
    Matcher m(w);
    return m.match(r.root(), 0, w.size());
}

std::vector<Grid> brute_force_crosswords(const Puzzle& p, std::size_t m, std::size_t n,
                                         const BruteForceOptions& options) {
    p.validate();
    p.check_dimensions(m, n);
    const std::size_t k = p.alphabet.size();
    std::uint64_t space = 1;
    for (std::size_t c = 0; c < m * n; ++c) {
        space *= k;
        if (space > options.cap) throw LimitExceeded("brute-force grid space exceeds its cap");
    }

    std::map<std::pair<const RegexNode*, std::size_t>, std::vector<bool>> tables;
    auto table_for = [&](const Regex& r, std::size_t len) -> const std::vector<bool>& {
        auto key = std::make_pair(r.node().get(), len);
        auto it = tables.find(key);
        if (it == tables.end()) it = tables.emplace(key, membership_table(r, len)).first;
        return it->second;
    };
    std::vector<const std::vector<bool>*> row_table(m), col_table(n);
    for (std::size_t i = 0; i < m; ++i) row_table[i] = &table_for(p.rows.at(i), n);
    for (std::size_t j = 0; j < n; ++j) col_table[j] = &table_for(p.cols.at(j), m);

    std::vector<Grid> out;
    std::vector<Symbol> cells(m * n);
    for (std::uint64_t g = 0; g < space; ++g) {
        std::uint64_t v = g;
        for (std::size_t c = m * n; c-- > 0;) {
            cells[c] = Symbol{static_cast<std::uint32_t>(v % k)};
            v /= k;
        }
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < n; ++j) idx = idx * k + cells[i * n + j].id;
            ok = (*row_table[i])[idx];
        }
        for (std::size_t j = 0; j < n && ok; ++j) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < m; ++i) idx = idx * k + cells[i * n + j].id;
            ok = (*col_table[j])[idx];
        }
        if (ok) out.emplace_back(p.alphabet, m, n, cells);
    }
    return out;
}

bool brute_force_vertex_cover(const GraphInstance& g) {
    g.validate();
    if (g.vertices > 20) throw LimitExceeded("vertex cover oracle supports at most 20 vertices");
    for (std::uint32_t set = 0; set < (1u << g.vertices); ++set) {
        if (static_cast<std::size_t>(std::popcount(set)) > g.k) continue;
        bool covers = true;
        for (const auto& [u, v] : g.edges) {
            if (!((set >> (u - 1)) & 1u) && !((set >> (v - 1)) & 1u)) {
                covers = false;
                break;
            }
        }
        if (covers) return true;
    }
    return false;
}

std::uint64_t brute_force_sat_count(const CnfFormula& f) {
    f.validate();
    if (f.variables > 20) throw LimitExceeded("model counting oracle supports at most 20 variables");
    std::uint64_t total = 0;
    std::vector<bool> a(f.variables);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variables); ++bits) {
        for (std::size_t v = 0; v < f.variables; ++v) a[v] = (bits >> v) & 1u;
        if (f.satisfied_by(a)) ++total;
    }
    return total;
}

}  // namespace rxc::oracle
