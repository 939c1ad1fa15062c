#include "rxc/solver.hpp"

#include <cstdint>
#include <exception>
#include <unordered_map>

#include "rxc/automata.hpp"
#include "rxc/error.hpp"
#include "rxc/lazy_dfa.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rxc {

namespace {

using State = LazyDfa::State;

struct Compiled {
    Alphabet alphabet;
    std::size_t m;
    std::size_t n;
    std::vector<NfaPtr> nfas;
    std::vector<std::uint32_t> row_nfa;
    std::vector<std::uint32_t> col_nfa;
};

Compiled compile_puzzle(const Puzzle& p, std::size_t m, std::size_t n) {
    p.validate();
    p.check_dimensions(m, n);
    Compiled c{p.alphabet, m, n, {}, {}, {}};
    std::unordered_map<const RegexNode*, std::uint32_t> seen;
    auto index_of = [&](const Regex& r) {
        auto [it, inserted] = seen.try_emplace(r.node().get(), static_cast<std::uint32_t>(c.nfas.size()));
        if (inserted) c.nfas.push_back(Nfa::compile(r));
        return it->second;
    };
    for (std::size_t i = 0; i < m; ++i) c.row_nfa.push_back(index_of(p.rows.at(i)));
    for (std::size_t j = 0; j < n; ++j) c.col_nfa.push_back(index_of(p.cols.at(j)));
    return c;
}

// Depth-first search over cells in row-major order. One instance per thread.
class Search {
public:
    explicit Search(const Compiled& c) : c_(c), cells_(c.m * c.n), col_(c.n) {
        dfas_.reserve(c.nfas.size());
        for (const auto& nfa : c.nfas) dfas_.emplace_back(nfa);
        reset();
    }

    void reset() {
        for (std::size_t j = 0; j < c_.n; ++j) col_[j] = dfas_[c_.col_nfa[j]].start();
    }

    // Replays a prefix found by another instance; returns the row state.
    State seed(const std::vector<Symbol>& prefix) {
        reset();
        State row = LazyDfa::kDead;
        for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
            std::size_t i = pos / c_.n, j = pos % c_.n;
            LazyDfa& rd = dfas_[c_.row_nfa[i]];
            if (j == 0) row = rd.start();
            row = rd.next(row, prefix[pos]);
            col_[j] = dfas_[c_.col_nfa[j]].next(col_[j], prefix[pos]);
            cells_[pos] = prefix[pos];
        }
        return row;
    }

    // Calls leaf() at depth `limit`; leaf returns false to stop the search.
    template <class Leaf>
    bool run(std::size_t pos, State row, std::size_t limit, Leaf& leaf) {
        if (pos == limit) return leaf(cells_);
        const std::size_t i = pos / c_.n, j = pos % c_.n;
        LazyDfa& rd = dfas_[c_.row_nfa[i]];
        LazyDfa& cd = dfas_[c_.col_nfa[j]];
        const State rs = j == 0 ? rd.start() : row;
        const State cs = col_[j];
        const std::size_t row_left = c_.n - 1 - j, col_left = c_.m - 1 - i;
        for (std::uint32_t x = 0; x < c_.alphabet.size(); ++x) {
            State r2 = rd.next(rs, Symbol{x});
            if (r2 == LazyDfa::kDead || !rd.can_finish_in(r2, row_left)) continue;
            State c2 = cd.next(cs, Symbol{x});
            if (c2 == LazyDfa::kDead || !cd.can_finish_in(c2, col_left)) continue;
            cells_[pos] = Symbol{x};
            col_[j] = c2;
            bool go_on = run(pos + 1, r2, limit, leaf);
            col_[j] = cs;
            if (!go_on) return false;
        }
        return true;
    }

private:
    const Compiled& c_;
    std::vector<LazyDfa> dfas_;
    std::vector<Symbol> cells_;
    std::vector<State> col_;
};

struct Frontier {
    std::size_t depth = 0;
    std::vector<std::vector<Symbol>> prefixes;
};

// Shallowest depth with enough viable prefixes to keep every thread busy.
Frontier make_frontier(const Compiled& c, std::size_t target) {
    Search s(c);
    const std::size_t total = c.m * c.n;
    Frontier f;
    for (std::size_t d = 1; d <= total; ++d) {
        f.depth = d;
        f.prefixes.clear();
        auto leaf = [&](const std::vector<Symbol>& cells) {
            f.prefixes.emplace_back(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(d));
            return true;
        };
        s.reset();
        s.run(0, LazyDfa::kDead, d, leaf);
        if (f.prefixes.size() >= target || f.prefixes.empty()) break;
    }
    return f;
}

std::size_t frontier_target() {
#ifdef _OPENMP
    return 16 * static_cast<std::size_t>(omp_get_max_threads());
#else
    return 16;
#endif
}

// Runs body(search, prefix_index, start_row) over every frontier prefix.
template <class Body>
void for_each_subtree(const Compiled& c, const Frontier& f, Body body) {
    const auto tasks = static_cast<std::ptrdiff_t>(f.prefixes.size());
    std::exception_ptr error;
#pragma omp parallel
    {
        Search s(c);
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t t = 0; t < tasks; ++t) {
            try {
                State row = s.seed(f.prefixes[static_cast<std::size_t>(t)]);
                body(s, static_cast<std::size_t>(t), row);
            } catch (...) {
#pragma omp critical(rxc_solver_error)
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

bool verify(const Puzzle& p, const Grid& g) {
    p.validate();
    p.check_dimensions(g.m(), g.n());
    if (!(g.alphabet() == p.alphabet)) throw Error("grid alphabet differs from puzzle alphabet");
    std::unordered_map<const RegexNode*, NfaPtr> nfas;
    auto nfa_for = [&](const Regex& r) -> const Nfa& {
        auto& slot = nfas[r.node().get()];
        if (!slot) slot = Nfa::compile(r);
        return *slot;
    };
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (!nfa_for(p.rows.at(i)).matches(g.row(i))) return false;
    }
    for (std::size_t j = 0; j < g.n(); ++j) {
        if (!nfa_for(p.cols.at(j)).matches(g.col(j))) return false;
    }
    return true;
}

std::optional<Grid> solve(const Puzzle& p, std::size_t m, std::size_t n) {
    auto found = enumerate(p, m, n, 1, Execution::Serial);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::vector<Grid> enumerate(const Puzzle& p, std::size_t m, std::size_t n, std::optional<std::size_t> cap,
                            Execution exec) {
    const Compiled c = compile_puzzle(p, m, n);
    const std::size_t limit = cap.value_or(SIZE_MAX);
    if (limit == 0) return {};

    auto collect = [&](Search& s, State row, std::size_t depth, std::vector<Grid>& out) {
        auto leaf = [&](const std::vector<Symbol>& cells) {
            out.emplace_back(c.alphabet, m, n, cells);
            return out.size() < limit;
        };
        s.run(depth, row, m * n, leaf);
    };

    if (exec == Execution::Serial) {
        Search s(c);
        std::vector<Grid> out;
        collect(s, LazyDfa::kDead, 0, out);
        return out;
    }

    const Frontier f = make_frontier(c, frontier_target());
    std::vector<std::vector<Grid>> parts(f.prefixes.size());
    for_each_subtree(c, f, [&](Search& s, std::size_t t, State row) { collect(s, row, f.depth, parts[t]); });
    std::vector<Grid> out;
    for (auto& part : parts) {
        for (auto& g : part) {
            if (out.size() == limit) return out;
            out.push_back(std::move(g));
        }
    }
    return out;
}

BigInt count(const Puzzle& p, std::size_t m, std::size_t n, Execution exec) {
    const Compiled c = compile_puzzle(p, m, n);

    auto tally = [&](Search& s, State row, std::size_t depth) {
        BigInt total = 0;
        std::uint64_t run = 0;
        auto leaf = [&](const std::vector<Symbol>&) {
            if (++run == UINT64_MAX) {
                total += run;
                run = 0;
            }
            return true;
        };
        s.run(depth, row, m * n, leaf);
        total += run;
        return total;
    };

    if (exec == Execution::Serial) {
        Search s(c);
        return tally(s, LazyDfa::kDead, 0);
    }

    const Frontier f = make_frontier(c, frontier_target());
    std::vector<BigInt> parts(f.prefixes.size());
    for_each_subtree(c, f, [&](Search& s, std::size_t t, State row) { parts[t] = tally(s, row, f.depth); });
    BigInt total = 0;
    for (const auto& v : parts) total += v;
    return total;
}

bool is_unique(const Puzzle& p, std::size_t m, std::size_t n) {
    return enumerate(p, m, n, 2, Execution::Serial).size() == 1;
}

bool is_plural(const Regex& r, const Regex& c) {
    if (!(r.alphabet() == c.alphabet())) throw Error("plurality test needs a shared alphabet");
    if (!is_positive(r) || !is_positive(c)) return false;

    // A single-line crossword along `line` uses only symbols that on their
    // own match the cross expression.
    auto single_line_exists = [](const Regex& line, const Regex& cross) {
        auto allowed = single_symbol_words(cross);
        std::vector<NodePtr> lits;
        for (std::uint32_t a = 0; a < allowed.size(); ++a) {
            if (allowed[a]) lits.push_back(re::lit(Symbol{a}));
        }
        if (lits.empty()) return false;
        Regex restricted(line.alphabet(), re::meet({line.node(), re::plus(re::alt(std::move(lits)))}));
        return !Nfa::compile(restricted)->is_empty();
    };
    return !single_line_exists(r, c) && !single_line_exists(c, r);
}

}  // namespace rxc
