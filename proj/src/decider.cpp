#include <deque>
#include <unordered_map>

#include "rxc/automata.hpp"
#include "rxc/error.hpp"
#include "rxc/lazy_dfa.hpp"
#include "rxc/solver.hpp"

namespace rxc {

namespace {

using State = LazyDfa::State;
using Profile = std::vector<State>;

struct ProfileHash {
    std::size_t operator()(const Profile& p) const noexcept {
        std::size_t h = p.size();
        for (auto s : p) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Visit {
    std::size_t parent;  // index into the visit table; self for the root
    Word column;
};

}  // namespace

WidthDecision decide_unbounded_width(const std::vector<Regex>& rows, const Regex& c, const DecideOptions& options) {
    if (rows.empty()) throw Error("width decision needs at least one row expression");
    const Alphabet& alphabet = c.alphabet();
    for (const auto& r : rows) {
        if (!(r.alphabet() == alphabet)) throw Error("row and column expressions must share an alphabet");
    }
    const std::size_t m = rows.size();

    // Rows given by the same expression object share one automaton.
    std::vector<LazyDfa> dfas;
    std::vector<std::size_t> row_dfa(m);
    std::unordered_map<const RegexNode*, std::size_t> by_node;
    for (std::size_t i = 0; i < m; ++i) {
        auto [it, inserted] = by_node.try_emplace(rows[i].node().get(), dfas.size());
        if (inserted) dfas.emplace_back(Nfa::compile(rows[i]));
        row_dfa[i] = it->second;
    }
    LazyDfa col(Nfa::compile(c));

    Profile start(m);
    for (std::size_t i = 0; i < m; ++i) start[i] = dfas[row_dfa[i]].start();

    std::unordered_map<Profile, std::size_t, ProfileHash> seen;
    std::vector<Visit> visits;
    std::vector<Profile> profiles;
    seen.emplace(start, 0);
    visits.push_back({0, {}});
    profiles.push_back(start);

    WidthDecision result;
    std::vector<std::size_t> frontier{0};
    Profile next(m);
    Word column(m);
    std::size_t width = 0;

    while (!frontier.empty()) {
        ++width;
        std::vector<std::size_t> upcoming;
        std::optional<std::size_t> hit;

        for (std::size_t from : frontier) {
            const Profile current = profiles[from];
            // Depth-first choice of the column, one row at a time, keeping the
            // column automaton able to finish in the rows that remain.
            auto extend = [&](auto& self, std::size_t i, State cs) -> bool {
                if (i == m) {
                    bool all_accept = true;
                    for (std::size_t r = 0; r < m && all_accept; ++r) {
                        all_accept = dfas[row_dfa[r]].accepting(next[r]);
                    }
                    auto [it, inserted] = seen.try_emplace(next, visits.size());
                    if (inserted) {
                        if (visits.size() >= options.profile_limit) {
                            throw LimitExceeded("width decision exceeded its profile limit");
                        }
                        visits.push_back({from, column});
                        profiles.push_back(next);
                        upcoming.push_back(it->second);
                    }
                    if (all_accept) {
                        hit = it->second;
                        if (!inserted) {
                            // Reached through a fresh column from `from`.
                            visits.push_back({from, column});
                            profiles.push_back(next);
                            hit = visits.size() - 1;
                        }
                        return false;
                    }
                    return true;
                }
                LazyDfa& rd = dfas[row_dfa[i]];
                for (std::uint32_t x = 0; x < alphabet.size(); ++x) {
                    State rs = rd.next(current[i], Symbol{x});
                    if (rs == LazyDfa::kDead) continue;
                    State c2 = col.next(cs, Symbol{x});
                    if (c2 == LazyDfa::kDead || !col.can_finish_in(c2, m - 1 - i)) continue;
                    next[i] = rs;
                    column[i] = Symbol{x};
                    if (!self(self, i + 1, c2)) return false;
                }
                return true;
            };
            extend(extend, 0, col.start());
            if (hit) break;
        }

        if (hit) {
            std::vector<Word> columns;
            for (std::size_t v = *hit; v != 0; v = visits[v].parent) columns.push_back(visits[v].column);
            std::vector<Symbol> cells(m * columns.size());
            for (std::size_t j = 0; j < columns.size(); ++j) {
                const Word& colw = columns[columns.size() - 1 - j];
                for (std::size_t i = 0; i < m; ++i) cells[i * columns.size() + j] = colw[i];
            }
            result.exists = true;
            result.width = width;
            result.witness = Grid(alphabet, m, columns.size(), std::move(cells));
            result.profiles_explored = seen.size();
            return result;
        }
        frontier = std::move(upcoming);
    }
    result.profiles_explored = seen.size();
    return result;
}

}  // namespace rxc
