#include "rxc/tableau_reduction.hpp"

#include "rxc/error.hpp"

namespace rxc {

namespace {

std::vector<TmState> all_states(const TuringMachine& m) {
    std::vector<TmState> qs;
    for (std::uint32_t q = 0; q < m.state_count(); ++q) qs.push_back(TmState{q});
    return qs;
}

std::vector<TapeSym> all_symbols(const TuringMachine& m) {
    std::vector<TapeSym> as;
    for (std::uint32_t a = 0; a < m.tape_symbol_count(); ++a) as.push_back(TapeSym{a});
    return as;
}

// [a]* <a|q> [a,q] (or [a]+ when `nonempty_prefix`) over all a and q != q0.
NodePtr rescan_block(const MarkerAlphabet& mk, bool nonempty_prefix) {
    const TuringMachine& m = mk.machine();
    std::vector<NodePtr> alts;
    for (TapeSym a : all_symbols(m)) {
        for (TmState q : all_states(m)) {
            auto tm = mk.transmission(a, q);
            if (!tm) continue;
            NodePtr run = re::lit(mk.unscanned(a));
            alts.push_back(re::cat({nonempty_prefix ? re::plus(run) : re::star(run), re::lit(*tm),
                                    re::lit(mk.scanned(a, q))}));
        }
    }
    return re::alt(std::move(alts));
}

TmState first_successor(const TuringMachine& m) {
    const auto& tr = m.delta(m.start(), m.blank());
    if (!tr || tr->move != Move::Left || tr->write != m.blank() || tr->next == m.start()) {
        throw Error("first transition must be (q0,B) -> (q1,B,L) with q1 != q0");
    }
    return tr->next;
}

}  // namespace

TableauParts tableau_parts(const MarkerAlphabet& mk) {
    const TuringMachine& m = mk.machine();
    const auto symbols = all_symbols(m);
    const auto states = all_states(m);
    TableauParts p;

    std::vector<NodePtr> u;
    for (TapeSym a : symbols) u.push_back(re::lit(mk.unscanned(a)));
    p.unscanned = re::alt(u);

    std::vector<NodePtr> tl, tr, halting;
    for (TmState q : states) {
        if (q == m.start() || q == m.halt()) continue;
        for (TapeSym a : symbols) {
            const auto& t = m.delta(q, a);
            if (!t) continue;
            for (TapeSym b : symbols) {
                auto tm = mk.transmission(b, t->next);
                if (!tm) continue;
                if (t->move == Move::Left) {
                    tl.push_back(re::word({*tm, mk.scanned(a, q)}));
                } else {
                    tr.push_back(re::word({mk.scanned(a, q), *tm}));
                }
            }
        }
    }
    for (TapeSym a : symbols) halting.push_back(re::lit(mk.scanned(a, m.halt())));
    p.t_left = tl.empty() ? nullptr : re::alt(tl);
    p.t_right = tr.empty() ? nullptr : re::alt(tr);
    std::vector<NodePtr> t_all = tl;
    t_all.insert(t_all.end(), tr.begin(), tr.end());
    t_all.insert(t_all.end(), halting.begin(), halting.end());
    p.transitions = re::alt(std::move(t_all));

    p.d = rescan_block(mk, false);
    p.e = rescan_block(mk, true);
    std::vector<NodePtr> f;
    for (TapeSym a : symbols) f.push_back(re::star(re::lit(mk.unscanned(a))));
    p.f = re::alt(std::move(f));
    const TmState q1 = first_successor(m);
    const TapeSym blank = m.blank();
    NodePtr head = re::alt({p.e, re::lit(mk.scanned(blank, m.start())),
                            re::word({*mk.transmission(blank, q1), mk.scanned(blank, q1)})});
    p.s = re::cat({head, re::star(p.d), p.f});

    // The written symbol of the transition taken from [a,q] must appear
    // directly below it, either plain or carrying the next state.
    std::vector<NodePtr> x, y, z;
    for (TmState q : states) {
        if (q == m.halt()) continue;
        for (TapeSym a : symbols) {
            const auto& t = m.delta(q, a);
            if (!t) continue;
            x.push_back(re::word({mk.scanned(a, q), mk.unscanned(t->write)}));
            for (TmState s : states) {
                if (auto tm = mk.transmission(t->write, s)) y.push_back(re::word({mk.scanned(a, q), *tm}));
            }
        }
    }
    p.x = re::alt(std::move(x));
    p.y = re::alt(std::move(y));
    p.h = re::alt(std::move(halting));
    for (std::uint32_t id = 0; id < mk.alphabet().size(); ++id) {
        if (mk.decode(Symbol{id}).kind != MarkerAlphabet::Kind::Scanned) z.push_back(re::lit(Symbol{id}));
    }
    p.z = re::alt(std::move(z));
    NodePtr zs = re::star(p.z);
    p.w = re::cat({zs, re::star(re::alt({re::cat({p.x, zs}), p.y})), re::opt(p.h)});
    return p;
}

NodePtr initial_row(const MarkerAlphabet& mk, const Tape& w) {
    const TuringMachine& m = mk.machine();
    const TmState q1 = first_successor(m);
    Word prefix{*mk.transmission(m.blank(), q1), mk.scanned(m.blank(), m.start())};
    for (TapeSym a : w) {
        if (a == m.blank()) throw Error("input must not contain the blank symbol");
        prefix.push_back(mk.unscanned(a));
    }
    return re::cat({re::word(prefix), re::plus(re::lit(mk.unscanned(m.blank())))});
}

Regex row_expr_with_initial(const MarkerAlphabet& mk, NodePtr initial) {
    const TableauParts p = tableau_parts(mk);
    NodePtr us = re::star(p.unscanned);
    return Regex(mk.alphabet(), re::alt({std::move(initial), re::cat({us, p.transitions, us})}));
}

Regex build_row_expr(const MarkerAlphabet& mk, const Tape& w) { return row_expr_with_initial(mk, initial_row(mk, w)); }

Regex build_col_expr(const MarkerAlphabet& mk) {
    const TableauParts p = tableau_parts(mk);
    return Regex(mk.alphabet(), re::meet({p.s, p.w}));
}

Regex squarify_col_expr(const Regex& c, const MarkerAlphabet& mk) {
    if (!(c.alphabet() == mk.alphabet())) throw Error("column expression is not over the marker alphabet");
    return Regex(mk.alphabet(), re::alt({c.node(), re::plus(re::lit(mk.unscanned(mk.machine().blank())))}));
}

Grid pad_to_square(const Grid& tableau, const MarkerAlphabet& mk) {
    if (tableau.m() < tableau.n()) throw DimensionError("tableau has more columns than rows");
    Grid out(mk.alphabet(), tableau.m(), tableau.m(), mk.unscanned(mk.machine().blank()));
    for (std::size_t i = 0; i < tableau.m(); ++i) {
        for (std::size_t j = 0; j < tableau.n(); ++j) out.set(i, j, tableau.at(i, j));
    }
    return out;
}

}  // namespace rxc
