#include "rxc/binary_code.hpp"

#include <algorithm>

namespace rxc {

// ---------------------------------------------------------------- code

BinaryCode::BinaryCode(std::size_t k) : k_(k), ell_(3 * k), bits_(std::vector<std::string>{"0", "1"}) {
    if (k < 2) throw Error("binary code needs k >= 2");
    s_.resize(ell_);
    for (std::size_t j = 0; j < ell_; ++j) {
        s_[j].resize(ell_);
        for (std::size_t o = 0; o < ell_; ++o) s_[j][o] = bit(j, o) ? one() : zero();
    }
}

std::optional<std::size_t> BinaryCode::shift_of(const Word& block) const {
    if (block.size() != ell_) return std::nullopt;
    // s_j has its two adjacent 1s at l-2-j and l-1-j (mod l).
    std::size_t ones = 0, pair_at = ell_;
    for (std::size_t o = 0; o < ell_; ++o) {
        if (block[o] != one()) continue;
        ++ones;
        if (block[(o + 1) % ell_] == one()) pair_at = o;
    }
    if (ones != 2 || pair_at == ell_) return std::nullopt;
    return (2 * ell_ - 2 - pair_at) % ell_;
}

Grid BinaryCode::square(std::size_t c) const {
    if (c >= k_) throw Error("square index out of range");
    Grid g(bits_, ell_, ell_);
    for (std::size_t i = 0; i < ell_; ++i) {
        for (std::size_t o = 0; o < ell_; ++o) g.set(i, o, s_[(3 * c + i) % ell_][o]);
    }
    return g;
}

Homomorphism BinaryCode::homomorphism(const Alphabet& source) const {
    if (source.size() > k_) throw Error("alphabet has more letters than the code");
    Homomorphism h{bits_, {}};
    for (std::size_t c = 0; c < source.size(); ++c) h.images.push_back(s_[3 * c]);
    return h;
}

BinaryCode binary_code(std::size_t k) { return BinaryCode(k); }

Alphabet digit_alphabet(std::size_t k) {
    std::vector<std::string> t;
    for (std::size_t c = 0; c < k; ++c) t.push_back(std::to_string(c));
    return Alphabet(std::move(t));
}

// ---------------------------------------------------------------- expressions

namespace {

NodePtr run(Symbol b, std::size_t len) { return re::power(re::lit(b), len); }

NodePtr shifts(const BinaryCode& code, std::size_t residue, std::size_t first_c) {
    std::vector<NodePtr> alts;
    for (std::size_t c = first_c; c < code.k(); ++c) alts.push_back(re::word(code.s(3 * c + residue)));
    return re::alt(std::move(alts));
}

}  // namespace

NodePtr duplication_expr(const BinaryCode& code, bool allow_zero_tail) {
    NodePtr d0 = shifts(code, 0, 1);
    NodePtr d0_tail = allow_zero_tail ? shifts(code, 0, 0) : d0;
    NodePtr d1 = shifts(code, 1, 0);
    NodePtr d2 = shifts(code, 2, 0);
    return re::alt({re::cat({d0, re::plus(d0_tail)}), re::cat({d1, re::plus(d1)}), re::cat({d2, re::plus(d2)})});
}

BinaryParts binary_parts(const BinaryCode& code) {
    const std::size_t l = code.ell();
    const Symbol zero = code.zero(), one = code.one();
    BinaryParts p;
    p.alignment = re::cat({run(one, l), re::plus(run(zero, l))});
    for (std::size_t i = 0; i < l; ++i) {
        NodePtr head;
        if (i == 0) {
            head = re::cat({run(zero, 3), run(one, l - 3)});
        } else if (i <= 2) {
            head = re::cat({re::lit(zero), run(one, l - 1)});
        } else {
            head = run(one, l);
        }
        p.calibration.push_back(re::cat({head, re::plus(re::word(code.s(i)))}));
    }
    p.duplication = duplication_expr(code);
    p.generic_encoding = re::cat({re::word(code.s(0)), re::plus(shifts(code, 0, 0))});
    return p;
}

Regex binarize_expr(const BinaryCode& code, const Regex& r) {
    if (!is_positive(r)) throw Error("binary encoding needs a positive expression");
    const BinaryParts p = binary_parts(code);
    const Regex hr = apply_homomorphism(r, code.homomorphism(r.alphabet()));
    NodePtr encoding = re::cat({re::word(code.s(0)), hr.node()});
    NodePtr f = re::alt({re::cat({re::lit(code.one()), re::alt({p.alignment, re::alt(p.calibration)})}),
                         re::cat({re::lit(code.zero()), re::alt({p.duplication, encoding})})});
    return Regex(code.bits(), f);
}

Regex binarize_expr(std::size_t k, const Regex& r) { return binarize_expr(BinaryCode(k), r); }

// ---------------------------------------------------------------- psi

PsiView::PsiView(const BinaryCode& code, const Grid& x) : code_(code), x_(x) {
    if (x.alphabet().size() > code.k()) throw Error("grid alphabet has more letters than the code");
}

bool PsiView::bit(std::size_t r, std::size_t c) const {
    const std::size_t l = code_.ell();
    if (r == 0) return c <= l;
    if (c == 0) return r <= l;
    const std::size_t rr = r - 1, cc = c - 1;
    const std::size_t t = rr / l, i = rr % l, u = cc / l, o = cc % l;
    if (t == 0 && u == 0) {
        // Corner square: row i of the calibration head.
        if (i == 0) return o >= 3;
        if (i <= 2) return o != 0;
        return true;
    }
    if (t == 0 || u == 0) return code_.bit(i, o);  // calibration squares are S_0
    const std::size_t x = x_.at(t - 1, u - 1).id;
    return code_.bit((3 * x + i) % l, o);
}

Word PsiView::row(std::size_t r) const {
    Word w(cols());
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = bit(r, c) ? code_.one() : code_.zero();
    return w;
}

Word PsiView::col(std::size_t c) const {
    Word w(rows());
    for (std::size_t r = 0; r < w.size(); ++r) w[r] = bit(r, c) ? code_.one() : code_.zero();
    return w;
}

Grid PsiView::materialize() const {
    Grid g(code_.bits(), rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            if (bit(r, c)) g.set(r, c, code_.one());
        }
    }
    return g;
}

Grid psi_encode(const BinaryCode& code, const Grid& x) { return PsiView(code, x).materialize(); }

Grid psi_encode(std::size_t k, const Grid& x) { return psi_encode(BinaryCode(k), x); }

namespace {

// Validator over a materialized grid. Lines are addressed by zero-based
// index, index 0 being the alignment line.
class PsiDecoder {
public:
    PsiDecoder(const BinaryCode& code, const Grid& y) : code_(code), y_(y), l_(code.ell()) {}

    Grid run(const Alphabet& target) {
        shape();
        for (int pass = 0; pass < 2; ++pass) {
            transposed_ = pass == 1;
            if (!is_alignment(line(0))) fail(3, "first " + kind() + " is not 1^(l+1) 0^(..)");
        }
        for (int pass = 0; pass < 2; ++pass) {
            transposed_ = pass == 1;
            for (std::size_t i = 1; i < count(); ++i) {
                if (is_alignment(line(i))) fail(2, kind() + " " + std::to_string(i) + " is an alignment line");
            }
        }
        transposed_ = false;
        for (std::size_t t = 1; t <= m_; ++t) check_two_ones(t, 0);
        for (std::size_t u = 1; u <= n_; ++u) check_two_ones(0, u);
        for (int pass = 0; pass < 2; ++pass) {
            transposed_ = pass == 1;
            for (std::size_t i = 1; i < count(); ++i) {
                const Word w = line(i);
                const bool ok = i <= l_ ? calibration_shift(w).has_value() : is_encoding_region_line(w);
                if (!ok) fail(4, kind() + " " + std::to_string(i) + " has the wrong type for its position");
            }
        }
        for (int pass = 0; pass < 2; ++pass) {
            transposed_ = pass == 1;
            for (std::size_t i = 0; i < l_; ++i) {
                if (calibration_shift(line(i + 1)) != i) {
                    fail(5, "calibration " + kind() + " " + std::to_string(i + 1) + " does not use shift " +
                                std::to_string(i));
                }
            }
        }
        const Grid s0 = code_.square(0);
        transposed_ = false;
        for (std::size_t t = 1; t <= m_; ++t) {
            if (square(t, 0) != s0) fail(6, "square (" + std::to_string(t) + ",0) differs from S_0");
        }
        for (std::size_t u = 1; u <= n_; ++u) {
            if (square(0, u) != s0) fail(6, "square (0," + std::to_string(u) + ") differs from S_0");
        }
        for (int pass = 0; pass < 2; ++pass) {
            transposed_ = pass == 1;
            for (std::size_t t = 1; t <= (transposed_ ? n_ : m_); ++t) {
                if (!is_encoding_line(line(t * l_ + 1))) {
                    fail(7, kind() + " " + std::to_string(t * l_ + 1) + " is not s_0 followed by letter codes");
                }
            }
        }
        transposed_ = false;
        Grid x(target, m_, n_);
        for (std::size_t t = 1; t <= m_; ++t) {
            for (std::size_t u = 1; u <= n_; ++u) {
                const Word first = square_row(t, u, 0);
                auto j = code_.shift_of(first);
                const std::string where = "square (" + std::to_string(t) + "," + std::to_string(u) + ")";
                if (!j || *j % 3 != 0 || *j / 3 >= target.size()) fail(8, where + " encodes no letter");
                const std::size_t c = *j / 3;
                if (square(t, u) != code_.square(c)) fail(8, where + " is not S_" + std::to_string(c));
                x.set(t - 1, u - 1, Symbol{static_cast<std::uint32_t>(c)});
            }
        }
        return x;
    }

private:
    [[noreturn]] void fail(int claim, const std::string& detail) const { throw DecodeError(claim, detail); }

    std::string kind() const { return transposed_ ? "column" : "row"; }

    void shape() {
        if (!(y_.alphabet() == code_.bits())) fail(0, "grid is not over {0,1}");
        if ((y_.m() - 1) % l_ != 0 || (y_.n() - 1) % l_ != 0 || y_.m() < 2 * l_ + 1 || y_.n() < 2 * l_ + 1) {
            fail(0, "dimensions are not of the form l(m+1)+1 x l(n+1)+1 with m, n >= 1");
        }
        m_ = (y_.m() - 1) / l_ - 1;
        n_ = (y_.n() - 1) / l_ - 1;
    }

    std::size_t count() const { return transposed_ ? y_.n() : y_.m(); }
    Symbol at(std::size_t r, std::size_t c) const { return transposed_ ? y_.at(c, r) : y_.at(r, c); }
    Word line(std::size_t i) const { return transposed_ ? y_.col(i) : y_.row(i); }

    Word block(const Word& w, std::size_t b) const {
        return Word(w.begin() + static_cast<std::ptrdiff_t>(1 + b * l_),
                    w.begin() + static_cast<std::ptrdiff_t>(1 + (b + 1) * l_));
    }
    std::size_t blocks(const Word& w) const { return (w.size() - 1) / l_; }

    bool all(const Word& w, Symbol s) const {
        return std::all_of(w.begin(), w.end(), [&](Symbol x) { return x == s; });
    }

    bool is_alignment(const Word& w) const {
        if (w[0] != code_.one() || !all(block(w, 0), code_.one())) return false;
        for (std::size_t b = 1; b < blocks(w); ++b) {
            if (!all(block(w, b), code_.zero())) return false;
        }
        return true;
    }

    // i when w matches 1 C_i.
    std::optional<std::size_t> calibration_shift(const Word& w) const {
        if (w[0] != code_.one()) return std::nullopt;
        auto j = code_.shift_of(block(w, 1));
        if (!j) return std::nullopt;
        for (std::size_t b = 2; b < blocks(w); ++b) {
            if (block(w, b) != code_.s(*j)) return std::nullopt;
        }
        const Word head = block(w, 0);
        for (std::size_t o = 0; o < l_; ++o) {
            bool want = true;
            if (*j == 0) want = o >= 3;
            else if (*j <= 2) want = o != 0;
            if ((head[o] == code_.one()) != want) return std::nullopt;
        }
        return j;
    }

    // w matches 0(D | E) for the generic E: every block is a shift and all
    // shifts agree mod 3.
    bool is_encoding_region_line(const Word& w) const {
        if (w[0] != code_.zero()) return false;
        std::optional<std::size_t> residue;
        for (std::size_t b = 0; b < blocks(w); ++b) {
            auto j = code_.shift_of(block(w, b));
            if (!j) return false;
            if (residue && *residue != *j % 3) return false;
            residue = *j % 3;
        }
        return true;
    }

    bool is_encoding_line(const Word& w) const {
        if (w[0] != code_.zero() || block(w, 0) != code_.s(0)) return false;
        for (std::size_t b = 1; b < blocks(w); ++b) {
            auto j = code_.shift_of(block(w, b));
            if (!j || *j % 3 != 0) return false;
        }
        return true;
    }

    Word square_row(std::size_t t, std::size_t u, std::size_t i) const {
        Word w(l_);
        for (std::size_t o = 0; o < l_; ++o) w[o] = y_.at(1 + t * l_ + i, 1 + u * l_ + o);
        return w;
    }

    Grid square(std::size_t t, std::size_t u) const {
        Grid g(code_.bits(), l_, l_);
        for (std::size_t i = 0; i < l_; ++i) {
            for (std::size_t o = 0; o < l_; ++o) g.set(i, o, y_.at(1 + t * l_ + i, 1 + u * l_ + o));
        }
        return g;
    }

    void check_two_ones(std::size_t t, std::size_t u) const {
        for (std::size_t i = 0; i < l_; ++i) {
            std::size_t row_ones = 0, col_ones = 0;
            for (std::size_t o = 0; o < l_; ++o) {
                row_ones += y_.at(1 + t * l_ + i, 1 + u * l_ + o) == code_.one();
                col_ones += y_.at(1 + t * l_ + o, 1 + u * l_ + i) == code_.one();
            }
            if (row_ones != 2 || col_ones != 2) {
                fail(1, "square (" + std::to_string(t) + "," + std::to_string(u) + ") line " + std::to_string(i) +
                            " does not have exactly two 1s");
            }
        }
    }

    const BinaryCode& code_;
    const Grid& y_;
    std::size_t l_;
    std::size_t m_ = 0, n_ = 0;
    bool transposed_ = false;
};

}  // namespace

Grid psi_decode(const BinaryCode& code, const Grid& y, const Alphabet& target) {
    if (target.size() > code.k()) throw Error("target alphabet has more letters than the code");
    return PsiDecoder(code, y).run(target);
}

Grid psi_decode(std::size_t k, const Grid& y) { return psi_decode(BinaryCode(k), y, digit_alphabet(k)); }

}  // namespace rxc
