#include "flag_moduli.hpp"

#include <algorithm>
#include <numeric>

namespace pw {

namespace {

Subspace lower(const Matrix& u, int k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    return Subspace::span(u.columns(idx), u.rows());
}

// coefficient of u_k when w is written in the basis u (k is 1-based)
Rational coord(const Matrix& u, const Vec& w, int k) { return solve_in_span(u, w)[k - 1]; }

void swap_cols(Matrix& u, int k) {
    Vec a = u.col(k - 1);
    u.set_col(k - 1, u.col(k));
    u.set_col(k, a);
}

int find_base_point(const DecoratedChain& c, int i, bool plus) {
    for (int e = 0; e < static_cast<int>(c.events.size()); ++e) {
        const auto& ev = c.events[e];
        if (!ev.crossing && ev.bp.index == i && ev.bp.plus == plus) return e;
    }
    throw chain_error("no base point " + std::to_string(i) + (plus ? "+" : "-"));
}

std::vector<int> piece_lengths(const Necklace& nk) {
    std::vector<int> out;
    for (auto& p : pattern_pieces(nk)) out.push_back(static_cast<int>(p.size()));
    return out;
}

FlagChain rotate_left(FlagChain c, int r) {
    for (int k = 0; k < r; ++k) c = apply_word_move(c, {MoveKind::rotate, 0});
    return c;
}

void fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
}

}  // namespace

bool validate_flag_chain(const FlagChain& c, std::string* why) {
    int l = c.length();
    if (static_cast<int>(c.flags.size()) != l + 1) return fail(why, "one flag per strip expected"), false;
    if (c.flags.front() != c.flags.back()) return fail(why, "chain does not close up"), false;
    for (int j = 0; j < l; ++j)
        if (relative_position(c.flags[j], c.flags[j + 1]) != perm_s(c.word.letters[j], c.word.m))
            return fail(why, "strips " + std::to_string(j) + " and " + std::to_string(j + 1) + " are not in position s" +
                                 std::to_string(c.word.letters[j])),
                   false;
    return true;
}

bool same_flags(const FlagChain& a, const FlagChain& b) { return a.word == b.word && a.flags == b.flags; }

bool same_decorated(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
    Matrix t = inverse(u) * v;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (t(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix dual_decorated(const Matrix& u) {
    int m = u.rows();
    Matrix inv = inverse(u), d(m, m);
    for (int k = 0; k < m; ++k)
        for (int r = 0; r < m; ++r) d(r, k) = inv(m - 1 - k, r);
    return d;
}

std::vector<Rational> necklace_dets(const Matrix& v, const Bap& f) {
    int n = f.n();
    Necklace t = target_necklace(f);
    std::vector<Rational> d;
    for (int i = 1; i <= n; ++i) {
        auto e = t.entry(i);
        d.push_back(plucker(v, sort_cyclic(std::vector<int>(e.begin(), e.end()), i, n)));
    }
    return d;
}

void strip_loops(const Matrix& v, const Bap& f, Matrix& v_out, Bap& f_out) {
    if (v.cols() != f.n()) throw shape_error("strip_loops: one column per index");
    std::vector<int> kept;
    f_out = delete_loops(f, &kept);
    for (int i = 1; i <= f.n(); ++i)
        if (f.loop(i) && !v.is_zero_col(i - 1)) throw stratum_error("loop " + std::to_string(i) + " has a nonzero column");
    std::vector<int> idx;
    for (int i : kept) idx.push_back(i - 1);
    v_out = v.columns(idx);
}

DecoratedChain phi(const Matrix& v, const Bap& f) {
    int n = f.n(), m = f.m();
    for (int i = 1; i <= n; ++i)
        if (f.loop(i)) throw chain_error("phi needs a permutation without fixed points; strip the loops first");
    if (v.rows() != m || v.cols() != n) throw shape_error("phi: matrix must be m x n");
    std::vector<Rational> d = necklace_dets(v, f);
    for (int i = 1; i <= n; ++i)
        if (d[i - 1] == 0) throw stratum_error("necklace minor I_" + std::to_string(i) + " vanishes");
    if (!(bap_from_matrix(v) == f)) throw stratum_error("matrix lies in a different positroid stratum");

    DecoratedBraid db = place_basepoints(f);
    DecoratedChain c;
    c.f = f;
    c.word = db.word;
    c.events = db.events;
    c.sign = db.sign;
    c.piece_start = db.piece_start;

    auto col = [&](int j) { return v.col(mod1(j, n) - 1); };
    auto e0 = target_necklace(f).entry(n);
    std::vector<int> ord = sort_cyclic(std::vector<int>(e0.begin(), e0.end()), n, n);
    Matrix u(m, m);
    for (int k = 1; k <= m; ++k) u.set_col(k - 1, col(ord[m - k]));
    // strand n has passed n^- already
    u.set_col(m - 1, scale(col(n), 1 / d[n - 1]));
    c.strips.push_back(u);
    for (const auto& ev : c.events) {
        if (ev.crossing) {
            swap_cols(u, ev.letter);
        } else if (ev.bp.plus) {
            u.set_col(m - 1, col(f.pi(ev.bp.index - 1)));
        } else {
            int i = ev.bp.index, h = ev.bp.height;
            if (u.col(h - 1) != col(i)) throw chain_error("phi: base point " + std::to_string(i) + "- off its strand");
            u.set_col(h - 1, scale(col(i), 1 / d[i - 1]));
        }
        c.strips.push_back(u);
    }
    if (c.strips.back() != c.strips.front()) throw chain_error("phi: chain does not close up");
    return c;
}

FlagChain underlying(const DecoratedChain& c) {
    FlagChain out;
    out.word = c.word;
    for (size_t e = 0; e < c.events.size(); ++e)
        if (c.events[e].crossing) out.flags.push_back(Flag::from_basis(c.strips[e]));
    out.flags.push_back(Flag::from_basis(c.strips.back()));
    return out;
}

Rational left_over_right(const DecoratedChain& c, int e) {
    int h = c.events.at(e).bp.height;
    const Matrix& ul = c.strips.at(e);
    const Matrix& ur = c.strips.at(e + 1);
    return 1 / coord(ul, ur.col(h - 1), h);
}

Rational a_minus(const DecoratedChain& c, int i) { return left_over_right(c, find_base_point(c, i, false)); }

Rational a_plus(const DecoratedChain& c, int i) {
    return Rational(c.sign.at(i - 1)) / left_over_right(c, find_base_point(c, i, true));
}

bool validate_chain(const DecoratedChain& c, std::string* why) {
    int m = c.m();
    if (c.strips.size() != c.events.size() + 1) return fail(why, "one strip per gap between events"), false;
    for (const auto& u : c.strips)
        if (u.rows() != m || u.cols() != m || det(u) == 0) return fail(why, "missing or degenerate decoration"), false;
    for (size_t e = 0; e < c.events.size(); ++e) {
        const Matrix& a = c.strips[e];
        const Matrix& b = c.strips[e + 1];
        const auto& ev = c.events[e];
        std::string at = " at event " + std::to_string(e);
        if (ev.crossing) {
            int i = ev.letter;
            Flag fa = Flag::from_basis(a), fb = Flag::from_basis(b);
            if (relative_position(fa, fb) != perm_s(i, m)) return fail(why, "flags not in position s_i" + at), false;
            for (int k = 1; k <= m; ++k)
                if (k != i && k != i + 1 && !lower(a, k - 1).contains(sub(b.col(k - 1), a.col(k - 1))))
                    return fail(why, "decoration changed away from the crossing" + at), false;
            // rho and lambda
            if (!fb.level(i).contains(sub(b.col(i), a.col(i - 1)))) return fail(why, "rho fails" + at), false;
            if (!fa.level(i).contains(sub(a.col(i), b.col(i - 1)))) return fail(why, "lambda fails" + at), false;
        } else {
            int h = ev.bp.height;
            if (Flag::from_basis(a) != Flag::from_basis(b)) return fail(why, "base point moved the flag" + at), false;
            for (int k = 1; k <= m; ++k)
                if (k != h && !lower(a, k - 1).contains(sub(b.col(k - 1), a.col(k - 1))))
                    return fail(why, "base point rescaled the wrong level" + at), false;
        }
    }
    if (!same_decorated(c.strips.back(), c.strips.front())) return fail(why, "chain does not close up"), false;
    for (int i = 1; i <= static_cast<int>(c.sign.size()); ++i) {
        bool has = std::any_of(c.events.begin(), c.events.end(),
                               [&](const BraidEvent& ev) { return !ev.crossing && ev.bp.index == i; });
        if (has && a_plus(c, i) != a_minus(c, i))
            return fail(why, "A+ and A- differ at " + std::to_string(i)), false;
    }
    return true;
}

FlagChain toggle_chain(const Matrix& v, const Necklace& nk) {
    int n = nk.n(), m = nk.m();
    if (v.rows() != m || v.cols() != n) throw shape_error("toggle_chain: matrix must be m x n");
    auto col = [&](int h) { return v.col(mod1(h, n) - 1); };
    std::set<int> h0 = nk.heights(0);
    Matrix u(m, m);
    int k = 0;
    for (auto it = h0.rbegin(); it != h0.rend(); ++it) u.set_col(k++, col(*it));
    FlagChain out;
    out.word = pattern_word(nk);
    out.flags.push_back(Flag::from_basis(u));
    for (int a = 0; a < n; ++a) {
        auto [x, fx] = nk.stack(a);
        if (x == fx) throw chain_error("toggle_chain: loops must be stripped first");
        std::set<int> h = nk.heights(a);
        int level = 1;
        for (int y : h)
            if (y > x) ++level;
        u.set_col(level - 1, col(fx));
        for (int l : pattern_piece(nk, a)) {
            swap_cols(u, l);
            out.flags.push_back(Flag::from_basis(u));
        }
    }
    if (out.flags.back() != out.flags.front()) throw chain_error("toggle_chain: pattern does not close up");
    return out;
}

std::vector<Flag> slice_flags(const FlagChain& c, const Necklace& nk) {
    if (!(c.word == pattern_word(nk))) throw chain_error("chain is not over this necklace pattern");
    std::vector<Flag> out;
    int off = 0;
    for (int len : piece_lengths(nk)) {
        out.push_back(c.flags[off]);
        off += len;
    }
    return out;
}

bool span_identity(const Matrix& v, const Necklace& nk, std::string* why) {
    int n = nk.n(), m = nk.m();
    auto col = [&](int h) { return v.col(mod1(h, n) - 1); };
    for (int a = 0; a < n; ++a) {
        auto [x, fx] = nk.stack(a);
        if (x == fx) continue;
        std::vector<Vec> mid;
        for (int y : nk.heights(a))
            if (y > x && y < fx) mid.push_back(col(y));
        std::vector<Vec> left(mid), right(mid);
        left.push_back(col(x));
        right.push_back(col(fx));
        Subspace l = Subspace::span(left, m), r = Subspace::span(right, m);
        if (l != r || l.dim() != static_cast<int>(left.size())) {
            fail(why, "span identity fails on chord (" + std::to_string(x) + "," + std::to_string(fx) + ")");
            return false;
        }
    }
    return true;
}

std::vector<Flag> fill_reduced(const Flag& f, const Flag& g, const std::vector<int>& word) {
    int m = f.m();
    std::vector<Flag> out{f};
    Flag cur = f;
    for (size_t t = 0; t < word.size(); ++t) {
        int a = word[t];
        Perm want = word_permutation(BraidWord{m, std::vector<int>(word.begin() + static_cast<long>(t) + 1, word.end())});
        bool found = false;
        for (int b = 1; b <= m && !found; ++b) {
            Subspace v = cur.level(a - 1).sum(cur.level(a + 1).intersect(g.level(b)));
            if (v.dim() != a || v == cur.level(a)) continue;
            Flag cand = cur.with_level(a, v);
            if (relative_position(cand, g) != want) continue;
            cur = cand;
            found = true;
        }
        if (!found) throw chain_error("no flag chain of this reduced word between the given flags");
        out.push_back(cur);
    }
    if (out.back() != g) throw chain_error("reduced fill does not end at the target flag");
    return out;
}

FlagChain apply_word_move(const FlagChain& c, const WordMove& mv) {
    FlagChain out;
    out.word = c.word;
    out.word.letters = apply_move(c.word.letters, mv);
    int l = c.length();
    if (mv.kind == MoveKind::rotate) {
        if (l == 0) return c;
        out.flags.assign(c.flags.begin() + 1, c.flags.end());
        out.flags.push_back(c.flags[1]);
        return out;
    }
    int len = mv.kind == MoveKind::commute ? 2 : 3;
    std::vector<int> block(out.word.letters.begin() + mv.pos, out.word.letters.begin() + mv.pos + len);
    auto mid = fill_reduced(c.flags[mv.pos], c.flags[mv.pos + len], block);
    out.flags = c.flags;
    for (int k = 1; k < len; ++k) out.flags[mv.pos + k] = mid[k];
    return out;
}

FlagChain undo_word_move(const FlagChain& c, const WordMove& mv) {
    if (mv.kind != MoveKind::rotate) return apply_word_move(c, mv);
    int l = c.length();
    if (l == 0) return c;
    FlagChain out;
    out.word = c.word;
    std::rotate(out.word.letters.begin(), out.word.letters.end() - 1, out.word.letters.end());
    out.flags.push_back(c.flags[l - 1]);
    out.flags.insert(out.flags.end(), c.flags.begin(), c.flags.end() - 1);
    return out;
}

FlagChain transport_toggles(const FlagChain& c, const Necklace& start, const std::vector<Toggle>& seq) {
    Necklace nk = start;
    FlagChain ch = c;
    int n = nk.n();
    for (const auto& t : seq) {
        if (!(ch.word == pattern_word(nk))) throw chain_error("chain is not over the current necklace pattern");
        Necklace next = toggle_necklace(nk, t.a, t.left);
        auto p = pattern_pieces(nk), q = pattern_pieces(next);
        int s1 = t.a - 1, s2 = t.a % n;
        std::vector<int> from(p[s1]), to(q[s1]);
        from.insert(from.end(), p[s2].begin(), p[s2].end());
        to.insert(to.end(), q[s2].begin(), q[s2].end());
        if (from.size() != to.size()) throw chain_error("toggle changes the word length");
        int off = 0;
        for (int k = 0; k < s1; ++k) off += static_cast<int>(p[k].size());
        // bring slice a-1 to the front, rewrite the two pieces, go back to slice 0
        ch = rotate_left(ch, off);
        std::vector<WordMove> moves;
        if (!find_braid_moves(from, to, moves)) throw chain_error("toggle is not a sequence of braid moves");
        for (const auto& mv : moves) ch = apply_word_move(ch, mv);
        int back = ch.length() - off;
        if (t.a == n) back = static_cast<int>(q[s1].size());
        ch = rotate_left(ch, ch.length() ? back % ch.length() : 0);
        nk = next;
        if (!(ch.word == pattern_word(nk))) throw chain_error("toggle transport lost the pattern word");
    }
    return ch;
}

Matrix psi(const DecoratedChain& c) {
    int n = c.n(), m = c.m();
    for (int i = 1; i <= n; ++i)
        if (c.f.loop(i)) throw chain_error("psi needs a permutation without fixed points");
    if (c.strips.size() != c.events.size() + 1 || static_cast<int>(c.piece_start.size()) != n)
        throw chain_error("psi: chain is not laid out on the positroid braid");
    for (const auto& u : c.strips)
        if (u.rows() != m || u.cols() != m || det(u) == 0) throw chain_error("psi: missing trivialization");

    Necklace t = target_necklace(c.f);
    FlagChain u = underlying(c);
    if (!(u.word == pattern_word(t))) throw chain_error("psi: chain word is not the positroid braid");
    auto seq = toggles_to_source(t);
    Necklace src = apply_toggles(t, seq);
    auto sf = slice_flags(transport_toggles(u, t, seq), src);

    std::vector<Vec> line(n + 1);
    for (int a = 0; a < n; ++a) {
        int j = mod1(*src.heights(a).rbegin(), n);
        if (line[j].empty()) line[j] = sf[a].level(1).basis().col(0);
    }
    Matrix x(m, n);
    for (int i = 1; i <= n; ++i) {
        int j = c.f.pi(i - 1);
        if (line[j].empty()) throw chain_error("psi: strand " + std::to_string(j) + " never reaches level one");
        int e = c.piece_start[i - 1];
        const auto& ev = c.events.at(e);
        if (ev.crossing || !ev.bp.plus || ev.bp.index != i) throw chain_error("psi: base point layout mismatch");
        Rational k = coord(c.strips[e + 1], line[j], m);
        if (k == 0) throw chain_error("psi: degenerate decoration");
        x.set_col(j - 1, scale(line[j], 1 / k));
    }
    return x;
}

FlagChain rotate_chain(const FlagChain& c, int pos) {
    int m = c.word.m;
    auto w0 = w0_word(m);
    int len = static_cast<int>(w0.size()), l = c.length();
    if (pos < 0 || pos + len >= l) throw chain_error("rotation pattern absent");
    if (!std::equal(w0.begin(), w0.end(), c.word.letters.begin() + pos + 1))
        throw chain_error("rotation pattern absent: no w0 after the crossing");
    int i = c.word.letters[pos], k = m - i;
    const Flag& fa = c.flags[pos];
    const Flag& fb = c.flags[pos + 1];
    const Flag& fc = c.flags[pos + len + 1];
    std::vector<int> sw{i};
    sw.insert(sw.end(), w0.begin(), w0.end());
    Perm want_b = word_permutation(BraidWord{m, sw});
    Flag g;
    bool found = false;
    // the new level k lies in the pencil between fc's levels k-1 and k+1
    std::vector<Subspace> probes;
    for (int b = 1; b < m; ++b) {
        probes.push_back(fb.level(b));
        probes.push_back(fa.level(b));
    }
    for (const auto& x : probes) {
        Subspace v = fc.level(k - 1).sum(fc.level(k + 1).intersect(x));
        if (v.dim() != k || v == fc.level(k)) continue;
        Flag cand = fc.with_level(k, v);
        if (relative_position(fa, cand) == perm_w0(m) && relative_position(cand, fc) == perm_s(k, m) &&
            relative_position(fb, cand) == want_b) {
            g = cand;
            found = true;
            break;
        }
    }
    if (!found) throw chain_error("rotation: no flag in the pencil satisfies both positions");
    FlagChain out;
    out.word.m = m;
    out.word.letters.assign(c.word.letters.begin(), c.word.letters.begin() + pos);
    out.word.letters.insert(out.word.letters.end(), w0.begin(), w0.end());
    out.word.letters.push_back(k);
    out.word.letters.insert(out.word.letters.end(), c.word.letters.begin() + pos + len + 1, c.word.letters.end());
    out.flags.assign(c.flags.begin(), c.flags.begin() + pos);
    auto mid = fill_reduced(fa, g, w0);
    out.flags.insert(out.flags.end(), mid.begin(), mid.end());
    out.flags.insert(out.flags.end(), c.flags.begin() + pos + len + 1, c.flags.end());
    return out;
}

FlagChain reflect_chain(const FlagChain& c) {
    int l = c.length(), m = c.word.m;
    FlagChain out;
    out.word.m = m;
    for (int k = 0; k < l; ++k) out.word.letters.push_back(m - c.word.letters[l - 1 - k]);
    for (int k = 0; k <= l; ++k) out.flags.push_back(hodge_star(c.flags[l - k]));
    return out;
}

FlagChain reverse_chain(const FlagChain& c) {
    FlagChain out = c;
    std::reverse(out.word.letters.begin(), out.word.letters.end());
    std::reverse(out.flags.begin(), out.flags.end());
    return out;
}

DecoratedChain reflect_decorated(const DecoratedChain& c) {
    int m = c.m(), e = static_cast<int>(c.events.size());
    DecoratedChain out;
    out.f = c.f;
    out.sign = c.sign;
    out.word.m = m;
    for (int k = e - 1; k >= 0; --k) {
        BraidEvent ev = c.events[k];
        if (ev.crossing) {
            ev.letter = m - ev.letter;
            out.word.letters.push_back(ev.letter);
        } else {
            ev.bp.height = m + 1 - ev.bp.height;
        }
        out.events.push_back(ev);
    }
    for (int k = 0; k <= e; ++k) out.strips.push_back(dual_decorated(c.strips[e - k]));
    return out;
}

FlagChain dt_flags(const FlagChain& c) {
    int m = c.word.m;
    auto w0 = w0_word(m);
    int len = static_cast<int>(w0.size()), l = c.length() - len;
    if (l < 0 || !std::equal(w0.begin(), w0.end(), c.word.letters.end() - len))
        throw chain_error("dt: word is not normalized to end in w0");
    FlagChain r = c;
    for (int k = l; k >= 1; --k) r = rotate_chain(r, k - 1);
    // reflecting reverses the strips; the cusp isotopy reads them backwards again
    FlagChain s = rotate_left(reverse_chain(reflect_chain(r)), len);
    auto mid = fill_reduced(s.flags[l], s.flags[l + len], w0);
    for (int k = 0; k < len; ++k) {
        s.word.letters[l + k] = w0[k];
        s.flags[l + k] = mid[k];
    }
    return s;
}

FlagChain dt_flags_positroid(const FlagChain& c) {
    W0Normal nf;
    try {
        nf = normalize_w0(c.word);
    } catch (const braid_error& e) {
        throw chain_error(std::string("dt: normalization missing: ") + e.what());
    }
    FlagChain ch = c;
    for (const auto& mv : nf.moves) ch = apply_word_move(ch, mv);
    ch = dt_flags(ch);
    for (auto it = nf.moves.rbegin(); it != nf.moves.rend(); ++it) ch = undo_word_move(ch, *it);
    return ch;
}

DecoratedChain dt_chain(const DecoratedChain& c) {
    int n = c.n(), m = c.m();
    if (static_cast<int>(c.piece_start.size()) != n) throw chain_error("dt: chain is not laid out on the positroid braid");
    Matrix w(m, n);
    for (int i = 1; i <= n; ++i) {
        // decoration of the top level right after beta_i, dualized, then the corner rescaling
        const Matrix& u = i < n ? c.strips[c.piece_start[i]] : c.strips.back();
        Matrix inv = inverse(u);
        Rational a = a_minus(c, i);
        for (int r = 0; r < m; ++r) w(r, i - 1) = inv(m - 1, r) / a;
    }
    DecoratedChain out = phi(w, c.f);
    if (!same_flags(underlying(out), dt_flags_positroid(underlying(c))))
        throw chain_error("dt: dual decorations disagree with the rotated and reflected flags");
    return out;
}

}  // namespace pw
