#include "braid_words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace pw {

void check_word(const BraidWord& w) {
    for (int l : w.letters)
        if (l < 1 || l > w.m - 1) throw braid_error("letter " + std::to_string(l) + " out of range for m=" + std::to_string(w.m));
}

Perm word_permutation(const BraidWord& w) {
    check_word(w);
    Perm p = perm_identity(w.m);
    for (int l : w.letters) p = perm_compose(p, perm_s(l, w.m));
    return p;
}

Perm demazure_product(const BraidWord& w) {
    check_word(w);
    Perm p = perm_identity(w.m);
    for (int l : w.letters) {
        Perm q = perm_compose(p, perm_s(l, w.m));
        if (perm_length(q) > perm_length(p)) p = q;
    }
    return p;
}

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (size_t k = 0; k < a.size() && ok; ++k) ok = a[(k + r) % a.size()] == b[k];
        if (ok) return true;
    }
    return false;
}

std::vector<int> w0_word(int m) {
    std::vector<int> w;
    for (int k = 2; k <= m; ++k)
        for (int l = m - k + 1; l <= m - 1; ++l) w.push_back(l);
    return w;
}

std::vector<int> pattern_piece(const Necklace& nk, int a) {
    auto [x, fx] = nk.stack(a);
    std::vector<int> out;
    if (x == fx) return out;
    std::set<int> h = nk.heights(a);
    int above = 0, crossed = 0;
    for (int y : h) {
        if (y > x) ++above;
        if (y > x && y < fx) ++crossed;
    }
    int level = above + 1;
    for (int k = 1; k <= crossed; ++k) out.push_back(level - k);
    return out;
}

std::vector<std::vector<int>> pattern_pieces(const Necklace& nk) {
    std::vector<std::vector<int>> p;
    for (int a = 0; a < nk.n(); ++a) p.push_back(pattern_piece(nk, a));
    return p;
}

BraidWord pattern_word(const Necklace& nk) {
    BraidWord w{nk.m(), {}};
    for (auto& p : pattern_pieces(nk)) w.letters.insert(w.letters.end(), p.begin(), p.end());
    return w;
}

std::vector<std::vector<int>> beta_pieces(const Bap& f) {
    int n = f.n(), m = f.m();
    Necklace t = target_necklace(f);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> piece;
        if (!f.loop(i - 1)) {
            int p = f.pi(i - 1), b = 0;
            for (int a : t.entry(i))
                if (cyc_less(a, p, i, n)) ++b;
            for (int k = 1; k <= b; ++k) piece.push_back(m - k);
        }
        out.push_back(piece);
    }
    return out;
}

BraidWord beta_from_positroid(const Bap& f) {
    BraidWord w{f.m(), {}};
    for (auto& p : beta_pieces(f)) w.letters.insert(w.letters.end(), p.begin(), p.end());
    return w;
}

std::vector<std::vector<int>> delta_pieces(const Bap& f) {
    int n = f.n();
    Necklace s = source_necklace(f);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> piece;
        if (!f.loop(i)) {
            int q = mod1(f.finv(i), n), d = 0;
            for (int a : s.entry(i - 1))
                if (cyc_less(q, a, i, n)) ++d;
            for (int k = d; k >= 1; --k) piece.push_back(k);
        }
        out.push_back(piece);
    }
    return out;
}

BraidWord delta_from_positroid(const Bap& f) {
    BraidWord w{f.m(), {}};
    for (auto& p : delta_pieces(f)) w.letters.insert(w.letters.end(), p.begin(), p.end());
    return w;
}

GridPattern grid_pattern(const Bap& f) { return GridPattern{target_necklace(f)}; }

GridPattern grid_toggle(const GridPattern& gp, int i, bool left) {
    auto [a, b] = gp.chord(i - 1);
    auto [c, d] = gp.chord(i);
    bool nested = left ? (a < c && c <= d && d < b) : (c < a && a <= b && b < d);
    if (!nested) throw toggle_error("grid toggle needs nested chords at " + std::to_string(i));
    return GridPattern{toggle_necklace(gp.nk, i, left)};
}

std::string render_grid_svg(const GridPattern& gp) {
    int n = gp.n();
    const int u = 30;
    int lo = 1 << 30, hi = -(1 << 30);
    for (int a = 0; a < n; ++a) {
        auto [x, fx] = gp.chord(a);
        lo = std::min(lo, x);
        hi = std::max(hi, fx);
    }
    for (int a = 0; a <= n; ++a)
        for (int h : gp.slice(a)) lo = std::min(lo, h), hi = std::max(hi, h);
    std::ostringstream s;
    int width = (n + 2) * u, height = (hi - lo + 2) * u;
    auto ypix = [&](int y) { return (hi - y + 1) * u; };
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    for (int a = 0; a < n; ++a) {
        auto [x, fx] = gp.chord(a);
        int cx = (a + 1) * u + u / 2;
        s << "  <line x1=\"" << cx << "\" y1=\"" << ypix(x) << "\" x2=\"" << cx << "\" y2=\"" << ypix(fx)
          << "\" stroke=\"black\"/>\n";
    }
    for (int a = 0; a <= n; ++a)
        for (int h : gp.slice(a)) {
            int x0 = a * u + u / 2, x1 = x0 + u;
            s << "  <line x1=\"" << x0 << "\" y1=\"" << ypix(h) << "\" x2=\"" << x1 << "\" y2=\"" << ypix(h)
              << "\" stroke=\"gray\"/>\n";
        }
    for (int y = lo; y <= hi; ++y)
        s << "  <text x=\"2\" y=\"" << ypix(y) + 4 << "\" font-size=\"10\">" << y << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

BraidWord downshift(const BraidWord& w) {
    check_word(w);
    if (w.m < 2) throw braid_error("downshift needs m >= 2");
    BraidWord d{w.m - 1, {}};
    for (int l : w.letters)
        if (l != w.m - 1) d.letters.push_back(l);
    return d;
}

std::vector<int> apply_move(const std::vector<int>& w, const WordMove& mv) {
    std::vector<int> v(w);
    switch (mv.kind) {
    case MoveKind::rotate:
        if (!v.empty()) std::rotate(v.begin(), v.begin() + 1, v.end());
        break;
    case MoveKind::commute:
        if (mv.pos < 0 || mv.pos + 1 >= static_cast<int>(v.size()) || std::abs(v[mv.pos] - v[mv.pos + 1]) < 2)
            throw braid_error("illegal commutation");
        std::swap(v[mv.pos], v[mv.pos + 1]);
        break;
    case MoveKind::braid:
        if (mv.pos < 0 || mv.pos + 2 >= static_cast<int>(v.size()) || v[mv.pos] != v[mv.pos + 2] ||
            std::abs(v[mv.pos] - v[mv.pos + 1]) != 1)
            throw braid_error("illegal braid move");
        std::swap(v[mv.pos], v[mv.pos + 1]);
        v[mv.pos + 2] = v[mv.pos];
        break;
    }
    return v;
}

namespace {

std::string key_of(const std::vector<int>& w) { return std::string(w.begin(), w.end()); }

template <class Goal>
bool bfs_moves(const std::vector<int>& start, bool allow_rotate, Goal goal, long cap, std::vector<WordMove>& out,
               std::vector<int>& reached) {
    std::unordered_map<std::string, std::pair<std::string, WordMove>> parent;
    std::deque<std::vector<int>> q;
    std::string sk = key_of(start);
    parent.emplace(sk, std::make_pair(std::string(), WordMove{MoveKind::rotate, -1}));
    q.push_back(start);
    while (!q.empty()) {
        std::vector<int> w = q.front();
        q.pop_front();
        if (goal(w)) {
            reached = w;
            out.clear();
            std::string k = key_of(w);
            while (k != sk) {
                auto& pr = parent.at(k);
                out.push_back(pr.second);
                k = pr.first;
            }
            std::reverse(out.begin(), out.end());
            return true;
        }
        std::vector<WordMove> cand;
        int len = static_cast<int>(w.size());
        for (int p = 0; p + 1 < len; ++p) {
            if (std::abs(w[p] - w[p + 1]) >= 2) cand.push_back({MoveKind::commute, p});
            if (p + 2 < len && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) cand.push_back({MoveKind::braid, p});
        }
        if (allow_rotate && len > 1) cand.push_back({MoveKind::rotate, 0});
        std::string wk = key_of(w);
        for (auto& mv : cand) {
            std::vector<int> v = apply_move(w, mv);
            std::string vk = key_of(v);
            if (parent.count(vk)) continue;
            parent.emplace(vk, std::make_pair(wk, mv));
            q.push_back(v);
        }
        if (static_cast<long>(parent.size()) > cap) return false;
    }
    return false;
}

}  // namespace

W0Normal normalize_w0(const BraidWord& w, long state_cap) {
    check_word(w);
    std::vector<int> target = w0_word(w.m);
    W0Normal res;
    res.word.m = w.m;
    auto goal = [&](const std::vector<int>& v) {
        if (v.size() < target.size()) return false;
        return std::equal(target.begin(), target.end(), v.end() - static_cast<long>(target.size()));
    };
    std::vector<int> reached;
    if (!bfs_moves(w.letters, true, goal, state_cap, res.moves, reached))
        throw braid_error("word does not contain a reduced w0 up to cyclic braid moves (search exhausted)");
    res.word.letters = reached;
    for (auto& mv : res.moves)
        if (mv.kind == MoveKind::rotate) ++res.shift;
    return res;
}

bool find_braid_moves(const std::vector<int>& from, const std::vector<int>& to, std::vector<WordMove>& out,
                      long state_cap) {
    std::vector<int> reached;
    return bfs_moves(from, false, [&](const std::vector<int>& v) { return v == to; }, state_cap, out, reached);
}

DecoratedBraid place_basepoints(const Bap& f) {
    int n = f.n(), m = f.m();
    DecoratedBraid d;
    d.word = beta_from_positroid(f);
    auto pieces = beta_pieces(f);
    for (int i = 1; i <= n; ++i) {
        const auto& piece = pieces[i - 1];
        d.piece_start.push_back(static_cast<int>(d.events.size()));
        d.sign.push_back(piece.size() % 2 ? -1 : 1);
        if (!f.loop(i)) {
            int hm = piece.empty() ? m : m - 1;
            d.events.push_back({false, 0, {i, true, m}});
            d.events.push_back({false, 0, {i, false, hm}});
        }
        for (int l : piece) d.events.push_back({true, l, {0, false, 0}});
    }
    return d;
}

}  // namespace pw
