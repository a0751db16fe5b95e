#include "positroid_core.hpp"

#include <algorithm>

namespace pw {

static int floordiv(int a, int b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

Bap::Bap(std::vector<int> window) : n_(static_cast<int>(window.size())), w_(std::move(window)) {
    if (n_ == 0) throw invalid_permutation_error("empty window");
    std::vector<char> seen(n_, 0);
    long total = 0;
    for (int i = 1; i <= n_; ++i) {
        int v = w_[i - 1];
        if (v < i || v > i + n_)
            throw invalid_permutation_error("window value f(" + std::to_string(i) + ")=" + std::to_string(v) +
                                            " outside [i, i+n]");
        int r = mod1(v, n_) - 1;
        if (seen[r]) throw invalid_permutation_error("window values not distinct mod n");
        seen[r] = 1;
        total += v - i;
    }
    if (total % n_) throw invalid_permutation_error("average shift is not an integer");
    m_ = static_cast<int>(total / n_);
}

int Bap::f(int i) const {
    int r = mod1(i, n_);
    return w_[r - 1] + (i - r);
}

int Bap::finv(int j) const {
    for (int r = 1; r <= n_; ++r)
        if (mod1(w_[r - 1], n_) == mod1(j, n_)) return r + (j - w_[r - 1]);
    throw invalid_permutation_error("finv: no preimage");
}

int Bap::length() const {
    int l = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= i + 2 * n_ + 1; ++j)
            if (f(i) > f(j)) ++l;
    return l;
}

Bap bap_from_matrix(const Matrix& m) {
    int n = m.cols();
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) {
        Vec v = m.col(i - 1);
        int r = i;
        std::vector<Vec> span;
        // f(i) = minimal r >= i with v_i in span(v_{i+1}, ..., v_r)
        while (true) {
            Matrix b = Matrix::from_columns(span, m.rows());
            if (in_span(b, v)) break;
            ++r;
            span.push_back(m.col(mod1(r, n) - 1));
        }
        w[i - 1] = r;
    }
    return Bap(w);
}

Necklace::Necklace(NecklaceKind kind, Bap f, std::vector<Stack> stacks, std::set<int> base_heights)
    : kind_(kind), f_(std::move(f)), st_(std::move(stacks)), h0_(std::move(base_heights)) {
    if (static_cast<int>(st_.size()) != f_.n()) throw shape_error("necklace needs n stacks");
    std::set<int> h = h0_;
    for (int a = 0; a < f_.n(); ++a) {
        auto [x, fx] = st_[a];
        if (f_.f(x) != fx) throw invalid_permutation_error("stack inconsistent with f");
        if (x == fx) continue;
        if (!h.count(x)) throw invalid_permutation_error("stack removes a height not present");
        h.erase(x);
        h.insert(fx);
    }
    std::set<int> shifted;
    for (int x : h0_) shifted.insert(x + f_.n());
    if (h != shifted) throw invalid_permutation_error("stacks are not periodic");
}

Stack Necklace::stack(int a) const {
    int n = f_.n();
    int q = floordiv(a, n);
    auto s = st_[a - q * n];
    return {s.first + q * n, s.second + q * n};
}

std::set<int> Necklace::heights(int a) const {
    int n = f_.n();
    int q = floordiv(a, n);
    int r = a - q * n;
    std::set<int> h = h0_;
    for (int b = 0; b < r; ++b) {
        auto [x, fx] = st_[b];
        if (x == fx) continue;
        h.erase(x);
        h.insert(fx);
    }
    std::set<int> out;
    for (int x : h) out.insert(x + q * n);
    return out;
}

std::set<int> Necklace::entry(int a) const {
    std::set<int> s;
    for (int x : heights(a)) s.insert(mod1(x, f_.n()));
    return s;
}

std::vector<std::set<int>> Necklace::entries() const {
    std::vector<std::set<int>> e;
    for (int a = 1; a <= f_.n(); ++a) e.push_back(entry(a));
    return e;
}

int Necklace::iota_length() const {
    int n = f_.n(), l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= i + 2 * n + 1; ++j)
            if (iota(i) > iota(j)) ++l;
    return l;
}

bool Necklace::is_minimal() const { return iota_length() == 0; }

bool Necklace::same_stacks_mod_shift(const Necklace& o) const {
    int n = f_.n();
    if (o.n() != n) return false;
    for (int a = 0; a < n; ++a) {
        auto s = st_[a], t = o.st_[a];
        int d = s.first - t.first;
        if (d % n || s.second - t.second != d) return false;
    }
    return true;
}

Necklace target_necklace(const Bap& f) {
    int n = f.n();
    std::vector<Stack> st;
    for (int a = 0; a < n; ++a) st.push_back({a, f.f(a)});
    std::set<int> h0;
    for (int i = -n; i < 0; ++i)
        if (f.f(i) >= 0) h0.insert(f.f(i));
    return Necklace(NecklaceKind::target, f, st, h0);
}

Necklace source_necklace(const Bap& f) {
    int n = f.n();
    std::vector<Stack> st;
    for (int a = 0; a < n; ++a) {
        int x = f.finv(a + 1);
        st.push_back({x, a + 1});
    }
    std::set<int> h0;
    for (int i = -n + 1; i <= 0; ++i)
        if (f.f(i) > 0) h0.insert(i);
    return Necklace(NecklaceKind::source, f, st, h0);
}

bool gale_leq(const std::set<int>& i_set, const std::set<int>& j_set, int a, int n) {
    if (i_set.size() != j_set.size()) return false;
    auto x = sort_cyclic(std::vector<int>(i_set.begin(), i_set.end()), a, n);
    auto y = sort_cyclic(std::vector<int>(j_set.begin(), j_set.end()), a, n);
    for (size_t k = 0; k < x.size(); ++k)
        if (cyc_key(x[k], a, n) > cyc_key(y[k], a, n)) return false;
    return true;
}

bool oh_membership(const Necklace& target, const std::set<int>& j_set) {
    int n = target.n();
    if (static_cast<int>(j_set.size()) != target.m()) return false;
    for (int a = 1; a <= n; ++a)
        if (!gale_leq(target.entry(a), j_set, a, n)) return false;
    return true;
}

bool toggle_applicable(const Necklace& nk, int a, bool left) {
    auto [x, fx] = nk.stack(a - 1);
    auto [y, fy] = nk.stack(a);
    if (left) return x < y && fx > fy;
    return x > y && fx < fy;
}

Necklace toggle_necklace(const Necklace& nk, int a, bool left) {
    int n = nk.n();
    if (a < 1 || a > n) throw toggle_error("toggle position out of range");
    if (!toggle_applicable(nk, a, left))
        throw toggle_error(std::string(left ? "leftward" : "rightward") + " toggle not applicable at " +
                           std::to_string(a));
    Stack before = nk.stack(a - 1), after = nk.stack(a);
    std::vector<Stack> st = nk.st_;
    std::set<int> h0 = nk.h0_;
    if (a < n) {
        st[a - 1] = after;
        st[a] = before;
    } else {
        // the slot after entry n is stack 0 shifted by n
        st[n - 1] = after;
        st[0] = {before.first - n, before.second - n};
        std::set<int> h = nk.heights(n - 1);
        if (after.first != after.second) {
            h.erase(after.first);
            h.insert(after.second);
        }
        h0.clear();
        for (int x : h) h0.insert(x - n);
    }
    return Necklace(NecklaceKind::general, nk.f_, st, h0);
}

std::vector<Toggle> toggles_to_source(const Necklace& target) {
    std::vector<Toggle> seq;
    Necklace cur = target;
    int n = cur.n();
    while (true) {
        int pick = 0;
        for (int a = 1; a <= n && !pick; ++a)
            if (toggle_applicable(cur, a, true)) pick = a;
        if (!pick) break;
        cur = toggle_necklace(cur, pick, true);
        seq.push_back({pick, true});
    }
    return seq;
}

Necklace apply_toggles(Necklace nk, const std::vector<Toggle>& seq) {
    for (auto& t : seq) nk = toggle_necklace(nk, t.a, t.left);
    return nk;
}

std::string set_string(const std::set<int>& s, int a, int n) {
    std::string out;
    for (int x : sort_cyclic(std::vector<int>(s.begin(), s.end()), a, n)) {
        if (!out.empty() && n > 9) out += ",";
        out += std::to_string(x);
    }
    return out;
}

Bap delete_loops(const Bap& f, std::vector<int>* kept) {
    int n = f.n();
    std::vector<int> old;
    for (int i = 1; i <= n; ++i)
        if (!f.loop(i)) old.push_back(i);
    if (old.empty()) throw invalid_permutation_error("every index is a loop");
    std::vector<int> w;
    for (size_t k = 0; k < old.size(); ++k) {
        int i = old[k], c = 0;
        for (int j = i + 1; j <= f.f(i); ++j)
            if (!f.loop(mod1(j, n))) ++c;
        w.push_back(static_cast<int>(k) + 1 + c);
    }
    if (kept) *kept = old;
    return Bap(w);
}

Bap tshift_bap(const Bap& f) {
    if (f.m() < 1) throw invalid_permutation_error("T-shift needs rank at least 1");
    Bap g = delete_loops(f);
    std::vector<int> w;
    for (int i = 1; i <= g.n(); ++i) w.push_back(g.f(i - 1));
    return Bap(w);
}

}  // namespace pw
