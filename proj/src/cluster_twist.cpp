#include "cluster_twist.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pw {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

void fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
}

Rational power(const Rational& x, int e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : 1 / x;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
}

// Plucker coordinate of a set in <_a order
Rational ordered_plucker(const Matrix& v, const std::set<int>& s, int a) {
    return plucker(v, sort_cyclic(std::vector<int>(s.begin(), s.end()), a, v.cols()));
}

Matrix twist_with(const Matrix& v, const Bap& f, const Necklace& nk) {
    int m = f.m(), n = f.n();
    if (v.rows() != m || v.cols() != n) throw shape_error("twist: matrix must be m x n");
    if (!(bap_from_matrix(v) == f)) throw stratum_error("twist: matrix lies in a different positroid stratum");
    Matrix out(m, n);
    for (int i = 1; i <= n; ++i) {
        if (f.loop(i)) continue;  // zero column stays zero
        auto e = nk.entry(i);
        if (!e.count(i)) throw stratum_error("twist: " + std::to_string(i) + " missing from its necklace entry");
        // rows v_i, then the rest of the entry; x is the first column of the inverse
        std::vector<Vec> rows{v.col(i - 1)};
        for (int j : sort_cyclic(std::vector<int>(e.begin(), e.end()), i, n))
            if (j != i) rows.push_back(v.col(j - 1));
        Matrix a = Matrix::from_rows(rows);
        if (det(a) == 0) throw stratum_error("twist: necklace minor at " + std::to_string(i) + " vanishes");
        Matrix inv = inverse(a);
        for (int r = 0; r < m; ++r) out(r, i - 1) = inv(r, 0);
    }
    return out;
}

Seed make_seed(const PlabicGraph& g, const Matrix& v, int order, LabelKind kind) {
    Bap f = decorated_permutation(g);
    if (!(bap_from_matrix(v) == f)) throw stratum_error("seed: matrix lies in a different positroid stratum");
    Seed s;
    s.q = quiver(g);
    auto lab = face_labels(g, kind);
    for (int face : g.interior_faces()) {
        s.labels.push_back(lab[face]);
        s.source.push_back(kind == LabelKind::source);
        s.values.push_back(ordered_plucker(v, lab[face], order));
    }
    for (int k = 0; k < s.q.size(); ++k)
        if (s.q.frozen[k] && s.values[k] == 0) throw stratum_error("seed: frozen value vanishes");
    return s;
}

// pairwise coprime integers > 1 covering every input
void add_to_base(std::vector<mpz_class>& base, const mpz_class& x0) {
    std::vector<mpz_class> work{abs(x0)};
    while (!work.empty()) {
        mpz_class x = work.back();
        work.pop_back();
        if (x <= 1) continue;
        bool placed = false;
        for (size_t i = 0; i < base.size(); ++i) {
            mpz_class g = gcd(x, base[i]);
            if (g == 1) continue;
            placed = true;
            if (g == x && g == base[i]) break;
            mpz_class b = base[i];
            base.erase(base.begin() + static_cast<long>(i));
            work.push_back(g);
            work.push_back(b / g);
            work.push_back(x / g);
            break;
        }
        if (!placed) base.push_back(x);
    }
}

int valuation(mpz_class z, const mpz_class& b) {
    int v = 0;
    z = abs(z);
    while (z != 0 && z % b == 0) {
        z /= b;
        ++v;
    }
    return v;
}

int valuation(const Rational& q, const mpz_class& b) { return valuation(q.get_num(), b) - valuation(q.get_den(), b); }

}  // namespace

Quiver mutate(const Quiver& q, int k) {
    if (k < 0 || k >= q.size()) throw mutation_error("no vertex " + std::to_string(k));
    if (q.frozen[k]) throw mutation_error("vertex " + std::to_string(k) + " is frozen");
    Quiver out = q;
    int n = q.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.eps[i][j] = -q.eps[i][j];
            else if (!(q.frozen[i] && q.frozen[j]))
                out.eps[i][j] = q.eps[i][j] + sgn(q.eps[i][k]) * std::max(0, q.eps[i][k] * q.eps[k][j]);
        }
    return out;
}

bool is_skew(const Quiver& q) {
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.eps[i][j] != -q.eps[j][i]) return false;
    return true;
}

std::vector<int> mutable_vertices(const Quiver& q) {
    std::vector<int> out;
    for (int k = 0; k < q.size(); ++k)
        if (!q.frozen[k]) out.push_back(k);
    return out;
}

Seed mutate_seed(const Seed& s, int k) {
    Quiver q = mutate(s.q, k);
    Rational in = 1, out = 1;
    for (int i = 0; i < s.q.size(); ++i) {
        int e = s.q.eps[i][k];
        if (e > 0) in *= power(s.values[i], e);
        if (e < 0) out *= power(s.values[i], -e);
    }
    if (s.values[k] == 0) throw mutation_error("mutating a vanishing cluster variable");
    Seed r = s;
    r.q = q;
    r.values[k] = (in + out) / s.values[k];
    r.labels[k].clear();
    return r;
}

FramedQuiver framed(const Quiver& q) {
    FramedQuiver fq;
    fq.q = q;
    fq.mut = mutable_vertices(q);
    int r = static_cast<int>(fq.mut.size());
    fq.c.assign(r, std::vector<int>(r, 0));
    for (int a = 0; a < r; ++a) fq.c[a][a] = 1;
    return fq;
}

FramedQuiver mutate_framed(const FramedQuiver& fq, int k) {
    auto it = std::find(fq.mut.begin(), fq.mut.end(), k);
    if (it == fq.mut.end()) throw mutation_error("vertex " + std::to_string(k) + " is frozen");
    int a = static_cast<int>(it - fq.mut.begin()), r = static_cast<int>(fq.mut.size());
    FramedQuiver out = fq;
    out.q = mutate(fq.q, k);
    // framing rows follow the extended matrix mutation rule with B = -eps; with B = eps the
    // search would find the DT of the opposite quiver, which is realized by the left twist
    for (int b = 0; b < r; ++b)
        for (int row = 0; row < r; ++row) {
            int ck = fq.c[a][row];
            if (b == a)
                out.c[b][row] = -ck;
            else
                out.c[b][row] = fq.c[b][row] + sgn(ck) * std::max(0, -ck * fq.q.eps[k][fq.mut[b]]);
        }
    return out;
}

bool sign_coherent(const FramedQuiver& fq) {
    for (const auto& c : fq.c) {
        bool pos = false, neg = false;
        for (int x : c) {
            pos |= x > 0;
            neg |= x < 0;
        }
        if (pos && neg) return false;
    }
    return true;
}

bool is_reddening(const FramedQuiver& fq, const std::vector<int>& seq) {
    FramedQuiver cur = fq;
    for (int k : seq) {
        cur = mutate_framed(cur, k);
        if (!sign_coherent(cur)) throw mutation_error("c-vectors lost sign coherence");
    }
    if (cur.c.empty()) return true;
    for (const auto& c : cur.c)
        for (int x : c)
            if (x > 0) return false;
    return true;
}

std::optional<DtSequence> find_dt_sequence(const Quiver& q, int depth, long state_cap) {
    FramedQuiver start = framed(q);
    int r = static_cast<int>(start.mut.size());
    auto key = [&](const FramedQuiver& fq) {
        std::vector<int> k;
        for (const auto& c : fq.c) k.insert(k.end(), c.begin(), c.end());
        for (int i : fq.mut)
            for (int j : fq.mut) k.push_back(fq.q.eps[i][j]);
        return k;
    };
    auto done = [&](const FramedQuiver& fq, std::vector<int>& sigma) {
        sigma.assign(q.size(), -1);
        for (int v = 0; v < q.size(); ++v)
            if (q.frozen[v]) sigma[v] = v;
        for (int a = 0; a < r; ++a) {
            int hit = -1;
            for (int row = 0; row < r; ++row) {
                int x = fq.c[a][row];
                if (x == 0) continue;
                if (x != -1 || hit >= 0) return false;
                hit = row;
            }
            if (hit < 0) return false;
            sigma[fq.mut[a]] = fq.mut[hit];
        }
        return true;
    };
    struct Node {
        FramedQuiver fq;
        std::vector<int> seq;
    };
    std::map<std::vector<int>, bool> seen;
    std::deque<Node> queue{{start, {}}};
    seen[key(start)] = true;
    std::vector<int> sigma;
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (done(cur.fq, sigma)) return DtSequence{cur.seq, sigma};
        if (static_cast<int>(cur.seq.size()) >= depth) continue;
        for (int k : start.mut) {
            if (!cur.seq.empty() && cur.seq.back() == k) continue;
            FramedQuiver nx = mutate_framed(cur.fq, k);
            if (!sign_coherent(nx)) throw mutation_error("c-vectors lost sign coherence");
            auto kk = key(nx);
            if (seen.count(kk)) continue;
            if (static_cast<long>(seen.size()) >= state_cap) return std::nullopt;
            seen[kk] = true;
            std::vector<int> s = cur.seq;
            s.push_back(k);
            queue.push_back({std::move(nx), std::move(s)});
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> quasi_m(const QuasiClusterData& d) {
    int n = static_cast<int>(d.n.size());
    Matrix nt(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nt(i, j) = d.n[j][i];
    Rational dt = det(nt);
    if (dt != 1 && dt != -1) throw twist_error("N is not unimodular");
    Matrix inv = inverse(nt);
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = static_cast<int>(inv(i, j).get_num().get_si());
    return m;
}

bool certify_quasi_cluster(const Quiver& q, const QuasiClusterData& d, bool dt, std::string* why) {
    int n = q.size();
    if (static_cast<int>(d.n.size()) != n) return fail(why, "N has the wrong size"), false;
    for (const auto& row : d.n)
        if (static_cast<int>(row.size()) != n) return fail(why, "N is not square"), false;
    Quiver qp = q;
    for (int k : d.mu) qp = mutate(qp, k);
    Matrix nm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) nm(i, j) = d.n[i][j];
    Rational dn = det(nm);
    if (dn != 1 && dn != -1) return fail(why, "det N = " + to_string(dn)), false;
    for (int i = 0; i < n; ++i) {
        if (q.frozen[i]) continue;
        int ones = 0;
        for (int j = 0; j < n; ++j) {
            int x = d.n[i][j];
            if (q.frozen[j] && x != 0) return fail(why, "N is not zero on mutable x frozen"), false;
            if (!q.frozen[j]) {
                if (x != 0 && x != 1) return fail(why, "N is not a permutation on mutable x mutable"), false;
                ones += x;
            }
        }
        if (ones != 1) return fail(why, "N is not a permutation on mutable x mutable"), false;
    }
    for (int j = 0; j < n; ++j) {
        if (q.frozen[j]) continue;
        int ones = 0;
        for (int i = 0; i < n; ++i)
            if (!q.frozen[i]) ones += d.n[i][j];
        if (ones != 1) return fail(why, "N is not a permutation on mutable x mutable"), false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (q.frozen[i] && q.frozen[j]) continue;
            long s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += static_cast<long>(d.n[i][k]) * d.n[j][l] * qp.eps[k][l];
            if (s != q.eps[i][j])
                return fail(why, "exchange matrices do not match at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
                       false;
        }
    if (dt) {
        auto m = quasi_m(d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (q.frozen[i] && q.frozen[j] && m[i][j] != (i == j ? -1 : 0))
                    return fail(why, "M is not -Id on the frozen block"), false;
    }
    return true;
}

Matrix twist_right(const Matrix& v, const Bap& f) { return twist_with(v, f, target_necklace(f)); }
Matrix twist_left(const Matrix& v, const Bap& f) { return twist_with(v, f, source_necklace(f)); }

Seed target_seed(const PlabicGraph& g, const Matrix& v, int order) { return make_seed(g, v, order, LabelKind::target); }
Seed source_seed(const PlabicGraph& g, const Matrix& v, int order) { return make_seed(g, v, order, LabelKind::source); }

Monomial solve_monomial(const std::vector<std::vector<Rational>>& bases, const std::vector<Rational>& targets) {
    Monomial out;
    int pts = static_cast<int>(targets.size());
    if (pts == 0) return out;
    int u = static_cast<int>(bases[0].size());
    for (int p = 0; p < pts; ++p) {
        if (targets[p] == 0) return out;
        for (const auto& x : bases[p])
            if (x == 0) return out;
    }
    // grow the solving set until the exponents are pinned down
    int used = 0;
    std::vector<Vec> rows;
    std::vector<Vec> sol;
    for (used = std::min(2, pts); used <= pts; ++used) {
        std::vector<mpz_class> base;
        for (int p = 0; p < used; ++p) {
            add_to_base(base, targets[p].get_num());
            add_to_base(base, targets[p].get_den());
            for (const auto& x : bases[p]) {
                add_to_base(base, x.get_num());
                add_to_base(base, x.get_den());
            }
        }
        rows.clear();
        for (int p = 0; p < used; ++p)
            for (const auto& b : base) {
                Vec row;
                for (const auto& x : bases[p]) row.push_back(valuation(x, b));
                row.push_back(valuation(targets[p], b));
                rows.push_back(row);
            }
        if (rows.empty()) {
            // no primes at all: every value is +-1
            if (u == 0) break;
            continue;
        }
        std::vector<int> piv;
        Matrix r = rref(Matrix::from_rows(rows), &piv);
        if (std::count(piv.begin(), piv.end(), u)) return out;  // inconsistent
        if (static_cast<int>(piv.size()) < u) continue;
        Vec e(u);
        for (int k = 0; k < u; ++k) e[k] = r(k, u);
        out.exponents = e;
        break;
    }
    if (static_cast<int>(out.exponents.size()) != u) return out;
    out.solved_from = std::min(used, pts);
    for (const auto& e : out.exponents)
        if (e.get_den() != 1) return out;
    auto eval = [&](int p) {
        Rational r = 1;
        for (int k = 0; k < u; ++k) r *= power(bases[p][k], static_cast<int>(out.exponents[k].get_num().get_si()));
        return r;
    };
    Rational s0 = targets[0] / eval(0);
    if (s0 != 1 && s0 != -1) return out;
    for (int p = 0; p < pts; ++p)
        if (targets[p] != s0 * eval(p)) return out;
    out.sign = s0 > 0 ? 1 : -1;
    out.found = true;
    return out;
}

namespace {

std::vector<Rational> frozen_values(const Seed& s) {
    std::vector<Rational> out;
    for (int k = 0; k < s.q.size(); ++k)
        if (s.q.frozen[k]) out.push_back(s.values[k]);
    return out;
}

}  // namespace

TwistReport verify_twist_is_dt(const PlabicGraph& g, const std::vector<Matrix>& points, int depth) {
    TwistReport rep;
    rep.points = static_cast<int>(points.size());
    Bap f = decorated_permutation(g);
    Necklace t = target_necklace(f);
    int n = f.n();
    Quiver q = quiver(g);
    int nv = q.size();

    std::vector<Matrix> tws;
    rep.frozen_inverted = !points.empty();
    for (const auto& v : points) {
        Matrix tw = twist_right(v, f);
        tws.push_back(tw);
        for (int i = 1; i <= n; ++i) {
            if (f.loop(i)) continue;
            if (ordered_plucker(tw, t.entry(i), i) * ordered_plucker(v, t.entry(i), i) != 1) rep.frozen_inverted = false;
        }
    }

    auto dt = find_dt_sequence(q, depth);
    if (!dt) {
        rep.inconclusive = true;
        return rep;
    }
    rep.sequence_found = true;
    rep.dt = *dt;

    // vertex v of the twisted target seed is compared with the mutated cluster at sigma^{-1}(v)
    std::vector<int> at(nv);
    for (int v = 0; v < nv; ++v) at[rep.dt.sigma[v]] = v;
    std::vector<std::vector<Rational>> fr;
    std::vector<std::vector<Rational>> ratio(nv);
    for (size_t p = 0; p < points.size(); ++p) {
        Seed s = target_seed(g, points[p]);
        fr.push_back(frozen_values(s));
        for (int k : rep.dt.seq) s = mutate_seed(s, k);
        Seed tw = target_seed(g, tws[p]);
        for (int v = 0; v < nv; ++v) {
            if (q.frozen[v])
                ratio[v].push_back(tw.values[v]);
            else
                ratio[v].push_back(tw.values[v] / s.values[at[v]]);
        }
    }
    rep.monomials_constant = true;
    std::vector<int> frozen_ids;
    for (int v = 0; v < nv; ++v)
        if (q.frozen[v]) frozen_ids.push_back(v);
    rep.data.mu = rep.dt.seq;
    rep.data.n.assign(nv, std::vector<int>(nv, 0));
    std::vector<std::vector<int>> mm(nv, std::vector<int>(nv, 0));
    for (int v = 0; v < nv; ++v) {
        Monomial mono = solve_monomial(fr, ratio[v]);
        rep.face_monomials.push_back(mono);
        if (!mono.found) {
            rep.monomials_constant = false;
            continue;
        }
        if (!q.frozen[v]) mm[v][at[v]] = 1;
        for (size_t k = 0; k < frozen_ids.size(); ++k)
            mm[v][frozen_ids[k]] += static_cast<int>(mono.exponents[k].get_num().get_si());
    }
    if (!rep.monomials_constant) return rep;
    // N = (M^T)^{-1}
    Matrix mt(nv, nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) mt(i, j) = mm[j][i];
    if (det(mt) == 0) return rep;
    Matrix inv = inverse(mt);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            if (inv(i, j).get_den() != 1) return rep;
            rep.data.n[i][j] = static_cast<int>(inv(i, j).get_num().get_si());
        }
    rep.quasi_cluster = certify_quasi_cluster(q, rep.data, true);
    return rep;
}

QuasiReport verify_source_target_quasi(const PlabicGraph& g, const std::vector<Matrix>& points) {
    QuasiReport rep;
    rep.points = static_cast<int>(points.size());
    Bap f = decorated_permutation(g);
    Quiver q = quiver(g);
    int nv = q.size();
    std::vector<std::vector<Rational>> fr;
    std::vector<std::vector<Rational>> ratio(nv);
    for (const auto& v : points) {
        Seed tgt = target_seed(g, v);
        fr.push_back(frozen_values(tgt));
        Seed src = source_seed(g, v);
        Seed back = target_seed(g, twist_left(twist_left(v, f), f));
        for (int k = 0; k < nv; ++k) ratio[k].push_back(src.values[k] / back.values[k]);
    }
    rep.monomials_constant = !points.empty();
    for (int k = 0; k < nv; ++k) {
        rep.face_monomials.push_back(solve_monomial(fr, ratio[k]));
        if (!rep.face_monomials.back().found) rep.monomials_constant = false;
    }
    return rep;
}

}  // namespace pw
