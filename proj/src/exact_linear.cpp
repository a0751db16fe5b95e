#include "exact_linear.hpp"

#include <algorithm>
#include <numeric>

namespace pw {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw parse_error("bad rational '" + s + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Matrix::Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix shape");
}

Matrix Matrix::identity(int m) {
    Matrix e(m, m);
    for (int i = 0; i < m; ++i) e(i, i) = 1;
    return e;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix a(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw shape_error("ragged matrix rows");
        for (int j = 0; j < c; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int m) {
    Matrix a(m, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != m) throw shape_error("column length mismatch");
        for (int i = 0; i < m; ++i) a(i, static_cast<int>(j)) = cols[j][i];
    }
    return a;
}

Vec Matrix::col(int j) const {
    if (j < 0 || j >= c_) throw shape_error("column index out of range");
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != r_) throw shape_error("column length mismatch");
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix b(r_, static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= c_) throw shape_error("column index out of range");
        for (int i = 0; i < r_; ++i) b(i, static_cast<int>(k)) = (*this)(i, idx[k]);
    }
    return b;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw shape_error("matrix product shape mismatch");
    Matrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
        }
    return p;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != c_) throw shape_error("matrix-vector shape mismatch");
    Vec w(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) w[i] += (*this)(i, j) * v[j];
    return w;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Matrix::is_zero_col(int j) const {
    for (int i = 0; i < r_; ++i)
        if ((*this)(i, j) != 0) return false;
    return true;
}

Matrix rref(Matrix a, std::vector<int>* pivots) {
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return a;
}

Rational det(Matrix a) {
    if (a.rows() != a.cols()) throw shape_error("determinant of non-square matrix");
    int n = a.rows();
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

int rank(Matrix a) {
    std::vector<int> piv;
    rref(std::move(a), &piv);
    return static_cast<int>(piv.size());
}

Matrix inverse(const Matrix& a) {
    int n = a.rows();
    if (n != a.cols()) throw shape_error("inverse of non-square matrix");
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv;
    aug = rref(aug, &piv);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw shape_error("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Matrix null_space(const Matrix& a) {
    std::vector<int> piv;
    Matrix r = rref(a, &piv);
    std::vector<char> is_piv(a.cols(), 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec x(a.cols());
        x[f] = 1;
        for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -r(static_cast<int>(k), f);
        basis.push_back(x);
    }
    return Matrix::from_columns(basis, a.cols());
}

Vec solve_in_span(const Matrix& b, const Vec& v) {
    Matrix aug(b.rows(), b.cols() + 1);
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
        aug(i, b.cols()) = v[i];
    }
    std::vector<int> piv;
    Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == b.cols()) throw shape_error("vector not in span");
    if (static_cast<int>(piv.size()) != b.cols()) throw shape_error("spanning set is dependent");
    Vec x(b.cols());
    for (int k = 0; k < b.cols(); ++k) x[k] = r(k, b.cols());
    return x;
}

bool in_span(const Matrix& b, const Vec& v) {
    Matrix aug(b.rows(), b.cols() + 1);
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
        aug(i, b.cols()) = v[i];
    }
    return rank(aug) == rank(b);
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw shape_error("dot length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec scale(const Vec& v, const Rational& c) {
    Vec w(v);
    for (auto& x : w) x *= c;
    return w;
}

Vec add(const Vec& a, const Vec& b) {
    Vec w(a);
    for (size_t i = 0; i < w.size(); ++i) w[i] += b[i];
    return w;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec w(a);
    for (size_t i = 0; i < w.size(); ++i) w[i] -= b[i];
    return w;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

int cyc_key(int a, int i, int n) { return ((a - i) % n + n) % n; }
bool cyc_less(int a, int b, int i, int n) { return cyc_key(a, i, n) < cyc_key(b, i, n); }

std::vector<int> sort_cyclic(std::vector<int> s, int i, int n) {
    std::sort(s.begin(), s.end(), [&](int a, int b) { return cyc_less(a, b, i, n); });
    return s;
}

Rational plucker(const Matrix& m, const std::vector<int>& j) {
    if (static_cast<int>(j.size()) != m.rows())
        throw shape_error("Plucker index sequence has length " + std::to_string(j.size()) +
                          ", expected " + std::to_string(m.rows()));
    std::vector<int> z;
    for (int x : j) {
        if (x < 1 || x > m.cols()) throw shape_error("Plucker index out of range");
        z.push_back(x - 1);
    }
    return det(m.columns(z));
}

Vec cofactor_dual(const std::vector<Vec>& u, int m) {
    if (static_cast<int>(u.size()) != m - 1) throw shape_error("cofactor_dual needs m-1 vectors");
    Vec w(m);
    for (int k = 0; k < m; ++k) {
        std::vector<Vec> cols(u);
        Vec e(m);
        e[k] = 1;
        cols.push_back(e);
        w[k] = det(Matrix::from_columns(cols, m));
    }
    return w;
}

Subspace Subspace::span(const Matrix& cols, int m) {
    if (cols.rows() != m && cols.cols() > 0) throw shape_error("span: ambient mismatch");
    Subspace s;
    s.m_ = m;
    if (cols.cols() == 0) {
        s.basis_ = Matrix(m, 0);
        return s;
    }
    std::vector<int> piv;
    Matrix r = rref(cols.transpose(), &piv);
    Matrix b(m, static_cast<int>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < m; ++i) b(i, static_cast<int>(k)) = r(static_cast<int>(k), i);
    s.basis_ = b;
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vs, int m) { return span(Matrix::from_columns(vs, m), m); }
Subspace Subspace::zero(int m) { return span(Matrix(m, 0), m); }
Subspace Subspace::whole(int m) { return span(Matrix::identity(m), m); }

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != m_) throw shape_error("contains: ambient mismatch");
    // basis is in reduced column echelon form: coordinates are read off the pivot rows
    Vec rest(v);
    for (int j = 0; j < basis_.cols(); ++j) {
        int p = 0;
        while (basis_(p, j) == 0) ++p;
        Rational c = rest[p];
        if (c == 0) continue;
        for (int i = 0; i < m_; ++i) rest[i] -= c * basis_(i, j);
    }
    return is_zero(rest);
}

bool Subspace::contains(const Subspace& o) const {
    for (int j = 0; j < o.dim(); ++j)
        if (!contains(o.basis_.col(j))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> vs;
    for (int j = 0; j < dim(); ++j) vs.push_back(basis_.col(j));
    for (int j = 0; j < o.dim(); ++j) vs.push_back(o.basis_.col(j));
    return span(vs, m_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    int a = dim(), b = o.dim();
    if (a == 0 || b == 0) return zero(m_);
    Matrix big(m_, a + b);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < a; ++j) big(i, j) = basis_(i, j);
        for (int j = 0; j < b; ++j) big(i, a + j) = -o.basis_(i, j);
    }
    Matrix ns = null_space(big);
    std::vector<Vec> vs;
    for (int k = 0; k < ns.cols(); ++k) {
        Vec x(m_);
        for (int j = 0; j < a; ++j) x = add(x, scale(basis_.col(j), ns(j, k)));
        vs.push_back(x);
    }
    return span(vs, m_);
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(m_);
    return span(null_space(basis_.transpose()), m_);
}

Flag::Flag(std::vector<Subspace> levels) : lv_(std::move(levels)) {
    int m = static_cast<int>(lv_.size()) - 1;
    if (m < 0) throw shape_error("empty flag");
    for (int k = 0; k <= m; ++k) {
        if (lv_[k].ambient() != m || lv_[k].dim() != k) throw degenerate_flag_error("flag level has wrong dimension");
        if (k > 0 && !lv_[k].contains(lv_[k - 1])) throw degenerate_flag_error("flag levels not nested");
    }
}

Flag Flag::from_basis(const Matrix& u) {
    int m = u.rows();
    if (u.cols() != m) throw shape_error("flag basis must be square");
    std::vector<Subspace> lv;
    for (int k = 0; k <= m; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        lv.push_back(Subspace::span(u.columns(idx), m));
    }
    return Flag(lv);
}

Flag Flag::standard(int m) { return from_basis(Matrix::identity(m)); }

Matrix Flag::adapted_basis() const {
    int mm = m();
    Matrix u(mm, mm);
    for (int k = 1; k <= mm; ++k) {
        const Matrix& b = lv_[k].basis();
        for (int j = 0; j < b.cols(); ++j) {
            Vec v = b.col(j);
            if (!lv_[k - 1].contains(v)) {
                u.set_col(k - 1, v);
                break;
            }
        }
    }
    return u;
}

Flag Flag::with_level(int k, const Subspace& s) const {
    std::vector<Subspace> lv(lv_);
    lv.at(static_cast<size_t>(k)) = s;
    return Flag(lv);
}

Flag flag_from_suffix_spans(const Matrix& m, const std::vector<int>& i_set, int i) {
    int mm = m.rows();
    if (static_cast<int>(i_set.size()) != mm) throw shape_error("flag_from_suffix_spans: |I| != m");
    std::vector<int> ord = sort_cyclic(i_set, i, m.cols());
    if (plucker(m, ord) == 0) throw degenerate_flag_error("vanishing Plucker coordinate for the necklace entry");
    Matrix u(mm, mm);
    // level 1 is the <_i-largest column
    for (int k = 0; k < mm; ++k) u.set_col(k, m.col(ord[mm - 1 - k] - 1));
    return Flag::from_basis(u);
}

Perm relative_position(const Flag& f, const Flag& g) {
    int m = f.m();
    if (g.m() != m) throw shape_error("relative_position: ambient mismatch");
    std::vector<std::vector<int>> r(m + 1, std::vector<int>(m + 1, 0));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) r[a][b] = f.level(a).intersect(g.level(b)).dim();
    Perm w(m, 0);
    for (int b = 1; b <= m; ++b)
        for (int a = 1; a <= m; ++a)
            if (r[a][b] - r[a - 1][b] - r[a][b - 1] + r[a - 1][b - 1] == 1) w[b - 1] = a;
    return w;
}

Flag hodge_star(const Flag& f) {
    int m = f.m();
    std::vector<Subspace> lv;
    for (int k = 0; k <= m; ++k) lv.push_back(f.level(m - k).annihilator());
    return Flag(lv);
}

Perm perm_identity(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm perm_w0(int m) {
    Perm p(m);
    for (int k = 0; k < m; ++k) p[k] = m - k;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t k = 0; k < b.size(); ++k) c[k] = a[b[k] - 1];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[a[k] - 1] = static_cast<int>(k) + 1;
    return c;
}

Perm perm_s(int i, int m) {
    Perm p = perm_identity(m);
    std::swap(p[i - 1], p[i]);
    return p;
}

int perm_length(const Perm& a) {
    int l = 0;
    for (size_t x = 0; x < a.size(); ++x)
        for (size_t y = x + 1; y < a.size(); ++y)
            if (a[x] > a[y]) ++l;
    return l;
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

Rational Rng::rational(int bound) {
    Rational q(uniform(-bound, bound), uniform(1, bound));
    q.canonicalize();
    return q;
}

Rational Rng::nonzero_rational(int bound) {
    Rational q;
    do q = rational(bound);
    while (q == 0);
    return q;
}

Matrix Rng::matrix(int r, int c, int bound) {
    Matrix a(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a(i, j) = rational(bound);
    return a;
}

}  // namespace pw
