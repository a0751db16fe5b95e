#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pw {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using Perm = std::vector<int>;  // one-line notation, values 1..m

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int m);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols, int m);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    // zero-based column
    Vec col(int j) const;
    void set_col(int j, const Vec& v);
    Matrix columns(const std::vector<int>& idx) const;  // zero-based
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero_col(int j) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

Rational det(Matrix a);
int rank(Matrix a);
Matrix inverse(const Matrix& a);
Matrix rref(Matrix a, std::vector<int>* pivots = nullptr);
// basis of {x : A x = 0} as columns
Matrix null_space(const Matrix& a);
// coordinates x with B x = v, B of full column rank; throws if v not in span
Vec solve_in_span(const Matrix& b, const Vec& v);
bool in_span(const Matrix& b, const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Rational& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

// cyclic order <_i on [n]: i < i+1 < ... < n < 1 < ... < i-1
int cyc_key(int a, int i, int n);
bool cyc_less(int a, int b, int i, int n);
std::vector<int> sort_cyclic(std::vector<int> s, int i, int n);

// Plücker coordinate for a 1-based index sequence in caller order
Rational plucker(const Matrix& m, const std::vector<int>& j);
// covector w -> det(u_1, ..., u_{m-1}, w)
Vec cofactor_dual(const std::vector<Vec>& u, int m);

class Subspace {
public:
    Subspace() = default;
    // span of the given columns (need not be independent)
    static Subspace span(const Matrix& cols, int m);
    static Subspace span(const std::vector<Vec>& vs, int m);
    static Subspace zero(int m);
    static Subspace whole(int m);

    int ambient() const { return m_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace annihilator() const;
    bool operator==(const Subspace& o) const { return m_ == o.m_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    int m_ = 0;
    Matrix basis_;  // reduced column echelon form
};

class Flag {
public:
    Flag() = default;
    explicit Flag(std::vector<Subspace> levels);
    // level k = span of the first k columns; columns must be a basis
    static Flag from_basis(const Matrix& u);
    static Flag standard(int m);

    int m() const { return static_cast<int>(lv_.size()) - 1; }
    const Subspace& level(int k) const { return lv_.at(static_cast<size_t>(k)); }
    const std::vector<Subspace>& levels() const { return lv_; }
    // some basis u_1..u_m adapted to the flag
    Matrix adapted_basis() const;
    Flag with_level(int k, const Subspace& s) const;
    bool operator==(const Flag& o) const { return lv_ == o.lv_; }
    bool operator!=(const Flag& o) const { return !(*this == o); }

private:
    std::vector<Subspace> lv_;
};

// I is a set of 1-based columns, ordered internally by <_i; level k spans the last k
Flag flag_from_suffix_spans(const Matrix& m, const std::vector<int>& i_set, int i);
Perm relative_position(const Flag& f, const Flag& g);
Flag hodge_star(const Flag& f);

Perm perm_identity(int m);
Perm perm_w0(int m);
Perm perm_compose(const Perm& a, const Perm& b);  // (a b)(k) = a(b(k))
Perm perm_inverse(const Perm& a);
Perm perm_s(int i, int m);
int perm_length(const Perm& a);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int uniform(int lo, int hi);  // inclusive
    Rational rational(int bound = 97);
    Rational nonzero_rational(int bound = 97);
    Matrix matrix(int r, int c, int bound = 97);
    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

}  // namespace pw
