#pragma once

#include <set>

// Independent reference computations used only by the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "exact_linear.hpp"

namespace oracle {

using pw::Matrix;
using pw::Rational;

// determinant by the Leibniz permutation expansion
inline Rational leibniz_det(const Matrix& a) {
    int n = a.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Rational term = (inv % 2) ? -1 : 1;
        for (int i = 0; i < n; ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Rational minor_det(const Matrix& a, const std::vector<int>& cols1) {
    Matrix s(a.rows(), static_cast<int>(cols1.size()));
    for (size_t k = 0; k < cols1.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) s(i, static_cast<int>(k)) = a(i, cols1[k] - 1);
    return leibniz_det(s);
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline int rank_by_minors(const Matrix& a) {
    // largest k with a nonzero k x k minor
    for (int k = std::min(a.rows(), a.cols()); k > 0; --k)
        for (auto& rs : subsets(a.rows(), k))
            for (auto& cs : subsets(a.cols(), k)) {
                Matrix s(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) s(i, j) = a(rs[i] - 1, cs[j] - 1);
                if (leibniz_det(s) != 0) return k;
            }
    return 0;
}


// all windows [f(1..n)] of bounded affine permutations with f(i)-i summing to k*n
inline std::vector<std::vector<int>> bap_windows(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i, int excess) -> void {
        if (i > n) {
            if (excess == k * n) out.push_back(cur);
            return;
        }
        for (int v = i; v <= i + n; ++v) {
            int r = ((v - 1) % n + n) % n;
            if (used[r]) continue;
            used[r] = true;
            cur.push_back(v);
            self(self, i + 1, excess + v - i);
            cur.pop_back();
            used[r] = false;
        }
    };
    rec(rec, 1, 0);
    return out;
}

// permutations in one-line notation, Bruhat order by the rank-matrix criterion
inline bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w) {
    int m = static_cast<int>(u.size());
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int cu = 0, cw = 0;
            for (int a = 1; a <= i; ++a) {
                if (u[a - 1] >= j) ++cu;
                if (w[a - 1] >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    return true;
}

// Bruhat-largest product over all subwords of a word in the simple transpositions
inline std::vector<int> subword_max(const std::vector<int>& letters, int m) {
    std::set<std::vector<int>> prods;
    size_t L = letters.size();
    for (unsigned long mask = 0; mask < (1ul << L); ++mask) {
        std::vector<int> p(m);
        for (int a = 0; a < m; ++a) p[a] = a + 1;
        for (size_t t = 0; t < L; ++t)
            if (mask >> t & 1) std::swap(p[letters[t] - 1], p[letters[t]]);
        prods.insert(p);
    }
    for (auto& c : prods) {
        bool top = true;
        for (auto& d : prods)
            if (!bruhat_leq(d, c)) {
                top = false;
                break;
            }
        if (top) return c;
    }
    return {};
}

}  // namespace oracle
