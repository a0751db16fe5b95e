#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exact_linear.hpp"

namespace pw {

inline int mod1(int a, int n) { return ((a - 1) % n + n) % n + 1; }  // residue in [1,n]

class Bap {
public:
    Bap() = default;
    explicit Bap(std::vector<int> window);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<int>& window() const { return w_; }
    // affine extension on all of Z
    int f(int i) const;
    int finv(int j) const;
    int pi(int i) const { return mod1(f(i), n_); }
    bool loop(int i) const { return f(i) == i; }      // solid lollipop
    bool coloop(int i) const { return f(i) == i + n_; }  // empty lollipop
    bool operator==(const Bap& o) const { return w_ == o.w_; }
    // number of inversions (i in [1,n], j > i, f(i) > f(j))
    int length() const;

private:
    int n_ = 0, m_ = 0;
    std::vector<int> w_;
};

Bap bap_from_matrix(const Matrix& m);

using Stack = std::pair<int, int>;  // (x, f(x)) as affine integers

enum class NecklaceKind { target, source, general };

class Necklace {
public:
    Necklace() = default;
    Necklace(NecklaceKind kind, Bap f, std::vector<Stack> stacks, std::set<int> base_heights);

    NecklaceKind kind() const { return kind_; }
    const Bap& bap() const { return f_; }
    int n() const { return f_.n(); }
    int m() const { return f_.m(); }
    // stack between entries a and a+1 (any integer a, periodic up to shift)
    Stack stack(int a) const;
    const std::vector<Stack>& stacks() const { return st_; }
    // affine heights crossing slice a; H_{a+n} = H_a + n
    std::set<int> heights(int a) const;
    // entry I_a as residues (a taken mod n, 1-based)
    std::set<int> entry(int a) const;
    std::vector<std::set<int>> entries() const;
    // insertion permutation value iota(a) = f-value of stack a
    int iota(int a) const { return stack(a).second; }
    int iota_length() const;
    bool is_minimal() const;
    bool same_stacks_mod_shift(const Necklace& o) const;
    bool operator==(const Necklace& o) const { return st_ == o.st_ && h0_ == o.h0_; }

    friend Necklace toggle_necklace(const Necklace&, int, bool);

private:
    NecklaceKind kind_ = NecklaceKind::general;
    Bap f_;
    std::vector<Stack> st_;  // st_[a] for a = 0..n-1
    std::set<int> h0_;
};

Necklace target_necklace(const Bap& f);
Necklace source_necklace(const Bap& f);
bool gale_leq(const std::set<int>& i_set, const std::set<int>& j_set, int a, int n);
bool oh_membership(const Necklace& target, const std::set<int>& j_set);

struct Toggle {
    int a;
    bool left;
    bool operator==(const Toggle& o) const { return a == o.a && left == o.left; }
};

bool toggle_applicable(const Necklace& nk, int a, bool left);
Necklace toggle_necklace(const Necklace& nk, int a, bool left);
std::vector<Toggle> toggles_to_source(const Necklace& target);
Necklace apply_toggles(Necklace nk, const std::vector<Toggle>& seq);

// drop solid lollipops and relabel the remaining boundary indices 1..r in order;
// kept[i'-1] is the old label of new label i'
Bap delete_loops(const Bap& f, std::vector<int>* kept = nullptr);
// T-shift at the level of permutations: delete loops, then f_down(i) = f(i-1)
Bap tshift_bap(const Bap& f);

std::string set_string(const std::set<int>& s, int a, int n);  // digits in <_a order

}  // namespace pw
