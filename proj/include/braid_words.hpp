#pragma once

#include <string>
#include <vector>

#include "exact_linear.hpp"
#include "positroid_core.hpp"

namespace pw {

struct BraidWord {
    int m = 1;
    std::vector<int> letters;
    bool operator==(const BraidWord& o) const { return m == o.m && letters == o.letters; }
};

void check_word(const BraidWord& w);
Perm word_permutation(const BraidWord& w);  // s_{i1} s_{i2} ... as a product
Perm demazure_product(const BraidWord& w);
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> w0_word(int m);  // tau_2 tau_3 ... tau_m

// letters of the piece between slice a and slice a+1 of a necklace pattern;
// level 1 is the highest height, the moving strand starts at the level of x
std::vector<int> pattern_piece(const Necklace& nk, int a);
std::vector<std::vector<int>> pattern_pieces(const Necklace& nk);
BraidWord pattern_word(const Necklace& nk);

// beta_i for i = 1..n (index i-1 in the result)
std::vector<std::vector<int>> beta_pieces(const Bap& f);
BraidWord beta_from_positroid(const Bap& f);
std::vector<std::vector<int>> delta_pieces(const Bap& f);
BraidWord delta_from_positroid(const Bap& f);

struct GridPattern {
    Necklace nk;
    int n() const { return nk.n(); }
    // chord at x = a + 0.5
    Stack chord(int a) const { return nk.stack(a); }
    std::set<int> slice(int i) const { return nk.heights(i); }
};

GridPattern grid_pattern(const Bap& f);
GridPattern grid_toggle(const GridPattern& gp, int i, bool left);
std::string render_grid_svg(const GridPattern& gp);

BraidWord downshift(const BraidWord& w);

enum class MoveKind { rotate, commute, braid };
struct WordMove {
    MoveKind kind;
    int pos;  // first affected letter (unused for rotate)
};
std::vector<int> apply_move(const std::vector<int>& w, const WordMove& mv);

struct W0Normal {
    int shift = 0;                // total number of single-letter rotations performed
    std::vector<WordMove> moves;  // from the input word to `word`
    BraidWord word;               // ends with w0_word(m)
    int eta_length() const { return static_cast<int>(word.letters.size()) - static_cast<int>(w0_word(word.m).size()); }
};
W0Normal normalize_w0(const BraidWord& w, long state_cap = 2000000);
// moves turning `from` into `to` inside a linear word (no rotations); empty optional on failure
bool find_braid_moves(const std::vector<int>& from, const std::vector<int>& to, std::vector<WordMove>& out,
                      long state_cap = 500000);

struct BasePoint {
    int index;   // i
    bool plus;   // i^+ or i^-
    int height;  // level in the wiring diagram, 1..m
};

struct BraidEvent {
    bool crossing;
    int letter;     // when crossing
    BasePoint bp;   // otherwise
};

struct DecoratedBraid {
    BraidWord word;
    std::vector<BraidEvent> events;
    std::vector<int> sign;     // sign[i-1] = (-1)^{l(beta_i)}
    std::vector<int> piece_start;  // event index where beta_i's block (base points first) begins
};

DecoratedBraid place_basepoints(const Bap& f);

}  // namespace pw
