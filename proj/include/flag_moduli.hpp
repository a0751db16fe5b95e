#pragma once

#include <string>
#include <vector>

#include "braid_words.hpp"
#include "exact_linear.hpp"
#include "positroid_core.hpp"

namespace pw {

// flags[j] is the strip before letter j; the last flag repeats the first
struct FlagChain {
    BraidWord word;
    std::vector<Flag> flags;
    int length() const { return static_cast<int>(word.letters.size()); }
};

bool validate_flag_chain(const FlagChain& c, std::string* why = nullptr);
bool same_flags(const FlagChain& a, const FlagChain& b);

// A decorated flag is stored as a basis u_1..u_m: level k spans u_1..u_k and its
// decoration is u_k mod level k-1. Two bases are the same decorated flag iff
// they differ by a unipotent upper triangular matrix.
bool same_decorated(const Matrix& u, const Matrix& v);
// decorated flag of the starred flag: columns are the dual basis in reverse order
Matrix dual_decorated(const Matrix& u);

// Chain over the positroid braid with its base points. strips[k] sits before
// events[k]; the last strip is the first one again.
struct DecoratedChain {
    Bap f;
    BraidWord word;
    std::vector<BraidEvent> events;
    std::vector<int> sign;         // sign[i-1] = (-1)^{l(beta_i)}
    std::vector<int> piece_start;  // first event of piece i (base points first)
    std::vector<Matrix> strips;
    int m() const { return word.m; }
    int n() const { return f.n(); }
};

// D_i = det of the columns of the target necklace entry I_i in <_i order
std::vector<Rational> necklace_dets(const Matrix& v, const Bap& f);
// zero columns go away together with the loops of f
void strip_loops(const Matrix& v, const Bap& f, Matrix& v_out, Bap& f_out);

DecoratedChain phi(const Matrix& v, const Bap& f);
FlagChain underlying(const DecoratedChain& c);
bool validate_chain(const DecoratedChain& c, std::string* why = nullptr);
// A_{i^+} and A_{i^-}; throws when i has no base points
Rational a_plus(const DecoratedChain& c, int i);
Rational a_minus(const DecoratedChain& c, int i);
// class on the left over class on the right at a base point event
Rational left_over_right(const DecoratedChain& c, int event);

// Flags spanned by the strand labels of a (possibly toggled) necklace pattern.
// Slice a is ordered by height, highest height at level 1.
FlagChain toggle_chain(const Matrix& v, const Necklace& nk);
// flags at the slices of a necklace pattern inside a chain over pattern_word(nk)
std::vector<Flag> slice_flags(const FlagChain& c, const Necklace& nk);
// [x j_1 .. j_s] = [j_1 .. j_s f(x)] along every chord (x, f(x)) crossing heights j_1..j_s
bool span_identity(const Matrix& v, const Necklace& nk, std::string* why = nullptr);

// braid moves carried out on flags: the flags at the two ends of the affected
// letters stay, the ones in between are the unique fill for the new letters
FlagChain apply_word_move(const FlagChain& c, const WordMove& mv);
FlagChain undo_word_move(const FlagChain& c, const WordMove& mv);
FlagChain transport_toggles(const FlagChain& c, const Necklace& start, const std::vector<Toggle>& seq);
// the unique chain F = G_0 -> ... -> G_r = G for a reduced word from F to G
std::vector<Flag> fill_reduced(const Flag& f, const Flag& g, const std::vector<int>& word);

// needs a chain built on the positroid braid; toggles to the source pattern and
// reads x_j off the level one line of the slice whose top strand is j
Matrix psi(const DecoratedChain& c);

// letters s_i w0 at pos, pos+1.. become w0 s_{m-i}
FlagChain rotate_chain(const FlagChain& c, int pos);
// starred flags in reversed order, letters i -> m-i
FlagChain reflect_chain(const FlagChain& c);
FlagChain reverse_chain(const FlagChain& c);
// reflected decorated chain: events reversed, base point heights mirrored
DecoratedChain reflect_decorated(const DecoratedChain& c);
// rotations along eta, reflection, reversal of the reflected reading; word must end in w0_word(m)
FlagChain dt_flags(const FlagChain& c);
// the same on a chain over the positroid braid, brought to eta.w0 by normalize_w0 and back
FlagChain dt_flags_positroid(const FlagChain& c);
DecoratedChain dt_chain(const DecoratedChain& c);

}  // namespace pw
