#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exact_linear.hpp"
#include "plabic_graph.hpp"
#include "positroid_core.hpp"

namespace pw {

// eps[i][j] > 0 is read as eps[i][j] arrows i -> j. Frozen-frozen entries are left alone.
Quiver mutate(const Quiver& q, int k);
bool is_skew(const Quiver& q);
std::vector<int> mutable_vertices(const Quiver& q);

struct Seed {
    Quiver q;
    std::vector<std::set<int>> labels;  // empty once a vertex has been mutated away from a Plucker label
    std::vector<bool> source;           // label taken from the source labelling
    std::vector<Rational> values;
};
Seed mutate_seed(const Seed& s, int k);

// c-vectors as columns, one per mutable vertex, in mutable_vertices order. The framing
// reads the exchange matrix as B = -eps.
struct FramedQuiver {
    Quiver q;
    std::vector<int> mut;
    std::vector<std::vector<int>> c;  // c[a] = c-vector of vertex mut[a]
};
FramedQuiver framed(const Quiver& q);
FramedQuiver mutate_framed(const FramedQuiver& fq, int k);
bool sign_coherent(const FramedQuiver& fq);
bool is_reddening(const FramedQuiver& fq, const std::vector<int>& seq);

struct DtSequence {
    std::vector<int> seq;    // vertex ids
    std::vector<int> sigma;  // per vertex id: final c-vector of v is -e_{sigma[v]}; frozen fixed
};
// BFS over mutation words up to `depth`, memoized on the framed exchange matrix.
// The shortest reddening sequence whose c-matrix is minus a permutation.
std::optional<DtSequence> find_dt_sequence(const Quiver& q, int depth = 12, long state_cap = 2000000);

struct QuasiClusterData {
    std::vector<int> mu;
    std::vector<std::vector<int>> n;  // square, indexed by vertex ids
};
// M = (N^T)^{-1}; throws twist_error when N is not unimodular
std::vector<std::vector<int>> quasi_m(const QuasiClusterData& d);
// conditions: det N = +-1, N on mutable x mutable a permutation, N on mutable x frozen zero,
// eps_ij = sum n_ik n_jl eps'_kl whenever i or j is mutable (eps' = mu(Q)).
// With dt, also M on frozen x frozen = -Id.
bool certify_quasi_cluster(const Quiver& q, const QuasiClusterData& d, bool dt = false, std::string* why = nullptr);

// column i is the x with <x, v_i> = 1 and <x, v_j> = 0 for the other j of the target entry I_i,
// i.e. (-1)^{m-1} D_i^{-1} times the cofactor dual of v_{j_2} .. v_{j_m} in <_i order
Matrix twist_right(const Matrix& v, const Bap& f);
// the same with the source necklace entries
Matrix twist_left(const Matrix& v, const Bap& f);

// values are Plucker coordinates of the face labels, columns in <_order order
Seed target_seed(const PlabicGraph& g, const Matrix& v, int order = 1);
Seed source_seed(const PlabicGraph& g, const Matrix& v, int order = 1);

// exponents e with r = sign * prod x_i^{e_i}, solved over a coprime base of the values
struct Monomial {
    bool found = false;
    int sign = 1;
    std::vector<Rational> exponents;
    int solved_from = 0;  // points used for the solve; the others only verify
};
// solve from the first two points (more if they do not pin the exponents down), then check on the rest
Monomial solve_monomial(const std::vector<std::vector<Rational>>& bases, const std::vector<Rational>& targets);

struct TwistReport {
    bool frozen_inverted = false;
    bool sequence_found = false;
    bool inconclusive = false;      // search exhausted
    DtSequence dt;
    std::vector<Monomial> face_monomials;  // per vertex; frozen: trivial
    bool monomials_constant = false;
    bool quasi_cluster = false;
    QuasiClusterData data;
    int points = 0;
    bool passed() const { return frozen_inverted && sequence_found && monomials_constant && quasi_cluster; }
};
TwistReport verify_twist_is_dt(const PlabicGraph& g, const std::vector<Matrix>& points, int depth = 12);

struct QuasiReport {
    std::vector<Monomial> face_monomials;
    bool monomials_constant = false;
    int points = 0;
    bool passed() const { return monomials_constant; }
};
QuasiReport verify_source_target_quasi(const PlabicGraph& g, const std::vector<Matrix>& points);

}  // namespace pw
