#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"
#include "positroid_core.hpp"

namespace pw {

enum class Color { boundary, solid, empty };

// Skew-symmetric exchange matrix on faces; frozen marks boundary faces.
struct Quiver {
    int size() const { return static_cast<int>(eps.size()); }
    std::vector<std::vector<int>> eps;
    std::vector<bool> frozen;
    std::vector<std::string> names;
    int mutable_count() const;
};

// Rotation system on a disk. Vertices 0..n-1 are the boundary vertices 1..n
// (clockwise); internal vertices follow. Edges between consecutive boundary
// vertices ("arcs") are stored explicitly so faces come out as plain orbits.
class PlabicGraph {
public:
    PlabicGraph() = default;
    // nbrs[v] lists the neighbours of v in clockwise order (internal edges only;
    // boundary vertices get their arcs added automatically)
    PlabicGraph(int n, std::vector<Color> internal_colors, std::vector<std::vector<int>> nbrs);

    int n() const { return n_; }
    int vertex_count() const { return static_cast<int>(color_.size()); }
    int edge_count() const { return static_cast<int>(ends_.size()) / 2; }
    Color color(int v) const { return color_[v]; }
    bool is_boundary(int v) const { return v < n_; }
    bool is_arc(int e) const { return arc_[e]; }

    // half-edges: h = 2e or 2e+1, twin is h^1
    int origin(int h) const { return ends_[h]; }
    int target(int h) const { return ends_[h ^ 1]; }
    int edge_of(int h) const { return h / 2; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    int cw_next(int h) const;   // next half-edge clockwise around origin(h)
    int ccw_next(int h) const;
    // internal-edge neighbours of v, clockwise
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool is_lollipop(int v) const;               // internal vertex of degree one at a boundary vertex
    int boundary_edge_half(int i) const;         // half-edge from boundary vertex i (1-based) inward
    int edge_between(int u, int v) const;        // -1 when not adjacent

    // faces: orbits of h -> cw_next(twin h); face_of(h) is the face on the left of h
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(int h) const { return face_[h]; }
    const std::vector<int>& face_cycle(int f) const { return faces_[f]; }
    int outer_face() const { return outer_; }
    bool is_boundary_face(int f) const;
    // face touching the boundary between i and i+1 (1-based, cyclic)
    int boundary_face(int i) const;
    std::vector<int> face_vertices(int f) const;
    std::vector<int> interior_faces() const;  // every face except the outer one

    // rotation-system data for serialisation and moves
    std::vector<Color> internal_colors() const;
    std::vector<std::vector<int>> all_nbrs() const;  // clockwise internal-edge neighbours per vertex

    // optional drawing positions per vertex (empty when unknown); only used for SVG output
    std::vector<std::pair<double, double>> coords;

private:
    void build();
    int n_ = 0;
    std::vector<Color> color_;
    std::vector<int> ends_;               // ends_[h] = origin of half-edge h
    std::vector<bool> arc_;               // per edge
    std::vector<std::vector<int>> rot_;   // clockwise outgoing half-edges
    std::vector<int> pos_;                // index of h inside rot_[origin(h)]
    std::vector<int> face_;
    std::vector<int> arc_edge_;           // arc_edge_[i]: edge from boundary vertex i to i+1 (0-based)
    std::vector<std::vector<int>> faces_;
    int outer_ = -1;
};

// Build from a planar straight-line drawing. Boundary vertex i sits at pos[i-1]
// and must lie on the outer boundary in clockwise order.
PlabicGraph plabic_from_drawing(int n, const std::vector<std::pair<double, double>>& pos,
                                const std::vector<Color>& internal_colors,
                                const std::vector<std::pair<int, int>>& edges);

struct ZigZag {
    int start;               // boundary index 1..n
    std::vector<int> halves; // traversed half-edges
    int end;                 // boundary index 1..n
};

ZigZag zig_zag(const PlabicGraph& g, int i);
std::vector<ZigZag> zig_zags(const PlabicGraph& g);
Bap decorated_permutation(const PlabicGraph& g);

enum class LabelKind { target, source };
// label per face id (outer face gets an empty set)
std::vector<std::set<int>> face_labels(const PlabicGraph& g, LabelKind kind);
// faces to the left of zeta_i
std::set<int> faces_left_of(const PlabicGraph& g, const ZigZag& z);

// quiver on the interior faces (in interior_faces() order)
Quiver quiver(const PlabicGraph& g);

// moves
PlabicGraph contract_edge(const PlabicGraph& g, int e);
// move `len` consecutive clockwise neighbours of v, starting at rotation index `start`,
// onto a new vertex of the same colour joined to v
PlabicGraph split_vertex(const PlabicGraph& g, int v, int start, int len);
PlabicGraph insert_bivalent(const PlabicGraph& g, int e, Color c);
PlabicGraph delete_bivalent(const PlabicGraph& g, int v);
PlabicGraph square_move(const PlabicGraph& g, int face);
bool is_square_face(const PlabicGraph& g, int face);
PlabicGraph make_trivalent(const PlabicGraph& g);
bool is_trivalent(const PlabicGraph& g);  // internal vertices are lollipops or of degree three

struct PerfectOrientation {
    std::vector<int> dir;  // per edge: half-edge in the oriented direction (-1 for arcs)
    std::set<int> sources; // boundary indices 1..n
};

PerfectOrientation perfect_orientation(const PlabicGraph& g, int i);
bool is_acyclic(const PlabicGraph& g, const PerfectOrientation& o);
bool is_perfect(const PlabicGraph& g, const PerfectOrientation& o);
// every face boundary has at most one source and at most one sink vertex
bool unique_sink_property(const PlabicGraph& g, const PerfectOrientation& o);

Matrix boundary_measurement(const PlabicGraph& g, const PerfectOrientation& o, int i,
                            const std::vector<Rational>& edge_weights);
std::vector<Rational> random_weights(const PlabicGraph& g, Rng& rng);

// small reference graphs
PlabicGraph gr24_square();
PlabicGraph gr36_hexagonal();  // hexagonal face labelled 135
PlabicGraph lollipop_graph(const std::vector<bool>& solid);  // only lollipops

std::string render_plabic_svg(const PlabicGraph& g);

}  // namespace pw
