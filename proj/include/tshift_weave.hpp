#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "braid_words.hpp"
#include "plabic_graph.hpp"

namespace pw {

// G -> G_down. Boundary vertex b of the result sits just counterclockwise of
// boundary vertex kept[b-1] of the input.
struct TShiftResult {
    PlabicGraph g;
    std::vector<int> kept;             // 1-based input boundary index per output boundary vertex
    std::map<int, int> dual_of_solid;  // trivalent solid s of the input -> empty vertex v_s'
    std::map<int, std::vector<int>> face_tree;  // input face -> solid vertices of the output inside it
    std::vector<int> edge_face;        // per output edge: input face containing it (-1 for arcs)
};

// Solid vertices must be trivalent or lollipops. Two leaves of a face with no
// solid corner are joined through a bivalent solid vertex, since boundary
// vertices cannot be adjacent here.
TShiftResult tshift(const PlabicGraph& g);

struct Tower {
    std::vector<PlabicGraph> levels;   // levels[0] = G_m, ..., levels[m-1] = G_1
    std::vector<TShiftResult> steps;   // steps[j] takes levels[j] to levels[j+1]
    std::vector<std::vector<int>> names;  // original boundary label of each boundary vertex per level
    int m() const { return static_cast<int>(levels.size()); }
};

Tower tower(const PlabicGraph& g);

// Colored planar graph. Vertices are monochromatic trivalent or hexavalent with
// adjacent colors; crossings of colors two or more apart are left implicit
// (edges of such colors may cross without a vertex).
struct Weave {
    int m = 0;                       // strands; colors 1..m-1
    std::vector<int> color;          // per edge
    std::vector<int> level;          // per edge: tower level (= color)
    std::vector<int> ends;           // per half-edge 2e, 2e+1: vertex id, or -1-leg for a boundary leg
    std::vector<std::vector<int>> rot;  // per vertex: outgoing half-edges, clockwise
    std::vector<int> legs;           // edges touching the boundary, clockwise from the anchor
    std::vector<int> top_face;       // per edge: face of G_m containing it for color m-1, else -1
    int edge_count() const { return static_cast<int>(color.size()); }
    int vertex_count() const { return static_cast<int>(rot.size()); }
};

Weave assemble_weave(const Tower& t);
bool validate_weave(const Weave& w);
BraidWord boundary_word(const Weave& w);

struct YCycle {
    std::vector<int> value;  // per weave edge
    bool tree = false;
    bool mutable_ = false;
    bool short_i = false;
    bool isolated = false;   // exceptional boundary face: no weave lines at all
};

// Y-tree of the weave lines of the top color inside face f of G_m
YCycle y_tree_for_face(const Weave& w, int f);
bool validate_ycycle(const Weave& w, const std::vector<int>& gamma);
bool is_y_tree(const Weave& w, const std::vector<int>& gamma);
int intersection_pairing(const Weave& w, const std::vector<int>& a, const std::vector<int>& b);
// faces of g in interior_faces() order; isolated frozens re-added for exceptional faces
Quiver quiver_from_weave(const Weave& w, const PlabicGraph& g);

// solid/empty identification between G and G_down: edges leaving a shared vertex
// in O_i are opposite to edges entering it in the induced orientation
bool check_compatible_orientations(const PlabicGraph& g, const TShiftResult& down, int i);

std::string render_weave_svg(const Weave& w);

}  // namespace pw
