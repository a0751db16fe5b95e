#include "plabic_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

namespace pw {

int Quiver::mutable_count() const {
    int c = 0;
    for (bool f : frozen)
        if (!f) ++c;
    return c;
}

PlabicGraph::PlabicGraph(int n, std::vector<Color> internal_colors, std::vector<std::vector<int>> nbrs) : n_(n) {
    if (n < 2) throw graph_error("plabic graphs need at least two boundary vertices");
    color_.assign(n, Color::boundary);
    for (Color c : internal_colors) {
        if (c == Color::boundary) throw graph_error("internal vertex coloured as boundary");
        color_.push_back(c);
    }
    int nv = static_cast<int>(color_.size());
    if (static_cast<int>(nbrs.size()) != nv) throw graph_error("neighbour table size does not match vertex count");
    rot_.assign(nv, {});
    // arcs first: arc i runs from boundary vertex i to i+1
    arc_edge_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        arc_edge_[i] = static_cast<int>(arc_.size());
        arc_.push_back(true);
        ends_.push_back(i);
        ends_.push_back((i + 1) % n);
    }
    // internal edges, paired in the order they appear
    std::map<std::pair<int, int>, int> half_at;  // (u, v) -> half-edge from u to v
    for (int u = 0; u < nv; ++u) {
        std::set<int> seen(nbrs[u].begin(), nbrs[u].end());
        if (seen.size() != nbrs[u].size()) throw graph_error("repeated edge at vertex " + std::to_string(u));
    }
    for (int u = 0; u < nv; ++u)
        for (int v : nbrs[u]) {
            if (v < 0 || v >= nv || v == u) throw graph_error("bad neighbour " + std::to_string(v));
            if (u < v) {
                int e = static_cast<int>(arc_.size());
                arc_.push_back(false);
                ends_.push_back(u);
                ends_.push_back(v);
                half_at[{u, v}] = 2 * e;
                half_at[{v, u}] = 2 * e + 1;
            }
        }
    for (int u = 0; u < nv; ++u)
        for (int v : nbrs[u]) {
            auto it = half_at.find({u, v});
            if (it == half_at.end()) throw graph_error("asymmetric neighbour lists");
            bool found = false;
            for (int w : nbrs[v]) found = found || w == u;
            if (!found) throw graph_error("asymmetric neighbour lists");
        }
    for (int u = 0; u < nv; ++u) {
        if (u < n) {
            if (nbrs[u].size() != 1) throw graph_error("boundary vertex " + std::to_string(u + 1) + " must have exactly one edge");
            if (nbrs[u][0] < n) throw graph_error("edge between two boundary vertices");
            rot_[u].push_back(2 * arc_edge_[u]);
            rot_[u].push_back(half_at.at({u, nbrs[u][0]}));
            rot_[u].push_back(2 * arc_edge_[(u + n - 1) % n] + 1);
        } else {
            for (int v : nbrs[u]) rot_[u].push_back(half_at.at({u, v}));
        }
    }
    build();
}

void PlabicGraph::build() {
    int nh = static_cast<int>(ends_.size());
    pos_.assign(nh, -1);
    for (auto& r : rot_)
        for (size_t k = 0; k < r.size(); ++k) pos_[r[k]] = static_cast<int>(k);
    for (int h = 0; h < nh; ++h)
        if (pos_[h] < 0) throw graph_error("half-edge missing from rotation");
    face_.assign(nh, -1);
    faces_.clear();
    for (int h = 0; h < nh; ++h) {
        if (face_[h] >= 0) continue;
        int id = static_cast<int>(faces_.size());
        faces_.push_back({});
        int x = h;
        do {
            face_[x] = id;
            faces_.back().push_back(x);
            x = cw_next(x ^ 1);
        } while (x != h);
    }
    outer_ = face_[2 * arc_edge_[0]];
    int v = vertex_count(), e = edge_count(), f = face_count();
    if (v - e + f != 2) throw graph_error("rotation system is not planar (Euler characteristic " + std::to_string(v - e + f) + ")");
    for (int i = 0; i < n_; ++i)
        if (face_[2 * arc_edge_[i]] != outer_) throw graph_error("boundary vertices are not on one face");
}

int PlabicGraph::cw_next(int h) const {
    const auto& r = rot_[ends_[h]];
    return r[(pos_[h] + 1) % r.size()];
}

int PlabicGraph::ccw_next(int h) const {
    const auto& r = rot_[ends_[h]];
    return r[(pos_[h] + r.size() - 1) % r.size()];
}

std::vector<int> PlabicGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int h : rot_[v])
        if (!arc_[h / 2]) out.push_back(target(h));
    return out;
}

bool PlabicGraph::is_lollipop(int v) const {
    if (is_boundary(v)) return false;
    auto nb = neighbors(v);
    return nb.size() == 1 && is_boundary(nb[0]);
}

int PlabicGraph::boundary_edge_half(int i) const { return rot_[i - 1][1]; }

int PlabicGraph::edge_between(int u, int v) const {
    for (int h : rot_[u])
        if (!arc_[h / 2] && target(h) == v) return h / 2;
    return -1;
}

bool PlabicGraph::is_boundary_face(int f) const {
    if (f == outer_) return false;
    for (int h : faces_[f])
        if (arc_[h / 2]) return true;
    return false;
}

int PlabicGraph::boundary_face(int i) const { return face_[2 * arc_edge_[mod1(i, n_) - 1] + 1]; }

std::vector<int> PlabicGraph::face_vertices(int f) const {
    std::vector<int> out;
    for (int h : faces_[f]) out.push_back(ends_[h]);
    return out;
}

std::vector<int> PlabicGraph::interior_faces() const {
    std::vector<int> out;
    for (int f = 0; f < face_count(); ++f)
        if (f != outer_) out.push_back(f);
    return out;
}

std::vector<Color> PlabicGraph::internal_colors() const {
    return std::vector<Color>(color_.begin() + n_, color_.end());
}

std::vector<std::vector<int>> PlabicGraph::all_nbrs() const {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < vertex_count(); ++v) out.push_back(neighbors(v));
    return out;
}

PlabicGraph plabic_from_drawing(int n, const std::vector<std::pair<double, double>>& pos,
                                const std::vector<Color>& internal_colors,
                                const std::vector<std::pair<int, int>>& edges) {
    int nv = n + static_cast<int>(internal_colors.size());
    if (static_cast<int>(pos.size()) != nv) throw graph_error("one position per vertex required");
    std::vector<std::vector<int>> nb(nv);
    for (auto [a, b] : edges) {
        nb.at(a).push_back(b);
        nb.at(b).push_back(a);
    }
    for (int v = 0; v < nv; ++v) {
        auto ang = [&](int w) { return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first); };
        std::sort(nb[v].begin(), nb[v].end(), [&](int a, int b) { return ang(a) > ang(b); });
    }
    PlabicGraph g(n, internal_colors, nb);
    g.coords = pos;
    return g;
}

ZigZag zig_zag(const PlabicGraph& g, int i) {
    ZigZag z{i, {}, 0};
    int h = g.boundary_edge_half(i);
    int guard = 4 * g.edge_count() + 4;
    while (true) {
        z.halves.push_back(h);
        int v = g.target(h);
        if (g.is_boundary(v)) {
            z.end = v + 1;
            return z;
        }
        int t = h ^ 1;
        // sharpest right turn at a solid vertex, sharpest left at an empty one
        h = g.color(v) == Color::solid ? g.ccw_next(t) : g.cw_next(t);
        if (--guard < 0) throw graph_error("zig-zag from " + std::to_string(i) + " does not terminate");
    }
}

std::vector<ZigZag> zig_zags(const PlabicGraph& g) {
    std::vector<ZigZag> out;
    for (int i = 1; i <= g.n(); ++i) out.push_back(zig_zag(g, i));
    return out;
}

Bap decorated_permutation(const PlabicGraph& g) {
    int n = g.n();
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) {
        ZigZag z = zig_zag(g, i);
        if (z.end != i) {
            w.push_back(i + mod1(z.end - i, n));
            continue;
        }
        int v = g.target(z.halves[0]);
        if (!g.is_lollipop(v)) throw graph_error("strand " + std::to_string(i) + " returns without a lollipop");
        w.push_back(g.color(v) == Color::solid ? i : i + n);
    }
    return Bap(w);
}

std::set<int> faces_left_of(const PlabicGraph& g, const ZigZag& z) {
    std::set<int> left;
    if (z.start == z.end) {
        int v = g.target(z.halves[0]);
        if (g.is_lollipop(v) && g.color(v) == Color::empty)
            for (int f : g.interior_faces()) left.insert(f);
        return left;
    }
    std::set<int> blocked, right;
    for (int h : z.halves) {
        blocked.insert(g.edge_of(h));
        right.insert(g.face_of(h ^ 1));
    }
    std::deque<int> q;
    for (int h : z.halves)
        if (left.insert(g.face_of(h)).second) q.push_back(g.face_of(h));
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int h : g.face_cycle(f)) {
            int e = g.edge_of(h);
            if (g.is_arc(e) || blocked.count(e)) continue;
            int o = g.face_of(h ^ 1);
            if (left.insert(o).second) q.push_back(o);
        }
    }
    for (int f : right)
        if (left.count(f)) throw graph_error("strand " + std::to_string(z.start) + " does not separate the disk");
    return left;
}

std::vector<std::set<int>> face_labels(const PlabicGraph& g, LabelKind kind) {
    std::vector<std::set<int>> lab(g.face_count());
    for (auto& z : zig_zags(g)) {
        int val = kind == LabelKind::target ? z.end : z.start;
        for (int f : faces_left_of(g, z)) lab[f].insert(val);
    }
    return lab;
}

Quiver quiver(const PlabicGraph& g) {
    auto faces = g.interior_faces();
    std::vector<int> idx(g.face_count(), -1);
    for (size_t k = 0; k < faces.size(); ++k) idx[faces[k]] = static_cast<int>(k);
    Quiver q;
    int nf = static_cast<int>(faces.size());
    q.eps.assign(nf, std::vector<int>(nf, 0));
    auto lab = face_labels(g, LabelKind::target);
    for (int f : faces) {
        q.frozen.push_back(g.is_boundary_face(f));
        std::string s;
        for (int x : lab[f]) s += std::to_string(x) + (x >= 10 ? "," : "");
        q.names.push_back(s);
    }
    // counterclockwise cycle around every solid vertex; opposite arrows cancel
    for (int v = g.n(); v < g.vertex_count(); ++v) {
        if (g.color(v) != Color::solid) continue;
        for (int h : g.rotation(v)) {
            int a = idx[g.face_of(h ^ 1)], b = idx[g.face_of(h)];
            if (a == b || a < 0 || b < 0) continue;
            q.eps[a][b] += 1;
            q.eps[b][a] -= 1;
        }
    }
    return q;
}

namespace {

struct Raw {
    int n;
    std::vector<Color> col;
    std::vector<std::vector<int>> nb;
    std::vector<std::pair<double, double>> xy;
};

Raw raw_of(const PlabicGraph& g) {
    Raw r{g.n(), {}, g.all_nbrs(), g.coords};
    for (int v = 0; v < g.vertex_count(); ++v) r.col.push_back(g.color(v));
    if (static_cast<int>(r.xy.size()) != g.vertex_count()) r.xy.clear();
    return r;
}

PlabicGraph graph_of(const Raw& r) {
    PlabicGraph g(r.n, std::vector<Color>(r.col.begin() + r.n, r.col.end()), r.nb);
    g.coords = r.xy;
    return g;
}

void replace_nb(std::vector<int>& l, int from, int to) {
    for (int& x : l)
        if (x == from) x = to;
}

void remove_vertex(Raw& r, int v) {
    r.col.erase(r.col.begin() + v);
    r.nb.erase(r.nb.begin() + v);
    if (!r.xy.empty()) r.xy.erase(r.xy.begin() + v);
    for (auto& l : r.nb)
        for (int& x : l)
            if (x > v) --x;
}

int index_in(const std::vector<int>& l, int x) {
    auto it = std::find(l.begin(), l.end(), x);
    if (it == l.end()) throw graph_error("inconsistent neighbour lists");
    return static_cast<int>(it - l.begin());
}

}  // namespace

PlabicGraph contract_edge(const PlabicGraph& g, int e) {
    if (e < 0 || e >= g.edge_count() || g.is_arc(e)) throw graph_error("contraction needs an internal edge");
    int u = g.origin(2 * e), v = g.target(2 * e);
    if (g.is_boundary(u) || g.is_boundary(v)) throw graph_error("cannot contract an edge at the boundary");
    if (g.color(u) != g.color(v)) throw graph_error("contraction needs endpoints of the same colour");
    Raw r = raw_of(g);
    auto lu = r.nb[u], lv = r.nb[v];
    for (int x : lu)
        for (int y : lv)
            if (x == y) throw graph_error("contraction would create a double edge");
    int p = index_in(lu, v), q = index_in(lv, u);
    std::vector<int> merged;
    for (size_t k = 1; k < lv.size(); ++k) merged.push_back(lv[(q + k) % lv.size()]);
    for (size_t k = 1; k < lu.size(); ++k) merged.push_back(lu[(p + k) % lu.size()]);
    r.nb[u] = merged;
    for (int w : lv)
        if (w != u) replace_nb(r.nb[w], v, u);
    if (!r.xy.empty()) r.xy[u] = {(r.xy[u].first + r.xy[v].first) / 2, (r.xy[u].second + r.xy[v].second) / 2};
    remove_vertex(r, v);
    return graph_of(r);
}

PlabicGraph split_vertex(const PlabicGraph& g, int v, int start, int len) {
    if (g.is_boundary(v)) throw graph_error("cannot split a boundary vertex");
    Raw r = raw_of(g);
    auto l = r.nb[v];
    int d = static_cast<int>(l.size());
    if (len < 1 || len > d - 1 || start < 0 || start >= d) throw graph_error("split block out of range");
    int w = static_cast<int>(r.col.size());
    std::vector<int> block, rest;
    for (int k = 0; k < len; ++k) block.push_back(l[(start + k) % d]);
    for (int k = len; k < d; ++k) rest.push_back(l[(start + k) % d]);
    r.col.push_back(r.col[v]);
    std::vector<int> lv{w}, lw{v};
    lv.insert(lv.end(), rest.begin(), rest.end());
    lw.insert(lw.end(), block.begin(), block.end());
    r.nb[v] = lv;
    r.nb.push_back(lw);
    for (int x : block) replace_nb(r.nb[x], v, w);
    if (!r.xy.empty()) {
        double x = 0, y = 0;
        for (int b : block) x += r.xy[b].first, y += r.xy[b].second;
        x /= len, y /= len;
        r.xy.push_back({0.7 * r.xy[v].first + 0.3 * x, 0.7 * r.xy[v].second + 0.3 * y});
    }
    return graph_of(r);
}

PlabicGraph insert_bivalent(const PlabicGraph& g, int e, Color c) {
    if (e < 0 || e >= g.edge_count() || g.is_arc(e)) throw graph_error("bivalent insertion needs an internal edge");
    if (c == Color::boundary) throw graph_error("bad colour");
    int u = g.origin(2 * e), v = g.target(2 * e);
    Raw r = raw_of(g);
    int x = static_cast<int>(r.col.size());
    r.col.push_back(c);
    r.nb.push_back({u, v});
    replace_nb(r.nb[u], v, x);
    replace_nb(r.nb[v], u, x);
    if (!r.xy.empty()) r.xy.push_back({(r.xy[u].first + r.xy[v].first) / 2, (r.xy[u].second + r.xy[v].second) / 2});
    return graph_of(r);
}

PlabicGraph delete_bivalent(const PlabicGraph& g, int v) {
    if (g.is_boundary(v) || g.degree(v) != 2) throw graph_error("vertex is not bivalent");
    Raw r = raw_of(g);
    int a = r.nb[v][0], b = r.nb[v][1];
    if (g.is_boundary(a) && g.is_boundary(b)) throw graph_error("deletion would join two boundary vertices");
    for (int x : r.nb[a])
        if (x == b) throw graph_error("deletion would create a double edge");
    replace_nb(r.nb[a], v, b);
    replace_nb(r.nb[b], v, a);
    remove_vertex(r, v);
    return graph_of(r);
}

bool is_square_face(const PlabicGraph& g, int face) {
    if (face < 0 || face >= g.face_count() || face == g.outer_face()) return false;
    auto vs = g.face_vertices(face);
    if (vs.size() != 4) return false;
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != 4) return false;
    for (int k = 0; k < 4; ++k) {
        int v = vs[k];
        if (g.is_boundary(v) || g.degree(v) != 3) return false;
        if (g.color(v) == g.color(vs[(k + 1) % 4])) return false;
    }
    return true;
}

PlabicGraph square_move(const PlabicGraph& g, int face) {
    if (!is_square_face(g, face)) throw graph_error("face is not a square with alternating trivalent vertices");
    Raw r = raw_of(g);
    for (int v : g.face_vertices(face)) r.col[v] = r.col[v] == Color::solid ? Color::empty : Color::solid;
    return graph_of(r);
}

bool is_trivalent(const PlabicGraph& g) {
    for (int v = g.n(); v < g.vertex_count(); ++v)
        if (!g.is_lollipop(v) && g.degree(v) != 3) return false;
    return true;
}

PlabicGraph make_trivalent(const PlabicGraph& g) {
    PlabicGraph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = h.n(); v < h.vertex_count() && !changed; ++v) {
            if (h.degree(v) > 3) {
                h = split_vertex(h, v, 0, 2);
                changed = true;
            }
        }
        for (int v = h.n(); v < h.vertex_count() && !changed; ++v) {
            if (h.degree(v) != 2) continue;
            try {
                h = delete_bivalent(h, v);
                changed = true;
            } catch (const graph_error&) {
            }
        }
    }
    return h;
}

PerfectOrientation perfect_orientation(const PlabicGraph& g, int i) {
    int n = g.n();
    PerfectOrientation o;
    o.dir.assign(g.edge_count(), -1);
    std::vector<std::vector<std::pair<int, int>>> uses(g.edge_count());
    for (auto& z : zig_zags(g))
        for (int h : z.halves) uses[g.edge_of(h)].push_back({z.start, h});
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_arc(e)) continue;
        int u = g.origin(2 * e), v = g.target(2 * e);
        int leaf = g.is_lollipop(u) ? u : (g.is_lollipop(v) ? v : -1);
        if (leaf >= 0) {
            // solid lollipop points at its boundary vertex, empty one away from it
            bool out_of_leaf = g.color(leaf) == Color::solid;
            o.dir[e] = (u == leaf) == out_of_leaf ? 2 * e : 2 * e + 1;
            continue;
        }
        auto& us = uses[e];
        if (us.size() != 2 || g.edge_of(us[0].second) != e || us[0].second == us[1].second)
            throw graph_error("edge " + std::to_string(e) + " is not crossed by exactly two strands");
        o.dir[e] = cyc_less(us[0].first, us[1].first, i, n) ? us[0].second : us[1].second;
    }
    for (int b = 0; b < n; ++b) {
        int h = g.boundary_edge_half(b + 1);
        if (o.dir[g.edge_of(h)] == h) o.sources.insert(b + 1);
    }
    return o;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> out_edges(const PlabicGraph& g, const PerfectOrientation& o) {
    std::vector<std::vector<std::pair<int, int>>> out(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (o.dir[e] >= 0) out[g.origin(o.dir[e])].push_back({g.target(o.dir[e]), e});
    return out;
}

std::vector<int> topo_order(const PlabicGraph& g, const PerfectOrientation& o) {
    auto out = out_edges(g, o);
    std::vector<int> indeg(g.vertex_count(), 0), order;
    for (auto& l : out)
        for (auto [w, e] : l) ++indeg[w];
    std::deque<int> q;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!indeg[v]) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (auto [w, e] : out[v])
            if (--indeg[w] == 0) q.push_back(w);
    }
    return order;
}

}  // namespace

bool is_acyclic(const PlabicGraph& g, const PerfectOrientation& o) {
    return static_cast<int>(topo_order(g, o).size()) == g.vertex_count();
}

bool is_perfect(const PlabicGraph& g, const PerfectOrientation& o) {
    for (int v = g.n(); v < g.vertex_count(); ++v) {
        int outs = 0, ins = 0;
        for (int h : g.rotation(v)) {
            if (o.dir[g.edge_of(h)] == h) ++outs;
            else ++ins;
        }
        if (g.color(v) == Color::solid && outs != 1) return false;
        if (g.color(v) == Color::empty && ins != 1) return false;
    }
    return true;
}

bool unique_sink_property(const PlabicGraph& g, const PerfectOrientation& o) {
    for (int f : g.interior_faces()) {
        const auto& cyc = g.face_cycle(f);
        int sources = 0, sinks = 0;
        for (size_t k = 0; k < cyc.size(); ++k) {
            int in = cyc[k], out = cyc[(k + 1) % cyc.size()];  // in arrives at the corner vertex, out leaves it
            int ei = g.edge_of(in), eo = g.edge_of(out);
            if (g.is_arc(ei) || g.is_arc(eo) || ei == eo) continue;
            bool in_towards = o.dir[ei] == in;
            bool out_away = o.dir[eo] == out;
            if (!in_towards && out_away) ++sources;
            if (in_towards && !out_away) ++sinks;
        }
        if (sources > 1 || sinks > 1) return false;
    }
    return true;
}

Matrix boundary_measurement(const PlabicGraph& g, const PerfectOrientation& o, int i,
                            const std::vector<Rational>& edge_weights) {
    int n = g.n();
    if (static_cast<int>(edge_weights.size()) != g.edge_count()) throw shape_error("one weight per edge required");
    auto order = topo_order(g, o);
    if (static_cast<int>(order.size()) != g.vertex_count()) throw graph_error("orientation has a directed cycle");
    auto out = out_edges(g, o);
    std::vector<int> src = sort_cyclic(std::vector<int>(o.sources.begin(), o.sources.end()), i, n);
    int m = static_cast<int>(src.size());
    Matrix a(m, n);
    for (int r = 0; r < m; ++r) {
        std::vector<Rational> val(g.vertex_count(), Rational(0));
        val[src[r] - 1] = 1;
        for (int v : order)
            if (val[v] != 0)
                for (auto [w, e] : out[v]) val[w] += val[v] * edge_weights[e];
        for (int j = 1; j <= n; ++j) {
            if (o.sources.count(j)) {
                a(r, j - 1) = j == src[r] ? 1 : 0;
                continue;
            }
            int between = 0;
            for (int t : src)
                if ((cyc_less(src[r], t, i, n) && cyc_less(t, j, i, n)) || (cyc_less(j, t, i, n) && cyc_less(t, src[r], i, n)))
                    ++between;
            a(r, j - 1) = between % 2 ? Rational(-val[j - 1]) : val[j - 1];
        }
    }
    return a;
}

std::vector<Rational> random_weights(const PlabicGraph& g, Rng& rng) {
    std::vector<Rational> w;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rational x(rng.uniform(1, 9), rng.uniform(1, 9));
        x.canonicalize();
        w.push_back(x);
    }
    return w;
}

PlabicGraph gr24_square() {
    std::vector<std::pair<double, double>> pos = {{-2, 2}, {2, 2}, {2, -2}, {-2, -2},
                                                  {-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
    std::vector<Color> col = {Color::solid, Color::empty, Color::solid, Color::empty};
    std::vector<std::pair<int, int>> edges = {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
    return plabic_from_drawing(4, pos, col, edges);
}

PlabicGraph gr36_hexagonal() {
    // hexagon h0..h5 with spokes to an outer ring o0..o5; o(2k) -- o(2k+1) closes three squares
    const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> pos(18);
    for (int k = 0; k < 6; ++k) {
        double a = pi / 2 - k * pi / 3;
        pos[6 + k] = {std::cos(a), std::sin(a)};
        pos[12 + k] = {2 * std::cos(a), 2 * std::sin(a)};
    }
    std::vector<Color> col;
    // colours chosen so that mutating the hexagon gives 136*245 - 126*345
    for (int k = 0; k < 6; ++k) col.push_back(k % 2 ? Color::empty : Color::solid);
    for (int k = 0; k < 6; ++k) col.push_back(k % 2 ? Color::solid : Color::empty);
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < 6; ++k) {
        edges.push_back({6 + k, 6 + (k + 1) % 6});
        edges.push_back({6 + k, 12 + k});
    }
    for (int k = 0; k < 6; k += 2) edges.push_back({12 + k, 12 + k + 1});
    // boundary vertex labels rotated so that the hexagon carries 135
    const int shift = 0;
    for (int k = 0; k < 6; ++k) {
        int b = (k + shift) % 6;
        double a = pi / 2 - k * pi / 3;
        pos[b] = {3 * std::cos(a), 3 * std::sin(a)};
        edges.push_back({b, 12 + k});
    }
    return plabic_from_drawing(6, pos, col, edges);
}

PlabicGraph lollipop_graph(const std::vector<bool>& solid) {
    int n = static_cast<int>(solid.size());
    const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> pos(2 * n);
    std::vector<Color> col;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        double a = pi / 2 - 2 * pi * i / n;
        pos[i] = {2 * std::cos(a), 2 * std::sin(a)};
        pos[n + i] = {std::cos(a), std::sin(a)};
        col.push_back(solid[i] ? Color::solid : Color::empty);
        edges.push_back({i, n + i});
    }
    return plabic_from_drawing(n, pos, col, edges);
}

std::string render_plabic_svg(const PlabicGraph& g) {
    int nv = g.vertex_count();
    std::vector<std::pair<double, double>> xy = g.coords;
    if (static_cast<int>(xy.size()) != nv) {
        const double pi = std::acos(-1.0);
        xy.assign(nv, {0, 0});
        for (int v = 0; v < nv; ++v) {
            double r = g.is_boundary(v) ? 3 : 1.5, a = pi / 2 - 2 * pi * v / (g.is_boundary(v) ? g.n() : nv);
            xy[v] = {r * std::cos(a), r * std::sin(a)};
        }
    }
    double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
    for (auto [x, y] : xy) lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x), lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    const double s = 60, pad = 30;
    auto px = [&](double x) { return pad + (x - lo_x) * s; };
    auto py = [&](double y) { return pad + (hi_y - y) * s; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + (hi_x - lo_x) * s << "\" height=\""
        << 2 * pad + (hi_y - lo_y) * s << "\">\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_arc(e)) continue;
        int u = g.origin(2 * e), v = g.target(2 * e);
        out << "  <line x1=\"" << px(xy[u].first) << "\" y1=\"" << py(xy[u].second) << "\" x2=\"" << px(xy[v].first)
            << "\" y2=\"" << py(xy[v].second) << "\" stroke=\"black\"/>\n";
    }
    for (int v = 0; v < nv; ++v) {
        if (g.is_boundary(v)) {
            out << "  <text x=\"" << px(xy[v].first) << "\" y=\"" << py(xy[v].second) << "\" font-size=\"14\">" << v + 1
                << "</text>\n";
            continue;
        }
        out << "  <circle cx=\"" << px(xy[v].first) << "\" cy=\"" << py(xy[v].second) << "\" r=\"6\" stroke=\"black\" fill=\""
            << (g.color(v) == Color::solid ? "black" : "white") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pw
