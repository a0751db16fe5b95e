#include "tshift_weave.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace pw {

namespace {

bool trivalent_solid(const PlabicGraph& g, int v) {
    return !g.is_boundary(v) && g.color(v) == Color::solid && g.degree(v) == 3;
}

bool solid_lollipop(const PlabicGraph& g, int v) {
    return !g.is_boundary(v) && g.color(v) == Color::solid && g.is_lollipop(v);
}

// bivalent solid vertex between two boundary vertices (a face with two marked points and no solid corner)
bool boundary_bridge(const PlabicGraph& g, int v) {
    if (g.is_boundary(v) || g.color(v) != Color::solid || g.degree(v) != 2) return false;
    auto nb = g.neighbors(v);
    return g.is_boundary(nb[0]) && g.is_boundary(nb[1]);
}

int index_in(const std::vector<int>& r, int h) {
    return static_cast<int>(std::find(r.begin(), r.end(), h) - r.begin());
}

}  // namespace

TShiftResult tshift(const PlabicGraph& g) {
    int n = g.n();
    for (int v = n; v < g.vertex_count(); ++v) {
        if (g.color(v) != Color::solid) continue;
        if (!trivalent_solid(g, v) && !g.is_lollipop(v) && !boundary_bridge(g, v))
            throw graph_error("T-shift needs trivalent solid vertices (vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + ")");
    }
    TShiftResult res;
    std::vector<int> newb(n, -1);
    for (int i = 0; i < n; ++i) {
        if (solid_lollipop(g, g.neighbors(i)[0])) continue;
        newb[i] = static_cast<int>(res.kept.size());
        res.kept.push_back(i + 1);
    }
    int r = static_cast<int>(res.kept.size());
    std::vector<Color> colors;
    std::vector<std::vector<int>> nb(r);
    auto add_vertex = [&](Color c, std::vector<int> init) {
        colors.push_back(c);
        nb.push_back(std::move(init));
        return static_cast<int>(nb.size()) - 1;
    };
    for (int v = n; v < g.vertex_count(); ++v)
        if (trivalent_solid(g, v)) res.dual_of_solid[v] = add_vertex(Color::empty, {-1, -1, -1});

    struct Item {
        int v;
        int slot;  // -1: append (boundary vertex)
    };
    auto attach = [&](const Item& it, int other) {
        if (it.slot < 0) nb[it.v].push_back(other);
        else nb[it.v][it.slot] = other;
    };
    std::vector<std::tuple<int, int, int>> made;  // (u, v, face)
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face()) continue;
        // walk the face counterclockwise; new boundary points sit at the start of their arc
        std::vector<Item> items;
        for (int h : g.face_cycle(f)) {
            if (g.is_arc(g.edge_of(h))) {
                int o = g.origin(h);
                if (newb[o] >= 0) items.push_back({newb[o], -1});
            }
            int v = g.target(h);
            if (trivalent_solid(g, v)) items.push_back({res.dual_of_solid.at(v), index_in(g.rotation(v), h ^ 1)});
        }
        int d = static_cast<int>(items.size());
        auto& tree = res.face_tree[f];
        auto link = [&](const Item& a, int t) {
            attach(a, t);
            made.emplace_back(a.v, t, f);
        };
        if (d == 0) throw graph_error("face " + std::to_string(f) + " has no solid corner and no boundary point");
        if (d == 1) {
            if (items[0].slot >= 0) throw graph_error("face " + std::to_string(f) + " has a single solid corner");
            int t = add_vertex(Color::solid, {items[0].v});
            tree.push_back(t);
            attach(items[0], t);
            made.emplace_back(items[0].v, t, f);
            continue;
        }
        if (d == 2) {
            if (items[0].slot < 0 && items[1].slot < 0) {
                int t = add_vertex(Color::solid, {items[1].v, items[0].v});
                tree.push_back(t);
                attach(items[0], t);
                attach(items[1], t);
                made.emplace_back(items[0].v, t, f);
                made.emplace_back(items[1].v, t, f);
            } else {
                attach(items[0], items[1].v);
                attach(items[1], items[0].v);
                made.emplace_back(items[0].v, items[1].v, f);
            }
            continue;
        }
        // caterpillar: t_0 holds a_0, a_1; t_j holds a_{j+1}; the last one also holds a_{d-1}
        int k = d - 2;
        std::vector<int> t(k);
        for (int j = 0; j < k; ++j) {
            t[j] = add_vertex(Color::solid, {});
            tree.push_back(t[j]);
        }
        for (int j = 0; j < k; ++j) {
            std::vector<int> ccw;
            if (j == 0) ccw = {-1, -2};
            else ccw = {t[j - 1], -(j + 2)};
            if (j == k - 1) ccw.push_back(-d);
            else ccw.push_back(t[j + 1]);
            // negative entries -(q+1) stand for item q
            std::vector<int> cw(ccw.rbegin(), ccw.rend());
            for (int& x : cw) {
                if (x < 0) {
                    const Item& it = items[-x - 1];
                    link(it, t[j]);
                    x = it.v;
                }
            }
            nb[t[j]] = cw;
            if (j + 1 < k) made.emplace_back(t[j], t[j + 1], f);
        }
    }
    for (auto& [s, u] : res.dual_of_solid)
        for (int x : nb[u])
            if (x < 0) throw graph_error("unfilled sector at solid vertex " + std::to_string(s));
    std::vector<std::vector<int>> full = nb;
    res.g = PlabicGraph(r, colors, full);
    res.edge_face.assign(res.g.edge_count(), -1);
    for (auto& [u, v, f] : made) {
        int e = res.g.edge_between(u, v);
        if (e < 0) throw graph_error("lost an edge while building the T-shift");
        res.edge_face[e] = f;
    }
    for (int e = 0; e < res.g.edge_count(); ++e)
        if (!res.g.is_arc(e) && res.edge_face[e] < 0) throw graph_error("edge outside every face");

    // rough drawing positions when the input has them
    if (static_cast<int>(g.coords.size()) == g.vertex_count()) {
        auto& xy = res.g.coords;
        xy.assign(res.g.vertex_count(), {0, 0});
        for (int b = 0; b < r; ++b) {
            int i = res.kept[b] - 1, p = (i + n - 1) % n;
            xy[b] = {0.85 * g.coords[i].first + 0.15 * g.coords[p].first, 0.85 * g.coords[i].second + 0.15 * g.coords[p].second};
        }
        for (auto& [s, u] : res.dual_of_solid) xy[u] = g.coords[s];
        for (auto& [f, tree] : res.face_tree) {
            double cx = 0, cy = 0;
            auto fv = g.face_vertices(f);
            for (int v : fv) cx += g.coords[v].first, cy += g.coords[v].second;
            cx /= fv.size(), cy /= fv.size();
            for (size_t j = 0; j < tree.size(); ++j) {
                double ax = 0, ay = 0;
                auto around = res.g.neighbors(tree[j]);
                for (int v : around) ax += xy[v].first, ay += xy[v].second;
                ax /= around.size(), ay /= around.size();
                xy[tree[j]] = {0.6 * cx + 0.4 * ax, 0.6 * cy + 0.4 * ay};
            }
        }
    }
    return res;
}

Tower tower(const PlabicGraph& g) {
    Tower t;
    t.levels.push_back(g);
    std::vector<int> names(g.n());
    std::iota(names.begin(), names.end(), 1);
    t.names.push_back(names);
    int m = decorated_permutation(g).m();
    if (m < 1) throw graph_error("tower needs rank at least 1");
    while (static_cast<int>(t.levels.size()) < m) {
        TShiftResult s = tshift(t.levels.back());
        std::vector<int> nm;
        for (int k : s.kept) nm.push_back(t.names.back()[k - 1]);
        t.names.push_back(nm);
        t.levels.push_back(s.g);
        t.steps.push_back(std::move(s));
    }
    return t;
}

Weave assemble_weave(const Tower& t) {
    Weave w;
    int m = t.m();
    w.m = m;
    if (m == 1) return w;
    // boundary points of every level, clockwise; a child sits right after the
    // surviving predecessor of its parent, at the counterclockwise end of its gap
    std::vector<std::pair<int, int>> order;
    for (int b = 1; b <= t.levels[0].n(); ++b) order.push_back({0, b});
    for (int j = 1; j < m; ++j) {
        std::map<int, int> child_after;  // level j-1 point q -> level j point placed right after it
        const auto& kept = t.steps[j - 1].kept;
        // predecessor among surviving points: a lollipop point carries no leg
        int nk = static_cast<int>(kept.size());
        for (int b = 1; b <= nk; ++b) child_after[kept[mod1(b - 1, nk) - 1]] = b;
        std::vector<std::pair<int, int>> next;
        for (auto& p : order) {
            next.push_back(p);
            if (p.first == j - 1 && child_after.count(p.second)) next.push_back({j, child_after[p.second]});
        }
        order = next;
    }
    std::map<std::pair<int, int>, int> point_pos;
    for (size_t k = 0; k < order.size(); ++k) point_pos[order[k]] = static_cast<int>(k);

    // vertices: empty vertices of levels 1..m-1
    std::vector<std::map<int, int>> wv(m);
    for (int j = 1; j < m; ++j) {
        const PlabicGraph& g = t.levels[j];
        for (int v = g.n(); v < g.vertex_count(); ++v) {
            if (g.color(v) != Color::empty) continue;
            if (g.degree(v) != 3) throw weave_error("empty vertex of a shifted level is not trivalent");
            wv[j][v] = static_cast<int>(w.rot.size());
            w.rot.push_back({});
        }
    }
    const int boundary_mark = -1000000;
    auto resolve = [&](int j, int v) -> int {
        const PlabicGraph& g = t.levels[j];
        if (g.is_boundary(v)) return boundary_mark - point_pos.at({j, v + 1});
        if (g.color(v) == Color::empty) return wv[j].at(v);
        if (j + 1 >= m) throw weave_error("trivalent solid vertex in the rank one level");
        return wv[j + 1].at(t.steps[j].dual_of_solid.at(v));
    };
    std::map<std::pair<int, int>, int> half_map;  // (level, plabic half-edge) -> weave half-edge
    auto new_edge = [&](int j, int a, int b, int face) {
        int e = w.edge_count();
        w.color.push_back(m - j);
        w.level.push_back(m - j);
        w.ends.push_back(a);
        w.ends.push_back(b);
        w.top_face.push_back(j == 1 ? face : -1);
        return e;
    };
    for (int j = 1; j < m; ++j) {
        const PlabicGraph& g = t.levels[j];
        const auto& ef = t.steps[j - 1].edge_face;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.is_arc(e)) continue;
            int u = g.origin(2 * e), v = g.target(2 * e);
            if (solid_lollipop(g, u) || solid_lollipop(g, v)) continue;
            if (boundary_bridge(g, u) || boundary_bridge(g, v)) continue;
            int we = new_edge(j, resolve(j, u), resolve(j, v), ef[e]);
            half_map[{j, 2 * e}] = 2 * we;
            half_map[{j, 2 * e + 1}] = 2 * we + 1;
        }
        for (int v = g.n(); v < g.vertex_count(); ++v) {
            if (!boundary_bridge(g, v)) continue;
            auto nb = g.neighbors(v);
            new_edge(j, resolve(j, nb[0]), resolve(j, nb[1]), ef[g.edge_between(v, nb[0])]);
        }
    }
    // rotations
    for (int j = 1; j < m; ++j) {
        const PlabicGraph& g = t.levels[j];
        std::map<int, int> solid_of;  // empty vertex of level j -> solid vertex of level j-1
        for (auto& [s, u] : t.steps[j - 1].dual_of_solid) solid_of[u] = s;
        for (auto& [u, id] : wv[j]) {
            const auto& ru = g.rotation(u);
            if (j == 1) {
                for (int h : ru) w.rot[id].push_back(half_map.at({j, h}));
                continue;
            }
            int s = solid_of.at(u);
            const auto& rs = t.levels[j - 1].rotation(s);
            for (int k = 0; k < 3; ++k) {
                w.rot[id].push_back(half_map.at({j - 1, rs[k]}));
                w.rot[id].push_back(half_map.at({j, ru[k]}));
            }
        }
    }
    // legs in boundary order
    std::vector<std::pair<int, int>> at;  // (position, edge)
    for (int e = 0; e < w.edge_count(); ++e)
        for (int s = 0; s < 2; ++s)
            if (w.ends[2 * e + s] <= boundary_mark) at.push_back({boundary_mark - w.ends[2 * e + s], 2 * e + s});
    std::sort(at.begin(), at.end());
    for (size_t k = 0; k < at.size(); ++k) {
        w.ends[at[k].second] = -1 - static_cast<int>(k);
        w.legs.push_back(at[k].second / 2);
    }
    if (!validate_weave(w)) throw weave_error("assembled weave breaks a vertex rule");
    return w;
}

bool validate_weave(const Weave& w) {
    int ne = w.edge_count();
    if (static_cast<int>(w.ends.size()) != 2 * ne || static_cast<int>(w.level.size()) != ne) return false;
    for (int c : w.color)
        if (c < 1 || c > w.m - 1) return false;
    std::vector<int> seen(2 * ne, 0);
    for (int v = 0; v < w.vertex_count(); ++v) {
        const auto& r = w.rot[v];
        for (int h : r) {
            if (h < 0 || h >= 2 * ne || w.ends[h] != v) return false;
            ++seen[h];
        }
        if (r.size() == 3) {
            if (w.color[r[0] / 2] != w.color[r[1] / 2] || w.color[r[1] / 2] != w.color[r[2] / 2]) return false;
        } else if (r.size() == 6) {
            int a = w.color[r[0] / 2], b = w.color[r[1] / 2];
            if (std::abs(a - b) != 1) return false;
            for (int k = 0; k < 6; ++k)
                if (w.color[r[k] / 2] != (k % 2 ? b : a)) return false;
        } else {
            return false;
        }
    }
    int legs = 0;
    for (int h = 0; h < 2 * ne; ++h) {
        if (w.ends[h] < 0) {
            int k = -1 - w.ends[h];
            if (k >= static_cast<int>(w.legs.size()) || w.legs[k] != h / 2) return false;
            ++legs;
        } else if (seen[h] != 1) {
            return false;
        }
    }
    return legs == static_cast<int>(w.legs.size());
}

BraidWord boundary_word(const Weave& w) {
    BraidWord b;
    b.m = w.m;
    for (int e : w.legs) b.letters.push_back(w.color[e]);
    return b;
}

YCycle y_tree_for_face(const Weave& w, int f) {
    YCycle y;
    y.value.assign(w.edge_count(), 0);
    int support = 0;
    bool external = false;
    for (int e = 0; e < w.edge_count(); ++e) {
        if (w.top_face[e] != f) continue;
        y.value[e] = 1;
        ++support;
        external = external || w.ends[2 * e] < 0 || w.ends[2 * e + 1] < 0;
    }
    if (support == 0) {
        y.isolated = true;
        return y;
    }
    y.tree = is_y_tree(w, y.value);
    y.mutable_ = !external;
    y.short_i = y.mutable_ && support == 1;
    return y;
}

namespace {

bool min_twice(int a, int b, int c) {
    int lo = std::min({a, b, c});
    return (a == lo) + (b == lo) + (c == lo) >= 2;
}

// rotation in counterclockwise order
std::vector<int> ccw(const std::vector<int>& r) {
    std::vector<int> out{r[0]};
    for (size_t k = r.size() - 1; k >= 1; --k) out.push_back(r[k]);
    return out;
}

long det3(int x1, int x2, int x3, int y1, int y2, int y3) {
    return static_cast<long>(x2) * y3 - static_cast<long>(x3) * y2 - (static_cast<long>(x1) * y3 - static_cast<long>(x3) * y1) +
           (static_cast<long>(x1) * y2 - static_cast<long>(x2) * y1);
}

}  // namespace

bool validate_ycycle(const Weave& w, const std::vector<int>& gamma) {
    if (static_cast<int>(gamma.size()) != w.edge_count()) return false;
    for (int x : gamma)
        if (x < 0) return false;
    for (int v = 0; v < w.vertex_count(); ++v) {
        auto r = ccw(w.rot[v]);
        std::vector<int> g;
        for (int h : r) g.push_back(gamma[h / 2]);
        if (g.size() == 3) {
            if (!min_twice(g[0], g[1], g[2])) return false;
        } else {
            // a b c d e f counterclockwise
            if (g[0] - g[3] != g[4] - g[1] || g[4] - g[1] != g[2] - g[5]) return false;
            if (!min_twice(g[0], g[2], g[4]) || !min_twice(g[1], g[3], g[5])) return false;
        }
    }
    return true;
}

bool is_y_tree(const Weave& w, const std::vector<int>& gamma) {
    if (!validate_ycycle(w, gamma)) return false;
    for (int x : gamma)
        if (x > 1) return false;
    for (int v = 0; v < w.vertex_count(); ++v) {
        const auto& r = w.rot[v];
        if (r.size() == 3 && std::min({gamma[r[0] / 2], gamma[r[1] / 2], gamma[r[2] / 2]}) != 0) return false;
    }
    // support must be a connected tree; boundary ends are separate nodes
    std::map<int, int> parent;
    auto find = [&](auto&& self, int x) -> int {
        if (!parent.count(x)) parent[x] = x;
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    int edges = 0;
    bool cycle = false;
    for (int e = 0; e < w.edge_count(); ++e) {
        if (!gamma[e]) continue;
        ++edges;
        int a = find(find, w.ends[2 * e]), b = find(find, w.ends[2 * e + 1]);
        if (a == b) cycle = true;
        else parent[a] = b;
    }
    if (edges == 0 || cycle) return false;
    std::set<int> roots;
    for (auto& [x, p] : parent) roots.insert(find(find, x));
    return roots.size() == 1;
}

int intersection_pairing(const Weave& w, const std::vector<int>& a, const std::vector<int>& b) {
    long twice = 0;
    for (int v = 0; v < w.vertex_count(); ++v) {
        auto r = ccw(w.rot[v]);
        auto x = [&](int k) { return a[r[k] / 2]; };
        auto y = [&](int k) { return b[r[k] / 2]; };
        if (r.size() == 3) {
            twice += 2 * det3(x(0), x(1), x(2), y(0), y(1), y(2));
        } else {
            twice += det3(x(0), x(2), x(4), y(0), y(2), y(4)) + det3(x(1), x(3), x(5), y(1), y(3), y(5));
        }
    }
    if (twice % 2) throw weave_error("intersection pairing is not an integer");
    return static_cast<int>(twice / 2);
}

Quiver quiver_from_weave(const Weave& w, const PlabicGraph& g) {
    auto faces = g.interior_faces();
    int nf = static_cast<int>(faces.size());
    std::vector<YCycle> ys;
    for (int f : faces) ys.push_back(y_tree_for_face(w, f));
    Quiver q;
    q.eps.assign(nf, std::vector<int>(nf, 0));
    auto lab = face_labels(g, LabelKind::target);
    for (int k = 0; k < nf; ++k) {
        q.frozen.push_back(g.is_boundary_face(faces[k]));
        std::string s;
        for (int x : lab[faces[k]]) s += std::to_string(x) + (x >= 10 ? "," : "");
        q.names.push_back(s);
    }
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            if (ys[a].isolated || ys[b].isolated) continue;
            int p = intersection_pairing(w, ys[a].value, ys[b].value);
            q.eps[a][b] = p;
            q.eps[b][a] = -p;
        }
    return q;
}

bool check_compatible_orientations(const PlabicGraph& g, const TShiftResult& down, int i) {
    PerfectOrientation o = perfect_orientation(g, i);
    if (!o.sources.count(i)) throw graph_error("boundary vertex " + std::to_string(i) + " is a loop");
    // sources of O_i in <_i order; the shifted graph takes all but the first
    std::vector<int> src(o.sources.begin(), o.sources.end());
    int n = g.n();
    std::sort(src.begin(), src.end(), [&](int a, int b) { return (a - i + n) % n < (b - i + n) % n; });
    std::set<int> want;
    for (size_t k = 1; k < src.size(); ++k) {
        auto it = std::find(down.kept.begin(), down.kept.end(), src[k]);
        if (it == down.kept.end()) return false;
        want.insert(static_cast<int>(it - down.kept.begin()) + 1);
    }
    const PlabicGraph& d = down.g;
    Necklace nk = target_necklace(decorated_permutation(d));
    int j = -1;
    for (int c = 1; c <= d.n() && j < 0; ++c)
        if (nk.entry(c) == want) j = c;
    if (j < 0) return false;
    PerfectOrientation od = perfect_orientation(d, j);
    for (auto& [s, u] : down.dual_of_solid) {
        const auto& rs = g.rotation(s);
        const auto& ru = d.rotation(u);
        for (int k = 0; k < 3; ++k) {
            // slot k+1 of u is the sector facing away from rs[k]
            bool out_g = o.dir[g.edge_of(rs[k])] == rs[k];
            int hu = ru[(k + 1) % 3];
            bool in_d = od.dir[d.edge_of(hu)] == (hu ^ 1);
            if (out_g != in_d) return false;
        }
    }
    return true;
}

std::string render_weave_svg(const Weave& w) {
    // vertices on an inner circle, legs on the outer circle in clockwise order from angle 0
    const double pi = std::acos(-1.0);
    int nv = w.vertex_count(), nl = static_cast<int>(w.legs.size());
    auto vpos = [&](int v) {
        double a = -2 * pi * (v + 0.5) / std::max(1, nv);
        return std::pair<double, double>{1.6 * std::cos(a), 1.6 * std::sin(a)};
    };
    auto lpos = [&](int k) {
        double a = -2 * pi * k / std::max(1, nl);
        return std::pair<double, double>{3 * std::cos(a), 3 * std::sin(a)};
    };
    static const char* palette[] = {"teal", "red", "blue", "orange", "purple", "brown"};
    auto stroke = [&](int c) { return palette[(w.m - 1 - c) % 6]; };
    const double s = 60, c0 = 220;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\">\n";
    out << "  <circle cx=\"" << c0 << "\" cy=\"" << c0 << "\" r=\"" << 3 * s << "\" fill=\"none\" stroke=\"lightgray\"/>\n";
    for (int e = 0; e < w.edge_count(); ++e) {
        auto p = [&](int h) { return w.ends[h] < 0 ? lpos(-1 - w.ends[h]) : vpos(w.ends[h]); };
        auto a = p(2 * e), b = p(2 * e + 1);
        out << "  <line x1=\"" << c0 + s * a.first << "\" y1=\"" << c0 - s * a.second << "\" x2=\"" << c0 + s * b.first
            << "\" y2=\"" << c0 - s * b.second << "\" stroke=\"" << stroke(w.color[e]) << "\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pw
