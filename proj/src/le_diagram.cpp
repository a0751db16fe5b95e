#include "le_diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace pw {

int LeDiagram::column_length(int c) const {
    int len = 0;
    for (int r = 0; r < m; ++r)
        if (row_length(r) > c) len = r + 1;
    return len;
}

std::vector<StairStep> staircase(const LeDiagram& d) {
    std::vector<StairStep> steps;
    int x = d.width, r = 0;
    while (x > 0 || r < d.m) {
        if (r < d.m && d.row_length(r) == x) {
            steps.push_back({true, r});
            ++r;
        } else {
            steps.push_back({false, x - 1});
            --x;
        }
    }
    return steps;
}

int row_label(const LeDiagram& d, int r) {
    auto st = staircase(d);
    for (size_t k = 0; k < st.size(); ++k)
        if (st[k].vertical && st[k].index == r) return d.labels[k];
    throw le_error("row out of range");
}

int column_label(const LeDiagram& d, int c) {
    auto st = staircase(d);
    for (size_t k = 0; k < st.size(); ++k)
        if (!st[k].vertical && st[k].index == c) return d.labels[k];
    throw le_error("column out of range");
}

LeDiagram make_le(int m, int n, int min_index, const std::vector<std::string>& rows) {
    if (m < 0 || n < m) throw le_error("bad type (" + std::to_string(m) + "," + std::to_string(n) + ")");
    if (static_cast<int>(rows.size()) != m) throw le_error("expected " + std::to_string(m) + " rows");
    LeDiagram d;
    d.m = m;
    d.width = n - m;
    for (auto& s : rows) {
        std::vector<bool> row;
        for (char ch : s) {
            if (ch == '+') row.push_back(true);
            else if (ch == '0') row.push_back(false);
            else throw le_error(std::string("bad cell character '") + ch + "'");
        }
        d.plus.push_back(row);
    }
    for (int k = 0; k < n; ++k) d.labels.push_back(mod1(min_index + k, n));
    if (!validate_le(d)) throw le_error("not a Le diagram");
    return d;
}

LeDiagram parse_le(const std::string& text) {
    std::istringstream in(text);
    int m, n, i;
    if (!(in >> m >> n >> i)) throw parse_error("Le diagram header must be \"m n i\"");
    std::vector<std::string> rows;
    std::string line;
    std::getline(in, line);
    while (static_cast<int>(rows.size()) < m && std::getline(in, line)) {
        line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\r'; }), line.end());
        rows.push_back(line == "-" ? "" : line);
    }
    if (static_cast<int>(rows.size()) != m) throw parse_error("Le diagram has too few rows");
    LeDiagram d = make_le(m, n, i, rows);
    // optional relabelling, e.g. after a T-shift removed some labels
    std::string word;
    if (in >> word) {
        if (word != "labels") throw parse_error("expected \"labels\" after the rows");
        std::vector<int> labels;
        int x;
        while (in >> x) labels.push_back(x);
        if (static_cast<int>(labels.size()) != n) throw parse_error("wrong number of labels");
        d.labels = labels;
        if (!validate_le(d)) throw le_error("labels do not increase cyclically");
    }
    return d;
}

std::string to_text(const LeDiagram& d) {
    std::ostringstream out;
    int first = d.labels.empty() ? 1 : d.labels[0];
    out << d.m << " " << d.n() << " " << first << "\n";
    for (auto& row : d.plus) {
        if (row.empty()) out << "-";
        for (bool p : row) out << (p ? '+' : '0');
        out << "\n";
    }
    bool standard = true;
    for (int k = 0; k < d.n(); ++k) standard = standard && d.labels[k] == mod1(first + k, d.n());
    if (!standard) {
        out << "labels";
        for (int l : d.labels) out << " " << l;
        out << "\n";
    }
    return out.str();
}

bool validate_le(const LeDiagram& d) {
    if (static_cast<int>(d.plus.size()) != d.m || d.width < 0) return false;
    for (int r = 0; r < d.m; ++r) {
        if (d.row_length(r) > d.width) return false;
        if (r > 0 && d.row_length(r) > d.row_length(r - 1)) return false;
    }
    if (static_cast<int>(d.labels.size()) != d.n()) return false;
    std::vector<int> s = d.labels;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    // labels increase cyclically along the staircase
    int drops = 0;
    for (size_t k = 0; k < d.labels.size(); ++k)
        if (d.labels[(k + 1) % d.labels.size()] < d.labels[k]) ++drops;
    if (d.labels.size() > 1 && drops != 1) return false;
    for (int k = 0; k < d.m; ++k)
        for (int l = 0; l < d.row_length(k); ++l) {
            if (d.plus[k][l]) continue;
            bool left = false, above = false;
            for (int j = 0; j < l; ++j) left = left || d.plus[k][j];
            for (int i = 0; i < k; ++i) above = above || d.plus[i][l];
            if (left && above) return false;
        }
    return true;
}

std::vector<int> sorted_labels(const LeDiagram& d) {
    std::vector<int> s = d.labels;
    std::sort(s.begin(), s.end());
    return s;
}

PlabicGraph plabic_from_le(const LeDiagram& d) {
    if (!validate_le(d)) throw le_error("not a Le diagram");
    int n = d.n();
    if (n < 2) throw le_error("need at least two boundary labels");
    std::vector<int> sl = sorted_labels(d);
    auto vertex_of_label = [&](int lab) {
        return static_cast<int>(std::lower_bound(sl.begin(), sl.end(), lab) - sl.begin());
    };
    std::vector<std::pair<double, double>> pos(n);
    std::vector<Color> col;
    std::vector<std::pair<int, int>> edges;
    auto add_vertex = [&](Color c, double x, double y) {
        col.push_back(c);
        pos.push_back({x, y});
        return n + static_cast<int>(col.size()) - 1;
    };
    auto yc = [](int r) { return -(r + 0.5); };
    auto xc = [](int c) { return c + 0.5; };

    // ports of every + cell: left, right, top, bottom
    struct Ports {
        int left = -1, right = -1, top = -1, bottom = -1;
    };
    std::map<std::pair<int, int>, Ports> ports;
    std::vector<int> corners;
    for (int r = 0; r < d.m; ++r)
        for (int c = 0; c < d.row_length(r); ++c) {
            if (!d.plus[r][c]) continue;
            bool left = false, above = false;
            for (int j = 0; j < c; ++j) left = left || d.plus[r][j];
            for (int i = 0; i < r; ++i) above = above || d.plus[i][c];
            Ports p;
            if (!left && !above) {
                int v = add_vertex(Color::empty, xc(c), yc(r));
                corners.push_back(v);
                p.right = p.bottom = v;
            } else if (left && !above) {
                int v = add_vertex(Color::empty, xc(c), yc(r));
                p.left = p.right = p.bottom = v;
            } else if (!left && above) {
                int v = add_vertex(Color::solid, xc(c), yc(r));
                p.top = p.bottom = p.right = v;
            } else {
                int w = add_vertex(Color::empty, xc(c) - 0.2, yc(r) - 0.2);
                int b = add_vertex(Color::solid, xc(c) + 0.2, yc(r) + 0.2);
                edges.push_back({w, b});
                p.left = p.bottom = w;
                p.top = p.right = b;
            }
            ports[{r, c}] = p;
        }
    for (int r = 0; r < d.m; ++r) {
        int lab = vertex_of_label(row_label(d, r));
        pos[lab] = {static_cast<double>(d.row_length(r)), yc(r)};
        int prev = -1;
        for (int c = 0; c < d.row_length(r); ++c) {
            if (!d.plus[r][c]) continue;
            const Ports& p = ports[{r, c}];
            if (prev >= 0) edges.push_back({prev, p.left});
            prev = p.right;
        }
        if (prev >= 0) edges.push_back({prev, lab});
        else edges.push_back({lab, add_vertex(Color::empty, d.row_length(r) - 0.3, yc(r))});
    }
    for (int c = 0; c < d.width; ++c) {
        int len = d.column_length(c);
        int lab = vertex_of_label(column_label(d, c));
        pos[lab] = {xc(c), -static_cast<double>(len)};
        int prev = -1;
        for (int r = 0; r < len; ++r) {
            if (!d.plus[r][c]) continue;
            const Ports& p = ports[{r, c}];
            if (prev >= 0) edges.push_back({prev, p.top});
            prev = p.bottom;
        }
        if (prev >= 0) edges.push_back({prev, lab});
        else edges.push_back({lab, add_vertex(Color::solid, xc(c), -len + 0.3)});
    }
    PlabicGraph g = plabic_from_drawing(n, pos, col, edges);
    // corners are bends, not vertices, unless they join two boundary vertices
    std::sort(corners.rbegin(), corners.rend());
    for (int v : corners) {
        try {
            g = delete_bivalent(g, v);
        } catch (const graph_error&) {
        }
    }
    return g;
}

LeDiagram tshift_le_recipe(const LeDiagram& d) {
    if (!validate_le(d)) throw le_error("not a Le diagram");
    if (d.m < 2) throw le_error("rank too small for a T-shift");
    // (1) drop all-zero columns together with their labels
    std::vector<int> keep;
    for (int c = 0; c < d.width; ++c) {
        bool any = false;
        for (int r = 0; r < d.column_length(c); ++r) any = any || d.plus[r][c];
        if (any) keep.push_back(c);
    }
    auto has = [&](int r, int c) { return c < d.row_length(r) && d.plus[r][c]; };
    auto plus_above = [&](int r, int c) {
        for (int i = 0; i < r; ++i)
            if (has(i, c)) return true;
        return false;
    };
    // (2)-(3) copy with a new leftmost column; column k of the copy is original keep[k-1]
    int w = static_cast<int>(keep.size()) + 1;
    std::vector<std::vector<int>> cp(d.m);  // -1 outside the shape
    for (int r = 0; r < d.m; ++r) {
        cp[r].push_back(0);
        for (int c : keep)
            if (c < d.row_length(r)) cp[r].push_back(has(r, c) ? 1 : 0);
    }
    auto copy_col = [&](int c) { return static_cast<int>(std::find(keep.begin(), keep.end(), c) - keep.begin()) + 1; };
    // (4) topmost + of each column becomes 0
    for (int r = 0; r < d.m; ++r)
        for (int c : keep)
            if (has(r, c) && !plus_above(r, c)) cp[r][copy_col(c)] = 0;
    std::vector<bool> newcol(d.m, false);
    // (5) rows of zeros
    for (int r = 0; r < d.m; ++r) {
        bool any = false;
        for (int c = 0; c < d.row_length(r); ++c) any = any || d.plus[r][c];
        if (any) continue;
        if (r > 0) {
            if (cp[r].size() == 1) newcol[r] = true;
            else cp[r].back() = 1;
        } else {
            newcol[1] = true;
        }
    }
    // (6) + with a + above: mark the nearest such entry to the left, or the new column
    for (int r = 0; r < d.m; ++r)
        for (int c : keep) {
            if (!has(r, c) || !plus_above(r, c)) continue;
            int found = -1;
            for (int j = c - 1; j >= 0 && found < 0; --j)
                if (std::find(keep.begin(), keep.end(), j) != keep.end() && plus_above(r, j)) found = j;
            if (found >= 0) cp[r][copy_col(found)] = 1;
            else newcol[r] = true;
        }
    // (7) new column
    for (int r = 0; r < d.m; ++r) cp[r][0] = newcol[r] ? 1 : 0;
    // (8) drop the top row
    LeDiagram out;
    out.m = d.m - 1;
    out.width = w;
    for (int r = 1; r < d.m; ++r) {
        std::vector<bool> row;
        for (int x : cp[r]) row.push_back(x == 1);
        out.plus.push_back(row);
    }
    // labels: the first vertical label moves to the new column, removed columns lose theirs
    std::map<int, int> col_lab;  // copy column -> label
    col_lab[0] = row_label(d, 0);
    for (size_t k = 0; k < keep.size(); ++k) col_lab[static_cast<int>(k) + 1] = column_label(d, keep[k]);
    std::vector<int> row_lab;
    for (int r = 1; r < d.m; ++r) row_lab.push_back(row_label(d, r));
    for (auto st : staircase(out)) out.labels.push_back(st.vertical ? row_lab[st.index] : col_lab[st.index]);
    return out;
}

LeDiagram tshift_le(const LeDiagram& d) {
    LeDiagram r = tshift_le_recipe(d);
    Bap want = tshift_bap(decorated_permutation(plabic_from_le(d)));
    if (validate_le(r) && decorated_permutation(plabic_from_le(r)).window() == want.window()) return r;
    // the recipe misses cases with zero rows and with topmost + entries below the first row;
    // the shape and labels it produces are right, and they pin the filling down uniquely
    std::vector<int> s = sorted_labels(r);
    int mi = static_cast<int>(std::lower_bound(s.begin(), s.end(), r.labels[0]) - s.begin()) + 1;
    LeDiagram out = le_from_bap(want, mi);
    for (int& l : out.labels) l = s[l - 1];
    if (out.labels != r.labels) throw le_error("T-shift labels disagree with the staircase");
    return out;
}

std::vector<LeDiagram> all_le_diagrams(int m, int n, int min_index) {
    std::vector<LeDiagram> out;
    int w = n - m;
    std::vector<int> lens(m);
    LeDiagram d;
    d.m = m;
    d.width = w;
    for (int k = 0; k < n; ++k) d.labels.push_back(mod1(min_index + k, n));
    // shapes, then fillings cell by cell with the Le condition checked on the fly
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == m) {
            out.push_back(d);
            return;
        }
        if (c == d.row_length(r)) {
            self(self, r + 1, 0);
            return;
        }
        for (bool p : {false, true}) {
            if (!p) {
                bool left = false, above = false;
                for (int j = 0; j < c; ++j) left = left || d.plus[r][j];
                for (int i = 0; i < r; ++i) above = above || d.plus[i][c];
                if (left && above) continue;
            }
            d.plus[r][c] = p;
            self(self, r, c + 1);
        }
    };
    auto shape = [&](auto&& self, int r, int maxlen) -> void {
        if (r == m) {
            d.plus.assign(m, {});
            for (int i = 0; i < m; ++i) d.plus[i].assign(lens[i], false);
            fill(fill, 0, 0);
            return;
        }
        for (int l = 0; l <= maxlen; ++l) {
            lens[r] = l;
            self(self, r + 1, l);
        }
    };
    shape(shape, 0, w);
    return out;
}

LeDiagram le_from_bap(const Bap& f, int min_index) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::map<std::vector<int>, LeDiagram>> cache;
    int m = f.m(), n = f.n();
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(m, n, min_index);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<std::vector<int>, LeDiagram> table;
        for (auto& d : all_le_diagrams(m, n, min_index)) table.emplace(decorated_permutation(plabic_from_le(d)).window(), d);
        it = cache.emplace(key, std::move(table)).first;
    }
    auto jt = it->second.find(f.window());
    if (jt == it->second.end()) throw le_error("no Le diagram realises this permutation");
    return jt->second;
}

}  // namespace pw

namespace pw {

Matrix sample_stratum_point(const Bap& f, Rng& rng) {
    PlabicGraph g = plabic_from_le(le_from_bap(f, 1));
    Matrix a = boundary_measurement(g, perfect_orientation(g, 1), 1, random_weights(g, rng));
    // a random change of basis and column torus, so that no minor is pinned to 1
    Matrix b;
    do {
        b = rng.matrix(a.rows(), a.rows(), 9);
    } while (det(b) == 0);
    a = b * a;
    for (int j = 0; j < a.cols(); ++j) {
        Rational t = rng.nonzero_rational(9);
        for (int i = 0; i < a.rows(); ++i) a(i, j) *= t;
    }
    if (!(bap_from_matrix(a) == f)) throw le_error("sampled point left the positroid cell");
    return a;
}

}  // namespace pw
