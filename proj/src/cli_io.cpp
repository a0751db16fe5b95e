#include "cli_io.hpp"

#include <cstdlib>

namespace pw {

namespace {

// nlohmann's own exceptions become parse errors
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw parse_error(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    return field(j, key).get<T>();
}

json ints(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }
std::set<int> int_set(const json& j) {
    auto v = j.get<std::vector<int>>();
    return std::set<int>(v.begin(), v.end());
}

const char* color_name(Color c) {
    switch (c) {
        case Color::solid: return "solid";
        case Color::empty: return "empty";
        default: return "boundary";
    }
}

Color color_from(const std::string& s) {
    if (s == "solid" || s == "black") return Color::solid;
    if (s == "empty" || s == "white") return Color::empty;
    throw parse_error("unknown vertex colour '" + s + "'");
}

const char* kind_name(NecklaceKind k) {
    switch (k) {
        case NecklaceKind::target: return "target";
        case NecklaceKind::source: return "source";
        default: return "general";
    }
}

NecklaceKind necklace_kind(const std::string& s) {
    if (s == "target") return NecklaceKind::target;
    if (s == "source") return NecklaceKind::source;
    if (s == "general") return NecklaceKind::general;
    throw parse_error("unknown necklace kind '" + s + "'");
}

const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::rotate: return "rotate";
        case MoveKind::commute: return "commute";
        default: return "braid";
    }
}

MoveKind move_kind(const std::string& s) {
    if (s == "rotate") return MoveKind::rotate;
    if (s == "commute") return MoveKind::commute;
    if (s == "braid") return MoveKind::braid;
    throw parse_error("unknown move '" + s + "'");
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (auto& q : v) a.push_back(to_json(q));
    return a;
}

std::vector<Rational> rationals_from(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array of rationals");
    std::vector<Rational> out;
    for (auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

json event_json(const BraidEvent& e) {
    if (e.crossing) return {{"letter", e.letter}};
    return {{"index", e.bp.index}, {"sign", e.bp.plus ? "+" : "-"}, {"height", e.bp.height}};
}

BraidEvent event_from(const json& j) {
    BraidEvent e{};
    if (j.contains("letter")) {
        e.crossing = true;
        e.letter = get<int>(j, "letter");
        return e;
    }
    e.crossing = false;
    std::string s = get<std::string>(j, "sign");
    if (s != "+" && s != "-") throw parse_error("base point sign must be + or -");
    e.bp = BasePoint{get<int>(j, "index"), s == "+", get<int>(j, "height")};
    return e;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw parse_error("rationals are strings \"p/q\" or integers");
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("a matrix is a nonempty array of rows");
    std::vector<Vec> rows;
    for (auto& r : j) rows.push_back(rationals_from(r));
    for (auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("ragged matrix");
    if (rows[0].empty()) throw parse_error("a matrix needs at least one column");
    return Matrix::from_rows(rows);
}

json to_json(const Bap& f) { return {{"window", f.window()}, {"n", f.n()}, {"m", f.m()}}; }

Bap bap_from_json(const json& j) {
    return guarded("bap", [&] {
        if (j.is_array()) return Bap(j.get<std::vector<int>>());
        return Bap(get<std::vector<int>>(j, "window"));
    });
}

json to_json(const Necklace& nk) {
    json st = json::array();
    for (auto& [x, fx] : nk.stacks()) st.push_back({x, fx});
    json entries = json::array();
    for (int a = 1; a <= nk.n(); ++a) entries.push_back(ints(nk.entry(a)));
    return {{"kind", kind_name(nk.kind())},
            {"window", nk.bap().window()},
            {"stacks", st},
            {"base_heights", ints(nk.heights(0))},
            {"entries", entries}};
}

Necklace necklace_from_json(const json& j) {
    return guarded("necklace", [&] {
        Bap f(get<std::vector<int>>(j, "window"));
        std::vector<Stack> st;
        for (auto& s : field(j, "stacks")) {
            auto p = s.get<std::vector<int>>();
            if (p.size() != 2) throw parse_error("a stack is a pair [x, f(x)]");
            st.emplace_back(p[0], p[1]);
        }
        return Necklace(necklace_kind(get<std::string>(j, "kind")), f, st, int_set(field(j, "base_heights")));
    });
}

json to_json(const Toggle& t) { return {{"at", t.a}, {"direction", t.left ? "left" : "right"}}; }

Toggle toggle_from_json(const json& j) {
    return guarded("toggle", [&] {
        std::string d = get<std::string>(j, "direction");
        if (d != "left" && d != "right") throw parse_error("toggle direction must be left or right");
        return Toggle{get<int>(j, "at"), d == "left"};
    });
}

json to_json(const LeDiagram& d) {
    json rows = json::array();
    for (auto& r : d.plus) {
        std::string s;
        for (bool p : r) s += p ? '+' : '0';
        rows.push_back(s);
    }
    return {{"m", d.m}, {"width", d.width}, {"rows", rows}, {"labels", d.labels}};
}

LeDiagram le_from_json(const json& j) {
    return guarded("le diagram", [&] {
        if (j.is_object() && j.contains("text")) return parse_le(get<std::string>(j, "text"));
        LeDiagram d;
        d.m = get<int>(j, "m");
        d.width = get<int>(j, "width");
        for (auto& r : field(j, "rows")) {
            std::vector<bool> row;
            for (char c : r.get<std::string>()) {
                if (c != '+' && c != '0') throw le_error("cells are + or 0");
                row.push_back(c == '+');
            }
            d.plus.push_back(row);
        }
        d.labels = get<std::vector<int>>(j, "labels");
        if (static_cast<int>(d.plus.size()) != d.m) throw le_error("one row per unit of rank expected");
        if (!validate_le(d)) throw le_error("not a Le diagram");
        return d;
    });
}

json to_json(const PlabicGraph& g) {
    json colors = json::array();
    for (Color c : g.internal_colors()) colors.push_back(color_name(c));
    json out = {{"n", g.n()}, {"colors", colors}, {"nbrs", g.all_nbrs()}};
    if (static_cast<int>(g.coords.size()) == g.vertex_count()) {
        json xy = json::array();
        for (auto& [x, y] : g.coords) xy.push_back({x, y});
        out["coords"] = xy;
    }
    return out;
}

PlabicGraph plabic_from_json(const json& j) {
    return guarded("plabic graph", [&] {
        std::vector<Color> cols;
        for (auto& c : field(j, "colors")) cols.push_back(color_from(c.get<std::string>()));
        PlabicGraph g(get<int>(j, "n"), cols, get<std::vector<std::vector<int>>>(j, "nbrs"));
        if (j.contains("coords")) {
            for (auto& p : j.at("coords")) {
                auto xy = p.get<std::vector<double>>();
                if (xy.size() != 2) throw parse_error("coordinates are pairs");
                g.coords.emplace_back(xy[0], xy[1]);
            }
            if (static_cast<int>(g.coords.size()) != g.vertex_count()) throw parse_error("one coordinate per vertex");
        }
        return g;
    });
}

bool same_graph(const PlabicGraph& a, const PlabicGraph& b) {
    return a.n() == b.n() && a.internal_colors() == b.internal_colors() && a.all_nbrs() == b.all_nbrs() &&
           a.coords == b.coords;
}

json to_json(const Quiver& q) {
    json fr = json::array();
    for (bool b : q.frozen) fr.push_back(b);
    return {{"eps", q.eps}, {"frozen", fr}, {"names", q.names}};
}

Quiver quiver_from_json(const json& j) {
    return guarded("quiver", [&] {
        Quiver q;
        q.eps = get<std::vector<std::vector<int>>>(j, "eps");
        q.frozen = get<std::vector<bool>>(j, "frozen");
        if (j.contains("names")) q.names = j.at("names").get<std::vector<std::string>>();
        int n = q.size();
        for (auto& r : q.eps)
            if (static_cast<int>(r.size()) != n) throw parse_error("eps must be square");
        if (static_cast<int>(q.frozen.size()) != n) throw parse_error("one frozen flag per vertex");
        if (!q.names.empty() && static_cast<int>(q.names.size()) != n) throw parse_error("one name per vertex");
        return q;
    });
}

json to_json(const PerfectOrientation& o) { return {{"dir", o.dir}, {"sources", ints(o.sources)}}; }

PerfectOrientation orientation_from_json(const json& j) {
    return guarded("orientation", [&] {
        return PerfectOrientation{get<std::vector<int>>(j, "dir"), int_set(field(j, "sources"))};
    });
}

json to_json(const BraidWord& w) { return {{"m", w.m}, {"letters", w.letters}}; }

BraidWord braid_from_json(const json& j) {
    return guarded("braid word", [&] {
        BraidWord w{get<int>(j, "m"), get<std::vector<int>>(j, "letters")};
        check_word(w);
        return w;
    });
}

json to_json(const W0Normal& w) {
    json mv = json::array();
    for (auto& m : w.moves) mv.push_back({{"kind", move_name(m.kind)}, {"pos", m.pos}});
    return {{"shift", w.shift}, {"moves", mv}, {"word", to_json(w.word)}, {"eta_length", w.eta_length()}};
}

W0Normal w0normal_from_json(const json& j) {
    return guarded("w0 normal form", [&] {
        W0Normal w;
        w.shift = get<int>(j, "shift");
        for (auto& m : field(j, "moves")) w.moves.push_back(WordMove{move_kind(get<std::string>(m, "kind")), get<int>(m, "pos")});
        w.word = braid_from_json(field(j, "word"));
        return w;
    });
}

json to_json(const Weave& w) {
    return {{"m", w.m},       {"color", w.color}, {"level", w.level},       {"ends", w.ends},
            {"rot", w.rot},   {"legs", w.legs},   {"top_face", w.top_face}};
}

Weave weave_from_json(const json& j) {
    return guarded("weave", [&] {
        Weave w;
        w.m = get<int>(j, "m");
        w.color = get<std::vector<int>>(j, "color");
        w.level = get<std::vector<int>>(j, "level");
        w.ends = get<std::vector<int>>(j, "ends");
        w.rot = get<std::vector<std::vector<int>>>(j, "rot");
        w.legs = get<std::vector<int>>(j, "legs");
        w.top_face = get<std::vector<int>>(j, "top_face");
        size_t e = w.color.size();
        if (w.level.size() != e || w.ends.size() != 2 * e || w.top_face.size() != e)
            throw parse_error("per-edge arrays disagree in length");
        return w;
    });
}

bool same_weave(const Weave& a, const Weave& b) {
    return a.m == b.m && a.color == b.color && a.level == b.level && a.ends == b.ends && a.rot == b.rot &&
           a.legs == b.legs && a.top_face == b.top_face;
}

json to_json(const Flag& f) { return to_json(f.adapted_basis()); }

Flag flag_from_json(const json& j) {
    Matrix u = matrix_from_json(j);
    if (u.rows() != u.cols() || det(u) == 0) throw degenerate_flag_error("a flag is given by an invertible basis");
    return Flag::from_basis(u);
}

json to_json(const FlagChain& c) {
    json fl = json::array();
    for (auto& f : c.flags) fl.push_back(to_json(f));
    return {{"word", to_json(c.word)}, {"flags", fl}};
}

FlagChain flag_chain_from_json(const json& j) {
    return guarded("flag chain", [&] {
        FlagChain c;
        c.word = braid_from_json(field(j, "word"));
        for (auto& f : field(j, "flags")) c.flags.push_back(flag_from_json(f));
        return c;
    });
}

json to_json(const DecoratedChain& c) {
    json ev = json::array(), st = json::array();
    for (auto& e : c.events) ev.push_back(event_json(e));
    for (auto& u : c.strips) st.push_back(to_json(u));
    return {{"bap", to_json(c.f)},   {"word", to_json(c.word)}, {"events", ev},
            {"sign", c.sign},        {"piece_start", c.piece_start}, {"strips", st}};
}

DecoratedChain decorated_chain_from_json(const json& j) {
    return guarded("decorated chain", [&] {
        DecoratedChain c;
        c.f = bap_from_json(field(j, "bap"));
        c.word = braid_from_json(field(j, "word"));
        for (auto& e : field(j, "events")) c.events.push_back(event_from(e));
        c.sign = get<std::vector<int>>(j, "sign");
        c.piece_start = get<std::vector<int>>(j, "piece_start");
        for (auto& u : field(j, "strips")) c.strips.push_back(matrix_from_json(u));
        return c;
    });
}

bool same_chain(const DecoratedChain& a, const DecoratedChain& b) {
    if (!(a.f == b.f) || !(a.word == b.word) || a.sign != b.sign || a.piece_start != b.piece_start ||
        a.strips != b.strips || a.events.size() != b.events.size())
        return false;
    for (size_t k = 0; k < a.events.size(); ++k) {
        auto &x = a.events[k], &y = b.events[k];
        if (x.crossing != y.crossing) return false;
        if (x.crossing ? x.letter != y.letter
                       : (x.bp.index != y.bp.index || x.bp.plus != y.bp.plus || x.bp.height != y.bp.height))
            return false;
    }
    return true;
}

json to_json(const Seed& s) {
    json lab = json::array(), src = json::array();
    for (auto& l : s.labels) lab.push_back(ints(l));
    for (bool b : s.source) src.push_back(b);
    return {{"quiver", to_json(s.q)}, {"labels", lab}, {"source", src}, {"values", rationals(s.values)}};
}

Seed seed_from_json(const json& j) {
    return guarded("seed", [&] {
        Seed s;
        s.q = quiver_from_json(field(j, "quiver"));
        for (auto& l : field(j, "labels")) s.labels.push_back(int_set(l));
        s.source = get<std::vector<bool>>(j, "source");
        s.values = rationals_from(field(j, "values"));
        size_t n = static_cast<size_t>(s.q.size());
        if (s.labels.size() != n || s.source.size() != n || s.values.size() != n)
            throw parse_error("seed arrays must match the quiver size");
        return s;
    });
}

json to_json(const DtSequence& d) { return {{"sequence", d.seq}, {"sigma", d.sigma}}; }

DtSequence dt_sequence_from_json(const json& j) {
    return guarded("dt sequence", [&] {
        return DtSequence{get<std::vector<int>>(j, "sequence"), get<std::vector<int>>(j, "sigma")};
    });
}

json to_json(const QuasiClusterData& d) { return {{"mu", d.mu}, {"N", d.n}}; }

QuasiClusterData quasi_data_from_json(const json& j) {
    return guarded("quasi-cluster data", [&] {
        return QuasiClusterData{get<std::vector<int>>(j, "mu"), get<std::vector<std::vector<int>>>(j, "N")};
    });
}

json to_json(const Monomial& m) {
    return {{"found", m.found}, {"sign", m.sign}, {"exponents", rationals(m.exponents)}, {"solved_from", m.solved_from}};
}

Monomial monomial_from_json(const json& j) {
    return guarded("monomial", [&] {
        Monomial m;
        m.found = get<bool>(j, "found");
        m.sign = get<int>(j, "sign");
        m.exponents = rationals_from(field(j, "exponents"));
        m.solved_from = get<int>(j, "solved_from");
        return m;
    });
}

json to_json(const TwistReport& r) {
    json mons = json::array();
    for (auto& m : r.face_monomials) mons.push_back(to_json(m));
    return {{"passed", r.passed()},
            {"frozen_inverted", r.frozen_inverted},
            {"sequence_found", r.sequence_found},
            {"inconclusive", r.inconclusive},
            {"dt", to_json(r.dt)},
            {"face_monomials", mons},
            {"monomials_constant", r.monomials_constant},
            {"quasi_cluster", r.quasi_cluster},
            {"data", to_json(r.data)},
            {"points", r.points}};
}

TwistReport twist_report_from_json(const json& j) {
    return guarded("twist report", [&] {
        TwistReport r;
        r.frozen_inverted = get<bool>(j, "frozen_inverted");
        r.sequence_found = get<bool>(j, "sequence_found");
        r.inconclusive = get<bool>(j, "inconclusive");
        r.dt = dt_sequence_from_json(field(j, "dt"));
        for (auto& m : field(j, "face_monomials")) r.face_monomials.push_back(monomial_from_json(m));
        r.monomials_constant = get<bool>(j, "monomials_constant");
        r.quasi_cluster = get<bool>(j, "quasi_cluster");
        r.data = quasi_data_from_json(field(j, "data"));
        r.points = get<int>(j, "points");
        return r;
    });
}

json to_json(const QuasiReport& r) {
    json mons = json::array();
    for (auto& m : r.face_monomials) mons.push_back(to_json(m));
    return {{"passed", r.passed()}, {"face_monomials", mons}, {"monomials_constant", r.monomials_constant}, {"points", r.points}};
}

QuasiReport quasi_report_from_json(const json& j) {
    return guarded("quasi report", [&] {
        QuasiReport r;
        for (auto& m : field(j, "face_monomials")) r.face_monomials.push_back(monomial_from_json(m));
        r.monomials_constant = get<bool>(j, "monomials_constant");
        r.points = get<int>(j, "points");
        return r;
    });
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

int default_search_depth() {
    const char* s = std::getenv("PW_SEARCH_DEPTH");
    if (!s) return 12;
    char* end = nullptr;
    long d = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || d <= 0 || d > 64) return 12;
    return static_cast<int>(d);
}

}  // namespace pw
