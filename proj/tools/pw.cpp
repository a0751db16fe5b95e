// pw: command-line front end. Every subcommand reads one JSON document (file, inline or
// stdin) and writes JSON to stdout; diagrams go to files given with --out.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "acceptance.hpp"
#include "cli_io.hpp"

using namespace pw;

namespace {

struct Input {
    std::string path = "-";
    std::string inline_json;

    std::string text() const {
        if (!inline_json.empty()) return inline_json;
        std::ostringstream s;
        if (path == "-") {
            s << std::cin.rdbuf();
        } else {
            std::ifstream in(path);
            if (!in) throw parse_error("cannot read '" + path + "'");
            s << in.rdbuf();
        }
        return s.str();
    }
    json load() const {
        std::string t = text();
        try {
            return json::parse(t);
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("input is not JSON: ") + e.what());
        }
    }
};

void add_input(CLI::App* c, Input& in) {
    c->add_option("-i,--input", in.path, "input file, - for stdin")->capture_default_str();
    c->add_option("-j,--json", in.inline_json, "inline JSON input");
}

// JSON first; Le diagrams may also come in the plain text format
LeDiagram load_le(const Input& in) {
    std::string t = in.text();
    json j;
    try {
        j = json::parse(t);
    } catch (const json::parse_error&) {
        return parse_le(t);
    }
    return le_from_json(j);
}

// a graph object, a Le diagram, a permutation (its Le graph), or one of the names gr24, gr36
PlabicGraph load_graph(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "gr24") return gr24_square();
        if (s == "gr36") return gr36_hexagonal();
        throw parse_error("unknown built-in graph '" + s + "'");
    }
    if (j.is_object() && j.contains("nbrs")) return plabic_from_json(j);
    if (j.is_object() && (j.contains("rows") || j.contains("text"))) return plabic_from_le(le_from_json(j));
    return plabic_from_le(le_from_bap(bap_from_json(j), 1));
}

Necklace load_necklace(const json& j) {
    if (j.is_object() && j.contains("stacks")) return necklace_from_json(j);
    return target_necklace(bap_from_json(j));
}

BraidWord load_word(const json& j) {
    if (j.is_object() && j.contains("letters")) return braid_from_json(j);
    return beta_from_positroid(bap_from_json(j));
}

// {"matrix": ..., "bap": ...} or a bare matrix; the permutation defaults to that of the matrix
void load_point(const json& j, Matrix& v, Bap& f) {
    if (j.is_object()) {
        if (!j.contains("matrix")) throw parse_error("missing field 'matrix'");
        v = matrix_from_json(j.at("matrix"));
        f = j.contains("bap") ? bap_from_json(j.at("bap")) : bap_from_matrix(v);
    } else {
        v = matrix_from_json(j);
        f = bap_from_matrix(v);
    }
    if (v.cols() != f.n() || v.rows() != f.m()) throw shape_error("matrix shape does not match the permutation");
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << body;
}

std::vector<Matrix> sample_points(const Bap& f, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Matrix> pts;
    for (int k = 0; k < count; ++k) pts.push_back(sample_stratum_point(f, rng));
    return pts;
}

void check_format(const std::string& fmt) {
    if (fmt == "tikz") throw pw_error("unsupported-format", "TikZ output is not implemented; use svg");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positroid weaves, flag moduli and twists"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::function<json()> action;
    int exit_code = 0;

    Input in;
    std::uint64_t seed = 1;
    int count = 10;
    int at = 1;
    bool right = false;
    std::string out_path, kind = "target", format = "svg";
    int depth = default_search_depth();
    bool text = false;
    bool compact = false;
    app.add_flag("--compact", compact, "single-line JSON");

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<json()> f) {
        CLI::App* c = parent->add_subcommand(name, help);
        add_input(c, in);
        c->callback([&action, f] { action = f; });
        return c;
    };
    auto with_seed = [&](CLI::App* c) { c->add_option("--seed", seed, "RNG seed")->capture_default_str(); };
    auto with_out = [&](CLI::App* c) {
        c->add_option("-o,--out", out_path, "diagram file");
        c->add_option("--format", format, "svg or tikz")->capture_default_str();
    };

    // positroid
    auto* pos = app.add_subcommand("positroid", "positroid of a matrix")->require_subcommand(1);
    leaf(pos, "from-matrix", "permutation and necklaces of a matrix", [&] {
        Bap f = bap_from_matrix(matrix_from_json(in.load()));
        return json{{"bap", to_json(f)}, {"target_necklace", to_json(target_necklace(f))}, {"source_necklace", to_json(source_necklace(f))}};
    });

    // necklace
    auto* nk = app.add_subcommand("necklace", "Grassmann necklaces and toggles")->require_subcommand(1);
    auto* nk_show = leaf(nk, "show", "target or source necklace of a permutation", [&] {
        Bap f = bap_from_json(in.load());
        if (kind != "target" && kind != "source") throw parse_error("--kind is target or source");
        return to_json(kind == "target" ? target_necklace(f) : source_necklace(f));
    });
    nk_show->add_option("--kind", kind, "target or source")->capture_default_str();
    auto* nk_toggle = leaf(nk, "toggle", "toggle a necklace at a position", [&] {
        return to_json(toggle_necklace(load_necklace(in.load()), at, !right));
    });
    nk_toggle->add_option("--at", at, "position a")->required();
    nk_toggle->add_flag("--right", right, "rightward toggle");
    leaf(nk, "to-source", "leftward toggles from the target to the minimal necklace", [&] {
        Necklace start = load_necklace(in.load());
        auto seq = toggles_to_source(start);
        json t = json::array();
        for (auto& x : seq) t.push_back(to_json(x));
        return json{{"toggles", t}, {"steps", seq.size()}, {"necklace", to_json(apply_toggles(start, seq))}};
    });

    // le
    auto* le = app.add_subcommand("le", "Le diagrams")->require_subcommand(1);
    leaf(le, "validate", "check the Le condition", [&] {
        try {
            LeDiagram d = load_le(in);
            return json{{"valid", true}, {"bap", to_json(decorated_permutation(plabic_from_le(d)))}};
        } catch (const le_error& e) {
            exit_code = 1;
            return json{{"valid", false}, {"message", e.what()}};
        }
    });
    auto* le_plabic = leaf(le, "to-plabic", "Le graph", [&] {
        check_format(format);
        PlabicGraph g = plabic_from_le(load_le(in));
        if (!out_path.empty()) write_file(out_path, render_plabic_svg(g));
        return to_json(g);
    });
    with_out(le_plabic);
    bool literal = false;
    auto* le_t = leaf(le, "tshift", "T-shift of a Le diagram", [&] {
        LeDiagram d = load_le(in);
        return to_json(literal ? tshift_le_recipe(d) : tshift_le(d));
    });
    le_t->add_flag("--literal", literal, "the literal eight-step recipe, unchecked");
    auto* le_fb = leaf(le, "from-bap", "Le diagram of a permutation", [&] {
        return to_json(le_from_bap(bap_from_json(in.load()), at));
    });
    le_fb->add_option("--min-index", at, "first staircase label")->capture_default_str();

    // plabic
    auto* pl = app.add_subcommand("plabic", "plabic graphs")->require_subcommand(1);
    leaf(pl, "permutation", "decorated permutation", [&] { return to_json(decorated_permutation(load_graph(in.load()))); });
    leaf(pl, "faces", "target and source face labels", [&] {
        PlabicGraph g = load_graph(in.load());
        auto t = face_labels(g, LabelKind::target), s = face_labels(g, LabelKind::source);
        json faces = json::array();
        for (int f : g.interior_faces())
            faces.push_back({{"face", f},
                             {"boundary", g.is_boundary_face(f)},
                             {"target", std::vector<int>(t[f].begin(), t[f].end())},
                             {"source", std::vector<int>(s[f].begin(), s[f].end())}});
        return faces;
    });
    leaf(pl, "quiver", "quiver on the faces", [&] { return to_json(quiver(load_graph(in.load()))); });
    auto* pl_or = leaf(pl, "orient", "perfect orientation O_i", [&] {
        PlabicGraph g = load_graph(in.load());
        PerfectOrientation o = perfect_orientation(g, at);
        json j = to_json(o);
        j["perfect"] = is_perfect(g, o);
        j["acyclic"] = is_acyclic(g, o);
        j["unique_sink"] = unique_sink_property(g, o);
        return j;
    });
    pl_or->add_option("--at", at, "boundary index i")->capture_default_str();
    auto* pl_sample = leaf(pl, "sample", "random points of the stratum", [&] {
        Bap f = decorated_permutation(load_graph(in.load()));
        json pts = json::array();
        for (auto& v : sample_points(f, count, seed)) pts.push_back(to_json(v));
        return json{{"bap", to_json(f)}, {"seed", seed}, {"points", pts}};
    });
    with_seed(pl_sample);
    pl_sample->add_option("--count", count, "number of points")->capture_default_str();

    // braid
    auto* br = app.add_subcommand("braid", "braid words")->require_subcommand(1);
    leaf(br, "word", "positroid braid words", [&] {
        Bap f = bap_from_json(in.load());
        return json{{"beta", to_json(beta_from_positroid(f))}, {"delta", to_json(delta_from_positroid(f))}};
    });
    auto* br_grid = leaf(br, "grid", "grid pattern of a permutation", [&] {
        check_format(format);
        GridPattern gp = grid_pattern(bap_from_json(in.load()));
        if (!out_path.empty()) write_file(out_path, render_grid_svg(gp));
        json slices = json::array();
        for (int i = 0; i < gp.n(); ++i) {
            auto s = gp.slice(i);
            slices.push_back(std::vector<int>(s.begin(), s.end()));
        }
        return json{{"necklace", to_json(gp.nk)}, {"slices", slices}};
    });
    with_out(br_grid);
    leaf(br, "downshift", "downshift of a word (or of the braid of a permutation)", [&] {
        return to_json(downshift(load_word(in.load())));
    });
    leaf(br, "normalize-w0", "braid and rotation moves to a word ending in w0", [&] {
        return to_json(normalize_w0(load_word(in.load())));
    });

    // weave
    auto* wv = app.add_subcommand("weave", "weaves from T-shift towers")->require_subcommand(1);
    auto weave_of = [&](PlabicGraph& g) {
        g = make_trivalent(load_graph(in.load()));
        return assemble_weave(tower(g));
    };
    leaf(wv, "build", "assemble the weave", [&] {
        PlabicGraph g;
        Weave w = weave_of(g);
        return json{{"weave", to_json(w)}, {"valid", validate_weave(w)}};
    });
    leaf(wv, "boundary", "braid word read along the boundary", [&] {
        PlabicGraph g;
        return to_json(boundary_word(weave_of(g)));
    });
    leaf(wv, "quiver", "intersection quiver of the Y-trees", [&] {
        PlabicGraph g;
        Weave w = weave_of(g);
        return to_json(quiver_from_weave(w, g));
    });
    auto* wv_r = leaf(wv, "render", "draw the weave", [&] {
        check_format(format);
        PlabicGraph g;
        std::string svg = render_weave_svg(weave_of(g));
        if (out_path.empty()) throw parse_error("render needs --out");
        write_file(out_path, svg);
        return json{{"written", out_path}};
    });
    with_out(wv_r);

    // flags
    auto* fl = app.add_subcommand("flags", "decorated flag chains")->require_subcommand(1);
    leaf(fl, "phi", "chain of a stratum point (loops deleted first)", [&] {
        Matrix v, vs;
        Bap f, fs;
        load_point(in.load(), v, f);
        strip_loops(v, f, vs, fs);
        return to_json(phi(vs, fs));
    });
    leaf(fl, "psi", "stratum point of a chain", [&] { return to_json(psi(decorated_chain_from_json(in.load()))); });
    leaf(fl, "dt", "DT transformation of a chain", [&] { return to_json(dt_chain(decorated_chain_from_json(in.load()))); });

    // twist
    auto* tw = app.add_subcommand("twist", "twist maps and their cluster checks")->require_subcommand(1);
    leaf(tw, "apply", "right twist", [&] {
        Matrix v;
        Bap f;
        load_point(in.load(), v, f);
        return to_json(twist_right(v, f));
    });
    leaf(tw, "left", "left twist", [&] {
        Matrix v;
        Bap f;
        load_point(in.load(), v, f);
        return to_json(twist_left(v, f));
    });
    auto* tw_dt = leaf(tw, "verify-dt", "the twist against a reddening sequence", [&] {
        PlabicGraph g = load_graph(in.load());
        return to_json(verify_twist_is_dt(g, sample_points(decorated_permutation(g), count, seed), depth));
    });
    auto* tw_q = leaf(tw, "verify-quasi", "source seed against the target seed", [&] {
        PlabicGraph g = load_graph(in.load());
        return to_json(verify_source_target_quasi(g, sample_points(decorated_permutation(g), count, seed)));
    });
    for (auto* c : {tw_dt, tw_q}) {
        with_seed(c);
        c->add_option("--points", count, "number of sample points")->capture_default_str();
    }
    tw_dt->add_option("--depth", depth, "search depth (PW_SEARCH_DEPTH)")->capture_default_str();

    // suite
    auto* su = app.add_subcommand("suite", "test suites")->require_subcommand(1);
    auto* acc = su->add_subcommand("acceptance", "run the acceptance criteria");
    with_seed(acc);
    acc->add_option("--depth", depth, "search depth (PW_SEARCH_DEPTH)")->capture_default_str();
    acc->add_flag("--text", text, "one line per criterion instead of JSON");
    acc->callback([&] {
        action = [&] {
            auto rs = run_acceptance(seed, depth);
            bool ok = true;
            json crit = json::array();
            for (auto& r : rs) {
                ok = ok && r.passed();
                crit.push_back(to_json(r));
                if (text) std::cout << summary_line(r) << "\n";
            }
            if (!ok) exit_code = 1;
            return text ? json() : json{{"passed", ok}, {"seed", seed}, {"criteria", crit}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("usage", e.what()).dump(compact ? -1 : 2) << "\n";
        return 2;
    }

    try {
        json out = action();
        if (!out.is_null()) std::cout << out.dump(compact ? -1 : 2) << "\n";
        return exit_code;
    } catch (const pw_error& e) {
        std::cout << error_json(e.kind(), e.what()).dump(compact ? -1 : 2) << "\n";
    } catch (const json::exception& e) {
        std::cout << error_json("parse", e.what()).dump(compact ? -1 : 2) << "\n";
    } catch (const std::exception& e) {
        std::cout << error_json("internal", e.what()).dump(compact ? -1 : 2) << "\n";
    }
    return 1;
}
