#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "plabic_graph.hpp"

using namespace pw;

static std::set<int> digits_of(const std::string& s) {
    std::set<int> out;
    for (char c : s) out.insert(c - '0');
    return out;
}

static void check_boundary_labels(const PlabicGraph& g) {
    Bap f = decorated_permutation(g);
    auto t = face_labels(g, LabelKind::target);
    auto s = face_labels(g, LabelKind::source);
    Necklace tn = target_necklace(f), sn = source_necklace(f);
    for (int i = 1; i <= g.n(); ++i) {
        CHECK(t[g.boundary_face(i)] == tn.entry(i + 1));
        CHECK(s[g.boundary_face(i)] == sn.entry(i));
    }
    for (int fc : g.interior_faces()) {
        CHECK(static_cast<int>(t[fc].size()) == f.m());
        CHECK(static_cast<int>(s[fc].size()) == f.m());
    }
}

// star graph: one internal vertex joined to every boundary vertex
static PlabicGraph star(int n, Color c) {
    std::vector<std::vector<int>> nb(n + 1);
    for (int i = 0; i < n; ++i) {
        nb[i] = {n};
        nb[n].push_back(i);  // boundary order is clockwise, so is this list
    }
    return PlabicGraph(n, {c}, nb);
}

static int three_cycles_through(const Quiver& q, int v) {
    int c = 0;
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            if (q.eps[v][a] > 0 && q.eps[a][b] > 0 && q.eps[b][v] > 0) ++c;
    return c;
}

static int center_face(const PlabicGraph& g) {
    for (int f : g.interior_faces())
        if (!g.is_boundary_face(f)) return f;
    return -1;
}

TEST_CASE("Gr(2,4) square") {
    PlabicGraph g = gr24_square();
    Bap f = decorated_permutation(g);
    CHECK(f.window() == std::vector<int>{3, 4, 5, 6});
    check_boundary_labels(g);
    auto t = face_labels(g, LabelKind::target);
    int c = center_face(g);
    CHECK(t[c] == std::set<int>{1, 3});
    CHECK(g.interior_faces().size() == 5);
    CHECK(g.face_cycle(c).size() == 4);
}

TEST_CASE("lollipops") {
    PlabicGraph g = lollipop_graph({true, false, true, false});
    Bap f = decorated_permutation(g);
    CHECK(f.window() == std::vector<int>{1, 6, 3, 8});
    check_boundary_labels(g);
    Quiver q = quiver(g);
    for (auto& row : q.eps)
        for (int x : row) CHECK(x == 0);
    for (bool fr : q.frozen) CHECK(fr);
}

TEST_CASE("star graphs") {
    for (int n = 3; n <= 6; ++n) {
        Bap e = decorated_permutation(star(n, Color::empty));
        Bap s = decorated_permutation(star(n, Color::solid));
        CHECK(e.m() + s.m() == n);
        CHECK((e.m() == 1 || e.m() == n - 1));
        check_boundary_labels(star(n, Color::empty));
        check_boundary_labels(star(n, Color::solid));
    }
}

TEST_CASE("Gr(2,4) quiver") {
    PlabicGraph g = gr24_square();
    Quiver q = quiver(g);
    CHECK(q.size() == 5);
    CHECK(q.mutable_count() == 1);
    int c = -1;
    for (int k = 0; k < q.size(); ++k)
        if (!q.frozen[k]) c = k;
    int in = 0, out = 0;
    for (int k = 0; k < q.size(); ++k) {
        CHECK(q.eps[k][c] == -q.eps[c][k]);
        if (q.eps[c][k] > 0) out += q.eps[c][k];
        if (q.eps[c][k] < 0) in -= q.eps[c][k];
    }
    CHECK(in == 2);
    CHECK(out == 2);
    CHECK(three_cycles_through(q, c) == 2);
}

TEST_CASE("Gr(3,6) hexagonal graph") {
    PlabicGraph g = gr36_hexagonal();
    CHECK(decorated_permutation(g).window() == std::vector<int>{4, 5, 6, 7, 8, 9});
    check_boundary_labels(g);
    auto t = face_labels(g, LabelKind::target);
    Quiver q = quiver(g);
    CHECK(q.mutable_count() == 4);
    auto faces = g.interior_faces();
    int hex = -1;
    for (size_t k = 0; k < faces.size(); ++k)
        if (g.face_cycle(faces[k]).size() == 6) hex = static_cast<int>(k);
    REQUIRE(hex >= 0);
    CHECK(t[faces[hex]] == digits_of("135"));
    int nonzero = 0, to_frozen = 0, to_mutable = 0;
    for (int k = 0; k < q.size(); ++k) {
        if (q.eps[hex][k] == 0) continue;
        ++nonzero;
        CHECK(std::abs(q.eps[hex][k]) == 1);
        (q.frozen[k] ? to_frozen : to_mutable)++;
    }
    CHECK(nonzero == 6);
    CHECK(to_frozen == 3);
    CHECK(to_mutable == 3);
}

TEST_CASE("moves keep the permutation") {
    PlabicGraph g = gr24_square();
    Bap f = decorated_permutation(g);
    int c = center_face(g);
    REQUIRE(is_square_face(g, c));
    PlabicGraph h = square_move(g, c);
    CHECK(decorated_permutation(h).window() == f.window());
    CHECK(face_labels(h, LabelKind::target)[center_face(h)] == std::set<int>{2, 4});
    check_boundary_labels(h);
    PlabicGraph back = square_move(h, center_face(h));
    CHECK(face_labels(back, LabelKind::target)[center_face(back)] == std::set<int>{1, 3});

    // bivalent insertion and deletion
    PlabicGraph hex = gr36_hexagonal();
    auto lab0 = face_labels(hex, LabelKind::target);
    std::multiset<std::set<int>> labels0(lab0.begin(), lab0.end());
    for (int e = 0; e < hex.edge_count(); ++e) {
        if (hex.is_arc(e)) continue;
        for (Color col : {Color::solid, Color::empty}) {
            PlabicGraph b = insert_bivalent(hex, e, col);
            CHECK(decorated_permutation(b).window() == decorated_permutation(hex).window());
            auto lab = face_labels(b, LabelKind::target);
            CHECK(std::multiset<std::set<int>>(lab.begin(), lab.end()) == labels0);
            PlabicGraph d = delete_bivalent(b, b.vertex_count() - 1);
            CHECK(d.all_nbrs() == hex.all_nbrs());
        }
    }
    // split then contract
    for (int v = hex.n(); v < hex.vertex_count(); ++v)
        for (int st = 0; st < 3; ++st) {
            PlabicGraph s = split_vertex(hex, v, st, 2);
            CHECK(decorated_permutation(s).window() == decorated_permutation(hex).window());
            auto lab = face_labels(s, LabelKind::target);
            CHECK(std::multiset<std::set<int>>(lab.begin(), lab.end()) == labels0);
            PlabicGraph back2 = contract_edge(s, s.edge_between(v, s.vertex_count() - 1));
            CHECK(decorated_permutation(back2).window() == decorated_permutation(hex).window());
            CHECK(back2.face_count() == hex.face_count());
        }
    CHECK_THROWS_AS(contract_edge(hex, hex.edge_between(0, 12)), graph_error);  // edge at the boundary
    CHECK_THROWS_AS(contract_edge(hex, hex.edge_between(6, 7)), graph_error);   // colours differ
    CHECK_THROWS_AS(square_move(hex, hex.outer_face()), graph_error);
}

TEST_CASE("make_trivalent") {
    for (int n = 4; n <= 6; ++n)
        for (Color c : {Color::solid, Color::empty}) {
            PlabicGraph s = star(n, c);
            PlabicGraph t = make_trivalent(s);
            CHECK(is_trivalent(t));
            CHECK(decorated_permutation(t).window() == decorated_permutation(s).window());
            check_boundary_labels(t);
            CHECK(t.vertex_count() == s.vertex_count() + n - 3);
        }
    PlabicGraph b = insert_bivalent(gr24_square(), 8, Color::solid);
    CHECK_FALSE(is_trivalent(b));
    CHECK(is_trivalent(make_trivalent(b)));
}

TEST_CASE("perfect orientations") {
    for (const PlabicGraph& g : {gr24_square(), gr36_hexagonal(), make_trivalent(star(5, Color::empty))}) {
        Bap f = decorated_permutation(g);
        Necklace t = target_necklace(f);
        for (int i = 1; i <= g.n(); ++i) {
            PerfectOrientation o = perfect_orientation(g, i);
            CHECK(o.sources == t.entry(i));
            CHECK(is_acyclic(g, o));
            CHECK(is_perfect(g, o));
            CHECK(unique_sink_property(g, o));
        }
    }
    CHECK(perfect_orientation(gr24_square(), 1).sources == std::set<int>{1, 2});
}

static void check_measurement(const PlabicGraph& g, int samples, std::uint64_t seed) {
    Bap f = decorated_permutation(g);
    Necklace t = target_necklace(f);
    Rng rng(seed);
    int n = g.n(), m = f.m();
    for (int s = 0; s < samples; ++s) {
        int i = 1 + s % n;
        PerfectOrientation o = perfect_orientation(g, i);
        Matrix a = boundary_measurement(g, o, i, random_weights(g, rng));
        CHECK(bap_from_matrix(a).window() == f.window());
        auto src = sort_cyclic(std::vector<int>(o.sources.begin(), o.sources.end()), i, n);
        for (int r = 0; r < m; ++r)
            for (int j : src) CHECK(a(r, j - 1) == (j == src[r] ? 1 : 0));
        for (auto& j : oracle::subsets(n, m)) {
            Rational d = oracle::minor_det(a, j);
            CHECK((d != 0) == oh_membership(t, std::set<int>(j.begin(), j.end())));
            if (i == 1) CHECK(d >= 0);  // sources in the usual order give a nonnegative point
        }
    }
}

TEST_CASE("boundary measurement") {
    PlabicGraph g = gr24_square();
    PerfectOrientation o = perfect_orientation(g, 1);
    Matrix a = boundary_measurement(g, o, 1, std::vector<Rational>(g.edge_count(), Rational(1)));
    CHECK(bap_from_matrix(a).window() == std::vector<int>{3, 4, 5, 6});
    check_measurement(g, 100, 7);
    check_measurement(gr36_hexagonal(), 30, 8);
    check_measurement(make_trivalent(star(5, Color::solid)), 20, 9);
    check_measurement(lollipop_graph({true, false, false}), 3, 10);
}

TEST_CASE("malformed rotation systems") {
    PlabicGraph g = gr24_square();
    auto nb = g.all_nbrs();
    auto col = g.internal_colors();
    std::swap(nb[4][1], nb[4][2]);
    CHECK_THROWS_AS(PlabicGraph(4, col, nb), graph_error);
    auto nb2 = g.all_nbrs();
    nb2[0].push_back(6);
    CHECK_THROWS_AS(PlabicGraph(4, col, nb2), graph_error);
    CHECK(render_plabic_svg(g).find("<svg") == 0);
}
