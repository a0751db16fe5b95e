#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "braid_words.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace pw;

static const std::vector<std::pair<int, int>> small_shapes = {{1, 3}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}};

// b_i straight from the necklace entries, written without pattern heights
static std::vector<int> b_counts(const Bap& f) {
    std::vector<int> b;
    int n = f.n();
    Necklace t = target_necklace(f);
    for (int i = 1; i <= n; ++i) {
        if (f.loop(i - 1)) {
            b.push_back(0);
            continue;
        }
        std::set<int> e = t.entry(i);
        std::vector<int> sorted = sort_cyclic(std::vector<int>(e.begin(), e.end()), i, n);
        int p = f.pi(i - 1), c = 0;
        for (int a : sorted) {
            if (a == p) break;
            ++c;
        }
        b.push_back(c);
    }
    return b;
}

TEST_CASE("worked example word is cyclically the anchored one") {
    Bap f(fixture::example_window);
    BraidWord b = beta_from_positroid(f);
    CHECK(b.m == 4);
    CHECK(b.letters == fixture::example_beta);
    CHECK(cyclically_equal(b.letters, fixture::example_beta_anchored));
}

TEST_CASE("Gr(2,4) top cell and m = 1") {
    Bap f({3, 4, 5, 6});
    CHECK(beta_from_positroid(f).letters == std::vector<int>{1, 1, 1, 1});
    CHECK(delta_from_positroid(f).letters == std::vector<int>{1, 1, 1, 1});
    Bap g({2, 3, 4});
    CHECK(beta_from_positroid(g).letters.empty());
    CHECK(delta_from_positroid(g).letters.empty());
}

TEST_CASE("pieces agree with necklace patterns and b_i") {
    for (auto [k, n] : small_shapes)
        for (auto& w : oracle::bap_windows(k, n)) {
            Bap f(w);
            auto bp = beta_pieces(f);
            auto b = b_counts(f);
            for (int i = 1; i <= n; ++i) {
                REQUIRE(static_cast<int>(bp[i - 1].size()) == b[i - 1]);
                for (int t = 0; t < b[i - 1]; ++t) CHECK(bp[i - 1][t] == k - 1 - t);
            }
            Necklace tn = target_necklace(f), sn = source_necklace(f);
            auto tp = pattern_pieces(tn), sp = pattern_pieces(sn);
            auto dp = delta_pieces(f);
            for (int i = 1; i <= n; ++i) {
                CHECK(tp[i - 1] == bp[i - 1]);  // between slices i-1 and i
                CHECK(sp[i - 1] == dp[i - 1]);
                if (f.loop(i)) CHECK(dp[i - 1].empty());
            }
        }
}

TEST_CASE("beta and delta have the same Demazure product") {
    for (auto [k, n] : small_shapes)
        for (auto& w : oracle::bap_windows(k, n)) {
            Bap f(w);
            BraidWord b = beta_from_positroid(f), d = delta_from_positroid(f);
            Perm db = demazure_product(b);
            CHECK(db == demazure_product(d));
            if (b.letters.size() <= 12) CHECK(db == oracle::subword_max(b.letters, k));
        }
}

TEST_CASE("pattern words are invariant along the toggle path up to moves") {
    // every intermediate necklace gives a word with the same Demazure product and length
    Bap f(fixture::example_window);
    Necklace nk = target_necklace(f);
    Perm d0 = demazure_product(pattern_word(nk));
    size_t len = pattern_word(nk).letters.size();
    for (auto& t : toggles_to_source(target_necklace(f))) {
        nk = toggle_necklace(nk, t.a, t.left);
        BraidWord w = pattern_word(nk);
        CHECK(w.letters.size() == len);
        CHECK(demazure_product(w) == d0);
    }
    // the endpoint is a rotation of the source necklace
    CHECK(cyclically_equal(pattern_word(nk).letters, delta_from_positroid(f).letters));
}

TEST_CASE("grid slices match necklace entries") {
    for (auto [k, n] : small_shapes)
        for (auto& w : oracle::bap_windows(k, n)) {
            Bap f(w);
            GridPattern gp = grid_pattern(f);
            Necklace t = target_necklace(f);
            for (int i = 0; i <= n; ++i) {
                std::set<int> res;
                for (int h : gp.slice(i)) res.insert(mod1(h, n));
                CHECK(res == t.entry(i));
            }
        }
    Bap f(fixture::example_window);
    GridPattern gp = grid_pattern(f);
    std::set<int> r;
    for (int h : gp.slice(1)) r.insert(mod1(h, 7));
    CHECK(r == std::set<int>{1, 2, 4, 6});
}

TEST_CASE("grid toggles at 1 and 7") {
    Bap f(fixture::example_window);
    GridPattern gp = grid_toggle(grid_toggle(grid_pattern(f), 1, true), 7, true);
    const auto& line = fixture::toggle_lines[2];
    for (int a = 0; a < 7; ++a) {
        CHECK(gp.chord(a).first == line.stacks[a].first);
        CHECK(gp.chord(a).second == line.stacks[a].second);
    }
    for (int i = 1; i <= 7; ++i) {
        std::set<int> r;
        for (int h : gp.slice(i)) r.insert(mod1(h, 7));
        std::set<int> want;
        for (char c : line.entries[i % 7]) want.insert(c - '0');
        CHECK(r == want);
    }
    GridPattern back = grid_toggle(grid_toggle(gp, 7, false), 1, false);
    CHECK(back.nk == grid_pattern(f).nk);
    CHECK_THROWS_AS(grid_toggle(grid_pattern(f), 2, true), toggle_error);
    std::string svg = render_grid_svg(gp);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("downshift matches the shifted positroid") {
    Bap f(fixture::example_window);
    // loop at 5 removed, then f(i-1) on the six remaining labels, computed by hand
    Bap g({5, 3, 8, 7, 6, 10});
    CHECK(tshift_bap(f).window() == g.window());
    CHECK(g.m() == 3);
    BraidWord b = beta_from_positroid(f);
    CHECK(cyclically_equal(downshift(b).letters, beta_from_positroid(g).letters));
    for (auto [k, n] : small_shapes) {
        if (k < 2) continue;
        for (auto& w : oracle::bap_windows(k, n)) {
            Bap h(w);
            if (h.m() == 0) continue;
            BraidWord bh = beta_from_positroid(h), bd = beta_from_positroid(tshift_bap(h));
            CHECK(cyclically_equal(downshift(bh).letters, bd.letters));
            long top = std::count(bh.letters.begin(), bh.letters.end(), k - 1);
            CHECK(bh.letters.size() == bd.letters.size() + top);
        }
    }
    BraidWord x = b;
    for (int t = 0; t < 3; ++t) x = downshift(x);
    CHECK(x.m == 1);
    CHECK(x.letters.empty());
    CHECK_THROWS_AS(downshift(x), braid_error);
}

TEST_CASE("w0 words") {
    CHECK(w0_word(2) == std::vector<int>{1});
    CHECK(w0_word(4) == std::vector<int>{3, 2, 3, 1, 2, 3});
    for (int m = 1; m <= 6; ++m) {
        BraidWord w{m, w0_word(m)};
        CHECK(word_permutation(w) == perm_w0(m));
        CHECK(static_cast<int>(w.letters.size()) == perm_length(perm_w0(m)));
    }
}

static void check_normal(const BraidWord& in) {
    W0Normal nf = normalize_w0(in);
    std::vector<int> w = in.letters;
    for (auto& mv : nf.moves) w = apply_move(w, mv);
    CHECK(w == nf.word.letters);
    auto tail = w0_word(in.m);
    REQUIRE(nf.word.letters.size() >= tail.size());
    CHECK(std::equal(tail.begin(), tail.end(), nf.word.letters.end() - static_cast<long>(tail.size())));
    CHECK(demazure_product(nf.word) == demazure_product(in));
    int r = static_cast<int>(in.letters.size()) == 0 ? 0 : nf.shift % static_cast<int>(in.letters.size());
    std::vector<int> rot = in.letters;
    std::rotate(rot.begin(), rot.begin() + r, rot.end());
    CHECK(word_permutation(nf.word) == word_permutation(BraidWord{in.m, rot}));
}

TEST_CASE("normalize_w0") {
    BraidWord g24{2, {1, 1, 1, 1}};
    W0Normal nf = normalize_w0(g24);
    CHECK(nf.word.letters == std::vector<int>{1, 1, 1, 1});
    CHECK(nf.eta_length() == 3);
    check_normal(g24);
    check_normal(beta_from_positroid(Bap(fixture::example_window)));
    for (auto [k, n] : small_shapes)
        for (auto& w : oracle::bap_windows(k, n)) {
            Bap f(w);
            BraidWord b = beta_from_positroid(f);
            if (demazure_product(b) == perm_w0(k)) check_normal(b);
            else CHECK_THROWS_AS(normalize_w0(b, 20000), braid_error);
        }
}

TEST_CASE("base points") {
    Bap f(fixture::example_window);
    DecoratedBraid d = place_basepoints(f);
    auto bp = beta_pieces(f);
    int plus = 0, minus = 0, crossings = 0;
    for (auto& e : d.events) {
        if (e.crossing) ++crossings;
        else if (e.bp.plus) {
            ++plus;
            CHECK(e.bp.height == 4);
        } else {
            ++minus;
        }
    }
    CHECK(crossings == 13);
    CHECK(plus == 6);  // 5 is a loop
    CHECK(minus == 6);
    for (int i = 1; i <= 7; ++i) {
        CHECK(d.sign[i - 1] == (bp[i - 1].size() % 2 ? -1 : 1));
        int s = d.piece_start[i - 1];
        if (f.loop(i)) {
            if (!bp[i - 1].empty()) CHECK(d.events[s].crossing);
            continue;
        }
        CHECK(d.events[s].bp.index == i);
        CHECK(d.events[s + 1].bp.height == (bp[i - 1].empty() ? 4 : 3));
    }
    // i = 6 follows the loop at 5, so beta_6 is empty and both points sit at height m
    CHECK(bp[5].empty());
    CHECK(d.events[d.piece_start[5] + 1].bp.height == 4);
}

TEST_CASE("cyclic equality") {
    CHECK(cyclically_equal({1, 2, 3}, {3, 1, 2}));
    CHECK_FALSE(cyclically_equal({1, 2}, {2, 2}));
    CHECK(cyclically_equal({}, {}));
    CHECK_FALSE(cyclically_equal({1}, {1, 1}));
}

TEST_CASE("bad letters") {
    CHECK_THROWS_AS(word_permutation(BraidWord{3, {3}}), braid_error);
    CHECK_THROWS_AS(apply_move({1, 2}, WordMove{MoveKind::commute, 0}), braid_error);
}
