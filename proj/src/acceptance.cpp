#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace pw {

namespace {

// the (4,7) worked example: target necklace I_1..I_7, the braid word, and
// the nine leftward toggles (position, then I_7, I_1, ..., I_6 and stacks s_0..s_6)
const std::vector<int> example_window = {3, 9, 8, 7, 5, 11, 13};
const std::vector<std::string> example_target = {"1246", "2346", "2346", "1246", "1267", "1267", "1247"};
const std::vector<int> example_beta = {3, 3, 2, 1, 3, 2, 3, 3, 2, 1, 3, 2, 1};

struct ToggleLine {
    int position;
    std::vector<std::string> entries;
    std::vector<std::pair<int, int>> stacks;
};

const std::vector<ToggleLine> toggle_lines = {
    {0, {"7124", "1246", "2346", "3462", "4612", "6712", "6712"},
     {{0, 6}, {1, 3}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {6, 11}}},
    {1, {"7124", "7234", "2346", "3462", "4612", "6712", "6712"},
     {{1, 3}, {0, 6}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {6, 11}}},
    {7, {"6723", "7234", "2346", "3462", "4612", "6712", "6712"},
     {{-1, 4}, {0, 6}, {2, 9}, {3, 8}, {4, 7}, {5, 5}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2461", "4612", "6712", "6712"},
     {{-1, 4}, {0, 6}, {3, 8}, {2, 9}, {4, 7}, {5, 5}, {8, 10}}},
    {4, {"6723", "7234", "2346", "2461", "2671", "6712", "6712"},
     {{-1, 4}, {0, 6}, {3, 8}, {4, 7}, {2, 9}, {5, 5}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2367", "2671", "6712", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {3, 8}, {2, 9}, {5, 5}, {8, 10}}},
    {5, {"6723", "7234", "2346", "2367", "2671", "2671", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {3, 8}, {5, 5}, {2, 9}, {8, 10}}},
    {4, {"6723", "7234", "2346", "2367", "2367", "2671", "6712"},
     {{-1, 4}, {0, 6}, {4, 7}, {5, 5}, {3, 8}, {2, 9}, {8, 10}}},
    {3, {"6723", "7234", "2346", "2346", "2367", "2671", "6712"},
     {{-1, 4}, {0, 6}, {5, 5}, {4, 7}, {3, 8}, {2, 9}, {8, 10}}},
    {2, {"6723", "7234", "7234", "2346", "2367", "2671", "6712"},
     {{-1, 4}, {5, 5}, {7, 13}, {4, 7}, {3, 8}, {2, 9}, {8, 10}}},
};

std::set<int> digits(const std::string& s) {
    std::set<int> out;
    for (char c : s) out.insert(c - '0');
    return out;
}

std::vector<int> digit_list(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c - '0');
    return out;
}

// collects failures; the first few go into the detail string
struct Checker {
    int failures = 0;
    long checks = 0;
    std::string first;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures < 3) first += (first.empty() ? "" : "; ") + what;
        ++failures;
    }
};

CriterionResult timed(int id, const std::string& name, double budget, const std::function<std::string(Checker&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.budget = budget;
    Checker ck;
    auto t0 = std::chrono::steady_clock::now();
    std::string info;
    try {
        info = body(ck);
    } catch (const pw_error& e) {
        ck(false, e.kind() + ": " + e.what());
    } catch (const std::exception& e) {
        ck(false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.checks_passed = ck.failures == 0;
    std::ostringstream d;
    d << ck.checks << " checks";
    if (!info.empty()) d << ", " << info;
    if (ck.failures) d << ", " << ck.failures << " failed: " << ck.first;
    r.detail = d.str();
    return r;
}

// positroid windows with a loop among them (handled by column deletion)
const std::vector<std::vector<int>> flag_corpus = {
    {3, 4, 5, 6}, example_window, {2, 4, 5, 6, 8}, {4, 5, 6, 7, 8, 9}, {3, 4, 6, 5, 7},
};

const std::vector<std::vector<int>> dt_cells = {{3, 4, 5, 6}, {3, 4, 5, 6, 7}, {4, 5, 6, 7, 8, 9}};

Rational ordered_minor(const Matrix& v, const std::set<int>& e, int i) {
    return plucker(v, sort_cyclic(std::vector<int>(e.begin(), e.end()), i, v.cols()));
}

std::string cell_name(const Bap& f) { return "(" + std::to_string(f.m()) + "," + std::to_string(f.n()) + ")"; }

}  // namespace

CriterionResult acceptance_worked_example() {
    return timed(1, "worked (4,7) example: necklace, braid word, toggles", 1.0, [](Checker& ck) {
        Bap f(example_window);
        Necklace t = target_necklace(f);
        for (int a = 1; a <= 7; ++a) ck(t.entry(a) == digits(example_target[a - 1]), "I_" + std::to_string(a));
        ck(cyclically_equal(beta_from_positroid(f).letters, example_beta), "braid word");
        auto line_ok = [&](const Necklace& nk, const ToggleLine& line, int step) {
            std::string tag = "toggle step " + std::to_string(step);
            ck(nk.entry(7) == digits(line.entries[0]), tag + " I_7");
            for (int a = 1; a < 7; ++a) ck(nk.entry(a) == digits(line.entries[a]), tag + " I_" + std::to_string(a));
            for (int a = 0; a < 7; ++a) {
                auto s = nk.stack(a);
                int d = s.first - line.stacks[a].first;
                ck(d % 7 == 0 && s.second - line.stacks[a].second == d, tag + " s_" + std::to_string(a));
            }
        };
        Necklace nk = t;
        line_ok(nk, toggle_lines[0], 0);
        for (size_t k = 1; k < toggle_lines.size(); ++k) {
            ck(toggle_applicable(nk, toggle_lines[k].position, true), "toggle applicable");
            nk = toggle_necklace(nk, toggle_lines[k].position, true);
            line_ok(nk, toggle_lines[k], static_cast<int>(k));
        }
        ck(nk.is_minimal(), "sequence ends at a minimal necklace");
        auto seq = toggles_to_source(t);
        ck(seq.size() == 9, "search finds nine toggles");
        ck(apply_toggles(t, seq).entries() == nk.entries(), "search reaches the listed endpoint");
        return std::string("9 toggles");
    });
}

CriterionResult acceptance_le_tshift() {
    return timed(2, "Le (4,8) T-shift", 1.0, [](Checker& ck) {
        LeDiagram d = make_le(4, 8, 3, {"++0+", "0000", "0+0+", "++"});
        LeDiagram r = tshift_le(d);
        ck(d.m == 4 && r.m == 3, "rank 4 -> 3");
        ck(r.plus == std::vector<std::vector<bool>>{{false, false, false, true}, {false, true, true, true}, {true, true, true}},
           "shape and filling");
        ck(r.labels == std::vector<int>{4, 5, 6, 8, 1, 2, 3}, "staircase labels");
        ck(validate_le(r), "result is a Le diagram");
        // f_down(i) = f(i-1) after removing loops
        Bap f = decorated_permutation(plabic_from_le(d));
        Bap g = delete_loops(f);
        std::vector<int> want;
        for (int i = 1; i <= g.n(); ++i) want.push_back(g.f(i - 1));
        ck(decorated_permutation(plabic_from_le(r)).window() == want, "f_down(i) = f(i-1)");
        return "f_down = " + json(want).dump();
    });
}

CriterionResult acceptance_weave_pipeline() {
    return timed(3, "weave pipeline over (1,3) (2,4) (2,5) (3,5)", 60.0, [](Checker& ck) {
        int graphs = 0;
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 5}}) {
            for (auto& d : all_le_diagrams(m, n, 1)) {
                PlabicGraph g = make_trivalent(plabic_from_le(d));
                Bap f = decorated_permutation(g);
                std::string tag = json(f.window()).dump();
                ++graphs;
                Tower t = tower(g);
                ck(t.m() == m, tag + " tower height");
                for (int j = 0; j + 1 < t.m(); ++j) {
                    Bap a = decorated_permutation(t.levels[j]), b = decorated_permutation(t.levels[j + 1]);
                    ck(b.window() == tshift_bap(a).window(), tag + " level permutation");
                    ck(downshift(beta_from_positroid(a)) == beta_from_positroid(b), tag + " downshift");
                    for (int i = 1; i <= a.n(); ++i) {
                        if (a.loop(i)) continue;
                        ck(unique_sink_property(t.levels[j], perfect_orientation(t.levels[j], i)), tag + " unique sink");
                        ck(check_compatible_orientations(t.levels[j], t.steps[j], i), tag + " compatible orientations");
                    }
                }
                Weave w = assemble_weave(t);
                ck(validate_weave(w), tag + " weave valid");
                ck(cyclically_equal(boundary_word(w).letters, beta_from_positroid(f).letters), tag + " boundary word");
                Quiver q = quiver(g), qw = quiver_from_weave(w, g);
                ck(qw.eps == q.eps && qw.frozen == q.frozen, tag + " quiver");
            }
        }
        ck(graphs == 7 + 33 + 131 + 131, "positroid count");
        return std::to_string(graphs) + " positroids";
    });
}

CriterionResult acceptance_phi_psi(std::uint64_t seed) {
    return timed(4, "Phi/Psi on 50 stratum points", 60.0, [seed](Checker& ck) {
        Rng rng(seed);
        for (int s = 0; s < 50; ++s) {
            Bap f0(flag_corpus[s % flag_corpus.size()]);
            Matrix v;
            Bap f;
            strip_loops(sample_stratum_point(f0, rng), f0, v, f);
            std::string tag = "point " + std::to_string(s);
            DecoratedChain c = phi(v, f);
            ck(psi(c) == v, tag + " psi(phi) = id");
            Necklace t = target_necklace(f);
            for (int i = 1; i <= f.n(); ++i) {
                Rational d = ordered_minor(v, t.entry(i), i);
                ck(a_plus(c, i) == d && a_minus(c, i) == d, tag + " A_i = D_i");
            }
            FlagChain u = underlying(c);
            ck(u.word == beta_from_positroid(f) && validate_flag_chain(u), tag + " relative positions spell beta");
        }
        return std::string("50 points over 5 positroids");
    });
}

CriterionResult acceptance_twist_round_trip(std::uint64_t seed) {
    return timed(5, "twist round trips and frozen inversion", 60.0, [seed](Checker& ck) {
        Rng rng(seed);
        for (int s = 0; s < 50; ++s) {
            Bap f(flag_corpus[s % flag_corpus.size()]);
            Matrix v = sample_stratum_point(f, rng);
            std::string tag = "point " + std::to_string(s);
            Matrix tw = twist_right(v, f);
            ck(twist_left(tw, f) == v, tag + " left after right");
            ck(bap_from_matrix(tw) == f, tag + " permutation kept");
            Necklace t = target_necklace(f);
            for (int i = 1; i <= f.n(); ++i) {
                if (f.loop(i)) continue;
                ck(ordered_minor(tw, t.entry(i), i) * ordered_minor(v, t.entry(i), i) == 1, tag + " frozen inverted");
            }
        }
        return std::string("50 points");
    });
}

CriterionResult acceptance_hexagon(std::uint64_t seed) {
    return timed(6, "Gr(3,6) hexagon mutation on 20 points", 60.0, [seed](Checker& ck) {
        PlabicGraph g = gr36_hexagonal();
        Bap f = decorated_permutation(g);
        ck(f.window() == std::vector<int>{4, 5, 6, 7, 8, 9}, "top cell");
        Rng rng(seed);
        for (int k = 0; k < 20; ++k) {
            Matrix v = sample_stratum_point(f, rng);
            Seed s = target_seed(g, v);
            int h = -1;
            for (int x = 0; x < s.q.size(); ++x)
                if (s.q.names[x] == "135") h = x;
            ck(h >= 0 && !s.q.frozen[h], "hexagon face 135");
            if (h < 0) break;
            auto dl = [&](const std::string& x) { return plucker(v, digit_list(x)); };
            Seed t = mutate_seed(s, h);
            ck(t.values[h] == dl("136") * dl("245") - dl("126") * dl("345"), "point " + std::to_string(k));
        }
        return std::string("20 points");
    });
}

CriterionResult acceptance_twist_dt(std::uint64_t seed, int depth) {
    return timed(7, "twist is DT on Gr(2,4) Gr(2,5) Gr(3,6)", 300.0, [seed, depth](Checker& ck) {
        std::string info;
        for (auto& w : dt_cells) {
            Bap f(w);
            PlabicGraph g = plabic_from_le(le_from_bap(f, 1));
            Rng rng(seed);
            std::vector<Matrix> pts;
            for (int k = 0; k < 10; ++k) pts.push_back(sample_stratum_point(f, rng));
            TwistReport r = verify_twist_is_dt(g, pts, depth);
            std::string tag = cell_name(f);
            ck(r.frozen_inverted, tag + " frozen inversion");
            ck(r.sequence_found, tag + (r.inconclusive ? " search inconclusive" : " no reddening sequence"));
            ck(r.monomials_constant, tag + " frozen monomials constant over 10 points");
            ck(r.quasi_cluster && certify_quasi_cluster(quiver(g), r.data, true), tag + " quasi-cluster conditions");
            info += (info.empty() ? "" : " ") + tag + ":" + std::to_string(r.dt.seq.size());
        }
        return "sequence lengths " + info;
    });
}

CriterionResult acceptance_source_target(std::uint64_t seed) {
    return timed(8, "source-target quasi-equivalence on the same cells", 300.0, [seed](Checker& ck) {
        for (auto& w : dt_cells) {
            Bap f(w);
            PlabicGraph g = plabic_from_le(le_from_bap(f, 1));
            Rng rng(seed);
            std::vector<Matrix> pts;
            for (int k = 0; k < 10; ++k) pts.push_back(sample_stratum_point(f, rng));
            QuasiReport r = verify_source_target_quasi(g, pts);
            ck(r.passed(), cell_name(f) + " frozen monomials constant");
        }
        return std::string("3 cells, 10 points each");
    });
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int depth) {
    return {acceptance_worked_example(),         acceptance_le_tshift(),   acceptance_weave_pipeline(),
            acceptance_phi_psi(seed),            acceptance_twist_round_trip(seed + 1),
            acceptance_hexagon(seed + 2),        acceptance_twist_dt(seed + 3, depth),
            acceptance_source_target(seed + 4)};
}

json to_json(const CriterionResult& r) {
    return {{"criterion", r.id},  {"name", r.name},         {"passed", r.passed()}, {"checks_passed", r.checks_passed},
            {"seconds", r.seconds}, {"budget_seconds", r.budget}, {"detail", r.detail}};
}

std::string summary_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs / %.0fs", r.seconds, r.budget);
    return std::string(r.passed() ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.name + " [" + buf +
           "] " + r.detail;
}

}  // namespace pw
