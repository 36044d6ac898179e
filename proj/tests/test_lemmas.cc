#include <crumby/coloring.hh>
#include <crumby/gadgets.hh>
#include <crumby/graph.hh>
#include <crumby/lemmas.hh>

#include <gtest/gtest.h>

#include <vector>

using namespace crumby;

namespace
{
    constexpr Vertex x = 0, a = 1, b = 2;

    // Direct transcription of C1..C4 for one coloring, used as an oracle.
    auto oracle_feasible(const Graph & g, const std::vector<Vertex> & boundary, const std::vector<Vertex> & outside_red,
            const Coloring & c) -> bool
    {
        auto in = [] (const std::vector<Vertex> & s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            int blue = 0, red = 0;
            for (auto u : g.neighbours(v))
                (c.is_red(u) ? red : blue) += 1;
            if (c.is_blue(v) && blue > 1)
                return false;
            if (c.is_red(v) && red == 0 && ! in(boundary, v))
                return false;
        }
        for (Vertex p = 0 ; p < g.size() ; ++p)
            for (auto q : g.neighbours(p))
                for (auto r : g.neighbours(q))
                    for (auto s : g.neighbours(r))
                        if (p != r && p != s && q != s && c.is_red(p) && c.is_red(q) && c.is_red(r) && c.is_red(s))
                            return false;
        for (auto v : outside_red) {
            if (! c.is_red(v))
                continue;
            for (auto p : g.neighbours(v))
                for (auto q : g.neighbours(p))
                    if (q != v && c.is_red(p) && c.is_red(q))
                        return false;
        }
        return true;
    }

    auto oracle_enumerate(const Graph & g, const BoundarySpec & spec, const std::vector<Vertex> & outside_red) -> std::vector<Coloring>
    {
        std::vector<Coloring> out;
        int n = g.size();
        for (std::uint64_t m = 0 ; m < (1ull << n) ; ++m) {
            auto c = Coloring::from_mask(n, m);
            bool matches = true;
            for (auto [v, col] : spec.fixed())
                matches = matches && c[v] == col;
            if (matches && oracle_feasible(g, spec.boundary(), outside_red, c))
                out.push_back(c);
        }
        return out;
    }
}

TEST(Spec, Validation)
{
    BoundarySpec s;
    s.add_boundary(x).fix(x, Color::Red);
    EXPECT_THROW(s.fix(x, Color::Blue), SpecError);
    EXPECT_THROW(BoundarySpec().mark_outside_red(3), SpecError);
    BoundarySpec far;
    far.add_boundary(20);
    EXPECT_THROW(far.validate(build_F().graph), SpecError);
    BoundarySpec ok;
    ok.add_boundary(x).fix(x, Color::Blue);
    EXPECT_THROW(relaxed_feasible(build_F().graph, ok, Coloring(9, Color::Red)), SpecError);
}

TEST(Feasible, MatchesOracle)
{
    auto f = build_F().graph;
    for (Vertex partner : {a, b})
        for (bool outside : {false, true})
            for (auto root : {Color::Blue, Color::Red}) {
                BoundarySpec s;
                s.add_boundary(x).add_boundary(partner).fix(x, root);
                std::vector<Vertex> outside_red;
                if (outside) {
                    s.mark_outside_red(x);
                    outside_red.push_back(x);
                }
                auto expected = oracle_enumerate(f, s, outside_red);
                EXPECT_EQ(enumerate_feasible_serial(f, s), expected);
                EXPECT_EQ(enumerate_feasible(f, s), expected);
            }
}

TEST(Lemmas, StockReports)
{
    auto reports = run_all_lemmas();
    ASSERT_EQ(reports.size(), 8u);
    for (auto & r : reports) {
        EXPECT_TRUE(r.pass) << format_human(r);
        EXPECT_FALSE(r.counterexample.has_value());
        EXPECT_NE(format_key_value(r).find("result=pass"), std::string::npos);
    }
    EXPECT_TRUE(lemma1_i_automorphism_consistent());
    EXPECT_TRUE(verify_lemma1_i('a').pass);
    EXPECT_TRUE(verify_lemma1_i('b').pass);
    EXPECT_EQ(verify_lemma2(true).feasible, 0u);
}

TEST(Lemmas, FrozenFeasibleCounts)
{
    // Regression constants from the first verified run.
    EXPECT_EQ(verify_lemma1_i('a').feasible, 4u);
    EXPECT_EQ(verify_lemma1_ii('a', false).feasible, 10u);
    EXPECT_EQ(verify_lemma1_ii('a', true).feasible, 4u);
    EXPECT_EQ(verify_lemma2(false).feasible, 8u);
}

namespace
{
    auto without(const Graph & g, Edge dropped) -> Graph
    {
        std::vector<Edge> edges;
        for (auto e : g.edges())
            if (e != dropped)
                edges.push_back(e);
        return Graph::from_edges(g.size(), edges);
    }
}

TEST(Lemmas, NegativeControls)
{
    auto f = build_F().graph;
    auto r = build_R().graph;
    constexpr Vertex c = 3, d = 4, e = 5, fv = 6, h = 8;

    // Regression constants from the first verified run.
    auto no_fh = verify_rooted_blue(without(f, {fv, h}), x, a);
    EXPECT_FALSE(no_fh.pass);
    EXPECT_EQ(no_fh.feasible, 6u);
    ASSERT_TRUE(no_fh.counterexample.has_value());

    auto no_ce = verify_rooted_blue(without(f, {c, e}), x, a);
    EXPECT_FALSE(no_ce.pass);
    EXPECT_EQ(no_ce.feasible, 12u);

    // Widening the boundary by c keeps the claim; widening by b breaks it.
    auto with_c = verify_rooted_blue(f, x, a, {c});
    EXPECT_TRUE(with_c.pass);
    EXPECT_EQ(with_c.feasible, 4u);
    auto with_b = verify_rooted_blue(f, x, a, {b});
    EXPECT_FALSE(with_b.pass);
    EXPECT_EQ(with_b.feasible, 10u);
    ASSERT_TRUE(with_b.counterexample.has_value());

    for (auto partner : {a, b})
    {
        auto plain = verify_rooted_red(without(f, {c, d}), x, a, b, partner, false);
        EXPECT_FALSE(plain.pass);
        EXPECT_EQ(plain.feasible, 27u);
        auto outside = verify_rooted_red(without(f, {c, d}), x, a, b, partner, true);
        EXPECT_FALSE(outside.pass);
        EXPECT_EQ(outside.feasible, 15u);
    }

    auto no_st = verify_rich(without(r, {0, 1}), 0, 1, false);
    EXPECT_FALSE(no_st.pass);
    EXPECT_EQ(no_st.feasible, 9u);
    auto no_st_outside = verify_rich(without(r, {0, 1}), 0, 1, true);
    EXPECT_FALSE(no_st_outside.pass);
    EXPECT_EQ(no_st_outside.feasible, 4u);

    // A bare path has no rich structure.
    EXPECT_FALSE(verify_rich(path_graph(3), 0, 2, false).pass);
}

TEST(Lemmas, Composition)
{
    auto c = compose_g18();
    EXPECT_EQ(c.blue_root_supported, 0u);
    EXPECT_TRUE(c.contradiction);
    EXPECT_TRUE(c.solver_unsat);
    EXPECT_TRUE(c.agrees());
    EXPECT_EQ(c.pairs_with_red_p4_through_bridge, c.pairs_checked);
    // Regression constants.
    EXPECT_EQ(c.red_root_colorings, 4u);
    EXPECT_EQ(c.pairs_checked, 16u);
}
