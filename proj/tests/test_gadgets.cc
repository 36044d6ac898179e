#include <crumby/certify.hh>
#include <crumby/gadgets.hh>
#include <crumby/graph.hh>
#include <crumby/structure.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace crumby;

namespace
{
    // Relabels a standalone expansion by role names into the numbering of target.
    auto by_roles(const LabeledGraph & expansion, std::span<const std::string_view> roles, const LabeledGraph & target) -> Graph
    {
        std::vector<Vertex> perm;
        for (auto role : roles)
            perm.push_back(target.vertex_with_role(role));
        return expansion.graph.relabelled(perm);
    }

    auto random_sp(std::mt19937 & rng, int depth) -> SpExpr
    {
        if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
            return SpExpr::edge();
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<SpExpr> children;
        for (int i = 0 ; i < k ; ++i)
            children.push_back(random_sp(rng, depth - 1));
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: return SpExpr::series(children);
            case 1: {
                // parallel branches must not both be single edges
                for (auto & c : children)
                    if (c.kind() == SpExpr::Kind::Edge)
                        c = SpExpr::series({SpExpr::edge(), SpExpr::edge()});
                children.front() = SpExpr::edge();
                return SpExpr::parallel(children);
            }
            default: return SpExpr::reverse(SpExpr::series(children));
        }
    }

    auto same_two_terminal(const LabeledGraph & a, const LabeledGraph & b) -> bool
    {
        // isomorphism fixing the terminals: attach distinct pendant paths to tell them apart
        auto mark = [] (const LabeledGraph & l) {
            auto edges = l.graph.edges();
            int n = l.graph.size();
            edges.emplace_back(l.terminal_first, n);
            edges.emplace_back(l.terminal_second, n + 1);
            edges.emplace_back(n + 1, n + 2);
            edges.emplace_back(n + 2, n + 3);
            edges.emplace_back(n, n + 4);
            edges.emplace_back(n + 4, n + 5);
            edges.emplace_back(n + 5, n + 6);
            edges.emplace_back(n + 6, n + 7);
            return Graph::from_edges(n + 8, edges);
        };
        return are_isomorphic(mark(a), mark(b));
    }
}

TEST(Gadgets, F)
{
    auto f = build_F();
    // xa, xb, ac, bd, cd, ce, df, eg, eh, fg, fh with x..h numbered 0..8
    std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(f.graph.edges(), expected);
    EXPECT_EQ(f.graph.size(), 9);
    EXPECT_EQ(f.vertex_with_role("x"), 0);
    EXPECT_EQ(f.vertex_with_role("h"), 8);
    EXPECT_EQ(f.graph.degree(0), 2);
    EXPECT_THROW(f.vertex_with_role("q"), std::exception);
}

TEST(Gadgets, R)
{
    auto r = build_R();
    EXPECT_EQ(r.graph.size(), 11);
    EXPECT_EQ(r.graph.edge_count(), 14u);
    Vertex s = r.vertex_with_role("s"), t = r.vertex_with_role("t"), x = r.vertex_with_role("x"), a = r.vertex_with_role("a");
    EXPECT_TRUE(r.graph.adjacent(s, x));
    EXPECT_TRUE(r.graph.adjacent(s, t));
    EXPECT_TRUE(r.graph.adjacent(t, a));
    EXPECT_EQ(r.graph.max_degree(), 3);
}

TEST(Gadgets, G18)
{
    auto g = build_G18();
    EXPECT_EQ(g.graph.size(), 18);
    EXPECT_EQ(g.graph.edge_count(), 23u);
    EXPECT_TRUE(g.graph.adjacent(g.vertex_with_role("x1"), g.vertex_with_role("x2")));
    EXPECT_EQ(g.graph.without_vertex(9).without_vertex(0).edge_count(), 18u);
    EXPECT_EQ(g.graph.max_degree(), 3);
}

TEST(Gadgets, G40Table)
{
    auto table = g40_edge_table();
    EXPECT_EQ(table.size(), 54u);
    auto g = build_G40();
    EXPECT_EQ(g.graph.size(), 40);
    EXPECT_EQ(g.graph.edge_count(), 54u);
    EXPECT_EQ(g.graph.max_degree(), 3);
    EXPECT_TRUE(is_connected(g.graph));
    // each module contains a labelled copy of F
    auto f = build_F().graph;
    for (auto & m : g40_modules())
        for (auto [u, v] : f.edges())
            EXPECT_TRUE(g.graph.adjacent(m.f_copy[u], m.f_copy[v])) << m.name;
}

TEST(Sp, Printing)
{
    EXPECT_EQ(SpExpr::edge().to_string(), "E");
    EXPECT_EQ(sp_path2().to_string(), "P2");
    EXPECT_EQ(sp_path2().to_string(true), "(E . E)");
    EXPECT_EQ(SpExpr::reverse(sp_path2()).to_string(), "P2^rev");
    EXPECT_EQ(sp_rich_gadget().to_string(true).find("R"), std::string::npos);
    EXPECT_THROW(SpExpr::series({SpExpr::edge()}), std::invalid_argument);
    EXPECT_THROW(SpExpr::parallel({SpExpr::edge()}), std::invalid_argument);
}

TEST(Sp, SmallExpansions)
{
    auto p2 = expand(sp_path2());
    EXPECT_EQ(p2.graph.size(), 3);
    EXPECT_EQ(p2.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
    EXPECT_EQ(p2.terminal_first, 0);
    EXPECT_EQ(p2.terminal_second, 1);

    auto c4 = expand(SpExpr::parallel({sp_path2(), sp_path2()}));
    EXPECT_TRUE(are_isomorphic(c4.graph, cycle_graph(4)));

    EXPECT_THROW(expand(SpExpr::parallel({SpExpr::edge(), SpExpr::edge()})), SpExpansionError);
    try {
        expand(SpExpr::series({SpExpr::edge(), SpExpr::parallel({SpExpr::edge(), SpExpr::edge()}).named("bad")}));
        FAIL();
    }
    catch (const SpExpansionError & e) {
        EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
    }
}

TEST(Sp, RoleMapsGiveLabelledGadgets)
{
    auto q = expand(sp_rooted_gadget());
    auto f = build_F();
    EXPECT_EQ(by_roles(q, rooted_gadget_expansion_roles(), f), f.graph);
    EXPECT_EQ(rooted_gadget_expansion_roles()[q.terminal_first], "x");
    EXPECT_EQ(rooted_gadget_expansion_roles()[q.terminal_second], "a");

    auto r = expand(sp_rich_gadget());
    auto rr = build_R();
    EXPECT_EQ(by_roles(r, rich_gadget_expansion_roles(), rr), rr.graph);
    EXPECT_EQ(rich_gadget_expansion_roles()[r.terminal_first], "s");
    EXPECT_EQ(rich_gadget_expansion_roles()[r.terminal_second], "t");
}

TEST(Sp, G40Equality)
{
    auto diff = compare_with_table(relabelled_g40_expansion(), g40_edge_table());
    EXPECT_TRUE(diff.empty()) << diff.describe();
    EXPECT_EQ(build_G40_sp().graph, build_G40().graph);

    // Negative controls: a moved edge and a missing closing edge both show up.
    std::vector<Edge> corrupted(g40_edge_table().begin(), g40_edge_table().end());
    corrupted[5] = Edge{0, 20};
    auto bad = compare_with_table(relabelled_g40_expansion(), corrupted);
    EXPECT_FALSE(bad.empty());
    EXPECT_EQ(bad.only_in_table, (std::vector<Edge>{{0, 20}}));
    EXPECT_EQ(bad.only_in_expansion.size(), 1u);
    EXPECT_FALSE(compare_with_table(relabelled_g40_expansion(false), g40_edge_table()).empty());
}

TEST(Sp, AlgebraicLaws)
{
    auto e = SpExpr::edge(), p = sp_path2(), a = sp_inner_module();
    auto left = expand(SpExpr::series({SpExpr::series({e, p}), a}));
    auto right = expand(SpExpr::series({e, SpExpr::series({p, a})}));
    auto flat = expand(SpExpr::series({e, p, a}));
    EXPECT_TRUE(same_two_terminal(left, right));
    EXPECT_TRUE(same_two_terminal(left, flat));

    auto ab = expand(SpExpr::parallel({p, a}));
    auto ba = expand(SpExpr::parallel({a, p}));
    EXPECT_TRUE(same_two_terminal(ab, ba));

    auto rev = expand(SpExpr::reverse(SpExpr::series({e, a})));
    auto swapped = expand(SpExpr::series({SpExpr::reverse(a), e}));
    EXPECT_TRUE(same_two_terminal(rev, swapped));
}

TEST(Sp, ExpansionsHaveTreewidthTwo)
{
    std::mt19937 rng(43);
    int built = 0;
    for (int trial = 0 ; trial < 300 ; ++trial) {
        LabeledGraph g;
        try {
            g = expand(random_sp(rng, 4));
        }
        catch (const SpExpansionError &) {
            continue;
        }
        ++built;
        ASSERT_TRUE(recognize_tw2(g.graph).treewidth_at_most_two);
        ASSERT_TRUE(find_elimination_order(g.graph).has_value());
    }
    EXPECT_GT(built, 100);
}

TEST(Catalogue, Lookup)
{
    for (auto name : gadget_names())
        EXPECT_GT(gadget_by_name(name).graph.size(), 0);
    EXPECT_THROW(gadget_by_name("Z"), std::invalid_argument);
}
