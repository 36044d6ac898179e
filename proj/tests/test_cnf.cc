#include <crumby/cnf.hh>
#include <crumby/coloring.hh>
#include <crumby/graph.hh>
#include <crumby/graph_io.hh>
#include <crumby/search.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace crumby;

TEST(Cnf, K2)
{
    auto f = encode_cnf(complete_graph(2));
    EXPECT_EQ(f.variables, 2);
    EXPECT_EQ(f.family_sizes, (std::array<std::size_t, 3>{0, 2, 0}));
    EXPECT_EQ(emit_dimacs(f), "p cnf 2 2\n-1 2 0\n1 -2 0\n");
}

TEST(Cnf, PathFamilies)
{
    auto f = encode_cnf(path_graph(4));
    EXPECT_EQ(f.family_sizes, (std::array<std::size_t, 3>{2, 4, 1}));
    EXPECT_EQ(emit_dimacs(f),
            "p cnf 4 7\n"
            "1 2 3 0\n"
            "2 3 4 0\n"
            "-1 2 0\n"
            "1 -2 3 0\n"
            "2 -3 4 0\n"
            "3 -4 0\n"
            "-1 -2 -3 -4 0\n");
}

TEST(Cnf, IsolatedVertexIsUnit)
{
    auto f = encode_cnf(Graph(1));
    EXPECT_EQ(emit_dimacs(f), "p cnf 1 1\n-1 0\n");
}

TEST(Cnf, NoDuplicateClauses)
{
    for (int n = 3 ; n <= 7 ; ++n) {
        auto f = encode_cnf(complete_graph(n));
        std::set<Clause> distinct(f.clauses.begin(), f.clauses.end());
        EXPECT_EQ(distinct.size(), f.clauses.size());
        // one blue clause per 3-set, one P4 clause per 4-set
        std::size_t c3 = n * (n - 1) * (n - 2) / 6, c4 = n >= 4 ? n * (n - 1) * (n - 2) * (n - 3) / 24 : 0;
        EXPECT_EQ(f.family_sizes[0], c3);
        EXPECT_EQ(f.family_sizes[1], static_cast<std::size_t>(n));
        EXPECT_EQ(f.family_sizes[2], c4);
        EXPECT_TRUE(std::is_sorted(f.clauses.begin(), f.clauses.begin() + static_cast<long>(c3)));
    }
}

TEST(Cnf, EquivalentToVerifierOnAllSmallGraphs)
{
    std::uint64_t checked = 0;
    for (int n = 1 ; n <= 7 ; ++n)
        for (auto & line : generate_small(n)) {
            auto g = parse_graph6(line);
            auto f = encode_cnf(g);
            for (std::uint64_t mask = 0 ; mask < (1ull << n) ; ++mask) {
                auto c = Coloring::from_mask(n, mask);
                ASSERT_EQ(satisfies(f, c), verify_crumby(g, c).crumby) << line << " " << to_string(c);
                ++checked;
            }
        }
    EXPECT_GT(checked, 100000u);
}
