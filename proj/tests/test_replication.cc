#include <crumby/gadgets.hh>
#include <crumby/replication.hh>

#include <gtest/gtest.h>

#include <vector>

using namespace crumby;

TEST(Replication, QuickRunPasses)
{
    ReplicationOptions o;
    o.quick = true;
    auto results = run_replication(o);
    EXPECT_TRUE(all_passed(results));
    int skipped = 0;
    for (auto & r : results)
        skipped += r.skipped;
    EXPECT_GT(skipped, 0);
    for (int c = 1 ; c <= 11 ; ++c) {
        bool seen = false;
        for (auto & r : results)
            seen = seen || r.criterion == c;
        EXPECT_TRUE(seen) << c;
    }
}

TEST(Replication, CorruptedTableFailsSpEquality)
{
    ReplicationOptions o;
    o.quick = true;
    std::vector<Edge> table(g40_edge_table().begin(), g40_edge_table().end());
    table[7] = Edge{0, 20};
    o.g40_table = table;
    auto results = run_replication(o);
    EXPECT_FALSE(all_passed(results));
    bool sp_failed = false;
    for (auto & r : results)
        if (r.id == "g40-sp-equality")
            sp_failed = ! r.pass;
    EXPECT_TRUE(sp_failed);
}

TEST(Replication, StreamsChecksInOrder)
{
    ReplicationOptions o;
    o.quick = true;
    std::vector<std::string> seen;
    auto results = run_replication(o, [&] (const CheckResult & r) { seen.push_back(r.id); });
    ASSERT_EQ(seen.size(), results.size());
    int last = 0;
    for (std::size_t i = 0 ; i < results.size() ; ++i) {
        EXPECT_EQ(seen[i], results[i].id);
        EXPECT_GE(results[i].criterion, last);
        last = results[i].criterion;
    }
}

TEST(Replication, LineFormat)
{
    CheckResult r;
    r.criterion = 8;
    r.id = "x";
    r.pass = true;
    r.detail = "d";
    r.seconds = 0.5;
    EXPECT_EQ(format_check(r), "PASS  claim       c8  x: d");
    EXPECT_EQ(format_check(r, true), "PASS  claim       c8  x: d (0.500 s)");
    r.pass = false;
    r.provenance = Provenance::DerivedRegression;
    EXPECT_EQ(format_check(r).substr(0, 18), "FAIL  regression  ");
}
