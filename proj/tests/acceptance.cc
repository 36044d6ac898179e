// Acceptance run: one PASS/FAIL line per criterion. Every check pairs the
// library with an oracle written here, independently of the library code.

#include <crumby/certify.hh>
#include <crumby/cnf.hh>
#include <crumby/coloring.hh>
#include <crumby/gadgets.hh>
#include <crumby/graph.hh>
#include <crumby/graph_io.hh>
#include <crumby/lemmas.hh>
#include <crumby/replication.hh>
#include <crumby/search.hh>
#include <crumby/solve.hh>
#include <crumby/structure.hh>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace crumby;

namespace
{
    // Tolerances.
    constexpr double g18_seconds = 10.0;
    constexpr double g40_seconds = 60.0;
    constexpr std::uint64_t random_pairs = 100000;

    using Adj = std::vector<std::vector<int>>;
    using Mask = std::uint64_t;

    auto adjacency(int n, const std::vector<Edge> & edges) -> Adj
    {
        Adj adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    auto red(Mask m, int v) -> bool
    {
        return (m >> v) & 1u;
    }

    // Crumby test on a red set given as a bitmask with bit v for vertex v.
    // A red P4 a-b-c-d exists iff some red edge bc has red a in N(b) - c and
    // red d in N(c) - b with a != d.
    auto oracle_crumby(const Adj & adj, Mask m) -> bool
    {
        int n = static_cast<int>(adj.size());
        for (int v = 0 ; v < n ; ++v) {
            int same = 0;
            for (int u : adj[v])
                same += red(m, u) == red(m, v);
            if (! red(m, v) && same > 1)
                return false;
            if (red(m, v) && same == 0)
                return false;
        }
        for (int b = 0 ; b < n ; ++b)
            for (int c : adj[b]) {
                if (! red(m, b) || ! red(m, c))
                    continue;
                for (int a : adj[b])
                    for (int d : adj[c])
                        if (a != c && d != b && a != d && red(m, a) && red(m, d))
                            return false;
            }
        return true;
    }

    auto to_coloring(int n, Mask m) -> Coloring
    {
        Coloring c(n);
        for (int v = 0 ; v < n ; ++v)
            if (red(m, v))
                c.set(v, Color::Red);
        return c;
    }

    auto connected_without(const Adj & adj, int removed) -> bool
    {
        int n = static_cast<int>(adj.size());
        int start = removed == 0 ? 1 : 0;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{start};
        seen[start] = true;
        int count = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (u != removed && ! seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n - (removed >= 0 ? 1 : 0);
    }

    // F with x, a, b, c, d, e, f, g, h = 0..8.
    const std::vector<Edge> f_table{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}};
    constexpr int X = 0, A = 1, B = 2, C = 3, D = 4, E = 5, FF = 6, G = 7, H = 8;

    auto g18_edges() -> std::vector<Edge>
    {
        std::vector<Edge> edges;
        for (int copy = 0 ; copy < 2 ; ++copy)
            for (auto [u, v] : f_table)
                edges.emplace_back(u + 9 * copy, v + 9 * copy);
        edges.emplace_back(0, 9);
        return edges;
    }

    // R(s, t) with s = 0, t = 1 and F shifted to 2..10.
    auto r_edges() -> std::vector<Edge>
    {
        std::vector<Edge> edges;
        for (auto [u, v] : f_table)
            edges.emplace_back(u + 2, v + 2);
        edges.emplace_back(0, 2);
        edges.emplace_back(0, 1);
        edges.emplace_back(1, 3);
        return edges;
    }

    const std::vector<Edge> g40_table{
        {0, 1}, {0, 2}, {0, 39}, {1, 3}, {1, 12}, {2, 3}, {2, 4}, {3, 5},
        {4, 6}, {5, 6}, {5, 7}, {6, 8}, {7, 9}, {7, 10}, {8, 9}, {8, 10},
        {11, 12}, {11, 13}, {11, 22}, {12, 14}, {13, 14}, {13, 15}, {14, 16}, {15, 17},
        {16, 17}, {16, 18}, {17, 19}, {18, 20}, {18, 21}, {19, 20}, {19, 21}, {22, 24},
        {22, 30}, {23, 25}, {23, 30}, {24, 25}, {24, 26}, {25, 27}, {26, 28}, {26, 29},
        {27, 28}, {27, 29}, {30, 31}, {31, 32}, {31, 39}, {32, 34}, {33, 34}, {33, 35},
        {33, 39}, {34, 36}, {35, 37}, {35, 38}, {36, 37}, {36, 38}};

    // Boundary-relaxed feasibility C1..C4 for a gadget given by its adjacency.
    auto oracle_feasible(const Adj & adj, const std::vector<int> & boundary, int outside_red, Mask m) -> bool
    {
        int n = static_cast<int>(adj.size());
        auto on_boundary = [&] (int v) { return std::find(boundary.begin(), boundary.end(), v) != boundary.end(); };
        for (int v = 0 ; v < n ; ++v) {
            int blue = 0, reds = 0;
            for (int u : adj[v])
                (red(m, u) ? reds : blue) += 1;
            if (! red(m, v) && blue > 1)
                return false;
            if (red(m, v) && reds == 0 && ! on_boundary(v))
                return false;
        }
        for (int b = 0 ; b < n ; ++b)
            for (int c : adj[b])
                if (red(m, b) && red(m, c))
                    for (int a : adj[b])
                        for (int d : adj[c])
                            if (a != c && d != b && a != d && red(m, a) && red(m, d))
                                return false;
        if (outside_red >= 0 && red(m, outside_red))
            for (int p : adj[outside_red])
                for (int q : adj[p])
                    if (q != outside_red && red(m, p) && red(m, q))
                        return false;
        return true;
    }

    auto feasible_set(const Adj & adj, const std::vector<int> & boundary, int root, bool root_red, int outside_red) -> std::vector<Mask>
    {
        std::vector<Mask> out;
        int n = static_cast<int>(adj.size());
        for (Mask m = 0 ; m < (Mask{1} << n) ; ++m)
            if (red(m, root) == root_red && oracle_feasible(adj, boundary, outside_red, m))
                out.push_back(m);
        return out;
    }

    auto has_red_neighbour(const Adj & adj, Mask m, int v) -> bool
    {
        return std::any_of(adj[v].begin(), adj[v].end(), [&] (int u) { return red(m, u); });
    }

    auto seconds_since(std::chrono::steady_clock::time_point t) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    }

    struct Criterion
    {
        bool pass = true;
        std::vector<std::string> failures;

        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok) {
                pass = false;
                failures.push_back(what);
            }
        }
    };

    auto criterion_1() -> Criterion
    {
        Criterion c;
        auto g = Graph::from_edges(18, g18_edges());
        c.require(g == build_G18().graph, "library G18 differs from the transcribed construction");

        auto start = std::chrono::steady_clock::now();
        auto ex = exhaustive_solve(g);
        double t = seconds_since(start);
        c.require(ex.status == SolveStatus::Unsat, "exhaustive solver not Unsat");
        c.require(ex.stats.nodes == 262144, "exhaustive solver did not enumerate 2^18 colorings");
        c.require(t < g18_seconds, "exhaustive solve exceeded the time limit");
        c.require(count_crumby(g) == 0 && count_crumby_serial(g) == 0, "crumby count is not zero");
        c.require(backtracking_solve(g).status == SolveStatus::Unsat, "backtracking not Unsat");
        c.require(dpll_solve(g).status == SolveStatus::Unsat, "dpll not Unsat");

        auto adj = adjacency(18, g18_edges());
        std::uint64_t crumby = 0, examined = 0;
        for (Mask m = 0 ; m < (Mask{1} << 18) ; ++m, ++examined)
            crumby += oracle_crumby(adj, m);
        c.require(examined == 262144 && crumby == 0, "oracle enumeration found crumby colorings");
        return c;
    }

    auto criterion_2() -> Criterion
    {
        Criterion c;
        auto g = Graph::from_edges(40, g40_table);
        c.require(g == build_G40().graph, "library G40 differs from the transcribed table");
        auto start = std::chrono::steady_clock::now();
        auto bt = backtracking_solve(g);
        auto dp = dpll_solve(g);
        c.require(seconds_since(start) < g40_seconds, "solves exceeded the time limit");
        c.require(bt.status == SolveStatus::Unsat, "backtracking not Unsat");
        c.require(dp.status == SolveStatus::Unsat, "dpll not Unsat");
        c.require(bt.status == dp.status, "solvers disagree");
        bool refused = false;
        try {
            exhaustive_solve(g);
        }
        catch (const CapExceeded &) {
            refused = true;
        }
        c.require(refused, "exhaustive solver did not refuse n = 40");
        return c;
    }

    auto criterion_3() -> Criterion
    {
        Criterion c;
        auto adj = adjacency(9, f_table);
        std::vector<std::vector<Mask>> sets;
        for (int r : {A, B}) {
            auto feasible = feasible_set(adj, {X, r}, X, false, -1);
            c.require(! feasible.empty(), "empty feasible set");
            for (auto m : feasible)
                c.require(red(m, r) && ! has_red_neighbour(adj, m, r), "root neighbour not isolated red");
            auto report = verify_lemma1_i(r == A ? 'a' : 'b');
            c.require(report.pass && report.feasible == feasible.size(), "library report differs from oracle");
            sets.push_back(feasible);
        }
        // a<->b, c<->d, e<->f
        std::vector<int> swap{X, B, A, D, C, FF, E, G, H};
        std::set<Mask> image;
        for (auto m : sets[0]) {
            Mask s = 0;
            for (int v = 0 ; v < 9 ; ++v)
                if (red(m, v))
                    s |= Mask{1} << swap[v];
            image.insert(s);
        }
        c.require(image == std::set<Mask>(sets[1].begin(), sets[1].end()), "feasible sets do not correspond under the automorphism");
        c.require(lemma1_i_automorphism_consistent(), "library automorphism check failed");
        return c;
    }

    auto criterion_4() -> Criterion
    {
        Criterion c;
        auto adj = adjacency(9, f_table);
        for (int partner : {A, B})
            for (bool outside : {false, true}) {
                auto feasible = feasible_set(adj, {X, partner}, X, true, outside ? X : -1);
                for (auto m : feasible)
                    c.require(red(m, A) || red(m, B), "coloring with a and b blue");
                auto report = verify_lemma1_ii(partner == A ? 'a' : 'b', outside);
                c.require(report.pass && report.feasible == feasible.size(), "library report differs from oracle");
            }
        return c;
    }

    auto criterion_5() -> Criterion
    {
        Criterion c;
        auto adj = adjacency(11, r_edges());
        c.require(Graph::from_edges(11, r_edges()) == build_R().graph, "library R differs from the transcribed construction");
        auto feasible = feasible_set(adj, {0, 1}, 0, true, -1);
        c.require(! feasible.empty(), "no feasible colorings with s red");
        for (auto m : feasible) {
            bool rich = false;
            for (int p : adj[0])
                for (int q : adj[p])
                    rich = rich || (q != 0 && red(m, p) && red(m, q));
            c.require(rich, "s red but not rich");
        }
        c.require(feasible_set(adj, {0, 1}, 0, true, 0).empty(), "feasible coloring with an outside red neighbour");
        c.require(verify_lemma2(false).pass && verify_lemma2(false).feasible == feasible.size(), "library report differs");
        c.require(verify_lemma2(true).pass && verify_lemma2(true).feasible == 0, "library report differs with outside red");
        return c;
    }

    auto criterion_6() -> Criterion
    {
        Criterion c;
        auto edges = g18_edges();
        auto adj = adjacency(18, edges);
        auto g = build_G18().graph;
        c.require(connected_without(adj, -1) && is_connected(g), "not connected");
        std::vector<int> cuts;
        for (int v = 0 ; v < 18 ; ++v)
            if (! connected_without(adj, v))
                cuts.push_back(v);
        c.require(cuts == std::vector<int>{0, 9}, "oracle cut vertices are not {x1, x2}");
        c.require(cut_vertices(g) == std::vector<Vertex>{0, 9}, "library cut vertices are not {x1, x2}");
        c.require(! is_biconnected(g), "reported biconnected");
        c.require(g.max_degree() == 3 && g.edge_count() == 23, "wrong degree or edge count");

        // Elimination by hand: g,h,e,f,c,d,a,b per copy, then x1, x2.
        std::vector<int> order;
        for (int copy = 0 ; copy < 2 ; ++copy)
            for (int v : {G, H, E, FF, C, D, A, B})
                order.push_back(v + 9 * copy);
        order.push_back(0);
        order.push_back(9);
        std::vector<std::set<int>> nb(18);
        for (auto [u, v] : edges) {
            nb[u].insert(v);
            nb[v].insert(u);
        }
        std::vector<std::vector<int>> rows;
        std::vector<bool> gone(18, false);
        for (int v : order) {
            std::vector<int> rest;
            for (int u : nb[v])
                if (! gone[u])
                    rest.push_back(u);
            for (int u : rest)
                for (int w : rest)
                    if (u != w)
                        nb[u].insert(w);
            gone[v] = true;
            rows.push_back(rest);
        }
        std::vector<std::vector<int>> table{{E, FF}, {E, FF}, {C, FF}, {C, D}, {A, D}, {A, B}, {X, B}, {X}};
        std::vector<std::vector<int>> expected;
        for (int copy = 0 ; copy < 2 ; ++copy)
            for (auto row : table) {
                for (auto & v : row)
                    v += 9 * copy;
                std::sort(row.begin(), row.end());
                expected.push_back(row);
            }
        expected.push_back({9});
        expected.push_back({});
        c.require(rows == expected, "oracle elimination rows differ from the table");

        auto trace = eliminate(g, EliminationOrder(order.begin(), order.end()));
        c.require(trace.width == 2, "library width is not 2");
        for (std::size_t i = 0 ; i < rows.size() ; ++i)
            c.require(trace.steps[i].remaining == std::vector<Vertex>(rows[i].begin(), rows[i].end()),
                    "library row " + std::to_string(i) + " differs");
        return c;
    }

    auto criterion_7() -> Criterion
    {
        Criterion c;
        auto adj = adjacency(40, g40_table);
        auto g = Graph::from_edges(40, g40_table);
        c.require(g.edge_count() == 54, "not 54 edges");
        std::vector<int> deg2;
        for (int v = 0 ; v < 40 ; ++v)
            if (adj[v].size() == 2)
                deg2.push_back(v);
        c.require(deg2 == std::vector<int>{4, 9, 10, 15, 20, 21, 23, 28, 29, 32, 37, 38}, "degree-2 set differs");
        bool oracle_bic = connected_without(adj, -1);
        for (int v = 0 ; v < 40 ; ++v)
            oracle_bic = oracle_bic && connected_without(adj, v);
        c.require(oracle_bic, "oracle finds a cut vertex");
        c.require(is_biconnected(g), "lowpoint test says not biconnected");

        std::vector<std::vector<int>> ears{
            {0, 2, 3, 1}, {2, 4, 6, 5, 3}, {5, 7, 9, 8, 6}, {7, 10, 8},
            {11, 13, 14, 12}, {13, 15, 17, 16, 14}, {16, 18, 20, 19, 17}, {18, 21, 19},
            {30, 23, 25, 24, 22}, {24, 26, 28, 27, 25}, {26, 29, 27},
            {31, 32, 34, 33, 39}, {33, 35, 37, 36, 34}, {35, 38, 36}};
        std::vector<int> cycle{0, 1, 12, 11, 22, 30, 31, 39, 0};

        // Oracle ear check.
        std::set<Edge> used;
        std::set<int> built;
        bool ok = true;
        auto use = [&] (int u, int v) {
            Edge e{std::min(u, v), std::max(u, v)};
            ok = ok && g.adjacent(u, v) && used.insert(e).second;
        };
        for (std::size_t i = 0 ; i + 1 < cycle.size() ; ++i) {
            use(cycle[i], cycle[i + 1]);
            ok = ok && built.insert(cycle[i]).second;
        }
        ok = ok && cycle.front() == cycle.back();
        for (auto & ear : ears) {
            ok = ok && built.count(ear.front()) && built.count(ear.back()) && ear.front() != ear.back();
            for (std::size_t i = 1 ; i + 1 < ear.size() ; ++i)
                ok = ok && built.insert(ear[i]).second;
            for (std::size_t i = 0 ; i + 1 < ear.size() ; ++i)
                use(ear[i], ear[i + 1]);
        }
        ok = ok && built.size() == 40 && used.size() == 54;
        c.require(ok, "oracle rejects the ear decomposition");
        c.require(ears.size() == 14, "not 14 ears");

        EarDecomposition d;
        d.initial_cycle.assign(cycle.begin(), cycle.end());
        for (auto & ear : ears)
            d.ears.emplace_back(ear.begin(), ear.end());
        c.require(verify_ear_decomposition(g, d).valid, "library rejects the ear decomposition");
        return c;
    }

    auto criterion_8() -> Criterion
    {
        Criterion c;
        auto expansion = relabelled_g40_expansion();
        std::set<Edge> a(expansion.begin(), expansion.end()), b;
        for (auto [u, v] : g40_table)
            b.insert({std::min(u, v), std::max(u, v)});
        c.require(expansion.size() == 54 && a == b, "expansion differs from the transcribed table");
        c.require(compare_with_table(expansion, g40_table).empty(), "library comparison reports a difference");
        c.require(sp_g40().to_string() == "(E | (R . E . R^rev . E . Q^rev . E . Q))", "unexpected expression");

        auto corrupted = g40_table;
        corrupted[10] = Edge{0, 20};
        c.require(! compare_with_table(expansion, corrupted).empty(), "corrupted table not detected");
        return c;
    }

    auto oracle_minor_witness(const Adj & adj, const std::vector<Edge> & pattern, const std::vector<std::vector<Vertex>> & sets) -> bool
    {
        std::map<int, int> owner;
        for (std::size_t i = 0 ; i < sets.size() ; ++i) {
            if (sets[i].empty())
                return false;
            for (auto v : sets[i])
                if (! owner.emplace(v, static_cast<int>(i)).second)
                    return false;
        }
        for (std::size_t i = 0 ; i < sets.size() ; ++i) {
            std::set<int> seen{sets[i][0]};
            std::vector<int> stack{sets[i][0]};
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v])
                    if (owner.count(u) && owner[u] == static_cast<int>(i) && seen.insert(u).second)
                        stack.push_back(u);
            }
            if (seen.size() != sets[i].size())
                return false;
        }
        for (auto [p, q] : pattern) {
            bool joined = false;
            for (auto v : sets[p])
                for (int u : adj[v])
                    joined = joined || (owner.count(u) && owner[u] == q);
            if (! joined)
                return false;
        }
        return true;
    }

    auto criterion_9() -> Criterion
    {
        Criterion c;
        for (auto name : {"F", "R", "G18", "G40"})
            c.require(recognize_tw2(gadget_by_name(name).graph).treewidth_at_most_two, std::string(name) + " rejected");
        std::vector<Edge> subdivided{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
        c.require(! recognize_tw2(complete_graph(4)).treewidth_at_most_two, "K4 accepted");
        c.require(! recognize_tw2(Graph::from_edges(5, subdivided)).treewidth_at_most_two, "K4 subdivision accepted");
        c.require(has_minor(build_G18().graph, complete_graph(4)).status == MinorStatus::NotFound, "K4 minor in G18");

        auto k23 = has_minor(build_F().graph, complete_bipartite_graph(2, 3), 0, {C, D});
        c.require(k23.status == MinorStatus::Found && k23.witness.has_value(), "no K2,3 minor in F");
        if (k23.witness) {
            auto & sets = k23.witness->branch_sets;
            c.require(std::find(sets.begin(), sets.end(), std::vector<Vertex>{C, D}) != sets.end(), "no branch set {c,d}");
            auto pattern = complete_bipartite_graph(2, 3).edges();
            c.require(oracle_minor_witness(adjacency(9, f_table), pattern, sets), "oracle rejects the witness");
        }

        for (auto [g, adj] : {std::pair{build_G18().graph, adjacency(18, g18_edges())}, std::pair{build_G40().graph, adjacency(40, g40_table)}}) {
            auto r = is_bipartite(g);
            c.require(! r.bipartite, "reported bipartite");
            auto & cyc = r.odd_cycle;
            bool ok = cyc.size() % 2 == 1 && cyc.size() >= 3 && std::set<Vertex>(cyc.begin(), cyc.end()).size() == cyc.size();
            for (std::size_t i = 0 ; ok && i < cyc.size() ; ++i) {
                auto & nb = adj[cyc[i]];
                ok = std::find(nb.begin(), nb.end(), cyc[(i + 1) % cyc.size()]) != nb.end();
            }
            c.require(ok, "odd cycle witness invalid");
        }
        // x, a, c, d, b is a 5-cycle of F.
        auto f = build_F().graph;
        c.require(f.adjacent(X, A) && f.adjacent(A, C) && f.adjacent(C, D) && f.adjacent(D, B) && f.adjacent(B, X), "5-cycle missing");
        return c;
    }

    auto criterion_10() -> Criterion
    {
        Criterion c;
        std::vector<std::string> lines;
        std::uint64_t assignments = 0;
        for (int n = 1 ; n <= 7 ; ++n)
            for (auto & line : generate_small(n)) {
                lines.push_back(line);
                auto g = parse_graph6(line);
                auto edges = g.edges();
                auto adj = adjacency(n, edges);
                auto f = encode_cnf(g);
                bool any = false;
                for (Mask m = 0 ; m < (Mask{1} << n) ; ++m) {
                    bool ok = oracle_crumby(adj, m);
                    auto col = to_coloring(n, m);
                    any = any || ok;
                    if (satisfies(f, col) != ok || verify_crumby(g, col).crumby != ok) {
                        c.require(false, "CNF or verifier disagrees with the oracle on " + line);
                        return c;
                    }
                    ++assignments;
                }
                auto expected = any ? SolveStatus::Sat : SolveStatus::Unsat;
                c.require(exhaustive_solve(g).status == expected, "exhaustive disagrees on " + line);
                c.require(backtracking_solve(g).status == expected, "backtracking disagrees on " + line);
                c.require(dpll_solve(g).status == expected, "dpll disagrees on " + line);
            }
        c.require(lines.size() == 996, "generator family has the wrong size");
        c.require(assignments > 100000, "too few assignments checked");

        std::mt19937_64 rng(314159);
        std::uint64_t mismatches = 0;
        for (std::uint64_t i = 0 ; i < random_pairs ; ++i) {
            int n = std::uniform_int_distribution<int>(1, 10)(rng);
            std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.7)(rng));
            std::vector<Edge> edges;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (coin(rng))
                        edges.emplace_back(u, v);
            auto g = Graph::from_edges(n, edges);
            Mask m = std::uniform_int_distribution<Mask>(0, (Mask{1} << n) - 1)(rng);
            auto col = to_coloring(n, m);
            bool a = verify_crumby(g, col).crumby, b = verify_crumby_by_components(g, col);
            mismatches += (a != b) || (a != oracle_crumby(adjacency(n, edges), m));
        }
        c.require(mismatches == 0, std::to_string(mismatches) + " verifier mismatches");

        SurveyOptions o;
        o.filters.connected = o.filters.subcubic = o.filters.tw2 = true;
        auto report = survey_lines(lines, o);
        c.require(report.ok(), "survey cross-check failure");
        c.require(report.totals().unsat_graph6.empty(), "survey Unsat list differs from the frozen empty list");
        c.require(report.totals().tested == 91, "survey tested count differs from the frozen 91");
        for (auto & [n, counts] : report.by_order)
            for (auto & line : counts.unsat_graph6)
                c.require(exhaustive_solve(parse_graph6(line)).status == SolveStatus::Unsat, "Unsat not confirmed: " + line);
        return c;
    }

    auto criterion_11() -> Criterion
    {
        Criterion c;
        // From the gadget feasible sets alone.
        auto adj = adjacency(9, f_table);
        auto blue_root = feasible_set(adj, {X, A}, X, false, -1);
        bool a_unsupported = std::all_of(blue_root.begin(), blue_root.end(),
                [&] (Mask m) { return red(m, A) && ! has_red_neighbour(adj, m, A); });
        c.require(a_unsupported, "a blue root leaves a supported");

        // Both roots red and adjacent: each side has x red with an outside red neighbour.
        auto red_root = feasible_set(adj, {X}, X, true, X);
        bool every_pair_p4 = ! red_root.empty();
        for (auto m1 : red_root)
            for (auto m2 : red_root) {
                bool p4 = (red(m1, A) || red(m1, B)) && (red(m2, A) || red(m2, B));
                every_pair_p4 = every_pair_p4 && p4;
            }
        c.require(every_pair_p4, "a red-root pair avoids a red P4 through the bridge");

        auto report = compose_g18();
        c.require(report.blue_root_supported == 0, "library finds a supported a");
        c.require(report.contradiction && report.solver_unsat && report.agrees(), "library composition does not agree");
        c.require(report.pairs_with_red_p4_through_bridge == report.pairs_checked, "library pair counts differ");
        return c;
    }
}

auto main() -> int
{
    std::vector<std::pair<std::string, std::function<Criterion ()>>> criteria{
        {"1 G18 unsat by all methods; 2^18 colorings, none crumby", criterion_1},
        {"2 G40 unsat by backtracking and DPLL", criterion_2},
        {"3 rooted gadget, blue root", criterion_3},
        {"4 rooted gadget, red root", criterion_4},
        {"5 rich gadget", criterion_5},
        {"6 G18 structure and elimination table", criterion_6},
        {"7 G40 structure, biconnectivity, ears", criterion_7},
        {"8 series-parallel expression equals the edge table", criterion_8},
        {"9 K4-minor-freeness, K2,3 minor, odd cycles", criterion_9},
        {"10 property suite", criterion_10},
        {"11 composition agrees with the solver", criterion_11},
    };

    bool all = true;
    for (auto & [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Criterion result;
        try {
            result = run();
        }
        catch (const std::exception & e) {
            result.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %s (%.3f s)\n", result.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(start));
        for (auto & f : result.failures)
            std::printf("    %s\n", f.c_str());
        all = all && result.pass;
    }
    return all ? 0 : 1;
}
