#include <crumby/certify.hh>
#include <crumby/cnf.hh>
#include <crumby/coloring.hh>
#include <crumby/gadgets.hh>
#include <crumby/graph_io.hh>
#include <crumby/lemmas.hh>
#include <crumby/replication.hh>
#include <crumby/search.hh>
#include <crumby/solve.hh>
#include <crumby/structure.hh>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <utility>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::pair;
using std::string;
using std::vector;

auto crumby::to_string(Provenance p) -> string
{
    switch (p) {
        case Provenance::PaperClaim: return "claim";
        case Provenance::DerivedRegression: return "regression";
    }
    return "?";
}

namespace
{
    using Outcome = pair<bool, string>;

    class Runner
    {
        private:
            const std::function<void (const CheckResult &)> & _on_check;

        public:
            vector<CheckResult> results;

            explicit Runner(const std::function<void (const CheckResult &)> & on_check) :
                _on_check(on_check)
            {
            }

            template <typename F_>
            auto check(int criterion, string id, Provenance provenance, F_ && body) -> void
            {
                CheckResult r;
                r.criterion = criterion;
                r.id = std::move(id);
                r.provenance = provenance;
                auto start = std::chrono::steady_clock::now();
                try {
                    auto [pass, detail] = body();
                    r.pass = pass;
                    r.detail = std::move(detail);
                }
                catch (const std::exception & e) {
                    r.pass = false;
                    r.detail = string("exception: ") + e.what();
                }
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                emit(std::move(r));
            }

            auto skip(int criterion, string id, Provenance provenance, string why) -> void
            {
                CheckResult r;
                r.criterion = criterion;
                r.id = std::move(id);
                r.provenance = provenance;
                r.skipped = true;
                r.detail = std::move(why);
                emit(std::move(r));
            }

            auto emit(CheckResult r) -> void
            {
                if (_on_check)
                    _on_check(r);
                results.push_back(std::move(r));
            }
    };

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    auto join(const vector<Vertex> & vs) -> string
    {
        string s;
        for (auto v : vs)
            s += (s.empty() ? "" : ",") + to_string(v);
        return "{" + s + "}";
    }

    auto status_word(const SolveResult & r) -> string
    {
        return to_string(r.status);
    }

    // Elimination order g,h,e,f,c,d,a,b in each copy, then both roots; and the
    // remaining-neighbour table for one copy.
    constexpr std::array<std::string_view, 8> copy_order{"g", "h", "e", "f", "c", "d", "a", "b"};
    const vector<pair<string, vector<string>>> copy_table{
        {"g", {"e", "f"}}, {"h", {"e", "f"}}, {"e", {"c", "f"}}, {"f", {"c", "d"}},
        {"c", {"a", "d"}}, {"d", {"a", "b"}}, {"a", {"x", "b"}}, {"b", {"x"}}};

    const EarDecomposition g40_ears{
        {0, 1, 12, 11, 22, 30, 31, 39, 0},
        {
            {0, 2, 3, 1}, {2, 4, 6, 5, 3}, {5, 7, 9, 8, 6}, {7, 10, 8},
            {11, 13, 14, 12}, {13, 15, 17, 16, 14}, {16, 18, 20, 19, 17}, {18, 21, 19},
            {30, 23, 25, 24, 22}, {24, 26, 28, 27, 25}, {26, 29, 27},
            {31, 32, 34, 33, 39}, {33, 35, 37, 36, 34}, {35, 38, 36}
        }};

    const vector<Vertex> g40_degree_two{4, 9, 10, 15, 20, 21, 23, 28, 29, 32, 37, 38};

    // Regression constants, frozen after the first verified run.
    const vector<std::size_t> lemma_feasible_counts{4, 4, 10, 4, 10, 4, 8, 0};
    constexpr std::size_t composition_red_root_colorings = 4;
    constexpr std::uint64_t composition_pairs = 16;
    const vector<std::size_t> connected_census{1, 1, 2, 6, 21, 112, 853};
    // Connected, subcubic, treewidth <= 2 graphs per order 1..7, all Sat.
    const vector<std::uint64_t> survey_tested{1, 1, 2, 5, 9, 23, 50};
    const vector<string> survey_unsat{};

    auto small_family() -> vector<pair<int, vector<string>>>
    {
        vector<pair<int, vector<string>>> family;
        for (int n = 1 ; n <= generator_max_order ; ++n)
            family.emplace_back(n, generate_small(n));
        return family;
    }
}

auto crumby::run_replication(const ReplicationOptions & options,
        const std::function<void (const CheckResult &)> & on_check) -> vector<CheckResult>
{
    Runner run(on_check);
    const auto claim = Provenance::PaperClaim;
    const auto regression = Provenance::DerivedRegression;

    auto g18 = build_G18();
    const Graph & G18 = g18.graph;

    // Criterion 1.
    if (options.quick)
        run.skip(1, "g18-exhaustive", claim, "quick mode skips the 2^18 enumeration");
    else
        run.check(1, "g18-exhaustive", claim, [&] () -> Outcome {
            auto start = std::chrono::steady_clock::now();
            auto r = exhaustive_solve(G18);
            auto count = count_crumby(G18);
            double t = seconds_since(start);
            bool ok = r.status == SolveStatus::Unsat && r.stats.nodes == (1ull << 18) && count == 0 && t < g18_time_limit;
            return {ok, to_string(r.stats.nodes) + " colorings enumerated, " + to_string(count) + " crumby, status "
                + status_word(r)};
        });

    for (auto method : {SolveMethod::Backtracking, SolveMethod::Dpll})
        run.check(1, "g18-" + to_string(method), claim, [&] () -> Outcome {
            auto start = std::chrono::steady_clock::now();
            auto r = solve(G18, method);
            double t = seconds_since(start);
            return {r.status == SolveStatus::Unsat && t < g18_time_limit,
                "status " + status_word(r) + " after " + to_string(r.stats.nodes) + " nodes"};
        });

    // Criterion 2.
    std::optional<Graph> g40;
    try {
        g40 = options.g40_table ? Graph::from_edges(40, *options.g40_table) : build_G40().graph;
    }
    catch (const std::exception &) {
    }

    run.check(2, "g40-solvers", claim, [&] () -> Outcome {
        if (! g40)
            return {false, "edge table does not form a simple graph on 40 vertices"};
        auto start = std::chrono::steady_clock::now();
        auto bt = backtracking_solve(*g40);
        auto dp = dpll_solve(*g40);
        double t = seconds_since(start);
        bool ok = bt.status == SolveStatus::Unsat && dp.status == SolveStatus::Unsat && t < g40_time_limit;
        return {ok, "backtracking " + status_word(bt) + " (" + to_string(bt.stats.nodes) + " nodes), dpll "
            + status_word(dp) + " (" + to_string(dp.stats.nodes) + " nodes)"};
    });

    // Criteria 3 to 5, plus the frozen feasible-set sizes.
    auto reports = run_all_lemmas();
    for (std::size_t i = 0 ; i < reports.size() ; ++i) {
        auto & r = reports[i];
        int criterion = r.lemma == "lemma1.i" ? 3 : r.lemma == "lemma1.ii" ? 4 : 5;
        run.check(criterion, r.lemma, claim, [&] () -> Outcome {
            string detail = r.scenario + ": " + to_string(r.feasible) + " feasible";
            if (r.counterexample)
                detail += ", counterexample " + to_string(*r.counterexample);
            return {r.pass, detail};
        });
        if (r.lemma == "lemma1.i" && (i + 1 == reports.size() || reports[i + 1].lemma != "lemma1.i"))
            run.check(3, "lemma1.i-automorphism", claim, [&] () -> Outcome {
                return {lemma1_i_automorphism_consistent(), "r = a and r = b feasible sets correspond under the swap"};
            });
    }
    run.check(5, "lemma-feasible-counts", regression, [&] () -> Outcome {
        string got;
        bool ok = reports.size() == lemma_feasible_counts.size();
        for (std::size_t i = 0 ; i < reports.size() ; ++i) {
            got += (i ? "," : "") + to_string(reports[i].feasible);
            ok = ok && reports[i].feasible == lemma_feasible_counts[i];
        }
        return {ok, "feasible set sizes " + got};
    });

    // Criterion 6.
    run.check(6, "g18-structure", claim, [&] () -> Outcome {
        auto cuts = cut_vertices(G18);
        vector<Vertex> expected_cuts{g18.vertex_with_role("x1"), g18.vertex_with_role("x2")};
        bool ok = is_connected(G18) && cuts == expected_cuts && ! is_biconnected(G18)
            && G18.max_degree() == 3 && G18.edge_count() == 23 && G18.size() == 18;
        return {ok, "connected, cut vertices " + join(cuts) + ", max degree " + to_string(G18.max_degree())
            + ", " + to_string(G18.edge_count()) + " edges"};
    });
    run.check(6, "g18-elimination-table", claim, [&] () -> Outcome {
        EliminationOrder order;
        for (string copy : {"1", "2"})
            for (auto role : copy_order)
                order.push_back(g18.vertex_with_role(string(role) + copy));
        order.push_back(g18.vertex_with_role("x1"));
        order.push_back(g18.vertex_with_role("x2"));
        auto trace = eliminate(G18, order);

        vector<vector<Vertex>> expected;
        for (string copy : {"1", "2"})
            for (auto & [v, rest] : copy_table) {
                vector<Vertex> row;
                for (auto & w : rest)
                    row.push_back(g18.vertex_with_role(w + copy));
                std::sort(row.begin(), row.end());
                expected.push_back(row);
            }
        expected.push_back({g18.vertex_with_role("x2")});
        expected.push_back({});

        bool ok = trace.width == 2 && trace.steps.size() == expected.size();
        for (std::size_t i = 0 ; ok && i < expected.size() ; ++i)
            ok = trace.steps[i].remaining == expected[i];
        return {ok, "width " + to_string(trace.width) + ", " + to_string(trace.steps.size()) + " rows compared"};
    });

    // Criterion 7.
    run.check(7, "g40-structure", claim, [&] () -> Outcome {
        if (! g40)
            return {false, "edge table does not form a simple graph on 40 vertices"};
        vector<Vertex> degree_two;
        for (Vertex v = 0 ; v < g40->size() ; ++v)
            if (g40->degree(v) == 2)
                degree_two.push_back(v);
        bool ok = g40->edge_count() == 54 && degree_two == g40_degree_two && g40->max_degree() == 3;
        return {ok, to_string(g40->edge_count()) + " edges, degree-2 vertices " + join(degree_two)};
    });
    run.check(7, "g40-biconnected", claim, [&] () -> Outcome {
        if (! g40)
            return {false, "edge table does not form a simple graph on 40 vertices"};
        bool lowpoint = is_biconnected(*g40);
        auto ears = verify_ear_decomposition(*g40, g40_ears);
        return {lowpoint && ears.valid, string("lowpoint ") + (lowpoint ? "biconnected" : "not biconnected")
            + ", ear decomposition " + (ears.valid ? "valid" : "invalid: " + ears.reason)};
    });

    // Criterion 8.
    run.check(8, "g40-sp-equality", claim, [&] () -> Outcome {
        auto table = options.g40_table ? *options.g40_table : vector<Edge>(g40_edge_table().begin(), g40_edge_table().end());
        auto diff = compare_with_table(relabelled_g40_expansion(), table);
        return {diff.empty(), diff.empty() ? "expansion of " + sp_g40().to_string() + " equals the 54-edge table"
            : diff.describe()};
    });

    // Criterion 9.
    run.check(9, "tw2-recognition", claim, [&] () -> Outcome {
        bool ok = true;
        string detail;
        for (string name : {"F", "R", "G18"}) {
            bool accepted = recognize_tw2(gadget_by_name(name).graph).treewidth_at_most_two;
            ok = ok && accepted;
            detail += name + (accepted ? " accepted, " : " rejected, ");
        }
        bool g40_accepted = g40 && recognize_tw2(*g40).treewidth_at_most_two;
        ok = ok && g40_accepted;
        detail += string("G40 ") + (g40_accepted ? "accepted, " : "rejected, ");

        // K4 with the edge 0-1 subdivided by vertex 4.
        vector<Edge> subdivided{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
        bool k4 = recognize_tw2(complete_graph(4)).treewidth_at_most_two;
        bool k4s = recognize_tw2(Graph::from_edges(5, subdivided)).treewidth_at_most_two;
        ok = ok && ! k4 && ! k4s;
        detail += string("K4 ") + (k4 ? "accepted" : "rejected") + ", K4 subdivision " + (k4s ? "accepted" : "rejected");
        return {ok, detail};
    });
    run.check(9, "g18-no-k4-minor", claim, [&] () -> Outcome {
        auto r = has_minor(G18, complete_graph(4));
        return {r.status == MinorStatus::NotFound, "search finished after " + to_string(r.nodes) + " nodes"};
    });
    run.check(9, "f-k23-minor", claim, [&] () -> Outcome {
        auto f = build_F();
        vector<Vertex> cd{f.vertex_with_role("c"), f.vertex_with_role("d")};
        auto r = has_minor(f.graph, complete_bipartite_graph(2, 3), 0, cd);
        if (r.status != MinorStatus::Found || ! r.witness)
            return {false, "no K2,3 minor with c and d merged"};
        bool valid = validate_minor_witness(f.graph, complete_bipartite_graph(2, 3), *r.witness);
        string sets;
        for (auto & bs : r.witness->branch_sets) {
            string s;
            for (auto v : bs)
                s += f.roles[v];
            sets += (sets.empty() ? "" : " ") + ("{" + s + "}");
        }
        return {valid, "branch sets " + sets};
    });
    run.check(9, "odd-cycles", claim, [&] () -> Outcome {
        auto b18 = is_bipartite(G18);
        bool ok = ! b18.bipartite && b18.odd_cycle.size() % 2 == 1 && is_cycle_of(G18, b18.odd_cycle);
        string detail = "G18 odd cycle " + join(b18.odd_cycle);
        if (! g40)
            return {false, detail + "; no 40-vertex graph"};
        auto b40 = is_bipartite(*g40);
        ok = ok && ! b40.bipartite && b40.odd_cycle.size() % 2 == 1 && is_cycle_of(*g40, b40.odd_cycle);
        return {ok, detail + ", G40 odd cycle " + join(b40.odd_cycle)};
    });

    // Criterion 10.
    if (options.quick) {
        for (string id : {"generator-census", "solver-agreement", "cnf-equivalence", "verifier-agreement", "survey-small"})
            run.skip(10, id, id == "generator-census" || id == "survey-small" ? regression : claim,
                    "quick mode skips the property sweeps");
    }
    else {
        auto family = small_family();
        run.check(10, "generator-census", regression, [&] () -> Outcome {
            string got;
            bool ok = family.size() == connected_census.size();
            for (std::size_t i = 0 ; i < family.size() ; ++i) {
                got += (i ? "," : "") + to_string(family[i].second.size());
                ok = ok && family[i].second.size() == connected_census[i];
            }
            return {ok, "connected graphs per order " + got};
        });
        run.check(10, "solver-agreement", claim, [&] () -> Outcome {
            std::uint64_t graphs = 0, disagreements = 0;
            for (auto & [n, lines] : family)
                for (auto & line : lines) {
                    auto g = parse_graph6(line);
                    auto ex = exhaustive_solve(g).status;
                    if (backtracking_solve(g).status != ex || dpll_solve(g).status != ex)
                        ++disagreements;
                    ++graphs;
                }
            return {disagreements == 0, to_string(graphs) + " graphs, " + to_string(disagreements) + " disagreements"};
        });
        run.check(10, "cnf-equivalence", claim, [&] () -> Outcome {
            std::uint64_t assignments = 0, mismatches = 0;
            for (auto & [n, lines] : family)
                for (auto & line : lines) {
                    auto g = parse_graph6(line);
                    auto f = encode_cnf(g);
                    for (std::uint64_t mask = 0 ; mask < (1ull << n) ; ++mask) {
                        auto c = Coloring::from_mask(n, mask);
                        if (satisfies(f, c) != verify_crumby(g, c).crumby)
                            ++mismatches;
                        ++assignments;
                    }
                }
            return {mismatches == 0, to_string(assignments) + " assignments, " + to_string(mismatches) + " mismatches"};
        });
        run.check(10, "verifier-agreement", claim, [&] () -> Outcome {
            std::mt19937_64 rng(20261015);
            std::uint64_t mismatches = 0;
            for (std::uint64_t i = 0 ; i < options.random_pairs ; ++i) {
                int n = std::uniform_int_distribution<int>(1, 10)(rng);
                double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
                std::bernoulli_distribution edge(p);
                vector<Edge> edges;
                for (int u = 0 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v)
                        if (edge(rng))
                            edges.emplace_back(u, v);
                auto g = Graph::from_edges(n, edges);
                auto c = Coloring::from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, (1ull << n) - 1)(rng));
                if (verify_crumby(g, c).crumby != verify_crumby_by_components(g, c))
                    ++mismatches;
            }
            return {mismatches == 0, to_string(options.random_pairs) + " random pairs, " + to_string(mismatches) + " mismatches"};
        });
        run.check(10, "survey-small", regression, [&] () -> Outcome {
            vector<string> lines;
            for (auto & [n, ls] : family)
                lines.insert(lines.end(), ls.begin(), ls.end());
            SurveyOptions so;
            so.filters.connected = so.filters.subcubic = so.filters.tw2 = true;
            auto report = survey_lines(lines, so);
            bool ok = report.ok() && report.totals().unsat_graph6 == survey_unsat && report.skipped.empty();
            string got;
            for (int n = 1 ; n <= generator_max_order ; ++n) {
                auto it = report.by_order.find(n);
                std::uint64_t tested = it == report.by_order.end() ? 0 : it->second.tested;
                got += (n > 1 ? "," : "") + to_string(tested);
                ok = ok && tested == survey_tested[n - 1];
            }
            return {ok, "tested per order " + got + ", unsat " + to_string(report.totals().unsat)
                + ", cross-check failures " + to_string(report.cross_check_failures.size())};
        });
    }

    // Criterion 11.
    run.check(11, "g18-composition", claim, [&] () -> Outcome {
        auto c = compose_g18();
        return {c.agrees() && c.blue_root_supported == 0, "blue root leaves a unsupported in "
            + to_string(c.blue_root_supported) + " colorings; " + to_string(c.pairs_with_red_p4_through_bridge) + " of "
            + to_string(c.pairs_checked) + " red-root pairs carry a red P4 through x1x2; solver "
            + (c.solver_unsat ? "Unsat" : "not Unsat")};
    });
    run.check(11, "composition-counts", regression, [&] () -> Outcome {
        auto c = compose_g18();
        bool ok = c.red_root_colorings == composition_red_root_colorings && c.pairs_checked == composition_pairs;
        return {ok, to_string(c.red_root_colorings) + " red-root colorings, " + to_string(c.pairs_checked) + " pairs"};
    });

    return std::move(run.results);
}

auto crumby::format_check(const CheckResult & r, bool with_time) -> string
{
    char head[64];
    std::snprintf(head, sizeof(head), "%-5s %-11s c%-3d", r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL",
            to_string(r.provenance).c_str(), r.criterion);
    char tail[32];
    std::snprintf(tail, sizeof(tail), " (%.3f s)", r.seconds);
    return string(head) + r.id + ": " + r.detail + (r.skipped || ! with_time ? "" : tail);
}

auto crumby::all_passed(const vector<CheckResult> & results) -> bool
{
    for (auto & r : results)
        if (! r.skipped && ! r.pass)
            return false;
    return true;
}
