#include <crumby/certify.hh>
#include <crumby/coloring.hh>
#include <crumby/graph_io.hh>
#include <crumby/search.hh>
#include <crumby/solve.hh>
#include <crumby/structure.hh>

#include <istream>
#include <set>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::vector;

auto SurveyReport::totals() const -> OrderCounts
{
    OrderCounts t;
    for (auto & [_, c] : by_order) {
        t.tested += c.tested;
        t.sat += c.sat;
        t.unsat += c.unsat;
        t.indeterminate += c.indeterminate;
        t.unsat_graph6.insert(t.unsat_graph6.end(), c.unsat_graph6.begin(), c.unsat_graph6.end());
    }
    return t;
}

namespace
{
    enum class Outcome
    {
        Skipped,
        Filtered,
        Decided
    };

    struct InstanceResult
    {
        Outcome outcome = Outcome::Skipped;
        string reason;
        int order = 0;
        SolveStatus status = SolveStatus::Indeterminate;
        vector<string> failures;
    };

    auto passes(const Graph & g, const SurveyFilters & f) -> bool
    {
        if (f.subcubic && g.max_degree() > 3)
            return false;
        if (f.connected && ! is_connected(g))
            return false;
        if (f.biconnected && ! is_biconnected(g))
            return false;
        if (f.tw2 && ! recognize_tw2(g).treewidth_at_most_two)
            return false;
        return true;
    }

    auto decide(const string & line, const SurveyOptions & options) -> InstanceResult
    {
        InstanceResult r;
        Graph g;
        try {
            g = parse_graph6(line);
        }
        catch (const std::exception & e) {
            r.reason = e.what();
            return r;
        }

        if (! passes(g, options.filters)) {
            r.outcome = Outcome::Filtered;
            return r;
        }

        r.outcome = Outcome::Decided;
        r.order = g.size();

        SolveOptions so;
        so.node_budget = options.node_budget;
        auto primary = backtracking_solve(g, so);
        r.status = primary.status;

        if (primary.status == SolveStatus::Sat) {
            if (! verify_crumby(g, *primary.coloring))
                r.failures.push_back(line + ": backtracking certificate fails verification");
        }
        else if (primary.status == SolveStatus::Unsat) {
            if (dpll_solve(g, so).status != SolveStatus::Unsat)
                r.failures.push_back(line + ": dpll disagrees with backtracking Unsat");
            if (g.size() <= exhaustive_max_order && exhaustive_solve(g).status != SolveStatus::Unsat)
                r.failures.push_back(line + ": exhaustive oracle disagrees with backtracking Unsat");
        }
        return r;
    }

    auto strip(string line) -> string
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        return line;
    }
}

auto crumby::survey_lines(const vector<string> & raw, const SurveyOptions & options) -> SurveyReport
{
    SurveyReport report;
    report.filters = options.filters;

    // Blank lines and the optional ">>graph6<<" header are not instances.
    vector<std::pair<std::uint64_t, string>> lines;
    for (std::size_t i = 0 ; i < raw.size() ; ++i) {
        auto line = strip(raw[i]);
        if (line.rfind(">>graph6<<", 0) == 0)
            line = line.substr(10);
        if (line.empty())
            continue;
        lines.emplace_back(i + 1, line);
    }
    report.lines_read = lines.size();

    vector<InstanceResult> results(lines.size());
    const long long count = static_cast<long long>(lines.size());
    if (options.parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0 ; i < count ; ++i)
            results[i] = decide(lines[i].second, options);
    }
    else
        for (long long i = 0 ; i < count ; ++i)
            results[i] = decide(lines[i].second, options);

    for (std::size_t i = 0 ; i < results.size() ; ++i) {
        auto & r = results[i];
        switch (r.outcome) {
            case Outcome::Skipped:
                report.skipped.push_back(SkippedLine{lines[i].first, r.reason});
                break;
            case Outcome::Filtered:
                ++report.filtered_out;
                break;
            case Outcome::Decided: {
                auto & c = report.by_order[r.order];
                ++c.tested;
                switch (r.status) {
                    case SolveStatus::Sat: ++c.sat; break;
                    case SolveStatus::Unsat: ++c.unsat; c.unsat_graph6.push_back(lines[i].second); break;
                    case SolveStatus::Indeterminate: ++c.indeterminate; break;
                }
                break;
            }
        }
        report.cross_check_failures.insert(report.cross_check_failures.end(), r.failures.begin(), r.failures.end());
    }
    return report;
}

auto crumby::survey_stream(std::istream & in, const SurveyOptions & options) -> SurveyReport
{
    vector<string> lines;
    string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return survey_lines(lines, options);
}

namespace
{
    auto filter_names(const SurveyFilters & f) -> string
    {
        string s;
        auto add = [&] (bool on, const char * name) {
            if (on)
                s += (s.empty() ? "" : ",") + string(name);
        };
        add(f.connected, "connected");
        add(f.subcubic, "subcubic");
        add(f.tw2, "tw2");
        add(f.biconnected, "biconnected");
        return s.empty() ? "none" : s;
    }
}

auto crumby::format_report(const SurveyReport & r) -> string
{
    string out = "filters: " + filter_names(r.filters) + "\n";
    out += "lines read: " + to_string(r.lines_read) + ", filtered out: " + to_string(r.filtered_out)
        + ", skipped: " + to_string(r.skipped.size()) + "\n";
    for (auto & [n, c] : r.by_order) {
        out += "n=" + to_string(n) + ": tested " + to_string(c.tested) + ", sat " + to_string(c.sat)
            + ", unsat " + to_string(c.unsat);
        if (c.indeterminate)
            out += ", indeterminate " + to_string(c.indeterminate);
        out += "\n";
        for (auto & g6 : c.unsat_graph6)
            out += "  unsat " + g6 + "\n";
    }
    auto t = r.totals();
    out += "total: tested " + to_string(t.tested) + ", sat " + to_string(t.sat) + ", unsat " + to_string(t.unsat)
        + ", indeterminate " + to_string(t.indeterminate) + "\n";
    for (auto & s : r.skipped)
        out += "skipped line " + to_string(s.line_number) + ": " + s.reason + "\n";
    for (auto & f : r.cross_check_failures)
        out += "CROSS-CHECK FAILURE: " + f + "\n";
    out += "coverage: exhaustive relative to the input stream only\n";
    return out;
}

auto crumby::format_report_machine(const SurveyReport & r) -> string
{
    string out;
    for (auto & [n, c] : r.by_order)
        out += "n=" + to_string(n) + " tested=" + to_string(c.tested) + " sat=" + to_string(c.sat)
            + " unsat=" + to_string(c.unsat) + " indeterminate=" + to_string(c.indeterminate) + "\n";
    auto t = r.totals();
    out += "total tested=" + to_string(t.tested) + " sat=" + to_string(t.sat) + " unsat=" + to_string(t.unsat)
        + " indeterminate=" + to_string(t.indeterminate) + " skipped=" + to_string(r.skipped.size())
        + " filtered=" + to_string(r.filtered_out) + " cross_check_failures=" + to_string(r.cross_check_failures.size())
        + " filters=" + filter_names(r.filters) + "\n";
    return out;
}

auto crumby::generate_small(int n) -> vector<string>
{
    if (n > generator_max_order)
        throw CapExceeded("the built-in generator stops at n = " + to_string(generator_max_order)
                + "; feed larger families from an external graph6 generator into the survey");
    if (n < 1)
        throw std::invalid_argument("generate_small needs n >= 1");

    std::set<string> current{emit_graph6(Graph(1))};
    for (int order = 2 ; order <= n ; ++order) {
        std::set<string> next;
        for (auto & line : current) {
            auto base = parse_graph6(line);
            auto edges = base.edges();
            int m = order - 1;
            for (unsigned subset = 1 ; subset < (1u << m) ; ++subset) {
                auto grown = edges;
                for (int v = 0 ; v < m ; ++v)
                    if (subset & (1u << v))
                        grown.emplace_back(v, m);
                next.insert(emit_graph6(canonical_form(Graph::from_edges(order, grown))));
            }
        }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}
