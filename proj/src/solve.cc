#include <crumby/graph_io.hh>
#include <crumby/solve.hh>

#include <sstream>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::string_view;

auto crumby::to_string(SolveStatus s) -> string
{
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        case SolveStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

auto crumby::to_string(SolveMethod m) -> string
{
    switch (m) {
        case SolveMethod::Exhaustive: return "exhaustive";
        case SolveMethod::Backtracking: return "backtracking";
        case SolveMethod::Dpll: return "dpll";
    }
    return "?";
}

auto crumby::parse_solve_method(string_view name) -> SolveMethod
{
    if (name == "exhaustive")
        return SolveMethod::Exhaustive;
    if (name == "backtracking")
        return SolveMethod::Backtracking;
    if (name == "dpll")
        return SolveMethod::Dpll;
    throw std::invalid_argument("unknown solve method \"" + string(name) + "\" (expected exhaustive, backtracking or dpll)");
}

auto crumby::solve(const Graph & g, SolveMethod method, const SolveOptions & options) -> SolveResult
{
    switch (method) {
        case SolveMethod::Exhaustive: return options.parallel ? exhaustive_solve(g) : exhaustive_solve_serial(g);
        case SolveMethod::Backtracking: return backtracking_solve(g, options);
        case SolveMethod::Dpll: return dpll_solve(g, options);
    }
    throw std::invalid_argument("unknown solve method");
}

auto crumby::emit_certificate(const SolveResult & r) -> string
{
    string out;
    out += "status " + to_string(r.status) + "\n";
    out += "solver " + r.solver + "\n";
    out += "nodes " + std::to_string(r.stats.nodes) + "\n";
    out += "propagations " + std::to_string(r.stats.propagations) + "\n";
    if (r.coloring)
        out += "coloring " + to_string(*r.coloring) + "\n";
    return out;
}

auto crumby::parse_certificate(string_view text) -> SolveResult
{
    SolveResult r;
    bool have_status = false;
    std::istringstream in{string(text)};
    string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        string key;
        fields >> key;
        string rest;
        std::getline(fields, rest);
        if (auto p = rest.find_first_not_of(' ') ; p != string::npos)
            rest = rest.substr(p);
        else
            rest.clear();

        if (key == "status") {
            have_status = true;
            if (rest == "sat")
                r.status = SolveStatus::Sat;
            else if (rest == "unsat")
                r.status = SolveStatus::Unsat;
            else if (rest == "indeterminate")
                r.status = SolveStatus::Indeterminate;
            else
                throw FormatError("certificate: unknown status \"" + rest + "\"");
        }
        else if (key == "solver")
            r.solver = rest;
        else if (key == "nodes")
            r.stats.nodes = std::stoull(rest);
        else if (key == "propagations")
            r.stats.propagations = std::stoull(rest);
        else if (key == "coloring")
            r.coloring = parse_coloring(rest);
        else
            throw FormatError("certificate: unknown key \"" + key + "\"");
    }
    if (! have_status)
        throw FormatError("certificate: missing status line");
    if ((r.status == SolveStatus::Sat) != r.coloring.has_value())
        throw FormatError("certificate: a coloring line is required exactly when status is sat");
    return r;
}
