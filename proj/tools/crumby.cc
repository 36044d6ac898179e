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

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    // Exit statuses shared by every subcommand.
    constexpr int exit_yes = 0, exit_no = 1, exit_error = 2;

    auto read_file(const string & path) -> string
    {
        if (path == "-")
            return string(std::istreambuf_iterator<char>(std::cin), {});
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return string(std::istreambuf_iterator<char>(in), {});
    }

    struct GraphInput
    {
        string source;
        string format = "auto";

        auto add_to(CLI::App * app) -> void
        {
            app->add_option("graph", source, "catalogue name (" + catalogue() + "), a file, or - for stdin")->required();
            app->add_option("--input-format", format, "input format for files and stdin")
                ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
        }

        static auto catalogue() -> string
        {
            string s;
            for (auto n : gadget_names())
                s += (s.empty() ? "" : ", ") + string(n);
            return s;
        }

        auto load() const -> LabeledGraph
        {
            auto names = gadget_names();
            if (std::find(names.begin(), names.end(), source) != names.end())
                return gadget_by_name(source);
            optional<GraphFormat> f;
            if (format == "edgelist")
                f = GraphFormat::EdgeList;
            else if (format == "graph6")
                f = GraphFormat::Graph6;
            LabeledGraph lg;
            lg.graph = parse_graph(read_file(source), f);
            return lg;
        }
    };

    auto join(const vector<Vertex> & vs, const string & sep = " ") -> string
    {
        string s;
        for (auto v : vs)
            s += (s.empty() ? "" : sep) + to_string(v);
        return s;
    }

    auto parse_vertex_list(const string & text) -> vector<Vertex>
    {
        string t = text;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        vector<Vertex> vs;
        string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw FormatError("not a vertex: \"" + tok + "\"");
            vs.push_back(v);
        }
        return vs;
    }

    auto parse_pattern(const string & name) -> Graph
    {
        if (name == "K4")
            return complete_graph(4);
        if (name == "K23" || name == "K2,3")
            return complete_bipartite_graph(2, 3);
        if (name.size() == 2 && name[0] == 'K' && name[1] >= '1' && name[1] <= '6')
            return complete_graph(name[1] - '0');
        if (name.size() == 2 && name[0] == 'C' && name[1] >= '3' && name[1] <= '6')
            return cycle_graph(name[1] - '0');
        return parse_graph6(name);
    }

    auto cmd_gadget(const string & name, const string & format) -> int
    {
        auto g = gadget_by_name(name);
        if (format == "edgelist")
            cout << emit_edge_list(g.graph);
        else if (format == "graph6")
            cout << emit_graph6(g.graph) << "\n";
        else
            cout << emit_dot(g.graph, &g.roles);
        return exit_yes;
    }

    auto cmd_solve(const GraphInput & in, const string & method, const SolveOptions & options) -> int
    {
        auto g = in.load().graph;
        auto r = solve(g, parse_solve_method(method), options);
        cout << emit_certificate(r);
        switch (r.status) {
            case SolveStatus::Sat: return exit_yes;
            case SolveStatus::Unsat: return exit_no;
            case SolveStatus::Indeterminate: return exit_error;
        }
        return exit_error;
    }

    auto cmd_verify(const GraphInput & in, const string & coloring_path) -> int
    {
        auto g = in.load().graph;
        auto text = read_file(coloring_path);
        Coloring c = text.rfind("status", 0) == 0 ? [&] {
            auto cert = parse_certificate(text);
            if (! cert.coloring)
                throw FormatError("the certificate carries no coloring");
            return *cert.coloring;
        }() : parse_coloring(text);
        auto verdict = verify_crumby(g, c);
        if (verdict.crumby) {
            cout << "crumby\n";
            return exit_yes;
        }
        cout << "not crumby\n";
        for (auto & v : verdict.violations)
            cout << describe(v) << "\n";
        return exit_no;
    }

    auto cmd_cnf(const GraphInput & in) -> int
    {
        cout << emit_dimacs(encode_cnf(in.load().graph));
        return exit_yes;
    }

    auto cmd_check_tw2(const GraphInput & in, const string & certificate, bool trace) -> int
    {
        auto g = in.load().graph;
        if (! certificate.empty()) {
            auto cert = parse_certificate_document(read_file(certificate));
            if (cert.kind != "elimination-order")
                throw CertificateError("expected an elimination-order certificate");
            int width = elimination_width(g, cert.order);
            cout << "certificate width " << width << "\n";
            cout << (width <= 2 ? "treewidth <= 2 (certified)\n" : "certificate does not show treewidth <= 2\n");
            return width <= 2 ? exit_yes : exit_no;
        }
        auto r = recognize_tw2(g);
        if (trace)
            for (auto & line : r.trace)
                cerr << line << "\n";
        if (! r.treewidth_at_most_two) {
            cout << "treewidth > 2: reductions stop at {" << join(r.remainder, ",") << "}\n";
            return exit_no;
        }
        cout << "treewidth <= 2\n";
        if (auto order = find_elimination_order(g))
            cout << emit_elimination_certificate(*order);
        return exit_yes;
    }

    auto cmd_check_biconnected(const GraphInput & in, const string & certificate) -> int
    {
        auto g = in.load().graph;
        if (! certificate.empty()) {
            auto cert = parse_certificate_document(read_file(certificate));
            if (cert.kind != "ear-decomposition")
                throw CertificateError("expected an ear-decomposition certificate");
            auto check = verify_ear_decomposition(g, cert.ears);
            cout << (check.valid ? "biconnected (ear decomposition verified)\n" : "ear decomposition rejected: " + check.reason + "\n");
            return check.valid ? exit_yes : exit_no;
        }
        bool connected = is_connected(g);
        auto cuts = cut_vertices(g);
        bool bic = is_biconnected(g);
        cout << (bic ? "biconnected\n" : "not biconnected\n");
        cout << "connected " << (connected ? "yes" : "no") << "\n";
        cout << "cut vertices " << (cuts.empty() ? "none" : join(cuts)) << "\n";
        return bic ? exit_yes : exit_no;
    }

    auto cmd_check_bipartite(const GraphInput & in) -> int
    {
        auto g = in.load().graph;
        auto r = is_bipartite(g);
        if (r.bipartite) {
            vector<Vertex> left, right;
            for (Vertex v = 0 ; v < g.size() ; ++v)
                (r.side[v] ? right : left).push_back(v);
            cout << "bipartite\nside0 " << join(left) << "\nside1 " << join(right) << "\n";
            return exit_yes;
        }
        cout << "not bipartite\nodd cycle " << join(r.odd_cycle) << "\n";
        return exit_no;
    }

    auto cmd_check_minor(const GraphInput & in, const string & pattern_name, const string & certificate,
            std::uint64_t budget, const string & together) -> int
    {
        auto g = in.load().graph;
        if (! certificate.empty()) {
            auto cert = parse_certificate_document(read_file(certificate));
            if (cert.kind != "minor-witness" || ! cert.pattern)
                throw CertificateError("expected a minor-witness certificate");
            bool valid = validate_minor_witness(g, *cert.pattern, cert.witness);
            cout << (valid ? "minor witness verified\n" : "minor witness rejected\n");
            return valid ? exit_yes : exit_no;
        }
        if (pattern_name.empty())
            throw std::invalid_argument("--pattern is required without --certificate");
        auto pattern = parse_pattern(pattern_name);
        auto r = has_minor(g, pattern, budget, parse_vertex_list(together));
        switch (r.status) {
            case MinorStatus::Found:
                cout << "minor found\n" << emit_minor_certificate(pattern, *r.witness);
                return exit_yes;
            case MinorStatus::NotFound:
                cout << "no minor (" << r.nodes << " nodes)\n";
                return exit_no;
            case MinorStatus::Indeterminate:
                cout << "indeterminate: budget exhausted after " << r.nodes << " nodes\n";
                return exit_error;
        }
        return exit_error;
    }

    auto cmd_elim_order(const GraphInput & in, const string & order_text) -> int
    {
        auto lg = in.load();
        auto & g = lg.graph;
        EliminationOrder order;
        if (! order_text.empty())
            order = parse_vertex_list(order_text);
        else if (auto found = find_elimination_order(g))
            order = *found;
        else {
            cout << "no elimination order of width <= 2\n";
            return exit_no;
        }
        auto trace = eliminate(g, order);
        auto name = [&] (Vertex v) {
            return lg.roles.empty() || lg.roles[v].empty() ? to_string(v) : to_string(v) + "(" + lg.roles[v] + ")";
        };
        for (auto & step : trace.steps) {
            string rest;
            for (auto w : step.remaining)
                rest += (rest.empty() ? "" : " ") + name(w);
            cout << name(step.vertex) << ": " << (rest.empty() ? "-" : rest) << "\n";
        }
        cout << "width " << trace.width << "\n";
        return trace.width <= 2 ? exit_yes : exit_no;
    }

    auto cmd_lemmas(const string & format) -> int
    {
        bool all = true;
        for (auto & r : run_all_lemmas()) {
            cout << (format == "kv" ? format_key_value(r) : format_human(r));
            all = all && r.pass;
        }
        bool automorphism = lemma1_i_automorphism_consistent();
        if (format == "kv")
            cout << "lemma=lemma1.i scenario=automorphism result=" << (automorphism ? "pass" : "fail") << "\n";
        else
            cout << "lemma1.i automorphism a<->b: " << (automorphism ? "PASS" : "FAIL") << "\n";
        return all && automorphism ? exit_yes : exit_no;
    }

    auto cmd_search(const string & input, int generate, const SurveyOptions & options, const string & summary) -> int
    {
        SurveyReport report;
        if (generate > 0) {
            vector<string> lines;
            for (int n = 1 ; n <= generate ; ++n)
                for (auto & l : generate_small(n))
                    lines.push_back(l);
            report = survey_lines(lines, options);
        }
        else if (input == "-")
            report = survey_stream(std::cin, options);
        else {
            std::ifstream in(input);
            if (! in)
                throw std::runtime_error("cannot open " + input);
            report = survey_stream(in, options);
        }
        cout << format_report(report);
        if (! summary.empty()) {
            std::ofstream out(summary);
            if (! out)
                throw std::runtime_error("cannot write " + summary);
            out << format_report_machine(report);
        }
        return report.ok() ? exit_yes : exit_no;
    }

    auto cmd_verify_paper(bool quick, bool timings, const string & table_path) -> int
    {
        ReplicationOptions options;
        options.quick = quick;
        if (! table_path.empty()) {
            auto g = parse_edge_list(read_file(table_path));
            options.g40_table = g.edges();
        }
        auto results = run_replication(options, [&] (const CheckResult & r) {
            cout << format_check(r, timings) << std::endl;
        });
        int claims = 0, regressions = 0, failed = 0, skipped = 0;
        for (auto & r : results) {
            if (r.skipped) {
                ++skipped;
                continue;
            }
            (r.provenance == Provenance::PaperClaim ? claims : regressions) += r.pass;
            failed += ! r.pass;
        }
        cout << "summary: " << claims << " claims passed, " << regressions << " regression constants matched, "
            << failed << " failed, " << skipped << " skipped\n";
        return all_passed(results) ? exit_yes : exit_no;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Crumby colorings: decide, certify and replicate"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    auto gadget = app.add_subcommand("gadget", "emit a catalogue graph");
    string gadget_name, gadget_format = "edgelist";
    gadget->add_option("name", gadget_name, "one of " + GraphInput::catalogue())->required();
    gadget->add_option("--format", gadget_format, "output format")->check(CLI::IsMember({"edgelist", "graph6", "dot"}));

    auto solve_cmd = app.add_subcommand("solve", "decide crumby colorability; exit 0 sat, 1 unsat, 2 indeterminate or error");
    GraphInput solve_in;
    solve_in.add_to(solve_cmd);
    string method = "backtracking";
    SolveOptions solve_options;
    bool no_propagate = false;
    solve_cmd->add_option("--method", method, "solver")->check(CLI::IsMember({"backtracking", "dpll", "exhaustive"}));
    solve_cmd->add_option("--budget", solve_options.node_budget, "node budget, 0 for unlimited");
    solve_cmd->add_flag("--no-propagate", no_propagate, "backtracking without propagation (debugging)");
    solve_cmd->add_flag("--parallel", solve_options.parallel, "use the OpenMP kernels");

    auto verify = app.add_subcommand("verify", "check a coloring file against a graph");
    GraphInput verify_in;
    verify_in.add_to(verify);
    string coloring_path;
    verify->add_option("coloring", coloring_path, "file holding \"R B ...\" or a solve certificate")->required();

    auto cnf = app.add_subcommand("cnf", "emit the DIMACS encoding");
    GraphInput cnf_in;
    cnf_in.add_to(cnf);

    auto tw2 = app.add_subcommand("check-tw2", "certify treewidth at most two");
    GraphInput tw2_in;
    tw2_in.add_to(tw2);
    string tw2_cert;
    bool tw2_trace = false;
    tw2->add_option("--certificate", tw2_cert, "check this elimination-order certificate instead of searching");
    tw2->add_flag("--trace", tw2_trace, "print the reduction trace on stderr")->excludes("--certificate");

    auto bic = app.add_subcommand("check-biconnected", "lowpoint test or ear-decomposition certificate");
    GraphInput bic_in;
    bic_in.add_to(bic);
    string bic_cert;
    bic->add_option("--certificate", bic_cert, "check this ear-decomposition certificate");

    auto bip = app.add_subcommand("check-bipartite", "bipartition or odd cycle");
    GraphInput bip_in;
    bip_in.add_to(bip);

    auto minor = app.add_subcommand("check-minor", "search for or check a minor model; exit 0 found, 1 none, 2 indeterminate");
    GraphInput minor_in;
    minor_in.add_to(minor);
    string pattern, minor_cert, together;
    std::uint64_t minor_budget = 0;
    auto pattern_opt = minor->add_option("--pattern", pattern, "K4, K23, Kn, Cn (n <= 6) or a graph6 string");
    auto cert_opt = minor->add_option("--certificate", minor_cert, "check this minor-witness certificate");
    auto budget_opt = minor->add_option("--budget", minor_budget, "node budget, 0 for unlimited");
    auto together_opt = minor->add_option("--together", together, "host vertices that must share a branch set, e.g. 3,4");
    cert_opt->excludes(pattern_opt)->excludes(budget_opt)->excludes(together_opt);

    auto elim = app.add_subcommand("elim-order", "elimination trace: given order or greedy width-2 order");
    GraphInput elim_in;
    elim_in.add_to(elim);
    string order_text;
    elim->add_option("--order", order_text, "vertices in elimination order, e.g. \"7 8 5\"");

    auto lemmas = app.add_subcommand("lemmas", "verify the gadget lemmas by enumeration");
    string lemma_format = "human";
    lemmas->add_option("--format", lemma_format, "report format")->check(CLI::IsMember({"human", "kv"}));

    auto search = app.add_subcommand("search", "survey a graph6 stream; exit nonzero iff a cross-check failed");
    string search_input = "-", summary;
    int generate = 0;
    SurveyOptions survey_options;
    auto input_opt = search->add_option("input", search_input, "graph6 file or - for stdin");
    search->add_option("--generate", generate, "survey the built-in connected graphs on 1..N vertices")
        ->check(CLI::Range(1, generator_max_order))->excludes(input_opt);
    search->add_flag("--connected", survey_options.filters.connected, "keep connected graphs");
    search->add_flag("--subcubic", survey_options.filters.subcubic, "keep graphs of maximum degree <= 3");
    search->add_flag("--tw2", survey_options.filters.tw2, "keep graphs of treewidth <= 2");
    search->add_flag("--biconnected", survey_options.filters.biconnected, "keep biconnected graphs");
    search->add_option("--budget", survey_options.node_budget, "node budget per instance, 0 for unlimited");
    search->add_flag("--parallel", survey_options.parallel, "decide instances concurrently");
    search->add_option("--summary", summary, "write a key=value summary to this file");

    auto paper = app.add_subcommand("verify-paper", "replicate every published claim; exit 0 iff all pass");
    bool quick = false, timings = false;
    string table_path;
    paper->add_flag("--quick", quick, "skip the 2^18 enumeration and the property sweeps");
    paper->add_flag("--timings", timings, "append wall-clock time to each line");
    paper->add_option("--g40-table", table_path, "edge-list file replacing the 40-vertex table (negative controls)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_yes : exit_error;
    }

    try {
        if (*gadget)
            return cmd_gadget(gadget_name, gadget_format);
        if (*solve_cmd) {
            solve_options.propagate = ! no_propagate;
            return cmd_solve(solve_in, method, solve_options);
        }
        if (*verify)
            return cmd_verify(verify_in, coloring_path);
        if (*cnf)
            return cmd_cnf(cnf_in);
        if (*tw2)
            return cmd_check_tw2(tw2_in, tw2_cert, tw2_trace);
        if (*bic)
            return cmd_check_biconnected(bic_in, bic_cert);
        if (*bip)
            return cmd_check_bipartite(bip_in);
        if (*minor)
            return cmd_check_minor(minor_in, pattern, minor_cert, minor_budget, together);
        if (*elim)
            return cmd_elim_order(elim_in, order_text);
        if (*lemmas)
            return cmd_lemmas(lemma_format);
        if (*search)
            return cmd_search(search_input, generate, survey_options, summary);
        if (*paper)
            return cmd_verify_paper(quick, timings, table_path);
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
