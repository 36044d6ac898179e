#include <crumby/graph_io.hh>
#include <crumby/coloring.hh>

#include <istream>
#include <sstream>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::string_view;
using std::vector;

namespace
{
    constexpr int g6_offset = 63;
    constexpr int g6_max_char = 126;

    auto strip_line_end(string_view s) -> string_view
    {
        if (! s.empty() && s.back() == '\n')
            s.remove_suffix(1);
        if (! s.empty() && s.back() == '\r')
            s.remove_suffix(1);
        return s;
    }

    auto is_meaningful(string_view line) -> bool
    {
        auto p = line.find_first_not_of(" \t\r");
        return p != string_view::npos && line[p] != '#';
    }
}

auto crumby::parse_graph6(string_view line) -> Graph
{
    line = strip_line_end(line);
    if (line.empty())
        throw FormatError("graph6: empty line");

    for (std::size_t i = 0 ; i < line.size() ; ++i) {
        auto ch = static_cast<unsigned char>(line[i]);
        if (ch < g6_offset || ch > g6_max_char)
            throw FormatError("graph6: non-printable or out-of-range byte " + to_string(ch) + " at offset " + to_string(i));
    }

    if (line[0] == g6_max_char)
        throw FormatError("graph6: multi-byte length header (n > " + to_string(graph6_max_order) + ") is not supported");

    int n = line[0] - g6_offset;
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t body = (bits + 5) / 6;
    if (line.size() - 1 < body)
        throw FormatError("graph6: body too short for n = " + to_string(n));
    if (line.size() - 1 > body)
        throw FormatError("graph6: trailing garbage after " + to_string(body + 1) + " bytes");

    vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++k) {
            int word = line[1 + k / 6] - g6_offset;
            if (word & (1 << (5 - k % 6)))
                edges.emplace_back(i, j);
        }

    for ( ; k < body * 6 ; ++k) {
        int word = line[1 + k / 6] - g6_offset;
        if (word & (1 << (5 - k % 6)))
            throw FormatError("graph6: nonzero padding bits");
    }

    return Graph::from_edges(n, edges);
}

auto crumby::emit_graph6(const Graph & g) -> string
{
    int n = g.size();
    if (n > graph6_max_order)
        throw FormatError("graph6: n = " + to_string(n) + " exceeds supported maximum " + to_string(graph6_max_order));

    string out;
    out.push_back(static_cast<char>(n + g6_offset));

    int word = 0, filled = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + g6_offset));
                word = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((word << (6 - filled)) + g6_offset));

    return out;
}

auto crumby::parse_edge_list(std::istream & in) -> Graph
{
    string line;
    int line_no = 0;
    bool have_header = false;
    long n = 0, m = 0;
    vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (! is_meaningful(line))
            continue;

        std::istringstream fields(line);
        long a, b;
        string extra;
        if (! (fields >> a >> b) || (fields >> extra))
            throw FormatError("edge list: line " + to_string(line_no) + ": expected two integers");

        if (! have_header) {
            if (a < 0 || b < 0)
                throw FormatError("edge list: negative header values");
            n = a;
            m = b;
            have_header = true;
        }
        else
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }

    if (! have_header)
        throw FormatError("edge list: missing \"n m\" header");
    if (static_cast<long>(edges.size()) != m)
        throw FormatError("edge list: header declares " + to_string(m) + " edges, found " + to_string(edges.size()));

    return Graph::from_edges(static_cast<int>(n), edges);
}

auto crumby::parse_edge_list(string_view text) -> Graph
{
    std::istringstream in{string(text)};
    return parse_edge_list(in);
}

auto crumby::emit_edge_list(const Graph & g) -> string
{
    string out = to_string(g.size()) + " " + to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += to_string(u) + " " + to_string(v) + "\n";
    return out;
}

auto crumby::emit_dot(const Graph & g, const vector<string> * labels, const Coloring * coloring) -> string
{
    if (coloring && coloring->size() != g.size())
        throw std::invalid_argument("emit_dot: coloring length does not match graph order");

    string out = "graph G {\n";
    for (int v = 0 ; v < g.size() ; ++v) {
        bool labelled = labels && v < static_cast<int>(labels->size()) && ! (*labels)[v].empty();
        if (! labelled && ! coloring)
            continue;
        out += "  " + to_string(v) + " [";
        string sep;
        if (labelled) {
            out += "label=\"" + (*labels)[v] + "\"";
            sep = ", ";
        }
        if (coloring)
            out += sep + "style=filled, fillcolor=" + (coloring->is_red(v) ? "red" : "lightblue");
        out += "];\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + to_string(u) + " -- " + to_string(v) + ";\n";
    out += "}\n";
    return out;
}

auto crumby::detect_format(string_view text) -> GraphFormat
{
    std::istringstream in{string(text)};
    string line;
    while (std::getline(in, line)) {
        if (! is_meaningful(line))
            continue;
        std::istringstream fields(line);
        string first, second;
        fields >> first >> second;
        return second.empty() ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    }
    throw FormatError("no graph found in input");
}

auto crumby::parse_graph(string_view text, std::optional<GraphFormat> format) -> Graph
{
    switch (format ? *format : detect_format(text)) {
        case GraphFormat::EdgeList:
            return parse_edge_list(text);
        case GraphFormat::Graph6: {
            std::istringstream in{string(text)};
            string line;
            while (std::getline(in, line))
                if (is_meaningful(line)) {
                    auto p = line.find_first_not_of(" \t");
                    auto q = line.find_last_not_of(" \t\r");
                    return parse_graph6(string_view(line).substr(p, q - p + 1));
                }
            throw FormatError("no graph6 line in input");
        }
    }
    throw FormatError("unknown graph format");
}
