#ifndef CRUMBY_GRAPH_IO_HH
#define CRUMBY_GRAPH_IO_HH 1

#include <crumby/graph.hh>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crumby
{
    class Coloring;

    class FormatError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Largest order the graph6 codec accepts (single-byte length header).
    inline constexpr int graph6_max_order = 62;

    /**
     * Decode one graph6 line. A single trailing newline (and carriage
     * return) is tolerated; anything else outside the printable range 63..126,
     * multi-byte headers, wrong body length and nonzero padding bits raise
     * FormatError.
     */
    auto parse_graph6(std::string_view line) -> Graph;

    /// Encode without trailing newline.
    auto emit_graph6(const Graph & g) -> std::string;

    /**
     * Edge-list text: header "n m" followed by m lines "u v". Blank lines and
     * lines starting with '#' are ignored.
     */
    auto parse_edge_list(std::istream & in) -> Graph;
    auto parse_edge_list(std::string_view text) -> Graph;
    auto emit_edge_list(const Graph & g) -> std::string;

    /// Undirected DOT document, one "u -- v;" line per edge.
    auto emit_dot(const Graph & g,
            const std::vector<std::string> * labels = nullptr,
            const Coloring * coloring = nullptr) -> std::string;

    enum class GraphFormat
    {
        EdgeList,
        Graph6
    };

    /// Graph6 if the first meaningful line is a single token, edge list otherwise.
    auto detect_format(std::string_view text) -> GraphFormat;
    auto parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt) -> Graph;
}

#endif
