#ifndef CRUMBY_COLORING_HH
#define CRUMBY_COLORING_HH 1

#include <crumby/graph.hh>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace crumby
{
    enum class Color : std::uint8_t
    {
        Blue,
        Red
    };

    /**
     * Red/blue assignment, one entry per vertex. Colorings order
     * lexicographically by their token string with B < R, vertex 0 first.
     */
    class Coloring
    {
        private:
            std::vector<Color> _colors;

        public:
            Coloring() = default;
            explicit Coloring(int n, Color fill = Color::Blue);
            explicit Coloring(std::vector<Color> colors);

            /// Bit (n - 1 - v) of mask set means v is red; increasing masks
            /// walk colorings in lexicographic order.
            static auto from_mask(int n, std::uint64_t mask) -> Coloring;
            auto to_mask() const -> std::uint64_t;

            auto size() const noexcept -> int { return static_cast<int>(_colors.size()); }
            auto operator[] (Vertex v) const -> Color { return _colors[v]; }
            auto set(Vertex v, Color c) -> void { _colors[v] = c; }
            auto is_red(Vertex v) const -> bool { return _colors[v] == Color::Red; }
            auto is_blue(Vertex v) const -> bool { return _colors[v] == Color::Blue; }
            auto red_count() const -> int;

            auto colors() const -> const std::vector<Color> & { return _colors; }

            friend auto operator== (const Coloring &, const Coloring &) -> bool = default;
            friend auto operator<=> (const Coloring &, const Coloring &) = default;
    };

    /// "R B R ..." tokens.
    auto to_string(const Coloring & c) -> std::string;

    /// Parses whitespace-separated "R"/"B" tokens; throws FormatError.
    auto parse_coloring(std::string_view text) -> Coloring;

    struct BlueDegreeExceeded
    {
        Vertex vertex;
        std::vector<Vertex> blue_neighbours;
    };

    struct RedIsolated
    {
        Vertex vertex;
    };

    struct P4Witness
    {
        std::array<Vertex, 4> path;

        friend auto operator== (const P4Witness &, const P4Witness &) -> bool = default;
        friend auto operator<=> (const P4Witness &, const P4Witness &) = default;
    };

    struct RedP4
    {
        P4Witness witness;
    };

    using Violation = std::variant<BlueDegreeExceeded, RedIsolated, RedP4>;

    auto describe(const Violation & v) -> std::string;

    struct Verdict
    {
        bool crumby = true;
        std::vector<Violation> violations;

        explicit operator bool() const { return crumby; }
    };

    /**
     * Checks the three defining conditions directly: blue vertices have at
     * most one blue neighbour, red vertices have at least one red neighbour,
     * and no path on four vertices (not necessarily induced) is entirely red.
     * Every violation is reported, not just the first.
     */
    auto verify_crumby(const Graph & g, const Coloring & c) -> Verdict;

    /**
     * Independent route: every red component must be a star K_{1,m} with
     * m >= 1 or a triangle, and every blue component has at most two
     * vertices.
     */
    auto verify_crumby_by_components(const Graph & g, const Coloring & c) -> bool;
}

#endif
