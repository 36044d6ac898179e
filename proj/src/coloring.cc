#include <crumby/coloring.hh>
#include <crumby/graph_io.hh>
#include <crumby/structure.hh>

#include <sstream>
#include <stdexcept>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::string_view;
using std::vector;

Coloring::Coloring(int n, Color fill) :
    _colors(n, fill)
{
}

Coloring::Coloring(vector<Color> colors) :
    _colors(std::move(colors))
{
}

auto Coloring::from_mask(int n, std::uint64_t mask) -> Coloring
{
    Coloring c(n);
    for (int v = 0 ; v < n ; ++v)
        if (mask & (std::uint64_t{1} << (n - 1 - v)))
            c._colors[v] = Color::Red;
    return c;
}

auto Coloring::to_mask() const -> std::uint64_t
{
    std::uint64_t mask = 0;
    int n = size();
    for (int v = 0 ; v < n ; ++v)
        if (is_red(v))
            mask |= std::uint64_t{1} << (n - 1 - v);
    return mask;
}

auto Coloring::red_count() const -> int
{
    int result = 0;
    for (auto c : _colors)
        result += (c == Color::Red);
    return result;
}

auto crumby::to_string(const Coloring & c) -> string
{
    string out;
    for (int v = 0 ; v < c.size() ; ++v) {
        if (v)
            out.push_back(' ');
        out.push_back(c.is_red(v) ? 'R' : 'B');
    }
    return out;
}

auto crumby::parse_coloring(string_view text) -> Coloring
{
    std::istringstream in{string(text)};
    vector<Color> colors;
    string token;
    while (in >> token) {
        if (token == "R")
            colors.push_back(Color::Red);
        else if (token == "B")
            colors.push_back(Color::Blue);
        else
            throw FormatError("coloring: unexpected token \"" + token + "\" (expected R or B)");
    }
    return Coloring(std::move(colors));
}

auto crumby::describe(const Violation & violation) -> string
{
    struct Describer
    {
        auto operator() (const BlueDegreeExceeded & v) const -> string
        {
            string s = "blue vertex " + to_string(v.vertex) + " has blue neighbours";
            for (auto w : v.blue_neighbours)
                s += " " + to_string(w);
            return s;
        }

        auto operator() (const RedIsolated & v) const -> string
        {
            return "red vertex " + to_string(v.vertex) + " has no red neighbour";
        }

        auto operator() (const RedP4 & v) const -> string
        {
            auto & p = v.witness.path;
            return "red P4 " + to_string(p[0]) + "-" + to_string(p[1]) + "-" + to_string(p[2]) + "-" + to_string(p[3]);
        }
    };
    return std::visit(Describer{}, violation);
}

namespace
{
    auto check_length(const Graph & g, const Coloring & c) -> void
    {
        if (c.size() != g.size())
            throw std::invalid_argument("coloring has " + to_string(c.size()) + " entries but the graph has "
                    + to_string(g.size()) + " vertices");
    }
}

auto crumby::verify_crumby(const Graph & g, const Coloring & c) -> Verdict
{
    check_length(g, c);
    Verdict verdict;

    for (Vertex v = 0 ; v < g.size() ; ++v) {
        vector<Vertex> same;
        for (auto w : g.neighbours(v))
            if (c[w] == c[v])
                same.push_back(w);
        if (c.is_blue(v) && same.size() > 1)
            verdict.violations.push_back(BlueDegreeExceeded{v, std::move(same)});
        else if (c.is_red(v) && same.empty())
            verdict.violations.push_back(RedIsolated{v});
    }

    for (auto & p : enumerate_p4(g))
        if (c.is_red(p.path[0]) && c.is_red(p.path[1]) && c.is_red(p.path[2]) && c.is_red(p.path[3]))
            verdict.violations.push_back(RedP4{p});

    verdict.crumby = verdict.violations.empty();
    return verdict;
}

auto crumby::verify_crumby_by_components(const Graph & g, const Coloring & c) -> bool
{
    check_length(g, c);

    vector<bool> seen(g.size(), false);
    for (Vertex s = 0 ; s < g.size() ; ++s) {
        if (seen[s])
            continue;

        // flood the monochromatic component of s
        vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0 ; i < comp.size() ; ++i)
            for (auto w : g.neighbours(comp[i]))
                if (! seen[w] && c[w] == c[s]) {
                    seen[w] = true;
                    comp.push_back(w);
                }

        std::size_t size = comp.size();
        std::size_t internal_degree_sum = 0, max_internal_degree = 0;
        for (auto v : comp) {
            std::size_t d = 0;
            for (auto w : g.neighbours(v))
                d += (c[w] == c[s]);
            internal_degree_sum += d;
            max_internal_degree = std::max(max_internal_degree, d);
        }
        std::size_t edges = internal_degree_sum / 2;

        if (c.is_blue(s)) {
            if (size > 2)
                return false;
        }
        else {
            bool star = size >= 2 && edges == size - 1 && max_internal_degree == size - 1;
            bool triangle = size == 3 && edges == 3;
            if (! star && ! triangle)
                return false;
        }
    }
    return true;
}
