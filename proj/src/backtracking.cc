#include <crumby/solve.hh>
#include <crumby/structure.hh>

#include <vector>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::uint64_t;
using std::vector;

namespace
{
    constexpr signed char unset = -1, blue = 0, red = 1;

    class Backtracker
    {
        private:
            const Graph & _g;
            SolveOptions _options;
            vector<P4Witness> _p4s;
            vector<vector<int>> _p4s_at;
            vector<signed char> _col;
            vector<Vertex> _trail;
            vector<Vertex> _queue;
            bool _out_of_budget = false;

        public:
            SolveStats stats;

            Backtracker(const Graph & g, const SolveOptions & options) :
                _g(g),
                _options(options),
                _p4s(enumerate_p4(g)),
                _p4s_at(g.size()),
                _col(g.size(), unset)
            {
                for (std::size_t i = 0 ; i < _p4s.size() ; ++i)
                    for (auto v : _p4s[i].path)
                        _p4s_at[v].push_back(static_cast<int>(i));
            }

            auto out_of_budget() const -> bool { return _out_of_budget; }

            auto coloring() const -> Coloring
            {
                Coloring c(_g.size());
                for (Vertex v = 0 ; v < _g.size() ; ++v)
                    c.set(v, _col[v] == red ? Color::Red : Color::Blue);
                return c;
            }

            auto assign(Vertex v, signed char c) -> void
            {
                _col[v] = c;
                _trail.push_back(v);
                _queue.push_back(v);
            }

            auto undo_to(std::size_t mark) -> void
            {
                while (_trail.size() > mark) {
                    _col[_trail.back()] = unset;
                    _trail.pop_back();
                }
                _queue.clear();
            }

            /// Force v to c; false on clash with an existing color.
            auto force(Vertex v, signed char c) -> bool
            {
                if (_col[v] == c)
                    return true;
                if (_col[v] != unset)
                    return false;
                ++stats.propagations;
                assign(v, c);
                return true;
            }

            /// Blue-degree and red-support constraints centred at z.
            auto check_vertex(Vertex z) -> bool
            {
                int blues = 0, reds = 0, open = 0;
                Vertex last_open = -1;
                for (auto w : _g.neighbours(z)) {
                    if (_col[w] == blue)
                        ++blues;
                    else if (_col[w] == red)
                        ++reds;
                    else {
                        ++open;
                        last_open = w;
                    }
                }

                if (_col[z] == blue) {
                    if (blues > 1)
                        return false;
                    if (blues == 1 && open > 0 && _options.propagate)
                        for (auto w : _g.neighbours(z))
                            if (_col[w] == unset && ! force(w, red))
                                return false;
                }
                else if (_col[z] == red) {
                    if (reds == 0 && open == 0)
                        return false;
                    if (reds == 0 && open == 1 && _options.propagate)
                        return force(last_open, red);
                }
                else if (_options.propagate) {
                    if (blues >= 2)
                        return force(z, red);
                    if (reds == 0 && open == 0)
                        return force(z, blue);
                }
                return true;
            }

            auto check_p4(int index) -> bool
            {
                int reds = 0;
                Vertex open_vertex = -1;
                int open = 0;
                for (auto v : _p4s[index].path) {
                    if (_col[v] == red)
                        ++reds;
                    else if (_col[v] == unset) {
                        ++open;
                        open_vertex = v;
                    }
                }
                if (reds == 4)
                    return false;
                if (reds == 3 && open == 1 && _options.propagate)
                    return force(open_vertex, blue);
                return true;
            }

            auto propagate() -> bool
            {
                while (! _queue.empty()) {
                    Vertex v = _queue.back();
                    _queue.pop_back();
                    if (! check_vertex(v))
                        return false;
                    for (auto w : _g.neighbours(v))
                        if (! check_vertex(w))
                            return false;
                    for (auto i : _p4s_at[v])
                        if (! check_p4(i))
                            return false;
                }
                return true;
            }

            /// Constraints that already bite with nothing assigned (isolated vertices).
            auto initial_propagate() -> bool
            {
                for (Vertex v = 0 ; v < _g.size() ; ++v)
                    if (! check_vertex(v))
                        return false;
                return propagate();
            }

            auto next_unassigned() const -> Vertex
            {
                for (Vertex v = 0 ; v < _g.size() ; ++v)
                    if (_col[v] == unset)
                        return v;
                return -1;
            }

            /// True when a complete crumby coloring is reached.
            auto search() -> bool
            {
                Vertex v = next_unassigned();
                if (v == -1)
                    return true;

                for (signed char c : {red, blue}) {
                    if (_options.node_budget && stats.nodes >= _options.node_budget) {
                        _out_of_budget = true;
                        return false;
                    }
                    ++stats.nodes;
                    std::size_t mark = _trail.size();
                    assign(v, c);
                    if (propagate() && search())
                        return true;
                    undo_to(mark);
                    if (_out_of_budget)
                        return false;
                }
                return false;
            }

            auto decide_with(Vertex v, signed char c) -> bool
            {
                ++stats.nodes;
                assign(v, c);
                return propagate() && search();
            }

            auto first_decision() const -> Vertex { return next_unassigned(); }
    };

    auto finish(Backtracker & b, bool found, SolveResult & r) -> void
    {
        r.stats.nodes += b.stats.nodes;
        r.stats.propagations += b.stats.propagations;
        if (found) {
            r.status = SolveStatus::Sat;
            r.coloring = b.coloring();
        }
        else
            r.status = b.out_of_budget() ? SolveStatus::Indeterminate : SolveStatus::Unsat;
    }
}

auto crumby::backtracking_solve(const Graph & g, const SolveOptions & options) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    result.solver = "backtracking";

    Backtracker root(g, options);
    if (! root.initial_propagate()) {
        finish(root, false, result);
    }
    else if (! options.parallel || root.first_decision() == -1) {
        finish(root, root.search(), result);
    }
    else {
        // Both halves start from the propagated root; red half wins ties.
        Vertex split = root.first_decision();
        Backtracker red_half = root, blue_half = root;
        red_half.stats = blue_half.stats = {};
        bool red_found = false, blue_found = false;

        #pragma omp parallel sections num_threads(2)
        {
            #pragma omp section
            red_found = red_half.decide_with(split, red);
            #pragma omp section
            blue_found = blue_half.decide_with(split, blue);
        }

        result.stats = root.stats;
        if (red_found)
            finish(red_half, true, result);
        else if (red_half.out_of_budget())
            finish(red_half, false, result);
        else {
            finish(red_half, false, result);
            finish(blue_half, blue_found, result);
        }
        result.stats.nodes = root.stats.nodes + red_half.stats.nodes + blue_half.stats.nodes;
        result.stats.propagations = root.stats.propagations + red_half.stats.propagations + blue_half.stats.propagations;
    }

    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}
