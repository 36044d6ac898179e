#include <crumby/solve.hh>

#include <bit>
#include <limits>
#include <vector>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    /**
     * Bitmask form of the crumby test. Vertex v lives at bit (n - 1 - v) so
     * that a red mask doubles as the lexicographic index of its coloring.
     */
    class MaskKernel
    {
        private:
            int _n;
            uint32_t _full;
            vector<uint32_t> _adj;
            vector<uint32_t> _bit;

        public:
            explicit MaskKernel(const Graph & g) :
                _n(g.size()),
                _full(_n == 0 ? 0 : static_cast<uint32_t>((uint64_t{1} << _n) - 1)),
                _adj(_n, 0),
                _bit(_n)
            {
                if (_n > exhaustive_max_order)
                    throw CapExceeded("exhaustive search is capped at n = " + std::to_string(exhaustive_max_order)
                            + " (got n = " + std::to_string(_n) + "); use backtracking or dpll");
                for (int v = 0 ; v < _n ; ++v)
                    _bit[v] = uint32_t{1} << (_n - 1 - v);
                for (int v = 0 ; v < _n ; ++v)
                    for (auto w : g.neighbours(v))
                        _adj[v] |= _bit[w];
            }

            auto range() const -> uint64_t { return uint64_t{1} << _n; }

            auto crumby(uint32_t red) const -> bool
            {
                uint32_t blue = ~red & _full;
                for (int v = 0 ; v < _n ; ++v) {
                    if (blue & _bit[v]) {
                        if (std::popcount(_adj[v] & blue) > 1)
                            return false;
                    }
                    else if ((_adj[v] & red) == 0)
                        return false;
                }

                // A red P4 with middle edge vw needs distinct red outer ends on both sides.
                for (int v = 0 ; v < _n ; ++v) {
                    if (! (red & _bit[v]))
                        continue;
                    uint32_t rv = _adj[v] & red;
                    if (std::popcount(rv) < 2)
                        continue;
                    for (uint32_t rest = rv ; rest ; rest &= rest - 1) {
                        int w = _n - 1 - std::countr_zero(rest);
                        uint32_t left = rv & ~_bit[w];
                        uint32_t right = _adj[w] & red & ~_bit[v];
                        if (right == 0)
                            continue;
                        if (left != right || std::popcount(left) > 1)
                            return false;
                    }
                }
                return true;
            }
    };

    auto build_result(int n, uint64_t first, uint64_t examined, const char * solver, auto start) -> SolveResult
    {
        SolveResult r;
        r.solver = solver;
        r.stats.nodes = examined;
        if (first == std::numeric_limits<uint64_t>::max())
            r.status = SolveStatus::Unsat;
        else {
            r.status = SolveStatus::Sat;
            r.coloring = Coloring::from_mask(n, first);
        }
        r.stats.elapsed = std::chrono::steady_clock::now() - start;
        return r;
    }
}

auto crumby::exhaustive_solve_serial(const Graph & g) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    MaskKernel kernel(g);
    uint64_t first = std::numeric_limits<uint64_t>::max(), examined = 0;
    for (uint64_t m = 0 ; m < kernel.range() ; ++m) {
        ++examined;
        if (kernel.crumby(static_cast<uint32_t>(m))) {
            first = m;
            break;
        }
    }
    return build_result(g.size(), first, examined, "exhaustive", start);
}

auto crumby::exhaustive_solve(const Graph & g) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    MaskKernel kernel(g);
    const long long range = static_cast<long long>(kernel.range());
    uint64_t first = std::numeric_limits<uint64_t>::max();

    #pragma omp parallel for schedule(static) reduction(min : first)
    for (long long m = 0 ; m < range ; ++m)
        if (static_cast<uint64_t>(m) < first && kernel.crumby(static_cast<uint32_t>(m)))
            first = static_cast<uint64_t>(m);

    uint64_t examined = first == std::numeric_limits<uint64_t>::max() ? kernel.range() : first + 1;
    return build_result(g.size(), first, examined, "exhaustive", start);
}

auto crumby::count_crumby_serial(const Graph & g) -> uint64_t
{
    MaskKernel kernel(g);
    uint64_t count = 0;
    for (uint64_t m = 0 ; m < kernel.range() ; ++m)
        count += kernel.crumby(static_cast<uint32_t>(m));
    return count;
}

auto crumby::count_crumby(const Graph & g) -> uint64_t
{
    MaskKernel kernel(g);
    const long long range = static_cast<long long>(kernel.range());
    uint64_t count = 0;

    #pragma omp parallel for schedule(static) reduction(+ : count)
    for (long long m = 0 ; m < range ; ++m)
        count += kernel.crumby(static_cast<uint32_t>(m));

    return count;
}
