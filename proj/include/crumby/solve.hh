#ifndef CRUMBY_SOLVE_HH
#define CRUMBY_SOLVE_HH 1

#include <crumby/coloring.hh>
#include <crumby/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crumby
{
    enum class SolveStatus
    {
        Sat,
        Unsat,
        /// Node budget ran out before the search space was exhausted.
        Indeterminate
    };

    auto to_string(SolveStatus s) -> std::string;

    enum class SolveMethod
    {
        Exhaustive,
        Backtracking,
        Dpll
    };

    auto to_string(SolveMethod m) -> std::string;
    auto parse_solve_method(std::string_view name) -> SolveMethod;

    struct SolveStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t propagations = 0;
        std::chrono::duration<double> elapsed{0};
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::Indeterminate;
        std::optional<Coloring> coloring;
        SolveStats stats;
        std::string solver;
    };

    struct SolveOptions
    {
        /// Decision nodes allowed; 0 means unlimited.
        std::uint64_t node_budget = 0;
        /// With propagation off, constraints are only checked once falsified.
        bool propagate = true;
        /// Split the first decision across two OpenMP tasks.
        bool parallel = false;
    };

    class CapExceeded : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    inline constexpr int exhaustive_max_order = 24;

    /**
     * Ground-truth oracle: tries all 2^n colorings in lexicographic order and
     * returns the first crumby one. Refuses n > exhaustive_max_order with
     * CapExceeded. stats.nodes counts colorings examined. The parallel
     * version scans the whole range and reduces to the smallest hit, so its
     * answer is identical to the serial one.
     */
    auto exhaustive_solve(const Graph & g) -> SolveResult;
    auto exhaustive_solve_serial(const Graph & g) -> SolveResult;

    /// Exact number of crumby colorings (OpenMP reduction / serial reference).
    auto count_crumby(const Graph & g) -> std::uint64_t;
    auto count_crumby_serial(const Graph & g) -> std::uint64_t;

    /**
     * Depth-first search on vertex colors, lowest unassigned vertex first,
     * red before blue. Propagation:
     *  - a blue vertex with a blue neighbour makes its other neighbours red;
     *  - a vertex with two blue neighbours is red;
     *  - a red vertex without red neighbours and one open neighbour makes it red;
     *  - a vertex whose neighbours are all blue is blue;
     *  - three red vertices of a P4 make the fourth blue.
     */
    auto backtracking_solve(const Graph & g, const SolveOptions & options = {}) -> SolveResult;

    /// DPLL with unit propagation and pure-literal elimination over encode_cnf(g).
    auto dpll_solve(const Graph & g, const SolveOptions & options = {}) -> SolveResult;

    auto solve(const Graph & g, SolveMethod method, const SolveOptions & options = {}) -> SolveResult;

    /**
     * Line-oriented certificate:
     *
     *   status sat|unsat|indeterminate
     *   solver <name>
     *   nodes <count>
     *   propagations <count>
     *   coloring R B ...        (sat only)
     */
    auto emit_certificate(const SolveResult & r) -> std::string;
    auto parse_certificate(std::string_view text) -> SolveResult;
}

#endif
