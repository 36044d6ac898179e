#ifndef CRUMBY_CNF_HH
#define CRUMBY_CNF_HH 1

#include <crumby/coloring.hh>
#include <crumby/graph.hh>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace crumby
{
    /// DIMACS-style literal: +v / -v for variable v in 1..variables.
    using Literal = int;
    using Clause = std::vector<Literal>;

    /**
     * Variable v + 1 stands for vertex v, true meaning red. Clauses come in
     * three families, stored back to back:
     *
     *  1. blue degree: (x_v | x_u | x_w) for each vertex v and pair u, w of
     *     its neighbours;
     *  2. red support: (-x_v | x_u for u in N(v)), a unit clause when v is
     *     isolated;
     *  3. no red P4: (-x_p1 | -x_p2 | -x_p3 | -x_p4) per path on four vertices.
     *
     * Families 1 and 3 hold clauses with literals sorted by variable, deduplicated
     * (a triangle or a 4-set carrying several paths yields one clause) and sorted
     * lexicographically. Family 2 is ordered by vertex, its literals ascending
     * by variable.
     */
    struct CnfFormula
    {
        int variables = 0;
        std::vector<Clause> clauses;
        std::array<std::size_t, 3> family_sizes{};
    };

    auto encode_cnf(const Graph & g) -> CnfFormula;

    /// "p cnf V C" header then one zero-terminated clause per line.
    auto emit_dimacs(const CnfFormula & f) -> std::string;

    auto satisfies(const CnfFormula & f, const Coloring & c) -> bool;
}

#endif
