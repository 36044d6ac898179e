#ifndef CRUMBY_STRUCTURE_HH
#define CRUMBY_STRUCTURE_HH 1

#include <crumby/coloring.hh>
#include <crumby/graph.hh>

#include <string>
#include <vector>

namespace crumby
{
    /// Components sorted by their smallest vertex; vertices ascending within each.
    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;
    auto is_connected(const Graph & g) -> bool;

    /// Articulation points by depth-first lowpoint computation, ascending.
    auto cut_vertices(const Graph & g) -> std::vector<Vertex>;

    /// n >= 3, connected, and no cut vertex.
    auto is_biconnected(const Graph & g) -> bool;

    struct EarDecomposition
    {
        std::vector<Vertex> initial_cycle;
        std::vector<std::vector<Vertex>> ears;
    };

    struct EarCheck
    {
        bool valid = false;
        std::string reason;

        explicit operator bool() const { return valid; }
    };

    /**
     * Checks an open ear decomposition: the closed walk is a cycle on at
     * least three vertices, each ear has two distinct endpoints already
     * built and only new internal vertices, no edge is used twice, and the
     * union covers every vertex and every edge of g.
     */
    auto verify_ear_decomposition(const Graph & g, const EarDecomposition & d) -> EarCheck;

    struct BipartiteResult
    {
        bool bipartite = false;
        /// Side (0/1) per vertex when bipartite.
        std::vector<int> side;
        /// Vertices of an odd cycle, in cyclic order, when not bipartite.
        std::vector<Vertex> odd_cycle;

        explicit operator bool() const { return bipartite; }
    };

    auto is_bipartite(const Graph & g) -> BipartiteResult;

    /// True if cycle lists distinct vertices with consecutive (and last-first) pairs adjacent.
    auto is_cycle_of(const Graph & g, const std::vector<Vertex> & cycle) -> bool;

    /**
     * Every path on four distinct vertices, once each, in canonical
     * orientation (p1 < p4) and sorted lexicographically.
     */
    auto enumerate_p4(const Graph & g) -> std::vector<P4Witness>;

    /**
     * Exact isomorphism test. Vertices are split by iterated neighbourhood
     * refinement and matched by backtracking within classes. Exponential in
     * the worst case; meant for n <= 16.
     */
    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// An explicit isomorphism a -> b (map[v] is the image of v), or empty.
    auto find_isomorphism(const Graph & a, const Graph & b) -> std::vector<Vertex>;

    /**
     * Canonical form: the relabelling that maximises the graph6 bit string
     * among orderings compatible with the refined vertex classes. Two graphs
     * are isomorphic iff their canonical forms are equal.
     */
    auto canonical_form(const Graph & g) -> Graph;
}

#endif
