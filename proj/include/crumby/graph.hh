#ifndef CRUMBY_GRAPH_HH
#define CRUMBY_GRAPH_HH 1

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crumby
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    enum class GraphErrorKind
    {
        SelfLoop,
        DuplicateEdge,
        IndexOutOfRange,
        NegativeOrder
    };

    class GraphError : public std::invalid_argument
    {
        private:
            GraphErrorKind _kind;

        public:
            GraphError(GraphErrorKind kind, const std::string & message);

            auto kind() const noexcept -> GraphErrorKind { return _kind; }
    };

    /**
     * Simple undirected graph on vertices 0..n-1. Neighbour lists are kept
     * sorted, so two graphs with the same edge set compare equal.
     */
    class Graph
    {
        private:
            std::vector<std::vector<Vertex>> _adj;
            std::size_t _edge_count = 0;

        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(int n);

            /// Throws GraphError on loops, duplicate edges (in either
            /// orientation) and out-of-range endpoints.
            static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

            auto size() const noexcept -> int { return static_cast<int>(_adj.size()); }
            auto edge_count() const noexcept -> std::size_t { return _edge_count; }

            auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adj[v]; }
            auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }
            auto adjacent(Vertex u, Vertex v) const -> bool;

            auto max_degree() const -> int;

            /// All edges (u, v) with u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;

            /// Graph with one isolated vertex appended.
            auto with_isolated_vertex() const -> Graph;

            /// Induced subgraph on the complement of {v}; vertex numbering is
            /// compacted, preserving order.
            auto without_vertex(Vertex v) const -> Graph;

            /// Same edge set under the vertex map old -> perm[old].
            auto relabelled(std::span<const Vertex> perm) const -> Graph;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };

    auto complete_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;
}

#endif
