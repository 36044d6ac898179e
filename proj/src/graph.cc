#include <crumby/graph.hh>

#include <algorithm>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::string;
using std::vector;

GraphError::GraphError(GraphErrorKind kind, const string & message) :
    std::invalid_argument(message),
    _kind(kind)
{
}

Graph::Graph(int n)
{
    if (n < 0)
        throw GraphError(GraphErrorKind::NegativeOrder, "vertex count must be non-negative, got " + to_string(n));
    _adj.resize(n);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError(GraphErrorKind::IndexOutOfRange,
                    "edge " + to_string(u) + "-" + to_string(v) + " has an endpoint outside [0," + to_string(n) + ")");
        if (u == v)
            throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + to_string(u));
        g._adj[u].push_back(v);
        g._adj[v].push_back(u);
    }

    for (int v = 0 ; v < n ; ++v) {
        auto & list = g._adj[v];
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end())
            throw GraphError(GraphErrorKind::DuplicateEdge,
                    "duplicate edge " + to_string(std::min(v, *dup)) + "-" + to_string(std::max(v, *dup)));
    }

    g._edge_count = edges.size();
    return g;
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
}

auto Graph::max_degree() const -> int
{
    int result = 0;
    for (auto & list : _adj)
        result = std::max(result, static_cast<int>(list.size()));
    return result;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edge_count);
    for (int u = 0 ; u < size() ; ++u)
        for (auto v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::with_isolated_vertex() const -> Graph
{
    Graph result = *this;
    result._adj.emplace_back();
    return result;
}

auto Graph::without_vertex(Vertex v) const -> Graph
{
    vector<Edge> kept;
    auto shift = [v] (Vertex w) { return w > v ? w - 1 : w; };
    for (auto [a, b] : edges())
        if (a != v && b != v)
            kept.emplace_back(shift(a), shift(b));
    return from_edges(size() - 1, kept);
}

auto Graph::relabelled(std::span<const Vertex> perm) const -> Graph
{
    vector<Edge> mapped;
    for (auto [a, b] : edges())
        mapped.emplace_back(perm[a], perm[b]);
    return from_edges(size(), mapped);
}

auto crumby::complete_graph(int n) -> Graph
{
    vector<Edge> edges;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

auto crumby::path_graph(int n) -> Graph
{
    vector<Edge> edges;
    for (int v = 0 ; v + 1 < n ; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

auto crumby::cycle_graph(int n) -> Graph
{
    vector<Edge> edges;
    for (int v = 0 ; v < n ; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

auto crumby::complete_bipartite_graph(int a, int b) -> Graph
{
    vector<Edge> edges;
    for (int u = 0 ; u < a ; ++u)
        for (int v = 0 ; v < b ; ++v)
            edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}
