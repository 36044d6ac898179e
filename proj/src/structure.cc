#include <crumby/structure.hh>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::map;
using std::pair;
using std::set;
using std::string;
using std::vector;

auto crumby::connected_components(const Graph & g) -> vector<vector<Vertex>>
{
    vector<vector<Vertex>> result;
    vector<bool> seen(g.size(), false);
    for (Vertex s = 0 ; s < g.size() ; ++s) {
        if (seen[s])
            continue;
        vector<Vertex> component{s};
        seen[s] = true;
        for (std::size_t i = 0 ; i < component.size() ; ++i)
            for (auto w : g.neighbours(component[i]))
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

auto crumby::is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto crumby::cut_vertices(const Graph & g) -> vector<Vertex>
{
    int n = g.size();
    vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    vector<bool> cut(n, false);
    int timer = 0;

    struct Frame
    {
        Vertex v;
        std::size_t next;
    };

    for (Vertex root = 0 ; root < n ; ++root) {
        if (disc[root] != -1)
            continue;
        vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;

        while (! stack.empty()) {
            auto & [v, next] = stack.back();
            auto nbrs = g.neighbours(v);
            if (next < nbrs.size()) {
                Vertex w = nbrs[next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    ++child_count[v];
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                }
                else if (w != parent[v])
                    low[v] = std::min(low[v], disc[w]);
            }
            else {
                Vertex done = v;
                stack.pop_back();
                if (! stack.empty()) {
                    Vertex p = stack.back().v;
                    low[p] = std::min(low[p], low[done]);
                    if (parent[p] != -1 && low[done] >= disc[p])
                        cut[p] = true;
                }
            }
        }

        if (child_count[root] >= 2)
            cut[root] = true;
    }

    vector<Vertex> result;
    for (Vertex v = 0 ; v < n ; ++v)
        if (cut[v])
            result.push_back(v);
    return result;
}

auto crumby::is_biconnected(const Graph & g) -> bool
{
    return g.size() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

auto crumby::verify_ear_decomposition(const Graph & g, const EarDecomposition & d) -> EarCheck
{
    auto fail = [] (string reason) { return EarCheck{false, std::move(reason)}; };
    auto in_range = [&] (Vertex v) { return v >= 0 && v < g.size(); };

    set<pair<Vertex, Vertex>> used;
    vector<bool> built(g.size(), false);

    auto take_edge = [&] (Vertex u, Vertex v, const string & where) -> string {
        if (! in_range(u) || ! in_range(v))
            return where + ": vertex out of range";
        if (! g.adjacent(u, v))
            return where + ": " + to_string(u) + "-" + to_string(v) + " is not an edge";
        if (! used.emplace(std::min(u, v), std::max(u, v)).second)
            return where + ": edge " + to_string(u) + "-" + to_string(v) + " used twice";
        return {};
    };

    const auto & cycle = d.initial_cycle;
    if (cycle.size() < 4 || cycle.front() != cycle.back())
        return fail("initial walk must be closed and contain at least three distinct vertices");
    for (std::size_t i = 0 ; i + 1 < cycle.size() ; ++i) {
        Vertex v = cycle[i];
        if (! in_range(v))
            return fail("initial cycle: vertex out of range");
        if (built[v])
            return fail("initial cycle repeats vertex " + to_string(v));
        built[v] = true;
    }
    for (std::size_t i = 0 ; i + 1 < cycle.size() ; ++i)
        if (auto err = take_edge(cycle[i], cycle[i + 1], "initial cycle") ; ! err.empty())
            return fail(err);

    for (std::size_t e = 0 ; e < d.ears.size() ; ++e) {
        const auto & ear = d.ears[e];
        string where = "ear " + to_string(e + 1);
        if (ear.size() < 2)
            return fail(where + ": needs at least two vertices");
        for (auto v : ear)
            if (! in_range(v))
                return fail(where + ": vertex out of range");
        if (ear.front() == ear.back())
            return fail(where + ": endpoints coincide");
        if (! built[ear.front()] || ! built[ear.back()])
            return fail(where + ": endpoint not in the graph built so far");
        for (std::size_t i = 1 ; i + 1 < ear.size() ; ++i) {
            if (built[ear[i]])
                return fail(where + ": internal vertex " + to_string(ear[i]) + " is not new");
            built[ear[i]] = true;
        }
        for (std::size_t i = 0 ; i + 1 < ear.size() ; ++i)
            if (auto err = take_edge(ear[i], ear[i + 1], where) ; ! err.empty())
                return fail(err);
    }

    for (Vertex v = 0 ; v < g.size() ; ++v)
        if (! built[v])
            return fail("vertex " + to_string(v) + " is not covered");
    if (used.size() != g.edge_count()) {
        string missing;
        for (auto [u, v] : g.edges())
            if (! used.contains({u, v}))
                missing += " " + to_string(u) + "-" + to_string(v);
        return fail("uncovered edges:" + missing);
    }

    return EarCheck{true, {}};
}

auto crumby::is_bipartite(const Graph & g) -> BipartiteResult
{
    int n = g.size();
    vector<int> depth(n, -1), parent(n, -1);

    for (Vertex root = 0 ; root < n ; ++root) {
        if (depth[root] != -1)
            continue;
        depth[root] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (auto w : g.neighbours(u)) {
                if (depth[w] == -1) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
                else if (depth[w] % 2 == depth[u] % 2) {
                    // BFS puts both ends on the same level; climb to the common ancestor.
                    vector<Vertex> left{u}, right{w};
                    Vertex a = u, b = w;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        if (a != b)
                            right.push_back(b);
                    }
                    BipartiteResult result;
                    result.odd_cycle = left;
                    result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
                    return result;
                }
            }
        }
    }

    BipartiteResult result;
    result.bipartite = true;
    result.side.resize(n);
    for (Vertex v = 0 ; v < n ; ++v)
        result.side[v] = depth[v] % 2;
    return result;
}

auto crumby::is_cycle_of(const Graph & g, const vector<Vertex> & cycle) -> bool
{
    if (cycle.size() < 3)
        return false;
    set<Vertex> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size())
        return false;
    for (std::size_t i = 0 ; i < cycle.size() ; ++i) {
        Vertex u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (u < 0 || u >= g.size() || v < 0 || v >= g.size() || ! g.adjacent(u, v))
            return false;
    }
    return true;
}

auto crumby::enumerate_p4(const Graph & g) -> vector<P4Witness>
{
    vector<P4Witness> result;
    for (Vertex p2 = 0 ; p2 < g.size() ; ++p2)
        for (auto p3 : g.neighbours(p2))
            for (auto p1 : g.neighbours(p2)) {
                if (p1 == p3)
                    continue;
                for (auto p4 : g.neighbours(p3))
                    if (p4 != p2 && p4 != p1 && p1 < p4)
                        result.push_back(P4Witness{{p1, p2, p3, p4}});
            }
    std::sort(result.begin(), result.end());
    return result;
}

namespace
{
    /// Iterated neighbourhood refinement. Class ids are ranks of
    /// isomorphism-invariant signatures, so isomorphic graphs get matching ids.
    auto refine_classes(const Graph & g) -> vector<int>
    {
        int n = g.size();
        vector<int> cls(n);
        for (Vertex v = 0 ; v < n ; ++v)
            cls[v] = g.degree(v);

        std::size_t classes = 0;
        while (true) {
            vector<pair<int, vector<int>>> sig(n);
            for (Vertex v = 0 ; v < n ; ++v) {
                sig[v].first = cls[v];
                for (auto w : g.neighbours(v))
                    sig[v].second.push_back(cls[w]);
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            map<pair<int, vector<int>>, int> rank;
            for (auto & s : sig)
                rank.emplace(s, 0);
            int r = 0;
            for (auto & [_, id] : rank)
                id = r++;
            for (Vertex v = 0 ; v < n ; ++v)
                cls[v] = rank[sig[v]];
            if (rank.size() == classes)
                break;
            classes = rank.size();
        }
        return cls;
    }

    struct Canonicaliser
    {
        const Graph & g;
        vector<int> cls;
        vector<int> slot_class;
        vector<Vertex> current, best;
        vector<vector<bool>> best_rows;
        vector<bool> used;

        auto row_for(int k) const -> vector<bool>
        {
            vector<bool> row(k);
            for (int j = 0 ; j < k ; ++j)
                row[j] = g.adjacent(current[k], current[j]);
            return row;
        }

        /// Returns true if a new best labelling was recorded below this node.
        auto search(int k, bool tied) -> bool
        {
            if (k == g.size()) {
                if (best.empty() || ! tied) {
                    best = current;
                    best_rows.clear();
                    for (int i = 0 ; i < k ; ++i)
                        best_rows.push_back(row_for(i));
                    return true;
                }
                return false;
            }
            bool updated = false;
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                if (used[v] || cls[v] != slot_class[k])
                    continue;
                current[k] = v;
                bool next_tied = false;
                if (! best.empty() && tied) {
                    auto row = row_for(k);
                    if (row < best_rows[k])
                        continue;
                    next_tied = (row == best_rows[k]);
                }
                used[v] = true;
                if (search(k + 1, next_tied)) {
                    // the prefix above now coincides with the new best
                    updated = true;
                    tied = true;
                }
                used[v] = false;
            }
            return updated;
        }
    };

    struct Matcher
    {
        const Graph & a;
        const Graph & b;
        vector<int> cls_a, cls_b;
        vector<Vertex> order;
        vector<Vertex> map_ab;
        vector<bool> used_b;

        auto search(std::size_t i) -> bool
        {
            if (i == order.size())
                return true;
            Vertex v = order[i];
            for (Vertex w = 0 ; w < b.size() ; ++w) {
                if (used_b[w] || cls_b[w] != cls_a[v])
                    continue;
                bool ok = true;
                for (std::size_t j = 0 ; j < i && ok ; ++j)
                    ok = a.adjacent(v, order[j]) == b.adjacent(w, map_ab[order[j]]);
                if (! ok)
                    continue;
                map_ab[v] = w;
                used_b[w] = true;
                if (search(i + 1))
                    return true;
                used_b[w] = false;
            }
            map_ab[v] = -1;
            return false;
        }
    };
}

auto crumby::find_isomorphism(const Graph & a, const Graph & b) -> vector<Vertex>
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return {};

    Matcher m{a, b, refine_classes(a), refine_classes(b), {}, vector<Vertex>(a.size(), -1), vector<bool>(b.size(), false)};

    auto hist_a = m.cls_a, hist_b = m.cls_b;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b)
        return {};

    // Smallest classes first, then a breadth-first sweep so each new vertex
    // is constrained by already-mapped neighbours.
    map<int, int> class_size;
    for (auto c : m.cls_a)
        ++class_size[c];
    vector<bool> queued(a.size(), false);
    vector<Vertex> seeds(a.size());
    for (Vertex v = 0 ; v < a.size() ; ++v)
        seeds[v] = v;
    std::stable_sort(seeds.begin(), seeds.end(), [&] (Vertex x, Vertex y) {
            return class_size[m.cls_a[x]] < class_size[m.cls_a[y]]; });
    for (auto s : seeds) {
        if (queued[s])
            continue;
        queued[s] = true;
        std::size_t start = m.order.size();
        m.order.push_back(s);
        for (std::size_t i = start ; i < m.order.size() ; ++i)
            for (auto w : a.neighbours(m.order[i]))
                if (! queued[w]) {
                    queued[w] = true;
                    m.order.push_back(w);
                }
    }

    if (! m.search(0))
        return {};
    return m.map_ab;
}

auto crumby::are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.size() == 0 && b.size() == 0)
        return true;
    return ! find_isomorphism(a, b).empty();
}

auto crumby::canonical_form(const Graph & g) -> Graph
{
    int n = g.size();
    if (n == 0)
        return g;

    Canonicaliser c{g, refine_classes(g), {}, vector<Vertex>(n), {}, {}, vector<bool>(n, false)};
    c.slot_class = c.cls;
    std::sort(c.slot_class.begin(), c.slot_class.end());
    c.search(0, true);

    vector<Vertex> position(n);
    for (int k = 0 ; k < n ; ++k)
        position[c.best[k]] = k;
    return g.relabelled(position);
}
