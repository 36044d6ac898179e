#include <crumby/certify.hh>
#include <crumby/graph_io.hh>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::map;
using std::optional;
using std::set;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

auto crumby::eliminate(const Graph & g, const EliminationOrder & order) -> EliminationTrace
{
    int n = g.size();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order has " + to_string(order.size()) + " entries for "
                + to_string(n) + " vertices");
    vector<bool> seen(n, false);
    for (auto v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("elimination order is not a permutation of the vertices");
        seen[v] = true;
    }

    vector<set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    EliminationTrace trace;
    for (auto v : order) {
        vector<Vertex> remaining(adj[v].begin(), adj[v].end());
        trace.width = std::max(trace.width, static_cast<int>(remaining.size()));
        for (auto u : remaining) {
            adj[u].erase(v);
            for (auto w : remaining)
                if (w != u)
                    adj[u].insert(w);
        }
        adj[v].clear();
        trace.steps.push_back(EliminationStep{v, std::move(remaining)});
    }
    return trace;
}

auto crumby::elimination_width(const Graph & g, const EliminationOrder & order) -> int
{
    return eliminate(g, order).width;
}

auto crumby::find_elimination_order(const Graph & g) -> optional<EliminationOrder>
{
    int n = g.size();
    vector<set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    vector<bool> gone(n, false);
    EliminationOrder order;

    while (static_cast<int>(order.size()) < n) {
        Vertex pick = -1;
        for (Vertex v = 0 ; v < n && pick == -1 ; ++v)
            if (! gone[v] && adj[v].size() <= 2)
                pick = v;
        if (pick == -1)
            return std::nullopt;

        vector<Vertex> remaining(adj[pick].begin(), adj[pick].end());
        for (auto u : remaining)
            adj[u].erase(pick);
        if (remaining.size() == 2) {
            adj[remaining[0]].insert(remaining[1]);
            adj[remaining[1]].insert(remaining[0]);
        }
        adj[pick].clear();
        gone[pick] = true;
        order.push_back(pick);
    }
    return order;
}

auto crumby::recognize_tw2(const Graph & g) -> Tw2Recognition
{
    int n = g.size();
    vector<map<Vertex, int>> mult(n);
    for (auto [u, v] : g.edges()) {
        mult[u][v] = 1;
        mult[v][u] = 1;
    }
    vector<bool> alive(n, true);
    Tw2Recognition result;

    auto remove_vertex = [&] (Vertex v) {
        for (auto & [u, _] : mult[v])
            mult[u].erase(v);
        mult[v].clear();
        alive[v] = false;
    };

    while (true) {
        bool applied = false;

        for (Vertex v = 0 ; v < n && ! applied ; ++v)
            if (alive[v] && mult[v].size() <= 1) {
                result.trace.push_back("delete " + to_string(v) + " (degree " + to_string(mult[v].size()) + ")");
                remove_vertex(v);
                applied = true;
            }
        if (applied)
            continue;

        for (Vertex u = 0 ; u < n && ! applied ; ++u)
            for (auto & [w, m] : mult[u])
                if (u < w && m > 1) {
                    result.trace.push_back("merge " + to_string(m) + " parallel edges " + to_string(u) + "-" + to_string(w));
                    m = 1;
                    mult[w][u] = 1;
                    applied = true;
                    break;
                }
        if (applied)
            continue;

        for (Vertex v = 0 ; v < n && ! applied ; ++v)
            if (alive[v] && mult[v].size() == 2) {
                Vertex a = mult[v].begin()->first, b = std::next(mult[v].begin())->first;
                result.trace.push_back("suppress " + to_string(v) + " -> " + to_string(a) + "-" + to_string(b));
                remove_vertex(v);
                ++mult[a][b];
                ++mult[b][a];
                applied = true;
            }
        if (! applied)
            break;
    }

    for (Vertex v = 0 ; v < n ; ++v)
        if (alive[v])
            result.remainder.push_back(v);
    result.treewidth_at_most_two = result.remainder.empty();
    return result;
}

auto crumby::validate_minor_witness(const Graph & host, const Graph & pattern, const MinorWitness & w) -> bool
{
    if (static_cast<int>(w.branch_sets.size()) != pattern.size())
        return false;

    vector<int> owner(host.size(), -1);
    for (std::size_t i = 0 ; i < w.branch_sets.size() ; ++i) {
        auto & bs = w.branch_sets[i];
        if (bs.empty())
            return false;
        for (auto v : bs) {
            if (v < 0 || v >= host.size() || owner[v] != -1)
                return false;
            owner[v] = static_cast<int>(i);
        }
    }

    for (std::size_t i = 0 ; i < w.branch_sets.size() ; ++i) {
        auto & bs = w.branch_sets[i];
        vector<Vertex> reached{bs.front()};
        set<Vertex> seen{bs.front()};
        for (std::size_t k = 0 ; k < reached.size() ; ++k)
            for (auto u : host.neighbours(reached[k]))
                if (owner[u] == static_cast<int>(i) && seen.insert(u).second)
                    reached.push_back(u);
        if (reached.size() != bs.size())
            return false;
    }

    for (auto [a, b] : pattern.edges()) {
        bool realised = false;
        for (auto v : w.branch_sets[a]) {
            for (auto u : host.neighbours(v))
                if (owner[u] == b) {
                    realised = true;
                    break;
                }
            if (realised)
                break;
        }
        if (! realised)
            return false;
    }
    return true;
}

namespace
{
    constexpr int unassigned = -2, unused = -1;

    class MinorSearch
    {
        private:
            const Graph & _host;
            const Graph & _pattern;
            uint64_t _budget;
            int _p;
            bool _labels_symmetric;
            vector<Vertex> _order;
            vector<int> _component_start;    // 1 at the first vertex of a component in _order
            vector<vector<Vertex>> _component_of_position;
            vector<int> _label;
            vector<int> _label_count;
            vector<bool> _together;
            int _assigned = 0;

        public:
            uint64_t nodes = 0;
            bool out_of_budget = false;

            MinorSearch(const Graph & host, const Graph & pattern, uint64_t budget, const vector<Vertex> & together) :
                _host(host),
                _pattern(pattern),
                _budget(budget),
                _p(pattern.size()),
                _labels_symmetric(2 * pattern.edge_count() == static_cast<std::size_t>(_p) * (_p - 1)),
                _label(host.size(), unassigned),
                _label_count(pattern.size(), 0),
                _together(host.size(), false)
            {
                for (auto v : together)
                    _together[v] = true;
                for (auto & comp : connected_components(host)) {
                    // breadth-first inside each component keeps assigned vertices connected
                    vector<bool> seen(host.size(), false);
                    vector<Vertex> bfs{comp.front()};
                    seen[comp.front()] = true;
                    for (std::size_t i = 0 ; i < bfs.size() ; ++i)
                        for (auto w : host.neighbours(bfs[i]))
                            if (! seen[w]) {
                                seen[w] = true;
                                bfs.push_back(w);
                            }
                    _component_start.push_back(1);
                    _component_start.resize(_order.size() + bfs.size(), 0);
                    for (std::size_t i = 0 ; i < bfs.size() ; ++i)
                        _component_of_position.push_back(bfs);
                    _order.insert(_order.end(), bfs.begin(), bfs.end());
                }
            }

            auto witness() const -> MinorWitness
            {
                MinorWitness w;
                w.branch_sets.resize(_p);
                for (Vertex v = 0 ; v < _host.size() ; ++v)
                    if (_label[v] >= 0)
                        w.branch_sets[_label[v]].push_back(v);
                return w;
            }

            auto feasible() const -> bool
            {
                int missing = 0;
                for (int l = 0 ; l < _p ; ++l)
                    missing += (_label_count[l] == 0);
                if (missing > _host.size() - _assigned)
                    return false;

                // Each label must still be joinable through unassigned vertices.
                vector<bool> open(_p, false);
                for (int l = 0 ; l < _p ; ++l) {
                    if (_label_count[l] == 0)
                        continue;
                    Vertex start = -1;
                    for (Vertex v = 0 ; v < _host.size() && start == -1 ; ++v)
                        if (_label[v] == l)
                            start = v;
                    vector<Vertex> stack{start};
                    vector<bool> seen(_host.size(), false);
                    seen[start] = true;
                    int reached = 1;
                    while (! stack.empty()) {
                        Vertex v = stack.back();
                        stack.pop_back();
                        for (auto w : _host.neighbours(v)) {
                            if (seen[w])
                                continue;
                            if (_label[w] == unassigned)
                                open[l] = true;
                            if (_label[w] == l || _label[w] == unassigned) {
                                seen[w] = true;
                                reached += (_label[w] == l);
                                stack.push_back(w);
                            }
                        }
                    }
                    if (reached != _label_count[l])
                        return false;
                }

                // A pattern edge between two sets with no host edge needs both sides able to grow.
                for (auto [a, b] : _pattern.edges()) {
                    if (_label_count[a] == 0 || _label_count[b] == 0)
                        continue;
                    if (open[a] && open[b])
                        continue;
                    bool direct = false;
                    for (Vertex v = 0 ; v < _host.size() && ! direct ; ++v)
                        if (_label[v] == a)
                            for (auto w : _host.neighbours(v))
                                if (_label[w] == b) {
                                    direct = true;
                                    break;
                                }
                    if (! direct)
                        return false;
                }
                return true;
            }

            auto search(std::size_t pos) -> bool
            {
                if (pos == _order.size())
                    return complete();

                if (_budget && nodes >= _budget) {
                    out_of_budget = true;
                    return false;
                }
                ++nodes;

                Vertex v = _order[pos];
                int max_used = -1;
                for (int l = 0 ; l < _p ; ++l)
                    if (_label_count[l] > 0)
                        max_used = l;
                int first = 0;
                int limit = _labels_symmetric ? std::min(_p - 1, max_used + 1) : _p - 1;
                if (_together[v])
                    for (Vertex u = 0 ; u < _host.size() ; ++u)
                        if (_together[u] && _label[u] >= 0)
                            first = limit = _label[u];

                for (int l = first ; l <= limit ; ++l) {
                    _label[v] = l;
                    ++_label_count[l];
                    ++_assigned;
                    if (feasible() && search(pos + 1))
                        return true;
                    --_assigned;
                    --_label_count[l];
                    _label[v] = unassigned;
                    if (out_of_budget)
                        return false;
                }

                auto & comp = _component_of_position[pos];
                bool required = std::any_of(comp.begin(), comp.end(), [&] (Vertex u) { return _together[u]; });
                if (_component_start[pos] && ! required) {
                    for (auto u : comp)
                        _label[u] = unused;
                    _assigned += static_cast<int>(comp.size());
                    if (feasible() && search(pos + comp.size()))
                        return true;
                    _assigned -= static_cast<int>(comp.size());
                    for (auto u : comp)
                        _label[u] = unassigned;
                }
                return false;
            }

            auto complete() const -> bool
            {
                return validate_minor_witness(_host, _pattern, witness());
            }
    };

    auto shrink(const Graph & host, const Graph & pattern, MinorWitness w, const vector<Vertex> & keep) -> MinorWitness
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto & bs : w.branch_sets)
                for (std::size_t k = 0 ; k < bs.size() && bs.size() > 1 ; ) {
                    Vertex v = bs[k];
                    if (std::find(keep.begin(), keep.end(), v) != keep.end()) {
                        ++k;
                        continue;
                    }
                    bs.erase(bs.begin() + static_cast<long>(k));
                    if (validate_minor_witness(host, pattern, w))
                        changed = true;
                    else {
                        bs.insert(bs.begin() + static_cast<long>(k), v);
                        ++k;
                    }
                }
        }
        return w;
    }
}

auto crumby::has_minor(const Graph & host, const Graph & pattern, uint64_t node_budget,
        const vector<Vertex> & together) -> MinorResult
{
    for (auto v : together)
        if (v < 0 || v >= host.size())
            throw std::invalid_argument("vertex " + to_string(v) + " is not in the host graph");

    if (pattern.size() > minor_pattern_max_order)
        throw std::invalid_argument("minor patterns are limited to " + to_string(minor_pattern_max_order) + " vertices");

    MinorResult result;
    if (pattern.size() == 0) {
        result.status = MinorStatus::Found;
        result.witness = MinorWitness{};
        return result;
    }
    if (pattern.size() > host.size() || pattern.edge_count() > host.edge_count()) {
        result.status = MinorStatus::NotFound;
        return result;
    }

    MinorSearch search(host, pattern, node_budget, together);
    bool found = search.search(0);
    result.nodes = search.nodes;
    if (found) {
        result.status = MinorStatus::Found;
        result.witness = shrink(host, pattern, search.witness(), together);
    }
    else
        result.status = search.out_of_budget ? MinorStatus::Indeterminate : MinorStatus::NotFound;
    return result;
}

namespace
{
    auto join(const vector<Vertex> & vs) -> string
    {
        string s;
        for (auto v : vs)
            s += " " + to_string(v);
        return s;
    }

    auto read_vertices(std::istringstream & in) -> vector<Vertex>
    {
        vector<Vertex> vs;
        long v;
        while (in >> v)
            vs.push_back(static_cast<Vertex>(v));
        if (! in.eof())
            throw CertificateError("certificate: expected vertex indices");
        return vs;
    }
}

auto crumby::emit_elimination_certificate(const EliminationOrder & order) -> string
{
    return "certificate elimination-order\norder" + join(order) + "\n";
}

auto crumby::emit_minor_certificate(const Graph & pattern, const MinorWitness & w) -> string
{
    string out = "certificate minor-witness\npattern " + emit_graph6(pattern) + "\n";
    for (auto & bs : w.branch_sets)
        out += "branch" + join(bs) + "\n";
    return out;
}

auto crumby::emit_ear_certificate(const EarDecomposition & d) -> string
{
    string out = "certificate ear-decomposition\ncycle" + join(d.initial_cycle) + "\n";
    for (auto & ear : d.ears)
        out += "ear" + join(ear) + "\n";
    return out;
}

auto crumby::parse_certificate_document(string_view text) -> ParsedCertificate
{
    ParsedCertificate cert;
    std::istringstream in{string(text)};
    string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        string key;
        fields >> key;
        if (key == "certificate")
            fields >> cert.kind;
        else if (key == "order")
            cert.order = read_vertices(fields);
        else if (key == "pattern") {
            string g6;
            fields >> g6;
            cert.pattern = parse_graph6(g6);
        }
        else if (key == "branch")
            cert.witness.branch_sets.push_back(read_vertices(fields));
        else if (key == "cycle")
            cert.ears.initial_cycle = read_vertices(fields);
        else if (key == "ear")
            cert.ears.ears.push_back(read_vertices(fields));
        else
            throw CertificateError("certificate: unknown key \"" + key + "\"");
    }
    if (cert.kind != "elimination-order" && cert.kind != "minor-witness" && cert.kind != "ear-decomposition")
        throw CertificateError("certificate: missing or unknown kind \"" + cert.kind + "\"");
    if (cert.kind == "minor-witness" && ! cert.pattern)
        throw CertificateError("certificate: minor witness without pattern line");
    return cert;
}
