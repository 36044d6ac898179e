#include <crumby/gadgets.hh>

#include <algorithm>
#include <set>

using namespace crumby;

namespace crumby
{
    using std::to_string;
}

using std::set;
using std::span;
using std::string;
using std::string_view;
using std::vector;

struct SpExpr::Node
{
    Kind kind;
    vector<SpExpr> children;
    string name;
};

SpExpr::SpExpr(std::shared_ptr<const Node> node) :
    _node(std::move(node))
{
}

auto SpExpr::edge() -> SpExpr
{
    return SpExpr(std::make_shared<const Node>(Node{Kind::Edge, {}, {}}));
}

auto SpExpr::series(vector<SpExpr> children) -> SpExpr
{
    if (children.size() < 2)
        throw std::invalid_argument("series composition needs at least two children");
    return SpExpr(std::make_shared<const Node>(Node{Kind::Series, std::move(children), {}}));
}

auto SpExpr::parallel(vector<SpExpr> children) -> SpExpr
{
    if (children.size() < 2)
        throw std::invalid_argument("parallel composition needs at least two children");
    return SpExpr(std::make_shared<const Node>(Node{Kind::Parallel, std::move(children), {}}));
}

auto SpExpr::reverse(SpExpr child) -> SpExpr
{
    return SpExpr(std::make_shared<const Node>(Node{Kind::Reverse, {std::move(child)}, {}}));
}

auto SpExpr::named(string name) const -> SpExpr
{
    return SpExpr(std::make_shared<const Node>(Node{_node->kind, _node->children, std::move(name)}));
}

auto SpExpr::kind() const -> Kind
{
    return _node->kind;
}

auto SpExpr::children() const -> const vector<SpExpr> &
{
    return _node->children;
}

auto SpExpr::name() const -> const string &
{
    return _node->name;
}

auto SpExpr::to_string(bool expand_names) const -> string
{
    if (! expand_names && ! _node->name.empty())
        return _node->name;

    auto join = [&] (const char * sep) {
        string s = "(";
        for (std::size_t i = 0 ; i < _node->children.size() ; ++i) {
            if (i)
                s += sep;
            s += _node->children[i].to_string(expand_names);
        }
        return s + ")";
    };

    switch (_node->kind) {
        case Kind::Edge: return "E";
        case Kind::Series: return join(" . ");
        case Kind::Parallel: return join(" | ");
        case Kind::Reverse: return _node->children.front().to_string(expand_names) + "^rev";
    }
    return "?";
}

auto LabeledGraph::vertex_with_role(string_view role) const -> Vertex
{
    auto it = std::find(roles.begin(), roles.end(), role);
    if (it == roles.end())
        throw std::invalid_argument("no vertex with role \"" + string(role) + "\"");
    return static_cast<Vertex>(it - roles.begin());
}

auto NamedInstance::local_to_global(int local) const -> Vertex
{
    if (local == 0)
        return first;
    if (local == 1)
        return second;
    if (local - 2 >= end - begin)
        throw std::out_of_range("local vertex " + to_string(local) + " outside instance " + name);
    return begin + (local - 2);
}

namespace
{
    struct Expander
    {
        Vertex next = 2;
        int nesting = 0;
        set<Edge> edges;
        vector<NamedInstance> instances;

        auto run(const SpExpr & e, Vertex first, Vertex second) -> void
        {
            std::size_t slot = instances.size();
            bool tracked = ! e.name().empty();
            if (tracked) {
                instances.push_back(NamedInstance{e.name(), nesting, first, second, next, next});
                ++nesting;
            }

            switch (e.kind()) {
                case SpExpr::Kind::Edge: {
                    if (first == second)
                        throw SpExpansionError("expansion creates a self-loop at vertex " + to_string(first));
                    if (! edges.emplace(std::min(first, second), std::max(first, second)).second)
                        throw SpExpansionError("expansion creates a duplicate edge " + to_string(first) + "-" + to_string(second));
                    break;
                }
                case SpExpr::Kind::Series: {
                    Vertex head = first;
                    auto & kids = e.children();
                    for (std::size_t i = 0 ; i < kids.size() ; ++i) {
                        Vertex tail = (i + 1 == kids.size()) ? second : next++;
                        run_child(e, kids[i], head, tail);
                        head = tail;
                    }
                    break;
                }
                case SpExpr::Kind::Parallel:
                    for (auto & kid : e.children())
                        run_child(e, kid, first, second);
                    break;
                case SpExpr::Kind::Reverse:
                    run_child(e, e.children().front(), second, first);
                    break;
            }

            if (tracked) {
                instances[slot].end = next;
                --nesting;
            }
        }

        auto run_child(const SpExpr & parent, const SpExpr & child, Vertex first, Vertex second) -> void
        {
            try {
                run(child, first, second);
            }
            catch (const SpExpansionError & err) {
                string msg = err.what();
                if (msg.find(" in ") == string::npos)
                    msg += " in " + parent.to_string();
                throw SpExpansionError(msg);
            }
        }
    };

    auto make_labeled(const Graph & g, Vertex first, Vertex second, vector<string> roles) -> LabeledGraph
    {
        return LabeledGraph{g, first, second, std::move(roles)};
    }

    constexpr std::array<Edge, 11> f_edge_list{{
        {0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}
    }};

    constexpr std::array<Edge, 54> g40_table{{
        {0, 1}, {0, 2}, {0, 39}, {1, 3}, {1, 12}, {2, 3}, {2, 4}, {3, 5},
        {4, 6}, {5, 6}, {5, 7}, {6, 8}, {7, 9}, {7, 10}, {8, 9}, {8, 10},
        {11, 12}, {11, 13}, {11, 22}, {12, 14}, {13, 14}, {13, 15}, {14, 16}, {15, 17},
        {16, 17}, {16, 18}, {17, 19}, {18, 20}, {18, 21}, {19, 20}, {19, 21}, {22, 24},
        {22, 30}, {23, 25}, {23, 30}, {24, 25}, {24, 26}, {25, 27}, {26, 28}, {26, 29},
        {27, 28}, {27, 29}, {30, 31}, {31, 32}, {31, 39}, {32, 34}, {33, 34}, {33, 35},
        {33, 39}, {34, 36}, {35, 37}, {35, 38}, {36, 37}, {36, 38}
    }};

    const std::array<G40Module, 4> g40_module_list{{
        {"R(0,1)", true, 0, 1, {2, 3, 4, 5, 6, 7, 8, 9, 10}},
        {"R(11,12)", true, 11, 12, {13, 14, 15, 16, 17, 18, 19, 20, 21}},
        {"F[30]", false, -1, -1, {30, 22, 23, 24, 25, 26, 27, 28, 29}},
        {"F[31]", false, -1, -1, {31, 39, 32, 33, 34, 35, 36, 37, 38}}
    }};

    // Frozen from the deterministic numbering of expand(); checked against
    // build_F / build_R edge sets in the tests.
    constexpr std::array<string_view, 9> q_roles{"x", "a", "d", "b", "c", "f", "e", "g", "h"};
    constexpr std::array<string_view, 11> r_roles{"s", "t", "x", "a", "d", "b", "c", "f", "e", "g", "h"};

    constexpr std::array<string_view, 5> catalogue{"F", "R", "G18", "G40", "G40-sp"};

    auto f_role_index(string_view role) -> int
    {
        for (std::size_t i = 0 ; i < gadget_roles.size() ; ++i)
            if (gadget_roles[i] == role)
                return static_cast<int>(i);
        return -1;
    }
}

auto crumby::expand_traced(const SpExpr & e) -> Expansion
{
    Expander ex;
    ex.run(e, 0, 1);

    Expansion result;
    vector<Edge> edges(ex.edges.begin(), ex.edges.end());
    result.labeled = make_labeled(Graph::from_edges(ex.next, edges), 0, 1, vector<string>(ex.next));
    result.instances = std::move(ex.instances);
    return result;
}

auto crumby::expand(const SpExpr & e) -> LabeledGraph
{
    return expand_traced(e).labeled;
}

auto crumby::sp_path2() -> SpExpr
{
    return SpExpr::series({SpExpr::edge(), SpExpr::edge()}).named("P2");
}

auto crumby::sp_inner_module() -> SpExpr
{
    auto e = SpExpr::edge();
    auto p2 = sp_path2();
    return SpExpr::parallel({e, SpExpr::series({e, SpExpr::parallel({p2, p2}), e})}).named("A");
}

auto crumby::sp_rooted_gadget() -> SpExpr
{
    auto e = SpExpr::edge();
    return SpExpr::parallel({e, SpExpr::series({sp_path2(), sp_inner_module(), e})}).named("Q");
}

auto crumby::sp_rich_gadget() -> SpExpr
{
    auto e = SpExpr::edge();
    return SpExpr::parallel({e, SpExpr::series({e, sp_rooted_gadget(), e})}).named("R");
}

auto crumby::sp_g40(bool with_closing_edge) -> SpExpr
{
    auto e = SpExpr::edge();
    auto r = sp_rich_gadget();
    auto q = sp_rooted_gadget();
    auto chain = SpExpr::series({r, e, SpExpr::reverse(r), e, SpExpr::reverse(q), e, q});
    if (! with_closing_edge)
        return chain;
    return SpExpr::parallel({e, chain});
}

auto crumby::rooted_gadget_expansion_roles() -> span<const string_view>
{
    return q_roles;
}

auto crumby::rich_gadget_expansion_roles() -> span<const string_view>
{
    return r_roles;
}

auto crumby::f_edges() -> span<const Edge>
{
    return f_edge_list;
}

auto crumby::g40_edge_table() -> span<const Edge>
{
    return g40_table;
}

auto crumby::g40_modules() -> span<const G40Module>
{
    return g40_module_list;
}

auto crumby::build_F() -> LabeledGraph
{
    vector<string> roles(gadget_roles.begin(), gadget_roles.end());
    return make_labeled(Graph::from_edges(9, f_edge_list), 0, 1, std::move(roles));
}

auto crumby::build_R() -> LabeledGraph
{
    vector<Edge> edges{{0, 2}, {0, 1}, {1, 3}};
    for (auto [u, v] : f_edge_list)
        edges.emplace_back(u + 2, v + 2);
    vector<string> roles{"s", "t"};
    roles.insert(roles.end(), gadget_roles.begin(), gadget_roles.end());
    return make_labeled(Graph::from_edges(11, edges), 0, 1, std::move(roles));
}

auto crumby::build_G18() -> LabeledGraph
{
    vector<Edge> edges;
    vector<string> roles;
    for (int copy = 0 ; copy < 2 ; ++copy) {
        for (auto [u, v] : f_edge_list)
            edges.emplace_back(u + 9 * copy, v + 9 * copy);
        for (auto r : gadget_roles)
            roles.push_back(string(r) + to_string(copy + 1));
    }
    edges.emplace_back(0, 9);
    return make_labeled(Graph::from_edges(18, edges), 0, 9, std::move(roles));
}

auto crumby::build_G40() -> LabeledGraph
{
    vector<string> roles(40);
    for (auto & m : g40_module_list) {
        string prefix = string(m.name) + ":";
        if (m.rich) {
            roles[m.s] = prefix + "s";
            roles[m.t] = prefix + "t";
        }
        for (std::size_t i = 0 ; i < m.f_copy.size() ; ++i)
            roles[m.f_copy[i]] = prefix + string(gadget_roles[i]);
    }
    return make_labeled(Graph::from_edges(40, g40_table), 0, 39, std::move(roles));
}

auto crumby::relabelled_g40_expansion(bool with_closing_edge) -> vector<Edge>
{
    auto ex = expand_traced(sp_g40(with_closing_edge));

    vector<const NamedInstance *> modules;
    for (auto & inst : ex.instances)
        if (inst.nesting == 0)
            modules.push_back(&inst);
    if (modules.size() != g40_module_list.size())
        throw SpExpansionError("expected " + to_string(g40_module_list.size()) + " top-level modules, found "
                + to_string(modules.size()));

    vector<Vertex> to_table(ex.labeled.graph.size(), -1);
    for (std::size_t k = 0 ; k < modules.size() ; ++k) {
        auto & inst = *modules[k];
        auto & target = g40_module_list[k];
        auto local_roles = target.rich ? rich_gadget_expansion_roles() : rooted_gadget_expansion_roles();
        for (std::size_t local = 0 ; local < local_roles.size() ; ++local) {
            auto role = local_roles[local];
            Vertex table_vertex = role == "s" ? target.s : role == "t" ? target.t : target.f_copy[f_role_index(role)];
            Vertex global = inst.local_to_global(static_cast<int>(local));
            if (to_table[global] != -1 && to_table[global] != table_vertex)
                throw SpExpansionError("vertex " + to_string(global) + " receives two different table indices");
            to_table[global] = table_vertex;
        }
    }

    vector<Edge> result;
    for (auto [u, v] : ex.labeled.graph.edges()) {
        if (to_table[u] == -1 || to_table[v] == -1)
            throw SpExpansionError("expansion vertex without a role assignment");
        result.emplace_back(std::min(to_table[u], to_table[v]), std::max(to_table[u], to_table[v]));
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto crumby::compare_with_table(span<const Edge> expansion, span<const Edge> table) -> EdgeSetDifference
{
    auto normalise = [] (span<const Edge> edges) {
        set<Edge> s;
        for (auto [u, v] : edges)
            s.emplace(std::min(u, v), std::max(u, v));
        return s;
    };
    auto a = normalise(expansion), b = normalise(table);

    EdgeSetDifference diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff.only_in_expansion));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff.only_in_table));
    return diff;
}

auto EdgeSetDifference::describe() const -> string
{
    string s;
    auto list = [&] (const char * label, const vector<Edge> & edges) {
        if (edges.empty())
            return;
        s += label;
        for (auto [u, v] : edges)
            s += " " + to_string(u) + "-" + to_string(v);
        s += ";";
    };
    list(" only in expansion:", only_in_expansion);
    list(" only in table:", only_in_table);
    return s.empty() ? "edge sets equal" : s.substr(1);
}

auto crumby::build_G40_sp() -> LabeledGraph
{
    auto edges = relabelled_g40_expansion(true);
    auto diff = compare_with_table(edges, g40_table);
    if (! diff.empty())
        throw SpExpansionError("series-parallel expansion disagrees with the edge table: " + diff.describe());
    auto labeled = build_G40();
    labeled.graph = Graph::from_edges(40, edges);
    return labeled;
}

auto crumby::gadget_by_name(string_view name) -> LabeledGraph
{
    if (name == "F")
        return build_F();
    if (name == "R")
        return build_R();
    if (name == "G18")
        return build_G18();
    if (name == "G40")
        return build_G40();
    if (name == "G40-sp")
        return build_G40_sp();
    throw std::invalid_argument("unknown gadget \"" + string(name) + "\" (known: F, R, G18, G40, G40-sp)");
}

auto crumby::gadget_names() -> span<const string_view>
{
    return catalogue;
}
