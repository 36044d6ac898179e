#ifndef CRUMBY_GADGETS_HH
#define CRUMBY_GADGETS_HH 1

#include <crumby/graph.hh>

#include <array>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crumby
{
    /**
     * Two-terminal series-parallel expression. Nodes are immutable and
     * shared, so subexpressions can be reused freely.
     */
    class SpExpr
    {
        public:
            enum class Kind
            {
                Edge,
                Series,
                Parallel,
                Reverse
            };

        private:
            struct Node;
            std::shared_ptr<const Node> _node;

            explicit SpExpr(std::shared_ptr<const Node> node);

        public:
            static auto edge() -> SpExpr;
            /// Chains terminals left to right; needs at least two children.
            static auto series(std::vector<SpExpr> children) -> SpExpr;
            /// Identifies all first terminals and all second terminals; at least two children.
            static auto parallel(std::vector<SpExpr> children) -> SpExpr;
            static auto reverse(SpExpr child) -> SpExpr;

            /// Same expression carrying a display name (used in printing and traces).
            auto named(std::string name) const -> SpExpr;

            auto kind() const -> Kind;
            auto children() const -> const std::vector<SpExpr> &;
            auto name() const -> const std::string &;

            /// "E", "(X . Y)", "(X | Y)", "X^rev"; named nodes print as their name.
            auto to_string(bool expand_names = false) const -> std::string;
    };

    class SpExpansionError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct LabeledGraph
    {
        Graph graph;
        Vertex terminal_first = 0;
        Vertex terminal_second = 1;
        /// Role name per vertex; empty when a vertex has no role.
        std::vector<std::string> roles;

        auto vertex_with_role(std::string_view role) const -> Vertex;
    };

    /// Vertices owned by one named node during an expansion.
    struct NamedInstance
    {
        std::string name;
        /// Number of named ancestors.
        int nesting = 0;
        Vertex first = 0;
        Vertex second = 0;
        /// Internal vertices are exactly [begin, end), in allocation order.
        Vertex begin = 0;
        Vertex end = 0;

        /// Map from a standalone expansion of the same node (terminals 0, 1,
        /// internals 2..) into this expansion.
        auto local_to_global(int local) const -> Vertex;
    };

    struct Expansion
    {
        LabeledGraph labeled;
        std::vector<NamedInstance> instances;
    };

    /**
     * Root terminals become vertices 0 and 1. Each series child except the
     * last allocates its tail junction before the child is expanded, so
     * numbering follows a depth-first walk. Duplicate edges and loops raise
     * SpExpansionError naming the subexpression that created them.
     */
    auto expand(const SpExpr & e) -> LabeledGraph;
    auto expand_traced(const SpExpr & e) -> Expansion;

    /// P2 = E . E
    auto sp_path2() -> SpExpr;
    /// A = E | (E . (P2 | P2) . E)
    auto sp_inner_module() -> SpExpr;
    /// Q: gadget F between root x and its distinguished neighbour a.
    auto sp_rooted_gadget() -> SpExpr;
    /// R = E | (E . Q . E), terminals s and t.
    auto sp_rich_gadget() -> SpExpr;
    /// E | (R . E . R^rev . E . Q^rev . E . Q)
    auto sp_g40(bool with_closing_edge = true) -> SpExpr;

    /// Roles of F in fixed order; F is numbered x=0, a=1, ..., h=8.
    inline constexpr std::array<std::string_view, 9> gadget_roles{"x", "a", "b", "c", "d", "e", "f", "g", "h"};

    /// Role of each vertex in a standalone expansion of sp_rooted_gadget().
    auto rooted_gadget_expansion_roles() -> std::span<const std::string_view>;
    /// Role of each vertex in a standalone expansion of sp_rich_gadget().
    auto rich_gadget_expansion_roles() -> std::span<const std::string_view>;

    auto f_edges() -> std::span<const Edge>;
    /// The 54 edges of the 40-vertex counterexample, in table order.
    auto g40_edge_table() -> std::span<const Edge>;

    /// F on (x,a,b,c,d,e,f,g,h) = (0..8); terminals x and a.
    auto build_F() -> LabeledGraph;
    /// s = 0, t = 1, F copy on 2..10 in role order; terminals s and t.
    auto build_R() -> LabeledGraph;
    /// Copy i of F on 9(i-1)..9(i-1)+8, joined by x1x2 = 0-9; terminals x1 and x2.
    auto build_G18() -> LabeledGraph;
    /// Literal table indices; roles "<module>:<role>"; terminals 0 and 39.
    auto build_G40() -> LabeledGraph;

    /// Modules of the 40-vertex graph: name, the vertex of each role.
    struct G40Module
    {
        std::string_view name;
        bool rich;                      // R(s,t) rather than a bare copy of F
        Vertex s, t;                    // only for rich modules
        std::array<Vertex, 9> f_copy;   // (x,a,b,c,d,e,f,g,h)
    };

    auto g40_modules() -> std::span<const G40Module>;

    struct EdgeSetDifference
    {
        std::vector<Edge> only_in_expansion;
        std::vector<Edge> only_in_table;

        auto empty() const -> bool { return only_in_expansion.empty() && only_in_table.empty(); }
        auto describe() const -> std::string;
    };

    /// Expands sp_g40(), renumbers it by role into table indices and returns the edge
    /// set after renumbering.
    auto relabelled_g40_expansion(bool with_closing_edge = true) -> std::vector<Edge>;

    auto compare_with_table(std::span<const Edge> expansion, std::span<const Edge> table) -> EdgeSetDifference;

    /// The relabelled expansion; throws SpExpansionError listing the
    /// symmetric difference if it differs from g40_edge_table().
    auto build_G40_sp() -> LabeledGraph;

    /// Catalogue lookup: "F", "R", "G18", "G40", "G40-sp". Throws std::invalid_argument.
    auto gadget_by_name(std::string_view name) -> LabeledGraph;
    auto gadget_names() -> std::span<const std::string_view>;
}

#endif
