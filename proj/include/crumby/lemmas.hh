#ifndef CRUMBY_LEMMAS_HH
#define CRUMBY_LEMMAS_HH 1

#include <crumby/coloring.hh>
#include <crumby/graph.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crumby
{
    class SpecError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /**
     * Describes how a gadget sits inside an unknown ambient graph: which
     * vertices may have outside neighbours, which colors are assumed, and
     * which boundary vertices are known to have a red outside neighbour.
     */
    class BoundarySpec
    {
        private:
            std::vector<Vertex> _boundary;
            std::vector<std::pair<Vertex, Color>> _fixed;
            std::vector<Vertex> _outside_red;

        public:
            auto add_boundary(Vertex v) -> BoundarySpec &;
            /// Throws SpecError if v is already fixed to the other color.
            auto fix(Vertex v, Color c) -> BoundarySpec &;
            /// v must already be a boundary vertex.
            auto mark_outside_red(Vertex v) -> BoundarySpec &;

            auto in_boundary(Vertex v) const -> bool;
            auto has_outside_red(Vertex v) const -> bool;
            auto fixed_color(Vertex v) const -> std::optional<Color>;
            auto fixed() const -> const std::vector<std::pair<Vertex, Color>> & { return _fixed; }
            auto boundary() const -> const std::vector<Vertex> & { return _boundary; }

            /// Throws SpecError if a referenced vertex is outside the gadget.
            auto validate(const Graph & g) const -> void;
    };

    /**
     * Necessary conditions for the restriction of an ambient crumby coloring:
     *  C1 blue vertices have at most one blue neighbour in g;
     *  C2 red non-boundary vertices have a red neighbour in g;
     *  C3 g has no red P4;
     *  C4 a red boundary vertex with a red outside neighbour starts no red
     *     path v-p-q in g.
     * Throws SpecError if c contradicts a fixed color.
     */
    auto relaxed_feasible(const Graph & g, const BoundarySpec & spec, const Coloring & c) -> bool;

    inline constexpr int feasible_max_order = 16;

    /// All relaxed-feasible colorings in lexicographic order. The parallel
    /// version filters with OpenMP and gathers in index order.
    auto enumerate_feasible(const Graph & g, const BoundarySpec & spec) -> std::vector<Coloring>;
    auto enumerate_feasible_serial(const Graph & g, const BoundarySpec & spec) -> std::vector<Coloring>;

    /// Red path v-p-q inside g, if any.
    auto red_path_from(const Graph & g, const Coloring & c, Vertex v) -> std::optional<std::array<Vertex, 3>>;

    struct LemmaReport
    {
        std::string lemma;
        std::string scenario;
        std::size_t feasible = 0;
        bool pass = false;
        std::optional<Coloring> counterexample;
        std::vector<std::string> notes;
    };

    auto format_human(const LemmaReport & r) -> std::string;
    auto format_key_value(const LemmaReport & r) -> std::string;

    /**
     * Blue root: with x blue and boundary {x, r}, every feasible coloring
     * has r red with no red neighbour in the gadget. extra_boundary widens
     * the hypothesis for negative controls.
     */
    auto verify_rooted_blue(const Graph & f, Vertex x, Vertex r, const std::vector<Vertex> & extra_boundary = {}) -> LemmaReport;

    /**
     * Red root: with x red and boundary {x, partner}, every feasible coloring
     * has a or b red; outside_red adds a red neighbour of x outside.
     */
    auto verify_rooted_red(const Graph & f, Vertex x, Vertex a, Vertex b, Vertex partner, bool outside_red) -> LemmaReport;

    /**
     * Rich gadget: with s red and boundary {s, t}, every feasible coloring has a
     * red path s-p-q inside. With outside_red the feasible set must be empty.
     */
    auto verify_rich(const Graph & r, Vertex s, Vertex t, bool outside_red) -> LemmaReport;

    /// Stock gadgets with fixed numbering.
    auto verify_lemma1_i(char root_neighbour = 'a') -> LemmaReport;
    auto verify_lemma1_ii(char boundary_partner, bool outside_red) -> LemmaReport;
    auto verify_lemma2(bool outside_red) -> LemmaReport;

    /// Feasible sets for r = a and r = b correspond under a<->b, c<->d, e<->f.
    auto lemma1_i_automorphism_consistent() -> bool;

    /// Every stock report, in a fixed order.
    auto run_all_lemmas() -> std::vector<LemmaReport>;

    struct CompositionReport
    {
        /// Colorings with x blue whose vertex a has a red neighbour inside F (must be 0).
        std::size_t blue_root_supported = 0;
        /// Feasible colorings of one copy with x red next to a red outside vertex.
        std::size_t red_root_colorings = 0;
        std::uint64_t pairs_checked = 0;
        std::uint64_t pairs_with_red_p4_through_bridge = 0;
        bool contradiction = false;
        bool solver_unsat = false;

        auto agrees() const -> bool { return contradiction && solver_unsat; }
    };

    /**
     * Rebuilds the argument for the 18-vertex graph from the rooted-gadget
     * feasible sets alone: a blue root leaves a unsupported, so both roots
     * are red; then any pair of red-root colorings joined by x1x2 carries a
     * red P4 through the bridge. Compared with the exhaustive solver.
     */
    auto compose_g18() -> CompositionReport;
}

#endif
