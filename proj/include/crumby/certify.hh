#ifndef CRUMBY_CERTIFY_HH
#define CRUMBY_CERTIFY_HH 1

#include <crumby/graph.hh>
#include <crumby/structure.hh>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crumby
{
    using EliminationOrder = std::vector<Vertex>;

    struct EliminationStep
    {
        Vertex vertex;
        /// Neighbours still present when vertex is eliminated, ascending.
        std::vector<Vertex> remaining;
    };

    struct EliminationTrace
    {
        int width = 0;
        std::vector<EliminationStep> steps;
    };

    /**
     * Eliminates vertices in the given order, turning the remaining
     * neighbourhood of each into a clique. The width is the largest
     * remaining-neighbour count. Throws std::invalid_argument unless order
     * is a permutation of the vertices.
     */
    auto eliminate(const Graph & g, const EliminationOrder & order) -> EliminationTrace;
    auto elimination_width(const Graph & g, const EliminationOrder & order) -> int;

    /**
     * Greedy: repeatedly eliminate the lowest-index vertex of current degree
     * at most two. Returns nothing when every remaining vertex has degree
     * three or more.
     */
    auto find_elimination_order(const Graph & g) -> std::optional<EliminationOrder>;

    struct Tw2Recognition
    {
        bool treewidth_at_most_two = false;
        std::vector<std::string> trace;
        /// Vertices left when no rule applies (empty on success).
        std::vector<Vertex> remainder;

        explicit operator bool() const { return treewidth_at_most_two; }
    };

    /**
     * Reduction rules on a multigraph copy: delete a vertex of degree at most
     * one, else merge a parallel edge pair, else suppress a degree-two vertex;
     * lowest index first in each rule. Accepts iff everything is deleted.
     */
    auto recognize_tw2(const Graph & g) -> Tw2Recognition;

    struct MinorWitness
    {
        /// branch_sets[i] realises pattern vertex i.
        std::vector<std::vector<Vertex>> branch_sets;
    };

    /// Structural check: disjoint, nonempty, connected sets with every pattern edge realised.
    auto validate_minor_witness(const Graph & host, const Graph & pattern, const MinorWitness & w) -> bool;

    enum class MinorStatus
    {
        Found,
        NotFound,
        Indeterminate
    };

    struct MinorResult
    {
        MinorStatus status = MinorStatus::Indeterminate;
        std::optional<MinorWitness> witness;
        std::uint64_t nodes = 0;
    };

    inline constexpr int minor_pattern_max_order = 6;

    /**
     * Exhaustive search for a pattern minor. A model can always be grown
     * until it covers every host component it touches, so the search assigns
     * every vertex of such a component to some branch set (components are
     * either fully used or unused) and prunes labels that can no longer be
     * joined up. Found witnesses are shrunk to inclusion-minimal branch sets.
     * node_budget 0 means unlimited. Vertices listed in together must all
     * land in one branch set, and shrinking keeps them there.
     */
    auto has_minor(const Graph & host, const Graph & pattern, std::uint64_t node_budget = 0,
            const std::vector<Vertex> & together = {}) -> MinorResult;

    class CertificateError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * Certificates are line-oriented:
     *
     *   certificate elimination-order
     *   order v0 v1 ...
     *
     *   certificate minor-witness
     *   pattern <graph6>
     *   branch <vertices of set 0>
     *   branch <vertices of set 1>
     *   ...
     *
     *   certificate ear-decomposition
     *   cycle v0 v1 ... v0
     *   ear u ... w
     */
    auto emit_elimination_certificate(const EliminationOrder & order) -> std::string;
    auto emit_minor_certificate(const Graph & pattern, const MinorWitness & w) -> std::string;
    auto emit_ear_certificate(const EarDecomposition & d) -> std::string;

    struct ParsedCertificate
    {
        std::string kind;
        EliminationOrder order;
        std::optional<Graph> pattern;
        MinorWitness witness;
        EarDecomposition ears;
    };

    auto parse_certificate_document(std::string_view text) -> ParsedCertificate;
}

#endif
