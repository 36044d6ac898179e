#ifndef CRUMBY_SEARCH_HH
#define CRUMBY_SEARCH_HH 1

#include <crumby/graph.hh>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace crumby
{
    struct SurveyFilters
    {
        bool connected = false;
        bool subcubic = false;
        bool tw2 = false;
        bool biconnected = false;
    };

    struct SurveyOptions
    {
        SurveyFilters filters;
        std::uint64_t node_budget = 0;
        /// Decide instances concurrently; the report is merged in input order.
        bool parallel = false;
    };

    struct OrderCounts
    {
        std::uint64_t tested = 0;
        std::uint64_t sat = 0;
        std::uint64_t unsat = 0;
        std::uint64_t indeterminate = 0;
        std::vector<std::string> unsat_graph6;
    };

    struct SkippedLine
    {
        std::uint64_t line_number;
        std::string reason;
    };

    struct SurveyReport
    {
        SurveyFilters filters;
        std::uint64_t lines_read = 0;
        std::uint64_t filtered_out = 0;
        std::map<int, OrderCounts> by_order;
        std::vector<SkippedLine> skipped;
        /// Solver disagreements; any entry makes the run a failure.
        std::vector<std::string> cross_check_failures;

        auto totals() const -> OrderCounts;
        auto ok() const -> bool { return cross_check_failures.empty(); }
    };

    /**
     * Reads graph6 lines, applies the filters, decides each survivor with the
     * backtracking solver and confirms every Unsat with DPLL and (n <= 24)
     * the exhaustive oracle. Malformed lines are recorded and skipped.
     */
    auto survey_stream(std::istream & in, const SurveyOptions & options) -> SurveyReport;
    auto survey_lines(const std::vector<std::string> & lines, const SurveyOptions & options) -> SurveyReport;

    auto format_report(const SurveyReport & r) -> std::string;
    /// key=value lines, one per order plus a totals line.
    auto format_report_machine(const SurveyReport & r) -> std::string;

    inline constexpr int generator_max_order = 7;

    /**
     * All connected graphs on n vertices up to isomorphism, as canonical
     * graph6 lines in sorted order. Each is obtained by attaching a new
     * vertex to a connected graph on n - 1 vertices (every connected graph
     * has a vertex whose removal keeps it connected). Throws CapExceeded for
     * n > generator_max_order.
     */
    auto generate_small(int n) -> std::vector<std::string>;
}

#endif
