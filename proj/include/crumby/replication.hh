#ifndef CRUMBY_REPLICATION_HH
#define CRUMBY_REPLICATION_HH 1

#include <crumby/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crumby
{
    /// Published claims must pass; regression constants were frozen after the first verified run.
    enum class Provenance
    {
        PaperClaim,
        DerivedRegression
    };

    auto to_string(Provenance p) -> std::string;

    struct CheckResult
    {
        int criterion = 0;
        std::string id;
        Provenance provenance = Provenance::PaperClaim;
        bool pass = false;
        bool skipped = false;
        std::string detail;
        double seconds = 0.0;
    };

    struct ReplicationOptions
    {
        /// Skips the 2^18 exhaustive enumeration and the property sweeps.
        bool quick = false;
        /// Replaces the literal 40-vertex edge table (negative controls).
        std::optional<std::vector<Edge>> g40_table;
        /// Pairs for the verifier agreement sweep.
        std::uint64_t random_pairs = 100000;
    };

    /// Wall-clock limits for the two headline solves, in seconds.
    inline constexpr double g18_time_limit = 10.0;
    inline constexpr double g40_time_limit = 60.0;

    /// Runs every check in criterion order; on_check sees each result as it completes.
    auto run_replication(const ReplicationOptions & options = {},
            const std::function<void (const CheckResult &)> & on_check = {}) -> std::vector<CheckResult>;

    /// "PASS  claim       c1  id: detail", optionally followed by " (0.003 s)".
    auto format_check(const CheckResult & r, bool with_time = false) -> std::string;

    /// True iff nothing failed (skipped checks do not count as failures).
    auto all_passed(const std::vector<CheckResult> & results) -> bool;
}

#endif
