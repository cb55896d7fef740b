/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_VERIFY_HH
#define DOMIDX_GUARD_VERIFY_HH 1

#include <domidx/graph.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace domidx
{
    /// G(n, p) from a seeded mt19937_64; pairs u < v are visited in order.
    auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph;

    inline constexpr std::size_t labeled_enumeration_cap = 7;

    /// Every labeled graph on n vertices, by edge mask. Throws EnumerationCapExceeded above the cap.
    auto for_each_labeled_graph(std::size_t n, bool connected_only, const std::function<void (const Graph &)> & fn) -> void;

    auto enumerate_labeled_graphs(std::size_t n, bool connected_only) -> std::vector<Graph>;

    struct Discrepancy
    {
        std::string claim;
        std::string name;                               ///< human-readable instance name
        std::string instance;                           ///< edge list, re-parsable
        std::vector<std::string> expected;              ///< one entry per competing reading
        std::string computed;
        std::vector<std::vector<std::string>> witnesses;
        bool proved = false;                            ///< a rigorous claim failed
    };

    struct CheckReport
    {
        std::string suite;
        std::size_t instances = 0;
        std::size_t passes = 0;
        std::vector<Discrepancy> discrepancies;
        std::vector<std::string> table;                 ///< suite-specific summary lines
        double seconds = 0.0;

        auto proved_failures() const -> std::size_t;
    };

    struct SuiteLimits
    {
        std::size_t max_exact = 24;
        std::uint64_t seed = 1;
        std::size_t exhaustive_n = 6;       ///< definitional, inequalities and monotonicity
        std::size_t path_from = 3, path_to = 15;
        std::size_t composite_order = 24;   ///< operations
        std::size_t product_order = 16;     ///< products-ordering
    };

    auto suite_names() -> const std::vector<std::string> &;

    /// Throws UnknownSuite. "all" runs every suite into one report.
    auto run_suite(std::string_view suite, const SuiteLimits & limits = { }) -> CheckReport;

    /// One JSON object per line, one line per discrepancy.
    auto write_ledger(const CheckReport & report, std::ostream & out) -> void;

    auto summarize(const CheckReport & report) -> std::string;

    /// Which reading of the path formulas the computed values follow, for one order n.
    struct PathResolution
    {
        std::size_t n = 0;
        std::vector<std::size_t> degrees;
        std::size_t index = 0;
        bool vertex_statement = false, vertex_proof = false;    ///< for n = 3k + 2
        bool index_statement = false, index_proof = false;
        bool uncontested_vertex = false, uncontested_index = false;    ///< otherwise

        auto contested() const -> bool { return n % 3 == 2; }
    };

    auto resolve_path(std::size_t n, std::size_t max_exact = 24) -> PathResolution;

    /// One line per order, deterministic.
    auto path_variant_table(const std::vector<PathResolution> & rows) -> std::vector<std::string>;
}

#endif
