/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_DOMINATION_HH
#define DOMIDX_GUARD_DOMINATION_HH 1

#include <domidx/graph.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace domidx
{
    /// Order limit for the exponential routines unless the caller says otherwise.
    inline constexpr std::size_t default_exact_cap = 64;

    /// Order limit for ir / IR, which scan every subset.
    inline constexpr std::size_t default_irredundance_cap = 20;

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool;

    /// N[a] minus the closed neighbourhoods of the other members of s. Throws VertexNotInSet.
    auto private_neighborhood(const Graph & g, Vertex a, const VertexSet & s) -> VertexSet;

    /// Every member of s has a nonempty private neighbourhood.
    auto is_irredundant(const Graph & g, const VertexSet & s) -> bool;

    /// Dominating, and every member has a nonempty private neighbourhood.
    auto is_minimal_dominating(const Graph & g, const VertexSet & s) -> bool;

    /// Minimum cardinality of a dominating set.
    auto domination_number(const Graph & g, std::size_t max_exact = default_exact_cap) -> std::size_t;

    /// Maximum cardinality of a minimal dominating set.
    auto upper_domination_number(const Graph & g, std::size_t max_exact = default_exact_cap) -> std::size_t;

    struct IrredundanceNumbers
    {
        std::size_t lower;  ///< ir: smallest maximal irredundant set
        std::size_t upper;  ///< IR: largest irredundant set
    };

    auto irredundance_numbers(const Graph & g, std::size_t max_exact = default_irredundance_cap) -> IrredundanceNumbers;

    /// A minimum-cardinality minimal dominating set containing a vertex.
    struct DegreeResult
    {
        std::size_t degree;
        VertexSet witness;
    };

    /**
     * Domination degree of v: the least size of a minimal dominating set
     * that contains v. Searches cardinalities upward from gamma, extending
     * {v} depth-first and only ever keeping irredundant partial sets.
     *
     * Pass gamma when it is already known to skip recomputing it.
     */
    auto domination_degree(const Graph & g, Vertex v, std::size_t max_exact = default_exact_cap,
            std::optional<std::size_t> gamma = std::nullopt) -> DegreeResult;

    struct DominationProfile
    {
        std::vector<std::size_t> degrees;
        std::vector<VertexSet> witnesses;
        std::size_t gamma = 0;
        std::size_t upper_gamma = 0;
        std::optional<std::size_t> ir;       ///< absent above the irredundance cap
        std::optional<std::size_t> upper_ir;
        std::size_t min_dd = 0;
        std::size_t max_dd = 0;
        std::size_t index = 0;
        bool is_drg = false;
    };

    struct ProfileOptions
    {
        std::size_t max_exact = default_exact_cap;
        std::size_t irredundance_cap = default_irredundance_cap;
        bool upper_bounds = true;             ///< compute upper_gamma (and ir / IR below their cap)
    };

    auto domination_profile(const Graph & g, const ProfileOptions & options = { }) -> DominationProfile;

    /// Calls visit on every minimal dominating set, in no particular order.
    auto for_each_minimal_dominating_set(const Graph & g, const std::function<void (const VertexSet &)> & visit,
            std::size_t max_exact = default_exact_cap) -> void;

    /// Every minimal dominating set exactly once, by cardinality and then lexicographically.
    auto enumerate_minimal_dominating_sets(const Graph & g, std::size_t max_exact = default_exact_cap) -> std::vector<VertexSet>;

    /**
     * Turns a dominating set containing v into a minimal dominating set
     * containing v. Redundant members other than v are dropped, highest id
     * first; when only v is redundant, its lowest dominator is swapped out
     * for the vertices that dominator alone was covering. If that stalls,
     * falls back to the exact search.
     *
     * Throws NotDominating or VertexNotInSet.
     */
    auto minimalize_containing(const Graph & g, const VertexSet & d, Vertex v,
            std::size_t max_exact = default_exact_cap) -> VertexSet;

    /**
     * Grows {v} by candidates in ascending id, admitting a candidate only
     * if every member keeps a nonempty private neighbourhood, and stops at
     * the first dominating set; backtracks on dead ends.
     */
    auto mds_containing_greedy(const Graph & g, Vertex v) -> VertexSet;
}

#endif
