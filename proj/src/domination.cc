/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/domination.hh>
#include <domidx/errors.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>

using namespace domidx;

namespace
{
    auto check_cap(const Graph & g, std::size_t cap) -> void
    {
        if (g.order() > cap)
            throw ExactCapExceeded(g.order(), cap);
    }

    auto check_vertex(const Graph & g, Vertex v) -> void
    {
        if (v >= g.order())
            throw VertexOutOfRange("vertex " + std::to_string(v) + " on a graph of order " + std::to_string(g.order()));
    }

    /// Vertices dominated at least once and at least twice by a set.
    struct Coverage
    {
        VertexSet once, twice;

        explicit Coverage(std::size_t n) : once(n), twice(n) { }

        Coverage(const Graph & g, const VertexSet & s) : once(g.order()), twice(g.order())
        {
            for (auto a : s)
                add(g.closed_neighborhood(a));
        }

        auto add(const VertexSet & closed) -> void
        {
            twice |= once & closed;
            once |= closed;
        }

        /// Member a has a private neighbour iff part of N[a] is covered only once.
        auto has_private(const VertexSet & closed) const -> bool
        {
            return ! closed.is_subset_of(twice);
        }
    };

    auto all_have_private(const Graph & g, const VertexSet & s, const Coverage & cover) -> bool
    {
        for (auto a : s)
            if (! cover.has_private(g.closed_neighborhood(a)))
                return false;
        return true;
    }

    /**
     * Depth-first search for a minimal dominating set of at most budget
     * vertices containing the initial set. Branches on the uncovered vertex
     * with fewest live candidates; candidates already tried at a node are
     * excluded from its later siblings.
     */
    class BoundedSearch
    {
        private:
            const Graph & _g;
            std::size_t _budget;
            VertexSet _chosen;
            Coverage _cover;
            VertexSet _excluded;

            auto search() -> bool
            {
                if (_cover.once.is_full())
                    return true;

                auto used = _chosen.count();
                if (used >= _budget)
                    return false;

                auto uncovered = _cover.once.complement();
                auto uncovered_count = uncovered.count();

                std::size_t best_cover = 0;
                for (Vertex w = 0 ; w < _g.order() ; ++w)
                    if (! _excluded.contains(w) && ! _chosen.contains(w))
                        best_cover = std::max(best_cover, _g.closed_neighborhood(w).intersection_count(uncovered));
                if (best_cover == 0 || (_budget - used) * best_cover < uncovered_count)
                    return false;

                Vertex branch_on = _g.order();
                std::size_t fewest = std::numeric_limits<std::size_t>::max();
                for (auto u : uncovered) {
                    auto live = (_g.closed_neighborhood(u) - _excluded).count();
                    if (live == 0)
                        return false;
                    if (live < fewest) {
                        fewest = live;
                        branch_on = u;
                    }
                }

                auto saved_excluded = _excluded;
                auto candidates = _g.closed_neighborhood(branch_on) - _excluded;
                bool found = false;
                for (auto w : candidates) {
                    auto saved_cover = _cover;
                    _cover.add(_g.closed_neighborhood(w));
                    _chosen.insert(w);
                    if (all_have_private(_g, _chosen, _cover) && search()) {
                        found = true;
                        break;
                    }
                    _chosen.erase(w);
                    _cover = std::move(saved_cover);
                    _excluded.insert(w);
                }
                if (! found)
                    _excluded = std::move(saved_excluded);
                return found;
            }

        public:
            BoundedSearch(const Graph & g, const VertexSet & initial, std::size_t budget) :
                _g(g),
                _budget(budget),
                _chosen(initial),
                _cover(g, initial),
                _excluded(g.order())
            {
            }

            auto run() -> std::optional<VertexSet>
            {
                if (! all_have_private(_g, _chosen, _cover))
                    return std::nullopt;
                if (search())
                    return _chosen;
                return std::nullopt;
            }
    };

    auto gamma_lower_bound(const Graph & g) -> std::size_t
    {
        auto n = g.order();
        return (n + max_degree(g)) / (1 + max_degree(g));
    }

    /**
     * Include / exclude recursion over vertices in id order that visits every
     * minimal dominating set. Partial sets stay irredundant; a branch dies once
     * some vertex can no longer be dominated. When bound is set, branches that
     * cannot beat its current value are cut.
     */
    class MinimalSetWalker
    {
        private:
            const Graph & _g;
            const std::function<void (const VertexSet &)> * _visit;
            std::size_t * _bound;
            VertexSet _chosen;
            VertexSet _undecided;

            auto walk(Vertex i, const Coverage & cover) -> void
            {
                if (cover.once.is_full()) {
                    // an irredundant dominating set admits no irredundant extension
                    if (_visit)
                        (*_visit)(_chosen);
                    if (_bound)
                        *_bound = std::max(*_bound, _chosen.count());
                    return;
                }
                if (i == _g.order())
                    return;
                if (_bound && _chosen.count() + (_g.order() - i) <= *_bound)
                    return;

                for (auto u : cover.once.complement())
                    if (! _g.closed_neighborhood(u).intersects(_undecided))
                        return;

                _undecided.erase(i);

                Coverage with = cover;
                with.add(_g.closed_neighborhood(i));
                _chosen.insert(i);
                if (all_have_private(_g, _chosen, with))
                    walk(i + 1, with);
                _chosen.erase(i);

                walk(i + 1, cover);

                _undecided.insert(i);
            }

        public:
            MinimalSetWalker(const Graph & g, const std::function<void (const VertexSet &)> * visit, std::size_t * bound) :
                _g(g),
                _visit(visit),
                _bound(bound),
                _chosen(g.order()),
                _undecided(VertexSet::full(g.order()))
            {
            }

            auto run() -> void
            {
                walk(0, Coverage(_g.order()));
            }
    };

    auto search_containing(const Graph & g, Vertex v, std::size_t from) -> DegreeResult
    {
        auto initial = g.make_set({ v });
        for (std::size_t k = std::max<std::size_t>(from, 1) ; k <= g.order() ; ++k)
            if (auto found = BoundedSearch(g, initial, k).run())
                return { found->count(), std::move(*found) };
        throw InternalInvariantViolation("no minimal dominating set contains vertex " + g.label(v));
    }
}

auto domidx::is_dominating(const Graph & g, const VertexSet & s) -> bool
{
    auto covered = g.empty_set();
    for (auto a : s)
        covered |= g.closed_neighborhood(a);
    return covered.is_full();
}

auto domidx::private_neighborhood(const Graph & g, Vertex a, const VertexSet & s) -> VertexSet
{
    if (! s.contains(a))
        throw VertexNotInSet("vertex " + std::to_string(a) + " is not a member of the set");
    auto result = g.closed_neighborhood(a);
    for (auto b : s)
        if (b != a)
            result -= g.closed_neighborhood(b);
    return result;
}

auto domidx::is_irredundant(const Graph & g, const VertexSet & s) -> bool
{
    return all_have_private(g, s, Coverage(g, s));
}

auto domidx::is_minimal_dominating(const Graph & g, const VertexSet & s) -> bool
{
    Coverage cover(g, s);
    return cover.once.is_full() && all_have_private(g, s, cover);
}

auto domidx::domination_number(const Graph & g, std::size_t max_exact) -> std::size_t
{
    check_cap(g, max_exact);
    if (g.order() == 0)
        return 0;
    for (auto k = std::max<std::size_t>(gamma_lower_bound(g), 1) ; k <= g.order() ; ++k)
        if (BoundedSearch(g, g.empty_set(), k).run())
            return k;
    throw InternalInvariantViolation("vertex set failed to dominate");
}

auto domidx::upper_domination_number(const Graph & g, std::size_t max_exact) -> std::size_t
{
    check_cap(g, max_exact);
    std::size_t best = 0;
    MinimalSetWalker(g, nullptr, &best).run();
    return best;
}

auto domidx::irredundance_numbers(const Graph & g, std::size_t max_exact) -> IrredundanceNumbers
{
    check_cap(g, std::min<std::size_t>(max_exact, 30));
    auto n = g.order();
    if (n == 0)
        return { 0, 0 };

    std::vector<std::uint64_t> closed(n);
    for (Vertex v = 0 ; v < n ; ++v)
        closed[v] = g.closed_neighborhood(v).words()[0];

    std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<bool> irredundant(subsets, false);
    for (std::uint64_t mask = 0 ; mask < subsets ; ++mask) {
        std::uint64_t once = 0, twice = 0;
        for (auto m = mask ; m ; m &= m - 1) {
            auto c = closed[std::countr_zero(m)];
            twice |= once & c;
            once |= c;
        }
        bool ok = true;
        for (auto m = mask ; m && ok ; m &= m - 1)
            ok = (closed[std::countr_zero(m)] & ~twice) != 0;
        irredundant[mask] = ok;
    }

    IrredundanceNumbers result { n, 0 };
    for (std::uint64_t mask = 0 ; mask < subsets ; ++mask) {
        if (! irredundant[mask])
            continue;
        std::size_t size = std::popcount(mask);
        result.upper = std::max(result.upper, size);
        bool maximal = true;
        for (Vertex x = 0 ; x < n && maximal ; ++x)
            if (! (mask >> x & 1) && irredundant[mask | std::uint64_t{1} << x])
                maximal = false;
        if (maximal)
            result.lower = std::min(result.lower, size);
    }
    return result;
}

auto domidx::domination_degree(const Graph & g, Vertex v, std::size_t max_exact, std::optional<std::size_t> gamma) -> DegreeResult
{
    check_vertex(g, v);
    check_cap(g, max_exact);
    auto from = gamma ? *gamma : domination_number(g, max_exact);
    return search_containing(g, v, from);
}

auto domidx::domination_profile(const Graph & g, const ProfileOptions & options) -> DominationProfile
{
    check_cap(g, options.max_exact);
    DominationProfile result;
    auto n = g.order();
    if (n == 0)
        return result;

    result.gamma = domination_number(g, options.max_exact);
    result.degrees.reserve(n);
    result.witnesses.reserve(n);
    for (Vertex v = 0 ; v < n ; ++v) {
        auto d = search_containing(g, v, result.gamma);
        result.degrees.push_back(d.degree);
        result.witnesses.push_back(std::move(d.witness));
    }

    result.min_dd = *std::min_element(result.degrees.begin(), result.degrees.end());
    result.max_dd = *std::max_element(result.degrees.begin(), result.degrees.end());
    for (auto d : result.degrees)
        result.index += d;
    result.is_drg = result.min_dd == result.max_dd;

    if (options.upper_bounds) {
        result.upper_gamma = upper_domination_number(g, options.max_exact);
        if (n <= options.irredundance_cap) {
            auto irr = irredundance_numbers(g, options.irredundance_cap);
            result.ir = irr.lower;
            result.upper_ir = irr.upper;
        }
    }
    return result;
}

auto domidx::for_each_minimal_dominating_set(const Graph & g, const std::function<void (const VertexSet &)> & visit,
        std::size_t max_exact) -> void
{
    check_cap(g, max_exact);
    MinimalSetWalker(g, &visit, nullptr).run();
}

auto domidx::enumerate_minimal_dominating_sets(const Graph & g, std::size_t max_exact) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    for_each_minimal_dominating_set(g, [&] (const VertexSet & s) { result.push_back(s); }, max_exact);
    std::sort(result.begin(), result.end(), [] (const VertexSet & a, const VertexSet & b) { return a.canonical_less(b); });
    return result;
}

auto domidx::minimalize_containing(const Graph & g, const VertexSet & d, Vertex v, std::size_t max_exact) -> VertexSet
{
    check_vertex(g, v);
    if (! d.contains(v))
        throw VertexNotInSet("vertex " + g.label(v) + " is not in the starting set");
    if (! is_dominating(g, d))
        throw NotDominating("starting set is not dominating");

    auto s = d;
    std::set<VertexSet> swapped_from;
    while (true) {
        Coverage cover(g, s);
        auto redundant = g.empty_set();
        for (auto a : s)
            if (! cover.has_private(g.closed_neighborhood(a)))
                redundant.insert(a);

        if (redundant.empty())
            return s;

        redundant.erase(v);
        if (! redundant.empty()) {
            auto members = redundant.to_vector();
            s.erase(members.back());
            continue;
        }

        // only v is redundant: every vertex of N[v] is dominated by someone else
        if (! swapped_from.insert(s).second)
            break;

        auto dominators = s & g.open_neighborhood(v);
        auto b = dominators.first();
        s.erase(b);
        Coverage after(g, s);
        for (auto u : g.closed_neighborhood(b))
            if (! after.once.contains(u)) {
                s.insert(u);
                after.add(g.closed_neighborhood(u));
            }
    }

    return domination_degree(g, v, max_exact).witness;
}

auto domidx::mds_containing_greedy(const Graph & g, Vertex v) -> VertexSet
{
    check_vertex(g, v);
    auto n = g.order();
    auto chosen = g.make_set({ v });

    std::function<bool (Vertex, const Coverage &)> extend = [&] (Vertex from, const Coverage & cover) -> bool {
        if (cover.once.is_full())
            return true;

        auto later = g.empty_set();
        for (Vertex x = from ; x < n ; ++x)
            if (! chosen.contains(x))
                later.insert(x);
        for (auto u : cover.once.complement())
            if (! g.closed_neighborhood(u).intersects(later))
                return false;

        for (auto x : later) {
            Coverage with = cover;
            with.add(g.closed_neighborhood(x));
            chosen.insert(x);
            if (all_have_private(g, chosen, with) && extend(x + 1, with))
                return true;
            chosen.erase(x);
        }
        return false;
    };

    if (! extend(0, Coverage(g, chosen)))
        throw InternalInvariantViolation("no minimal dominating set contains vertex " + g.label(v));
    return chosen;
}
