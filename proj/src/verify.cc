/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/verify.hh>
#include <domidx/domination.hh>
#include <domidx/errors.hh>
#include <domidx/families.hh>
#include <domidx/io.hh>
#include <domidx/operations.hh>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

using namespace domidx;

namespace
{
    auto pair_count(std::size_t n) -> std::size_t
    {
        return n * (n - (n ? 1 : 0)) / 2;
    }

    auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph
    {
        std::vector<Edge> edges;
        std::size_t bit = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
                if (mask >> bit & 1)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto show(const std::vector<std::size_t> & values) -> std::string
    {
        std::string result = "[";
        for (std::size_t i = 0 ; i < values.size() ; ++i)
            result += (i ? "," : "") + std::to_string(values[i]);
        return result + "]";
    }

    auto show(std::size_t value) -> std::string
    {
        return std::to_string(value);
    }

    struct Degrees
    {
        std::size_t gamma;
        std::vector<std::size_t> degrees;
        std::vector<VertexSet> witnesses;

        auto index() const -> std::size_t
        {
            std::size_t total = 0;
            for (auto d : degrees)
                total += d;
            return total;
        }
    };

    auto degrees_of(const Graph & g, std::size_t max_exact) -> Degrees
    {
        Degrees result { domination_number(g, max_exact), { }, { } };
        for (Vertex v = 0 ; v < g.order() ; ++v) {
            auto d = domination_degree(g, v, max_exact, result.gamma);
            result.degrees.push_back(d.degree);
            result.witnesses.push_back(std::move(d.witness));
        }
        return result;
    }

    class Recorder
    {
        private:
            CheckReport & _report;

        public:
            explicit Recorder(CheckReport & report) : _report(report) { }

            auto check(bool ok, std::string_view claim, std::string_view name, const Graph & g,
                    std::vector<std::string> expected, std::string computed, bool proved,
                    std::vector<VertexSet> witnesses = { }) -> bool
            {
                ++_report.instances;
                if (ok) {
                    ++_report.passes;
                    return true;
                }

                Discrepancy d;
                d.claim = claim;
                d.name = name;
                d.instance = emit_edgelist(g);
                d.expected = std::move(expected);
                d.computed = std::move(computed);
                for (auto & w : witnesses)
                    d.witnesses.push_back(sorted_labels(g, w));
                d.proved = proved;
                _report.discrepancies.push_back(std::move(d));
                return false;
            }
    };

    auto mask_name(std::size_t n, std::uint64_t mask) -> std::string
    {
        return "labeled n=" + std::to_string(n) + " mask=" + std::to_string(mask);
    }

    /// Profiles of every labeled graph on n vertices, indexed by edge mask.
    auto all_profiles(std::size_t n, std::size_t max_exact) -> std::vector<DominationProfile>
    {
        std::vector<DominationProfile> result;
        std::uint64_t masks = std::uint64_t{1} << pair_count(n);
        result.reserve(masks);
        ProfileOptions options;
        options.max_exact = max_exact;
        options.irredundance_cap = std::max(max_exact, default_irredundance_cap);
        for (std::uint64_t mask = 0 ; mask < masks ; ++mask)
            result.push_back(domination_profile(graph_from_mask(n, mask), options));
        return result;
    }

    auto run_definitional(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        for (std::size_t n = 1 ; n <= limits.exhaustive_n ; ++n) {
            std::uint64_t masks = std::uint64_t{1} << pair_count(n);
            for (std::uint64_t mask = 0 ; mask < masks ; ++mask) {
                auto g = graph_from_mask(n, mask);
                auto name = mask_name(n, mask);
                ProfileOptions options;
                options.max_exact = limits.max_exact;
                options.irredundance_cap = 0;
                auto p = domination_profile(g, options);

                bool between = true, witnesses_ok = true;
                std::vector<VertexSet> bad;
                for (Vertex v = 0 ; v < n ; ++v) {
                    if (p.degrees[v] < p.gamma || p.degrees[v] > p.upper_gamma) {
                        between = false;
                        bad.push_back(p.witnesses[v]);
                    }
                    if (! p.witnesses[v].contains(v) || p.witnesses[v].count() != p.degrees[v]
                            || ! is_minimal_dominating(g, p.witnesses[v]))
                        witnesses_ok = false;
                }
                rec.check(between, "dd-between-gamma-and-upper-gamma", name, g,
                        { "gamma=" + show(p.gamma) + " upper_gamma=" + show(p.upper_gamma) }, show(p.degrees), true, bad);
                rec.check(witnesses_ok, "witness-is-minimal-dominating-and-contains-vertex", name, g,
                        { "all witnesses valid" }, show(p.degrees), true, p.witnesses);

                bool isolated = false;
                for (Vertex v = 0 ; v < n ; ++v)
                    isolated = isolated || g.degree(v) == 0;
                if (! isolated) {
                    std::vector<VertexSet> failing;
                    for_each_minimal_dominating_set(g, [&] (const VertexSet & d) {
                            if (! is_dominating(g, d.complement()))
                                failing.push_back(d);
                            }, limits.max_exact);
                    rec.check(failing.empty(), "complement-of-minimal-ds-dominates", name, g,
                            { "every complement dominating" }, show(failing.size()) + " failing sets", true, failing);
                }

                auto lower = (n + max_degree(g)) / (1 + max_degree(g));
                rec.check(lower <= p.gamma, "gamma-at-least-n-over-one-plus-delta", name, g,
                        { ">= " + show(lower) }, show(p.gamma), true);
            }
        }
    }

    auto run_inequalities(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        for (std::size_t n = 1 ; n <= limits.exhaustive_n ; ++n) {
            auto profiles = all_profiles(n, limits.max_exact);
            for (std::uint64_t mask = 0 ; mask < profiles.size() ; ++mask) {
                auto & p = profiles[mask];
                auto g = graph_from_mask(n, mask);
                auto name = mask_name(n, mask);
                auto delta = max_degree(g);

                std::vector<VertexSet> bad;
                for (Vertex v = 0 ; v < n ; ++v)
                    if (p.degrees[v] < p.gamma || p.degrees[v] > p.upper_gamma)
                        bad.push_back(p.witnesses[v]);
                rec.check(bad.empty(), "dd-between-gamma-and-upper-gamma", name, g,
                        { "gamma=" + show(p.gamma) + " upper_gamma=" + show(p.upper_gamma) }, show(p.degrees), true, bad);

                rec.check(*p.ir <= p.gamma, "ir-at-most-gamma", name, g, { "<= " + show(p.gamma) }, show(*p.ir), true);
                rec.check(p.gamma * n <= p.index, "gamma-at-most-index-over-n", name, g,
                        { ">= " + show(p.gamma * n) }, show(p.index), true);
                rec.check(p.index <= p.upper_gamma * n, "index-over-n-at-most-upper-gamma", name, g,
                        { "<= " + show(p.upper_gamma * n) }, show(p.index), true);
                rec.check(p.upper_gamma <= *p.upper_ir, "upper-gamma-at-most-upper-ir", name, g,
                        { "<= " + show(*p.upper_ir) }, show(p.upper_gamma), true);

                auto lower = (n + delta) / (1 + delta);
                rec.check(lower <= p.gamma && p.gamma <= n - delta, "gamma-between-degree-bounds", name, g,
                        { show(lower) + ".." + show(n - delta) }, show(p.gamma), true);

                if (n > 1 && is_connected(g)) {
                    auto wi = wiener_index(g);
                    rec.check(p.max_dd <= wi, "dd-at-most-wiener-index", name, g,
                            { "<= " + show(wi) }, show(p.max_dd), true);
                    rec.check(p.index <= n * wi, "index-at-most-n-times-wiener-index", name, g,
                            { "<= " + show(n * wi) }, show(p.index), true);
                    rec.check(p.max_dd <= g.size(), "dd-at-most-size", name, g,
                            { "<= " + show(g.size()) }, show(p.max_dd), false);
                }
            }
        }
    }

    auto family_specs(const SuiteLimits & limits) -> std::vector<FamilySpec>
    {
        using namespace family;
        std::vector<FamilySpec> specs;
        for (std::size_t n = 1 ; n <= 8 ; ++n)
            specs.push_back(Complete{ n });
        for (auto parts : std::vector<std::vector<std::size_t>>{ { 2, 2 }, { 2, 3 }, { 3, 3, 3 } })
            specs.push_back(CompleteMultipartite{ parts });
        for (std::size_t n = 2 ; n <= 8 ; ++n)
            specs.push_back(Star{ n });
        for (std::size_t n = limits.path_from ; n <= limits.path_to ; ++n)
            if (n % 3 != 2)
                specs.push_back(Path{ n });
        for (std::size_t n = 3 ; n <= 12 ; ++n)
            specs.push_back(Cycle{ n });
        for (std::size_t n = 3 ; n <= 10 ; ++n)
            specs.push_back(Wheel{ n });
        for (std::size_t n = 2 ; n <= 5 ; ++n)
            specs.push_back(Book{ n });
        for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{ { 2, 2 }, { 3, 2 }, { 3, 3 }, { 4, 2 } })
            specs.push_back(Windmill{ r, s });
        for (auto branches : std::vector<std::vector<std::size_t>>{ { 1, 1 }, { 2, 2 }, { 2, 3 }, { 1, 2, 3 } })
            specs.push_back(Kragujevac{ branches });
        return specs;
    }

    auto run_families(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        for (auto & spec : family_specs(limits)) {
            auto generated = generate(spec);
            auto & g = generated.graph;
            auto name = describe(spec);
            auto computed = degrees_of(g, limits.max_exact);

            std::vector<std::size_t> predicted;
            std::vector<VertexSet> bad;
            bool ok = true;
            for (Vertex v = 0 ; v < g.order() ; ++v) {
                auto p = predicted_degree(spec, generated.roles[v]);
                predicted.push_back(p.value_or(0));
                if (p && *p != computed.degrees[v]) {
                    ok = false;
                    bad.push_back(computed.witnesses[v]);
                }
            }
            rec.check(ok, "family-degree", name, g, { show(predicted) }, show(computed.degrees), true, bad);

            if (auto di = predicted_index(spec))
                rec.check(*di == computed.index(), "family-index", name, g, { show(*di) }, show(computed.index()), true);

            if (auto w = std::get_if<family::Windmill>(&spec)) {
                auto published = windmill_published_index(w->r, w->s);
                rec.check(published == computed.index(), "windmill-published-index", name, g,
                        { show(published) }, show(computed.index()), false);
            }
            if (auto w = std::get_if<family::Wheel>(&spec)) {
                bool ok = true;
                for (Vertex v = 1 ; v < g.order() ; ++v)
                    ok = ok && computed.degrees[v] == w->n;
                rec.check(ok, "wheel-rim-degree-equals-n", name, g, { show(w->n) }, show(computed.degrees), false);
            }
        }
    }

    auto run_paths(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        std::vector<PathResolution> rows;
        for (std::size_t n = limits.path_from ; n <= limits.path_to ; ++n) {
            auto row = resolve_path(n, limits.max_exact);
            auto g = generate(family::Path{ n }).graph;
            auto name = "path:" + std::to_string(n);
            std::vector<std::size_t> statement, proof;
            for (std::size_t i = 1 ; i <= n ; ++i) {
                if (row.contested()) {
                    auto v = path_degree_variants(n, i);
                    statement.push_back(v.statement);
                    proof.push_back(v.proof);
                }
                else
                    statement.push_back(*predicted_degree(family::Path{ n }, Role{ RoleKind::Spine, i }));
            }

            if (row.contested()) {
                auto di = path_index_variants(n);
                rec.check(row.vertex_statement, "path-degree-statement-reading", name, g, { show(statement) }, show(row.degrees), false);
                rec.check(row.vertex_proof, "path-degree-proof-reading", name, g, { show(proof) }, show(row.degrees), false);
                rec.check(row.index_statement, "path-index-statement-reading", name, g, { show(di.statement) }, show(row.index), false);
                rec.check(row.index_proof, "path-index-proof-reading", name, g, { show(di.proof) }, show(row.index), false);
            }
            else {
                rec.check(row.uncontested_vertex, "path-degree", name, g, { show(statement) }, show(row.degrees), true);
                rec.check(row.uncontested_index, "path-index", name, g,
                        { show(*predicted_index(family::Path{ n })) }, show(row.index), true);
            }
            rows.push_back(std::move(row));
        }
        auto table = path_variant_table(rows);
        report.table.insert(report.table.end(), table.begin(), table.end());
    }

    auto factor_pool() -> std::vector<std::pair<std::string, Graph>>
    {
        std::vector<std::pair<std::string, Graph>> pool;
        for (auto text : { "complete:1", "complete:2", "complete:3", "path:3", "path:4", "cycle:4", "cycle:5", "star:3" })
            pool.emplace_back(text, generate(parse_family(text)).graph);
        return pool;
    }

    auto run_operations(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        auto pool = factor_pool();
        std::vector<FactorSummary> summaries;
        for (auto & [_, g] : pool)
            summaries.push_back(FactorSummary::of(g, limits.max_exact));

        auto compare = [&] (OperationTag tag, const Graph & composite, std::string name,
                const std::array<FactorSummary, 2> & factors, bool proved) {
            auto computed = degrees_of(composite, limits.max_exact);
            std::vector<std::size_t> predicted;
            std::vector<VertexSet> bad;
            for (Vertex v = 0 ; v < composite.order() ; ++v) {
                predicted.push_back(predicted_op_degree(tag, factors, v));
                if (predicted.back() != computed.degrees[v])
                    bad.push_back(computed.witnesses[v]);
            }
            rec.check(bad.empty(), std::string(operation_name(tag)) + "-degree", name, composite,
                    { show(predicted) }, show(computed.degrees), proved, bad);
        };

        for (std::size_t i = 0 ; i < pool.size() ; ++i)
            for (std::size_t j = 0 ; j < pool.size() ; ++j) {
                auto & [gname, g] = pool[i];
                auto & [hname, h] = pool[j];
                std::array<FactorSummary, 2> factors { summaries[i], summaries[j] };
                auto pair_name = "(" + gname + "," + hname + ")";

                if (g.order() + h.order() <= limits.composite_order) {
                    std::array<Graph, 2> parts { g, h };
                    compare(OperationTag::Union, disjoint_union(parts).graph, "union" + pair_name, factors, true);
                    compare(OperationTag::Join, join(g, h), "join" + pair_name, factors, false);
                }
                if (summaries[j].complete && h.order() >= 2 && g.order() * h.order() <= limits.composite_order)
                    compare(OperationTag::Composition, product(g, h, ProductKind::Composition),
                            "composition" + pair_name, factors, true);
                if (g.order() * (1 + h.order()) <= limits.composite_order)
                    compare(OperationTag::Corona, corona(g, h), "corona" + pair_name, factors, true);
            }
    }

    auto run_monotonicity(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        std::size_t holds = 0, fails = 0;
        for (std::size_t n = 2 ; n <= limits.exhaustive_n ; ++n) {
            auto profiles = all_profiles(n, limits.max_exact);
            std::vector<bool> connected(profiles.size());
            for (std::uint64_t mask = 0 ; mask < profiles.size() ; ++mask)
                connected[mask] = is_connected(graph_from_mask(n, mask));

            for (std::uint64_t mask = 0 ; mask < profiles.size() ; ++mask) {
                if (! connected[mask])
                    continue;
                for (std::size_t bit = 0 ; bit < pair_count(n) ; ++bit) {
                    if (! (mask >> bit & 1) || ! connected[mask & ~(std::uint64_t{1} << bit)])
                        continue;
                    auto sub = mask & ~(std::uint64_t{1} << bit);
                    auto & pg = profiles[mask];
                    auto & ph = profiles[sub];

                    bool per_vertex = true;
                    std::vector<VertexSet> witnesses;
                    for (Vertex v = 0 ; v < n ; ++v)
                        if (pg.degrees[v] > ph.degrees[v]) {
                            per_vertex = false;
                            witnesses.push_back(pg.witnesses[v]);
                            witnesses.push_back(ph.witnesses[v]);
                        }

                    auto g = graph_from_mask(n, mask);
                    auto name = mask_name(n, mask) + " minus edge bit " + std::to_string(bit);
                    if (rec.check(per_vertex, "spanning-subgraph-degree-monotone", name, g,
                                { "each at most " + show(ph.degrees) }, show(pg.degrees), false, witnesses))
                        ++holds;
                    else
                        ++fails;
                    rec.check(pg.index <= ph.index, "spanning-subgraph-index-monotone", name, g,
                            { "at most " + show(ph.index) }, show(pg.index), false);
                }
            }
        }
        report.table.push_back("spanning-subgraph-degree-monotone: held " + std::to_string(holds)
                + ", failed " + std::to_string(fails));
    }

    auto run_products(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        auto pool = factor_pool();
        for (auto & [gname, g] : pool)
            for (auto & [hname, h] : pool) {
                if (g.order() * h.order() > limits.product_order)
                    continue;
                auto di = [&] (ProductKind kind) {
                    return degrees_of(product(g, h, kind), limits.max_exact).index();
                };
                auto composition = di(ProductKind::Composition), strong = di(ProductKind::Strong);
                auto cartesian = di(ProductKind::Cartesian), direct = di(ProductKind::Direct);
                auto computed = "composition=" + show(composition) + " strong=" + show(strong)
                    + " cartesian=" + show(cartesian) + " direct=" + show(direct);
                rec.check(composition <= strong && strong <= std::min(cartesian, direct), "product-index-ordering",
                        "(" + gname + "," + hname + ")", product(g, h, ProductKind::Strong),
                        { "composition <= strong <= min(cartesian, direct)" }, computed, false);
            }
    }

    auto run_named(CheckReport & report, const SuiteLimits & limits) -> void
    {
        Recorder rec(report);
        // Herschel and Grotzsch values are checked informationally
        for (auto [text, proved] : std::initializer_list<std::pair<const char *, bool>>{
                { "petersen", true }, { "herschel", false }, { "grotzsch", false } }) {
            auto spec = parse_family(text);
            auto g = generate(spec).graph;
            auto computed = degrees_of(g, limits.max_exact);
            std::vector<std::size_t> threes(g.order(), 3);
            rec.check(computed.degrees == threes, "named-graph-degree", text, g, { show(threes) }, show(computed.degrees), proved);
            rec.check(computed.index() == *predicted_index(spec), "named-graph-index", text, g,
                    { show(*predicted_index(spec)) }, show(computed.index()), proved);
        }
    }

    using SuiteFn = void (*)(CheckReport &, const SuiteLimits &);

    auto suites() -> const std::vector<std::pair<std::string, SuiteFn>> &
    {
        static const std::vector<std::pair<std::string, SuiteFn>> result {
            { "definitional", run_definitional },
            { "inequalities", run_inequalities },
            { "families", run_families },
            { "paths-resolution", run_paths },
            { "operations", run_operations },
            { "monotonicity", run_monotonicity },
            { "products-ordering", run_products },
            { "named-graphs", run_named }
        };
        return result;
    }
}

auto domidx::random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw InvalidFamilyParams("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto domidx::for_each_labeled_graph(std::size_t n, bool connected_only, const std::function<void (const Graph &)> & fn) -> void
{
    if (n > labeled_enumeration_cap)
        throw EnumerationCapExceeded("labeled enumeration is limited to n <= " + std::to_string(labeled_enumeration_cap));
    std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0 ; mask < masks ; ++mask) {
        auto g = graph_from_mask(n, mask);
        if (! connected_only || n == 0 || is_connected(g))
            fn(g);
    }
}

auto domidx::enumerate_labeled_graphs(std::size_t n, bool connected_only) -> std::vector<Graph>
{
    std::vector<Graph> result;
    for_each_labeled_graph(n, connected_only, [&] (const Graph & g) { result.push_back(g); });
    return result;
}

auto CheckReport::proved_failures() const -> std::size_t
{
    return std::count_if(discrepancies.begin(), discrepancies.end(), [] (auto & d) { return d.proved; });
}

auto domidx::suite_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> result;
        for (auto & [name, _] : suites())
            result.push_back(name);
        return result;
    }();
    return names;
}

auto domidx::run_suite(std::string_view suite, const SuiteLimits & limits) -> CheckReport
{
    CheckReport report;
    report.suite = suite;
    auto start = std::chrono::steady_clock::now();

    bool found = false;
    for (auto & [name, fn] : suites())
        if (suite == "all" || suite == name) {
            fn(report, limits);
            found = true;
        }
    if (! found)
        throw UnknownSuite("unknown suite '" + std::string(suite) + "'");

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto domidx::write_ledger(const CheckReport & report, std::ostream & out) -> void
{
    for (auto & d : report.discrepancies) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["claim"] = d.claim;
        j["status"] = d.proved ? "proved" : "informational";
        j["name"] = d.name;
        j["instance"] = d.instance;
        j["expected"] = d.expected;
        j["computed"] = d.computed;
        j["witnesses"] = d.witnesses;
        out << j.dump() << "\n";
    }
}

auto domidx::summarize(const CheckReport & report) -> std::string
{
    std::ostringstream out;
    out << "suite " << report.suite << ": " << report.instances << " instances, " << report.passes << " passed, "
        << report.discrepancies.size() << " discrepancies (" << report.proved_failures() << " on proved claims)\n";
    std::map<std::string, std::size_t> by_claim;
    for (auto & d : report.discrepancies)
        ++by_claim[d.claim + (d.proved ? " [proved]" : " [informational]")];
    for (auto & [claim, count] : by_claim)
        out << "  " << claim << ": " << count << "\n";
    for (auto & line : report.table)
        out << "  " << line << "\n";
    return out.str();
}

auto domidx::resolve_path(std::size_t n, std::size_t max_exact) -> PathResolution
{
    family::Path spec{ n };
    auto g = generate(spec).graph;
    auto computed = degrees_of(g, max_exact);

    PathResolution row;
    row.n = n;
    row.degrees = computed.degrees;
    row.index = computed.index();

    if (row.contested()) {
        row.vertex_statement = row.vertex_proof = true;
        for (std::size_t i = 1 ; i <= n ; ++i) {
            auto v = path_degree_variants(n, i);
            row.vertex_statement = row.vertex_statement && v.statement == row.degrees[i - 1];
            row.vertex_proof = row.vertex_proof && v.proof == row.degrees[i - 1];
        }
        auto di = path_index_variants(n);
        row.index_statement = di.statement == row.index;
        row.index_proof = di.proof == row.index;
    }
    else {
        row.uncontested_vertex = true;
        for (std::size_t i = 1 ; i <= n ; ++i)
            row.uncontested_vertex = row.uncontested_vertex
                && predicted_degree(spec, Role{ RoleKind::Spine, i }) == row.degrees[i - 1];
        row.uncontested_index = predicted_index(spec) == row.index;
    }
    return row;
}

auto domidx::path_variant_table(const std::vector<PathResolution> & rows) -> std::vector<std::string>
{
    auto verdict = [] (bool statement, bool proof) -> std::string {
        if (statement && proof)
            return "both";
        if (statement)
            return "statement";
        if (proof)
            return "proof";
        return "neither";
    };

    std::vector<std::string> lines;
    for (auto & row : rows) {
        std::string line = "path n=" + std::to_string(row.n) + " residue=" + std::to_string(row.n % 3)
            + " dd=" + show(row.degrees) + " di=" + std::to_string(row.index);
        if (row.contested())
            line += " degree-reading=" + verdict(row.vertex_statement, row.vertex_proof)
                + " index-reading=" + verdict(row.index_statement, row.index_proof);
        else
            line += std::string(" degree-reading=") + (row.uncontested_vertex ? "formula" : "neither")
                + " index-reading=" + (row.uncontested_index ? "formula" : "neither");
        lines.push_back(std::move(line));
    }
    return lines;
}
