/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/operations.hh>
#include <domidx/errors.hh>

#include <array>
#include <map>

using namespace domidx;

namespace
{
    auto prefixed(std::size_t part, const std::string & label) -> std::string
    {
        return std::to_string(part) + ":" + label;
    }

    auto pair_label(const std::string & a, const std::string & b) -> std::string
    {
        return "(" + a + "," + b + ")";
    }

    auto need_factors(std::span<const FactorSummary> factors, std::size_t count, std::string_view op) -> void
    {
        if (factors.size() != count)
            throw UnsupportedOperation(std::string(op) + " takes " + std::to_string(count) + " factors");
    }
}

auto domidx::disjoint_union(std::span<const Graph> parts) -> DisjointUnion
{
    DisjointUnion result;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    Vertex base = 0;
    for (std::size_t p = 0 ; p < parts.size() ; ++p) {
        result.offset.push_back(base);
        for (auto [u, v] : parts[p].edges())
            edges.emplace_back(base + u, base + v);
        for (Vertex v = 0 ; v < parts[p].order() ; ++v) {
            labels.push_back(prefixed(p, parts[p].label(v)));
            result.component.push_back(p);
        }
        base += parts[p].order();
    }
    result.graph = Graph(base, edges, std::move(labels));
    return result;
}

auto domidx::join(const Graph & g, const Graph & h) -> Graph
{
    std::array<Graph, 2> parts { g, h };
    auto joined = disjoint_union(parts);
    auto edges = joined.graph.edges();
    for (Vertex a = 0 ; a < g.order() ; ++a)
        for (Vertex b = 0 ; b < h.order() ; ++b)
            edges.emplace_back(a, g.order() + b);
    return Graph(joined.graph.order(), edges, joined.graph.labels());
}

auto domidx::product(const Graph & g, const Graph & h, ProductKind kind) -> Graph
{
    auto ng = g.order(), nh = h.order();
    auto id = [nh] (Vertex a, Vertex b) { return a * nh + b; };

    std::vector<std::string> labels;
    labels.reserve(ng * nh);
    for (Vertex a = 0 ; a < ng ; ++a)
        for (Vertex b = 0 ; b < nh ; ++b)
            labels.push_back(pair_label(g.label(a), h.label(b)));

    std::vector<Edge> edges;
    for (Vertex a1 = 0 ; a1 < ng ; ++a1)
        for (Vertex b1 = 0 ; b1 < nh ; ++b1)
            for (Vertex a2 = 0 ; a2 < ng ; ++a2)
                for (Vertex b2 = 0 ; b2 < nh ; ++b2) {
                    if (id(a2, b2) <= id(a1, b1))
                        continue;
                    bool ga = g.adjacent(a1, a2), hb = h.adjacent(b1, b2);
                    bool cartesian = (a1 == a2 && hb) || (ga && b1 == b2);
                    bool direct = ga && hb;
                    bool edge = false;
                    switch (kind) {
                        case ProductKind::Cartesian:   edge = cartesian; break;
                        case ProductKind::Direct:      edge = direct; break;
                        case ProductKind::Strong:      edge = cartesian || direct; break;
                        case ProductKind::Composition: edge = ga || (a1 == a2 && hb); break;
                    }
                    if (edge)
                        edges.emplace_back(id(a1, b1), id(a2, b2));
                }

    return Graph(ng * nh, edges, std::move(labels));
}

auto domidx::corona(const Graph & g, const Graph & h) -> Graph
{
    auto ng = g.order(), nh = h.order();
    auto copy = [&] (Vertex i, Vertex j) { return ng + i * nh + j; };

    std::vector<std::string> labels = g.labels();
    auto edges = g.edges();
    auto h_edges = h.edges();
    for (Vertex i = 0 ; i < ng ; ++i) {
        for (Vertex j = 0 ; j < nh ; ++j) {
            labels.push_back(pair_label(g.label(i), h.label(j)));
            edges.emplace_back(i, copy(i, j));
        }
        for (auto [u, v] : h_edges)
            edges.emplace_back(copy(i, u), copy(i, v));
    }
    return Graph(ng * (1 + nh), edges, std::move(labels));
}

auto domidx::parse_operation(std::string_view name) -> OperationTag
{
    static const std::map<std::string_view, OperationTag> names {
        { "union", OperationTag::Union },
        { "join", OperationTag::Join },
        { "cartesian", OperationTag::Cartesian },
        { "direct", OperationTag::Direct },
        { "strong", OperationTag::Strong },
        { "composition", OperationTag::Composition },
        { "corona", OperationTag::Corona }
    };
    if (auto it = names.find(name) ; it != names.end())
        return it->second;
    throw UnsupportedOperation("unknown operation '" + std::string(name) + "'");
}

auto domidx::operation_name(OperationTag tag) -> std::string_view
{
    switch (tag) {
        case OperationTag::Union:       return "union";
        case OperationTag::Join:        return "join";
        case OperationTag::Cartesian:   return "cartesian";
        case OperationTag::Direct:      return "direct";
        case OperationTag::Strong:      return "strong";
        case OperationTag::Composition: return "composition";
        case OperationTag::Corona:      return "corona";
    }
    return "?";
}

auto FactorSummary::of(const Graph & g, std::size_t max_exact) -> FactorSummary
{
    ProfileOptions options;
    options.max_exact = max_exact;
    options.upper_bounds = false;
    auto profile = domination_profile(g, options);
    return { g.order(), profile.gamma, std::move(profile.degrees), is_complete(g) };
}

auto domidx::predicted_op_degree(OperationTag tag, std::span<const FactorSummary> factors, Vertex v) -> std::size_t
{
    switch (tag) {
        case OperationTag::Union:
            {
                std::size_t base = 0;
                for (std::size_t i = 0 ; i < factors.size() ; ++i) {
                    if (v < base + factors[i].order) {
                        auto result = factors[i].degrees.at(v - base);
                        for (std::size_t j = 0 ; j < factors.size() ; ++j)
                            if (j != i)
                                result += factors[j].gamma;
                        return result;
                    }
                    base += factors[i].order;
                }
                throw VertexOutOfRange("vertex " + std::to_string(v) + " beyond the union");
            }

        case OperationTag::Join:
            {
                need_factors(factors, 2, "join");
                auto own = v < factors[0].order ? factors[0].degrees.at(v) : factors[1].degrees.at(v - factors[0].order);
                return own == 1 ? 1 : 2;
            }

        case OperationTag::Composition:
            {
                need_factors(factors, 2, "composition");
                if (! factors[1].complete)
                    throw UnsupportedOperation("composition is only predicted when the second factor is complete");
                if (v >= factors[0].order * factors[1].order)
                    throw VertexOutOfRange("vertex " + std::to_string(v) + " beyond the composition");
                return factors[0].degrees.at(v / factors[1].order);
            }

        case OperationTag::Corona:
            {
                need_factors(factors, 2, "corona");
                auto n = factors[0].order, m = factors[1].order;
                if (v < n)
                    return n;
                if (v >= n * (1 + m))
                    throw VertexOutOfRange("vertex " + std::to_string(v) + " beyond the corona");
                return factors[1].degrees.at((v - n) % m) + (n - 1);
            }

        case OperationTag::Cartesian:
        case OperationTag::Direct:
        case OperationTag::Strong:
            break;
    }
    throw UnsupportedOperation("no domination degree formula for the " + std::string(operation_name(tag)) + " product");
}
