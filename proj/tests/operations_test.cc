/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/errors.hh>
#include <domidx/families.hh>
#include <domidx/operations.hh>

#include "oracle.hh"

#include <doctest.h>

#include <array>

using namespace domidx;

namespace
{
    auto make(const char * spec) -> Graph
    {
        return generate(parse_family(spec)).graph;
    }

    auto is_k4(const Graph & g) -> bool
    {
        return g.order() == 4 && is_complete(g);
    }
}

TEST_CASE("disjoint union")
{
    std::array<Graph, 2> k1s { make("complete:1"), make("complete:1") };
    auto two = disjoint_union(k1s);
    CHECK(two.graph.order() == 2);
    CHECK(two.graph.size() == 0);
    CHECK(two.graph.label(1) == "1:0");

    std::array<Graph, 2> parts { make("complete:3"), make("cycle:4") };
    auto u = disjoint_union(parts);
    CHECK(u.graph.order() == 7);
    CHECK(u.graph.size() == 7);
    CHECK(! is_connected(u.graph));
    CHECK(u.offset == std::vector<Vertex>{ 0, 3 });
    CHECK(u.component[4] == 1);
}

TEST_CASE("join")
{
    auto wheel = join(make("complete:1"), make("cycle:5")).with_default_labels();
    CHECK(wheel.same_structure(generate(family::Wheel{ 5 }).graph));
    CHECK(is_k4(join(make("complete:2"), make("complete:2"))));
}

TEST_CASE("products")
{
    auto book = product(make("star:3"), make("path:2"), ProductKind::Cartesian).with_default_labels();
    CHECK(book.same_structure(generate(family::Book{ 3 }).graph));

    auto k2 = make("complete:2");
    auto direct = product(k2, k2, ProductKind::Direct);
    CHECK(direct.order() == 4);
    CHECK(direct.size() == 2);
    for (Vertex v = 0 ; v < 4 ; ++v)
        CHECK(direct.degree(v) == 1);

    for (auto [a, b] : std::vector<std::pair<const char *, const char *>>{ { "cycle:4", "path:3" }, { "complete:3", "star:2" } }) {
        auto g = make(a), h = make(b);
        auto cart = product(g, h, ProductKind::Cartesian), dir = product(g, h, ProductKind::Direct);
        auto strong = product(g, h, ProductKind::Strong), comp = product(g, h, ProductKind::Composition);
        CHECK(strong.size() == cart.size() + dir.size());
        CHECK(is_spanning_subgraph(strong, comp));
        CHECK(comp.size() == g.size() * h.order() * h.order() + g.order() * h.size());
    }
    CHECK(product(make("path:2"), make("path:3"), ProductKind::Cartesian).label(4) == "(1,1)");
}

TEST_CASE("corona")
{
    auto k2 = corona(make("complete:1"), make("complete:1"));
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    auto c3 = corona(make("complete:3"), make("complete:1"));
    CHECK(c3.order() == 6);
    CHECK(c3.size() == 6);
    for (Vertex v = 0 ; v < 3 ; ++v)
        CHECK(c3.degree(v) == 3);
    for (Vertex v = 3 ; v < 6 ; ++v)
        CHECK(c3.degree(v) == 1);
}

TEST_CASE("operation formulas")
{
    auto c6 = make("cycle:6"), k2 = make("complete:2");
    std::array<FactorSummary, 2> union_factors { FactorSummary::of(c6), FactorSummary::of(k2) };
    CHECK(predicted_op_degree(OperationTag::Union, union_factors, 0) == 3);
    CHECK(predicted_op_degree(OperationTag::Union, union_factors, 6) == 3);

    auto p3 = make("path:3");
    std::array<FactorSummary, 2> comp { FactorSummary::of(p3), FactorSummary::of(k2) };
    CHECK(predicted_op_degree(OperationTag::Composition, comp, 1 * 2 + 0) == 1);
    CHECK(predicted_op_degree(OperationTag::Composition, comp, 0) == 2);

    auto c4 = make("cycle:4");
    std::array<FactorSummary, 2> cor { FactorSummary::of(c4), FactorSummary::of(k2) };
    CHECK(predicted_op_degree(OperationTag::Corona, cor, 5) == 4);
    CHECK(predicted_op_degree(OperationTag::Corona, cor, 0) == 4);

    std::array<FactorSummary, 2> not_complete { FactorSummary::of(p3), FactorSummary::of(p3) };
    CHECK_THROWS_AS(predicted_op_degree(OperationTag::Composition, not_complete, 0), UnsupportedOperation);
    CHECK_THROWS_AS(predicted_op_degree(OperationTag::Cartesian, cor, 0), UnsupportedOperation);
    CHECK_THROWS_AS(parse_operation("tensor"), UnsupportedOperation);
    CHECK(parse_operation("corona") == OperationTag::Corona);
}

TEST_CASE("operation formulas agree with the subset oracle")
{
    std::vector<Graph> pool;
    for (auto s : { "complete:1", "complete:2", "complete:3", "path:3", "path:4", "cycle:4", "cycle:5", "star:3" })
        pool.push_back(make(s));

    auto check = [] (OperationTag tag, const Graph & composite, const std::array<FactorSummary, 2> & factors) {
        auto truth = oracle::Oracle(composite).degrees();
        for (Vertex v = 0 ; v < composite.order() ; ++v)
            CHECK(predicted_op_degree(tag, factors, v) == truth[v]);
    };

    for (auto & g : pool)
        for (auto & h : pool) {
            std::array<FactorSummary, 2> factors { FactorSummary::of(g), FactorSummary::of(h) };
            std::array<Graph, 2> parts { g, h };
            check(OperationTag::Union, disjoint_union(parts).graph, factors);
            if (is_complete(h) && h.order() >= 2)
                check(OperationTag::Composition, product(g, h, ProductKind::Composition), factors);
            if (g.order() * (1 + h.order()) <= 16)
                check(OperationTag::Corona, corona(g, h), factors);
        }
}
