/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_OPERATIONS_HH
#define DOMIDX_GUARD_OPERATIONS_HH 1

#include <domidx/domination.hh>
#include <domidx/graph.hh>

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace domidx
{
    enum class ProductKind
    {
        Cartesian,
        Direct,
        Strong,
        Composition
    };

    struct DisjointUnion
    {
        Graph graph;
        std::vector<std::size_t> component;    ///< which part each vertex came from
        std::vector<Vertex> offset;            ///< first id of each part
    };

    /// Parts laid out one after another; labels become "i:label".
    auto disjoint_union(std::span<const Graph> parts) -> DisjointUnion;

    /// g's vertices first, then h's; labels "0:label" and "1:label".
    auto join(const Graph & g, const Graph & h) -> Graph;

    /**
     * Vertex (a, b) has id a * |V(h)| + b and label "(a,b)". Composition is
     * the lexicographic product g[h]: adjacent when a1 ~ a2, or a1 = a2 and
     * b1 ~ b2.
     */
    auto product(const Graph & g, const Graph & h, ProductKind kind) -> Graph;

    /**
     * The hubs keep g's ids and labels; the copy of h attached to hub i
     * occupies ids |V(g)| + i * |V(h)| + j with labels "(a,b)".
     */
    auto corona(const Graph & g, const Graph & h) -> Graph;

    enum class OperationTag
    {
        Union,
        Join,
        Cartesian,
        Direct,
        Strong,
        Composition,
        Corona
    };

    auto parse_operation(std::string_view name) -> OperationTag;
    auto operation_name(OperationTag tag) -> std::string_view;

    /// Exact data about one operand that the operation formulas need.
    struct FactorSummary
    {
        std::size_t order = 0;
        std::size_t gamma = 0;
        std::vector<std::size_t> degrees;
        bool complete = false;

        static auto of(const Graph & g, std::size_t max_exact = default_exact_cap) -> FactorSummary;
    };

    /**
     * Predicted domination degree of a vertex of the composite built by the
     * operation. Union takes any number of parts, the others exactly two.
     * Composition is only covered when the second factor is complete.
     *
     * Throws UnsupportedOperation for products without a formula.
     */
    auto predicted_op_degree(OperationTag tag, std::span<const FactorSummary> factors, Vertex v) -> std::size_t;
}

#endif
