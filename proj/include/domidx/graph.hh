/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_GRAPH_HH
#define DOMIDX_GUARD_GRAPH_HH 1

#include <domidx/vertex_set.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domidx
{
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Immutable simple undirected graph. Vertices are dense ids 0..n-1, each
     * with a unique string label; both open and closed neighbourhoods are kept
     * as bit vectors so that domination queries reduce to word operations.
     */
    class Graph
    {
        private:
            std::vector<VertexSet> _open;
            std::vector<VertexSet> _closed;
            std::vector<std::string> _labels;
            std::size_t _size = 0;

        public:
            Graph() = default;

            /**
             * Builds a graph on n vertices. Duplicate edges are merged. Labels
             * default to decimal ids and must be unique and whitespace-free.
             *
             * Throws InvalidEdge on a self-loop, VertexOutOfRange on an endpoint
             * >= n, and LabelConflict on repeated or malformed labels.
             */
            Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = { });

            Graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels = { }) :
                Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels))
            {
            }

            auto order() const -> std::size_t { return _labels.size(); }
            auto size() const -> std::size_t { return _size; }

            auto adjacent(Vertex a, Vertex b) const -> bool { return _open[a].contains(b); }
            auto degree(Vertex v) const -> std::size_t { return _open[v].count(); }

            auto open_neighborhood(Vertex v) const -> const VertexSet & { return _open[v]; }

            /// N[v]; throws VertexOutOfRange.
            auto closed_neighborhood(Vertex v) const -> const VertexSet &;

            auto label(Vertex v) const -> const std::string & { return _labels[v]; }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto find_vertex(const std::string & label) const -> std::optional<Vertex>;

            /// Throws VertexOutOfRange naming the label when it is absent.
            auto vertex(const std::string & label) const -> Vertex;

            auto empty_set() const -> VertexSet { return VertexSet(order()); }
            auto all_vertices() const -> VertexSet { return VertexSet::full(order()); }
            auto make_set(std::initializer_list<Vertex> members) const -> VertexSet;
            auto make_set(std::span<const std::string> labels) const -> VertexSet;

            /// Edges as (u, v) with u < v, sorted.
            auto edges() const -> std::vector<Edge>;

            /// Same graph with labels reset to decimal ids.
            auto with_default_labels() const -> Graph;

            /// Structural equality: same order and edge set. Labels are ignored.
            auto same_structure(const Graph & other) const -> bool;

            auto operator== (const Graph & other) const -> bool
            {
                return _labels == other._labels && same_structure(other);
            }
    };

    auto max_degree(const Graph & g) -> std::size_t;

    auto is_connected(const Graph & g) -> bool;

    /// BFS distances from source; unreachable vertices hold std::nullopt.
    auto distances_from(const Graph & g, Vertex source) -> std::vector<std::optional<std::size_t>>;

    /// Sum of shortest-path distances over unordered pairs. Throws DisconnectedGraph.
    auto wiener_index(const Graph & g) -> std::size_t;

    /// Vertex v of g becomes vertex perm[v] of the result; labels travel with their vertices.
    auto permute(const Graph & g, std::span<const Vertex> perm) -> Graph;

    /// True iff h has the same order as g and every edge of h is an edge of g.
    auto is_spanning_subgraph(const Graph & h, const Graph & g) -> bool;

    auto bfs_spanning_tree(const Graph & g, Vertex root = 0) -> Graph;

    auto remove_edge(const Graph & g, Edge e) -> Graph;

    auto is_bipartite(const Graph & g) -> bool;
    auto is_triangle_free(const Graph & g) -> bool;
    auto is_complete(const Graph & g) -> bool;
}

#endif
