/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/graph.hh>
#include <domidx/errors.hh>

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <unordered_map>

using namespace domidx;

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) :
    _open(n, VertexSet(n)),
    _labels(std::move(labels))
{
    if (_labels.empty()) {
        _labels.reserve(n);
        for (std::size_t v = 0 ; v < n ; ++v)
            _labels.push_back(std::to_string(v));
    }
    else if (_labels.size() != n)
        throw LabelConflict("expected " + std::to_string(n) + " labels, got " + std::to_string(_labels.size()));

    std::set<std::string_view> seen;
    for (auto & l : _labels) {
        if (l.empty() || std::any_of(l.begin(), l.end(), [] (unsigned char c) { return std::isspace(c); }))
            throw LabelConflict("label '" + l + "' is empty or contains whitespace");
        if (! seen.insert(l).second)
            throw LabelConflict("duplicate label '" + l + "'");
    }

    for (auto & [u, v] : edges) {
        if (u >= n || v >= n)
            throw VertexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") on a graph of order " + std::to_string(n));
        if (u == v)
            throw InvalidEdge("self-loop on vertex " + std::to_string(u));
        _open[u].insert(v);
        _open[v].insert(u);
    }

    _closed = _open;
    std::size_t degree_sum = 0;
    for (std::size_t v = 0 ; v < n ; ++v) {
        _closed[v].insert(v);
        degree_sum += _open[v].count();
    }
    _size = degree_sum / 2;
}

auto Graph::closed_neighborhood(Vertex v) const -> const VertexSet &
{
    if (v >= order())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " on a graph of order " + std::to_string(order()));
    return _closed[v];
}

auto Graph::find_vertex(const std::string & label) const -> std::optional<Vertex>
{
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end())
        return std::nullopt;
    return it - _labels.begin();
}

auto Graph::vertex(const std::string & label) const -> Vertex
{
    if (auto v = find_vertex(label))
        return *v;
    throw VertexOutOfRange("no vertex labelled '" + label + "'");
}

auto Graph::make_set(std::initializer_list<Vertex> members) const -> VertexSet
{
    auto result = empty_set();
    for (auto v : members) {
        if (v >= order())
            throw VertexOutOfRange("vertex " + std::to_string(v) + " on a graph of order " + std::to_string(order()));
        result.insert(v);
    }
    return result;
}

auto Graph::make_set(std::span<const std::string> labels) const -> VertexSet
{
    auto result = empty_set();
    for (auto & l : labels)
        result.insert(vertex(l));
    return result;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_size);
    for (Vertex u = 0 ; u < order() ; ++u)
        for (Vertex v = _open[u].next(u + 1) ; v < order() ; v = _open[u].next(v + 1))
            result.emplace_back(u, v);
    return result;
}

auto Graph::with_default_labels() const -> Graph
{
    auto e = edges();
    return Graph(order(), e);
}

auto Graph::same_structure(const Graph & other) const -> bool
{
    return order() == other.order() && _open == other._open;
}

auto domidx::max_degree(const Graph & g) -> std::size_t
{
    std::size_t result = 0;
    for (Vertex v = 0 ; v < g.order() ; ++v)
        result = std::max(result, g.degree(v));
    return result;
}

auto domidx::distances_from(const Graph & g, Vertex source) -> std::vector<std::optional<std::size_t>>
{
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::queue<Vertex> queue;
    dist.at(source) = 0;
    queue.push(source);
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto w : g.open_neighborhood(u))
            if (! dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push(w);
            }
    }
    return dist;
}

auto domidx::is_connected(const Graph & g) -> bool
{
    if (g.order() == 0)
        return true;
    auto dist = distances_from(g, 0);
    return std::all_of(dist.begin(), dist.end(), [] (const auto & d) { return d.has_value(); });
}

auto domidx::wiener_index(const Graph & g) -> std::size_t
{
    std::size_t total = 0;
    for (Vertex u = 0 ; u < g.order() ; ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1 ; v < g.order() ; ++v) {
            if (! dist[v])
                throw DisconnectedGraph("Wiener index is undefined on a disconnected graph");
            total += *dist[v];
        }
    }
    return total;
}

auto domidx::permute(const Graph & g, std::span<const Vertex> perm) -> Graph
{
    auto n = g.order();
    if (perm.size() != n)
        throw NotAPermutation("permutation has " + std::to_string(perm.size()) + " entries for a graph of order " + std::to_string(n));

    std::vector<bool> hit(n, false);
    for (auto p : perm) {
        if (p >= n || hit[p])
            throw NotAPermutation("entry " + std::to_string(p) + " is out of range or repeated");
        hit[p] = true;
    }

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);

    std::vector<std::string> labels(n);
    for (Vertex v = 0 ; v < n ; ++v)
        labels[perm[v]] = g.label(v);

    return Graph(n, edges, std::move(labels));
}

auto domidx::is_spanning_subgraph(const Graph & h, const Graph & g) -> bool
{
    if (h.order() != g.order())
        return false;
    for (Vertex v = 0 ; v < h.order() ; ++v)
        if (! h.open_neighborhood(v).is_subset_of(g.open_neighborhood(v)))
            return false;
    return true;
}

auto domidx::bfs_spanning_tree(const Graph & g, Vertex root) -> Graph
{
    std::vector<bool> seen(g.order(), false);
    std::vector<Edge> tree;
    std::queue<Vertex> queue;
    seen.at(root) = true;
    queue.push(root);
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto w : g.open_neighborhood(u))
            if (! seen[w]) {
                seen[w] = true;
                tree.emplace_back(u, w);
                queue.push(w);
            }
    }
    return Graph(g.order(), tree, g.labels());
}

auto domidx::remove_edge(const Graph & g, Edge e) -> Graph
{
    auto edges = g.edges();
    std::erase_if(edges, [&] (const Edge & f) {
            return (f.first == e.first && f.second == e.second) || (f.first == e.second && f.second == e.first);
            });
    return Graph(g.order(), edges, g.labels());
}

auto domidx::is_bipartite(const Graph & g) -> bool
{
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0 ; s < g.order() ; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop();
            for (auto w : g.open_neighborhood(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    queue.push(w);
                }
                else if (colour[w] == colour[u])
                    return false;
            }
        }
    }
    return true;
}

auto domidx::is_triangle_free(const Graph & g) -> bool
{
    for (auto [u, v] : g.edges())
        if (g.open_neighborhood(u).intersects(g.open_neighborhood(v)))
            return false;
    return true;
}

auto domidx::is_complete(const Graph & g) -> bool
{
    for (Vertex v = 0 ; v < g.order() ; ++v)
        if (! g.closed_neighborhood(v).is_full())
            return false;
    return true;
}
