/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/families.hh>
#include <domidx/errors.hh>
#include <domidx/operations.hh>

#include <algorithm>
#include <charconv>
#include <numeric>

using namespace domidx;
using namespace domidx::family;

namespace
{
    template <typename... Ts_>
    struct Overloaded : Ts_... { using Ts_::operator()...; };

    template <typename... Ts_>
    Overloaded(Ts_...) -> Overloaded<Ts_...>;

    auto ceil_third(std::size_t n) -> std::size_t
    {
        return (n + 2) / 3;
    }

    auto require(bool condition, const std::string & what) -> void
    {
        if (! condition)
            throw InvalidFamilyParams(what);
    }

    auto uniform(Graph g, Role role = { }) -> GeneratedGraph
    {
        std::vector<Role> roles(g.order(), role);
        return { std::move(g), std::move(roles) };
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto cycle_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph(n, edges);
    }

    auto path_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }

    auto star_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 1 ; v <= n ; ++v)
            edges.emplace_back(0, v);
        return Graph(n + 1, edges);
    }

    auto petersen() -> Graph
    {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0 ; a < 5 ; ++a)
            for (int b = a + 1 ; b < 5 ; ++b)
                pairs.emplace_back(a, b);

        std::vector<Edge> edges;
        for (Vertex u = 0 ; u < pairs.size() ; ++u)
            for (Vertex v = u + 1 ; v < pairs.size() ; ++v) {
                auto [a, b] = pairs[u];
                auto [c, d] = pairs[v];
                if (a != c && a != d && b != c && b != d)
                    edges.emplace_back(u, v);
            }
        return Graph(10, edges);
    }

    auto herschel() -> Graph
    {
        static const std::vector<Edge> edges {
            { 0, 1 }, { 0, 3 }, { 0, 4 }, { 1, 2 }, { 1, 5 }, { 1, 6 },
            { 2, 3 }, { 2, 7 }, { 3, 8 }, { 3, 9 }, { 4, 5 }, { 4, 9 },
            { 5, 10 }, { 6, 7 }, { 6, 10 }, { 7, 8 }, { 8, 10 }, { 9, 10 }
        };
        Graph g(11, edges);

        std::vector<std::size_t> degrees;
        for (Vertex v = 0 ; v < g.order() ; ++v)
            degrees.push_back(g.degree(v));
        std::sort(degrees.begin(), degrees.end());
        std::vector<std::size_t> expected { 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4 };
        if (g.size() != 18 || ! is_bipartite(g) || degrees != expected)
            throw InternalInvariantViolation("embedded Herschel edge list failed validation");
        return g;
    }

    auto grotzsch() -> Graph
    {
        // Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10
        auto c5 = cycle_graph(5);
        std::vector<Edge> edges = c5.edges();
        for (auto [u, v] : c5.edges()) {
            edges.emplace_back(u, 5 + v);
            edges.emplace_back(v, 5 + u);
        }
        for (Vertex i = 0 ; i < 5 ; ++i)
            edges.emplace_back(5 + i, 10);
        Graph g(11, edges);
        if (g.size() != 20 || ! is_triangle_free(g))
            throw InternalInvariantViolation("Mycielski construction failed validation");
        return g;
    }

    auto parse_count(std::string_view token) -> std::size_t
    {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw InvalidFamilyParams("expected a non-negative integer, got '" + std::string(token) + "'");
        return value;
    }

    auto split(std::string_view text, char sep) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> result;
        if (text.empty())
            return result;
        std::size_t start = 0;
        while (true) {
            auto pos = text.find(sep, start);
            result.push_back(text.substr(start, pos - start));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return result;
    }

    auto join_counts(const std::vector<std::size_t> & values) -> std::string
    {
        std::string result;
        for (auto v : values) {
            if (! result.empty())
                result += ",";
            result += std::to_string(v);
        }
        return result;
    }

    auto sum(const std::vector<std::size_t> & values) -> std::size_t
    {
        return std::accumulate(values.begin(), values.end(), std::size_t{0});
    }
}

auto domidx::role_name(RoleKind kind) -> std::string_view
{
    switch (kind) {
        case RoleKind::Center:       return "center";
        case RoleKind::Rim:          return "rim";
        case RoleKind::Leaf:         return "leaf";
        case RoleKind::Spine:        return "spine";
        case RoleKind::BranchVertex: return "branch";
        case RoleKind::Generic:      return "generic";
    }
    return "?";
}

auto domidx::validate(const FamilySpec & spec) -> void
{
    std::visit(Overloaded {
            [] (const Complete & f) { require(f.n >= 1, "complete graph needs n >= 1"); },
            [] (const CompleteMultipartite & f) {
                require(f.parts.size() >= 2, "complete multipartite graph needs at least two parts");
                for (auto p : f.parts)
                    require(p >= 1, "every part needs at least one vertex");
            },
            [] (const Star & f) { require(f.n >= 1, "star needs n >= 1"); },
            [] (const Path & f) { require(f.n >= 1, "path needs n >= 1"); },
            [] (const Cycle & f) { require(f.n >= 3, "cycle needs n >= 3"); },
            [] (const Wheel & f) { require(f.n >= 3, "wheel needs n >= 3"); },
            [] (const Book & f) { require(f.n >= 1, "book needs n >= 1"); },
            [] (const Windmill & f) { require(f.r >= 2 && f.s >= 2, "windmill needs r >= 2 and s >= 2"); },
            [] (const Kragujevac & f) {
                require(f.branches.size() >= 2, "Kragujevac tree needs at least two branches");
                for (auto s : f.branches)
                    require(s >= 1, "every branch needs s >= 1");
            },
            [] (const Petersen &) { },
            [] (const Herschel &) { },
            [] (const Grotzsch &) { }
            }, spec);
}

auto domidx::generate(const FamilySpec & spec) -> GeneratedGraph
{
    validate(spec);
    return std::visit(Overloaded {
            [] (const Complete & f) { return uniform(complete_graph(f.n)); },

            [] (const CompleteMultipartite & f) {
                std::vector<std::size_t> part_of;
                for (std::size_t p = 0 ; p < f.parts.size() ; ++p)
                    part_of.insert(part_of.end(), f.parts[p], p);
                std::vector<Edge> edges;
                for (Vertex u = 0 ; u < part_of.size() ; ++u)
                    for (Vertex v = u + 1 ; v < part_of.size() ; ++v)
                        if (part_of[u] != part_of[v])
                            edges.emplace_back(u, v);
                GeneratedGraph result { Graph(part_of.size(), edges), { } };
                for (auto p : part_of)
                    result.roles.push_back({ RoleKind::Generic, p });
                return result;
            },

            [] (const Star & f) {
                auto result = uniform(star_graph(f.n), { RoleKind::Leaf, 0 });
                result.roles[0] = { RoleKind::Center, 0 };
                return result;
            },

            [] (const Path & f) {
                GeneratedGraph result { path_graph(f.n), { } };
                for (std::size_t i = 1 ; i <= f.n ; ++i)
                    result.roles.push_back({ RoleKind::Spine, i });
                return result;
            },

            [] (const Cycle & f) { return uniform(cycle_graph(f.n), { RoleKind::Rim, 0 }); },

            [] (const Wheel & f) {
                auto result = uniform(join(complete_graph(1), cycle_graph(f.n)).with_default_labels(), { RoleKind::Rim, 0 });
                result.roles[0] = { RoleKind::Center, 0 };
                return result;
            },

            [] (const Book & f) {
                // spine pair (centre, b) gets ids 0 and 1
                auto result = uniform(product(star_graph(f.n), path_graph(2), ProductKind::Cartesian).with_default_labels());
                result.roles[0] = result.roles[1] = { RoleKind::Center, 0 };
                return result;
            },

            [] (const Windmill & f) {
                std::vector<Edge> edges;
                GeneratedGraph result { Graph(), { { RoleKind::Center, 0 } } };
                Vertex next = 1;
                for (std::size_t blade = 0 ; blade < f.s ; ++blade) {
                    std::vector<Vertex> members { 0 };
                    for (std::size_t i = 1 ; i < f.r ; ++i) {
                        members.push_back(next++);
                        result.roles.push_back({ RoleKind::Generic, blade });
                    }
                    for (std::size_t i = 0 ; i < members.size() ; ++i)
                        for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                            edges.emplace_back(members[i], members[j]);
                }
                result.graph = Graph(next, edges);
                return result;
            },

            [] (const Kragujevac & f) {
                std::vector<Edge> edges;
                GeneratedGraph result { Graph(), { { RoleKind::Center, 0 } } };
                Vertex next = 1;
                for (std::size_t b = 0 ; b < f.branches.size() ; ++b) {
                    auto root = next++;
                    result.roles.push_back({ RoleKind::BranchVertex, b });
                    edges.emplace_back(0, root);
                    for (std::size_t i = 0 ; i < f.branches[b] ; ++i) {
                        auto mid = next++, leaf = next++;
                        result.roles.push_back({ RoleKind::BranchVertex, b });
                        result.roles.push_back({ RoleKind::Leaf, b });
                        edges.emplace_back(root, mid);
                        edges.emplace_back(mid, leaf);
                    }
                }
                result.graph = Graph(next, edges);
                return result;
            },

            [] (const Petersen &) { return uniform(petersen()); },
            [] (const Herschel &) { return uniform(herschel()); },
            [] (const Grotzsch &) { return uniform(grotzsch()); }
            }, spec);
}

auto domidx::parse_family(std::string_view text) -> FamilySpec
{
    auto colon = text.find(':');
    auto name = text.substr(0, colon);
    auto args = colon == std::string_view::npos ? std::string_view{ } : text.substr(colon + 1);

    std::vector<std::size_t> values;
    std::size_t r = 0, s = 0;
    bool named_windmill = false;
    for (auto token : split(args, ',')) {
        if (name == "windmill" && token.size() > 2 && token[1] == '=') {
            named_windmill = true;
            if (token[0] == 'r')
                r = parse_count(token.substr(2));
            else if (token[0] == 's')
                s = parse_count(token.substr(2));
            else
                throw InvalidFamilyParams("windmill takes r= and s=");
        }
        else
            values.push_back(parse_count(token));
    }

    auto single = [&] () -> std::size_t {
        if (values.size() != 1)
            throw InvalidFamilyParams("'" + std::string(name) + "' takes exactly one parameter");
        return values[0];
    };
    auto none = [&] () {
        if (! values.empty())
            throw InvalidFamilyParams("'" + std::string(name) + "' takes no parameters");
    };

    FamilySpec spec;
    if (name == "complete")
        spec = Complete{ single() };
    else if (name == "multipartite")
        spec = CompleteMultipartite{ values };
    else if (name == "star")
        spec = Star{ single() };
    else if (name == "path")
        spec = Path{ single() };
    else if (name == "cycle")
        spec = Cycle{ single() };
    else if (name == "wheel")
        spec = Wheel{ single() };
    else if (name == "book")
        spec = Book{ single() };
    else if (name == "windmill") {
        if (named_windmill) {
            if (! values.empty() || r == 0 || s == 0)
                throw InvalidFamilyParams("windmill takes r=R,s=S");
            spec = Windmill{ r, s };
        }
        else if (values.size() == 2)
            spec = Windmill{ values[0], values[1] };
        else
            throw InvalidFamilyParams("windmill takes r=R,s=S");
    }
    else if (name == "kragujevac")
        spec = Kragujevac{ values };
    else if (name == "petersen") {
        none();
        spec = Petersen{ };
    }
    else if (name == "herschel") {
        none();
        spec = Herschel{ };
    }
    else if (name == "grotzsch") {
        none();
        spec = Grotzsch{ };
    }
    else
        throw InvalidFamilyParams("unknown family '" + std::string(name) + "'");

    validate(spec);
    return spec;
}

auto domidx::describe(const FamilySpec & spec) -> std::string
{
    return std::visit(Overloaded {
            [] (const Complete & f) { return "complete:" + std::to_string(f.n); },
            [] (const CompleteMultipartite & f) { return "multipartite:" + join_counts(f.parts); },
            [] (const Star & f) { return "star:" + std::to_string(f.n); },
            [] (const Path & f) { return "path:" + std::to_string(f.n); },
            [] (const Cycle & f) { return "cycle:" + std::to_string(f.n); },
            [] (const Wheel & f) { return "wheel:" + std::to_string(f.n); },
            [] (const Book & f) { return "book:" + std::to_string(f.n); },
            [] (const Windmill & f) { return "windmill:r=" + std::to_string(f.r) + ",s=" + std::to_string(f.s); },
            [] (const Kragujevac & f) { return "kragujevac:" + join_counts(f.branches); },
            [] (const Petersen &) { return std::string("petersen"); },
            [] (const Herschel &) { return std::string("herschel"); },
            [] (const Grotzsch &) { return std::string("grotzsch"); }
            }, spec);
}

auto domidx::predicted_degree(const FamilySpec & spec, const Role & role) -> std::optional<std::size_t>
{
    validate(spec);
    bool center = role.kind == RoleKind::Center;
    return std::visit(Overloaded {
            [] (const Complete &) -> std::optional<std::size_t> { return 1; },
            [] (const CompleteMultipartite & f) -> std::optional<std::size_t> {
                require(std::all_of(f.parts.begin(), f.parts.end(), [] (auto p) { return p >= 2; }),
                        "the multipartite formula needs every part of size >= 2");
                return 2;
            },
            [&] (const Star & f) -> std::optional<std::size_t> { return center ? 1 : f.n; },
            [&] (const Path & f) -> std::optional<std::size_t> {
                require(role.kind == RoleKind::Spine && role.index >= 1 && role.index <= f.n, "path vertices carry their position");
                auto c = ceil_third(f.n);
                switch (f.n % 3) {
                    case 1: return c;
                    case 0: return role.index % 3 == 2 ? c : c + 1;
                    default: return std::nullopt;
                }
            },
            [] (const Cycle & f) -> std::optional<std::size_t> { return ceil_third(f.n); },
            [&] (const Wheel & f) -> std::optional<std::size_t> { return center ? 1 : ceil_third(f.n); },
            [&] (const Book & f) -> std::optional<std::size_t> {
                if (f.n < 2)
                    return std::nullopt;
                return center ? 2 : f.n;
            },
            [&] (const Windmill & f) -> std::optional<std::size_t> { return center ? 1 : f.s; },
            [] (const Kragujevac & f) -> std::optional<std::size_t> { return 1 + sum(f.branches); },
            [] (const Petersen &) -> std::optional<std::size_t> { return 3; },
            [] (const Herschel &) -> std::optional<std::size_t> { return 3; },
            [] (const Grotzsch &) -> std::optional<std::size_t> { return 3; }
            }, spec);
}

auto domidx::predicted_degree(const FamilySpec & spec, Vertex v) -> std::optional<std::size_t>
{
    auto generated = generate(spec);
    if (v >= generated.graph.order())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " beyond " + describe(spec));
    return predicted_degree(spec, generated.roles[v]);
}

auto domidx::predicted_index(const FamilySpec & spec) -> std::optional<std::size_t>
{
    validate(spec);
    return std::visit(Overloaded {
            [] (const Complete & f) -> std::optional<std::size_t> { return f.n; },
            [] (const CompleteMultipartite & f) -> std::optional<std::size_t> {
                require(std::all_of(f.parts.begin(), f.parts.end(), [] (auto p) { return p >= 2; }),
                        "the multipartite formula needs every part of size >= 2");
                return 2 * sum(f.parts);
            },
            [] (const Star & f) -> std::optional<std::size_t> { return 1 + f.n * f.n; },
            [] (const Path & f) -> std::optional<std::size_t> {
                auto k = f.n / 3;
                switch (f.n % 3) {
                    case 0: return k * (3 * k + 2);
                    case 1: return (3 * k + 1) * (k + 1);
                    default: return std::nullopt;
                }
            },
            [] (const Cycle & f) -> std::optional<std::size_t> { return f.n * ceil_third(f.n); },
            [] (const Wheel & f) -> std::optional<std::size_t> { return 1 + f.n * ceil_third(f.n); },
            [] (const Book & f) -> std::optional<std::size_t> {
                if (f.n < 2)
                    return std::nullopt;
                return 2 * (f.n * f.n + 2);
            },
            // s(r - 1) non-centre vertices, each of degree s
            [] (const Windmill & f) -> std::optional<std::size_t> { return 1 + (f.r - 1) * f.s * f.s; },
            [] (const Kragujevac & f) -> std::optional<std::size_t> {
                auto order = 1 + 2 * sum(f.branches) + f.branches.size();
                return order * (1 + sum(f.branches));
            },
            [] (const Petersen &) -> std::optional<std::size_t> { return 30; },
            [] (const Herschel &) -> std::optional<std::size_t> { return 33; },
            [] (const Grotzsch &) -> std::optional<std::size_t> { return 33; }
            }, spec);
}

auto domidx::path_degree_variants(std::size_t n, std::size_t position) -> PathVariants
{
    require(n % 3 == 2, "path variants only exist for n = 3k + 2");
    require(position >= 1 && position <= n, "position out of range");
    auto c = ceil_third(n);
    if (position % 3 == 0)
        return { c + 1, c };
    return { c, c + 1 };
}

auto domidx::path_index_variants(std::size_t n) -> PathVariants
{
    require(n % 3 == 2, "path variants only exist for n = 3k + 2");
    auto k = n / 3;
    return { k * (k + 1) + 2 * (k + 1) * (k + 1), k * (k + 2) + 2 * (k + 1) * (k + 1) };
}

auto domidx::windmill_published_index(std::size_t r, std::size_t s) -> std::size_t
{
    return 1 + r * s * s;
}

auto domidx::is_tree_family(const FamilySpec & spec) -> bool
{
    return std::holds_alternative<Star>(spec) || std::holds_alternative<Path>(spec) || std::holds_alternative<Kragujevac>(spec);
}
