/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/io.hh>
#include <domidx/errors.hh>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace domidx;

using json = nlohmann::ordered_json;

auto domidx::parse_edgelist(std::string_view text, std::vector<std::string> * warnings) -> Graph
{
    std::vector<std::string> labels;
    std::map<std::string, Vertex, std::less<>> ids;
    std::set<Edge> edges;

    auto id_of = [&] (const std::string & label) -> Vertex {
        auto [it, inserted] = ids.emplace(label, labels.size());
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    std::size_t line_number = 0;
    std::istringstream lines{ std::string(text) };
    std::string line;
    while (std::getline(lines, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::vector<std::string> words;
        std::string word;
        while (tokens >> word) {
            if (word.front() == '#')
                break;
            words.push_back(word);
        }

        if (words.empty())
            continue;
        if (words.size() > 2)
            throw MalformedLine(line_number, "expected 'u v' or 'u', got " + std::to_string(words.size()) + " tokens");
        if (words.size() == 1) {
            id_of(words[0]);
            continue;
        }
        if (words[0] == words[1])
            throw SelfLoop(line_number, "self-loop on '" + words[0] + "'");

        auto u = id_of(words[0]), v = id_of(words[1]);
        if (! edges.emplace(std::min(u, v), std::max(u, v)).second && warnings)
            warnings->push_back("line " + std::to_string(line_number) + ": duplicate edge " + words[0] + " " + words[1] + " ignored");
    }

    std::vector<Edge> edge_list(edges.begin(), edges.end());
    auto n = labels.size();
    return Graph(n, edge_list, std::move(labels));
}

auto domidx::emit_edgelist(const Graph & g) -> std::string
{
    std::vector<std::string> isolated;
    for (Vertex v = 0 ; v < g.order() ; ++v)
        if (g.degree(v) == 0)
            isolated.push_back(g.label(v));
    std::sort(isolated.begin(), isolated.end());

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::minmax(g.label(u), g.label(v)));
    std::sort(edges.begin(), edges.end());

    std::string result;
    for (auto & l : isolated)
        result += l + "\n";
    for (auto & [a, b] : edges)
        result += a + " " + b + "\n";
    return result;
}

namespace
{
    auto quoted(const std::string & s) -> std::string
    {
        std::string result = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                result += '\\';
            result += c;
        }
        return result + "\"";
    }
}

auto domidx::emit_dot(const Graph & g, const std::optional<VertexSet> & highlight) -> std::string
{
    std::string result = "graph G {\n";
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        result += "  " + quoted(g.label(v));
        if (highlight && highlight->contains(v))
            result += " [style=filled, fillcolor=lightgrey]";
        result += ";\n";
    }
    for (auto [u, v] : g.edges())
        result += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
    return result + "}\n";
}

auto domidx::sorted_labels(const Graph & g, const VertexSet & s) -> std::vector<std::string>
{
    std::vector<std::string> result;
    for (auto v : s)
        result.push_back(g.label(v));
    std::sort(result.begin(), result.end());
    return result;
}

auto domidx::make_report(const Graph & g, const DominationProfile & p) -> ProfileReport
{
    ProfileReport r;
    r.n = g.order();
    r.m = g.size();
    r.connected = g.order() == 0 || is_connected(g);
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        r.vertices.push_back({ g.label(v), p.degrees[v], sorted_labels(g, p.witnesses[v]) });
        r.di += p.degrees[v];
    }
    r.gamma = p.gamma;
    r.upper_gamma = p.upper_gamma;
    r.ir = p.ir;
    r.upper_ir = p.upper_ir;
    r.min_dd = p.min_dd;
    r.max_dd = p.max_dd;
    r.is_drg = p.is_drg;
    if (r.di != p.index)
        throw InternalInvariantViolation("profile index disagrees with the sum of degrees");
    return r;
}

auto domidx::emit_report_json(const ProfileReport & r) -> std::string
{
    auto optional_value = [] (const std::optional<std::size_t> & x) -> json {
        return x ? json(*x) : json(nullptr);
    };

    json vertices = json::array();
    for (auto & v : r.vertices)
        vertices.push_back({ { "label", v.label }, { "dd", v.dd }, { "witness", v.witness } });

    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["connected"] = r.connected;
    j["vertices"] = std::move(vertices);
    j["gamma"] = r.gamma;
    j["upper_gamma"] = r.upper_gamma;
    j["ir"] = optional_value(r.ir);
    j["upper_ir"] = optional_value(r.upper_ir);
    j["di"] = r.di;
    j["min_dd"] = r.min_dd;
    j["max_dd"] = r.max_dd;
    j["is_drg"] = r.is_drg;
    return j.dump(2) + "\n";
}

auto domidx::parse_report_json(std::string_view text) -> ProfileReport
{
    try {
        auto j = json::parse(text);
        auto optional_value = [&] (const char * key) -> std::optional<std::size_t> {
            if (j.at(key).is_null())
                return std::nullopt;
            return j.at(key).get<std::size_t>();
        };

        ProfileReport r;
        r.n = j.at("n").get<std::size_t>();
        r.m = j.at("m").get<std::size_t>();
        r.connected = j.at("connected").get<bool>();
        for (auto & v : j.at("vertices"))
            r.vertices.push_back({ v.at("label").get<std::string>(), v.at("dd").get<std::size_t>(),
                    v.at("witness").get<std::vector<std::string>>() });
        r.gamma = j.at("gamma").get<std::size_t>();
        r.upper_gamma = j.at("upper_gamma").get<std::size_t>();
        r.ir = optional_value("ir");
        r.upper_ir = optional_value("upper_ir");
        r.di = j.at("di").get<std::size_t>();
        r.min_dd = j.at("min_dd").get<std::size_t>();
        r.max_dd = j.at("max_dd").get<std::size_t>();
        r.is_drg = j.at("is_drg").get<bool>();
        return r;
    }
    catch (const json::exception & e) {
        throw ParseError(0, std::string("bad report: ") + e.what());
    }
}

auto domidx::emit_report_text(const ProfileReport & r) -> std::string
{
    std::ostringstream out;
    out << "n " << r.n << " m " << r.m << (r.connected ? " connected" : " disconnected") << "\n";
    for (auto & v : r.vertices) {
        out << v.label << " " << v.dd << " {";
        for (std::size_t i = 0 ; i < v.witness.size() ; ++i)
            out << (i ? "," : "") << v.witness[i];
        out << "}\n";
    }
    auto optional_text = [] (const std::optional<std::size_t> & x) {
        return x ? std::to_string(*x) : std::string("-");
    };
    out << "gamma " << r.gamma << "\n"
        << "upper_gamma " << r.upper_gamma << "\n"
        << "ir " << optional_text(r.ir) << "\n"
        << "upper_ir " << optional_text(r.upper_ir) << "\n"
        << "di " << r.di << "\n"
        << "min_dd " << r.min_dd << "\n"
        << "max_dd " << r.max_dd << "\n"
        << "is_drg " << (r.is_drg ? "true" : "false") << "\n";
    return out.str();
}
