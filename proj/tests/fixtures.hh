/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_TESTS_FIXTURES_HH
#define DOMIDX_GUARD_TESTS_FIXTURES_HH 1

#include <domidx/graph.hh>
#include <domidx/io.hh>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace fixtures
{
    inline auto data_path(const std::string & name) -> std::string
    {
        return std::string(DOMIDX_TEST_DATA) + "/" + name;
    }

    inline auto read_file(const std::string & path) -> std::string
    {
        std::ifstream file(path);
        return std::string(std::istreambuf_iterator<char>(file), { });
    }

    inline auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("domidx-test-" + name)).string();
    }

    inline auto f9() -> domidx::Graph
    {
        return domidx::parse_edgelist(read_file(data_path("f9.edges")));
    }

    inline auto set_of(const domidx::Graph & g, std::initializer_list<const char *> labels) -> domidx::VertexSet
    {
        auto s = g.empty_set();
        for (auto l : labels)
            s.insert(g.vertex(l));
        return s;
    }
}

#endif
