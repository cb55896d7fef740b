/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/cli.hh>
#include <domidx/domination.hh>
#include <domidx/io.hh>

#include "fixtures.hh"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace domidx;

namespace
{
    struct Result
    {
        int status;
        std::string out, err;
    };

    auto invoke(std::vector<std::string> args, const std::string & input = "") -> Result
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int status = run(args, in, out, err);
        return { status, out.str(), err.str() };
    }

    const auto f9_path = fixtures::data_path("f9.edges");
}

TEST_CASE("generate piped into analyze")
{
    auto generated = invoke({ "generate", "cycle:6" });
    CHECK(generated.status == 0);
    auto analyzed = invoke({ "analyze" }, generated.out);
    CHECK(analyzed.status == 0);
    auto report = parse_report_json(analyzed.out);
    CHECK(report.di == 12);
    CHECK(analyzed.out == invoke({ "analyze" }, generated.out).out);

    auto text = invoke({ "analyze", "--format", "text" }, generated.out);
    CHECK(text.out.find("di 12") != std::string::npos);
}

TEST_CASE("degree and containing sets")
{
    auto degree = invoke({ "degree", "--in", f9_path, "--vertex", "a2" });
    CHECK(degree.status == 0);
    CHECK(degree.out.rfind("3 ", 0) == 0);

    auto greedy = invoke({ "mds-containing", "--in", f9_path, "--vertex", "a2", "--algorithm", "greedy" });
    CHECK(greedy.status == 0);
    CHECK(greedy.out == "a2 a3 a5\n");

    auto exact = invoke({ "mds-containing", "--in", f9_path, "--vertex", "a2", "--algorithm", "exact", "--format", "json" });
    CHECK(exact.status == 0);
    CHECK(exact.out.find("\"size\": 3") != std::string::npos);

    auto dot = invoke({ "mds-containing", "--in", f9_path, "--vertex", "a2", "--format", "dot" });
    CHECK(dot.out.find("filled") != std::string::npos);
}

TEST_CASE("facility placement")
{
    auto g = fixtures::f9();
    auto result = invoke({ "facility", "--in", f9_path, "--hub", "a4" });
    CHECK(result.status == 0);
    std::istringstream lines(result.out);
    std::string hub_word, hub, placements_word, label;
    lines >> hub_word >> hub >> placements_word;
    CHECK(hub == "a4");
    auto chosen = g.empty_set();
    chosen.insert(g.vertex(hub));
    while (lines >> label)
        chosen.insert(g.vertex(label));
    CHECK(is_minimal_dominating(g, chosen));
    CHECK(chosen.count() == domination_degree(g, g.vertex("a4")).degree);
}

TEST_CASE("operations")
{
    auto path = fixtures::temp_path("k1.edges");
    {
        std::ofstream k1(path);
        k1 << "x\n";
    }
    auto result = invoke({ "op", "join", "--with", path }, "a b\nb c\na c\n");
    CHECK(result.status == 0);
    auto g = parse_edgelist(result.out);
    CHECK(g.order() == 4);
    CHECK(g.size() == 6);
    std::remove(path.c_str());

    CHECK(invoke({ "op", "tensor", "--with", f9_path }, "a b\n").status == 1);
}

TEST_CASE("verify")
{
    auto result = invoke({ "verify", "--suite", "named-graphs" });
    CHECK(result.status == 0);
    CHECK(result.out.find("6 instances") != std::string::npos);

    auto ledger = fixtures::temp_path("ledger.jsonl");
    CHECK(invoke({ "verify", "--suite", "families", "--ledger", ledger }).status == 0);
    CHECK(! fixtures::read_file(ledger).empty());
    std::remove(ledger.c_str());

    CHECK(invoke({ "verify", "--suite", "nonsense" }).status == 1);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({ }).status == 1);
    CHECK(invoke({ "analyze", "--bogus" }).status == 1);
    CHECK(invoke({ "analyze", "--format", "yaml" }).status == 1);
    CHECK(invoke({ "generate", "cycle:2" }).status == 1);
    CHECK(invoke({ "analyze" }, "a b c\n").status == 3);
    CHECK(invoke({ "analyze" }, "a a\n").status == 3);
    CHECK(invoke({ "degree", "--vertex", "zz" }, "a b\n").status == 1);

    auto long_path = invoke({ "generate", "path:30" });
    CHECK(invoke({ "analyze" }, long_path.out).status == 4);
    CHECK(invoke({ "analyze", "--max-exact", "40" }, long_path.out).status == 0);
    CHECK(invoke({ "mds-containing", "--vertex", "0", "--max-exact", "10" }, long_path.out).status == 4);
}

TEST_CASE("output file")
{
    auto path = fixtures::temp_path("petersen.edges");
    CHECK(invoke({ "generate", "petersen", "--out", path }).status == 0);
    CHECK(parse_edgelist(fixtures::read_file(path)).size() == 15);
    std::remove(path.c_str());
}
