/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/cli.hh>
#include <domidx/domination.hh>
#include <domidx/errors.hh>
#include <domidx/families.hh>
#include <domidx/io.hh>
#include <domidx/operations.hh>
#include <domidx/verify.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

using namespace domidx;

using json = nlohmann::ordered_json;

namespace
{
    struct Common
    {
        std::string in, out, format;
        std::size_t max_exact = 24;
        std::uint64_t seed = 1;
    };

    auto add_common(CLI::App * app, Common & common, std::vector<std::string> formats) -> void
    {
        app->add_option("--in", common.in, "input edge list (default stdin)");
        app->add_option("--out", common.out, "output path (default stdout)");
        app->add_option("--format", common.format, "output format")->check(CLI::IsMember(formats));
        app->add_option("--max-exact", common.max_exact, "largest order handed to exact routines");
        app->add_option("--seed", common.seed, "seed for randomized steps");
    }

    auto slurp(const std::string & path, std::istream & in) -> std::string
    {
        if (path.empty() || path == "-")
            return std::string(std::istreambuf_iterator<char>(in), { });
        std::ifstream file(path);
        if (! file)
            throw Error("cannot read '" + path + "'");
        return std::string(std::istreambuf_iterator<char>(file), { });
    }

    auto read_graph(const std::string & path, std::istream & in, std::ostream & err) -> Graph
    {
        std::vector<std::string> warnings;
        auto g = parse_edgelist(slurp(path, in), &warnings);
        for (auto & w : warnings)
            err << "warning: " << w << "\n";
        return g;
    }

    auto require_order(const Graph & g, std::size_t max_exact) -> void
    {
        if (g.order() > max_exact)
            throw ExactCapExceeded(g.order(), max_exact);
    }

    auto joined(const std::vector<std::string> & labels, const char * sep) -> std::string
    {
        std::string result;
        for (std::size_t i = 0 ; i < labels.size() ; ++i)
            result += (i ? sep : "") + labels[i];
        return result;
    }

    auto set_output(const Graph & g, const VertexSet & s, const std::string & format) -> std::string
    {
        if (format == "dot")
            return emit_dot(g, s);
        auto labels = sorted_labels(g, s);
        if (format == "json")
            return json({ { "size", labels.size() }, { "set", labels } }).dump(2) + "\n";
        return joined(labels, " ") + "\n";
    }

    auto graph_output(const Graph & g, const std::string & format) -> std::string
    {
        if (format == "dot")
            return emit_dot(g);
        return emit_edgelist(g);
    }

    auto report_output(const CheckReport & report, const std::string & format) -> std::string
    {
        if (format != "json")
            return summarize(report);
        json j;
        j["suite"] = report.suite;
        j["instances"] = report.instances;
        j["passes"] = report.passes;
        j["discrepancies"] = report.discrepancies.size();
        j["proved_failures"] = report.proved_failures();
        j["table"] = report.table;
        return j.dump(2) + "\n";
    }
}

auto domidx::run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "domination degree and domination index toolkit", "domidx" };
    app.require_subcommand(1, 1);

    Common common;
    std::string spec_text, op_name, with_path, vertex, algorithm = "greedy", suite, ledger;

    auto analyze = app.add_subcommand("analyze", "domination profile of a graph");
    add_common(analyze, common, { "text", "json" });

    auto generate_cmd = app.add_subcommand("generate", "edge list of a family member, e.g. cycle:6");
    add_common(generate_cmd, common, { "text", "dot" });
    generate_cmd->add_option("spec", spec_text, "family specification")->required();

    auto op = app.add_subcommand("op", "combine two graphs");
    add_common(op, common, { "text", "dot" });
    op->add_option("name", op_name, "union, join, cartesian, direct, strong, composition or corona")->required();
    op->add_option("--with", with_path, "second operand")->required();

    auto degree = app.add_subcommand("degree", "domination degree of one vertex");
    add_common(degree, common, { "text", "json" });
    degree->add_option("--vertex", vertex, "vertex label")->required();

    auto containing = app.add_subcommand("mds-containing", "a minimal dominating set containing a vertex");
    add_common(containing, common, { "text", "json", "dot" });
    containing->add_option("--vertex", vertex, "vertex label")->required();
    containing->add_option("--algorithm", algorithm, "greedy or exact")->check(CLI::IsMember({ "greedy", "exact" }));

    auto verify_cmd = app.add_subcommand("verify", "check published claims against computed values");
    add_common(verify_cmd, common, { "text", "json" });
    verify_cmd->add_option("--suite", suite, "suite name or all")->required();
    verify_cmd->add_option("--ledger", ledger, "write discrepancies here, one JSON object per line");

    auto facility = app.add_subcommand("facility", "hub plus placements forming a smallest minimal dominating set");
    add_common(facility, common, { "text", "json", "dot" });
    facility->add_option("--hub", vertex, "hub vertex label")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    if (common.format.empty())
        common.format = analyze->parsed() ? "json" : "text";

    try {
        std::string output;
        int status = exit_code::ok;

        if (analyze->parsed()) {
            auto g = read_graph(common.in, in, err);
            ProfileOptions options;
            options.max_exact = common.max_exact;
            auto report = make_report(g, domination_profile(g, options));
            output = common.format == "json" ? emit_report_json(report) : emit_report_text(report);
        }
        else if (generate_cmd->parsed())
            output = graph_output(generate(parse_family(spec_text)).graph, common.format);
        else if (op->parsed()) {
            auto tag = parse_operation(op_name);
            auto g = read_graph(common.in, in, err);
            auto h = read_graph(with_path, in, err);
            Graph result;
            switch (tag) {
                case OperationTag::Union:
                    {
                        std::array<Graph, 2> parts { g, h };
                        result = disjoint_union(parts).graph;
                    }
                    break;
                case OperationTag::Join:        result = join(g, h); break;
                case OperationTag::Cartesian:   result = product(g, h, ProductKind::Cartesian); break;
                case OperationTag::Direct:      result = product(g, h, ProductKind::Direct); break;
                case OperationTag::Strong:      result = product(g, h, ProductKind::Strong); break;
                case OperationTag::Composition: result = product(g, h, ProductKind::Composition); break;
                case OperationTag::Corona:      result = corona(g, h); break;
            }
            output = graph_output(result, common.format);
        }
        else if (degree->parsed()) {
            auto g = read_graph(common.in, in, err);
            auto d = domination_degree(g, g.vertex(vertex), common.max_exact);
            auto labels = sorted_labels(g, d.witness);
            if (common.format == "json")
                output = json({ { "vertex", vertex }, { "dd", d.degree }, { "witness", labels } }).dump(2) + "\n";
            else
                output = std::to_string(d.degree) + " " + joined(labels, " ") + "\n";
        }
        else if (containing->parsed()) {
            auto g = read_graph(common.in, in, err);
            require_order(g, common.max_exact);
            auto v = g.vertex(vertex);
            auto s = algorithm == "greedy" ? mds_containing_greedy(g, v) : domination_degree(g, v, common.max_exact).witness;
            output = set_output(g, s, common.format);
        }
        else if (verify_cmd->parsed()) {
            SuiteLimits limits;
            limits.max_exact = common.max_exact;
            limits.seed = common.seed;
            auto report = run_suite(suite, limits);
            if (! ledger.empty()) {
                std::ofstream file(ledger);
                if (! file)
                    throw Error("cannot write '" + ledger + "'");
                write_ledger(report, file);
            }
            err << std::fixed << std::setprecision(2) << report.seconds << " s\n";
            output = report_output(report, common.format);
            if (report.proved_failures() > 0)
                status = exit_code::proved_violation;
        }
        else if (facility->parsed()) {
            auto g = read_graph(common.in, in, err);
            auto hub = g.vertex(vertex);
            auto d = domination_degree(g, hub, common.max_exact);
            auto placements = d.witness;
            placements.erase(hub);
            auto labels = sorted_labels(g, placements);
            if (common.format == "dot")
                output = emit_dot(g, d.witness);
            else if (common.format == "json")
                output = json({ { "hub", vertex }, { "placements", labels }, { "size", d.degree } }).dump(2) + "\n";
            else
                output = "hub " + vertex + "\nplacements " + joined(labels, " ") + "\n";
        }

        if (common.out.empty() || common.out == "-")
            out << output;
        else {
            std::ofstream file(common.out);
            if (! file)
                throw Error("cannot write '" + common.out + "'");
            file << output;
        }
        return status;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_error;
    }
    catch (const ExactCapExceeded & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::cap_exceeded;
    }
    catch (const EnumerationCapExceeded & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::cap_exceeded;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
}
