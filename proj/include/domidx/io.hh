/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_IO_HH
#define DOMIDX_GUARD_IO_HH 1

#include <domidx/domination.hh>
#include <domidx/graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domidx
{
    /**
     * Lines are "u v" (an edge), "u" (a vertex) or "# ..." (a comment).
     * Vertex ids follow first appearance. Duplicate edges are dropped, with
     * a note appended to warnings if it is given.
     *
     * Throws MalformedLine or SelfLoop, both carrying the line number.
     */
    auto parse_edgelist(std::string_view text, std::vector<std::string> * warnings = nullptr) -> Graph;

    /// Isolated vertices by label, then edges by (smaller label, larger label).
    auto emit_edgelist(const Graph & g) -> std::string;

    auto emit_dot(const Graph & g, const std::optional<VertexSet> & highlight = std::nullopt) -> std::string;

    struct VertexRecord
    {
        std::string label;
        std::size_t dd = 0;
        std::vector<std::string> witness;   ///< sorted

        auto operator== (const VertexRecord &) const -> bool = default;
    };

    struct ProfileReport
    {
        std::size_t n = 0, m = 0;
        bool connected = false;
        std::vector<VertexRecord> vertices;
        std::size_t gamma = 0, upper_gamma = 0;
        std::optional<std::size_t> ir, upper_ir;
        std::size_t di = 0, min_dd = 0, max_dd = 0;
        bool is_drg = false;

        auto operator== (const ProfileReport &) const -> bool = default;
    };

    auto make_report(const Graph & g, const DominationProfile & p) -> ProfileReport;

    auto emit_report_json(const ProfileReport & r) -> std::string;

    /// Throws ParseError on malformed JSON or missing fields.
    auto parse_report_json(std::string_view text) -> ProfileReport;

    /// Plain-text rendering for --format text.
    auto emit_report_text(const ProfileReport & r) -> std::string;

    auto sorted_labels(const Graph & g, const VertexSet & s) -> std::vector<std::string>;
}

#endif
