/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_FAMILIES_HH
#define DOMIDX_GUARD_FAMILIES_HH 1

#include <domidx/graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace domidx
{
    namespace family
    {
        struct Complete { std::size_t n; };
        struct CompleteMultipartite { std::vector<std::size_t> parts; };
        struct Star { std::size_t n; };               ///< K_{1,n}, order n + 1
        struct Path { std::size_t n; };               ///< order n, positions 1..n
        struct Cycle { std::size_t n; };
        struct Wheel { std::size_t n; };              ///< K_1 + C_n
        struct Book { std::size_t n; };               ///< K_{1,n} x P_2
        struct Windmill { std::size_t r, s; };        ///< s copies of K_r sharing one vertex
        struct Kragujevac { std::vector<std::size_t> branches; };
        struct Petersen { };
        struct Herschel { };
        struct Grotzsch { };
    }

    using FamilySpec = std::variant<family::Complete, family::CompleteMultipartite, family::Star, family::Path,
          family::Cycle, family::Wheel, family::Book, family::Windmill, family::Kragujevac,
          family::Petersen, family::Herschel, family::Grotzsch>;

    enum class RoleKind
    {
        Center,
        Rim,
        Leaf,
        Spine,          ///< path vertex; index is its 1-based position
        BranchVertex,   ///< Kragujevac branch root or middle vertex; index is the branch
        Generic
    };

    struct Role
    {
        RoleKind kind = RoleKind::Generic;
        std::size_t index = 0;

        auto operator== (const Role &) const -> bool = default;
    };

    auto role_name(RoleKind kind) -> std::string_view;

    struct GeneratedGraph
    {
        Graph graph;
        std::vector<Role> roles;
    };

    /// Throws InvalidFamilyParams when the parameters are out of range.
    auto validate(const FamilySpec & spec) -> void;

    auto generate(const FamilySpec & spec) -> GeneratedGraph;

    /// Parses strings such as "cycle:9", "multipartite:2,3,4", "windmill:r=3,s=4", "kragujevac:2,2,3".
    auto parse_family(std::string_view text) -> FamilySpec;

    auto describe(const FamilySpec & spec) -> std::string;

    /**
     * Closed-form domination degree of a vertex of generate(spec). Returns
     * std::nullopt for paths of order 3k + 2, which have two competing
     * formulas; see path_degree_variants.
     */
    auto predicted_degree(const FamilySpec & spec, Vertex v) -> std::optional<std::size_t>;

    auto predicted_degree(const FamilySpec & spec, const Role & role) -> std::optional<std::size_t>;

    /// Closed-form domination index; std::nullopt in the same contested cases.
    auto predicted_index(const FamilySpec & spec) -> std::optional<std::size_t>;

    /// The two competing readings for a path of order n = 3k + 2.
    struct PathVariants
    {
        std::size_t statement;
        std::size_t proof;
    };

    /// Per-vertex readings for 1-based position i: statement gives k + 2 at multiples of 3, proof gives k + 1 there.
    auto path_degree_variants(std::size_t n, std::size_t position) -> PathVariants;

    /// Index readings: statement k(k+1) + 2(k+1)^2, proof k(k+2) + 2(k+1)^2.
    auto path_index_variants(std::size_t n) -> PathVariants;

    /// The published windmill index 1 + r s^2, which counts r non-centre vertices per blade.
    auto windmill_published_index(std::size_t r, std::size_t s) -> std::size_t;

    auto is_tree_family(const FamilySpec & spec) -> bool;
}

#endif
