#pragma once

#include <urm/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace urm {

enum class CatalogName
{
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
    G9,
    H1,
    H2
};

inline constexpr std::array all_catalog_names{CatalogName::G1, CatalogName::G2, CatalogName::G3, CatalogName::G4,
                                              CatalogName::G5, CatalogName::G6, CatalogName::G7, CatalogName::G8,
                                              CatalogName::G9, CatalogName::H1, CatalogName::H2};

/// The nine block graphs G1..G9.
inline constexpr std::array block_names{CatalogName::G1, CatalogName::G2, CatalogName::G3,
                                        CatalogName::G4, CatalogName::G5, CatalogName::G6,
                                        CatalogName::G7, CatalogName::G8, CatalogName::G9};

inline auto to_string(CatalogName name) -> std::string
{
    constexpr std::array<const char *, 11> names{"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "H1", "H2"};
    return names[static_cast<std::size_t>(name)];
}

inline auto catalog_name_from_string(std::string_view s) -> std::optional<CatalogName>
{
    for (auto n : all_catalog_names)
        if (to_string(n) == s)
            return n;
    return std::nullopt;
}

inline auto is_block_name(CatalogName name) -> bool { return name != CatalogName::H1 && name != CatalogName::H2; }

/// Whether a Table-1 style condition holds for every qualifying vertex set,
/// fails for some, or has no qualifying set at all.
enum class BStatus
{
    holds,
    fails,
    vacuous
};

inline auto to_string(BStatus s) -> std::string
{
    switch (s) {
    case BStatus::holds: return "holds";
    case BStatus::fails: return "fails";
    case BStatus::vacuous: return "vacuous";
    }
    return "?";
}

/// Table glyph: check mark, cross, or dash.
inline auto to_symbol(BStatus s) -> std::string
{
    switch (s) {
    case BStatus::holds: return "✓";
    case BStatus::fails: return "✗";
    case BStatus::vacuous: return "-";
    }
    return "?";
}

namespace catalog_data {

    struct Raw
    {
        int order;
        std::vector<Edge> edges;
        /// Reference maximum matching for G5-G9, H1, H2; empty otherwise.
        std::vector<Edge> witness_matching;
        int nu_ur;
        std::array<BStatus, 3> flags;
    };

    // Labels.  G1, G2, H1, G5, G6: K4 branch vertices 0-3, subdivision
    // vertices 4-9, the three vertices added for G2 are 10-12, later
    // additions from 13.  G3, G7: bottom 6-cycle 0-5, top 6-cycle 6-11,
    // middle vertices 12-14, centre 15, additions from 16.  G4, H2, G8, G9:
    // bottom cycle 0-5, top cycle 6-11, middle vertices 12-17, centre 18,
    // additions from 19.

    inline auto g1_edges() -> std::vector<Edge>
    {
        return {{0, 4}, {4, 1}, {5, 1}, {5, 2}, {6, 0}, {6, 2}, {7, 0}, {7, 3}, {8, 1}, {8, 3}, {9, 2}, {9, 3}};
    }

    inline auto g2_edges() -> std::vector<Edge>
    {
        auto es = g1_edges();
        es.insert(es.end(), {{10, 7}, {11, 8}, {11, 6}, {10, 5}, {12, 4}, {12, 9}});
        return es;
    }

    inline auto g3_edges() -> std::vector<Edge>
    {
        std::vector<Edge> es{{12, 0}, {13, 2}, {14, 4}, {12, 6}, {13, 8}, {14, 10}, {15, 12}, {15, 13}, {15, 14}};
        for (int i = 0; i < 6; ++i) {
            es.emplace_back(i, (i + 1) % 6);
            es.emplace_back(6 + i, 6 + (i + 1) % 6);
        }
        return es;
    }

    inline auto g4_edges() -> std::vector<Edge>
    {
        std::vector<Edge> es{{18, 12}, {18, 14}, {18, 16}};
        for (int i = 0; i < 6; ++i) {
            es.emplace_back(i, (i + 1) % 6);
            es.emplace_back(6 + i, 6 + (i + 1) % 6);
            es.emplace_back(12 + i, i);
            es.emplace_back(12 + i, 6 + i);
        }
        return es;
    }

    inline auto plus(std::vector<Edge> base, std::initializer_list<Edge> extra) -> std::vector<Edge>
    {
        base.insert(base.end(), extra);
        return base;
    }

    constexpr auto H = BStatus::holds;
    constexpr auto F = BStatus::fails;
    constexpr auto V = BStatus::vacuous;

    inline auto raw(CatalogName name) -> Raw
    {
        switch (name) {
        case CatalogName::G1:
            return {10, g1_edges(), {}, 3, {H, H, V}};
        case CatalogName::G2:
            return {13, g2_edges(), {}, 4, {H, F, V}};
        case CatalogName::G3:
            return {16, g3_edges(), {}, 5, {H, H, H}};
        case CatalogName::G4:
            return {19, g4_edges(), {}, 6, {H, F, V}};
        case CatalogName::G5:
            return {16,
                    plus(g2_edges(), {{13, 11}, {14, 15}, {15, 12}, {13, 14}, {13, 10}}),
                    {{12, 4}, {0, 7}, {1, 8}, {2, 9}, {13, 10}},
                    5,
                    {H, V, V}};
        case CatalogName::G6:
            return {19,
                    plus(g2_edges(),
                         {{13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 13}, {13, 10}, {15, 11}, {17, 12}}),
                    {{12, 4}, {0, 7}, {1, 8}, {2, 9}, {13, 10}, {15, 11}},
                    6,
                    {H, H, V}};
        case CatalogName::G7:
            return {19,
                    plus(g3_edges(), {{16, 17}, {16, 18}, {17, 3}, {17, 11}, {18, 9}, {18, 5}}),
                    {{17, 3}, {18, 5}, {12, 0}, {13, 2}, {8, 9}, {15, 14}},
                    6,
                    {H, H, V}};
        case CatalogName::G8:
            return {22,
                    plus(g4_edges(), {{19, 20}, {20, 21}, {19, 13}, {19, 15}, {21, 17}}),
                    {{0, 12}, {4, 16}, {11, 17}, {6, 7}, {8, 9}, {2, 3}, {19, 13}},
                    7,
                    {H, V, V}};
        case CatalogName::G9:
            return {25,
                    plus(g4_edges(),
                         {{19, 20}, {20, 21}, {21, 22}, {22, 23}, {23, 24}, {24, 19}, {19, 13}, {21, 15}, {23, 17}}),
                    {{0, 12}, {11, 17}, {7, 8}, {9, 10}, {2, 3}, {18, 16}, {19, 13}, {21, 15}},
                    8,
                    {H, H, V}};
        case CatalogName::H1:
            return {14, plus(g2_edges(), {{13, 10}, {13, 11}, {13, 12}}), {{0, 7}, {1, 8}, {2, 9}, {10, 13}}, 4, {H, V, V}};
        case CatalogName::H2:
            return {20,
                    plus(g4_edges(), {{19, 13}, {19, 15}, {19, 17}}),
                    {{12, 6}, {13, 7}, {14, 8}, {15, 9}, {16, 10}, {17, 11}},
                    6,
                    {H, V, V}};
        }
        return {};
    }

} // namespace catalog_data

} // namespace urm
