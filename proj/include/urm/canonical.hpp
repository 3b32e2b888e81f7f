#pragma once

#include <urm/formats.hpp>
#include <urm/graph.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace urm {

/// Largest order accepted by canonical_form.  Search cost grows with the
/// automorphism group, which stays small for the subcubic graphs used here.
inline constexpr int canonical_max_order = 40;

namespace detail {

    using Colouring = std::vector<int>;

    /// Renumber keys densely, preserving their order.  Returns cell count.
    template <typename Key>
    auto renumber(const std::vector<Key> & keys, Colouring & colour) -> int
    {
        std::vector<Key> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < keys.size(); ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
        return static_cast<int>(sorted.size());
    }

    /// Colour refinement to the coarsest equitable partition finer than the
    /// input.  Cells are ordered by label-independent signatures, so the
    /// result commutes with relabelling.
    inline auto refine(const Graph & g, Colouring & colour) -> int
    {
        const int n = g.order();
        int cells = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (Vertex v = 0; v < n; ++v) {
                sig[v].assign(cells + 1, 0);
                sig[v][0] = colour[v];
                for (auto w : g.neighbours(v))
                    ++sig[v][colour[w] + 1];
            }
            int next = renumber(sig, colour);
            if (next == cells)
                return cells;
            cells = next;
        }
    }

    struct CanonSearch
    {
        const Graph & g;
        std::vector<std::uint64_t> best;
        std::vector<Vertex> best_perm;
        bool have_best = false;

        auto twins(Vertex a, Vertex b) const -> bool
        {
            auto na = g.neighbours(a), nb = g.neighbours(b);
            na.erase(b);
            nb.erase(a);
            return na == nb;
        }

        void leaf(const Colouring & colour)
        {
            const int n = g.order();
            std::vector<std::uint64_t> rows(n, 0);
            for (Vertex v = 0; v < n; ++v)
                for (auto w : g.neighbours(v))
                    rows[colour[v]] |= std::uint64_t{1} << colour[w];
            if (! have_best || rows < best) {
                best = std::move(rows);
                best_perm.assign(colour.begin(), colour.end());
                have_best = true;
            }
        }

        void search(Colouring colour, int cells)
        {
            const int n = g.order();
            if (cells == n) {
                leaf(colour);
                return;
            }
            // first non-singleton cell in colour order
            std::vector<int> count(cells, 0);
            for (auto c : colour)
                ++count[c];
            int target = 0;
            while (count[target] == 1)
                ++target;

            std::vector<Vertex> tried;
            for (Vertex v = 0; v < n; ++v) {
                if (colour[v] != target)
                    continue;
                // swapping twins is an automorphism fixing everything
                // individualised so far, so their subtrees coincide
                if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); }))
                    continue;
                tried.push_back(v);
                std::vector<int> keys(n);
                for (Vertex w = 0; w < n; ++w)
                    keys[w] = 2 * colour[w] + (colour[w] == target && w != v ? 1 : 0);
                Colouring child(n);
                renumber(keys, child);
                int child_cells = refine(g, child);
                search(std::move(child), child_cells);
            }
        }
    };

    /// Permutation taking g to its canonical labelling.
    inline auto canonical_permutation(const Graph & g) -> std::vector<Vertex>
    {
        if (g.order() > canonical_max_order)
            throw size_cap_error("canonical_form: order " + std::to_string(g.order()) + " exceeds cap " +
                                 std::to_string(canonical_max_order));
        const int n = g.order();
        if (n == 0)
            return {};
        std::vector<int> degrees(n);
        for (Vertex v = 0; v < n; ++v)
            degrees[v] = g.degree(v);
        Colouring colour(n);
        renumber(degrees, colour);
        int cells = refine(g, colour);
        CanonSearch s{g, {}, {}, false};
        s.search(std::move(colour), cells);
        return s.best_perm;
    }

} // namespace detail

/// perm[v] is the canonical label of v.
inline auto canonical_permutation(const Graph & g) -> std::vector<Vertex> { return detail::canonical_permutation(g); }

/// Canonically relabelled copy of g.
inline auto canonical_graph(const Graph & g) -> Graph
{
    auto perm = detail::canonical_permutation(g);
    return g.relabel(perm);
}

/// Byte string equal for two graphs exactly when they are isomorphic: the
/// graph6 encoding of the canonical relabelling.
inline auto canonical_form(const Graph & g) -> std::string
{
    return to_graph6(canonical_graph(g));
}

inline auto is_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    auto da = degree_profile(a), db = degree_profile(b);
    if (da.min_degree != db.min_degree || da.max_degree != db.max_degree ||
        da.degree_two.size() != db.degree_two.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace urm
