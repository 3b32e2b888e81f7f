#pragma once

#include <urm/graph.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace urm {

namespace detail {

    using LevelSequence = std::vector<int>;

    /// One Beyer-Hedetniemi successor step on a rooted level sequence,
    /// starting the scan at position p (or at the last non-level-1 position).
    inline auto next_rooted_tree(const LevelSequence & pred, std::optional<std::size_t> start = std::nullopt)
        -> std::optional<LevelSequence>
    {
        std::size_t p;
        if (start)
            p = *start;
        else {
            p = pred.size() - 1;
            while (pred[p] == 1)
                --p;
        }
        if (p == 0)
            return std::nullopt;
        std::size_t q = p - 1;
        while (pred[q] != pred[p] - 1)
            --q;
        LevelSequence out = pred;
        for (std::size_t i = p; i < out.size(); ++i)
            out[i] = out[i - p + q];
        return out;
    }

    /// Left subtree of the root (levels shifted down) and the rest of the
    /// tree with the left subtree removed.
    inline auto split_tree(const LevelSequence & layout) -> std::pair<LevelSequence, LevelSequence>
    {
        std::size_t m = layout.size();
        bool one_found = false;
        for (std::size_t i = 0; i < layout.size(); ++i)
            if (layout[i] == 1) {
                if (one_found) {
                    m = i;
                    break;
                }
                one_found = true;
            }
        LevelSequence left, rest{0};
        for (std::size_t i = 1; i < m; ++i)
            left.push_back(layout[i] - 1);
        for (std::size_t i = m; i < layout.size(); ++i)
            rest.push_back(layout[i]);
        return {left, rest};
    }

    /// Wright-Richmond-Odlyzko-McKay: accept the candidate if it is the
    /// canonical centre-rooted sequence of a free tree, else jump ahead.
    inline auto next_free_tree(const LevelSequence & candidate) -> std::optional<LevelSequence>
    {
        auto [left, rest] = split_tree(candidate);
        int left_height = *std::max_element(left.begin(), left.end());
        int rest_height = *std::max_element(rest.begin(), rest.end());
        bool valid = rest_height >= left_height;
        if (valid && rest_height == left_height) {
            if (left.size() > rest.size())
                valid = false;
            else if (left.size() == rest.size() && left > rest)
                valid = false;
        }
        if (valid)
            return candidate;

        std::size_t p = left.size();
        auto next = next_rooted_tree(candidate, p);
        if (next && candidate[p] > 2) {
            auto [new_left, new_rest] = split_tree(*next);
            int h = *std::max_element(new_left.begin(), new_left.end());
            std::size_t len = static_cast<std::size_t>(h) + 1;
            for (std::size_t k = 0; k < len; ++k)
                (*next)[next->size() - len + k] = static_cast<int>(k) + 1;
        }
        return next;
    }

    inline auto level_sequence_to_tree(const LevelSequence & layout) -> Graph
    {
        std::vector<Edge> es;
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < layout.size(); ++i) {
            if (! stack.empty()) {
                while (layout[stack.back()] >= layout[i])
                    stack.pop_back();
                es.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
            }
            stack.push_back(i);
        }
        return Graph(static_cast<int>(layout.size()), es);
    }

} // namespace detail

/// Calls visit once for every free tree of order n, up to isomorphism.
inline void for_each_free_tree(int n, const std::function<void(const Graph &)> & visit)
{
    if (n <= 0)
        return;
    if (n > max_vertices)
        throw size_cap_error("for_each_free_tree: order exceeds cap");
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    detail::LevelSequence layout;
    for (int i = 0; i <= n / 2; ++i)
        layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
        layout.push_back(i);
    std::optional<detail::LevelSequence> current = layout;
    while (current) {
        current = detail::next_free_tree(*current);
        if (current) {
            visit(detail::level_sequence_to_tree(*current));
            current = detail::next_rooted_tree(*current);
        }
    }
}

} // namespace urm
