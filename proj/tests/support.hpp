#pragma once

#include <urm/graph.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace urm::testing {

inline auto path(int n) -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline auto cycle(int n) -> Graph
{
    auto es = path(n).edges().as_vector();
    es.emplace_back(0, n - 1);
    return Graph(n, es);
}

/// K_{1,k}, centre 0.
inline auto star(int k) -> Graph
{
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i)
        es.emplace_back(0, i);
    return Graph(k + 1, es);
}

inline auto petersen() -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

inline auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<Vertex>
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Every graph on n labelled vertices whose edge set is a subset of K_n,
/// filtered by keep.  Only for tiny n.
template <typename F>
void for_each_labelled_graph(int n, F && visit)
{
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << all.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> deg(n, 0);
        bool ok = true;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < all.size() && ok; ++i)
            if ((mask >> i) & 1U) {
                es.push_back(all[i]);
                ok = ++deg[all[i].u] <= 3 && ++deg[all[i].v] <= 3;
            }
        if (ok)
            visit(Graph(n, es));
    }
}

/// Length of a shortest cycle by checking every vertex sequence; n <= 10.
inline auto girth_by_cycle_scan(const Graph & g) -> int
{
    const int n = g.order();
    int best = 0;
    std::vector<Vertex> seq;
    std::vector<bool> used(n, false);
    auto extend = [&](auto && self, int target) -> bool {
        if (static_cast<int>(seq.size()) == target)
            return g.adjacent(seq.back(), seq.front());
        for (auto w : g.neighbours(seq.back()))
            if (! used[w] && w > seq.front()) {
                used[w] = true;
                seq.push_back(w);
                bool found = self(self, target);
                seq.pop_back();
                used[w] = false;
                if (found)
                    return true;
            }
        return false;
    };
    for (int len = 3; len <= n && ! best; ++len)
        for (Vertex s = 0; s < n && ! best; ++s) {
            seq = {s};
            used.assign(n, false);
            used[s] = true;
            if (extend(extend, len))
                best = len;
        }
    return best;
}

/// Maximum matching size by trying every edge subset; small graphs only.
inline auto matching_number_by_subsets(const Graph & g) -> int
{
    auto es = g.edges().as_vector();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
        std::uint64_t cover = 0;
        int size = 0;
        bool ok = true;
        for (std::size_t i = 0; i < es.size() && ok; ++i)
            if ((mask >> i) & 1U) {
                auto bits = (std::uint64_t{1} << es[i].u) | (std::uint64_t{1} << es[i].v);
                ok = (cover & bits) == 0;
                cover |= bits;
                ++size;
            }
        if (ok)
            best = std::max(best, size);
    }
    return best;
}

} // namespace urm::testing
