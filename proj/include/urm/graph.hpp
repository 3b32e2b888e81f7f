#pragma once

#include <urm/error.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace urm {

/// Hard cap on the order of any graph handled by the library.  Every vertex
/// set is a single 64-bit word.
inline constexpr int max_vertices = 64;

using Vertex = int;

/// A set of vertex labels in 0..63, stored as one machine word.
class VertexSet
{
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (auto v : vs)
            insert(v);
    }

    static constexpr auto range(int n) -> VertexSet
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr auto single(Vertex v) -> VertexSet { return VertexSet(std::uint64_t{1} << v); }

    constexpr auto bits() const -> std::uint64_t { return bits_; }
    constexpr auto contains(Vertex v) const -> bool { return (bits_ >> v) & 1U; }
    constexpr auto empty() const -> bool { return bits_ == 0; }
    constexpr auto size() const -> int { return std::popcount(bits_); }
    constexpr auto first() const -> Vertex { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(bits_ | o.bits_); }
    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(bits_ & o.bits_); }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(bits_ & ~o.bits_); }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { bits_ |= o.bits_; return *this; }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { bits_ &= o.bits_; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { bits_ &= ~o.bits_; return *this; }
    constexpr auto operator==(const VertexSet &) const -> bool = default;

    constexpr auto subset_of(VertexSet o) const -> bool { return (bits_ & ~o.bits_) == 0; }

    class iterator
    {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr auto operator*() const -> Vertex { return std::countr_zero(rest_); }
        constexpr auto operator++() -> iterator & { rest_ &= rest_ - 1; return *this; }
        constexpr auto operator++(int) -> iterator { auto t = *this; ++*this; return t; }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr auto begin() const -> iterator { return iterator{bits_}; }
    constexpr auto end() const -> iterator { return iterator{0}; }

    auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// An unordered vertex pair, normalised so that u < v.
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    constexpr auto other(Vertex w) const -> Vertex { return w == u ? v : u; }
    constexpr auto touches(Vertex w) const -> bool { return w == u || w == v; }
    constexpr auto operator<=>(const Edge &) const = default;
};

/// A sorted, duplicate-free list of edges.
class EdgeSet
{
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges))
    {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

    auto size() const -> std::size_t { return edges_.size(); }
    auto empty() const -> bool { return edges_.empty(); }
    auto contains(Edge e) const -> bool { return std::binary_search(edges_.begin(), edges_.end(), e); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    auto operator[](std::size_t i) const -> const Edge & { return edges_[i]; }
    auto as_vector() const -> const std::vector<Edge> & { return edges_; }
    auto operator==(const EdgeSet &) const -> bool = default;

private:
    std::vector<Edge> edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph
{
public:
    Graph() = default;

    /// Edgeless graph of order n.
    explicit Graph(int n) : adj_(check_order(n)) {}

    Graph(int n, std::span<const Edge> edges) : adj_(check_order(n))
    {
        for (auto e : edges) {
            if (e.u < 0 || e.v >= n)
                throw precondition_error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                         " out of range for order " + std::to_string(n));
            if (e.u == e.v)
                throw precondition_error("self-loop at vertex " + std::to_string(e.u));
            if (adj_[e.u].contains(e.v))
                continue;
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
            ++m_;
        }
    }

    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    Graph(int n, const EdgeSet & edges) : Graph(n, std::span<const Edge>(edges.as_vector())) {}

    auto order() const -> int { return static_cast<int>(adj_.size()); }
    auto size() const -> int { return m_; }
    auto vertices() const -> VertexSet { return VertexSet::range(order()); }
    auto neighbours(Vertex v) const -> VertexSet { return adj_[v]; }
    auto degree(Vertex v) const -> int { return adj_[v].size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool { return adj_[u].contains(v); }
    auto has_edge(Edge e) const -> bool { return e.v < order() && adj_[e.u].contains(e.v); }

    /// All edges in ascending (u, v) order.
    auto edges() const -> EdgeSet
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return EdgeSet{std::move(out)};
    }

    auto max_degree() const -> int
    {
        int d = 0;
        for (Vertex v = 0; v < order(); ++v)
            d = std::max(d, degree(v));
        return d;
    }

    auto is_subcubic() const -> bool { return max_degree() <= 3; }

    auto is_cubic() const -> bool
    {
        for (Vertex v = 0; v < order(); ++v)
            if (degree(v) != 3)
                return false;
        return order() > 0;
    }

    /// Same vertex labels, every vertex of x isolated.
    auto without(VertexSet x) const -> Graph
    {
        Graph h = *this;
        h.m_ = 0;
        for (Vertex v = 0; v < order(); ++v) {
            h.adj_[v] = x.contains(v) ? VertexSet{} : (adj_[v] - x);
            h.m_ += h.adj_[v].size();
        }
        h.m_ /= 2;
        return h;
    }

    auto without_edge(Edge e) const -> Graph
    {
        Graph h = *this;
        if (h.adj_[e.u].contains(e.v)) {
            h.adj_[e.u].erase(e.v);
            h.adj_[e.v].erase(e.u);
            --h.m_;
        }
        return h;
    }

    /// Subgraph induced by keep, relabelled in ascending label order.  The
    /// second member maps new labels back to old ones.
    auto induced(VertexSet keep) const -> std::pair<Graph, std::vector<Vertex>>
    {
        auto labels = keep.to_vector();
        std::vector<Vertex> index(order(), -1);
        for (std::size_t i = 0; i < labels.size(); ++i)
            index[labels[i]] = static_cast<Vertex>(i);
        std::vector<Edge> es;
        for (auto e : edges())
            if (keep.contains(e.u) && keep.contains(e.v))
                es.emplace_back(index[e.u], index[e.v]);
        return {Graph(static_cast<int>(labels.size()), es), std::move(labels)};
    }

    /// Graph with vertex v renamed to perm[v].
    auto relabel(std::span<const Vertex> perm) const -> Graph
    {
        std::vector<Edge> es;
        for (auto e : edges())
            es.emplace_back(perm[e.u], perm[e.v]);
        return Graph(order(), es);
    }

    auto adjacency() const -> std::span<const VertexSet> { return adj_; }

    auto operator==(const Graph & o) const -> bool { return adj_ == o.adj_; }

private:
    static auto check_order(int n) -> std::vector<VertexSet>
    {
        if (n < 0 || n > max_vertices)
            throw size_cap_error("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
        return std::vector<VertexSet>(static_cast<std::size_t>(n));
    }

    std::vector<VertexSet> adj_;
    int m_ = 0;
};

inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto es = a.edges().as_vector();
    for (auto e : b.edges())
        es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), es);
}

/// Breadth-first distances from source; unreachable vertices get -1.
inline auto distances_from(const Graph & g, Vertex source) -> std::vector<int>
{
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> todo;
    dist[source] = 0;
    todo.push(source);
    while (! todo.empty()) {
        auto v = todo.front();
        todo.pop();
        for (auto w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                todo.push(w);
            }
    }
    return dist;
}

inline auto reachable_from(const Graph & g, Vertex source, VertexSet within) -> VertexSet
{
    VertexSet seen = VertexSet::single(source), frontier = seen;
    while (! frontier.empty()) {
        VertexSet next;
        for (auto v : frontier)
            next |= g.neighbours(v) & within;
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

/// Vertex sets of the connected components, ordered by smallest member.
inline auto components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto rest = g.vertices();
    while (! rest.empty()) {
        auto c = reachable_from(g, rest.first(), rest);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

inline auto is_connected(const Graph & g) -> bool
{
    return g.order() <= 1 || reachable_from(g, 0, g.vertices()) == g.vertices();
}

inline auto is_forest(const Graph & g) -> bool
{
    return g.size() + static_cast<int>(components(g).size()) == g.order();
}

inline auto is_tree(const Graph & g) -> bool
{
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

/// Length of a shortest cycle, or nothing for a forest.
inline auto girth(const Graph & g) -> std::optional<int>
{
    // A BFS from r that meets a non-tree edge (x, y) closes a closed walk of
    // length d(x) + d(y) + 1 through r; the minimum over all roots is the girth.
    std::optional<int> best;
    for (Vertex r = 0; r < g.order(); ++r) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<Vertex> todo;
        dist[r] = 0;
        todo.push(r);
        while (! todo.empty()) {
            auto x = todo.front();
            todo.pop();
            for (auto y : g.neighbours(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    todo.push(y);
                }
                else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (! best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

inline auto has_girth_at_least(const Graph & g, int k) -> bool
{
    auto gi = girth(g);
    return ! gi || *gi >= k;
}

struct DegreeProfile
{
    int min_degree = 0;
    int max_degree = 0;
    VertexSet degree_two;
};

inline auto degree_profile(const Graph & g) -> DegreeProfile
{
    DegreeProfile p;
    if (g.order() == 0)
        return p;
    p.min_degree = g.degree(0);
    for (Vertex v = 0; v < g.order(); ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
        if (g.degree(v) == 2)
            p.degree_two.insert(v);
    }
    return p;
}

struct BlockDecomposition
{
    /// Biconnected components; a bridge appears as a 2-vertex block.
    std::vector<VertexSet> blocks;
    EdgeSet bridges;
};

/// Hopcroft-Tarjan biconnected components.  Isolated vertices form
/// single-vertex blocks.
inline auto blocks_and_bridges(const Graph & g) -> BlockDecomposition
{
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<VertexSet> blocks;
    std::vector<Edge> bridges;
    int timer = 0;

    struct Frame
    {
        Vertex v;
        Vertex parent;
        VertexSet pending;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back(VertexSet::single(root));
            continue;
        }
        std::vector<Frame> frames{{root, -1, g.neighbours(root)}};
        disc[root] = low[root] = timer++;
        while (! frames.empty()) {
            auto & f = frames.back();
            if (! f.pending.empty()) {
                auto w = f.pending.first();
                f.pending.erase(w);
                if (w == f.parent)
                    continue;
                if (disc[w] < 0) {
                    stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, f.v, g.neighbours(w)});
                }
                else if (disc[w] < disc[f.v]) {
                    stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            auto v = f.v, p = f.parent;
            frames.pop_back();
            if (p < 0)
                continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                VertexSet block;
                int edge_count = 0;
                while (true) {
                    auto e = stack.back();
                    stack.pop_back();
                    block.insert(e.u);
                    block.insert(e.v);
                    ++edge_count;
                    if (e == Edge(p, v))
                        break;
                }
                blocks.push_back(block);
                if (edge_count == 1)
                    bridges.emplace_back(p, v);
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return {std::move(blocks), EdgeSet{std::move(bridges)}};
}

/// Edges with exactly one endpoint in x.
inline auto boundary(const Graph & g, VertexSet x) -> EdgeSet
{
    std::vector<Edge> out;
    for (auto v : x)
        for (auto w : g.neighbours(v) - x)
            out.emplace_back(v, w);
    return EdgeSet{std::move(out)};
}

struct Contraction
{
    Graph graph;
    /// old label -> new label
    std::vector<Vertex> map;
};

/// Quotient by a partition whose parts each induce a connected subgraph.
/// Parts are numbered by their smallest member; loops are dropped and
/// parallel edges merged.
inline auto contract(const Graph & g, std::span<const VertexSet> parts) -> Contraction
{
    VertexSet seen;
    for (auto p : parts) {
        if (p.empty())
            throw precondition_error("contract: empty part");
        if (! (p & seen).empty() || ! p.subset_of(g.vertices()))
            throw precondition_error("contract: parts do not partition the vertex set");
        if (reachable_from(g, p.first(), p) != p)
            throw precondition_error("contract: part with smallest vertex " + std::to_string(p.first()) +
                                     " is not connected");
        seen |= p;
    }
    if (seen != g.vertices())
        throw precondition_error("contract: parts do not cover the vertex set");

    std::vector<VertexSet> ordered(parts.begin(), parts.end());
    std::sort(ordered.begin(), ordered.end(), [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
    std::vector<Vertex> map(g.order());
    for (std::size_t i = 0; i < ordered.size(); ++i)
        for (auto v : ordered[i])
            map[v] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (map[e.u] != map[e.v])
            es.emplace_back(map[e.u], map[e.v]);
    return {Graph(static_cast<int>(ordered.size()), es), std::move(map)};
}

/// Contract only the listed parts; every other vertex stays a singleton.
inline auto contract_parts(const Graph & g, std::span<const VertexSet> parts) -> Contraction
{
    std::vector<VertexSet> all(parts.begin(), parts.end());
    VertexSet covered;
    for (auto p : parts)
        covered |= p;
    for (auto v : g.vertices() - covered)
        all.push_back(VertexSet::single(v));
    return contract(g, all);
}

} // namespace urm
