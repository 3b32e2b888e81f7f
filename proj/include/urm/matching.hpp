#pragma once

#include <urm/graph.hpp>

#include <functional>
#include <optional>
#include <queue>
#include <vector>

namespace urm {

/// A set of pairwise vertex-disjoint edges of some host graph.
class Matching
{
public:
    Matching() = default;

    /// Empty matching on a host of order n.
    explicit Matching(int n) : mate_(static_cast<std::size_t>(n), -1) {}

    /// Validates that edges are edges of g and pairwise disjoint.
    Matching(const Graph & g, const EdgeSet & edges) : mate_(static_cast<std::size_t>(g.order()), -1)
    {
        for (auto e : edges) {
            if (! g.has_edge(e))
                throw invalid_matching("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                       " is not an edge of the graph");
            add(e);
        }
    }

    auto host_order() const -> int { return static_cast<int>(mate_.size()); }
    auto size() const -> int { return static_cast<int>(edges_.size()); }
    auto empty() const -> bool { return edges_.empty(); }
    auto edges() const -> EdgeSet { return EdgeSet{edges_}; }
    auto covered() const -> VertexSet { return covered_; }
    auto covers(Vertex v) const -> bool { return covered_.contains(v); }
    auto mate(Vertex v) const -> Vertex { return mate_[v]; }
    auto contains(Edge e) const -> bool { return e.v < host_order() && mate_[e.u] == e.v; }

    /// Adds e; throws if it shares a vertex with the matching.
    void add(Edge e)
    {
        if (e.v >= host_order())
            throw invalid_matching("matching edge outside host graph");
        if (covered_.contains(e.u) || covered_.contains(e.v))
            throw invalid_matching("matching edges " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                   " overlaps another matching edge");
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
        covered_.insert(e.u);
        covered_.insert(e.v);
        edges_.push_back(e);
        std::sort(edges_.begin(), edges_.end());
    }

    void remove(Edge e)
    {
        if (! contains(e))
            return;
        mate_[e.u] = mate_[e.v] = -1;
        covered_.erase(e.u);
        covered_.erase(e.v);
        edges_.erase(std::find(edges_.begin(), edges_.end(), e));
    }

    auto operator==(const Matching & o) const -> bool { return edges_ == o.edges_ && mate_.size() == o.mate_.size(); }

private:
    std::vector<Vertex> mate_;
    std::vector<Edge> edges_;
    VertexSet covered_;
};

namespace detail {

    /// Edmonds' blossom algorithm with explicit base array, O(n^3).
    class Blossom
    {
    public:
        explicit Blossom(std::span<const VertexSet> adj) :
            adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
        {
        }

        auto run() -> std::vector<Vertex>
        {
            // greedy start
            for (Vertex v = 0; v < n_; ++v)
                if (match_[v] < 0)
                    for (auto w : adj_[v])
                        if (match_[w] < 0) {
                            match_[v] = w;
                            match_[w] = v;
                            break;
                        }
            for (Vertex v = 0; v < n_; ++v)
                if (match_[v] < 0) {
                    auto end = find_path(v);
                    while (end >= 0) {
                        auto pv = parent_[end], next = match_[pv];
                        match_[end] = pv;
                        match_[pv] = end;
                        end = next;
                    }
                }
            return match_;
        }

    private:
        auto lca(Vertex a, Vertex b) -> Vertex
        {
            std::vector<bool> seen(n_, false);
            while (true) {
                a = base_[a];
                seen[a] = true;
                if (match_[a] < 0)
                    break;
                a = parent_[match_[a]];
            }
            while (true) {
                b = base_[b];
                if (seen[b])
                    return b;
                b = parent_[match_[b]];
            }
        }

        void mark_path(Vertex v, Vertex b, Vertex child)
        {
            while (base_[v] != b) {
                in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
                parent_[v] = child;
                child = match_[v];
                v = parent_[match_[v]];
            }
        }

        auto find_path(Vertex root) -> Vertex
        {
            std::fill(used_.begin(), used_.end(), false);
            std::fill(parent_.begin(), parent_.end(), -1);
            for (Vertex i = 0; i < n_; ++i)
                base_[i] = i;
            used_[root] = true;
            std::queue<Vertex> q;
            q.push(root);
            while (! q.empty()) {
                auto v = q.front();
                q.pop();
                for (auto to : adj_[v]) {
                    if (base_[v] == base_[to] || match_[v] == to)
                        continue;
                    if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                        auto b = lca(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                        mark_path(v, b, to);
                        mark_path(to, b, v);
                        for (Vertex i = 0; i < n_; ++i)
                            if (in_blossom_[base_[i]]) {
                                base_[i] = b;
                                if (! used_[i]) {
                                    used_[i] = true;
                                    q.push(i);
                                }
                            }
                    }
                    else if (parent_[to] < 0) {
                        parent_[to] = v;
                        if (match_[to] < 0)
                            return to;
                        used_[match_[to]] = true;
                        q.push(match_[to]);
                    }
                }
            }
            return -1;
        }

        std::span<const VertexSet> adj_;
        int n_;
        std::vector<Vertex> match_, parent_, base_;
        std::vector<bool> used_, in_blossom_;
    };

} // namespace detail

/// A maximum matching (Edmonds).  Any maximum matching may be returned.
inline auto maximum_matching(const Graph & g) -> Matching
{
    auto mate = detail::Blossom(g.adjacency()).run();
    Matching m(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (mate[v] > v)
            m.add(Edge(v, mate[v]));
    return m;
}

inline auto matching_number(const Graph & g) -> int { return maximum_matching(g).size(); }

/// Calls visit for every matching of g (including the empty one).  Edges are
/// considered in ascending order; visit receives the current edge list.
inline void for_each_matching(const Graph & g, const std::function<void(const std::vector<Edge> &)> & visit)
{
    auto all = g.edges().as_vector();
    std::vector<Edge> current;
    std::function<void(std::size_t, VertexSet)> go = [&](std::size_t i, VertexSet used) {
        if (i == all.size()) {
            visit(current);
            return;
        }
        go(i + 1, used);
        auto e = all[i];
        if (! used.contains(e.u) && ! used.contains(e.v)) {
            current.push_back(e);
            auto next = used;
            next.insert(e.u);
            next.insert(e.v);
            go(i + 1, next);
            current.pop_back();
        }
    };
    go(0, VertexSet{});
}

/// Gallai-Edmonds partition (D, A, C).
struct GEDecomposition
{
    VertexSet d;
    VertexSet a;
    VertexSet c;
    int nu = 0;
    /// Components of G[D], ordered by smallest vertex.
    std::vector<VertexSet> d_components;

    auto operator==(const GEDecomposition &) const -> bool = default;
};

/// D is computed from its definition: v is in D iff removing v leaves the
/// matching number unchanged.
inline auto gallai_edmonds(const Graph & g) -> GEDecomposition
{
    GEDecomposition ge;
    ge.nu = matching_number(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (matching_number(g.without(VertexSet::single(v))) == ge.nu)
            ge.d.insert(v);
    for (auto v : ge.d)
        ge.a |= g.neighbours(v);
    ge.a -= ge.d;
    ge.c = g.vertices() - ge.d - ge.a;
    auto [gd, labels] = g.induced(ge.d);
    for (auto comp : components(gd)) {
        VertexSet orig;
        for (auto v : comp)
            orig.insert(labels[v]);
        ge.d_components.push_back(orig);
    }
    return ge;
}

/// Every vertex-deleted subgraph has a perfect matching.  g must be connected.
inline auto is_factor_critical(const Graph & g) -> bool
{
    if (! is_connected(g))
        throw precondition_error("is_factor_critical: graph is not connected");
    const int n = g.order();
    if (n % 2 == 0)
        return false;
    for (Vertex v = 0; v < n; ++v)
        if (matching_number(g.without(VertexSet::single(v))) != (n - 1) / 2)
            return false;
    return true;
}

/// A maximum matching of g that leaves every vertex of x uncovered, if one
/// exists.
inline auto matching_avoiding(const Graph & g, VertexSet x) -> std::optional<Matching>
{
    if (! x.subset_of(g.vertices()))
        throw precondition_error("matching_avoiding: vertex set not contained in the graph");
    auto nu = matching_number(g);
    auto m = maximum_matching(g.without(x));
    if (m.size() != nu)
        return std::nullopt;
    return m;
}

} // namespace urm
