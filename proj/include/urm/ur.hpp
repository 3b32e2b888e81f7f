#pragma once

#include <urm/graph.hpp>
#include <urm/matching.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace urm {

namespace detail {

    /// Depth-first search over matched-edge states.  A state is a matched
    /// edge traversed in one direction (tail -> head); from a head, a
    /// non-matching edge leads to the tail of another matched edge.  Matched
    /// edges on the current path are kept distinct, so every closed walk found
    /// is a simple alternating cycle.
    class AlternatingSearch
    {
    public:
        AlternatingSearch(std::span<const VertexSet> adj, std::span<const Vertex> mate, VertexSet covered) :
            adj_(adj), mate_(mate), covered_(covered)
        {
        }

        /// An alternating cycle through the matched edge (tail, head), as the
        /// vertex sequence tail, head, x1, y1, ..., xk, yk with yk adjacent
        /// to tail.  Only matched edges whose smaller endpoint is at least
        /// min_label are used.
        auto cycle_through(Vertex tail, Vertex head, Vertex min_label = 0) -> std::optional<std::vector<Vertex>>
        {
            tail_ = tail;
            min_label_ = min_label;
            trail_ = {tail, head};
            if (extend_cycle(head, VertexSet{tail, head}))
                return trail_;
            return std::nullopt;
        }

        /// Is there a path from uncovered u to uncovered v, alternating
        /// non-matching, matching, ..., non-matching?  A bare edge uv counts.
        auto path_between(Vertex u, Vertex v) -> bool
        {
            target_ = v;
            return adj_[u].contains(v) || extend_path(u, VertexSet::single(u));
        }

    private:
        auto extend_cycle(Vertex head, VertexSet on_path) -> bool
        {
            for (auto x : adj_[head] & covered_) {
                if (x == mate_[head])
                    continue;
                if (x == tail_ && trail_.size() >= 4)
                    return true;
                if (on_path.contains(x))
                    continue;
                auto y = mate_[x];
                if (std::min(x, y) < min_label_)
                    continue;
                trail_.push_back(x);
                trail_.push_back(y);
                auto next = on_path;
                next.insert(x);
                next.insert(y);
                if (extend_cycle(y, next))
                    return true;
                trail_.pop_back();
                trail_.pop_back();
            }
            return false;
        }

        auto extend_path(Vertex at, VertexSet on_path) -> bool
        {
            for (auto x : (adj_[at] & covered_) - on_path) {
                if (x == mate_[at])
                    continue;
                auto y = mate_[x];
                if (on_path.contains(y))
                    continue;
                if (adj_[y].contains(target_))
                    return true;
                auto next = on_path;
                next.insert(x);
                next.insert(y);
                if (extend_path(y, next))
                    return true;
            }
            return false;
        }

        std::span<const VertexSet> adj_;
        std::span<const Vertex> mate_;
        VertexSet covered_;
        Vertex tail_ = 0, target_ = 0, min_label_ = 0;
        std::vector<Vertex> trail_;
    };

    inline void check_matching_of(const Graph & g, const Matching & m)
    {
        if (m.host_order() != g.order())
            throw invalid_matching("matching belongs to a graph of order " + std::to_string(m.host_order()) +
                                   ", not " + std::to_string(g.order()));
        for (auto e : m.edges())
            if (! g.has_edge(e))
                throw invalid_matching("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                       " is not an edge of the graph");
    }

    inline auto mates_of(const Matching & m) -> std::vector<Vertex>
    {
        std::vector<Vertex> mate(m.host_order(), -1);
        for (auto e : m.edges()) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
        return mate;
    }

} // namespace detail

/// An M-alternating cycle, if any, as a closed vertex sequence whose first
/// edge is a matching edge.
inline auto find_alternating_cycle(const Graph & g, const Matching & m) -> std::optional<std::vector<Vertex>>
{
    detail::check_matching_of(g, m);
    auto mate = detail::mates_of(m);
    detail::AlternatingSearch search(g.adjacency(), mate, m.covered());
    // each cycle is found from its matched edge with the smallest label
    for (auto e : m.edges())
        if (auto c = search.cycle_through(e.u, e.v, e.u))
            return c;
    return std::nullopt;
}

/// No other matching covers exactly the vertices covered by m; equivalently,
/// there is no m-alternating cycle.
inline auto is_uniquely_restricted(const Graph & g, const Matching & m) -> bool
{
    return ! find_alternating_cycle(g, m).has_value();
}

/// Number of perfect matchings of g[within], counting no further than limit.
inline auto count_perfect_matchings(const Graph & g, VertexSet within, int limit) -> int
{
    if (within.empty())
        return 1;
    auto v = within.first();
    int total = 0;
    for (auto w : g.neighbours(v) & within) {
        auto rest = within;
        rest.erase(v);
        rest.erase(w);
        total += count_perfect_matchings(g, rest, limit - total);
        if (total >= limit)
            return total;
    }
    return total;
}

/// Uniqueness straight from the definition: G[V(m)] has exactly one perfect
/// matching.
inline auto is_uniquely_restricted_by_definition(const Graph & g, const Matching & m) -> bool
{
    detail::check_matching_of(g, m);
    return count_perfect_matchings(g, m.covered(), 2) == 1;
}

/// See detail::AlternatingSearch::path_between.  u and v must be distinct
/// and uncovered.
inline auto has_alternating_path(const Graph & g, const Matching & m, Vertex u, Vertex v) -> bool
{
    detail::check_matching_of(g, m);
    if (u == v)
        throw precondition_error("has_alternating_path: endpoints coincide");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw precondition_error("has_alternating_path: endpoint out of range");
    if (m.covers(u) || m.covers(v))
        throw precondition_error("has_alternating_path: endpoint " + std::to_string(m.covers(u) ? u : v) +
                                 " is covered by the matching");
    auto mate = detail::mates_of(m);
    return detail::AlternatingSearch(g.adjacency(), mate, m.covered()).path_between(u, v);
}

struct SolveLimits
{
    /// 0 means unlimited.
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_time{0};
};

enum class ProofMode
{
    exact,
    oracle
};

struct URSolveResult
{
    Matching best;
    int value = 0;
    std::uint64_t nodes_explored = 0;
    ProofMode proof_mode = ProofMode::exact;
    /// Set when the budget ran out; value is then only a lower bound.
    bool budget_exhausted = false;

    auto proven() const -> bool { return ! budget_exhausted; }
};

namespace detail {

    /// Include/exclude branching over edges in ascending label order,
    /// include first.  Bound: current size plus the matching number of the
    /// undecided edges between uncovered vertices.  Because the search visits
    /// equal-size edge sets in lexicographic order and only strict
    /// improvements replace the incumbent, the first optimum found is the
    /// lexicographically smallest.
    class URBranchAndBound
    {
    public:
        using Accept = std::function<bool(const Matching &)>;

        URBranchAndBound(const Graph & g, SolveLimits limits) :
            g_(g), limits_(limits), edges_(g.edges().as_vector()), mate_(g.order(), -1), current_(g.order())
        {
            // suffix_[i][v]: neighbours of v over edges i, i+1, ...
            suffix_.assign(edges_.size() + 1, std::vector<VertexSet>(g.order()));
            for (std::size_t i = edges_.size(); i-- > 0;) {
                suffix_[i] = suffix_[i + 1];
                suffix_[i][edges_[i].u].insert(edges_[i].v);
                suffix_[i][edges_[i].v].insert(edges_[i].u);
            }
            best_ = Matching(g.order());
        }

        /// Maximise; returns the best matching found.
        auto maximise() -> URSolveResult
        {
            target_ = static_cast<int>(edges_.size()) + 1;
            incumbent_ = 0;
            start_ = std::chrono::steady_clock::now();
            branch(0);
            return {best_, best_.size(), nodes_, ProofMode::exact, aborted_};
        }

        /// Find a matching of exactly target edges accepted by accept (if
        /// given).  Matchings are never extended past target.
        auto find(int target, Accept accept) -> std::pair<std::optional<Matching>, URSolveResult>
        {
            target_ = target;
            incumbent_ = target - 1;
            accept_ = std::move(accept);
            start_ = std::chrono::steady_clock::now();
            if (target <= 0) {
                Matching empty(g_.order());
                if (! accept_ || accept_(empty))
                    return {empty, {empty, 0, 0, ProofMode::exact, false}};
                return {std::nullopt, {empty, 0, 0, ProofMode::exact, false}};
            }
            branch(0);
            URSolveResult r{best_, best_.size(), nodes_, ProofMode::exact, aborted_};
            if (found_)
                return {best_, r};
            return {std::nullopt, r};
        }

    private:
        auto out_of_budget() -> bool
        {
            if (aborted_)
                return true;
            if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes)
                aborted_ = true;
            else if (limits_.max_time.count() > 0 && (nodes_ & 1023) == 0 &&
                     std::chrono::steady_clock::now() - start_ > limits_.max_time)
                aborted_ = true;
            return aborted_;
        }

        auto upper_bound(std::size_t i) -> int
        {
            const auto & adj = suffix_[i];
            std::vector<VertexSet> rest(g_.order());
            int live = 0;
            auto covered = current_.covered();
            for (Vertex v = 0; v < g_.order(); ++v)
                if (! covered.contains(v)) {
                    rest[v] = adj[v] - covered;
                    if (! rest[v].empty())
                        ++live;
                }
            int cheap = live / 2;
            if (current_.size() + cheap <= incumbent_)
                return cheap;
            auto mate = Blossom(rest).run();
            int nu = 0;
            for (Vertex v = 0; v < g_.order(); ++v)
                if (mate[v] > v)
                    ++nu;
            return nu;
        }

        void record()
        {
            if (current_.size() > incumbent_ && (! accept_ || accept_(current_))) {
                best_ = current_;
                incumbent_ = current_.size();
                if (incumbent_ >= target_)
                    found_ = true;
            }
        }

        void branch(std::size_t i)
        {
            ++nodes_;
            if (found_ || out_of_budget())
                return;
            if (current_.size() == target_ || i == edges_.size())
                return;
            if (current_.size() + upper_bound(i) <= incumbent_)
                return;

            auto e = edges_[i];
            if (! current_.covers(e.u) && ! current_.covers(e.v)) {
                mate_[e.u] = e.v;
                mate_[e.v] = e.u;
                current_.add(e);
                AlternatingSearch search(g_.adjacency(), mate_, current_.covered());
                if (! search.cycle_through(e.u, e.v)) {
                    record();
                    branch(i + 1);
                }
                current_.remove(e);
                mate_[e.u] = mate_[e.v] = -1;
                if (found_ || aborted_)
                    return;
            }
            branch(i + 1);
        }

        const Graph & g_;
        SolveLimits limits_;
        std::vector<Edge> edges_;
        std::vector<std::vector<VertexSet>> suffix_;
        std::vector<Vertex> mate_;
        Matching current_;
        Matching best_;
        Accept accept_;
        int incumbent_ = 0;
        int target_ = 0;
        bool found_ = false;
        bool aborted_ = false;
        std::uint64_t nodes_ = 0;
        std::chrono::steady_clock::time_point start_;
    };

} // namespace detail

/// Exact uniquely restricted matching number by branch and bound.  When the
/// budget runs out the result is flagged and its value is a lower bound.
inline auto nu_ur_exact(const Graph & g, SolveLimits limits = {}) -> URSolveResult
{
    return detail::URBranchAndBound(g, limits).maximise();
}

/// Order cap for the exhaustive oracle.
inline constexpr int bruteforce_max_order = 20;

/// Enumerates every matching, groups them by covered vertex set, and keeps
/// the largest sets covered by exactly one matching.
inline auto nu_ur_bruteforce(const Graph & g) -> URSolveResult
{
    if (g.order() > bruteforce_max_order)
        throw size_cap_error("nu_ur_bruteforce: order " + std::to_string(g.order()) + " exceeds cap " +
                             std::to_string(bruteforce_max_order));
    struct Seen
    {
        int count = 0;
        std::vector<Edge> edges;
    };
    std::unordered_map<std::uint64_t, Seen> by_cover;
    std::uint64_t visited = 0;
    for_each_matching(g, [&](const std::vector<Edge> & es) {
        ++visited;
        VertexSet cover;
        for (auto e : es) {
            cover.insert(e.u);
            cover.insert(e.v);
        }
        auto & s = by_cover[cover.bits()];
        if (s.count++ == 0)
            s.edges = es;
    });
    std::vector<Edge> best;
    bool have = false;
    for (auto & [cover, s] : by_cover) {
        if (s.count != 1)
            continue;
        if (! have || s.edges.size() > best.size() || (s.edges.size() == best.size() && s.edges < best)) {
            best = s.edges;
            have = true;
        }
    }
    Matching m(g, EdgeSet{best});
    return {m, m.size(), visited, ProofMode::oracle, false};
}

/// A uniquely restricted matching of exactly required_size edges that
/// leaves x uncovered, if one exists.
inline auto ur_matching_avoiding(const Graph & g, VertexSet x, int required_size, SolveLimits limits = {})
    -> std::optional<Matching>
{
    if (! x.subset_of(g.vertices()))
        throw precondition_error("ur_matching_avoiding: vertex set not contained in the graph");
    auto h = g.without(x);
    auto [m, stats] = detail::URBranchAndBound(h, limits).find(required_size, {});
    if (stats.budget_exhausted && ! m)
        throw budget_exhausted("ur_matching_avoiding: search budget exhausted");
    if (! m)
        return std::nullopt;
    return Matching(g, m->edges());
}

/// Like ur_matching_avoiding, additionally requiring that no two vertices of
/// x are joined by an alternating path.
inline auto ur_avoiding_with_no_alt_paths(const Graph & g, VertexSet x, int required_size, SolveLimits limits = {})
    -> std::optional<Matching>
{
    if (! x.subset_of(g.vertices()))
        throw precondition_error("ur_avoiding_with_no_alt_paths: vertex set not contained in the graph");
    auto h = g.without(x);
    auto xs = x.to_vector();
    auto accept = [&](const Matching & candidate) {
        if (candidate.size() != required_size)
            return false;
        Matching in_g(g, candidate.edges());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (has_alternating_path(g, in_g, xs[i], xs[j]))
                    return false;
        return true;
    };
    auto [m, stats] = detail::URBranchAndBound(h, limits).find(required_size, accept);
    if (stats.budget_exhausted && ! m)
        throw budget_exhausted("ur_avoiding_with_no_alt_paths: search budget exhausted");
    if (! m)
        return std::nullopt;
    return Matching(g, m->edges());
}

} // namespace urm
