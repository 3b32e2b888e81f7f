#pragma once

#include <urm/canonical.hpp>
#include <urm/catalog.hpp>
#include <urm/free_trees.hpp>
#include <urm/graph.hpp>
#include <urm/matching.hpp>
#include <urm/ur.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace urm {

struct CatalogEntry
{
    CatalogName name;
    Graph graph;
    VertexSet degree2;
    int expected_nu_ur = 0;
    /// Expected status of conditions (i), (ii), (iii).
    std::array<BStatus, 3> flags{};
    /// Known maximum uniquely restricted matching, if any.
    EdgeSet witness_matching;
};

namespace detail {

    inline auto build_entry(CatalogName name) -> CatalogEntry
    {
        auto raw = catalog_data::raw(name);
        CatalogEntry e{name, Graph(raw.order, raw.edges), {}, raw.nu_ur, raw.flags, EdgeSet{raw.witness_matching}};
        auto profile = degree_profile(e.graph);
        e.degree2 = profile.degree_two;

        auto fail = [&](const std::string & what) {
            throw error("catalog entry " + to_string(name) + " violates its invariants: " + what);
        };
        if (e.graph.order() != raw.order)
            fail("order");
        if (! e.graph.is_subcubic())
            fail("not subcubic");
        if (! has_girth_at_least(e.graph, 5))
            fail("girth below 5");
        if (! is_connected(e.graph))
            fail("not connected");
        if (is_block_name(name)) {
            auto k = e.degree2.size();
            if (profile.min_degree != 2 || (k != 2 && k != 3 && k != 6))
                fail("degree-2 vertex count");
        }
        else if (! e.graph.is_cubic())
            fail("not cubic");
        auto solved = nu_ur_exact(e.graph);
        if (solved.value != raw.nu_ur)
            fail("uniquely restricted matching number " + std::to_string(solved.value) + ", expected " +
                 std::to_string(raw.nu_ur));
        if (! e.witness_matching.empty()) {
            Matching m(e.graph, e.witness_matching);
            if (m.size() != raw.nu_ur || ! is_uniquely_restricted(e.graph, m))
                fail("witness matching");
        }
        return e;
    }

} // namespace detail

/// Catalog graph by name.  Each entry is built from the embedded edge list
/// and checked (order, degrees, girth, recomputed uniquely restricted
/// matching number) once per process.
inline auto construct(CatalogName name) -> const CatalogEntry &
{
    static std::array<std::once_flag, 11> flags;
    static std::array<std::optional<CatalogEntry>, 11> entries;
    auto i = static_cast<std::size_t>(name);
    std::call_once(flags[i], [&] { entries[i] = detail::build_entry(name); });
    return *entries[i];
}

/// Raw graph only, without the verification pass.
inline auto catalog_graph(CatalogName name) -> Graph
{
    auto raw = catalog_data::raw(name);
    return Graph(raw.order, raw.edges);
}

enum class BCondition
{
    i,
    ii,
    iii
};

inline auto to_string(BCondition c) -> std::string
{
    switch (c) {
    case BCondition::i: return "i";
    case BCondition::ii: return "ii";
    case BCondition::iii: return "iii";
    }
    return "?";
}

/// Does x satisfy the side conditions of the given condition in g?
///   (i)   |x| <= 2
///   (ii)  |x| = 3, no vertex outside x has 3 neighbours in x
///   (iii) |x| = 4, as (ii), and no vertex w outside x has two neighbours
///         u, v outside x with x inside N(u) | N(v)
inline auto qualifies(const Graph & g, VertexSet x, BCondition c) -> bool
{
    auto outside = g.vertices() - x;
    auto no_triple = [&] {
        for (auto w : outside)
            if ((g.neighbours(w) & x).size() >= 3)
                return false;
        return true;
    };
    switch (c) {
    case BCondition::i: return x.size() <= 2;
    case BCondition::ii: return x.size() == 3 && no_triple();
    case BCondition::iii:
        if (x.size() != 4 || ! no_triple())
            return false;
        for (auto w : outside) {
            auto nbrs = (g.neighbours(w) & outside).to_vector();
            for (std::size_t a = 0; a < nbrs.size(); ++a)
                for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                    if (x.subset_of(g.neighbours(nbrs[a]) | g.neighbours(nbrs[b])))
                        return false;
        }
        return true;
    }
    return false;
}

/// Calls visit for every subset of pool with the given size.
template <typename F>
void for_each_subset(VertexSet pool, int size, F && visit)
{
    auto members = pool.to_vector();
    const int k = static_cast<int>(members.size());
    if (size < 0 || size > k)
        return;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s;
        for (auto i : idx)
            s.insert(members[i]);
        visit(s);
        int j = size - 1;
        while (j >= 0 && idx[j] == k - size + j)
            --j;
        if (j < 0)
            return;
        ++idx[j];
        for (int t = j + 1; t < size; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

/// Exhaustive check over subsets of the degree-2 vertices: vacuous when no
/// subset qualifies, holds when every qualifying subset can be avoided by a
/// maximum uniquely restricted matching, fails otherwise.
inline auto check_B_property(const CatalogEntry & entry, BCondition c) -> BStatus
{
    const auto & g = entry.graph;
    auto nu_ur = nu_ur_exact(g).value;
    bool any = false, all = true;
    std::vector<int> sizes = c == BCondition::i ? std::vector<int>{0, 1, 2}
                                                : std::vector<int>{c == BCondition::ii ? 3 : 4};
    for (auto size : sizes)
        for_each_subset(entry.degree2, size, [&](VertexSet x) {
            if (! all || ! qualifies(g, x, c))
                return;
            any = true;
            if (! ur_matching_avoiding(g, x, nu_ur))
                all = false;
        });
    if (! any)
        return BStatus::vacuous;
    return all ? BStatus::holds : BStatus::fails;
}

/// Trees with matching number (n-1)/3 whose A-vertices have degree at most
/// 3.  Returns the decomposition on membership.
inline auto is_in_T(const Graph & t) -> std::optional<GEDecomposition>
{
    if (! is_tree(t) || (t.order() - 1) % 3 != 0)
        return std::nullopt;
    if (matching_number(t) != (t.order() - 1) / 3)
        return std::nullopt;
    auto ge = gallai_edmonds(t);
    for (auto a : ge.a)
        if (t.degree(a) > 3)
            return std::nullopt;
    return ge;
}

/// All trees of order at most max_n in the tree family, one per isomorphism
/// class, in order of increasing size.
inline auto generate_T(int max_n) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for_each_free_tree(n, [&](const Graph & t) {
            if (is_in_T(t))
                out.push_back(t);
        });
    return out;
}

/// One replaced host vertex.  attachment pairs each host-tree neighbour of
/// host_vertex with a degree-2 vertex of the block, in catalog labels.
struct Replacement
{
    Vertex host_vertex = 0;
    CatalogName block = CatalogName::G1;
    std::vector<std::pair<Vertex, Vertex>> attachment;

    auto operator==(const Replacement &) const -> bool = default;
};

struct FamilyCertificate
{
    Graph host_tree;
    GEDecomposition ge;
    std::vector<Replacement> replacements;
    /// Vertices of each replacement block in the certified graph (same order
    /// as replacements).
    std::vector<VertexSet> block_vertices;
};

struct Composition
{
    Graph graph;
    /// New label of every host vertex that was kept, -1 for replaced ones.
    std::vector<Vertex> host_label;
    /// Vertices of each block, in replacement order.
    std::vector<VertexSet> block_vertices;
};

/// Builds the graph obtained from host tree t by replacing each listed D
/// vertex by its block.  Kept tree vertices come first in ascending order,
/// then each block in replacement order with its catalog labels.
inline auto compose(const Graph & t, const GEDecomposition & ge, std::span<const Replacement> replacements)
    -> Composition
{
    VertexSet replaced;
    for (const auto & r : replacements) {
        auto where = "replacement of host vertex " + std::to_string(r.host_vertex) + ": ";
        if (r.host_vertex < 0 || r.host_vertex >= t.order())
            throw precondition_error(where + "vertex out of range");
        if (! ge.d.contains(r.host_vertex))
            throw precondition_error(where + "vertex is not in D of the host tree");
        if (replaced.contains(r.host_vertex))
            throw precondition_error(where + "vertex replaced twice");
        if (! is_block_name(r.block))
            throw precondition_error(where + to_string(r.block) + " is not a block graph");
        replaced.insert(r.host_vertex);
    }
    int n = t.order() - replaced.size();
    std::vector<Vertex> label(t.order(), -1);
    {
        Vertex next = 0;
        for (Vertex v = 0; v < t.order(); ++v)
            if (! replaced.contains(v))
                label[v] = next++;
    }
    std::vector<Edge> es;
    for (auto e : t.edges())
        if (! replaced.contains(e.u) && ! replaced.contains(e.v))
            es.emplace_back(label[e.u], label[e.v]);

    std::vector<VertexSet> blocks;
    for (const auto & r : replacements) {
        auto where = "replacement of host vertex " + std::to_string(r.host_vertex) + ": ";
        auto block = catalog_graph(r.block);
        auto degree2 = degree_profile(block).degree_two;
        auto nbrs = t.neighbours(r.host_vertex);
        if (nbrs.size() > degree2.size())
            throw precondition_error(where + "degree " + std::to_string(nbrs.size()) + " exceeds the " +
                                     std::to_string(degree2.size()) + " degree-2 vertices of " + to_string(r.block));
        if (! (nbrs & replaced).empty())
            throw precondition_error(where + "a neighbour is replaced as well");
        VertexSet sources, targets;
        for (auto [host_nbr, target] : r.attachment) {
            if (host_nbr < 0 || host_nbr >= t.order() || ! nbrs.contains(host_nbr))
                throw precondition_error(where + "attachment source " + std::to_string(host_nbr) +
                                         " is not a neighbour");
            if (sources.contains(host_nbr))
                throw precondition_error(where + "neighbour " + std::to_string(host_nbr) + " attached twice");
            if (target < 0 || target >= block.order() || ! degree2.contains(target))
                throw precondition_error(where + "attachment target " + std::to_string(target) +
                                         " is not a degree-2 vertex of " + to_string(r.block));
            if (targets.contains(target))
                throw precondition_error(where + "attachment is not injective");
            sources.insert(host_nbr);
            targets.insert(target);
        }
        if (sources != nbrs)
            throw precondition_error(where + "every neighbour must be attached");

        Vertex offset = n;
        if (n + block.order() > max_vertices)
            throw size_cap_error("compose: result exceeds " + std::to_string(max_vertices) + " vertices");
        for (auto e : block.edges())
            es.emplace_back(e.u + offset, e.v + offset);
        for (auto [host_nbr, target] : r.attachment)
            es.emplace_back(label[host_nbr], target + offset);
        blocks.push_back(VertexSet::range(n + block.order()) - VertexSet::range(n));
        n += block.order();
    }
    return {Graph(n, es), std::move(label), std::move(blocks)};
}

inline auto replace_vertex(const Graph & t, const GEDecomposition & ge, Vertex u, const CatalogEntry & entry,
                           std::vector<std::pair<Vertex, Vertex>> assignment) -> Graph
{
    Replacement r{u, entry.name, std::move(assignment)};
    return compose(t, ge, std::span<const Replacement>(&r, 1)).graph;
}

namespace detail {

    struct BlockIdentity
    {
        CatalogName name;
        std::string form;
        std::vector<Vertex> canon; // catalog vertex -> canonical label
    };

    inline auto block_identities() -> const std::vector<BlockIdentity> &
    {
        static const std::vector<BlockIdentity> ids = [] {
            std::vector<BlockIdentity> out;
            for (auto name : block_names) {
                auto g = catalog_graph(name);
                auto perm = urm::canonical_permutation(g);
                out.push_back({name, to_graph6(g.relabel(perm)), perm});
            }
            return out;
        }();
        return ids;
    }

    inline auto all_family_trees(int max_n) -> const std::vector<Graph> &
    {
        static std::mutex lock;
        static std::map<int, std::vector<Graph>> cache;
        std::lock_guard guard(lock);
        auto it = cache.find(max_n);
        if (it == cache.end())
            it = cache.emplace(max_n, generate_T(max_n)).first;
        return it->second;
    }

    /// Uniform integer in [0, bound) from a fully specified engine, so that
    /// samples are identical across standard libraries.
    inline auto draw(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t { return rng() % bound; }

} // namespace detail

/// Recognises members of the composed family: every non-bridge block must be
/// a catalog block, blocks must be disjoint and attached through distinct
/// degree-2 vertices, and contracting the blocks must give a tree of the
/// tree family in which each block is a D vertex.
inline auto is_in_G(const Graph & g) -> std::optional<FamilyCertificate>
{
    if (g.order() == 0)
        return std::nullopt;
    if (! is_connected(g))
        throw precondition_error("is_in_G: graph is not connected");

    auto decomposition = blocks_and_bridges(g);
    std::vector<VertexSet> blocks;
    std::vector<std::pair<CatalogName, std::vector<Vertex>>> identified; // name, block-local -> catalog label
    VertexSet used;
    for (auto b : decomposition.blocks) {
        if (b.size() <= 2)
            continue;
        if (! (b & used).empty())
            return std::nullopt;
        used |= b;
        auto [h, labels] = g.induced(b);
        if (h.order() > canonical_max_order)
            return std::nullopt;
        auto perm = canonical_permutation(h);
        auto form = to_graph6(h.relabel(perm));
        const detail::BlockIdentity * match = nullptr;
        for (const auto & id : detail::block_identities())
            if (id.form == form)
                match = &id;
        if (! match)
            return std::nullopt;
        // block-local vertex -> canonical label -> catalog vertex
        std::vector<Vertex> from_canon(h.order());
        for (Vertex c = 0; c < h.order(); ++c)
            from_canon[match->canon[c]] = c;
        std::vector<Vertex> to_catalog(h.order());
        for (Vertex v = 0; v < h.order(); ++v)
            to_catalog[v] = from_canon[perm[v]];
        blocks.push_back(b);
        identified.emplace_back(match->name, std::move(to_catalog));
    }

    // attachments: one outside edge per degree-2 block vertex, none elsewhere
    for (auto b : blocks)
        for (auto v : b) {
            int inside = (g.neighbours(v) & b).size(), outside = (g.neighbours(v) - b).size();
            if (outside > (inside == 2 ? 1 : 0))
                return std::nullopt;
        }

    auto quotient = contract_parts(g, blocks);
    auto ge = is_in_T(quotient.graph);
    if (! ge)
        return std::nullopt;

    FamilyCertificate cert{quotient.graph, *ge, {}, {}};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto b = blocks[i];
        auto host = quotient.map[b.first()];
        if (! ge->d.contains(host) || ! quotient.graph.neighbours(host).subset_of(ge->a))
            return std::nullopt;
        auto local = b.to_vector();
        Replacement r{host, identified[i].first, {}};
        for (std::size_t k = 0; k < local.size(); ++k)
            for (auto w : g.neighbours(local[k]) - b)
                r.attachment.emplace_back(quotient.map[w], identified[i].second[k]);
        std::sort(r.attachment.begin(), r.attachment.end());
        cert.replacements.push_back(std::move(r));
        cert.block_vertices.push_back(b);
    }
    return cert;
}

struct RandomComposition
{
    Graph graph;
    FamilyCertificate certificate;
};

/// Random member of the composed family with at most max_n vertices: a
/// random host tree, each D vertex independently considered for
/// replacement by a random fitting block with a random injective
/// attachment.  Deterministic under seed.
inline auto compose_random(int max_n, std::uint64_t seed) -> RandomComposition
{
    if (max_n < 1)
        throw precondition_error("compose_random: max_n must be positive");
    std::mt19937_64 rng(seed);
    const auto & trees = detail::all_family_trees(std::min(max_n, 16));
    while (true) {
        const auto & t = trees[detail::draw(rng, trees.size())];
        auto ge = *is_in_T(t);
        auto order = ge.d.to_vector();
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[detail::draw(rng, i)]);

        int n = t.order();
        std::vector<Replacement> reps;
        for (auto u : order) {
            if (detail::draw(rng, 3) == 0)
                continue;
            std::vector<CatalogName> fitting;
            for (auto name : block_names) {
                auto raw = catalog_data::raw(name);
                auto k = degree_profile(Graph(raw.order, raw.edges)).degree_two.size();
                if (k >= t.degree(u) && n + raw.order - 1 <= max_n)
                    fitting.push_back(name);
            }
            if (fitting.empty())
                continue;
            auto name = fitting[detail::draw(rng, fitting.size())];
            auto targets = degree_profile(catalog_graph(name)).degree_two.to_vector();
            for (std::size_t i = targets.size(); i > 1; --i)
                std::swap(targets[i - 1], targets[detail::draw(rng, i)]);
            Replacement r{u, name, {}};
            std::size_t k = 0;
            for (auto w : t.neighbours(u))
                r.attachment.emplace_back(w, targets[k++]);
            n += catalog_graph(name).order() - 1;
            reps.push_back(std::move(r));
        }
        std::sort(reps.begin(), reps.end(), [](const auto & a, const auto & b) { return a.host_vertex < b.host_vertex; });
        auto composed = compose(t, ge, reps);
        if (! has_girth_at_least(composed.graph, 5))
            continue;
        FamilyCertificate cert{t, ge, std::move(reps), std::move(composed.block_vertices)};
        return {std::move(composed.graph), std::move(cert)};
    }
}

/// Result of contracting a neighbourhood of a tree in the family.
struct TreeContraction
{
    Graph tree;
    GEDecomposition ge;
    /// The merged vertex.
    Vertex merged = 0;
    /// old label -> new label
    std::vector<Vertex> map;
    /// D' = {merged} + map(D \ N(contracted)) and A' = map(A \ contracted)
    bool formula_holds = false;
};

namespace detail {

    inline auto contract_around(const Graph & t, const GEDecomposition & ge, VertexSet centres) -> TreeContraction
    {
        VertexSet part = centres;
        for (auto c : centres)
            part |= t.neighbours(c);
        auto q = contract_parts(t, std::span<const VertexSet>(&part, 1));
        TreeContraction out;
        out.tree = q.graph;
        out.map = q.map;
        out.merged = q.map[part.first()];
        out.ge = gallai_edmonds(out.tree);

        VertexSet expect_d = VertexSet::single(out.merged), expect_a;
        for (auto v : ge.d - part)
            expect_d.insert(q.map[v]);
        for (auto v : ge.a - centres)
            expect_a.insert(q.map[v]);
        out.formula_holds = out.ge.d == expect_d && out.ge.a == expect_a;
        return out;
    }

    inline void require_family_tree(const Graph & t, const GEDecomposition & ge, const char * op)
    {
        auto fresh = is_in_T(t);
        if (! fresh)
            throw precondition_error(std::string(op) + ": graph is not a tree of the family");
        if (fresh->d != ge.d || fresh->a != ge.a)
            throw precondition_error(std::string(op) + ": decomposition does not belong to the tree");
    }

} // namespace detail

/// Contract the three edges at an A vertex v.
inline auto contract_claw(const Graph & t, const GEDecomposition & ge, Vertex v) -> TreeContraction
{
    detail::require_family_tree(t, ge, "contract_claw");
    if (v < 0 || v >= t.order() || ! ge.a.contains(v))
        throw precondition_error("contract_claw: vertex is not in A");
    if (t.degree(v) != 3)
        throw precondition_error("contract_claw: vertex does not have degree 3");
    return detail::contract_around(t, ge, VertexSet::single(v));
}

/// Contract all edges at two A vertices sharing exactly one neighbour.
inline auto contract_double(const Graph & t, const GEDecomposition & ge, Vertex v1, Vertex v2) -> TreeContraction
{
    detail::require_family_tree(t, ge, "contract_double");
    for (auto v : {v1, v2})
        if (v < 0 || v >= t.order() || ! ge.a.contains(v))
            throw precondition_error("contract_double: vertex " + std::to_string(v) + " is not in A");
    if (v1 == v2)
        throw precondition_error("contract_double: vertices coincide");
    if ((t.neighbours(v1) & t.neighbours(v2)).size() != 1)
        throw precondition_error("contract_double: vertices must share exactly one neighbour");
    return detail::contract_around(t, ge, VertexSet{v1, v2});
}

} // namespace urm
