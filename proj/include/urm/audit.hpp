#pragma once

#include <urm/canonical.hpp>
#include <urm/families.hpp>
#include <urm/formats.hpp>
#include <urm/graph.hpp>
#include <urm/ur.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace urm {

inline constexpr int enumeration_max_order = 12;
inline constexpr int enumeration_default_order = 11;

/// Connected subcubic graphs of girth at least 5 on n vertices, one per
/// isomorphism class, sorted by canonical form.  Each graph of order n
/// arises from one of order n-1 by adding a vertex joined to 1-3 vertices
/// of degree below 3 that are pairwise at distance at least 3 (every
/// connected graph has a non-cut vertex whose removal stays in the class).
inline auto enumerate_subcubic_girth5(int n) -> std::vector<Graph>
{
    if (n > enumeration_max_order)
        throw size_cap_error("enumerate_subcubic_girth5: order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(enumeration_max_order));
    if (n <= 0)
        return {};
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const auto & g : level) {
            const int m = g.order();
            std::vector<std::vector<int>> dist(m);
            for (Vertex v = 0; v < m; ++v)
                dist[v] = distances_from(g, v);
            std::vector<Vertex> open;
            for (Vertex v = 0; v < m; ++v)
                if (g.degree(v) < 3)
                    open.push_back(v);
            auto far = [&](Vertex a, Vertex b) { return dist[a][b] < 0 || dist[a][b] >= 3; };
            auto emit = [&](std::initializer_list<Vertex> nbrs) {
                auto es = g.edges().as_vector();
                for (auto v : nbrs)
                    es.emplace_back(v, m);
                Graph h(m + 1, es);
                auto form = canonical_form(h);
                if (seen.insert(form).second)
                    next.emplace_back(std::move(form), std::move(h));
            };
            for (std::size_t a = 0; a < open.size(); ++a) {
                emit({open[a]});
                for (std::size_t b = a + 1; b < open.size(); ++b) {
                    if (! far(open[a], open[b]))
                        continue;
                    emit({open[a], open[b]});
                    for (std::size_t c = b + 1; c < open.size(); ++c)
                        if (far(open[a], open[c]) && far(open[b], open[c]))
                            emit({open[a], open[b], open[c]});
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const auto & x, const auto & y) { return x.first < y.first; });
        level.clear();
        for (auto & [form, h] : next)
            level.push_back(std::move(h));
    }
    return level;
}

/// Random connected subcubic graph of girth at least 5: a random subcubic
/// tree, then random edges between vertices of degree below 3 at distance
/// at least 4.  Deterministic under seed.
inline auto random_subcubic_girth5(int n, std::uint64_t seed) -> Graph
{
    if (n < 1)
        throw precondition_error("random_subcubic_girth5: n must be positive");
    if (n > max_vertices)
        throw size_cap_error("random_subcubic_girth5: order exceeds cap");
    std::mt19937_64 rng(seed);
    std::vector<Edge> es;
    std::vector<int> deg(n, 0);
    for (Vertex v = 1; v < n; ++v) {
        std::vector<Vertex> open;
        for (Vertex u = 0; u < v; ++u)
            if (deg[u] < 3)
                open.push_back(u);
        auto u = open[detail::draw(rng, open.size())];
        es.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    Graph g(n, es);
    auto extra = detail::draw(rng, static_cast<std::uint64_t>(n) + 1);
    for (std::uint64_t attempt = 0; attempt < 4 * extra + 4 && extra > 0; ++attempt) {
        Vertex u = static_cast<Vertex>(detail::draw(rng, n)), v = static_cast<Vertex>(detail::draw(rng, n));
        if (u == v || g.degree(u) >= 3 || g.degree(v) >= 3)
            continue;
        auto d = distances_from(g, u)[v];
        if (d >= 0 && d < 4)
            continue;
        es.emplace_back(std::min(u, v), std::max(u, v));
        g = Graph(n, es);
        --extra;
    }
    if (! is_connected(g) || ! g.is_subcubic() || ! has_girth_at_least(g, 5))
        throw error("random_subcubic_girth5: sampling failed");
    return g;
}

enum class AuditStatus
{
    ok,
    violation,
    budget_exceeded
};

inline auto to_string(AuditStatus s) -> std::string
{
    switch (s) {
    case AuditStatus::ok: return "ok";
    case AuditStatus::violation: return "violation";
    case AuditStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct AuditRecord
{
    std::string id;
    int n = 0;
    std::optional<int> girth;
    int nu = 0;
    int nu_ur = 0;
    int kappa_g = 0;
    int kappa_g3 = 0;
    int kappa_exceptional = 0;
    /// Bound times 3, so that bound = bound_thirds / 3 exactly.
    int bound_thirds = 0;
    /// (nu_ur - bound) times 3.
    int slack_thirds = 0;
    AuditStatus status = AuditStatus::ok;
    /// Connected, subcubic and girth at least 5.
    bool in_scope = false;

    auto slack_zero() const -> bool { return status == AuditStatus::ok && slack_thirds == 0; }
    /// nu_ur = (n-1)/3 exactly.
    auto attains_n_minus_1_bound() const -> bool { return status == AuditStatus::ok && 3 * nu_ur == n - 1; }
    /// Attains (n-1)/3 without a component in the family or a cubic one.
    auto unexplained_equality() const -> bool
    {
        return attains_n_minus_1_bound() && kappa_g + kappa_g3 == 0;
    }
};

/// Identifier used in reports: canonical graph6 when the order allows it.
inline auto graph_id(const Graph & g) -> std::string
{
    return g.order() <= canonical_max_order ? canonical_form(g) : to_graph6(g);
}

inline auto theorem3_bound(const Graph & g, SolveLimits limits = {}) -> AuditRecord
{
    AuditRecord r;
    r.id = graph_id(g);
    r.n = g.order();
    r.girth = girth(g);
    r.nu = matching_number(g);
    r.in_scope = is_connected(g) && g.is_subcubic() && has_girth_at_least(g, 5);

    static const Graph h1 = catalog_graph(CatalogName::H1), h2 = catalog_graph(CatalogName::H2);
    for (auto comp : components(g)) {
        auto [c, labels] = g.induced(comp);
        if (is_in_G(c))
            ++r.kappa_g;
        if (c.is_cubic() && has_girth_at_least(c, 5))
            ++r.kappa_g3;
        if (is_isomorphic(c, h1) || is_isomorphic(c, h2))
            ++r.kappa_exceptional;
    }
    auto solved = nu_ur_exact(g, limits);
    r.nu_ur = solved.value;
    r.bound_thirds = r.n - r.kappa_g - r.kappa_g3 - r.kappa_exceptional;
    r.slack_thirds = 3 * r.nu_ur - r.bound_thirds;
    if (! solved.proven())
        r.status = AuditStatus::budget_exceeded;
    else
        r.status = r.slack_thirds < 0 ? AuditStatus::violation : AuditStatus::ok;
    return r;
}

enum class AuditMode
{
    exhaustive,
    random
};

struct AuditParameters
{
    AuditMode mode = AuditMode::exhaustive;
    int n_min = 1;
    int n_max = enumeration_default_order;
    std::uint64_t seed = 0;
    int sample_count = 0;
    unsigned jobs = 1;
    SolveLimits limits;
};

struct AuditReport
{
    AuditParameters parameters;
    std::vector<AuditRecord> records;
    int violations = 0;
    int budget_failures = 0;
    /// Graphs with zero slack.
    std::vector<std::string> equality_cases;
    /// Graphs with nu_ur = (n-1)/3.
    std::vector<std::string> tight_cases;
    std::vector<std::string> unexplained_equalities;
    double wall_seconds = 0;

    auto passed() const -> bool
    {
        return violations == 0 && budget_failures == 0 && unexplained_equalities.empty();
    }
};

/// Evaluates the bound on every graph using a pool of jobs threads.  The
/// result order matches the input order.
inline auto evaluate_all(const std::vector<Graph> & graphs, unsigned jobs, SolveLimits limits = {})
    -> std::vector<AuditRecord>
{
    std::vector<AuditRecord> out(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < graphs.size(); i = next++)
            out[i] = theorem3_bound(graphs[i], limits);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(work);
    work();
    for (auto & t : pool)
        t.join();
    return out;
}

inline auto run_audit(const AuditParameters & p) -> AuditReport
{
    auto start = std::chrono::steady_clock::now();
    if (p.n_min < 1 || p.n_max < p.n_min)
        throw precondition_error("run_audit: empty order range");
    std::vector<Graph> graphs;
    if (p.mode == AuditMode::exhaustive) {
        if (p.n_max > enumeration_max_order)
            throw size_cap_error("run_audit: exhaustive mode is capped at n = " +
                                 std::to_string(enumeration_max_order));
        for (int n = p.n_min; n <= p.n_max; ++n)
            for (auto & g : enumerate_subcubic_girth5(n))
                graphs.push_back(std::move(g));
    }
    else {
        std::mt19937_64 rng(p.seed);
        for (int i = 0; i < p.sample_count; ++i) {
            auto n = p.n_min + static_cast<int>(detail::draw(rng, p.n_max - p.n_min + 1));
            graphs.push_back(random_subcubic_girth5(n, rng()));
        }
    }

    AuditReport report;
    report.parameters = p;
    report.records = evaluate_all(graphs, p.jobs, p.limits);
    std::stable_sort(report.records.begin(), report.records.end(), [](const auto & a, const auto & b) {
        return std::tie(a.n, a.id) < std::tie(b.n, b.id);
    });
    if (p.mode == AuditMode::random) {
        auto same = [](const auto & a, const auto & b) { return a.id == b.id; };
        report.records.erase(std::unique(report.records.begin(), report.records.end(), same), report.records.end());
    }
    for (const auto & r : report.records) {
        if (r.status == AuditStatus::violation)
            ++report.violations;
        if (r.status == AuditStatus::budget_exceeded)
            ++report.budget_failures;
        if (r.slack_zero())
            report.equality_cases.push_back(r.id);
        if (r.attains_n_minus_1_bound())
            report.tight_cases.push_back(r.id);
        if (r.unexplained_equality())
            report.unexplained_equalities.push_back(r.id);
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline auto to_json(const AuditRecord & r) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["girth"] = r.girth ? nlohmann::ordered_json(*r.girth) : nlohmann::ordered_json(nullptr);
    j["nu"] = r.nu;
    j["nu_ur"] = r.nu_ur;
    j["kappa_G"] = r.kappa_g;
    j["kappa_G3"] = r.kappa_g3;
    j["kappa_exceptional"] = r.kappa_exceptional;
    j["bound_thirds"] = r.bound_thirds;
    j["slack_thirds"] = r.slack_thirds;
    j["status"] = to_string(r.status);
    return j;
}

inline auto to_json(const AuditReport & report, bool with_timing = false) -> nlohmann::ordered_json
{
    const auto & p = report.parameters;
    nlohmann::ordered_json j;
    j["parameters"] = {{"mode", p.mode == AuditMode::exhaustive ? "exhaustive" : "random"},
                       {"n_min", p.n_min},
                       {"n_max", p.n_max},
                       {"seed", p.seed},
                       {"samples", p.sample_count}};
    j["counts"] = {{"graphs", report.records.size()},
                   {"violations", report.violations},
                   {"budget_exceeded", report.budget_failures},
                   {"equality_cases", report.equality_cases.size()},
                   {"tight_cases", report.tight_cases.size()},
                   {"unexplained_equalities", report.unexplained_equalities.size()}};
    j["equality_cases"] = report.equality_cases;
    j["tight_cases"] = report.tight_cases;
    j["unexplained_equalities"] = report.unexplained_equalities;
    auto & records = j["records"] = nlohmann::ordered_json::array();
    for (const auto & r : report.records)
        records.push_back(to_json(r));
    if (with_timing)
        j["wall_seconds"] = report.wall_seconds;
    return j;
}

inline auto to_csv(const AuditReport & report) -> std::string
{
    std::ostringstream out;
    out << "id,n,girth,nu,nu_ur,kappa_G,kappa_G3,kappa_exceptional,bound_thirds,slack_thirds,status\n";
    for (const auto & r : report.records) {
        out << '"';
        for (char c : r.id)
            out << (c == '"' ? std::string("\"\"") : std::string(1, c));
        out << "\"," << r.n << ',' << (r.girth ? std::to_string(*r.girth) : "") << ',' << r.nu << ',' << r.nu_ur
            << ',' << r.kappa_g << ',' << r.kappa_g3 << ',' << r.kappa_exceptional << ',' << r.bound_thirds << ','
            << r.slack_thirds << ',' << to_string(r.status) << '\n';
    }
    return out.str();
}

struct Table1Row
{
    CatalogName name;
    int n = 0;
    int nu_ur = 0;
    std::array<BStatus, 3> flags{};
    int expected_n = 0;
    int expected_nu_ur = 0;
    std::array<BStatus, 3> expected_flags{};

    auto matches() const -> bool { return n == expected_n && nu_ur == expected_nu_ur && flags == expected_flags; }
};

struct Table1Report
{
    std::vector<Table1Row> rows;

    auto matches() const -> bool
    {
        return std::all_of(rows.begin(), rows.end(), [](const auto & r) { return r.matches(); });
    }
};

/// Recomputes every row of the catalog table from scratch and pairs it with
/// the embedded expected values.
inline auto table1_report() -> Table1Report
{
    Table1Report t;
    for (auto name : block_names) {
        auto raw = catalog_data::raw(name);
        CatalogEntry e{name, Graph(raw.order, raw.edges), {}, 0, {}, {}};
        e.degree2 = degree_profile(e.graph).degree_two;
        Table1Row row{name, e.graph.order(), nu_ur_exact(e.graph).value, {}, raw.order, raw.nu_ur, raw.flags};
        for (int c = 0; c < 3; ++c)
            row.flags[c] = check_B_property(e, static_cast<BCondition>(c));
        t.rows.push_back(row);
    }
    return t;
}

inline auto to_json(const Table1Report & t) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    auto & rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto & r : t.rows) {
        nlohmann::ordered_json row;
        row["graph"] = to_string(r.name);
        row["n"] = r.n;
        row["nu_ur"] = r.nu_ur;
        row["i"] = to_string(r.flags[0]);
        row["ii"] = to_string(r.flags[1]);
        row["iii"] = to_string(r.flags[2]);
        row["matches"] = r.matches();
        if (! r.matches())
            row["expected"] = {{"n", r.expected_n},
                               {"nu_ur", r.expected_nu_ur},
                               {"i", to_string(r.expected_flags[0])},
                               {"ii", to_string(r.expected_flags[1])},
                               {"iii", to_string(r.expected_flags[2])}};
        rows.push_back(row);
    }
    j["matches"] = t.matches();
    return j;
}

inline auto to_text(const Table1Report & t) -> std::string
{
    std::ostringstream out;
    out << "H    n(H)  nu_ur(H)  (i)  (ii)  (iii)\n";
    for (const auto & r : t.rows) {
        out << to_string(r.name) << "   " << (r.n < 10 ? " " : "") << r.n << "    " << r.nu_ur << "         "
            << to_symbol(r.flags[0]) << "    " << to_symbol(r.flags[1]) << "     " << to_symbol(r.flags[2]);
        if (! r.matches())
            out << "   MISMATCH";
        out << '\n';
    }
    out << (t.matches() ? "table matches\n" : "table differs\n");
    return out.str();
}

} // namespace urm
