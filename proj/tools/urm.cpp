#include <urm/audit.hpp>
#include <urm/families.hpp>
#include <urm/formats.hpp>
#include <urm/matching.hpp>
#include <urm/ur.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;

namespace {

enum Exit
{
    exit_ok = 0,
    exit_false = 1,
    exit_usage = 2,
    exit_budget = 3
};

struct GraphSource
{
    std::string input;
    std::string construct;
    std::string format;
};

void add_graph_source(CLI::App * cmd, GraphSource & src, bool allow_construct = true)
{
    cmd->add_option("-i,--input", src.input, "graph file, '-' for standard input");
    if (allow_construct)
        cmd->add_option("-c,--construct", src.construct, "catalog graph name (G1..G9, H1, H2)");
    cmd->add_option("-f,--format", src.format, "input format: graph6 or edgelist");
}

auto read_text(const std::string & path) -> std::string
{
    std::ostringstream buf;
    if (path == "-")
        buf << std::cin.rdbuf();
    else {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw urm::precondition_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

auto parse_catalog_name(const std::string & s) -> urm::CatalogName
{
    auto name = urm::catalog_name_from_string(s);
    if (! name)
        throw urm::precondition_error("unknown catalog graph '" + s + "'");
    return *name;
}

auto load_graph(const GraphSource & src) -> urm::Graph
{
    if (src.input.empty() == src.construct.empty())
        throw urm::precondition_error("exactly one of --input and --construct is required");
    if (! src.construct.empty())
        return urm::construct(parse_catalog_name(src.construct)).graph;
    if (src.format.empty())
        throw urm::precondition_error("--format is required with --input");
    auto format = urm::format_from_name(src.format);
    if (format == urm::GraphFormat::dot)
        throw urm::precondition_error("dot is an output-only format");
    return urm::parse_graph(format, read_text(src.input));
}

/// Matching file: one "u v" pair per line, '#' starts a comment.
auto load_matching(const urm::Graph & g, const std::string & path) -> urm::Matching
{
    std::istringstream in(read_text(path));
    std::string line;
    std::vector<urm::Edge> es;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        long u, v;
        if (! (fields >> u)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw urm::parse_error("expected a vertex label", line_no, 1);
            continue;
        }
        std::string junk;
        if (! (fields >> v) || (fields >> junk))
            throw urm::parse_error("expected exactly two vertex labels", line_no, 1);
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
            throw urm::parse_error("edge " + std::to_string(u) + " " + std::to_string(v) + " is not valid here",
                                   line_no, 1);
        es.emplace_back(static_cast<urm::Vertex>(u), static_cast<urm::Vertex>(v));
    }
    return urm::Matching(g, urm::EdgeSet{es});
}

auto edges_json(const urm::EdgeSet & es) -> json
{
    auto out = json::array();
    for (auto e : es)
        out.push_back({e.u, e.v});
    return out;
}

auto set_json(urm::VertexSet s) -> json { return s.to_vector(); }

auto default_budget() -> std::uint64_t
{
    if (const char * env = std::getenv("URM_BUDGET"))
        try {
            return std::stoull(env);
        }
        catch (const std::exception &) {
            throw urm::precondition_error("URM_BUDGET must be a non-negative integer");
        }
    return 0;
}

auto ge_json(const urm::GEDecomposition & ge) -> json
{
    json j;
    j["nu"] = ge.nu;
    j["D"] = set_json(ge.d);
    j["A"] = set_json(ge.a);
    j["C"] = set_json(ge.c);
    auto comps = json::array();
    for (auto c : ge.d_components)
        comps.push_back(set_json(c));
    j["D_components"] = comps;
    return j;
}

struct Output
{
    bool plain = false;

    void emit(const json & j, const std::string & text) const
    {
        if (plain)
            std::cout << text;
        else
            std::cout << j.dump(2) << '\n';
    }
};

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Uniquely restricted matchings: solver, verifier and audit"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--plain", out.plain, "human-readable output instead of JSON");

    std::uint64_t budget = 0;
    std::int64_t time_ms = 0;
    auto add_budget = [&](CLI::App * cmd) {
        cmd->add_option("--budget", budget, "search node budget, 0 for none (default: $URM_BUDGET)");
        cmd->add_option("--time-ms", time_ms, "search time budget in milliseconds, 0 for none");
    };
    auto limits = [&] {
        return urm::SolveLimits{budget, std::chrono::milliseconds(time_ms)};
    };

    GraphSource src;
    std::string matching_path;

    auto * solve = app.add_subcommand("solve", "maximum uniquely restricted matching");
    add_graph_source(solve, src);
    add_budget(solve);

    auto * verify = app.add_subcommand("verify", "check that a matching is uniquely restricted");
    add_graph_source(verify, src);
    verify->add_option("-m,--matching", matching_path, "matching file, one edge per line")->required();

    auto * decompose = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
    add_graph_source(decompose, src);

    std::string construct_name, out_format = "edgelist";
    auto * construct = app.add_subcommand("construct", "emit a catalog graph");
    construct->add_option("name", construct_name, "G1..G9, H1, H2")->required();
    construct->add_option("-f,--format", out_format, "output format: graph6, edgelist or dot");

    auto * check = app.add_subcommand("check-family", "membership in the tree family and the composed family");
    add_graph_source(check, src);

    urm::AuditParameters audit_params;
    audit_params.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string audit_mode = "exhaustive", json_path, csv_path;
    bool timing = false;
    auto * audit = app.add_subcommand("audit", "check the lower bound over many graphs");
    audit->add_option("--mode", audit_mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    audit->add_option("--n-min", audit_params.n_min, "smallest order");
    audit->add_option("--n-max", audit_params.n_max, "largest order");
    audit->add_option("--seed", audit_params.seed, "random mode seed");
    audit->add_option("--samples", audit_params.sample_count, "random mode sample count");
    audit->add_option("-j,--jobs", audit_params.jobs, "worker threads")->check(CLI::PositiveNumber);
    audit->add_option("--json", json_path, "also write the full JSON report here");
    audit->add_option("--csv", csv_path, "write the records as CSV here");
    audit->add_flag("--timing", timing, "include wall time in the report");
    add_budget(audit);

    app.add_subcommand("table1", "recompute the catalog table");

    auto * render = app.add_subcommand("render", "DOT output, matching edges dashed");
    add_graph_source(render, src);
    render->add_option("-m,--matching", matching_path, "matching file to overlay");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (budget == 0)
            budget = default_budget();

        if (*solve) {
            auto g = load_graph(src);
            auto r = urm::nu_ur_exact(g, limits());
            json j;
            j["n"] = g.order();
            j["m"] = g.size();
            j["nu_ur"] = r.value;
            j["proven"] = r.proven();
            j["nodes"] = r.nodes_explored;
            j["matching"] = edges_json(r.best.edges());
            std::ostringstream text;
            text << "nu_ur " << r.value << (r.proven() ? "" : " (lower bound, budget exhausted)") << '\n';
            for (auto e : r.best.edges())
                text << e.u << ' ' << e.v << '\n';
            out.emit(j, text.str());
            return r.proven() ? exit_ok : exit_budget;
        }

        if (*verify) {
            auto g = load_graph(src);
            auto m = load_matching(g, matching_path);
            auto cycle = urm::find_alternating_cycle(g, m);
            json j;
            j["size"] = m.size();
            j["uniquely_restricted"] = ! cycle;
            j["alternating_cycle"] = cycle ? json(*cycle) : json(nullptr);
            std::ostringstream text;
            if (cycle) {
                text << "not uniquely restricted; alternating cycle:";
                for (auto v : *cycle)
                    text << ' ' << v;
                text << '\n';
            }
            else
                text << "uniquely restricted\n";
            out.emit(j, text.str());
            return cycle ? exit_false : exit_ok;
        }

        if (*decompose) {
            auto g = load_graph(src);
            auto ge = urm::gallai_edmonds(g);
            auto j = ge_json(ge);
            std::ostringstream text;
            text << "nu " << ge.nu << "\nD";
            for (auto v : ge.d)
                text << ' ' << v;
            text << "\nA";
            for (auto v : ge.a)
                text << ' ' << v;
            text << "\nC";
            for (auto v : ge.c)
                text << ' ' << v;
            text << '\n';
            out.emit(j, text.str());
            return exit_ok;
        }

        if (*construct) {
            const auto & e = urm::construct(parse_catalog_name(construct_name));
            auto serialized = urm::serialize(e.graph, urm::format_from_name(out_format));
            json j;
            j["name"] = urm::to_string(e.name);
            j["n"] = e.graph.order();
            j["m"] = e.graph.size();
            j["nu_ur"] = e.expected_nu_ur;
            j["degree2"] = set_json(e.degree2);
            j["witness_matching"] = edges_json(e.witness_matching);
            j["format"] = out_format;
            j["graph"] = serialized;
            if (! serialized.empty() && serialized.back() != '\n')
                serialized += '\n';
            out.emit(j, serialized);
            return exit_ok;
        }

        if (*check) {
            auto g = load_graph(src);
            auto t = urm::is_in_T(g);
            auto cert = urm::is_in_G(g);
            json j;
            j["in_T"] = t.has_value();
            j["in_G"] = cert.has_value();
            if (cert) {
                json c;
                c["host_tree"] = {{"n", cert->host_tree.order()}, {"edges", edges_json(cert->host_tree.edges())}};
                c["decomposition"] = ge_json(cert->ge);
                auto reps = json::array();
                for (std::size_t i = 0; i < cert->replacements.size(); ++i) {
                    const auto & r = cert->replacements[i];
                    auto att = json::array();
                    for (auto [w, b] : r.attachment)
                        att.push_back({w, b});
                    reps.push_back({{"host_vertex", r.host_vertex},
                                    {"block", urm::to_string(r.block)},
                                    {"attachment", att},
                                    {"vertices", set_json(cert->block_vertices[i])}});
                }
                c["replacements"] = reps;
                j["certificate"] = c;
            }
            std::ostringstream text;
            text << "in T: " << (t ? "yes" : "no") << "\nin G: " << (cert ? "yes" : "no") << '\n';
            if (cert) {
                text << "host tree order " << cert->host_tree.order() << '\n';
                for (const auto & r : cert->replacements)
                    text << "  vertex " << r.host_vertex << " -> " << urm::to_string(r.block) << '\n';
            }
            out.emit(j, text.str());
            return exit_ok;
        }

        if (*audit) {
            audit_params.mode = audit_mode == "random" ? urm::AuditMode::random : urm::AuditMode::exhaustive;
            audit_params.limits = limits();
            if (audit_params.mode == urm::AuditMode::random && audit_params.sample_count <= 0)
                throw urm::precondition_error("random mode needs --samples");
            auto report = urm::run_audit(audit_params);
            auto j = urm::to_json(report, timing);
            if (! json_path.empty())
                std::ofstream(json_path) << j.dump(2) << '\n';
            if (! csv_path.empty())
                std::ofstream(csv_path) << urm::to_csv(report);
            json summary = j;
            summary.erase("records");
            std::ostringstream text;
            text << "graphs " << report.records.size() << "\nviolations " << report.violations
                 << "\nbudget exceeded " << report.budget_failures << "\nzero slack " << report.equality_cases.size()
                 << "\nattaining (n-1)/3 " << report.tight_cases.size() << "\nunexplained "
                 << report.unexplained_equalities.size() << '\n';
            if (timing)
                text << "seconds " << report.wall_seconds << '\n';
            out.emit(summary, text.str());
            if (report.violations > 0 || ! report.unexplained_equalities.empty())
                return exit_false;
            return report.budget_failures > 0 ? exit_budget : exit_ok;
        }

        if (app.got_subcommand("table1")) {
            auto t = urm::table1_report();
            out.emit(urm::to_json(t), urm::to_text(t));
            return t.matches() ? exit_ok : exit_false;
        }

        if (*render) {
            auto g = load_graph(src);
            urm::EdgeSet highlight;
            if (! matching_path.empty())
                highlight = load_matching(g, matching_path).edges();
            std::cout << urm::to_dot(g, highlight);
            return exit_ok;
        }
    }
    catch (const urm::budget_exhausted & e) {
        std::cerr << "urm: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const urm::error & e) {
        std::cerr << "urm: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
