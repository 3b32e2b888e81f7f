#pragma once

#include <urm/error.hpp>
#include <urm/graph.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace urm {

enum class GraphFormat
{
    graph6,
    edge_list,
    dot
};

inline auto format_from_name(std::string_view name) -> GraphFormat
{
    if (name == "graph6" || name == "g6")
        return GraphFormat::graph6;
    if (name == "edgelist" || name == "edge-list")
        return GraphFormat::edge_list;
    if (name == "dot")
        return GraphFormat::dot;
    throw precondition_error("unknown graph format '" + std::string(name) + "'");
}

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63.

inline auto to_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(63 + n));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline auto from_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    auto fail = [](const std::string & msg, std::size_t pos) -> parse_error { return {msg, 1, pos + 1}; };
    if (text.starts_with(">>graph6<<"))
        throw fail("graph6 header is not supported", 0);
    if (text.empty())
        throw fail("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw fail("byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(text[i]))) +
                           " outside graph6 range 63..126", i);

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~')
        n = text[pos++] - 63;
    else {
        if (text.size() >= 2 && text[1] == '~')
            throw fail("order exceeds supported cap", 1);
        if (text.size() < 4)
            throw fail("truncated order field", text.size());
        n = (long{text[1] - 63} << 12) | (long{text[2] - 63} << 6) | long{text[3] - 63};
        pos = 4;
    }
    if (n > max_vertices)
        throw fail("order " + std::to_string(n) + " exceeds cap " + std::to_string(max_vertices), 0);

    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 > 0 ? n - 1 : 0) / 2;
    const std::size_t want = (pairs + 5) / 6;
    if (text.size() - pos != want)
        throw fail("expected " + std::to_string(want) + " data bytes for order " + std::to_string(n) + ", found " +
                       std::to_string(text.size() - pos),
                   std::min(text.size(), pos + want));

    std::vector<Edge> es;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                es.emplace_back(i, j);
        }
    if (pairs % 6 != 0) {
        int last = text.back() - 63;
        if (last & ((1 << (6 - pairs % 6)) - 1))
            throw fail("nonzero padding bits", text.size() - 1);
    }
    return Graph(static_cast<int>(n), es);
}

/// Edge list: one "u v" pair per line, 0-based.  An optional first data
/// line holding a single integer fixes the order (needed for isolated
/// vertices); otherwise the order is one more than the largest label.
/// Blank lines and lines starting with '#' are ignored.
inline auto from_edge_list(std::string_view text) -> Graph
{
    std::vector<Edge> es;
    long declared = -1;
    long largest = -1;
    bool seen_data = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        auto line = text.substr(start, stop - start);
        ++line_no;
        start = stop + 1;

        std::vector<std::pair<long, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == '#' && tokens.empty())
                break;
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t col = i;
            if (! std::isdigit(static_cast<unsigned char>(line[i])))
                throw parse_error("expected a non-negative integer", line_no, col + 1);
            long value = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                value = value * 10 + (line[i] - '0');
                if (value > 1'000'000)
                    throw parse_error("integer too large", line_no, col + 1);
                ++i;
            }
            if (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                throw parse_error("unexpected character '" + std::string(1, line[i]) + "'", line_no, i + 1);
            tokens.emplace_back(value, col);
        }
        if (tokens.empty())
            continue;
        if (tokens.size() == 1) {
            if (seen_data)
                throw parse_error("a single integer (the order) is only allowed as the first data line", line_no,
                                  tokens[0].second + 1);
            declared = tokens[0].first;
            if (declared > max_vertices)
                throw parse_error("order exceeds cap " + std::to_string(max_vertices), line_no, tokens[0].second + 1);
        }
        else if (tokens.size() == 2) {
            auto [u, cu] = tokens[0];
            auto [v, cv] = tokens[1];
            if (u == v)
                throw parse_error("self-loop", line_no, cv + 1);
            for (auto [x, c] : {tokens[0], tokens[1]}) {
                if (x >= max_vertices)
                    throw parse_error("vertex label exceeds cap " + std::to_string(max_vertices - 1), line_no, c + 1);
                if (declared >= 0 && x >= declared)
                    throw parse_error("vertex label " + std::to_string(x) + " not below declared order " +
                                          std::to_string(declared),
                                      line_no, c + 1);
            }
            largest = std::max({largest, u, v});
            es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        else
            throw parse_error("expected two vertex labels per line", line_no, tokens[2].second + 1);
        seen_data = true;
    }
    int n = static_cast<int>(declared >= 0 ? declared : largest + 1);
    return Graph(n, es);
}

inline auto to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

/// DOT rendering; edges in highlight are drawn dashed.
inline auto to_dot(const Graph & g, const EdgeSet & highlight = {}, std::string_view name = "G") -> std::string
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (auto e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (highlight.contains(e))
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline auto parse_graph(GraphFormat format, std::string_view text) -> Graph
{
    switch (format) {
    case GraphFormat::graph6: return from_graph6(text);
    case GraphFormat::edge_list: return from_edge_list(text);
    case GraphFormat::dot: break;
    }
    throw precondition_error("DOT is an output-only format");
}

inline auto serialize(const Graph & g, GraphFormat format) -> std::string
{
    switch (format) {
    case GraphFormat::graph6: return to_graph6(g);
    case GraphFormat::edge_list: return to_edge_list(g);
    case GraphFormat::dot: return to_dot(g);
    }
    return {};
}

} // namespace urm
