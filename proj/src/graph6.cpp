#include "dpgraph/graph6.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace dpgraph {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxOrder = 62;

size_t g6_body_bytes(int n) {
    const size_t tri_bits = static_cast<size_t>(n) * (n - 1) / 2;
    return (tri_bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) {
        throw BadHeader("empty graph6 line");
    }
    const unsigned char header = static_cast<unsigned char>(line[0]);
    if (header < kG6Offset || header > 126) {
        throw BadChar("graph6 header byte " + std::to_string(header) + " outside 63..126");
    }
    if (header == 126) {
        throw BadHeader("multi-byte graph6 headers (n > 62) are not supported");
    }
    const int n = header - kG6Offset;
    if (line.size() - 1 != g6_body_bytes(n)) {
        throw BadLength("graph6 line for n=" + std::to_string(n) + " needs " +
                        std::to_string(g6_body_bytes(n)) + " body bytes, got " +
                        std::to_string(line.size() - 1));
    }

    Graph g(n);
    size_t bit_index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit_index) {
            const unsigned char c = static_cast<unsigned char>(line[1 + bit_index / 6]);
            if (c < kG6Offset || c > 126) {
                throw BadChar("graph6 body byte " + std::to_string(c) + " outside 63..126");
            }
            const int group = c - kG6Offset;
            if (group & (1 << (5 - bit_index % 6))) g.add_edge(i, j);
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kG6MaxOrder) {
        throw TooLarge("graph6 output supports at most " + std::to_string(kG6MaxOrder) +
                       " vertices, got " + std::to_string(n));
    }
    std::string out(1 + g6_body_bytes(n), static_cast<char>(kG6Offset));
    out[0] = static_cast<char>(kG6Offset + n);
    size_t bit_index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit_index) {
            if (g.adjacent(i, j)) out[1 + bit_index / 6] += 1 << (5 - bit_index % 6);
        }
    }
    return out;
}

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        const size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph parse_edge_list(std::istream& in, bool one_indexed) {
    std::string line;
    if (!next_data_line(in, line)) {
        throw BadHeader("edge list header must be '<n> <edge count>'");
    }
    int n = 0;
    long long edge_count = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> edge_count) || n < 0 || edge_count < 0) {
            throw BadHeader("edge list header must be '<n> <edge count>', got '" + line + "'");
        }
    }
    Graph g(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (long long e = 0; e < edge_count; ++e) {
        if (!next_data_line(in, line)) {
            throw BadLength("edge list promised " + std::to_string(edge_count) +
                            " edges but ended after " + std::to_string(e));
        }
        std::istringstream entry(line);
        Vertex u = 0, v = 0;
        if (!(entry >> u >> v)) {
            throw BadLength("bad edge line: '" + line + "'");
        }
        if (one_indexed) {
            --u;
            --v;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw InvalidEdge("duplicate edge line: " + std::to_string(u) + " " +
                              std::to_string(v));
        }
        g.add_edge(u, v); // throws InvalidEdge / LoopRejected as appropriate
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<Graph> read_graph6_file(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Graph g = parse_graph6(line);
        g.set_label(line);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace dpgraph
