#include "dpgraph/graph.hpp"

#include <algorithm>

namespace dpgraph {

Graph::Graph(int order, std::string label) : label_(std::move(label)) {
    if (order < 0) {
        throw InvalidEdge("graph order must be nonnegative");
    }
    if (order > kMaxOrder) {
        throw TooLarge("graphs larger than " + std::to_string(kMaxOrder) +
                       " vertices are not supported, got " + std::to_string(order));
    }
    rows_.assign(static_cast<size_t>(order), 0);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || u >= order() || v < 0 || v >= order()) {
        throw InvalidEdge("edge endpoint out of range: (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") in graph of order " + std::to_string(order()));
    }
    if (u == v) {
        throw LoopRejected("loop edge (" + std::to_string(u) + ", " + std::to_string(u) +
                           ") rejected");
    }
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto row : rows_) total += std::popcount(row);
    return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u) {
        for_each_bit(rows_[u] & ~full_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

Graph build_graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges,
                  std::string label) {
    Graph g(order, std::move(label));
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

InducedSubgraph induce(const Graph& g, const VertexSet& s) {
    if (s.universe != g.order()) {
        throw DimensionError("vertex set universe " + std::to_string(s.universe) +
                             " does not match graph order " + std::to_string(g.order()));
    }
    InducedSubgraph out;
    out.to_host = s.members();
    Graph sub(static_cast<int>(out.to_host.size()));
    for (int i = 0; i < sub.order(); ++i) {
        for (int j = i + 1; j < sub.order(); ++j) {
            if (g.adjacent(out.to_host[i], out.to_host[j])) sub.add_edge(i, j);
        }
    }
    out.graph = std::move(sub);
    return out;
}

Graph path_graph(int n) {
    Graph g(n, "P" + std::to_string(n));
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw InvalidEdge("cycle graphs need at least 3 vertices");
    }
    Graph g(n, "C" + std::to_string(n));
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n, "K" + std::to_string(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph empty_graph(int n) { return Graph(n, "E" + std::to_string(n)); }

Graph c7_with_pendant() {
    Graph g(8, "C7+e");
    for (Vertex v = 0; v < 7; ++v) g.add_edge(v, (v + 1) % 7);
    g.add_edge(0, 7);
    return g;
}

} // namespace dpgraph
