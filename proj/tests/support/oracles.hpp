#ifndef DPGRAPH_TESTS_ORACLES_HPP
#define DPGRAPH_TESTS_ORACLES_HPP

// Brute-force reference implementations the tests check the library
// against. Deliberately written with plain queues and adjacency scans so
// they share no code with the bitset kernels they validate.

#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "dpgraph/graph.hpp"

namespace dpgraph::oracles {

// Distances by boolean matrix powers: entry (u,v) first becomes reachable
// at power d(u,v).
inline std::vector<std::vector<int>> matrix_power_distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) {
        reach[v][v] = true;
        dist[v][v] = 0;
    }
    for (int step = 1; step <= n; ++step) {
        std::vector<std::vector<bool>> next = reach;
        for (int u = 0; u < n; ++u) {
            for (int w = 0; w < n; ++w) {
                if (!reach[u][w]) continue;
                for (int v = 0; v < n; ++v) {
                    if (g.adjacent(w, v)) next[u][v] = true;
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (next[u][v] && dist[u][v] < 0) dist[u][v] = step;
            }
        }
        reach = std::move(next);
    }
    return dist;
}

// Queue BFS over an explicit adjacency list restricted to `keep`.
inline std::vector<int> queue_bfs(const Graph& g, int source, const std::vector<bool>& keep) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    if (!keep[source]) return dist;
    std::queue<int> frontier;
    frontier.push(source);
    dist[source] = 0;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n; ++v) {
            if (keep[v] && g.adjacent(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

inline std::vector<bool> mask_to_keep(const Graph& g, std::uint64_t mask) {
    std::vector<bool> keep(g.order(), false);
    for (int v = 0; v < g.order(); ++v) keep[v] = (mask >> v) & 1;
    return keep;
}

inline bool naive_is_isometric(const Graph& host, std::uint64_t mask) {
    const int n = host.order();
    const std::vector<bool> all(n, true);
    const std::vector<bool> keep = mask_to_keep(host, mask);
    for (int u = 0; u < n; ++u) {
        if (!keep[u]) continue;
        const std::vector<int> host_dist = queue_bfs(host, u, all);
        const std::vector<int> sub_dist = queue_bfs(host, u, keep);
        for (int v = 0; v < n; ++v) {
            if (keep[v] && sub_dist[v] != host_dist[v]) return false;
        }
    }
    return true;
}

// Full-enumeration spectrum: every subset, no pruning.
inline std::set<int> naive_dp_spectrum(const Graph& g) {
    const int n = g.order();
    std::set<int> achievable;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const int k = std::popcount(mask);
        if (achievable.count(k)) continue;
        if (naive_is_isometric(g, mask)) achievable.insert(k);
    }
    return achievable;
}

// Memo-free deletion-order backtracking, lowest index first.
inline bool naive_sdp_extend(const Graph& g, std::uint64_t surviving, std::vector<int>& order) {
    if (surviving == 0) return true;
    for (int v = 0; v < g.order(); ++v) {
        if (!((surviving >> v) & 1)) continue;
        const std::uint64_t next = surviving & ~(std::uint64_t{1} << v);
        if (naive_is_isometric(g, next)) {
            order.push_back(v);
            if (naive_sdp_extend(g, next, order)) return true;
            order.pop_back();
        }
    }
    return false;
}

inline std::optional<std::vector<int>> naive_sdp_sequence(const Graph& g) {
    std::vector<int> order;
    if (naive_sdp_extend(g, full_mask(g.order()), order)) return order;
    return std::nullopt;
}

inline Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(edge_probability);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (flip(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, edge_probability, rng);
        // cheap connectivity probe without the library kernel
        std::vector<int> dist = queue_bfs(g, 0, std::vector<bool>(n, true));
        bool connected = true;
        for (int v = 0; v < n; ++v) connected = connected && (n == 0 || dist[v] >= 0);
        if (n == 0 || connected) return g;
    }
}

} // namespace dpgraph::oracles

#endif
