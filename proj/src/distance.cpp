#include "dpgraph/distance.hpp"

#include <algorithm>

namespace dpgraph {

bool DistanceMatrix::all_finite() const {
    return std::all_of(d_.begin(), d_.end(), [](Dist d) { return d != kUnreachable; });
}

Dist DistanceMatrix::max_finite_or_unreachable() const {
    Dist best = 0;
    for (Dist d : d_) {
        if (d == kUnreachable) return kUnreachable;
        best = std::max(best, d);
    }
    return best;
}

void bfs_masked(const Graph& g, Vertex source, std::uint64_t mask, std::vector<Dist>& out) {
    std::fill(out.begin(), out.end(), kUnreachable);
    std::uint64_t frontier = bit(source) & mask;
    std::uint64_t visited = frontier;
    Dist d = 0;
    while (frontier) {
        for_each_bit(frontier, [&](int v) { out[v] = d; });
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & mask & ~visited;
        visited |= frontier;
        ++d;
    }
}

DistanceMatrix bfs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dist(n, kUnreachable);
    std::vector<Dist> row(static_cast<size_t>(n));
    const std::uint64_t all = full_mask(n);
    for (Vertex s = 0; s < n; ++s) {
        bfs_masked(g, s, all, row);
        for (Vertex v = 0; v < n; ++v) dist.at(s, v) = row[v];
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<Dist> row(static_cast<size_t>(n));
    bfs_masked(g, 0, full_mask(n), row);
    return std::all_of(row.begin(), row.end(), [](Dist d) { return d != kUnreachable; });
}

Dist diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    return bfs_distances(g).max_finite_or_unreachable();
}

Dist eccentricity(const Graph& g, Vertex v) {
    const int n = g.order();
    std::vector<Dist> row(static_cast<size_t>(n));
    bfs_masked(g, v, full_mask(n), row);
    Dist best = 0;
    for (Dist d : row) {
        if (d == kUnreachable) return kUnreachable;
        best = std::max(best, d);
    }
    return best;
}

} // namespace dpgraph
