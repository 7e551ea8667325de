#ifndef DPGRAPH_DISTANCE_HPP
#define DPGRAPH_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "dpgraph/graph.hpp"

namespace dpgraph {

// Distances are small nonnegative integers; kUnreachable is a dedicated
// sentinel, never a large finite stand-in. Any arithmetic over distances
// must branch on it explicitly.
using Dist = int;
inline constexpr Dist kUnreachable = -1;

inline bool reachable(Dist d) { return d != kUnreachable; }

// All-pairs shortest path lengths. dist(i,i) = 0, symmetric, and
// dist(i,j) = 1 exactly for edges.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int order, Dist fill) : order_(order), d_(static_cast<size_t>(order) * order, fill) {}

    int order() const { return order_; }
    Dist at(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * order_ + v]; }
    Dist& at(Vertex u, Vertex v) { return d_[static_cast<size_t>(u) * order_ + v]; }

    bool all_finite() const;
    // Largest finite entry; kUnreachable when any pair is unreachable, 0 when order <= 1.
    Dist max_finite_or_unreachable() const;

private:
    int order_ = 0;
    std::vector<Dist> d_;
};

// BFS from `source` restricted to the vertices of `mask`; writes distances
// for reached in-mask vertices into out (out must have size >= order, is
// pre-filled with kUnreachable here). Source must be in mask.
void bfs_masked(const Graph& g, Vertex source, std::uint64_t mask, std::vector<Dist>& out);

DistanceMatrix bfs_distances(const Graph& g);

// K1 and the empty graph count as connected.
bool is_connected(const Graph& g);

// Max finite pairwise distance; kUnreachable for disconnected graphs, 0 for K1.
Dist diameter(const Graph& g);

Dist eccentricity(const Graph& g, Vertex v);

} // namespace dpgraph

#endif
