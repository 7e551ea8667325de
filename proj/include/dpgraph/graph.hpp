#ifndef DPGRAPH_GRAPH_HPP
#define DPGRAPH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dpgraph/errors.hpp"

namespace dpgraph {

using Vertex = int;

// One 64-bit word per adjacency row / vertex subset. Everything in this
// toolkit runs exhaustive subset searches, so graphs are capped at
// kMaxOrder vertices; graph6 interchange needs at most 62.
inline constexpr int kMaxOrder = 64;

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// All bits [0, n) set; n may be 0 or 64.
inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Calls fn(v) for each set bit of mask, lowest index first.
template <typename Fn>
void for_each_bit(std::uint64_t mask, Fn&& fn) {
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        fn(v);
    }
}

// Subset of the vertices of a graph with a fixed universe size.
struct VertexSet {
    int universe = 0;
    std::uint64_t bits = 0;

    VertexSet() = default;
    VertexSet(int universe_, std::uint64_t bits_) : universe(universe_), bits(bits_) {
        if (universe_ < 0 || universe_ > kMaxOrder) {
            throw TooLarge("VertexSet universe must be in [0, 64], got " + std::to_string(universe_));
        }
        if ((bits_ & ~full_mask(universe_)) != 0) {
            throw DimensionError("VertexSet has members outside its universe");
        }
    }
    VertexSet(int universe_, const std::vector<Vertex>& members_) : VertexSet(universe_, 0) {
        for (Vertex v : members_) {
            if (v < 0 || v >= universe_) {
                throw DimensionError("vertex " + std::to_string(v) + " outside universe of size " +
                                     std::to_string(universe_));
            }
            bits |= bit(v);
        }
    }

    static VertexSet full(int universe_) { return VertexSet(universe_, full_mask(universe_)); }
    static VertexSet empty(int universe_) { return VertexSet(universe_, std::uint64_t{0}); }

    int count() const { return std::popcount(bits); }
    bool contains(Vertex v) const { return v >= 0 && v < universe && (bits & bit(v)); }
    bool is_empty() const { return bits == 0; }

    VertexSet with(Vertex v) const { return VertexSet(universe, bits | bit(v)); }
    VertexSet without(Vertex v) const { return VertexSet(universe, bits & ~bit(v)); }
    VertexSet complement() const { return VertexSet(universe, ~bits & full_mask(universe)); }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<size_t>(count()));
        for_each_bit(bits, [&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet&) const = default;
};

// Simple undirected graph over dense vertex indices 0..n-1, one bitset
// row per vertex. Immutable after construction; safe to share across
// threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order, std::string label = {});

    int order() const { return static_cast<int>(rows_.size()); }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] & bit(v)) != 0; }
    std::uint64_t neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }

    int edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    // Construction-time only; keeps rows symmetric and loop-free.
    void add_edge(Vertex u, Vertex v);

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::uint64_t> rows_;
    std::string label_;
};

// Builds a graph from an edge list; duplicate edges collapse, the edge
// set is closed under symmetry.
Graph build_graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges,
                  std::string label = {});

// Induced subgraph re-indexed to 0..|s|-1 plus the map back to host indices.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host; // new index -> host vertex
};

InducedSubgraph induce(const Graph& g, const VertexSet& s);

// Stock graphs used throughout the tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n); // n isolated vertices

// The 8-vertex running example: C7 on vertices 0..6 plus pendant vertex 7
// attached to vertex 0. Not dp (no isometric subgraph of order 6) and not
// sdp, yet its Cartesian product with P2 is dp.
Graph c7_with_pendant();

} // namespace dpgraph

#endif
