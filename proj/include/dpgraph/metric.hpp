#ifndef DPGRAPH_METRIC_HPP
#define DPGRAPH_METRIC_HPP

#include <optional>
#include <set>
#include <vector>

#include "dpgraph/distance.hpp"
#include "dpgraph/graph.hpp"

namespace dpgraph {

// The set of orders k for which the host has a k-vertex isometric subgraph.
struct DpSpectrum {
    int host_order = 0;
    std::set<int> achievable;

    // Full spectrum [1, n] is exactly the dp property.
    bool is_full() const;
    std::vector<int> missing_orders() const;
};

// Consecutive spectrum members a < b with every order in between missing.
struct NonDpIntervalPair {
    int a = 0;
    int b = 0;
    bool operator==(const NonDpIntervalPair&) const = default;
};

// All A with G - A isometric in G, up to the requested size.
struct RemovalSetFamily {
    int host_order = 0;
    std::vector<VertexSet> sets; // sorted by (size, bit pattern)
};

// A deletion order whose every prefix removal leaves an isometric
// subgraph, or nullopt when none exists.
using SdpSequence = std::optional<std::vector<Vertex>>;

// d restricted to s equals d in the host for every pair of s; pairs the
// host cannot reach stay equal by the unreachable convention. Subsets of
// size <= 1 are isometric vacuously.
bool is_isometric(const Graph& host, const VertexSet& s);

// Same predicate against a precomputed host distance matrix; the workhorse
// for the exhaustive searches below.
bool is_isometric_masked(const Graph& host, const DistanceMatrix& host_dist, std::uint64_t mask);

// True if some k-subset of the vertices induces an isometric subgraph.
// Exhaustive backtracking over subsets in increasing index order with a
// monotonicity prune: once a chosen pair's distance inside the still
// eligible vertex pool exceeds its host distance, no extension can repair
// it (induced distances only grow as the pool shrinks).
bool has_isometric_subgraph_of_order(const Graph& g, const DistanceMatrix& host_dist, int k);

DpSpectrum dp_spectrum(const Graph& g);

// Internal entry point for callers that already hold verified achievable
// orders (each seed must come from a subset that passed is_isometric).
DpSpectrum dp_spectrum_seeded(const Graph& g, const DistanceMatrix& host_dist,
                              const std::set<int>& verified_orders);

bool is_dp(const Graph& g);

// Maximal gaps of the spectrum, each as its bounding pair; empty exactly
// when the spectrum is gap-free.
std::vector<NonDpIntervalPair> non_dp_interval_pairs(const DpSpectrum& spec);

// All removal sets of size <= max_size, the empty set always included.
// With require_nonempty_remainder the full vertex set is excluded.
RemovalSetFamily removal_set_family(const Graph& g, int max_size,
                                    bool require_nonempty_remainder = false);

// Lowest-index-first backtracking over deletion orders, memoised on the
// surviving vertex bitmask (orders reaching the same surviving set succeed
// or fail together). Deterministic: returns the lexicographically first
// witness order.
SdpSequence sdp_sequence(const Graph& g);

bool is_sdp(const Graph& g);

} // namespace dpgraph

#endif
