#ifndef DPGRAPH_CATALOG_HPP
#define DPGRAPH_CATALOG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dpgraph/graph.hpp"

namespace dpgraph {

// Largest order the internal labeled-graph enumerator accepts; 2^(n(n-1)/2)
// masks are walked per order, which is already ~2M at n = 7.
inline constexpr int kMaxGeneratedOrder = 7;

// All graphs of the given order up to isomorphism, by enumerating labeled
// graphs and deduplicating. Candidates are bucketed by a cheap invariant
// sieve (sorted degree sequence + sorted distance multiset) and an exact
// backtracking isomorphism test runs within each bucket, so for orders the
// generator accepts the output is duplicate-free. Throws ScaleExceeded
// beyond kMaxGeneratedOrder; larger catalogs come from graph6 files.
std::vector<Graph> graphs_of_order(int n, bool connected_only);

// Orders 1..max_order concatenated, labels set to the graph6 encoding.
std::vector<Graph> connected_graphs_up_to(int max_order);
std::vector<Graph> all_graphs_up_to(int max_order);

bool are_isomorphic(const Graph& a, const Graph& b);

// FNV-1a over the graph6 serialization of every catalog entry, so reports
// can pin down exactly which catalog a run used.
std::uint64_t catalog_checksum(const std::vector<Graph>& catalog);
std::string catalog_checksum_hex(const std::vector<Graph>& catalog);

} // namespace dpgraph

#endif
