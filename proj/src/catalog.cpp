#include "dpgraph/catalog.hpp"

#include <algorithm>
#include <map>

#include "dpgraph/distance.hpp"
#include "dpgraph/graph6.hpp"

namespace dpgraph {

namespace {

// Sorted degree sequence plus sorted upper-triangle distance multiset.
// Cheap to compute and collision-poor at catalog sizes; exact isomorphism
// runs within each bucket anyway.
std::vector<int> invariant_key(const Graph& g) {
    const int n = g.order();
    std::vector<int> key;
    key.reserve(static_cast<size_t>(n) + static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex v = 0; v < n; ++v) key.push_back(g.degree(v));
    std::sort(key.begin(), key.begin() + n);
    const DistanceMatrix dist = bfs_distances(g);
    std::vector<int> dists;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) dists.push_back(dist.at(u, v));
    }
    std::sort(dists.begin(), dists.end());
    key.insert(key.end(), dists.begin(), dists.end());
    return key;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<Vertex> map; // a-vertex -> b-vertex, -1 unassigned
    std::uint64_t used = 0;

    bool assign(Vertex next) {
        const int n = a.order();
        if (next == n) return true;
        for (Vertex cand = 0; cand < n; ++cand) {
            if (used & bit(cand)) continue;
            if (a.degree(next) != b.degree(cand)) continue;
            bool ok = true;
            for (Vertex prev = 0; prev < next && ok; ++prev) {
                if (a.adjacent(prev, next) != b.adjacent(map[prev], cand)) ok = false;
            }
            if (!ok) continue;
            map[next] = cand;
            used |= bit(cand);
            if (assign(next + 1)) return true;
            used &= ~bit(cand);
            map[next] = -1;
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    IsoSearch search{a, b, std::vector<Vertex>(static_cast<size_t>(a.order()), -1), 0};
    return search.assign(0);
}

std::vector<Graph> graphs_of_order(int n, bool connected_only) {
    if (n < 1) return {};
    if (n > kMaxGeneratedOrder) {
        throw ScaleExceeded("internal catalog generation stops at order " +
                            std::to_string(kMaxGeneratedOrder) +
                            "; supply a graph6 catalog file for larger orders");
    }
    const int tri = n * (n - 1) / 2;
    std::vector<std::pair<Vertex, Vertex>> slots;
    slots.reserve(static_cast<size_t>(tri));
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    }

    std::map<std::vector<int>, std::vector<size_t>> buckets;
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tri); ++mask) {
        Graph g(n);
        for_each_bit(mask, [&](int s) { g.add_edge(slots[s].first, slots[s].second); });
        if (connected_only && !is_connected(g)) continue;
        auto key = invariant_key(g);
        auto& bucket = buckets[key];
        bool dup = false;
        for (size_t idx : bucket) {
            if (are_isomorphic(reps[idx], g)) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        bucket.push_back(reps.size());
        g.set_label(serialize_graph6(g));
        reps.push_back(std::move(g));
    }
    return reps;
}

namespace {

std::vector<Graph> graphs_up_to(int max_order, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        auto batch = graphs_of_order(n, connected_only);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

} // namespace

std::vector<Graph> connected_graphs_up_to(int max_order) { return graphs_up_to(max_order, true); }

std::vector<Graph> all_graphs_up_to(int max_order) { return graphs_up_to(max_order, false); }

std::uint64_t catalog_checksum(const std::vector<Graph>& catalog) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const Graph& g : catalog) {
        for (char c : serialize_graph6(g)) {
            hash ^= static_cast<unsigned char>(c);
            hash *= 0x100000001b3ULL;
        }
        hash ^= '\n';
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string catalog_checksum_hex(const std::vector<Graph>& catalog) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = catalog_checksum(catalog);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace dpgraph
