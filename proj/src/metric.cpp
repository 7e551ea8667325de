#include "dpgraph/metric.hpp"

#include <algorithm>
#include <unordered_set>

namespace dpgraph {

namespace {

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) {
        throw DisconnectedInput(std::string(op) + " is defined for connected graphs only");
    }
}

// Distances from `source` inside `mask` may only exceed host distances;
// returns false on the first pair that does.
bool source_matches_host(const Graph& g, const DistanceMatrix& host_dist, std::uint64_t mask,
                         Vertex source, std::vector<Dist>& scratch) {
    bfs_masked(g, source, mask, scratch);
    bool ok = true;
    for_each_bit(mask, [&](int v) {
        if (scratch[v] != host_dist.at(source, v)) ok = false;
    });
    return ok;
}

} // namespace

bool DpSpectrum::is_full() const {
    if (static_cast<int>(achievable.size()) != host_order) return false;
    int expect = 1;
    for (int k : achievable) {
        if (k != expect++) return false;
    }
    return true;
}

std::vector<int> DpSpectrum::missing_orders() const {
    std::vector<int> out;
    for (int k = 1; k <= host_order; ++k) {
        if (!achievable.count(k)) out.push_back(k);
    }
    return out;
}

bool is_isometric_masked(const Graph& host, const DistanceMatrix& host_dist, std::uint64_t mask) {
    if (std::popcount(mask) <= 1) return true;
    std::vector<Dist> scratch(static_cast<size_t>(host.order()));
    bool ok = true;
    for_each_bit(mask, [&](int u) {
        if (ok && !source_matches_host(host, host_dist, mask, u, scratch)) ok = false;
    });
    return ok;
}

bool is_isometric(const Graph& host, const VertexSet& s) {
    if (s.universe != host.order()) {
        throw DimensionError("vertex set universe " + std::to_string(s.universe) +
                             " does not match graph order " + std::to_string(host.order()));
    }
    return is_isometric_masked(host, bfs_distances(host), s.bits);
}

namespace {

// Backtracking state for the k-subset search.
struct SubsetSearch {
    const Graph& g;
    const DistanceMatrix& host;
    int n;
    int k;
    std::vector<Dist> scratch;

    // No superset of `chosen` inside `pool` can shrink an induced distance
    // below the one measured in `pool` itself, so a chosen pair already
    // exceeding its host distance there kills the whole branch. Only pairs
    // within `chosen` matter; other pool vertices are free to be dropped.
    bool branch_alive(std::uint64_t chosen, std::uint64_t pool) {
        bool alive = true;
        for_each_bit(chosen, [&](int u) {
            if (!alive) return;
            bfs_masked(g, u, pool, scratch);
            for_each_bit(chosen, [&](int v) {
                if (scratch[v] != host.at(u, v)) alive = false;
            });
        });
        return alive;
    }

    bool extend(std::uint64_t chosen, int lo, int picked) {
        if (picked == k) return is_isometric_masked(g, host, chosen);
        if (n - lo < k - picked) return false;
        std::uint64_t pool = chosen | (full_mask(n) & ~full_mask(lo));
        if (!branch_alive(chosen, pool)) return false;
        for (int w = lo; w < n; ++w) {
            if (extend(chosen | bit(w), w + 1, picked + 1)) return true;
        }
        return false;
    }
};

} // namespace

bool has_isometric_subgraph_of_order(const Graph& g, const DistanceMatrix& host_dist, int k) {
    const int n = g.order();
    if (k < 0 || k > n) return false;
    if (k <= 1) return true;
    SubsetSearch search{g, host_dist, n, k, std::vector<Dist>(static_cast<size_t>(n))};
    return search.extend(0, 0, 0);
}

DpSpectrum dp_spectrum_seeded(const Graph& g, const DistanceMatrix& host_dist,
                              const std::set<int>& verified_orders) {
    const int n = g.order();
    DpSpectrum spec;
    spec.host_order = n;
    if (n == 0) return spec;

    spec.achievable = verified_orders;
    spec.achievable.insert(n);

    // Geodesics and their prefixes realise every order up to diameter + 1.
    const Dist diam = host_dist.max_finite_or_unreachable();
    for (int k = 1; k <= std::min<int>(n, diam + 1); ++k) spec.achievable.insert(k);

    // Greedy peel: drop the lowest-index vertex that keeps the remainder
    // isometric; each surviving set is a verified witness for its size.
    std::uint64_t surviving = full_mask(n);
    bool peeled = true;
    while (peeled && std::popcount(surviving) > 1) {
        peeled = false;
        std::uint64_t candidates = surviving;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            std::uint64_t next = surviving & ~bit(v);
            if (is_isometric_masked(g, host_dist, next)) {
                surviving = next;
                spec.achievable.insert(std::popcount(surviving));
                peeled = true;
                break;
            }
        }
    }

    for (int k = n - 1; k > diam + 1; --k) {
        if (spec.achievable.count(k)) continue;
        if (has_isometric_subgraph_of_order(g, host_dist, k)) spec.achievable.insert(k);
    }
    return spec;
}

DpSpectrum dp_spectrum(const Graph& g) {
    require_connected(g, "dp_spectrum");
    return dp_spectrum_seeded(g, bfs_distances(g), {});
}

bool is_dp(const Graph& g) {
    require_connected(g, "is_dp");
    return dp_spectrum(g).is_full();
}

std::vector<NonDpIntervalPair> non_dp_interval_pairs(const DpSpectrum& spec) {
    std::vector<NonDpIntervalPair> out;
    int prev = -1;
    for (int k : spec.achievable) {
        if (prev >= 0 && k - prev >= 2) out.push_back({prev, k});
        prev = k;
    }
    return out;
}

RemovalSetFamily removal_set_family(const Graph& g, int max_size,
                                    bool require_nonempty_remainder) {
    require_connected(g, "removal_set_family");
    const int n = g.order();
    if (max_size < 0 || max_size > n) {
        throw PreconditionViolated("removal set size bound must be in [0, " + std::to_string(n) +
                                   "], got " + std::to_string(max_size));
    }
    const DistanceMatrix dist = bfs_distances(g);
    const std::uint64_t all = full_mask(n);

    std::vector<std::pair<int, std::uint64_t>> hits;
    std::uint64_t a = 0;
    while (true) {
        const int size = std::popcount(a);
        if (size <= max_size && !(require_nonempty_remainder && a == all) &&
            is_isometric_masked(g, dist, all & ~a)) {
            hits.emplace_back(size, a);
        }
        if (a == all) break;
        ++a;
    }
    std::sort(hits.begin(), hits.end());

    RemovalSetFamily family;
    family.host_order = n;
    family.sets.reserve(hits.size());
    for (const auto& [size, mask] : hits) family.sets.emplace_back(n, mask);
    return family;
}

namespace {

struct SdpSearch {
    const Graph& g;
    const DistanceMatrix& host;
    std::unordered_set<std::uint64_t> dead; // surviving sets with no completion
    std::vector<Vertex> order;

    bool peel(std::uint64_t surviving) {
        if (surviving == 0) return true;
        if (dead.contains(surviving)) return false;
        std::uint64_t candidates = surviving;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            std::uint64_t next = surviving & ~bit(v);
            if (is_isometric_masked(g, host, next)) {
                order.push_back(v);
                if (peel(next)) return true;
                order.pop_back();
            }
        }
        dead.insert(surviving);
        return false;
    }
};

} // namespace

SdpSequence sdp_sequence(const Graph& g) {
    require_connected(g, "sdp_sequence");
    const DistanceMatrix dist = bfs_distances(g);
    SdpSearch search{g, dist, {}, {}};
    search.order.reserve(static_cast<size_t>(g.order()));
    if (search.peel(full_mask(g.order()))) return search.order;
    return std::nullopt;
}

bool is_sdp(const Graph& g) {
    require_connected(g, "is_sdp");
    return sdp_sequence(g).has_value();
}

} // namespace dpgraph
