#include "dpgraph/products.hpp"

#include <string>

namespace dpgraph {

namespace {

void require_factors(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) {
        throw EmptyFactor("product factors must have at least one vertex");
    }
    if (g.order() > kMaxOrder / h.order()) {
        throw TooLarge("product order " + std::to_string(g.order()) + "*" +
                       std::to_string(h.order()) + " exceeds the " + std::to_string(kMaxOrder) +
                       "-vertex representation limit");
    }
}

std::string product_label(const Graph& g, const Graph& h, ProductKind kind) {
    const std::string l = g.label().empty() ? "G" : g.label();
    const std::string r = h.label().empty() ? "H" : h.label();
    return kind == ProductKind::Lex ? l + "[" + r + "]" : l + " box " + r;
}

} // namespace

ProductGraph lex_product(const Graph& g, const Graph& h) {
    require_factors(g, h);
    const int m = g.order(), n = h.order();
    ProductGraph p{Graph(m * n, product_label(g, h, ProductKind::Lex)), m, n, ProductKind::Lex};
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex x = 0; x < n; ++x) {
            // uv an edge of g: all (v, y) regardless of y
            for (Vertex v = u + 1; v < m; ++v) {
                if (!g.adjacent(u, v)) continue;
                for (Vertex y = 0; y < n; ++y) {
                    p.underlying.add_edge(p.encode(u, x), p.encode(v, y));
                }
            }
            // same left vertex: xy an edge of h
            for (Vertex y = x + 1; y < n; ++y) {
                if (h.adjacent(x, y)) p.underlying.add_edge(p.encode(u, x), p.encode(u, y));
            }
        }
    }
    return p;
}

ProductGraph cart_product(const Graph& g, const Graph& h) {
    require_factors(g, h);
    const int m = g.order(), n = h.order();
    ProductGraph p{Graph(m * n, product_label(g, h, ProductKind::Cart)), m, n, ProductKind::Cart};
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex v = u + 1; v < m; ++v) {
                if (g.adjacent(u, v)) p.underlying.add_edge(p.encode(u, x), p.encode(v, x));
            }
            for (Vertex y = x + 1; y < n; ++y) {
                if (h.adjacent(x, y)) p.underlying.add_edge(p.encode(u, x), p.encode(u, y));
            }
        }
    }
    return p;
}

Dist lex_distance(const DistanceMatrix& g_dist, const Graph& h, Vertex u, Vertex v, Vertex x,
                  Vertex y) {
    if (g_dist.order() < 2) {
        throw PreconditionViolated("lex_distance requires a left factor with at least 2 vertices");
    }
    if (!g_dist.all_finite()) {
        throw PreconditionViolated("lex_distance requires a connected left factor");
    }
    if (u == v && x == y) {
        throw PreconditionViolated("lex_distance requires distinct product vertices");
    }
    if (u != v) return g_dist.at(u, v);
    return h.adjacent(x, y) ? 1 : 2;
}

Dist cart_distance(const DistanceMatrix& g_dist, const DistanceMatrix& h_dist, Vertex u, Vertex v,
                   Vertex x, Vertex y) {
    const Dist dg = g_dist.at(u, v);
    const Dist dh = h_dist.at(x, y);
    if (dg == kUnreachable || dh == kUnreachable) return kUnreachable;
    return dg + dh;
}

VertexSet project(const VertexSet& k, const ProductGraph& product) {
    if (k.universe != product.order()) {
        throw DimensionError("subgraph universe " + std::to_string(k.universe) +
                             " does not match product order " + std::to_string(product.order()));
    }
    VertexSet out = VertexSet::empty(product.left_order);
    for_each_bit(k.bits, [&](int idx) { out.bits |= bit(product.decode(idx).first); });
    return out;
}

namespace {

// Removes consecutive repeats: 0,1,1,0 -> 0,1,0.
std::vector<Vertex> collapse_repeats(const std::vector<Vertex>& seq) {
    std::vector<Vertex> out;
    for (Vertex v : seq) {
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return out;
}

// Walk of length len from a to b is a geodesic iff len equals the BFS
// distance (a shortest walk cannot revisit vertices).
bool is_geodesic_walk(const Graph& g, const std::vector<Vertex>& walk) {
    std::vector<Dist> dist(static_cast<size_t>(g.order()));
    bfs_masked(g, walk.front(), full_mask(g.order()), dist);
    const Dist d = dist[walk.back()];
    return d != kUnreachable && static_cast<Dist>(walk.size()) - 1 == d;
}

} // namespace

GeodesicFactorization geodesic_factorization(const ProductGraph& product, const Graph& left,
                                             const Graph& right, std::span<const Vertex> path) {
    if (product.kind != ProductKind::Cart) {
        throw PreconditionViolated("geodesic factorization applies to Cartesian products");
    }
    if (path.empty()) {
        throw NotAWalk("a walk needs at least one vertex");
    }
    for (Vertex v : path) {
        if (v < 0 || v >= product.order()) {
            throw NotAWalk("walk vertex " + std::to_string(v) + " outside the product");
        }
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!product.underlying.adjacent(path[i], path[i + 1])) {
            throw NotAWalk("consecutive walk entries " + std::to_string(path[i]) + ", " +
                           std::to_string(path[i + 1]) + " are not adjacent in the product");
        }
    }

    std::vector<Vertex> whole(path.begin(), path.end());
    std::vector<Vertex> left_proj, right_proj;
    left_proj.reserve(path.size());
    right_proj.reserve(path.size());
    for (Vertex v : path) {
        const auto [u, x] = product.decode(v);
        left_proj.push_back(u);
        right_proj.push_back(x);
    }

    GeodesicFactorization out;
    out.product_geodesic = is_geodesic_walk(product.underlying, whole);
    out.factors_geodesic = is_geodesic_walk(left, collapse_repeats(left_proj)) &&
                           is_geodesic_walk(right, collapse_repeats(right_proj));
    return out;
}

bool geodesic_factorization_check(const ProductGraph& product, const Graph& left,
                                  const Graph& right, std::span<const Vertex> path) {
    const GeodesicFactorization r = geodesic_factorization(product, left, right, path);
    return r.product_geodesic && r.factors_geodesic;
}

} // namespace dpgraph
