#ifndef DPGRAPH_PRODUCTS_HPP
#define DPGRAPH_PRODUCTS_HPP

#include <span>
#include <utility>
#include <vector>

#include "dpgraph/distance.hpp"
#include "dpgraph/graph.hpp"

namespace dpgraph {

enum class ProductKind { Lex, Cart };

// A product of a left factor of order m and a right factor of order n on
// vertex pairs (u, x), materialised as an ordinary m*n-vertex graph.
// Vertex (u, x) lives at index u*n + x (row-major); every fixture and
// output format relies on this encoding.
struct ProductGraph {
    Graph underlying;
    int left_order = 0;
    int right_order = 0;
    ProductKind kind = ProductKind::Cart;

    int order() const { return left_order * right_order; }
    Vertex encode(Vertex u, Vertex x) const { return u * right_order + x; }
    std::pair<Vertex, Vertex> decode(Vertex idx) const {
        return {idx / right_order, idx % right_order};
    }
};

// (u,x)(v,y) is an edge iff uv is a left edge, or u = v and xy is a right edge.
ProductGraph lex_product(const Graph& g, const Graph& h);

// (u,x)(v,y) is an edge iff exactly one coordinate moves along a factor edge.
ProductGraph cart_product(const Graph& g, const Graph& h);

// Closed-form distance in g[h] for distinct (u,x), (v,y):
//   d_g(u,v) when u != v; 1 when u = v and xy is an h-edge; 2 otherwise.
// Requires g connected with at least two vertices; never runs BFS on the
// product.
Dist lex_distance(const DistanceMatrix& g_dist, const Graph& h, Vertex u, Vertex v, Vertex x,
                  Vertex y);

// Distance in g box h is the sum of the factor distances; unreachable in
// either factor makes the pair unreachable.
Dist cart_distance(const DistanceMatrix& g_dist, const DistanceMatrix& h_dist, Vertex u, Vertex v,
                   Vertex x, Vertex y);

// Left coordinates appearing in k, as a subset of the left factor.
VertexSet project(const VertexSet& k, const ProductGraph& product);

// The two independently computed sides of the geodesic factorisation
// equivalence for a walk in a Cartesian product.
struct GeodesicFactorization {
    bool product_geodesic = false; // walk length equals BFS distance in the product
    bool factors_geodesic = false; // both collapsed projections are factor geodesics
};

GeodesicFactorization geodesic_factorization(const ProductGraph& product, const Graph& left,
                                             const Graph& right, std::span<const Vertex> path);

// True iff the walk is a product geodesic and both coordinate projections,
// after collapsing consecutive repeats, are geodesics in their factors.
bool geodesic_factorization_check(const ProductGraph& product, const Graph& left,
                                  const Graph& right, std::span<const Vertex> path);

} // namespace dpgraph

#endif
