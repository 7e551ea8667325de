#ifndef DPGRAPH_VERIFY_HPP
#define DPGRAPH_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dpgraph/graph.hpp"
#include "dpgraph/metric.hpp"
#include "dpgraph/products.hpp"

namespace dpgraph {

// One claim instance that came out wrong. A proved claim failing on any
// instance means an implementation bug, so these are always build-breaking.
struct Failure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string claim_id;
    long long instances_checked = 0;
    std::vector<Failure> failures;
    double elapsed_seconds = 0.0;
    bool sampled = false;     // true when any instance space was sampled
    std::uint64_t seed = 0;   // the sampling seed, recorded for reproducibility
    std::string catalog_checksum;

    bool holds() const { return failures.empty(); }
    void merge(const VerificationReport& other);
};

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 0x5eed5eedULL;
    // Instance spaces up to this many items are enumerated exhaustively;
    // larger ones draw `sample_size` pseudorandom items from `seed`.
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    std::uint64_t sample_size = 100000;
};

// Subgraph projection claim: for induced K of g[h] with at least two
// distinct left coordinates, K is isometric in the product exactly when
// its projection is isometric in g. Exhaustive over all K when the product
// has at most 12 vertices, sampled above that.
VerificationReport check_eq1(const Graph& g, const Graph& h, const VerifyOptions& opts = {});

// Single-fiber claim: for induced K with one left coordinate, K is
// isometric in g[h] exactly when its diameter is at most 2 (a disconnected
// K fails the bound by convention).
VerificationReport check_corollary_fiber(const Graph& g, const Graph& h,
                                         const VerifyOptions& opts = {});

// Catalog sweeps of the two per-pair checks above, merged in canonical
// pair order; pairs whose product exceeds max_product_order are skipped.
VerificationReport check_eq1_catalog(const std::vector<Graph>& catalog_g,
                                     const std::vector<Graph>& catalog_h, int max_product_order,
                                     const VerifyOptions& opts = {});
VerificationReport check_corollary_fiber_catalog(const std::vector<Graph>& catalog_g,
                                                 const std::vector<Graph>& catalog_h,
                                                 int max_product_order,
                                                 const VerifyOptions& opts = {});

// Gap criterion for lex products: every gap pair (a, b) of the left
// spectrum must satisfy b <= a*n + 1, n the right factor's order.
bool thm1_criterion(const DpSpectrum& spec, int n);

// Asserts thm1_criterion(dpp(g), |h|) == is_dp(g[h]) over the catalogs;
// the right side is brute-force spectrum computation on the product.
VerificationReport check_thm1(const std::vector<Graph>& catalog_g,
                              const std::vector<Graph>& catalog_h,
                              const VerifyOptions& opts = {});

// Cartesian isometry claim over induced factor subgraph pairs:
// A box B isometric in g box h iff A isometric in g and B isometric in h.
VerificationReport check_cart_isometry_lemma(const std::vector<Graph>& catalog_g,
                                             const std::vector<Graph>& catalog_h,
                                             const VerifyOptions& opts = {});

// Removal-set claim: removing A x B from g box h leaves an isometric
// subgraph iff removing A from g and B from h each do. Product membership
// is tested definitionally on the remainder mask.
VerificationReport check_removal_lemma(const std::vector<Graph>& catalog_g,
                                       const std::vector<Graph>& catalog_h,
                                       const VerifyOptions& opts = {});

// Sequential claim: g box h is sdp iff both factors are. When both are,
// also builds the explicit row-major deletion order from the factor
// sequences and re-verifies it prefix by prefix.
VerificationReport check_thm2(const std::vector<Graph>& catalog_g,
                              const std::vector<Graph>& catalog_h, int max_product_order = 16,
                              const VerifyOptions& opts = {});

// Deletion order for g box h assembled from factor sdp sequences: the
// whole left sequence at the first right vertex, then at the second, ...
std::vector<Vertex> product_sdp_order(const std::vector<Vertex>& left_order,
                                      const std::vector<Vertex>& right_order, int left_n,
                                      int right_n);

// A dp pair whose Cartesian product misses some order; finding one would
// refute the open conjecture, so records carry everything needed to audit.
struct CounterexampleRecord {
    Graph left;
    Graph right;
    DpSpectrum product_spectrum;
    std::set<int> missing_orders;
};

struct HuntReport {
    long long pairs_checked = 0;
    long long candidates_left = 0;
    long long candidates_right = 0;
    double elapsed_seconds = 0.0;
    double slowest_pair_seconds = 0.0;
    std::string slowest_pair;
    std::string catalog_checksum;
    std::vector<CounterexampleRecord> counterexamples;

    bool consistent() const { return counterexamples.empty(); }
};

struct HuntOptions {
    int product_order_cap = 20;
    int jobs = 1;
};

// Checks every ordered pair of connected dp graphs drawn from the two
// catalogs; each product's spectrum is computed exactly, with fast paths
// that only ever admit an order after the witness subset passed
// is_isometric. Throws ScaleExceeded when the projected product order
// exceeds the cap.
HuntReport hunt_conjecture(const std::vector<Graph>& left_catalog,
                           const std::vector<Graph>& right_catalog,
                           const HuntOptions& opts = {});

// Convenience: catalogs from the internal generator, orders 1..max.
HuntReport hunt_conjecture(int max_left, int max_right, const HuntOptions& opts = {});

// Exact spectrum of a Cartesian product, seeded with verified witnesses
// derived from the factors (factor sdp sequences and removal-set products)
// before falling back to subset search.
DpSpectrum cart_product_spectrum(const Graph& left, const Graph& right,
                                 const ProductGraph& product);

} // namespace dpgraph

#endif
