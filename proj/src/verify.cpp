#include "dpgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dpgraph/catalog.hpp"
#include "dpgraph/graph6.hpp"

namespace dpgraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Graph& g) {
    return g.label().empty() ? serialize_graph6(g) : g.label();
}

std::string mask_to_string(std::uint64_t mask) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for_each_bit(mask, [&](int v) {
        if (!first) out << ",";
        out << v;
        first = false;
    });
    out << "}";
    return out.str();
}

// Runs fn(i) for i in [0, count), fanning out to `jobs` workers. Results
// must be written to per-index slots so the merge order is canonical.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const int spawn = static_cast<int>(std::min<long long>(jobs, count));
    threads.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

// Visits every mask in [0, 2^bits) when that space fits the exhaustive
// limit, otherwise `sample_size` pseudorandom masks. Returns true when the
// space was sampled.
template <typename Fn>
bool for_each_mask(int bits, const VerifyOptions& opts, Fn&& fn) {
    const bool exhaustive =
        bits < 64 && (std::uint64_t{1} << bits) <= opts.exhaustive_limit;
    if (exhaustive) {
        const std::uint64_t space = std::uint64_t{1} << bits;
        for (std::uint64_t mask = 0; mask < space; ++mask) fn(mask);
        return false;
    }
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t top = full_mask(bits);
    std::uniform_int_distribution<std::uint64_t> draw(0, top);
    for (std::uint64_t i = 0; i < opts.sample_size; ++i) fn(draw(rng));
    return true;
}

void require_lex_left(const Graph& g, const char* op) {
    if (g.order() < 2) {
        throw PreconditionViolated(std::string(op) + " requires a left factor with |G| >= 2");
    }
    if (!is_connected(g)) {
        throw PreconditionViolated(std::string(op) + " requires a connected left factor");
    }
}

std::uint64_t product_mask(std::uint64_t a, std::uint64_t b, int right_n) {
    std::uint64_t out = 0;
    for_each_bit(a, [&](int u) { out |= b << (u * right_n); });
    return out;
}

} // namespace

void VerificationReport::merge(const VerificationReport& other) {
    instances_checked += other.instances_checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    elapsed_seconds += other.elapsed_seconds;
    sampled = sampled || other.sampled;
}

VerificationReport check_eq1(const Graph& g, const Graph& h, const VerifyOptions& opts) {
    require_lex_left(g, "check_eq1");
    const auto start = Clock::now();
    const ProductGraph product = lex_product(g, h);
    const DistanceMatrix g_dist = bfs_distances(g);
    const DistanceMatrix p_dist = bfs_distances(product.underlying);

    VerificationReport report;
    report.claim_id = "eq1";
    report.seed = opts.seed;

    report.sampled = for_each_mask(product.order(), opts, [&](std::uint64_t k_mask) {
        const VertexSet k(product.order(), k_mask);
        const VertexSet proj = project(k, product);
        if (proj.count() < 2) return;
        const bool left = is_isometric_masked(g, g_dist, proj.bits);
        const bool right = is_isometric_masked(product.underlying, p_dist, k_mask);
        ++report.instances_checked;
        if (left != right) {
            report.failures.push_back({"G=" + describe(g) + " H=" + describe(h) +
                                           " K=" + mask_to_string(k_mask),
                                       "pi(K)<=G iff K<=G[H]",
                                       std::string("pi(K)<=G is ") + (left ? "true" : "false") +
                                           ", K<=G[H] is " + (right ? "true" : "false")});
        }
    });
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport check_corollary_fiber(const Graph& g, const Graph& h,
                                         const VerifyOptions& opts) {
    require_lex_left(g, "check_corollary_fiber");
    const auto start = Clock::now();
    const ProductGraph product = lex_product(g, h);
    const DistanceMatrix p_dist = bfs_distances(product.underlying);
    const int n = h.order();

    VerificationReport report;
    report.claim_id = "cor-fiber";
    report.seed = opts.seed;

    auto check_fiber_subset = [&](Vertex u, std::uint64_t fiber_bits) {
        if (fiber_bits == 0) return;
        const std::uint64_t k_mask = fiber_bits << (u * n);
        const bool iso = is_isometric_masked(product.underlying, p_dist, k_mask);
        const Dist diam =
            diameter(induce(product.underlying, VertexSet(product.order(), k_mask)).graph);
        const bool diam_bounded = diam != kUnreachable && diam <= 2;
        ++report.instances_checked;
        if (iso != diam_bounded) {
            report.failures.push_back(
                {"G=" + describe(g) + " H=" + describe(h) + " K=" + mask_to_string(k_mask),
                 "K<=G[H] iff diam(K)<=2",
                 std::string("K<=G[H] is ") + (iso ? "true" : "false") + ", diam(K)=" +
                     (diam == kUnreachable ? std::string("unreachable") : std::to_string(diam))});
        }
    };

    // the per-fiber space is m * (2^n - 1); sample each fiber when 2^n blows past the limit
    for (Vertex u = 0; u < g.order(); ++u) {
        const bool sampled =
            for_each_mask(n, opts, [&](std::uint64_t fiber_bits) { check_fiber_subset(u, fiber_bits); });
        report.sampled = report.sampled || sampled;
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

namespace {

template <typename CheckFn>
VerificationReport pair_sweep(const std::string& claim_id, const std::vector<Graph>& catalog_g,
                              const std::vector<Graph>& catalog_h, int max_product_order,
                              const VerifyOptions& opts, CheckFn&& check) {
    const auto start = Clock::now();
    struct Pair {
        size_t gi, hi;
    };
    std::vector<Pair> todo;
    for (size_t gi = 0; gi < catalog_g.size(); ++gi) {
        for (size_t hi = 0; hi < catalog_h.size(); ++hi) {
            if (catalog_g[gi].order() * catalog_h[hi].order() <= max_product_order) {
                todo.push_back({gi, hi});
            }
        }
    }
    std::vector<VerificationReport> parts(todo.size());
    parallel_for(static_cast<long long>(todo.size()), opts.jobs, [&](long long i) {
        const auto& [gi, hi] = todo[static_cast<size_t>(i)];
        parts[static_cast<size_t>(i)] = check(catalog_g[gi], catalog_h[hi]);
    });
    VerificationReport report;
    report.claim_id = claim_id;
    report.seed = opts.seed;
    for (const auto& part : parts) report.merge(part);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace

VerificationReport check_eq1_catalog(const std::vector<Graph>& catalog_g,
                                     const std::vector<Graph>& catalog_h, int max_product_order,
                                     const VerifyOptions& opts) {
    return pair_sweep("eq1", catalog_g, catalog_h, max_product_order, opts,
                      [&](const Graph& g, const Graph& h) { return check_eq1(g, h, opts); });
}

VerificationReport check_corollary_fiber_catalog(const std::vector<Graph>& catalog_g,
                                                 const std::vector<Graph>& catalog_h,
                                                 int max_product_order,
                                                 const VerifyOptions& opts) {
    return pair_sweep("cor-fiber", catalog_g, catalog_h, max_product_order, opts,
                      [&](const Graph& g, const Graph& h) {
                          return check_corollary_fiber(g, h, opts);
                      });
}

bool thm1_criterion(const DpSpectrum& spec, int n) {
    if (spec.host_order < 2) {
        throw PreconditionViolated("thm1_criterion requires a spectrum of a graph with |G| >= 2");
    }
    if (n < 1) {
        throw PreconditionViolated("thm1_criterion requires |H| >= 1");
    }
    for (const NonDpIntervalPair& gap : non_dp_interval_pairs(spec)) {
        if (gap.b > gap.a * n + 1) return false;
    }
    return true;
}

VerificationReport check_thm1(const std::vector<Graph>& catalog_g,
                              const std::vector<Graph>& catalog_h, const VerifyOptions& opts) {
    for (const Graph& g : catalog_g) require_lex_left(g, "check_thm1");
    const auto start = Clock::now();

    VerificationReport report;
    report.claim_id = "thm1";
    report.seed = opts.seed;

    const long long pairs =
        static_cast<long long>(catalog_g.size()) * static_cast<long long>(catalog_h.size());
    std::vector<VerificationReport> parts(static_cast<size_t>(pairs));
    parallel_for(pairs, opts.jobs, [&](long long i) {
        const Graph& g = catalog_g[static_cast<size_t>(i) / catalog_h.size()];
        const Graph& h = catalog_h[static_cast<size_t>(i) % catalog_h.size()];
        VerificationReport& part = parts[static_cast<size_t>(i)];
        const bool criterion = thm1_criterion(dp_spectrum(g), h.order());
        const ProductGraph product = lex_product(g, h);
        const bool product_dp =
            dp_spectrum_seeded(product.underlying, bfs_distances(product.underlying), {}).is_full();
        part.instances_checked = 1;
        if (criterion != product_dp) {
            part.failures.push_back({"G=" + describe(g) + " H=" + describe(h),
                                     "criterion b<=a|H|+1 iff G[H] dp",
                                     std::string("criterion is ") + (criterion ? "true" : "false") +
                                         ", is_dp(G[H]) is " + (product_dp ? "true" : "false")});
        }
    });
    for (const auto& part : parts) {
        report.instances_checked += part.instances_checked;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

namespace {

// is_isometric over every subset of g, indexed by mask.
std::vector<char> isometry_table(const Graph& g) {
    const DistanceMatrix dist = bfs_distances(g);
    const std::uint64_t space = std::uint64_t{1} << g.order();
    std::vector<char> table(space);
    for (std::uint64_t mask = 0; mask < space; ++mask) {
        table[mask] = is_isometric_masked(g, dist, mask) ? 1 : 0;
    }
    return table;
}

} // namespace

VerificationReport check_cart_isometry_lemma(const std::vector<Graph>& catalog_g,
                                             const std::vector<Graph>& catalog_h,
                                             const VerifyOptions& opts) {
    const auto start = Clock::now();
    VerificationReport report;
    report.claim_id = "lem-cart-iso";
    report.seed = opts.seed;

    const long long pairs =
        static_cast<long long>(catalog_g.size()) * static_cast<long long>(catalog_h.size());
    std::vector<VerificationReport> parts(static_cast<size_t>(pairs));
    parallel_for(pairs, opts.jobs, [&](long long i) {
        const Graph& g = catalog_g[static_cast<size_t>(i) / catalog_h.size()];
        const Graph& h = catalog_h[static_cast<size_t>(i) % catalog_h.size()];
        VerificationReport& part = parts[static_cast<size_t>(i)];
        const ProductGraph product = cart_product(g, h);
        const DistanceMatrix p_dist = bfs_distances(product.underlying);
        const std::vector<char> iso_g = isometry_table(g);
        const std::vector<char> iso_h = isometry_table(h);
        const std::uint64_t all_a = full_mask(g.order());
        const std::uint64_t all_b = full_mask(h.order());
        for (std::uint64_t a = 1; a <= all_a; ++a) {
            for (std::uint64_t b = 1; b <= all_b; ++b) {
                const bool factors = iso_g[a] && iso_h[b];
                const bool in_product = is_isometric_masked(
                    product.underlying, p_dist, product_mask(a, b, h.order()));
                ++part.instances_checked;
                if (factors != in_product) {
                    part.failures.push_back(
                        {"G=" + describe(g) + " H=" + describe(h) + " A=" + mask_to_string(a) +
                             " B=" + mask_to_string(b),
                         "A box B <= G box H iff A<=G and B<=H",
                         std::string("A box B side is ") + (in_product ? "true" : "false") +
                             ", factor side is " + (factors ? "true" : "false")});
                }
            }
        }
    });
    for (const auto& part : parts) {
        report.instances_checked += part.instances_checked;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport check_removal_lemma(const std::vector<Graph>& catalog_g,
                                       const std::vector<Graph>& catalog_h,
                                       const VerifyOptions& opts) {
    const auto start = Clock::now();
    VerificationReport report;
    report.claim_id = "lem-removal";
    report.seed = opts.seed;

    const long long pairs =
        static_cast<long long>(catalog_g.size()) * static_cast<long long>(catalog_h.size());
    std::vector<VerificationReport> parts(static_cast<size_t>(pairs));
    parallel_for(pairs, opts.jobs, [&](long long i) {
        const Graph& g = catalog_g[static_cast<size_t>(i) / catalog_h.size()];
        const Graph& h = catalog_h[static_cast<size_t>(i) % catalog_h.size()];
        VerificationReport& part = parts[static_cast<size_t>(i)];
        const ProductGraph product = cart_product(g, h);
        const DistanceMatrix p_dist = bfs_distances(product.underlying);
        const std::vector<char> iso_g = isometry_table(g);
        const std::vector<char> iso_h = isometry_table(h);
        const std::uint64_t all_a = full_mask(g.order());
        const std::uint64_t all_b = full_mask(h.order());
        const std::uint64_t all_p = full_mask(product.order());
        for (std::uint64_t a = 1; a <= all_a; ++a) {
            for (std::uint64_t b = 1; b <= all_b; ++b) {
                // DP' membership on both sides is definitional: remove, then test isometry.
                const bool factors = iso_g[all_a & ~a] && iso_h[all_b & ~b];
                const std::uint64_t remainder = all_p & ~product_mask(a, b, h.order());
                const bool in_product = is_isometric_masked(product.underlying, p_dist, remainder);
                ++part.instances_checked;
                if (factors != in_product) {
                    part.failures.push_back(
                        {"G=" + describe(g) + " H=" + describe(h) + " A=" + mask_to_string(a) +
                             " B=" + mask_to_string(b),
                         "AxB in DP'(G box H) iff A in DP'(G) and B in DP'(H)",
                         std::string("product side is ") + (in_product ? "true" : "false") +
                             ", factor side is " + (factors ? "true" : "false")});
                }
            }
        }
    });
    for (const auto& part : parts) {
        report.instances_checked += part.instances_checked;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::vector<Vertex> product_sdp_order(const std::vector<Vertex>& left_order,
                                      const std::vector<Vertex>& right_order, int left_n,
                                      int right_n) {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(left_n) * right_n);
    for (Vertex x : right_order) {
        for (Vertex u : left_order) out.push_back(u * right_n + x);
    }
    return out;
}

VerificationReport check_thm2(const std::vector<Graph>& catalog_g,
                              const std::vector<Graph>& catalog_h, int max_product_order,
                              const VerifyOptions& opts) {
    const auto start = Clock::now();
    VerificationReport report;
    report.claim_id = "thm2";
    report.seed = opts.seed;

    // factor sdp sequences are reused across pairs
    std::vector<SdpSequence> seq_g(catalog_g.size()), seq_h(catalog_h.size());
    for (size_t i = 0; i < catalog_g.size(); ++i) seq_g[i] = sdp_sequence(catalog_g[i]);
    for (size_t i = 0; i < catalog_h.size(); ++i) seq_h[i] = sdp_sequence(catalog_h[i]);

    struct Pair {
        size_t gi, hi;
    };
    std::vector<Pair> todo;
    for (size_t gi = 0; gi < catalog_g.size(); ++gi) {
        for (size_t hi = 0; hi < catalog_h.size(); ++hi) {
            if (catalog_g[gi].order() * catalog_h[hi].order() <= max_product_order) {
                todo.push_back({gi, hi});
            }
        }
    }

    std::vector<VerificationReport> parts(todo.size());
    parallel_for(static_cast<long long>(todo.size()), opts.jobs, [&](long long i) {
        const Graph& g = catalog_g[todo[static_cast<size_t>(i)].gi];
        const Graph& h = catalog_h[todo[static_cast<size_t>(i)].hi];
        const SdpSequence& gs = seq_g[todo[static_cast<size_t>(i)].gi];
        const SdpSequence& hs = seq_h[todo[static_cast<size_t>(i)].hi];
        VerificationReport& part = parts[static_cast<size_t>(i)];

        const ProductGraph product = cart_product(g, h);
        const bool product_sdp = is_sdp(product.underlying);
        const bool factors_sdp = gs.has_value() && hs.has_value();
        part.instances_checked = 1;
        if (product_sdp != factors_sdp) {
            part.failures.push_back({"G=" + describe(g) + " H=" + describe(h),
                                     "G box H sdp iff G sdp and H sdp",
                                     std::string("product side is ") +
                                         (product_sdp ? "true" : "false") + ", factor side is " +
                                         (factors_sdp ? "true" : "false")});
        }
        if (factors_sdp) {
            // explicit row-major sequence, re-verified prefix by prefix
            const DistanceMatrix p_dist = bfs_distances(product.underlying);
            const auto order = product_sdp_order(*gs, *hs, g.order(), h.order());
            std::uint64_t surviving = full_mask(product.order());
            for (size_t s = 0; s < order.size(); ++s) {
                surviving &= ~bit(order[s]);
                ++part.instances_checked;
                if (!is_isometric_masked(product.underlying, p_dist, surviving)) {
                    part.failures.push_back(
                        {"G=" + describe(g) + " H=" + describe(h) + " prefix=" +
                             std::to_string(s + 1),
                         "constructed product sequence leaves isometric remainders",
                         "remainder " + mask_to_string(surviving) + " is not isometric"});
                }
            }
        }
    });
    for (const auto& part : parts) {
        report.instances_checked += part.instances_checked;
        report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

DpSpectrum cart_product_spectrum(const Graph& left, const Graph& right,
                                 const ProductGraph& product) {
    const DistanceMatrix p_dist = bfs_distances(product.underlying);
    if (!p_dist.all_finite() && product.order() > 1) {
        throw DisconnectedInput("product spectrum is defined for connected products only");
    }
    const int m = left.order(), n = right.order();
    const std::uint64_t all = full_mask(product.order());
    std::set<int> seeds;

    // Factor sdp sequences assemble into a product deletion order whose
    // prefixes witness one order each; stop at the first unverified prefix.
    const SdpSequence left_seq = sdp_sequence(left);
    const SdpSequence right_seq = sdp_sequence(right);
    if (left_seq && right_seq) {
        std::uint64_t surviving = all;
        for (Vertex v : product_sdp_order(*left_seq, *right_seq, m, n)) {
            surviving &= ~bit(v);
            if (!is_isometric_masked(product.underlying, p_dist, surviving)) break;
            if (surviving) seeds.insert(std::popcount(surviving));
        }
    }

    // Products of factor removal sets cover many of the remaining orders.
    const RemovalSetFamily fam_left = removal_set_family(left, m);
    const RemovalSetFamily fam_right = removal_set_family(right, n);
    for (const VertexSet& a : fam_left.sets) {
        if (a.is_empty()) continue;
        for (const VertexSet& b : fam_right.sets) {
            if (b.is_empty()) continue;
            const int k = m * n - a.count() * b.count();
            if (k < 1 || seeds.count(k)) continue;
            const std::uint64_t remainder = all & ~product_mask(a.bits, b.bits, n);
            if (is_isometric_masked(product.underlying, p_dist, remainder)) seeds.insert(k);
        }
    }

    return dp_spectrum_seeded(product.underlying, p_dist, seeds);
}

HuntReport hunt_conjecture(const std::vector<Graph>& left_catalog,
                           const std::vector<Graph>& right_catalog, const HuntOptions& opts) {
    int max_left = 0, max_right = 0;
    for (const Graph& g : left_catalog) max_left = std::max(max_left, g.order());
    for (const Graph& g : right_catalog) max_right = std::max(max_right, g.order());
    if (max_left * max_right > opts.product_order_cap) {
        throw ScaleExceeded("projected product order " + std::to_string(max_left) + "*" +
                            std::to_string(max_right) + " exceeds the cap of " +
                            std::to_string(opts.product_order_cap));
    }

    const auto start = Clock::now();
    HuntReport report;
    {
        std::vector<Graph> combined = left_catalog;
        combined.insert(combined.end(), right_catalog.begin(), right_catalog.end());
        report.catalog_checksum = catalog_checksum_hex(combined);
    }

    std::vector<const Graph*> dp_left, dp_right;
    for (const Graph& g : left_catalog) {
        if (is_connected(g) && is_dp(g)) dp_left.push_back(&g);
    }
    for (const Graph& g : right_catalog) {
        if (is_connected(g) && is_dp(g)) dp_right.push_back(&g);
    }
    report.candidates_left = static_cast<long long>(dp_left.size());
    report.candidates_right = static_cast<long long>(dp_right.size());

    const long long pairs =
        static_cast<long long>(dp_left.size()) * static_cast<long long>(dp_right.size());
    struct PairOutcome {
        std::set<int> missing;
        DpSpectrum spectrum;
        double seconds = 0.0;
    };
    std::vector<PairOutcome> outcomes(static_cast<size_t>(pairs));
    parallel_for(pairs, opts.jobs, [&](long long i) {
        const Graph& g = *dp_left[static_cast<size_t>(i) / dp_right.size()];
        const Graph& h = *dp_right[static_cast<size_t>(i) % dp_right.size()];
        const auto pair_start = Clock::now();
        const ProductGraph product = cart_product(g, h);
        PairOutcome& out = outcomes[static_cast<size_t>(i)];
        out.spectrum = cart_product_spectrum(g, h, product);
        for (int k : out.spectrum.missing_orders()) out.missing.insert(k);
        out.seconds = seconds_since(pair_start);
    });

    report.pairs_checked = pairs;
    for (long long i = 0; i < pairs; ++i) {
        const PairOutcome& out = outcomes[static_cast<size_t>(i)];
        const Graph& g = *dp_left[static_cast<size_t>(i) / dp_right.size()];
        const Graph& h = *dp_right[static_cast<size_t>(i) % dp_right.size()];
        if (out.seconds > report.slowest_pair_seconds) {
            report.slowest_pair_seconds = out.seconds;
            report.slowest_pair = describe(g) + " box " + describe(h);
        }
        if (!out.missing.empty()) {
            report.counterexamples.push_back({g, h, out.spectrum, out.missing});
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

HuntReport hunt_conjecture(int max_left, int max_right, const HuntOptions& opts) {
    if (max_left * max_right > opts.product_order_cap) {
        throw ScaleExceeded("projected product order " + std::to_string(max_left) + "*" +
                            std::to_string(max_right) + " exceeds the cap of " +
                            std::to_string(opts.product_order_cap));
    }
    return hunt_conjecture(connected_graphs_up_to(max_left), connected_graphs_up_to(max_right),
                           opts);
}

} // namespace dpgraph
