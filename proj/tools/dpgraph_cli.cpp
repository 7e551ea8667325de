// dpgraph: compute dp spectra, sdp orderings and graph products, verify
// the toolkit's structural claims against brute force, and hunt for
// Cartesian-product counterexamples.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "dpgraph/catalog.hpp"
#include "dpgraph/graph6.hpp"
#include "dpgraph/report.hpp"
#include "dpgraph/verify.hpp"
#include "dpgraph/version.hpp"

namespace {

using namespace dpgraph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// A graph argument is a stock name (K4, P3, C7, c7+e), a file path, or a
// literal graph6 string, probed in that order.
Graph load_graph(const std::string& spec, const std::string& format, bool one_indexed) {
    static const std::regex stock(R"(^([KPCkpc])(\d+)$)");
    std::smatch match;
    if (std::regex_match(spec, match, stock)) {
        const int n = std::stoi(match[2]);
        switch (std::tolower(match[1].str()[0])) {
            case 'k': return complete_graph(n);
            case 'p': return path_graph(n);
            case 'c': return cycle_graph(n);
        }
    }
    if (spec == "c7+e" || spec == "C7+e") return c7_with_pendant();

    if (spec == "-" || std::filesystem::exists(spec)) {
        std::stringstream buffered;
        if (spec == "-") {
            buffered << std::cin.rdbuf();
        } else {
            std::ifstream file(spec);
            if (!file) throw Error("cannot open " + spec);
            buffered << file.rdbuf();
        }
        const std::string content = buffered.str();
        std::string fmt = format;
        if (fmt == "auto") {
            if (spec.ends_with(".g6")) {
                fmt = "g6";
            } else if (spec.ends_with(".edges")) {
                fmt = "edges";
            } else {
                // sniff: edge lists start with two integers
                std::istringstream probe(content);
                int a = 0, b = 0;
                fmt = (probe >> a >> b) ? "edges" : "g6";
            }
        }
        std::istringstream in(content);
        if (fmt == "edges") return parse_edge_list(in, one_indexed);
        const auto graphs = read_graph6_file(in);
        if (graphs.empty()) throw BadHeader("no graph6 line found in " + spec);
        return graphs.front();
    }

    Graph g = parse_graph6(spec);
    g.set_label(spec);
    return g;
}

std::vector<Graph> load_catalog_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open catalog " + path);
    return read_graph6_file(file);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::string verification_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "claim: " << report.claim_id << "\n"
        << "instances checked: " << report.instances_checked << "\n"
        << "failures: " << report.failures.size() << "\n"
        << "elapsed: " << report.elapsed_seconds << "s\n"
        << "sampled: " << (report.sampled ? "yes" : "no") << "\n"
        << "seed: " << report.seed << "\n"
        << "catalog checksum: " << report.catalog_checksum << "\n";
    for (const Failure& f : report.failures) {
        out << "FAIL " << f.input << "\n  expected: " << f.expected << "\n  got: " << f.got
            << "\n";
    }
    out << "result: " << (report.holds() ? "HOLDS" : "VIOLATED") << "\n";
    return out.str();
}

std::string hunt_text(const HuntReport& report) {
    std::ostringstream out;
    out << "dp candidates: " << report.candidates_left << " x " << report.candidates_right << "\n"
        << "pairs checked: " << report.pairs_checked << "\n"
        << "elapsed: " << report.elapsed_seconds << "s"
        << " (slowest pair " << report.slowest_pair_seconds << "s";
    if (!report.slowest_pair.empty()) out << ": " << report.slowest_pair;
    out << ")\n"
        << "catalog checksum: " << report.catalog_checksum << "\n"
        << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const CounterexampleRecord& r : report.counterexamples) {
        out << "COUNTEREXAMPLE left=" << serialize_graph6(r.left)
            << " right=" << serialize_graph6(r.right) << " missing={";
        bool first = true;
        for (int k : r.missing_orders) {
            if (!first) out << ",";
            out << k;
            first = false;
        }
        out << "}\n";
    }
    out << "result: " << (report.consistent() ? "CONSISTENT" : "COUNTEREXAMPLE FOUND") << "\n";
    return out.str();
}

struct VerifyCli {
    std::string claim;
    int max_left = -1; // -1 = claim default
    int max_right = -1;
    int max_product = -1;
    std::string catalog_left_path;
    std::string catalog_right_path;
    int jobs = 1;
    std::uint64_t seed = 0x5eed5eedULL;
    bool emit_json = false;
    std::string out_path;
};

int run_verify(const VerifyCli& cli) {
    VerifyOptions opts;
    opts.jobs = cli.jobs;
    opts.seed = cli.seed;

    const bool left_needs_lex =
        cli.claim == "eq1" || cli.claim == "cor-fiber" || cli.claim == "thm1";

    int max_left = cli.max_left, max_right = cli.max_right, max_product = cli.max_product;
    auto defaults = [&](int ml, int mr, int mp) {
        if (max_left < 0) max_left = ml;
        if (max_right < 0) max_right = mr;
        if (max_product < 0) max_product = mp;
    };
    bool rights_connected_only = true;

    if (cli.claim == "eq1" || cli.claim == "cor-fiber") {
        defaults(4, 3, 12);
        rights_connected_only = false;
    } else if (cli.claim == "thm1") {
        defaults(5, 3, 64);
        rights_connected_only = false;
    } else if (cli.claim == "lem-cart-iso" || cli.claim == "lem-removal") {
        defaults(4, 4, 64);
    } else if (cli.claim == "thm2") {
        defaults(5, 5, 16);
    } else {
        throw UnknownClaim("unknown claim '" + cli.claim +
                           "'; expected one of eq1, cor-fiber, thm1, lem-cart-iso, lem-removal, "
                           "thm2");
    }

    std::vector<Graph> lefts = cli.catalog_left_path.empty()
                                   ? connected_graphs_up_to(max_left)
                                   : load_catalog_file(cli.catalog_left_path);
    std::vector<Graph> rights;
    if (cli.catalog_right_path.empty()) {
        rights = rights_connected_only ? connected_graphs_up_to(max_right)
                                       : all_graphs_up_to(max_right);
    } else {
        rights = load_catalog_file(cli.catalog_right_path);
    }

    if (left_needs_lex) {
        std::erase_if(lefts, [](const Graph& g) { return g.order() < 2 || !is_connected(g); });
    } else {
        std::erase_if(lefts, [](const Graph& g) { return !is_connected(g); });
    }
    if (cli.claim == "lem-cart-iso" || cli.claim == "lem-removal" || cli.claim == "thm2") {
        std::erase_if(rights, [](const Graph& g) { return !is_connected(g); });
    }
    if (cli.claim == "thm2" && cli.catalog_left_path.empty()) {
        lefts.push_back(c7_with_pendant()); // the stock non-sdp factor
    }

    VerificationReport report;
    if (cli.claim == "eq1") {
        report = check_eq1_catalog(lefts, rights, max_product, opts);
    } else if (cli.claim == "cor-fiber") {
        report = check_corollary_fiber_catalog(lefts, rights, max_product, opts);
    } else if (cli.claim == "thm1") {
        report = check_thm1(lefts, rights, opts);
    } else if (cli.claim == "lem-cart-iso") {
        report = check_cart_isometry_lemma(lefts, rights, opts);
    } else if (cli.claim == "lem-removal") {
        report = check_removal_lemma(lefts, rights, opts);
    } else {
        report = check_thm2(lefts, rights, max_product, opts);
    }
    {
        std::vector<Graph> combined = lefts;
        combined.insert(combined.end(), rights.begin(), rights.end());
        report.catalog_checksum = catalog_checksum_hex(combined);
    }

    const std::string text = verification_text(report);
    if (cli.emit_json) {
        write_output(cli.out_path, verification_to_json(report).dump(2) + "\n");
        if (!cli.out_path.empty()) std::cout << text;
    } else {
        if (!cli.out_path.empty()) write_output(cli.out_path, text);
        std::cout << text;
    }
    return report.holds() ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph metric toolkit: dp spectra, sdp orderings, graph products"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // analyze
    std::string an_input = "-";
    std::string an_format = "auto";
    bool an_one_indexed = false;
    bool an_json = false;
    int an_removal = -1;
    auto* analyze = app.add_subcommand("analyze", "dp/sdp analysis of one graph");
    analyze->add_option("input", an_input, "stock name (K4, P3, C7, c7+e), file, '-', or graph6");
    analyze->add_option("--format", an_format, "input format: auto, g6, edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    analyze->add_flag("--one-indexed", an_one_indexed, "edge lists use vertices 1..n");
    analyze->add_flag("--json", an_json, "emit a JSON report");
    analyze->add_option("--removal-sets", an_removal, "also list removal sets up to this size");

    // product
    std::string pr_left, pr_right;
    std::string pr_output = "g6";
    std::string pr_format = "auto";
    bool pr_lex = false, pr_cart = false, pr_one_indexed = false;
    auto* product = app.add_subcommand("product", "lexicographic or Cartesian product");
    product->add_option("left", pr_left, "left factor")->required();
    product->add_option("right", pr_right, "right factor")->required();
    product->add_flag("--lex", pr_lex, "lexicographic product");
    product->add_flag("--cart", pr_cart, "Cartesian product");
    product->add_option("--output", pr_output, "output format: g6, edges, dot")
        ->check(CLI::IsMember({"g6", "edges", "dot"}));
    product->add_option("--format", pr_format, "input format: auto, g6, edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    product->add_flag("--one-indexed", pr_one_indexed, "edge lists use vertices 1..n");

    // verify
    VerifyCli ve;
    auto* verify = app.add_subcommand("verify", "check one structural claim against brute force");
    verify->add_option("claim", ve.claim, "eq1, cor-fiber, thm1, lem-cart-iso, lem-removal, thm2")
        ->required();
    verify->add_option("--max-left", ve.max_left, "left catalog order cap");
    verify->add_option("--max-right", ve.max_right, "right catalog order cap");
    verify->add_option("--max-product", ve.max_product, "skip pairs whose product is larger");
    verify->add_option("--catalog", ve.catalog_left_path, "left catalog (graph6 lines)");
    verify->add_option("--catalog-right", ve.catalog_right_path, "right catalog (graph6 lines)");
    verify->add_option("--jobs", ve.jobs, "worker threads");
    verify->add_option("--seed", ve.seed, "sampling seed");
    verify->add_flag("--json", ve.emit_json, "emit a JSON report");
    verify->add_option("--out", ve.out_path, "write the report to a file");

    // hunt
    int hu_max_left = 4, hu_max_right = 4, hu_cap = 20, hu_jobs = 1;
    std::string hu_catalog_left, hu_catalog_right, hu_out;
    bool hu_json = false;
    auto* hunt = app.add_subcommand("hunt", "search dp pairs for a product counterexample");
    hunt->add_option("--max-left", hu_max_left, "left factor order cap");
    hunt->add_option("--max-right", hu_max_right, "right factor order cap");
    hunt->add_option("--cap", hu_cap, "product order limit");
    hunt->add_option("--jobs", hu_jobs, "worker threads");
    hunt->add_option("--catalog", hu_catalog_left, "left catalog (graph6 lines)");
    hunt->add_option("--catalog-right", hu_catalog_right, "right catalog (graph6 lines)");
    hunt->add_option("--out", hu_out, "write the JSON report to a file");
    hunt->add_flag("--json", hu_json, "emit the JSON report on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const Graph g =
                load_graph(an_input, an_format, an_one_indexed);
            const AnalysisReport report =
                analyze_graph(g, an_removal >= 0 ? std::optional<int>(an_removal) : std::nullopt);
            if (an_json) {
                std::cout << analysis_to_json(report).dump(2) << "\n";
            } else {
                std::cout << analysis_to_text(report);
            }
            return kExitOk;
        }

        if (product->parsed()) {
            if (pr_lex == pr_cart) {
                std::cerr << "error: choose exactly one of --lex / --cart\n";
                return kExitUsage;
            }
            const Graph left = load_graph(pr_left, pr_format, pr_one_indexed);
            const Graph right = load_graph(pr_right, pr_format, pr_one_indexed);
            const ProductGraph prod = pr_lex ? lex_product(left, right) : cart_product(left, right);
            if (pr_output == "g6") {
                std::cout << serialize_graph6(prod.underlying) << "\n";
            } else {
                std::cout << "# " << prod.underlying.label() << "; vertex (u,x) has index u*"
                          << prod.right_order << "+x\n";
                std::cout << (pr_output == "dot" ? to_dot(prod.underlying)
                                                 : serialize_edge_list(prod.underlying));
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            return run_verify(ve);
        }

        if (hunt->parsed()) {
            HuntOptions opts;
            opts.product_order_cap = hu_cap;
            opts.jobs = hu_jobs;
            HuntReport report;
            if (hu_catalog_left.empty() && hu_catalog_right.empty()) {
                report = hunt_conjecture(hu_max_left, hu_max_right, opts);
            } else {
                const auto lefts = hu_catalog_left.empty() ? connected_graphs_up_to(hu_max_left)
                                                           : load_catalog_file(hu_catalog_left);
                const auto rights = hu_catalog_right.empty()
                                        ? connected_graphs_up_to(hu_max_right)
                                        : load_catalog_file(hu_catalog_right);
                report = hunt_conjecture(lefts, rights, opts);
            }
            if (!hu_out.empty()) write_output(hu_out, hunt_to_json(report).dump(2) + "\n");
            if (hu_json) {
                std::cout << hunt_to_json(report).dump(2) << "\n";
            } else {
                std::cout << hunt_text(report);
            }
            return report.consistent() ? kExitOk : kExitViolation;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
