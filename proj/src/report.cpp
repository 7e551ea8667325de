#include "dpgraph/report.hpp"

#include <sstream>

#include "dpgraph/graph6.hpp"
#include "dpgraph/version.hpp"

namespace dpgraph {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    j["edge_count"] = g.edge_count();
    if (!g.label().empty()) j["label"] = g.label();
    if (g.order() <= 62) j["graph6"] = serialize_graph6(g);
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

json spectrum_to_json(const DpSpectrum& spec) {
    json j;
    j["host_order"] = spec.host_order;
    j["achievable"] = spec.achievable;
    j["missing_orders"] = spec.missing_orders();
    return j;
}

json verification_to_json(const VerificationReport& report) {
    json j;
    j["type"] = "verify";
    j["version"] = kVersion;
    j["claim"] = report.claim_id;
    j["holds"] = report.holds();
    j["instances_checked"] = report.instances_checked;
    json failures = json::array();
    for (const Failure& f : report.failures) {
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    j["failures"] = failures;
    j["elapsed_seconds"] = report.elapsed_seconds;
    j["sampled"] = report.sampled;
    j["seed"] = report.seed;
    j["catalog_checksum"] = report.catalog_checksum;
    return j;
}

json counterexample_to_json(const CounterexampleRecord& record) {
    json j;
    j["left"] = graph_to_json(record.left);
    j["right"] = graph_to_json(record.right);
    j["product_spectrum"] = spectrum_to_json(record.product_spectrum);
    j["missing_orders"] = record.missing_orders;
    return j;
}

json hunt_to_json(const HuntReport& report) {
    json j;
    j["type"] = "hunt";
    j["version"] = kVersion;
    j["consistent"] = report.consistent();
    j["pairs_checked"] = report.pairs_checked;
    j["candidates_left"] = report.candidates_left;
    j["candidates_right"] = report.candidates_right;
    j["elapsed_seconds"] = report.elapsed_seconds;
    j["slowest_pair_seconds"] = report.slowest_pair_seconds;
    j["slowest_pair"] = report.slowest_pair;
    j["catalog_checksum"] = report.catalog_checksum;
    json counterexamples = json::array();
    for (const CounterexampleRecord& r : report.counterexamples) {
        counterexamples.push_back(counterexample_to_json(r));
    }
    j["counterexamples"] = counterexamples;
    return j;
}

AnalysisReport analyze_graph(const Graph& g, std::optional<int> removal_set_max) {
    if (!is_connected(g)) {
        throw DisconnectedInput("analysis is defined for connected graphs only");
    }
    AnalysisReport report;
    report.graph = g;
    report.diam = diameter(g);
    report.spectrum = dp_spectrum(g);
    report.gap_pairs = non_dp_interval_pairs(report.spectrum);
    report.dp = report.spectrum.is_full();
    report.sequence = sdp_sequence(g);
    report.sdp = report.sequence.has_value();
    if (removal_set_max) {
        report.removal_sets = removal_set_family(g, *removal_set_max);
    }
    return report;
}

json analysis_to_json(const AnalysisReport& report) {
    json j;
    j["type"] = "analyze";
    j["version"] = kVersion;
    j["graph"] = graph_to_json(report.graph);
    j["connected"] = true;
    j["diameter"] = report.diam;
    j["spectrum"] = spectrum_to_json(report.spectrum);
    json gaps = json::array();
    for (const NonDpIntervalPair& gap : report.gap_pairs) gaps.push_back({gap.a, gap.b});
    j["gap_pairs"] = gaps;
    j["dp"] = report.dp;
    j["sdp"] = report.sdp;
    if (report.sequence) {
        j["sdp_sequence"] = *report.sequence;
    } else {
        j["sdp_sequence"] = nullptr;
    }
    if (report.removal_sets) {
        json sets = json::array();
        for (const VertexSet& s : report.removal_sets->sets) sets.push_back(s.members());
        j["removal_sets"] = sets;
    }
    return j;
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ",";
        out << xs[i];
    }
    return out.str();
}

} // namespace

std::string analysis_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    const Graph& g = report.graph;
    out << "graph: " << (g.label().empty() ? serialize_graph6(g) : g.label()) << " (n=" << g.order()
        << ", m=" << g.edge_count() << ")\n";
    out << "diameter: " << report.diam << "\n";
    out << "dp spectrum: {" << join_ints({report.spectrum.achievable.begin(),
                                          report.spectrum.achievable.end()})
        << "}\n";
    const auto missing = report.spectrum.missing_orders();
    if (report.dp) {
        out << "dp: yes\n";
    } else {
        out << "dp: no; missing order" << (missing.size() == 1 ? "" : "s") << " "
            << join_ints(missing) << "\n";
        for (const NonDpIntervalPair& gap : report.gap_pairs) {
            out << "gap pair: (" << gap.a << "," << gap.b << ")\n";
        }
    }
    if (report.sdp) {
        out << "sdp: yes\n";
        out << "sdp sequence: " << join_ints(*report.sequence) << "\n";
    } else {
        out << "sdp: no\n";
        out << "sdp sequence: none\n";
    }
    if (report.removal_sets) {
        out << "removal sets: " << report.removal_sets->sets.size() << "\n";
        for (const VertexSet& s : report.removal_sets->sets) {
            out << "  {" << join_ints(s.members()) << "}\n";
        }
    }
    return out.str();
}

} // namespace dpgraph
