#ifndef DPGRAPH_REPORT_HPP
#define DPGRAPH_REPORT_HPP

#include <json.hpp>

#include "dpgraph/metric.hpp"
#include "dpgraph/verify.hpp"

namespace dpgraph {

// JSON emissions validate against schema/report.schema.json.

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json spectrum_to_json(const DpSpectrum& spec);
nlohmann::json verification_to_json(const VerificationReport& report);
nlohmann::json counterexample_to_json(const CounterexampleRecord& record);
nlohmann::json hunt_to_json(const HuntReport& report);

// Full analysis of one connected graph, as produced by the analyze command.
struct AnalysisReport {
    Graph graph;
    Dist diam = 0;
    DpSpectrum spectrum;
    std::vector<NonDpIntervalPair> gap_pairs;
    bool dp = false;
    bool sdp = false;
    SdpSequence sequence;
    std::optional<RemovalSetFamily> removal_sets;
};

AnalysisReport analyze_graph(const Graph& g, std::optional<int> removal_set_max = std::nullopt);

nlohmann::json analysis_to_json(const AnalysisReport& report);
std::string analysis_to_text(const AnalysisReport& report);

} // namespace dpgraph

#endif
