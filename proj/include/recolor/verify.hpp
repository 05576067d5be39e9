#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "recolor/graph.hpp"

namespace recolor {

// One mechanically checked claim. A failing result always carries a concrete
// counterexample or error description in the evidence payload.
struct ScenarioResult {
    std::string id;
    std::string citation;
    bool pass = false;
    nlohmann::json evidence;
    double elapsed_seconds = 0.0;
};

struct VerifyOptions {
    bool deep = false;         // census scenarios climb from n=6 to n=7
    std::uint64_t limit = 0;   // state-space guard; 0 = RECOLOR_LIMIT/default
    int threads = 0;           // census workers; 0 = hardware concurrency
};

// All labeled simple graphs on n vertices, ascending edge-bitmask order.
// Bit b of the mask is pair b in the row-major order (0,1),(0,2),...,(0,n-1),
// (1,2),... Supported range 1 <= n <= 7.
class LabeledGraphStream {
public:
    explicit LabeledGraphStream(int n);
    std::uint64_t total() const { return total_; }
    std::optional<Graph> next();

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
};

LabeledGraphStream enumerate_labeled_graphs(int n);
Graph labeled_graph_from_mask(int n, std::uint64_t mask);

// Registered scenario ids in run order. The census ids accept an optional
// "(N)" suffix choosing the vertex bound, e.g. "thm-1.6-census(5)".
std::vector<std::string> scenario_ids();

ScenarioResult run_scenario(const std::string& id, const VerifyOptions& opts = {});

nlohmann::json result_to_json(const ScenarioResult& r);

}  // namespace recolor
