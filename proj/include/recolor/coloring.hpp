#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolor/errors.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Proper k-coloring: assign[v] in 1..k, adjacent vertices differ.
struct ProperColoring {
    int k = 0;
    std::vector<int> assign;

    bool operator==(const ProperColoring& other) const { return k == other.k && assign == other.assign; }
};

struct RecoloringStep {
    int vertex = 0;
    int from = 0;  // colors 1-based, from != to
    int to = 0;
};

// Component census of the reconfiguration graph R_k(G): nodes are the proper
// k-colorings, edges join colorings differing on exactly one vertex.
struct ReconfigReport {
    int k = 0;
    std::uint64_t total = 0;
    std::uint64_t components = 0;
    std::vector<std::uint64_t> component_sizes;  // descending
    std::vector<ProperColoring> frozen;          // ascending canonical code
    bool mixing = false;                         // components <= 1
};

// Throws LengthMismatch / InvalidK / ImproperColoring.
void validate_coloring(const Graph& g, const ProperColoring& c);
ProperColoring make_coloring(const Graph& g, int k, std::vector<int> assign);

// State-space guard: reconfiguration walks refuse to start when k^n exceeds
// the limit (RECOLOR_LIMIT overrides the default) or when k > 62, the widest
// palette the packed color masks carry.
inline constexpr std::uint64_t default_state_limit = 100000000;
std::uint64_t state_limit_from_env();

// Canonical coloring code: base-k integer with vertex 0 as the least
// significant digit and colors 0-based. Streams below run in ascending
// code order.
std::uint64_t coloring_code(const ProperColoring& c);
ProperColoring coloring_from_code(std::uint64_t code, int n, int k);

// Every proper k-coloring exactly once, ascending canonical code.
std::vector<ProperColoring> enumerate_colorings(const Graph& g, int k);
std::vector<std::uint64_t> enumerate_coloring_codes(const Graph& g, int k);
std::uint64_t count_colorings(const Graph& g, int k, std::uint64_t cap);  // stops early at cap

// True iff every closed neighborhood carries all k colors (equivalently, no
// single-vertex recoloring applies).
bool is_frozen(const Graph& g, const ProperColoring& c);

ReconfigReport reconfig_analysis(const Graph& g, int k, std::uint64_t limit = state_limit_from_env());

// Connectivity of R_k(G) by one traversal; no component breakdown.
bool is_mixing(const Graph& g, int k, std::uint64_t limit = state_limit_from_env());

// Shortest single-vertex recoloring sequence from a to b, or nullopt when
// they sit in different components.
std::optional<std::vector<RecoloringStep>> recoloring_path(const Graph& g, const ProperColoring& a,
                                                           const ProperColoring& b,
                                                           std::uint64_t limit = state_limit_from_env());

// Constraint search for a frozen k-coloring; nullopt when none exists.
std::optional<ProperColoring> search_frozen(const Graph& g, int k);

// Every frozen k-coloring, ascending canonical code.
std::vector<ProperColoring> all_frozen(const Graph& g, int k);

}  // namespace recolor
