#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// graph6: size bytes (n+63, or '~' prefix for the 3-byte form), then the
// upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits
// per printable character, offset 63. Supported order: 0 <= n <= 4096.
inline constexpr int graph6_max_order = 4096;

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// JSON graph schema: { "n": int, "edges": [[u,v],...], "labels": {"idx": str} }.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Coloring JSON: { "k": int, "assign": [c_0,...,c_{n-1}] }, colors 1-based.
nlohmann::json coloring_to_json(const ProperColoring& c);
ProperColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ReconfigReport& r);

// Layout-free dot with plain node/edge statements; labels preserved.
std::string to_dot(const Graph& g);

// Accepts a graph6 line or a JSON object (sniffed by the leading '{').
Graph parse_graph(std::string_view text);

}  // namespace recolor
