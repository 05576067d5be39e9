#pragma once

#include <optional>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Induced-subgraph pattern.
struct Pattern {
    Graph target;
};

Pattern path_pattern(int l);           // l >= 1
Pattern cycle_pattern(int l);          // l >= 3
Pattern gem_pattern();                 // P4 plus a dominating vertex
Pattern p5_complement_pattern();
Pattern complete_pattern(int t);       // t >= 1

// Injective m with adj_g(m[a], m[b]) <=> adj_p(a, b) for all pairs, or
// nullopt. Backtracking over pattern vertices in most-constrained order;
// ties and candidate scans run in ascending index order.
std::optional<std::vector<int>> find_induced(const Graph& g, const Pattern& p);

// No induced path on l vertices. Specialized path extension search.
bool is_pl_free(const Graph& g, int l);

// Exact clique number by branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);

// Lexicographically first maximum clique, ascending.
std::vector<int> max_clique(const Graph& g);

// Exact k-colorability witness via branch and bound seeded with a maximum
// clique; nullopt when no proper k-coloring exists.
std::optional<ProperColoring> is_k_colorable(const Graph& g, int k);

// Exact chromatic number (clique lower bound, greedy upper bound, then
// k-colorability upward from the lower bound).
int chromatic_number(const Graph& g);

}  // namespace recolor
