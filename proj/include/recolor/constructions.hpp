#pragma once

#include <string>
#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Labeling data for the frozen construction on 2k vertices: vertex 2i-2 is
// u_{2i-1} and vertex 2i-1 is u_{2i}. phi/alpha are 1-based per vertex;
// pair_sequence lists the k alpha-pairs in placement order.
struct GtkLabels {
    std::vector<int> phi;
    std::vector<int> alpha;
    std::vector<std::pair<int, int>> pair_sequence;
};

// K_{k,k} minus the perfect matching a_i-b_i, with the matching coloring
// c(a_i) = c(b_i) = i. Vertex order a_1..a_k, b_1..b_k. Frozen for k >= 3.
std::pair<Graph, ProperColoring> build_mk(int k);

// The 2k-vertex graph with u_i ~ u_j iff phi and alpha both differ, where
// phi(u_{2i-1}) = phi(u_{2i}) = i and the alpha-pairs run through the
// cyclic pairs {i, i mod t + 1} first, then the remaining 2-subsets of
// {1..t} in lexicographic order, min first. Requires t >= 4 and
// t+1 <= k <= t(t-1)/2.
std::pair<Graph, GtkLabels> build_gtk(int t, int k);

// Frozen-coloring lift: s rounds of duplicating the closed neighborhoods of
// a color class that meets a maximum clique, each round adding one fresh
// color. Requires a proper frozen k-coloring, chi = omega, and a P_l-free
// base; the result keeps all three with chi = omega raised by s.
std::pair<Graph, ProperColoring> lift(const Graph& g, const ProperColoring& c, int s, int l);

// The two 7-vertex expansions of C5 with K2 parts: first an adjacent pair
// of cycle vertices expanded, then a nonadjacent pair.
std::pair<Graph, Graph> k3c5_witnesses();

// Transcribed base graphs G1..G10 with labels x_1..x_n.
Graph catalog(int i);

// C5 with one vertex expanded into m disjoint K2s.
Graph family_g1(int m);

// G4 with x5 expanded into m disjoint K2s.
Graph family_g4(int m);

Graph family_g10();

// Identification fixtures: transcribed graph, drawn 3-coloring, claim tag.
struct Fixture {
    Graph graph;
    ProperColoring coloring;
    std::string tag;
};

std::vector<Fixture> fixtures();

}  // namespace recolor
