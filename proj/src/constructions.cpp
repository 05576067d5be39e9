#include "recolor/constructions.hpp"

#include <algorithm>

#include "recolor/patterns.hpp"

namespace recolor {

std::pair<Graph, ProperColoring> build_mk(int k) {
    if (k < 2) fail(errc::invalid_k, "M_k needs k >= 2");
    Graph g(2 * k);
    ProperColoring c{k, std::vector<int>(2 * k)};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            if (i != j) g.add_edge(i, k + j);
        g.set_label(i, "a_" + std::to_string(i + 1));
        g.set_label(k + i, "b_" + std::to_string(i + 1));
        c.assign[i] = i + 1;
        c.assign[k + i] = i + 1;
    }
    return {std::move(g), std::move(c)};
}

std::pair<Graph, GtkLabels> build_gtk(int t, int k) {
    if (t < 4 || k < t + 1 || k > t * (t - 1) / 2)
        fail(errc::out_of_range, "need t >= 4 and t+1 <= k <= t(t-1)/2");

    GtkLabels labels;
    for (int i = 1; i <= t; ++i) labels.pair_sequence.emplace_back(i, i % t + 1);
    for (int a = 1; a <= t && static_cast<int>(labels.pair_sequence.size()) < k; ++a)
        for (int b = a + 1; b <= t && static_cast<int>(labels.pair_sequence.size()) < k; ++b) {
            const bool cyclic = b == a + 1 || (a == 1 && b == t);
            if (!cyclic) labels.pair_sequence.emplace_back(a, b);
        }

    const int n = 2 * k;
    labels.phi.resize(n);
    labels.alpha.resize(n);
    for (int i = 1; i <= k; ++i) {
        labels.phi[2 * i - 2] = i;
        labels.phi[2 * i - 1] = i;
        labels.alpha[2 * i - 2] = labels.pair_sequence[i - 1].first;
        labels.alpha[2 * i - 1] = labels.pair_sequence[i - 1].second;
    }

    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            if (labels.phi[u] != labels.phi[v] && labels.alpha[u] != labels.alpha[v]) g.add_edge(u, v);
        g.set_label(u, "u_" + std::to_string(u + 1) + "(" + std::to_string(labels.phi[u]) + "," +
                           std::to_string(labels.alpha[u]) + ")");
    }
    return {std::move(g), std::move(labels)};
}

std::pair<Graph, ProperColoring> lift(const Graph& g, const ProperColoring& c, int s, int l) {
    if (s < 1) fail(errc::out_of_range, "lift needs at least one round");
    validate_coloring(g, c);
    if (chromatic_number(g) != clique_number(g))
        fail(errc::chi_omega_mismatch, "lift base needs chi = omega");
    if (!is_frozen(g, c)) fail(errc::not_frozen, "lift base coloring is not frozen");
    if (!is_pl_free(g, l)) fail(errc::not_pl_free, "lift base contains the forbidden path");

    Graph cur = g;
    std::vector<int> assign = c.assign;
    for (int round = 1; round <= s; ++round) {
        const int fresh = c.k + round;
        // Recolor so the lowest vertex of the lexicographically first
        // maximum clique carries color 1, then duplicate color class 1.
        const int pivot_color = assign[max_clique(cur).front()];
        if (pivot_color != 1)
            for (int& a : assign) {
                if (a == 1)
                    a = pivot_color;
                else if (a == pivot_color)
                    a = 1;
            }
        std::vector<int> cls;
        for (int v = 0; v < cur.order(); ++v)
            if (assign[v] == 1) cls.push_back(v);

        const int base = cur.order();
        Graph next(base + static_cast<int>(cls.size()));
        for (const auto& [u, v] : cur.edges()) next.add_edge(u, v);
        if (cur.has_labels())
            for (int v = 0; v < base; ++v) next.set_label(v, cur.label(v));
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const int u = base + static_cast<int>(i);
            next.add_edge(u, cls[i]);
            for (int w : cur.neighbors(cls[i])) next.add_edge(u, w);
            if (cur.has_labels()) next.set_label(u, cur.label(cls[i]) + "'");
            assign.push_back(fresh);
        }
        cur = std::move(next);
    }
    return {std::move(cur), ProperColoring{c.k + s, std::move(assign)}};
}

namespace {

Graph single_vertex() { return Graph(1); }

Graph k2_matching(int m) {
    Graph part(2 * m);
    for (int j = 0; j < m; ++j) part.add_edge(2 * j, 2 * j + 1);
    return part;
}

Graph expand_at(const Graph& base, const std::vector<int>& where, const Graph& part) {
    std::vector<Graph> parts(base.order(), single_vertex());
    for (int v : where) parts[v] = part;
    return expand(base, parts);
}

}  // namespace

std::pair<Graph, Graph> k3c5_witnesses() {
    const Graph c5 = catalog(1);
    return {expand_at(c5, {0, 1}, k2_matching(1)), expand_at(c5, {0, 2}, k2_matching(1))};
}

Graph catalog(int i) {
    // Edges as drawn, endpoints 1-based to match the x_j labels.
    static const std::vector<std::vector<std::pair<int, int>>> drawn = {
        // G1
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}},
        // G2
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {6, 4}, {6, 3}},
        // G3
        {{4, 5}, {4, 7}, {5, 1}, {1, 2}, {2, 7}, {1, 6}, {6, 4}, {6, 3}, {4, 3}, {2, 3}},
        // G4
        {{4, 5}, {4, 3}, {5, 1}, {1, 2}, {2, 3}, {1, 7}, {7, 2}, {4, 7}, {4, 6}, {1, 6}, {3, 6}},
        // G5
        {{4, 5}, {4, 3}, {5, 1}, {1, 8}, {8, 3}, {3, 2}, {7, 4}, {7, 2}, {4, 6}, {1, 7}, {1, 2}, {6, 3}, {6, 1}},
        // G6
        {{4, 5}, {4, 3}, {5, 8}, {8, 2}, {2, 3}, {4, 6}, {6, 8}, {6, 1}, {6, 3}, {1, 2}, {7, 2}, {7, 1}, {7, 4}, {5, 1}},
        // G7
        {{2, 8}, {2, 3}, {8, 4}, {4, 6}, {6, 3}, {2, 5}, {5, 4}, {5, 6}, {5, 7}, {1, 7}, {1, 3}, {1, 4}, {1, 2}},
        // G8
        {{3, 4}, {3, 2}, {4, 5}, {1, 6}, {1, 2}, {5, 7}, {6, 8}, {3, 7}, {7, 8}, {1, 7}, {2, 8}, {4, 8}, {4, 6}, {5, 1}},
        // G9
        {{3, 4}, {3, 2}, {4, 5}, {1, 6}, {1, 2}, {5, 7}, {6, 8}, {3, 7}, {7, 8}, {1, 7}, {2, 8}, {4, 8}, {4, 6}, {5, 1}, {4, 9}, {9, 1}},
        // G10
        {{3, 4}, {3, 2}, {4, 5}, {1, 6}, {1, 2}, {5, 7}, {6, 8}, {3, 7}, {7, 8}, {1, 7}, {2, 8}, {4, 8}, {4, 6}, {1, 5}, {5, 9}, {6, 9}, {3, 9}, {2, 9}},
    };
    static const int orders[] = {5, 6, 7, 7, 8, 8, 8, 8, 9, 9};
    if (i < 1 || i > 10) fail(errc::bad_index, "catalog index " + std::to_string(i));

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : drawn[i - 1]) edges.emplace_back(u - 1, v - 1);
    Graph g = build_graph(orders[i - 1], edges);
    for (int v = 0; v < g.order(); ++v) g.set_label(v, "x_" + std::to_string(v + 1));
    return g;
}

Graph family_g1(int m) {
    if (m < 1) fail(errc::bad_index, "expansion needs at least one K2");
    return expand_at(catalog(1), {0}, k2_matching(m));
}

Graph family_g4(int m) {
    if (m < 1) fail(errc::bad_index, "expansion needs at least one K2");
    return expand_at(catalog(4), {4}, k2_matching(m));
}

Graph family_g10() { return catalog(10); }

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    {
        // Identification of x1 and x4 in the m=1 member of the G4 family.
        Graph g = build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {6, 1}, {1, 2}, {2, 5}, {3, 4}});
        const char* names[] = {"z", "x_2", "x_3", "x_5_1", "x_5_2", "x_6", "x_7"};
        for (int v = 0; v < 7; ++v) g.set_label(v, names[v]);
        out.push_back({std::move(g), ProperColoring{3, {1, 2, 3, 2, 3, 2, 3}}, "case-1"});
    }
    {
        // Identification of x2 and x6 in G10.
        Graph g = build_graph(8, {{1, 0}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {3, 4}, {3, 6},
                                  {2, 5}, {0, 4}, {0, 5}, {4, 7}, {2, 7}, {4, 5}, {5, 6}});
        const char* names[] = {"x_1", "z", "x_3", "x_4", "x_5", "x_7", "x_8", "x_9"};
        for (int v = 0; v < 8; ++v) g.set_label(v, names[v]);
        out.push_back({std::move(g), ProperColoring{3, {3, 2, 1, 3, 1, 2, 1, 3}}, "case-2"});
    }
    return out;
}

}  // namespace recolor
