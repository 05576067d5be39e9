#include "recolor/patterns.hpp"

#include <algorithm>
#include <bit>

namespace recolor {

namespace {

// Vertex subset of a fixed graph as packed words.
struct Bits {
    std::vector<std::uint64_t> w;

    static Bits none(int n) {
        Bits b;
        b.w.assign((n + 63) / 64, 0);
        return b;
    }
    static Bits all(int n) {
        Bits b = none(n);
        for (int v = 0; v < n; ++v) b.set(v);
        return b;
    }
    void set(int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    bool empty() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }
    void or_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= row[i];
    }
    Bits and_row(const std::uint64_t* row) const {
        Bits out = *this;
        for (std::size_t i = 0; i < out.w.size(); ++i) out.w[i] &= row[i];
        return out;
    }
    Bits minus(const Bits& other) const {
        Bits out = *this;
        for (std::size_t i = 0; i < out.w.size(); ++i) out.w[i] &= ~other.w[i];
        return out;
    }
    template <class Fn>
    void for_each(Fn&& fn) const {  // ascending
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(static_cast<int>(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

// Branch and bound maximum clique over the candidate set, with a greedy
// coloring bound; stops early once `enough` is reached (0 = run to optimum).
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    int enough = 0;

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    void expand(int have, const Bits& cands) {
        if (enough && best >= enough) return;
        std::vector<int> order;
        cands.for_each([&](int v) { order.push_back(v); });
        if (order.empty()) {
            best = std::max(best, have);
            return;
        }
        // Greedy coloring of the candidates; class index bounds the clique.
        std::vector<int> color(order.size(), 0);
        {
            std::vector<Bits> classes;
            for (std::size_t i = 0; i < order.size(); ++i) {
                const int v = order[i];
                std::size_t c = 0;
                for (; c < classes.size(); ++c)
                    if (classes[c].and_row(g.row(v)).empty()) break;
                if (c == classes.size()) classes.push_back(Bits::none(g.order()));
                classes[c].set(v);
                color[i] = static_cast<int>(c) + 1;
            }
        }
        std::vector<std::size_t> by_color(order.size());
        for (std::size_t i = 0; i < by_color.size(); ++i) by_color[i] = i;
        std::stable_sort(by_color.begin(), by_color.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        Bits left = cands;
        for (std::size_t j = by_color.size(); j-- > 0;) {
            const std::size_t i = by_color[j];
            if (have + color[i] <= best) return;  // colors only shrink from here
            const int v = order[i];
            left.reset(v);
            expand(have + 1, left.and_row(g.row(v)));
            if (enough && best >= enough) return;
        }
    }
};

int max_clique_size(const Graph& g, const Bits& cands, int enough) {
    CliqueSearch search(g);
    search.enough = enough;
    search.expand(0, cands);
    return search.best;
}

}  // namespace

Pattern path_pattern(int l) {
    if (l < 1) fail(errc::invalid_size, "path needs at least 1 vertex");
    Graph g(l);
    for (int v = 0; v + 1 < l; ++v) g.add_edge(v, v + 1);
    return {std::move(g)};
}

Pattern cycle_pattern(int l) {
    if (l < 3) fail(errc::invalid_size, "cycle needs at least 3 vertices");
    Graph g(l);
    for (int v = 0; v < l; ++v) g.add_edge(v, (v + 1) % l);
    return {std::move(g)};
}

Pattern gem_pattern() {
    Graph g(5);
    for (int v = 0; v + 1 < 4; ++v) g.add_edge(v, v + 1);
    for (int v = 0; v < 4; ++v) g.add_edge(4, v);
    return {std::move(g)};
}

Pattern p5_complement_pattern() {
    const Graph p5 = path_pattern(5).target;
    Graph g(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!p5.adj(u, v)) g.add_edge(u, v);
    return {std::move(g)};
}

Pattern complete_pattern(int t) {
    if (t < 1) fail(errc::invalid_size, "complete pattern needs at least 1 vertex");
    Graph g(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return {std::move(g)};
}

std::optional<std::vector<int>> find_induced(const Graph& g, const Pattern& p) {
    const int pn = p.target.order();
    const int gn = g.order();
    if (pn == 0) return std::vector<int>{};
    if (pn > gn) return std::nullopt;

    // Most-constrained placement order: highest degree first, then most
    // neighbors among already-placed vertices; ties break low.
    std::vector<int> order;
    std::vector<char> placed(pn, 0);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int q = 0; q < pn; ++q) {
            if (placed[q]) continue;
            int links = 0;
            for (int r : order) links += p.target.adj(q, r) ? 1 : 0;
            const int deg = p.target.degree(q);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = q;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> map(pn, -1);
    std::vector<char> used(gn, 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == pn) return true;
        const int q = order[depth];
        for (int cand = 0; cand < gn; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < depth && ok; ++prev) {
                const int r = order[prev];
                ok = g.adj(cand, map[r]) == p.target.adj(q, r);
            }
            if (!ok) continue;
            map[q] = cand;
            used[cand] = 1;
            if (self(self, depth + 1)) return true;
            used[cand] = 0;
            map[q] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

namespace {

// Depth-first induced path extension: a new vertex must be adjacent to the
// tip and nonadjacent to everything before it, tracked as a banned set.
bool extend_induced_path(const Graph& g, std::vector<int>& path, Bits banned, int want) {
    if (static_cast<int>(path.size()) == want) return true;
    const int tip = path.back();
    Bits cands = Bits::all(g.order()).and_row(g.row(tip)).minus(banned);
    banned.or_row(g.row(tip));
    banned.set(tip);
    bool found = false;
    cands.for_each([&](int w) {
        if (found) return;
        path.push_back(w);
        if (extend_induced_path(g, path, banned, want))
            found = true;
        else
            path.pop_back();
    });
    return found;
}

std::optional<std::vector<int>> find_induced_path(const Graph& g, int l) {
    if (l < 1) fail(errc::invalid_size, "path needs at least 1 vertex");
    if (l > g.order()) return std::nullopt;
    for (int start = 0; start < g.order(); ++start) {
        std::vector<int> path{start};
        if (extend_induced_path(g, path, Bits::none(g.order()), l)) return path;
    }
    return std::nullopt;
}

}  // namespace

bool is_pl_free(const Graph& g, int l) { return !find_induced_path(g, l).has_value(); }

int clique_number(const Graph& g) {
    if (g.order() == 0) fail(errc::empty_graph, "clique number of the empty graph");
    return max_clique_size(g, Bits::all(g.order()), 0);
}

std::vector<int> max_clique(const Graph& g) {
    const int omega = clique_number(g);
    std::vector<int> clique;
    Bits cands = Bits::all(g.order());
    for (int need = omega; need > 0; --need) {
        // Smallest vertex that still completes a clique of the target size.
        int pick = -1;
        cands.for_each([&](int v) {
            if (pick >= 0) return;
            Bits rest = cands.and_row(g.row(v));
            // Only vertices above v keep the clique lexicographically first.
            for (int u = 0; u <= v; ++u) rest.reset(u);
            if (1 + max_clique_size(g, rest, need - 1) >= need) pick = v;
        });
        clique.push_back(pick);
        cands = cands.and_row(g.row(pick));
        for (int u = 0; u <= pick; ++u) cands.reset(u);
    }
    return clique;
}

std::optional<ProperColoring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) fail(errc::invalid_k, "negative palette");
    const int n = g.order();
    if (n == 0) return ProperColoring{k, {}};
    if (k == 0) return std::nullopt;
    if (k >= n) {
        ProperColoring c{k, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) c.assign[v] = v + 1;
        return c;
    }

    const std::vector<int> clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;

    std::vector<int> color(n, 0);  // 1-based, 0 = unset
    int max_used = 0;
    for (std::size_t i = 0; i < clique.size(); ++i) {
        color[clique[i]] = static_cast<int>(i) + 1;
        max_used = static_cast<int>(i) + 1;
    }

    // DSATUR branch and bound: highest saturation first (ties low), colors
    // capped at one above the highest used so far.
    std::vector<char> seen(k + 1, 0);
    auto rec = [&](auto&& self, int colored, int used) -> bool {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int w : g.neighbors(v))
                if (color[w] && !seen[color[w]]) {
                    seen[color[w]] = 1;
                    ++sat;
                }
            if (sat > pick_sat) {
                pick_sat = sat;
                pick = v;
            }
        }
        const int cap = std::min(k, used + 1);
        for (int c = 1; c <= cap; ++c) {
            bool ok = true;
            for (int w : g.neighbors(pick))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[pick] = c;
            if (self(self, colored + 1, std::max(used, c))) return true;
            color[pick] = 0;
        }
        return false;
    };
    if (!rec(rec, static_cast<int>(clique.size()), max_used)) return std::nullopt;
    return ProperColoring{k, color};
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) fail(errc::empty_graph, "chromatic number of the empty graph");

    int greedy_ub = 0;
    {
        std::vector<int> color(n, 0);
        std::vector<char> seen(n + 2, 0);
        for (int v = 0; v < n; ++v) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int w : g.neighbors(v))
                if (color[w]) seen[color[w]] = 1;
            int c = 1;
            while (seen[c]) ++c;
            color[v] = c;
            greedy_ub = std::max(greedy_ub, c);
        }
    }
    for (int k = clique_number(g); k < greedy_ub; ++k)
        if (is_k_colorable(g, k)) return k;
    return greedy_ub;
}

}  // namespace recolor
