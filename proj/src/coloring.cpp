#include "recolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace recolor {

namespace {

// k^n saturated at cap+1 so callers can compare against cap safely.
std::uint64_t pow_saturated(std::uint64_t k, int n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (k != 0 && r > cap / k) return cap + 1;
        r *= k;
    }
    return r;
}

std::vector<std::uint64_t> powers(int k, int n) {
    std::vector<std::uint64_t> p(n + 1, 1);
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * static_cast<std::uint64_t>(k);
    return p;
}

// Neighbors of v with index above v; enumeration assigns vertices n-1..0,
// so these are exactly the already-colored neighbors.
std::vector<std::vector<int>> higher_neighbors(const Graph& g) {
    std::vector<std::vector<int>> up(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v))
            if (w > v) up[v].push_back(w);
    return up;
}

template <class Fn>
void walk_colorings(const Graph& g, int k, Fn&& fn) {
    const int n = g.order();
    if (k < 0) fail(errc::invalid_k, "negative palette");
    std::vector<int> assign(n, 0);  // colors 0-based during the walk
    if (n == 0) {
        fn(assign);
        return;
    }
    if (k == 0) return;
    const auto up = higher_neighbors(g);
    // Descending vertex order makes vertex n-1 the most significant digit,
    // so colors tried in ascending order yield ascending canonical codes.
    auto rec = [&](auto&& self, int v) -> void {
        if (v < 0) {
            fn(assign);
            return;
        }
        for (int d = 0; d < k; ++d) {
            bool ok = true;
            for (int w : up[v])
                if (assign[w] == d) {
                    ok = false;
                    break;
                }
            if (ok) {
                assign[v] = d;
                self(self, v - 1);
            }
        }
    };
    rec(rec, n - 1);
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

void guard_state_space(const Graph& g, int k, std::uint64_t limit) {
    if (k > 62) fail(errc::invalid_k, "reconfiguration walks support k <= 62");
    // Codes must also fit the 63-bit canonical code regardless of the limit.
    const std::uint64_t hard_cap = std::uint64_t(1) << 62;
    const std::uint64_t cap = std::min(limit, hard_cap);
    const std::uint64_t states = pow_saturated(static_cast<std::uint64_t>(k), g.order(), cap);
    if (states > cap)
        fail(errc::state_space_too_large, std::to_string(k) + "^" + std::to_string(g.order()) +
                                              " candidate colorings exceed the limit " + std::to_string(cap));
}

std::size_t code_index(const std::vector<std::uint64_t>& codes, std::uint64_t code) {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) throw std::logic_error("recoloring neighbor missing from code table");
    return static_cast<std::size_t>(it - codes.begin());
}

}  // namespace

void validate_coloring(const Graph& g, const ProperColoring& c) {
    if (c.k < 0) fail(errc::invalid_k, "negative palette");
    if (static_cast<int>(c.assign.size()) != g.order())
        fail(errc::length_mismatch, "coloring length " + std::to_string(c.assign.size()) + " for order " +
                                        std::to_string(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (c.assign[v] < 1 || c.assign[v] > c.k)
            fail(errc::improper_coloring, "color " + std::to_string(c.assign[v]) + " outside 1.." + std::to_string(c.k));
    for (auto [u, v] : g.edges())
        if (c.assign[u] == c.assign[v])
            fail(errc::improper_coloring,
                 "vertices " + std::to_string(u) + "," + std::to_string(v) + " share color " + std::to_string(c.assign[u]));
}

ProperColoring make_coloring(const Graph& g, int k, std::vector<int> assign) {
    ProperColoring c{k, std::move(assign)};
    validate_coloring(g, c);
    return c;
}

std::uint64_t state_limit_from_env() {
    const char* raw = std::getenv("RECOLOR_LIMIT");
    if (!raw || !*raw) return default_state_limit;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) return default_state_limit;
    return parsed;
}

std::uint64_t coloring_code(const ProperColoring& c) {
    std::uint64_t code = 0;
    for (std::size_t v = c.assign.size(); v-- > 0;)
        code = code * static_cast<std::uint64_t>(c.k) + static_cast<std::uint64_t>(c.assign[v] - 1);
    return code;
}

ProperColoring coloring_from_code(std::uint64_t code, int n, int k) {
    if (k < 1 && n > 0) fail(errc::invalid_k, "palette too small to decode");
    ProperColoring c{k, std::vector<int>(n, 1)};
    for (int v = 0; v < n; ++v) {
        c.assign[v] = static_cast<int>(code % static_cast<std::uint64_t>(k)) + 1;
        code /= static_cast<std::uint64_t>(k);
    }
    return c;
}

std::vector<ProperColoring> enumerate_colorings(const Graph& g, int k) {
    std::vector<ProperColoring> out;
    walk_colorings(g, k, [&](const std::vector<int>& assign) {
        ProperColoring c{k, assign};
        for (int& a : c.assign) ++a;
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<std::uint64_t> enumerate_coloring_codes(const Graph& g, int k) {
    const auto pw = powers(k, g.order());
    std::vector<std::uint64_t> out;
    walk_colorings(g, k, [&](const std::vector<int>& assign) {
        std::uint64_t code = 0;
        for (std::size_t v = 0; v < assign.size(); ++v) code += static_cast<std::uint64_t>(assign[v]) * pw[v];
        out.push_back(code);
    });
    return out;
}

std::uint64_t count_colorings(const Graph& g, int k, std::uint64_t cap) {
    std::uint64_t count = 0;
    struct done {};
    try {
        walk_colorings(g, k, [&](const std::vector<int>&) {
            if (++count >= cap) throw done{};
        });
    } catch (const done&) {
    }
    return count;
}

bool is_frozen(const Graph& g, const ProperColoring& c) {
    validate_coloring(g, c);
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[c.assign[v]] = 1;
        for (int w : g.neighbors(v)) seen[c.assign[w]] = 1;
        int covered = 0;
        for (int col = 1; col <= c.k; ++col) covered += seen[col];
        if (covered < c.k) return false;
    }
    return true;
}

ReconfigReport reconfig_analysis(const Graph& g, int k, std::uint64_t limit) {
    if (k < 1) fail(errc::invalid_k, "reconfiguration needs k >= 1");
    guard_state_space(g, k, limit);
    const int n = g.order();
    const auto pw = powers(k, n);
    const std::vector<std::uint64_t> codes = enumerate_coloring_codes(g, k);
    const std::size_t total = codes.size();

    ReconfigReport report;
    report.k = k;
    report.total = total;
    if (total == 0) {
        report.mixing = true;  // empty reconfiguration graph has <= 1 component
        return report;
    }

    UnionFind uf(total);
    std::vector<char> has_move(total, 0);
    std::vector<int> assign(n);
    for (std::size_t i = 0; i < total; ++i) {
        std::uint64_t rest = codes[i];
        for (int v = 0; v < n; ++v) {
            assign[v] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
            rest /= static_cast<std::uint64_t>(k);
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t blocked = 0;  // colors on N(v); the guard enforces k <= 62
            for (int w : g.neighbors(v)) blocked |= std::uint64_t(1) << assign[w];
            for (int d = 0; d < k; ++d) {
                if (d == assign[v] || ((blocked >> d) & 1u)) continue;
                has_move[i] = 1;
                if (d < assign[v]) continue;  // the lower-coded endpoint registers the edge
                const std::uint64_t other = codes[i] + static_cast<std::uint64_t>(d - assign[v]) * pw[v];
                uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(code_index(codes, other)));
            }
        }
    }

    std::map<std::uint32_t, std::uint64_t> size_of_root;
    for (std::size_t i = 0; i < total; ++i) ++size_of_root[uf.find(static_cast<std::uint32_t>(i))];
    report.components = size_of_root.size();
    for (const auto& [root, size] : size_of_root) report.component_sizes.push_back(size);
    std::sort(report.component_sizes.begin(), report.component_sizes.end(), std::greater<>());

    for (std::size_t i = 0; i < total; ++i) {
        const bool singleton = size_of_root[uf.find(static_cast<std::uint32_t>(i))] == 1;
        if (!singleton && has_move[i]) continue;
        ProperColoring c = coloring_from_code(codes[i], n, k);
        const bool frozen = is_frozen(g, c);
        if (singleton != frozen || singleton == static_cast<bool>(has_move[i]))
            throw std::logic_error("frozen colorings and singleton components disagree");
        report.frozen.push_back(std::move(c));
    }
    report.mixing = report.components <= 1;
    return report;
}

bool is_mixing(const Graph& g, int k, std::uint64_t limit) {
    if (k < 1) fail(errc::invalid_k, "reconfiguration needs k >= 1");
    guard_state_space(g, k, limit);
    const int n = g.order();
    const auto pw = powers(k, n);
    const std::vector<std::uint64_t> codes = enumerate_coloring_codes(g, k);
    if (codes.size() <= 1) return true;

    std::vector<char> seen(codes.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    std::vector<int> assign(n);
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        std::uint64_t rest = codes[i];
        for (int v = 0; v < n; ++v) {
            assign[v] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
            rest /= static_cast<std::uint64_t>(k);
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t blocked = 0;
            for (int w : g.neighbors(v)) blocked |= std::uint64_t(1) << assign[w];
            const std::uint64_t base = codes[i] - static_cast<std::uint64_t>(assign[v]) * pw[v];
            for (int d = 0; d < k; ++d) {
                if (d == assign[v] || ((blocked >> d) & 1u)) continue;
                const std::size_t j = code_index(codes, base + static_cast<std::uint64_t>(d) * pw[v]);
                if (!seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    stack.push_back(j);
                }
            }
        }
    }
    return reached == codes.size();
}

std::optional<std::vector<RecoloringStep>> recoloring_path(const Graph& g, const ProperColoring& a,
                                                           const ProperColoring& b, std::uint64_t limit) {
    validate_coloring(g, a);
    validate_coloring(g, b);
    if (a.k != b.k) fail(errc::palette_mismatch, std::to_string(a.k) + " vs " + std::to_string(b.k));
    const int k = a.k;
    guard_state_space(g, k, limit);
    const int n = g.order();
    const auto pw = powers(k, n);
    const std::vector<std::uint64_t> codes = enumerate_coloring_codes(g, k);

    const std::size_t start = code_index(codes, coloring_code(a));
    const std::size_t goal = code_index(codes, coloring_code(b));
    if (start == goal) return std::vector<RecoloringStep>{};

    constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(codes.size(), unreached);
    std::deque<std::size_t> queue{start};
    parent[start] = start;
    std::vector<int> assign(n);
    while (!queue.empty() && parent[goal] == unreached) {
        const std::size_t i = queue.front();
        queue.pop_front();
        std::uint64_t rest = codes[i];
        for (int v = 0; v < n; ++v) {
            assign[v] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
            rest /= static_cast<std::uint64_t>(k);
        }
        for (int v = 0; v < n && parent[goal] == unreached; ++v) {
            std::uint64_t blocked = 0;
            for (int w : g.neighbors(v)) blocked |= std::uint64_t(1) << assign[w];
            const std::uint64_t base = codes[i] - static_cast<std::uint64_t>(assign[v]) * pw[v];
            for (int d = 0; d < k; ++d) {
                if (d == assign[v] || ((blocked >> d) & 1u)) continue;
                const std::size_t j = code_index(codes, base + static_cast<std::uint64_t>(d) * pw[v]);
                if (parent[j] == unreached) {
                    parent[j] = i;
                    queue.push_back(j);
                }
            }
        }
    }
    if (parent[goal] == unreached) return std::nullopt;

    std::vector<RecoloringStep> steps;
    for (std::size_t at = goal; at != start; at = parent[at]) {
        const std::uint64_t hi = codes[at];
        const std::uint64_t lo = codes[parent[at]];
        // The two codes differ in exactly one base-k digit; recover it.
        std::uint64_t x = hi, y = lo;
        for (int v = 0; v < n; ++v) {
            const int cx = static_cast<int>(x % static_cast<std::uint64_t>(k));
            const int cy = static_cast<int>(y % static_cast<std::uint64_t>(k));
            if (cx != cy) {
                steps.push_back({v, cy + 1, cx + 1});
                break;
            }
            x /= static_cast<std::uint64_t>(k);
            y /= static_cast<std::uint64_t>(k);
        }
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

namespace {

// Propagating search for frozen k-colorings. Covering is tracked as a
// support count per (vertex, color): how many closed-neighborhood members
// could still take that color. A count of zero is a dead end; a count of
// one forces the unique supplier. Properness runs as plain candidate
// removal with unit propagation. All effects land on an undo trail.
struct FrozenSearch {
    enum class Op : std::uint8_t { remove, assign };
    struct TrailEntry {
        Op op;
        int v;
        int c;
    };

    const int k;
    const int n;
    const std::uint64_t palette;
    std::vector<std::vector<int>> closed;  // v first, then neighbors ascending
    std::vector<int> assign;               // 0-based, -1 unset
    std::vector<std::uint64_t> feas;       // candidate colors per vertex
    std::vector<int> supp;                 // [v*k+c] potential suppliers of c in N[v]
    std::vector<int> asupp;                // [v*k+c] assigned suppliers of c in N[v]
    std::vector<int> missing;              // colors of N[v] with no assigned supplier yet
    std::vector<int> un_closed;            // unassigned members of N[v]
    std::vector<TrailEntry> trail;
    std::vector<std::pair<int, int>> queue;
    int num_assigned = 0;
    bool collect_all = false;
    bool stop = false;
    std::vector<ProperColoring> found;

    FrozenSearch(const Graph& graph, int colors)
        : k(colors),
          n(graph.order()),
          palette((std::uint64_t(1) << k) - 1),
          closed(n),
          assign(n, -1),
          feas(n, palette),
          supp(static_cast<std::size_t>(n) * k),
          asupp(static_cast<std::size_t>(n) * k, 0),
          missing(n, colors),
          un_closed(n) {
        for (int v = 0; v < n; ++v) {
            closed[v].push_back(v);
            for (int w : graph.neighbors(v)) closed[v].push_back(w);
            un_closed[v] = static_cast<int>(closed[v].size());
            for (int c = 0; c < k; ++c) supp[static_cast<std::size_t>(v) * k + c] = un_closed[v];
        }
    }

    bool remove_color(int v, int c) {
        feas[v] &= ~(std::uint64_t(1) << c);
        trail.push_back({Op::remove, v, c});
        if (feas[v] == 0) return false;
        if (assign[v] < 0 && std::has_single_bit(feas[v]))
            queue.emplace_back(v, std::countr_zero(feas[v]));
        for (int x : closed[v]) {
            const std::size_t slot = static_cast<std::size_t>(x) * k + c;
            if (--supp[slot] == 0) return false;
            if (supp[slot] == 1 && asupp[slot] == 0) {
                // Exactly one unassigned candidate can still cover c at x.
                for (int w : closed[x])
                    if ((feas[w] >> c) & 1) {
                        queue.emplace_back(w, c);
                        break;
                    }
            }
        }
        return true;
    }

    // Assigns v <- c plus everything that follows from it. Returns false on
    // contradiction; the caller rolls the trail back either way.
    bool do_assign(int v, int c) {
        queue.clear();
        queue.emplace_back(v, c);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [u, d] = queue[head];
            if (assign[u] >= 0) {
                if (assign[u] != d) return false;
                continue;
            }
            if (!((feas[u] >> d) & 1)) return false;
            trail.push_back({Op::assign, u, d});
            assign[u] = d;
            ++num_assigned;
            for (int x : closed[u]) {
                --un_closed[x];
                const std::size_t slot = static_cast<std::size_t>(x) * k + d;
                if (asupp[slot]++ == 0) --missing[x];
            }
            // Hall-style slack: m uncovered colors need m open members.
            for (int x : closed[u])
                if (missing[x] > un_closed[x]) return false;
            std::uint64_t drop = feas[u] & ~(std::uint64_t(1) << d);
            while (drop) {
                const int alt = std::countr_zero(drop);
                drop &= drop - 1;
                if (!remove_color(u, alt)) return false;
            }
            for (std::size_t i = 1; i < closed[u].size(); ++i) {
                const int w = closed[u][i];
                if (assign[w] < 0 && ((feas[w] >> d) & 1) && !remove_color(w, d)) return false;
            }
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            const auto [op, v, c] = trail.back();
            trail.pop_back();
            if (op == Op::remove) {
                feas[v] |= std::uint64_t(1) << c;
                for (int x : closed[v]) ++supp[static_cast<std::size_t>(x) * k + c];
            } else {
                assign[v] = -1;
                --num_assigned;
                for (int x : closed[v]) {
                    ++un_closed[x];
                    const std::size_t slot = static_cast<std::size_t>(x) * k + c;
                    if (--asupp[slot] == 0) ++missing[x];
                }
            }
        }
    }

    void run() {
        if (stop) return;
        if (num_assigned == n) {
            ProperColoring c{k, assign};
            for (int& a : c.assign) ++a;
            found.push_back(std::move(c));
            if (!collect_all) stop = true;
            return;
        }
        int best = -1, best_count = k + 1;
        for (int v = 0; v < n; ++v) {
            if (assign[v] >= 0) continue;
            const int count = std::popcount(feas[v]);
            if (count < best_count) {
                best_count = count;
                best = v;
            }
        }
        std::uint64_t options = feas[best];
        while (options && !stop) {
            const int d = std::countr_zero(options);
            options &= options - 1;
            const std::size_t mark = trail.size();
            if (do_assign(best, d)) run();
            rollback(mark);
        }
    }
};

std::vector<ProperColoring> frozen_search(const Graph& g, int k, bool all) {
    if (k < 1) fail(errc::invalid_k, "frozen search needs k >= 1");
    if (k > 62) fail(errc::invalid_k, "frozen search supports k <= 62");
    const int n = g.order();
    if (n == 0) return {ProperColoring{k, {}}};  // vacuously frozen
    // Necessary: |N[v]| >= k for every v.
    if (g.min_degree() < k - 1) return {};

    FrozenSearch search(g, k);
    search.collect_all = all;
    if (!all) {
        // Palettes permute freely, so an existence witness may fix vertex 0.
        if (search.do_assign(0, 0)) search.run();
    } else {
        search.run();
    }
    std::sort(search.found.begin(), search.found.end(),
              [](const ProperColoring& a, const ProperColoring& b) { return coloring_code(a) < coloring_code(b); });
    return std::move(search.found);
}

}  // namespace

std::optional<ProperColoring> search_frozen(const Graph& g, int k) {
    std::vector<ProperColoring> found = frozen_search(g, k, false);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::vector<ProperColoring> all_frozen(const Graph& g, int k) { return frozen_search(g, k, true); }

}  // namespace recolor
