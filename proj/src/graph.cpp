#include "recolor/graph.hpp"

#include <algorithm>
#include <bit>

namespace recolor {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        fail(errc::index_out_of_range, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

bool Graph::adj(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(errc::self_loop, "loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsleft = r[w];
        while (bitsleft) {
            int b = std::countr_zero(bitsleft);
            out.push_back(w * 64 + b);
            bitsleft &= bitsleft - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(s);
}

VertexSet VertexSet::of(int n, const std::vector<int>& members) {
    VertexSet s;
    s.n = n;
    s.words.assign(words_for(n), 0);
    for (int v : members) {
        if (v < 0 || v >= n) fail(errc::index_out_of_range, "set member " + std::to_string(v));
        s.add(v);
    }
    return s;
}

bool VertexSet::contains(int v) const { return v >= 0 && v < n && ((words[v >> 6] >> (v & 63)) & 1u); }

void VertexSet::add(int v) { words[v >> 6] |= std::uint64_t(1) << (v & 63); }

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bitsleft = words[w];
        while (bitsleft) {
            int b = std::countr_zero(bitsleft);
            out.push_back(static_cast<int>(w) * 64 + b);
            bitsleft &= bitsleft - 1;
        }
    }
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail(errc::index_out_of_range, "negative order");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph identify(const Graph& g, int x, int y) {
    const int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        fail(errc::index_out_of_range, "identify endpoints " + std::to_string(x) + "," + std::to_string(y));
    if (x == y || g.adj(x, y))
        fail(errc::adjacent_pair, "identify requires two distinct nonadjacent vertices");

    const int keep = std::min(x, y);
    const int drop = std::max(x, y);
    // old index -> new index; drop maps onto keep
    auto renum = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };

    Graph out(n - 1);
    for (auto [u, v] : g.edges()) {
        int a = renum(u), b = renum(v);
        if (a != b) out.add_edge(a, b);
    }
    if (g.has_labels()) {
        for (int v = 0; v < n; ++v)
            if (v != x && v != y) out.set_label(renum(v), g.label(v));
    }
    std::string zname = "z";
    if (!g.label(x).empty() && !g.label(y).empty()) zname += "(" + g.label(x) + "," + g.label(y) + ")";
    out.set_label(keep, zname);
    return out;
}

Graph expand(const Graph& h, const std::vector<Graph>& parts) {
    const int hn = h.order();
    if (static_cast<int>(parts.size()) != hn)
        fail(errc::length_mismatch, "expected one part per vertex, got " + std::to_string(parts.size()));
    std::vector<int> offset(hn + 1, 0);
    for (int v = 0; v < hn; ++v) {
        if (parts[v].order() < 1) fail(errc::empty_part, "part " + std::to_string(v) + " is empty");
        offset[v + 1] = offset[v] + parts[v].order();
    }
    Graph out(offset[hn]);
    for (int v = 0; v < hn; ++v) {
        for (auto [a, b] : parts[v].edges()) out.add_edge(offset[v] + a, offset[v] + b);
        for (int w = v + 1; w < hn; ++w) {
            if (!h.adj(v, w)) continue;
            for (int a = 0; a < parts[v].order(); ++a)
                for (int b = 0; b < parts[w].order(); ++b) out.add_edge(offset[v] + a, offset[w] + b);
        }
    }
    if (h.has_labels()) {
        for (int v = 0; v < hn; ++v) {
            if (h.label(v).empty()) continue;
            if (parts[v].order() == 1) {
                out.set_label(offset[v], h.label(v));
            } else {
                for (int a = 0; a < parts[v].order(); ++a)
                    out.set_label(offset[v] + a, h.label(v) + "_" + std::to_string(a + 1));
            }
        }
    }
    return out;
}

std::vector<std::pair<int, int>> false_twins(const Graph& g) {
    const int n = g.order();
    const int words = g.row_words();
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || g.adj(x, y)) continue;
            const std::uint64_t* rx = g.row(x);
            const std::uint64_t* ry = g.row(y);
            bool subset = true;
            for (int w = 0; w < words && subset; ++w) subset = (rx[w] & ~ry[w]) == 0;
            if (subset) out.emplace_back(x, y);
        }
    }
    return out;
}

bool is_homogeneous(const Graph& g, const VertexSet& x) {
    const int n = g.order();
    if (x.n != n) fail(errc::length_mismatch, "set universe does not match graph order");
    const int size = x.count();
    if (size == 0) fail(errc::empty_set, "homogeneous test needs a nonempty set");
    if (size == n) fail(errc::full_set, "homogeneous test needs a proper subset");
    const std::vector<int> inside = x.members();
    for (int v = 0; v < n; ++v) {
        if (x.contains(v)) continue;
        int hits = 0;
        for (int u : inside)
            if (g.adj(v, u)) ++hits;
        if (hits != 0 && hits != size) return false;
    }
    return true;
}

int find_label(const Graph& g, std::string_view label) {
    for (int v = 0; v < g.order(); ++v)
        if (g.label(v) == label) return v;
    return -1;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::self_loop: return "SelfLoop";
        case errc::adjacent_pair: return "AdjacentPair";
        case errc::empty_part: return "EmptyPart";
        case errc::empty_set: return "EmptySet";
        case errc::full_set: return "FullSet";
        case errc::malformed_encoding: return "MalformedEncoding";
        case errc::unsupported_order: return "UnsupportedOrder";
        case errc::invalid_size: return "InvalidSize";
        case errc::empty_graph: return "EmptyGraph";
        case errc::improper_coloring: return "ImproperColoring";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::state_space_too_large: return "StateSpaceTooLarge";
        case errc::invalid_k: return "InvalidK";
        case errc::palette_mismatch: return "PaletteMismatch";
        case errc::not_frozen: return "NotFrozen";
        case errc::chi_omega_mismatch: return "ChiOmegaMismatch";
        case errc::not_pl_free: return "NotPlFree";
        case errc::out_of_range: return "OutOfRange";
        case errc::bad_index: return "BadIndex";
        case errc::order_too_large: return "OrderTooLarge";
        case errc::unknown_scenario: return "UnknownScenario";
    }
    return "UnknownError";
}

}  // namespace recolor
