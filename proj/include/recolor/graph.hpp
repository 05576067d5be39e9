#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

// Finite simple graph on vertices 0..n-1 with a packed bit-matrix adjacency:
// one row of ceil(n/64) words per vertex. Rows stay symmetric and the
// diagonal stays clear through every operation. Graph values are treated as
// immutable once a construction function returns them; the mutators below
// exist for builders only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int row_words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    bool adj(int u, int v) const;
    void add_edge(int u, int v);     // builder use; validates range, rejects loops
    void remove_edge(int u, int v);  // builder use

    int degree(int v) const;
    int min_degree() const;
    int edge_count() const;
    std::vector<int> neighbors(int v) const;            // ascending
    std::vector<std::pair<int, int>> edges() const;     // lexicographic, u < v
    bool connected() const;                             // n <= 1 counts as connected

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);

    // Adjacency-only equality; labels are presentation, not identity.
    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;  // empty, or one entry per vertex
};

// Dense vertex subset over a universe {0..n-1}.
struct VertexSet {
    int n = 0;
    std::vector<std::uint64_t> words;

    static VertexSet of(int n, const std::vector<int>& members);
    bool contains(int v) const;
    void add(int v);
    int count() const;
    std::vector<int> members() const;  // ascending
};

// Builds the graph with exactly the given edges; duplicates collapse.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Merges nonadjacent x and y into one vertex z with N(z) = N(x) u N(y).
// z sits at min(x,y); indices above max(x,y) shift down by one. z is labeled
// "z", with the origin labels appended when both endpoints were labeled.
Graph identify(const Graph& g, int x, int y);

// Expansion: each vertex v of h is replaced by the nonempty graph parts[v];
// parts are complete to each other across edges of h and anticomplete across
// non-edges. Part vertices keep h's vertex order, then their own order.
Graph expand(const Graph& h, const std::vector<Graph>& parts);

// All ordered pairs (x, y), x != y, x nonadjacent to y, N(x) subseteq N(y),
// sorted lexicographically.
std::vector<std::pair<int, int>> false_twins(const Graph& g);

// True iff every vertex outside x is complete or anticomplete to x.
bool is_homogeneous(const Graph& g, const VertexSet& x);

// First vertex carrying the given label, or -1.
int find_label(const Graph& g, std::string_view label);

}  // namespace recolor
