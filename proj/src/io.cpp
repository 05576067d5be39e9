#include "recolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace recolor {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(char ch) {
    const int x = static_cast<unsigned char>(ch);
    if (x < 63 || x > 126) fail(errc::malformed_encoding, "graph6 byte out of range");
    return x - 63;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > graph6_max_order) fail(errc::unsupported_order, "graph6 output limited to 4096 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adj(u, v) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                have = 0;
            }
        }
    if (have) out.push_back(static_cast<char>((acc << (6 - have)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    s = trim(s);
    if (s.empty()) fail(errc::malformed_encoding, "empty graph6 string");

    int n;
    if (s.front() == '~') {
        if (s.size() >= 2 && s[1] == '~') fail(errc::unsupported_order, "graph6 long-long order form");
        if (s.size() < 4) fail(errc::malformed_encoding, "truncated graph6 order");
        n = (sextet(s[1]) << 12) | (sextet(s[2]) << 6) | sextet(s[3]);
        s.remove_prefix(4);
    } else {
        n = sextet(s.front());
        s.remove_prefix(1);
    }
    if (n > graph6_max_order) fail(errc::unsupported_order, "graph6 input limited to 4096 vertices");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (s.size() < nchars) fail(errc::malformed_encoding, "truncated graph6 body");
    if (s.size() > nchars) fail(errc::malformed_encoding, "trailing bytes after graph6 body");

    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((sextet(s[bit / 6]) >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    for (; bit < nchars * 6; ++bit)
        if ((sextet(s[bit / 6]) >> (5 - bit % 6)) & 1)
            fail(errc::malformed_encoding, "nonzero padding in graph6 body");
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    if (g.has_labels()) {
        nlohmann::json labels = nlohmann::json::object();
        for (int v = 0; v < g.order(); ++v)
            if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        fail(errc::malformed_encoding, "graph JSON needs an integer field n");
    const long long n = j["n"].get<long long>();
    if (n < 0) fail(errc::malformed_encoding, "negative vertex count");
    if (n > graph6_max_order) fail(errc::unsupported_order, "graph JSON limited to 4096 vertices");

    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(errc::malformed_encoding, "edges must be an array of pairs");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(errc::malformed_encoding, "each edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    Graph g = build_graph(static_cast<int>(n), edges);
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) fail(errc::malformed_encoding, "labels must be an object");
        for (const auto& [key, value] : j["labels"].items()) {
            if (!value.is_string()) fail(errc::malformed_encoding, "labels must map indices to strings");
            std::size_t used = 0;
            int idx = -1;
            try {
                idx = std::stoi(key, &used);
            } catch (const std::exception&) {
                fail(errc::malformed_encoding, "label keys must be vertex indices");
            }
            if (used != key.size()) fail(errc::malformed_encoding, "label keys must be vertex indices");
            if (idx < 0 || idx >= g.order()) fail(errc::index_out_of_range, "label index " + key);
            g.set_label(idx, value.get<std::string>());
        }
    }
    return g;
}

nlohmann::json coloring_to_json(const ProperColoring& c) {
    return nlohmann::json{{"k", c.k}, {"assign", c.assign}};
}

ProperColoring coloring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
        fail(errc::malformed_encoding, "coloring JSON needs an integer field k");
    if (!j.contains("assign") || !j["assign"].is_array())
        fail(errc::malformed_encoding, "coloring JSON needs an assign array");
    ProperColoring c;
    c.k = j["k"].get<int>();
    for (const auto& x : j["assign"]) {
        if (!x.is_number_integer()) fail(errc::malformed_encoding, "assign entries must be integers");
        c.assign.push_back(x.get<int>());
    }
    return c;
}

nlohmann::json report_to_json(const ReconfigReport& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["total"] = r.total;
    j["components"] = r.components;
    j["component_sizes"] = r.component_sizes;
    auto& frozen = j["frozen"] = nlohmann::json::array();
    for (const auto& c : r.frozen) frozen.push_back(coloring_to_json(c));
    j["mixing"] = r.mixing;
    return j;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels() && !g.label(v).empty()) {
            out << " [label=\"";
            for (char ch : g.label(v)) {
                if (ch == '"' || ch == '\\') out << '\\';
                out << ch;
            }
            out << "\"]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) fail(errc::malformed_encoding, "empty graph input");
    if (body.front() == '{') {
        nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
        if (j.is_discarded()) fail(errc::malformed_encoding, "unparseable graph JSON");
        return graph_from_json(j);
    }
    return from_graph6(body);
}

}  // namespace recolor
