#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "recolor/coloring.hpp"
#include "recolor/constructions.hpp"
#include "recolor/io.hpp"
#include "recolor/patterns.hpp"
#include "recolor/verify.hpp"

namespace {

using recolor::errc;
using recolor::Graph;
using recolor::ProperColoring;

// Thrown for malformed construction specs and other grammar-level problems
// that CLI11 cannot catch itself; mapped to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_source(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream file(path);
    if (!file) throw usage_error("cannot open " + path);
    return read_all(file);
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return line;
    return "";
}

// Graph page: a graph6 line, a one-line JSON object (possibly followed by
// further report lines), or a whole-file JSON document.
Graph load_graph(const std::string& path) {
    const std::string text = read_source(path);
    const std::string head = first_line(text);
    if (!head.empty() && head[head.find_first_not_of(" \t")] == '{') {
        nlohmann::json whole = nlohmann::json::parse(text, nullptr, false);
        if (!whole.is_discarded()) return recolor::graph_from_json(whole);
        return recolor::parse_graph(head);
    }
    return recolor::parse_graph(head);
}

ProperColoring load_coloring(const std::string& path) {
    const std::string text = read_source(path);
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) recolor::fail(errc::malformed_encoding, "unparseable coloring JSON in " + path);
    return recolor::coloring_from_json(j);
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw usage_error("bad " + what + ": " + s);
    }
    if (used != s.size()) throw usage_error("bad " + what + ": " + s);
    return value;
}

std::pair<Graph, std::optional<ProperColoring>> construct_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw usage_error("construction spec needs verb:args, got " + spec);
    const std::string verb = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (verb == "mk") {
        auto [g, c] = recolor::build_mk(parse_int(rest, "mk palette"));
        return {std::move(g), std::move(c)};
    }
    if (verb == "gtk") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw usage_error("gtk spec needs gtk:T,K");
        auto [g, labels] = recolor::build_gtk(parse_int(rest.substr(0, comma), "gtk t"),
                                              parse_int(rest.substr(comma + 1), "gtk k"));
        const int k = labels.phi.empty() ? 0 : *std::max_element(labels.phi.begin(), labels.phi.end());
        return {std::move(g), ProperColoring{k, std::move(labels.phi)}};
    }
    if (verb == "lift") {
        const auto last = rest.rfind(',');
        if (last == std::string::npos) throw usage_error("lift spec needs lift:BASE,S,L");
        const auto mid = rest.rfind(',', last - 1);
        if (mid == std::string::npos) throw usage_error("lift spec needs lift:BASE,S,L");
        auto [base, coloring] = construct_from_spec(rest.substr(0, mid));
        if (!coloring) throw usage_error("lift base construction carries no coloring");
        const int s = parse_int(rest.substr(mid + 1, last - mid - 1), "lift rounds");
        const int l = parse_int(rest.substr(last + 1), "lift path length");
        auto [g, c] = recolor::lift(base, *coloring, s, l);
        return {std::move(g), std::move(c)};
    }
    if (verb == "k3c5") {
        auto [adjacent, nonadjacent] = recolor::k3c5_witnesses();
        if (rest == "adj") return {std::move(adjacent), std::nullopt};
        if (rest == "nonadj") return {std::move(nonadjacent), std::nullopt};
        throw usage_error("k3c5 spec needs adj or nonadj");
    }
    if (verb == "catalog") return {recolor::catalog(parse_int(rest, "catalog index")), std::nullopt};
    if (verb == "g1fam") return {recolor::family_g1(parse_int(rest, "g1fam size")), std::nullopt};
    if (verb == "g4fam") return {recolor::family_g4(parse_int(rest, "g4fam size")), std::nullopt};
    throw usage_error("unknown construction verb " + verb);
}

std::uint64_t limit_or_env(std::uint64_t flag) { return flag ? flag : recolor::state_limit_from_env(); }

int run(int argc, char** argv) {
    CLI::App app{"graph recoloring reconfiguration toolkit"};
    app.require_subcommand(1);

    // construct
    std::string c_spec, c_out, c_format = "graph6";
    auto* cmd_construct = app.add_subcommand("construct", "build a named graph family member");
    cmd_construct->add_option("spec", c_spec, "construction spec, e.g. mk:3 or gtk:4,5")->required();
    cmd_construct->add_option("--out", c_out, "write to file instead of stdout");
    cmd_construct->add_option("--format", c_format, "graph6|json|dot")
        ->check(CLI::IsMember({"graph6", "json", "dot"}));

    // analyze
    std::string a_graph;
    int a_k = 0;
    std::uint64_t a_limit = 0;
    auto* cmd_analyze = app.add_subcommand("analyze", "full component census of R_k");
    cmd_analyze->add_option("graph", a_graph, "graph file or -")->required();
    cmd_analyze->add_option("-k", a_k, "palette size")->required();
    cmd_analyze->add_option("--limit", a_limit, "state-space guard override");

    // mixing
    std::string m_graph;
    int m_k = 0;
    std::uint64_t m_limit = 0;
    auto* cmd_mixing = app.add_subcommand("mixing", "decide whether R_k is connected");
    cmd_mixing->add_option("graph", m_graph, "graph file or -")->required();
    cmd_mixing->add_option("-k", m_k, "palette size")->required();
    cmd_mixing->add_option("--limit", m_limit, "state-space guard override");

    // frozen
    std::string f_graph;
    int f_k = 0;
    bool f_all = false;
    auto* cmd_frozen = app.add_subcommand("frozen", "search for frozen k-colorings");
    cmd_frozen->add_option("graph", f_graph, "graph file or -")->required();
    cmd_frozen->add_option("-k", f_k, "palette size")->required();
    cmd_frozen->add_flag("--all", f_all, "list every frozen coloring");

    // path
    std::string p_graph, p_from, p_to;
    int p_k = 0;
    std::uint64_t p_limit = 0;
    auto* cmd_path = app.add_subcommand("path", "shortest recoloring sequence between colorings");
    cmd_path->add_option("graph", p_graph, "graph file or -")->required();
    cmd_path->add_option("-k", p_k, "palette size")->required();
    cmd_path->add_option("--from", p_from, "start coloring JSON file")->required();
    cmd_path->add_option("--to", p_to, "goal coloring JSON file")->required();
    cmd_path->add_option("--limit", p_limit, "state-space guard override");

    // check
    std::string k_graph, k_pattern;
    int k_pl = 0;
    bool k_chromatic = false, k_clique = false, k_twins = false;
    auto* cmd_check = app.add_subcommand("check", "structural predicates");
    cmd_check->add_option("graph", k_graph, "graph file or -")->required();
    cmd_check->add_option("--pl-free", k_pl, "induced-path freeness for the given length");
    cmd_check->add_flag("--chromatic", k_chromatic, "exact chromatic number");
    cmd_check->add_flag("--clique", k_clique, "exact clique number");
    cmd_check->add_option("--pattern", k_pattern, "induced pattern: gem|c5|p5bar")
        ->check(CLI::IsMember({"gem", "c5", "p5bar"}));
    cmd_check->add_flag("--false-twins", k_twins, "ordered false twin pairs");

    // verify
    std::string v_id = "all", v_out;
    bool v_deep = false;
    std::uint64_t v_limit = 0;
    int v_threads = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run the claim-verification scenarios");
    cmd_verify->add_option("scenario", v_id, "scenario id or all");
    cmd_verify->add_flag("--deep", v_deep, "census scenarios climb to n=7");
    cmd_verify->add_option("--out", v_out, "also write a JSON array report");
    cmd_verify->add_option("--limit", v_limit, "state-space guard override");
    cmd_verify->add_option("--threads", v_threads, "census worker threads");

    // export
    std::string e_graph, e_format = "dot";
    auto* cmd_export = app.add_subcommand("export", "re-encode a graph for external tools");
    cmd_export->add_option("graph", e_graph, "graph file or -")->required();
    cmd_export->add_option("--format", e_format, "dot|graph6|json")
        ->check(CLI::IsMember({"dot", "graph6", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (cmd_construct->parsed()) {
        auto [g, coloring] = construct_from_spec(c_spec);
        std::ostringstream page;
        if (c_format == "graph6")
            page << recolor::to_graph6(g) << "\n";
        else if (c_format == "json")
            page << recolor::graph_to_json(g).dump() << "\n";
        else
            page << recolor::to_dot(g);
        if (coloring && c_format != "dot") page << recolor::coloring_to_json(*coloring).dump() << "\n";
        if (c_out.empty()) {
            std::cout << page.str();
        } else {
            std::ofstream out(c_out);
            if (!out) throw usage_error("cannot write " + c_out);
            out << page.str();
        }
        std::cerr << c_spec << ": " << g.order() << " vertices, " << g.edge_count() << " edges"
                  << (coloring ? ", with canonical coloring" : "") << "\n";
        return 0;
    }

    if (cmd_analyze->parsed()) {
        const Graph g = load_graph(a_graph);
        const recolor::ReconfigReport rep = recolor::reconfig_analysis(g, a_k, limit_or_env(a_limit));
        std::cout << recolor::report_to_json(rep).dump() << "\n";
        std::cerr << "R_" << a_k << ": " << rep.total << " colorings, " << rep.components
                  << " components, " << rep.frozen.size() << " frozen; "
                  << (rep.mixing ? "mixing" : "not-mixing") << "\n";
        return 0;
    }

    if (cmd_mixing->parsed()) {
        const Graph g = load_graph(m_graph);
        const std::uint64_t limit = limit_or_env(m_limit);
        // A frozen coloring plus any second coloring settles the question
        // without walking the state space.
        if (const auto frozen = recolor::search_frozen(g, m_k)) {
            if (recolor::count_colorings(g, m_k, 2) >= 2) {
                std::cout << "not-mixing\n" << recolor::coloring_to_json(*frozen).dump() << "\n";
                std::cerr << "frozen " << m_k << "-coloring found; R_" << m_k << " is disconnected\n";
                return 0;
            }
            std::cout << "mixing\n";
            std::cerr << "single proper coloring; R_" << m_k << " is trivially connected\n";
            return 0;
        }
        const bool ok = recolor::is_mixing(g, m_k, limit);
        std::cout << (ok ? "mixing" : "not-mixing") << "\n";
        std::cerr << "no frozen coloring; traversal says " << (ok ? "connected" : "disconnected") << "\n";
        return 0;
    }

    if (cmd_frozen->parsed()) {
        const Graph g = load_graph(f_graph);
        if (f_all) {
            const auto all = recolor::all_frozen(g, f_k);
            for (const auto& c : all) std::cout << recolor::coloring_to_json(c).dump() << "\n";
            if (all.empty()) std::cout << "none\n";
            std::cerr << all.size() << " frozen " << f_k << "-coloring(s)\n";
        } else {
            const auto c = recolor::search_frozen(g, f_k);
            if (c)
                std::cout << recolor::coloring_to_json(*c).dump() << "\n";
            else
                std::cout << "none\n";
            std::cerr << (c ? 1 : 0) << " frozen " << f_k << "-coloring(s) shown\n";
        }
        return 0;
    }

    if (cmd_path->parsed()) {
        const Graph g = load_graph(p_graph);
        ProperColoring from = load_coloring(p_from);
        ProperColoring to = load_coloring(p_to);
        if (from.k != p_k || to.k != p_k)
            recolor::fail(errc::palette_mismatch, "-k disagrees with the coloring files");
        const auto steps = recolor::recoloring_path(g, from, to, limit_or_env(p_limit));
        if (!steps) {
            std::cout << "disconnected\n";
            std::cerr << "no recoloring sequence\n";
            return 0;
        }
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : *steps)
            arr.push_back({{"vertex", s.vertex}, {"from", s.from}, {"to", s.to}});
        std::cout << arr.dump() << "\n";
        std::cerr << "recoloring sequence of length " << steps->size() << "\n";
        return 0;
    }

    if (cmd_check->parsed()) {
        const Graph g = load_graph(k_graph);
        bool any = false;
        if (cmd_check->count("--pl-free")) {
            any = true;
            std::cout << nlohmann::json{{"check", "pl-free"}, {"l", k_pl}, {"value", recolor::is_pl_free(g, k_pl)}}
                             .dump()
                      << "\n";
        }
        if (k_chromatic) {
            any = true;
            std::cout << nlohmann::json{{"check", "chromatic"}, {"value", recolor::chromatic_number(g)}}.dump()
                      << "\n";
        }
        if (k_clique) {
            any = true;
            std::cout << nlohmann::json{{"check", "clique"}, {"value", recolor::clique_number(g)}}.dump() << "\n";
        }
        if (!k_pattern.empty()) {
            any = true;
            const recolor::Pattern p = k_pattern == "gem"  ? recolor::gem_pattern()
                                       : k_pattern == "c5" ? recolor::cycle_pattern(5)
                                                           : recolor::p5_complement_pattern();
            const auto hit = recolor::find_induced(g, p);
            nlohmann::json j{{"check", "pattern"}, {"pattern", k_pattern}, {"found", hit.has_value()}};
            if (hit) j["witness"] = *hit;
            std::cout << j.dump() << "\n";
        }
        if (k_twins) {
            any = true;
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& [x, y] : recolor::false_twins(g)) pairs.push_back({x, y});
            std::cout << nlohmann::json{{"check", "false-twins"}, {"pairs", pairs}}.dump() << "\n";
        }
        if (!any) throw usage_error("check needs at least one predicate flag");
        return 0;
    }

    if (cmd_verify->parsed()) {
        recolor::VerifyOptions opts;
        opts.deep = v_deep;
        opts.limit = v_limit;
        opts.threads = v_threads;
        std::vector<std::string> ids;
        if (v_id == "all")
            ids = recolor::scenario_ids();
        else
            ids.push_back(v_id);
        nlohmann::json report = nlohmann::json::array();
        bool all_pass = true;
        for (const auto& id : ids) {
            const recolor::ScenarioResult res = recolor::run_scenario(id, opts);
            std::cout << recolor::result_to_json(res).dump() << "\n";
            std::cerr << res.id << ": " << (res.pass ? "pass" : "FAIL") << " ("
                      << res.elapsed_seconds << "s)\n";
            report.push_back(recolor::result_to_json(res));
            all_pass = all_pass && res.pass;
        }
        if (!v_out.empty()) {
            std::ofstream out(v_out);
            if (!out) throw usage_error("cannot write " + v_out);
            out << report.dump(2) << "\n";
        }
        return all_pass ? 0 : 1;
    }

    if (cmd_export->parsed()) {
        const Graph g = load_graph(e_graph);
        if (e_format == "dot")
            std::cout << recolor::to_dot(g);
        else if (e_format == "graph6")
            std::cout << recolor::to_graph6(g) << "\n";
        else
            std::cout << recolor::graph_to_json(g).dump() << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const recolor::error& e) {
        std::cerr << recolor::errc_name(e.code()) << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
