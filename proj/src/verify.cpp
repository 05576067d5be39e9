#include "recolor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "recolor/coloring.hpp"
#include "recolor/constructions.hpp"
#include "recolor/io.hpp"
#include "recolor/patterns.hpp"

namespace recolor {

namespace {

int pairs_of(int n) { return n * (n - 1) / 2; }

}  // namespace

LabeledGraphStream::LabeledGraphStream(int n) : n_(n) {
    if (n < 1 || n > 7) fail(errc::order_too_large, "labeled census covers 1 <= n <= 7");
    total_ = std::uint64_t(1) << pairs_of(n);
}

std::optional<Graph> LabeledGraphStream::next() {
    if (mask_ >= total_) return std::nullopt;
    return labeled_graph_from_mask(n_, mask_++);
}

LabeledGraphStream enumerate_labeled_graphs(int n) { return LabeledGraphStream(n); }

Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

namespace {

using clock_type = std::chrono::steady_clock;

std::uint64_t effective_limit(const VerifyOptions& opts) {
    return opts.limit ? opts.limit : state_limit_from_env();
}

int effective_threads(const VerifyOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Per-layer census tallies. The main pipeline filters connected graphs by
// stage; the sweep applies the same chromatic and path filters to the
// disconnected graphs so the claim holds over every labeled graph.
struct CensusCounts {
    std::uint64_t total = 0, connected = 0, chi = 0, p5_free = 0, mixing = 0;
    std::uint64_t sweep_checked = 0, sweep_mixing = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> sweep_counterexamples;

    void merge(const CensusCounts& o) {
        total += o.total;
        connected += o.connected;
        chi += o.chi;
        p5_free += o.p5_free;
        mixing += o.mixing;
        sweep_checked += o.sweep_checked;
        sweep_mixing += o.sweep_mixing;
        counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
        sweep_counterexamples.insert(sweep_counterexamples.end(), o.sweep_counterexamples.begin(),
                                     o.sweep_counterexamples.end());
    }
};

void census_range(int n, std::uint64_t lo, std::uint64_t hi, int chi_target, int k,
                  std::uint64_t limit, CensusCounts& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const Graph g = labeled_graph_from_mask(n, mask);
        ++out.total;
        const bool conn = g.connected();
        if (conn) ++out.connected;
        if (chromatic_number(g) != chi_target) continue;
        if (conn) ++out.chi;
        if (!is_pl_free(g, 5)) continue;
        if (conn) ++out.p5_free;
        if (!conn) ++out.sweep_checked;
        bool mixing = false;
        try {
            mixing = is_mixing(g, k, limit);
        } catch (const error& e) {
            if (e.code() == errc::state_space_too_large)
                fail(errc::state_space_too_large, std::string(e.what()) + " on " + to_graph6(g));
            throw;
        }
        if (conn) {
            if (mixing)
                ++out.mixing;
            else
                out.counterexamples.push_back(to_graph6(g));
        } else {
            if (mixing)
                ++out.sweep_mixing;
            else
                out.sweep_counterexamples.push_back(to_graph6(g));
        }
    }
}

CensusCounts census_layer(int n, int chi_target, int k, const VerifyOptions& opts) {
    const std::uint64_t total = std::uint64_t(1) << pairs_of(n);
    const int want = total > 65536 ? effective_threads(opts) : 1;
    const int workers = static_cast<int>(std::min<std::uint64_t>(want, total));
    const std::uint64_t limit = effective_limit(opts);

    if (workers <= 1) {
        CensusCounts counts;
        census_range(n, 0, total, chi_target, k, limit, counts);
        return counts;
    }

    std::vector<CensusCounts> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t hi = total / workers * (w + 1) + std::min<std::uint64_t>(w + 1, total % workers);
        pool.emplace_back([&, w, lo, hi] {
            try {
                census_range(n, lo, hi, chi_target, k, limit, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    CensusCounts counts;
    for (const auto& p : parts) counts.merge(p);  // ranges ascend, so lists stay sorted
    return counts;
}

ScenarioResult census_scenario(const std::string& id, const std::string& citation, int chi_target,
                               int k, int max_n, const VerifyOptions& opts) {
    ScenarioResult r;
    r.id = id + "(" + std::to_string(max_n) + ")";
    r.citation = citation;
    nlohmann::json layers = nlohmann::json::array();
    CensusCounts all;
    for (int n = 1; n <= max_n; ++n) {
        const CensusCounts c = census_layer(n, chi_target, k, opts);
        layers.push_back({{"n", n},
                          {"total", c.total},
                          {"connected", c.connected},
                          {"chi_match", c.chi},
                          {"p5_free", c.p5_free},
                          {"mixing", c.mixing},
                          {"disconnected_checked", c.sweep_checked},
                          {"disconnected_mixing", c.sweep_mixing},
                          {"counterexamples", c.counterexamples},
                          {"disconnected_counterexamples", c.sweep_counterexamples}});
        all.merge(c);
    }
    r.pass = all.counterexamples.empty() && all.sweep_counterexamples.empty() &&
             all.mixing == all.p5_free && all.sweep_mixing == all.sweep_checked;
    r.evidence = {{"chi", chi_target},
                  {"k", k},
                  {"max_n", max_n},
                  {"layers", layers},
                  {"stages",
                   {{"total", all.total},
                    {"connected", all.connected},
                    {"chi_match", all.chi},
                    {"p5_free", all.p5_free},
                    {"mixing", all.mixing}}},
                  {"disconnected_sweep", {{"checked", all.sweep_checked}, {"mixing", all.sweep_mixing}}},
                  {"counterexamples", all.counterexamples},
                  {"disconnected_counterexamples", all.sweep_counterexamples}};
    return r;
}

// A check list that records every outcome and fails the scenario on the
// first false without stopping the remaining checks.
struct Checks {
    nlohmann::json items = nlohmann::json::array();
    bool pass = true;

    void add(const std::string& name, bool ok, nlohmann::json detail = nullptr) {
        nlohmann::json item{{"check", name}, {"ok", ok}};
        if (!detail.is_null()) item["detail"] = std::move(detail);
        items.push_back(std::move(item));
        pass = pass && ok;
    }
};

ScenarioResult scenario_prop_2_1(const VerifyOptions& opts) {
    ScenarioResult r;
    r.id = "prop-2.1";
    r.citation = "K_{k,k} minus a perfect matching is i-mixing for 3 <= i <= k-1 and i >= k+1 "
                 "but not k-mixing (k >= 3)";
    const std::uint64_t limit = effective_limit(opts);
    Checks ck;

    for (int k : {3, 4}) {
        auto [g, c] = build_mk(k);
        const ReconfigReport rep = reconfig_analysis(g, k, limit);
        const bool has_matching = std::find(rep.frozen.begin(), rep.frozen.end(), c) != rep.frozen.end();
        ck.add("mk" + std::to_string(k) + "-not-" + std::to_string(k) + "-mixing", !rep.mixing,
               {{"components", rep.components}, {"total", rep.total}});
        ck.add("mk" + std::to_string(k) + "-matching-coloring-frozen", has_matching,
               {{"frozen_count", rep.frozen.size()}});
    }
    ck.add("mk3-4-mixing", is_mixing(build_mk(3).first, 4, limit));
    ck.add("mk4-3-mixing", is_mixing(build_mk(4).first, 3, limit));
    ck.add("mk4-5-mixing", is_mixing(build_mk(4).first, 5, limit));

    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}};
    return r;
}

ScenarioResult scenario_obs_2_2(const VerifyOptions&) {
    ScenarioResult r;
    r.id = "obs-2.2";
    r.citation = "expanding two vertices of C5 to K2 yields chromatic number at least 4";
    auto [adj, nonadj] = k3c5_witnesses();
    Checks ck;
    ck.add("adjacent-chromatic>=4", chromatic_number(adj) >= 4, {{"graph6", to_graph6(adj)}});
    ck.add("adjacent-clique>=4", clique_number(adj) >= 4);
    ck.add("nonadjacent-chromatic>=4", chromatic_number(nonadj) >= 4, {{"graph6", to_graph6(nonadj)}});
    ck.add("nonadjacent-clique=3", clique_number(nonadj) == 3);
    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}};
    return r;
}

ScenarioResult scenario_prop_2_3(const VerifyOptions& opts) {
    ScenarioResult r;
    r.id = "prop-2.3";
    r.citation = "duplicating the closed neighborhoods of a clique-meeting color class s times "
                 "keeps chi = omega and P6-freeness and yields a frozen (k+s)-coloring";
    const std::uint64_t limit = effective_limit(opts);
    auto [base, base_coloring] = build_mk(3);
    Checks ck;

    for (int s : {1, 2}) {
        auto [g, c] = lift(base, base_coloring, s, 6);
        const std::string tag = "s" + std::to_string(s) + "-";
        ck.add(tag + "p6-free", is_pl_free(g, 6), {{"graph6", to_graph6(g)}});
        ck.add(tag + "chi", chromatic_number(g) == 2 + s);
        ck.add(tag + "omega", clique_number(g) == 2 + s);
        ck.add(tag + "palette", c.k == 3 + s);
        ck.add(tag + "frozen", is_frozen(g, c));
        if (s == 1) {
            const ReconfigReport rep = reconfig_analysis(g, c.k, limit);
            const bool frozen_listed = std::find(rep.frozen.begin(), rep.frozen.end(), c) != rep.frozen.end();
            ck.add(tag + "not-mixing", !rep.mixing, {{"components", rep.components}});
            ck.add(tag + "lifted-coloring-listed", frozen_listed);
        } else {
            // Frozen node plus any second coloring already splits R_k.
            ck.add(tag + "not-mixing", count_colorings(g, c.k, 2) >= 2);
        }
    }
    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}};
    return r;
}

ScenarioResult scenario_thm_1_7(const VerifyOptions&) {
    ScenarioResult r;
    r.id = "thm-1.7-family";
    r.citation = "for every t >= 4 and t+1 <= k <= C(t,2) some P5-free t-chromatic graph "
                 "has a frozen k-coloring, so its R_k is disconnected";
    Checks ck;
    nlohmann::json pairs = nlohmann::json::array();
    int count = 0;

    for (int t = 4; t <= 6; ++t)
        for (int k = t + 1; k <= t * (t - 1) / 2; ++k) {
            auto [g, labels] = build_gtk(t, k);
            const std::string tag = "t" + std::to_string(t) + "k" + std::to_string(k) + "-";
            ++count;

            ck.add(tag + "p5-free", is_pl_free(g, 5));
            ck.add(tag + "chromatic", chromatic_number(g) == t);
            bool clique_ok = true;
            for (int i = 0; i < t && clique_ok; ++i)
                for (int j = i + 1; j < t && clique_ok; ++j) clique_ok = g.adj(2 * i, 2 * j);
            ck.add(tag + "odd-vertices-t-clique", clique_ok);

            bool alpha_ok = true, phi_ok = true, phi_frozen = false;
            try {
                validate_coloring(g, ProperColoring{t, labels.alpha});
            } catch (const error&) {
                alpha_ok = false;
            }
            try {
                const ProperColoring phi{k, labels.phi};
                validate_coloring(g, phi);
                phi_frozen = is_frozen(g, phi);
            } catch (const error&) {
                phi_ok = false;
            }
            ck.add(tag + "alpha-proper-t-coloring", alpha_ok);
            ck.add(tag + "phi-proper-frozen", phi_ok && phi_frozen);

            const auto found = search_frozen(g, k);
            ck.add(tag + "search-frozen", found.has_value() && is_frozen(g, *found));
            ck.add(tag + "two-colorings", count_colorings(g, k, 2) >= 2);

            nlohmann::json entry{{"t", t}, {"k", k}, {"graph6", to_graph6(g)}};
            if (t == 4 && k == 5) {
                nlohmann::json drawn = nlohmann::json::array();
                for (int v = 0; v < g.order(); ++v) drawn.push_back({labels.phi[v], labels.alpha[v]});
                const nlohmann::json expected = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3},
                                                 {3, 4}, {4, 4}, {4, 1}, {5, 1}, {5, 3}};
                ck.add(tag + "label-pairs-verbatim", drawn == expected, {{"pairs", drawn}});
            }
            pairs.push_back(std::move(entry));
        }

    ck.add("pair-count", count == 16, {{"count", count}});
    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}, {"pairs", pairs}};
    return r;
}

ScenarioResult scenario_fig_fixtures(const VerifyOptions&) {
    ScenarioResult r;
    r.id = "fig-fixtures";
    r.citation = "the identification fixtures carry the drawn proper 3-colorings and stay P5-free";
    Checks ck;

    const std::vector<Fixture> fx = fixtures();
    ck.add("two-fixtures", fx.size() == 2, {{"count", fx.size()}});
    for (const auto& f : fx) {
        bool proper = true;
        try {
            validate_coloring(f.graph, f.coloring);
        } catch (const error&) {
            proper = false;
        }
        ck.add(f.tag + "-proper", proper, {{"graph6", to_graph6(f.graph)}});
        ck.add(f.tag + "-p5-free", is_pl_free(f.graph, 5));
    }
    if (fx.size() == 2) {
        ck.add("case-1-provenance", fx[0].graph == identify(family_g4(1), 0, 3));
        ck.add("case-2-provenance", fx[1].graph == identify(catalog(10), 1, 5));
        ck.add("case-1-drawn-z", fx[0].coloring.assign[0] == 1);
        ck.add("case-2-drawn-z", fx[1].coloring.assign[1] == 2);
        ck.add("case-2-drawn-x1", fx[1].coloring.assign[0] == 3);
        ck.add("case-2-drawn-x9", fx[1].coloring.assign[7] == 3);
    }
    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}};
    return r;
}

ScenarioResult scenario_catalog(const VerifyOptions&) {
    ScenarioResult r;
    r.id = "catalog-consistency";
    r.citation = "every base graph is connected, (P5, gem)-free, and contains an induced C5";
    Checks ck;
    const int orders[] = {5, 6, 7, 7, 8, 8, 8, 8, 9, 9};
    const Pattern gem = gem_pattern();
    const Pattern c5 = cycle_pattern(5);

    for (int i = 1; i <= 10; ++i) {
        const Graph g = catalog(i);
        const std::string tag = "g" + std::to_string(i) + "-";
        ck.add(tag + "order", g.order() == orders[i - 1],
               {{"order", g.order()}, {"graph6", to_graph6(g)}});
        ck.add(tag + "connected", g.connected());
        ck.add(tag + "p5-free", is_pl_free(g, 5));
        ck.add(tag + "gem-free", !find_induced(g, gem).has_value());
        ck.add(tag + "induced-c5", find_induced(g, c5).has_value());
    }
    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}};
    return r;
}

ScenarioResult scenario_negative_control(const VerifyOptions&) {
    ScenarioResult r;
    r.id = "negative-control";
    r.citation = "flipping any single adjacency bit of the stored frozen construction trips a check";

    // Figure transcription of the (t,k) = (4,5) construction, 1-based.
    static const std::pair<int, int> stored_edges[] = {
        {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 10},
        {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10},
        {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10},
        {4, 6}, {4, 7}, {4, 8}, {4, 9},
        {5, 7}, {5, 8}, {5, 9},
        {6, 8}, {6, 9}, {6, 10},
        {7, 9}, {7, 10},
        {8, 10}};
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : stored_edges) edges.emplace_back(u - 1, v - 1);
    const Graph stored = build_graph(10, edges);
    const Graph built = build_gtk(4, 5).first;

    auto surviving_checks = [&](const Graph& g) {
        std::vector<std::string> failed;
        if (!is_pl_free(g, 5)) failed.push_back("p5-free");
        if (chromatic_number(g) != 4) failed.push_back("chromatic");
        const auto found = search_frozen(g, 5);
        if (!found || !is_frozen(g, *found)) failed.push_back("frozen");
        if (g != built) failed.push_back("edge-rule");
        return failed;
    };

    Checks ck;
    ck.add("stored-matches-construction", stored == built, {{"graph6", to_graph6(built)}});
    ck.add("stored-passes-all", surviving_checks(stored).empty());

    nlohmann::json flips = nlohmann::json::array();
    bool all_caught = true;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            Graph mutant = stored;
            if (mutant.adj(u, v))
                mutant.remove_edge(u, v);
            else
                mutant.add_edge(u, v);
            const std::vector<std::string> failed = surviving_checks(mutant);
            all_caught = all_caught && !failed.empty();
            flips.push_back({{"flip", {u, v}}, {"failed", failed}});
        }
    ck.add("all-45-flips-caught", all_caught);

    r.pass = ck.pass;
    r.evidence = {{"checks", ck.items}, {"flips", flips}};
    return r;
}

struct ScenarioEntry {
    std::string id;
    std::function<ScenarioResult(int, const VerifyOptions&)> run;  // int = census n, -1 = default
};

const std::vector<ScenarioEntry>& registry() {
    static const std::vector<ScenarioEntry> entries = {
        {"prop-2.1", [](int, const VerifyOptions& o) { return scenario_prop_2_1(o); }},
        {"obs-2.2", [](int, const VerifyOptions& o) { return scenario_obs_2_2(o); }},
        {"prop-2.3", [](int, const VerifyOptions& o) { return scenario_prop_2_3(o); }},
        {"thm-1.3-census",
         [](int n, const VerifyOptions& o) {
             return census_scenario("thm-1.3-census",
                                    "every bipartite P5-free graph is k-mixing for k >= 3 "
                                    "(checked at k = 3 over all labeled graphs up to the bound)",
                                    2, 3, n > 0 ? n : (o.deep ? 7 : 6), o);
         }},
        {"thm-1.6-census",
         [](int n, const VerifyOptions& o) {
             return census_scenario("thm-1.6-census",
                                    "every 3-chromatic P5-free graph is k-mixing for k >= 4 "
                                    "(checked at k = 4 over all labeled graphs up to the bound)",
                                    3, 4, n > 0 ? n : (o.deep ? 7 : 6), o);
         }},
        {"thm-1.7-family", [](int, const VerifyOptions& o) { return scenario_thm_1_7(o); }},
        {"fig-fixtures", [](int, const VerifyOptions& o) { return scenario_fig_fixtures(o); }},
        {"catalog-consistency", [](int, const VerifyOptions& o) { return scenario_catalog(o); }},
        {"negative-control", [](int, const VerifyOptions& o) { return scenario_negative_control(o); }},
    };
    return entries;
}

}  // namespace

std::vector<std::string> scenario_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
}

ScenarioResult run_scenario(const std::string& id, const VerifyOptions& opts) {
    std::string base = id;
    int census_n = -1;
    if (const auto open = id.find('('); open != std::string::npos) {
        if (id.back() != ')') fail(errc::unknown_scenario, id);
        base = id.substr(0, open);
        const std::string arg = id.substr(open + 1, id.size() - open - 2);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            fail(errc::unknown_scenario, id);
        census_n = std::stoi(arg);
        if (census_n < 1 || census_n > 7) fail(errc::order_too_large, "census bound must be 1..7");
    }
    for (const auto& e : registry()) {
        if (e.id != base) continue;
        if (census_n > 0 && base.find("census") == std::string::npos) fail(errc::unknown_scenario, id);
        const auto start = clock_type::now();
        ScenarioResult r = e.run(census_n, opts);
        r.elapsed_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        return r;
    }
    fail(errc::unknown_scenario, id);
}

nlohmann::json result_to_json(const ScenarioResult& r) {
    return {{"id", r.id},
            {"citation", r.citation},
            {"pass", r.pass},
            {"evidence", r.evidence},
            {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace recolor
