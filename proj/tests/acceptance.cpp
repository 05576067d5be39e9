// Acceptance gate: every shipped claim gets one timed pass/fail line. A
// criterion fails if its check fails OR it blows its wall-clock budget, so a
// performance regression is as loud as a correctness one.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/verify.hpp"

#include "oracles.hpp"

namespace {

bool scenario_passes(const std::string& id, std::string& note) {
    const recolor::ScenarioResult r = recolor::run_scenario(id);
    if (!r.pass) note = "scenario " + id + " reported failure";
    return r.pass;
}

// Exhaustive cross-check of the production reconfiguration engine against the
// simple map-based BFS oracle, over every labeled graph on up to five
// vertices and every palette size up to four.
bool oracle_equivalence(std::string& note) {
    for (int n = 1; n <= 5; ++n) {
        recolor::LabeledGraphStream stream(n);
        while (auto g = stream.next()) {
            for (int k = 1; k <= 4; ++k) {
                const recolor::ReconfigReport lib =
                    recolor::reconfig_analysis(*g, k, std::uint64_t{1} << 20);
                const oracle::Reconfig ref = oracle::reconfig(*g, k);
                std::vector<std::vector<int>> lib_frozen;
                for (const auto& c : lib.frozen) lib_frozen.push_back(c.assign);
                std::sort(lib_frozen.begin(), lib_frozen.end());
                const bool ok = lib.total == ref.total &&
                                lib.component_sizes.size() == ref.component_sizes.size() &&
                                lib.component_sizes == ref.component_sizes &&
                                lib.mixing == ref.mixing && lib_frozen == ref.frozen;
                if (!ok) {
                    note = "divergence at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    return true;
}

struct Criterion {
    int index;
    std::string what;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "frozen pair family invariants (thm-1.7-family)", 30.0,
         [](std::string& note) { return scenario_passes("thm-1.7-family", note); }},
        {2, "matching-minus lattice anatomy (prop-2.1)", 90.0,
         [](std::string& note) { return scenario_passes("prop-2.1", note); }},
        {3, "pentagon expansion witnesses (obs-2.2)", 3.0,
         [](std::string& note) { return scenario_passes("obs-2.2", note); }},
        {4, "lift preserves frozenness and path freeness (prop-2.3)", 15.0,
         [](std::string& note) { return scenario_passes("prop-2.3", note); }},
        {5, "exhaustive mixing census, triangle-clique side (thm-1.6-census)", 600.0,
         [](std::string& note) { return scenario_passes("thm-1.6-census(6)", note); }},
        {6, "exhaustive mixing census, edge-clique side (thm-1.3-census)", 600.0,
         [](std::string& note) { return scenario_passes("thm-1.3-census(6)", note); }},
        {7, "engine matches the BFS oracle on all graphs n<=5, k<=4", 360.0,
         oracle_equivalence},
        {8, "figure fixtures and catalog self-consistency", 3.0,
         [](std::string& note) {
             return scenario_passes("fig-fixtures", note) &&
                    scenario_passes("catalog-consistency", note);
         }},
        {9, "negative control: corrupted inputs are caught", 30.0,
         [](std::string& note) { return scenario_passes("negative-control", note); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            note = "over budget (" + std::to_string(c.budget_seconds) + "s)";
        }
        std::printf("criterion %d: %s (%.2fs) %s%s%s\n", c.index, ok ? "pass" : "FAIL", elapsed,
                    c.what.c_str(), note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu of %zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
