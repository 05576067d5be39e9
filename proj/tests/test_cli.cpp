#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "recolor/coloring.hpp"
#include "recolor/constructions.hpp"
#include "recolor/io.hpp"
#include "recolor/patterns.hpp"

#include "testutil.hpp"

namespace {

namespace fs = std::filesystem;

const std::string& workdir() {
    static const std::string dir = [] {
        std::string tmpl = (fs::temp_directory_path() / "recolor_cli_XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
        return std::string(buf.data());
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::string path = workdir() + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

struct RunResult {
    int exit = -1;
    std::string out;
    std::string err;
};

// Drives the real binary through the shell, feeding stdin from a file and
// capturing both output streams.
RunResult run_cli(const std::string& args, const std::string& input = "", const std::string& env = "") {
    const std::string in = write_file("stdin.txt", input);
    const std::string out = workdir() + "/stdout.txt";
    const std::string err = workdir() + "/stderr.txt";
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += "\"" RECOLOR_CLI_PATH "\" " + args + " < " + in + " > " + out + " 2> " + err;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::string graph6_of(const recolor::Graph& g) { return recolor::to_graph6(g); }

}  // namespace

TEST_CASE("construct writes a graph page") {
    const RunResult r = run_cli("construct mk:3");
    CHECK(r.exit == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == graph6_of(recolor::build_mk(3).first));
    const auto c = recolor::coloring_from_json(nlohmann::json::parse(lines[1]));
    CHECK(c.k == 3);
    CHECK(c.assign == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK(r.err.find("mk:3") != std::string::npos);
}

TEST_CASE("construct formats") {
    const RunResult json = run_cli("construct gtk:4,5 --format json");
    CHECK(json.exit == 0);
    const auto jlines = lines_of(json.out);
    REQUIRE(jlines.size() == 2);
    const nlohmann::json page = nlohmann::json::parse(jlines[0]);
    CHECK(page["n"] == 10);
    CHECK(page["labels"]["0"] == "u_1(1,1)");
    CHECK(nlohmann::json::parse(jlines[1])["k"] == 5);

    const RunResult dot = run_cli("construct catalog:3 --format dot");
    CHECK(dot.exit == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    CHECK(dot.out.find("--") != std::string::npos);
    CHECK(dot.out.find("assign") == std::string::npos);  // no coloring line in dot pages

    const RunResult lifted = run_cli("construct lift:mk:3,1,6");
    CHECK(lifted.exit == 0);
    const auto llines = lines_of(lifted.out);
    REQUIRE(llines.size() == 2);
    auto [base, coloring] = recolor::build_mk(3);
    CHECK(llines[0] == graph6_of(recolor::lift(base, coloring, 1, 6).first));
    CHECK(nlohmann::json::parse(llines[1])["k"] == 4);
}

TEST_CASE("construct --out") {
    const std::string target = workdir() + "/page.g6";
    const RunResult r = run_cli("construct k3c5:adj --out " + target);
    CHECK(r.exit == 0);
    CHECK(r.out.empty());
    CHECK(lines_of(slurp(target)).at(0) == graph6_of(recolor::k3c5_witnesses().first));
}

TEST_CASE("construct rejects malformed specs") {
    CHECK(run_cli("construct mk").exit == 2);
    CHECK(run_cli("construct mk:abc").exit == 2);
    CHECK(run_cli("construct k3c5:sideways").exit == 2);
    CHECK(run_cli("construct lift:mk:3,1").exit == 2);
    CHECK(run_cli("construct wat:1").exit == 2);

    const RunResult bad_index = run_cli("construct catalog:11");
    CHECK(bad_index.exit == 3);
    CHECK(bad_index.err.find("BadIndex") != std::string::npos);
    const RunResult bad_range = run_cli("construct gtk:9,9");
    CHECK(bad_range.exit == 3);
    CHECK(bad_range.err.find("OutOfRange") != std::string::npos);
}

TEST_CASE("check reads pages from stdin") {
    const std::string page = run_cli("construct mk:3").out;
    const RunResult chrom = run_cli("check - --chromatic", page);
    CHECK(chrom.exit == 0);
    CHECK(nlohmann::json::parse(chrom.out)["value"] == 2);

    // JSON pages work too; the graph line is sniffed from the first line.
    const std::string jpage = run_cli("construct gtk:4,5 --format json").out;
    const RunResult jchrom = run_cli("check - --chromatic", jpage);
    CHECK(jchrom.exit == 0);
    CHECK(nlohmann::json::parse(jchrom.out)["value"] == 4);
}

TEST_CASE("check predicates") {
    const std::string c5 = graph6_of(recolor::cycle_pattern(5).target);
    const std::string c6 = graph6_of(recolor::cycle_pattern(6).target);

    const RunResult witness = run_cli("check - --pattern c5", c5);
    CHECK(witness.exit == 0);
    const nlohmann::json w = nlohmann::json::parse(witness.out);
    CHECK(w["found"] == true);
    CHECK(w["witness"] == nlohmann::json::array({0, 1, 2, 3, 4}));

    const RunResult free5 = run_cli("check - --pl-free 5", c6);
    CHECK(nlohmann::json::parse(free5.out)["value"] == false);

    const RunResult twins = run_cli("check - --false-twins", graph6_of(recolor::catalog(4)));
    CHECK(nlohmann::json::parse(twins.out)["pairs"] ==
          nlohmann::json::array({{4, 5}, {4, 6}}));

    const RunResult multi = run_cli("check - --chromatic --clique", graph6_of(recolor::catalog(2)));
    const auto mlines = lines_of(multi.out);
    REQUIRE(mlines.size() == 2);
    CHECK(nlohmann::json::parse(mlines[0])["value"] == 3);
    CHECK(nlohmann::json::parse(mlines[1])["value"] == 3);

    CHECK(run_cli("check -", c5).exit == 2);  // no predicate selected
}

TEST_CASE("analyze reports the component census") {
    const RunResult r = run_cli("analyze - -k 3", graph6_of(recolor::build_mk(3).first));
    CHECK(r.exit == 0);
    const nlohmann::json rep = nlohmann::json::parse(r.out);
    CHECK(rep["total"] == 66);
    CHECK(rep["components"] == 7);
    CHECK(rep["mixing"] == false);
    CHECK(rep["frozen"].size() == 6);
    CHECK(r.err.find("not-mixing") != std::string::npos);
}

TEST_CASE("mixing verdicts") {
    const std::string k3 = graph6_of(recolor::complete_pattern(3).target);
    const RunResult frozen = run_cli("mixing - -k 3", k3);
    CHECK(frozen.exit == 0);
    const auto flines = lines_of(frozen.out);
    REQUIRE(flines.size() == 2);
    CHECK(flines[0] == "not-mixing");
    CHECK(nlohmann::json::parse(flines[1])["k"] == 3);  // frozen witness coloring

    const RunResult open = run_cli("mixing - -k 4", k3);
    CHECK(open.exit == 0);
    CHECK(lines_of(open.out) == std::vector<std::string>{"mixing"});
}

TEST_CASE("frozen listings") {
    const RunResult all = run_cli("frozen - -k 4 --all", graph6_of(recolor::build_mk(4).first));
    CHECK(all.exit == 0);
    const auto alines = lines_of(all.out);
    CHECK(alines.size() == 24);
    for (const auto& line : alines) CHECK(nlohmann::json::parse(line)["k"] == 4);
    CHECK(all.err.find("24 frozen") != std::string::npos);

    const RunResult none = run_cli("frozen - -k 3", graph6_of(recolor::cycle_pattern(5).target));
    CHECK(none.exit == 0);
    CHECK(lines_of(none.out) == std::vector<std::string>{"none"});
}

TEST_CASE("path subcommand") {
    const std::string c4 = write_file("c4.g6", graph6_of(recolor::cycle_pattern(4).target) + "\n");
    const std::string from = write_file("from.json", R"({"k":3,"assign":[1,2,1,2]})");
    const std::string to = write_file("to.json", R"({"k":3,"assign":[2,1,2,1]})");
    const RunResult r = run_cli("path " + c4 + " -k 3 --from " + from + " --to " + to);
    CHECK(r.exit == 0);
    const nlohmann::json steps = nlohmann::json::parse(r.out);
    REQUIRE(steps.is_array());
    CHECK(steps.size() >= 4);  // four vertices must all change color
    for (const auto& s : steps) {
        CHECK(s.contains("vertex"));
        CHECK(s["from"] != s["to"]);
    }

    const std::string k3 = write_file("k3.g6", graph6_of(recolor::complete_pattern(3).target) + "\n");
    const std::string fa = write_file("fa.json", R"({"k":3,"assign":[1,2,3]})");
    const std::string fb = write_file("fb.json", R"({"k":3,"assign":[2,3,1]})");
    const RunResult stuck = run_cli("path " + k3 + " -k 3 --from " + fa + " --to " + fb);
    CHECK(stuck.exit == 0);
    CHECK(lines_of(stuck.out) == std::vector<std::string>{"disconnected"});

    const RunResult mismatch = run_cli("path " + k3 + " -k 4 --from " + fa + " --to " + fb);
    CHECK(mismatch.exit == 3);
    CHECK(mismatch.err.find("PaletteMismatch") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    const RunResult one = run_cli("verify prop-2.1");
    CHECK(one.exit == 0);
    const nlohmann::json res = nlohmann::json::parse(one.out);
    CHECK(res["id"] == "prop-2.1");
    CHECK(res["pass"] == true);
    CHECK(one.err.find("prop-2.1: pass") != std::string::npos);

    const std::string report = workdir() + "/report.json";
    const RunResult census = run_cli("verify 'thm-1.3-census(4)' --out " + report);
    CHECK(census.exit == 0);
    const nlohmann::json arr = nlohmann::json::parse(slurp(report));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["pass"] == true);

    const RunResult unknown = run_cli("verify nope");
    CHECK(unknown.exit == 3);
    CHECK(unknown.err.find("UnknownScenario") != std::string::npos);

    const RunResult choked = run_cli("verify prop-2.1 --limit 2");
    CHECK(choked.exit == 3);
    CHECK(choked.err.find("StateSpaceTooLarge") != std::string::npos);
}

TEST_CASE("state limit precedence") {
    const std::string k3 = graph6_of(recolor::complete_pattern(3).target);
    const RunResult blocked = run_cli("analyze - -k 3", k3, "RECOLOR_LIMIT=2");
    CHECK(blocked.exit == 3);
    CHECK(blocked.err.find("StateSpaceTooLarge") != std::string::npos);
    // An explicit flag beats the environment.
    CHECK(run_cli("analyze - -k 3 --limit 100", k3, "RECOLOR_LIMIT=2").exit == 0);
}

TEST_CASE("export re-encodes") {
    const std::string c5 = graph6_of(recolor::cycle_pattern(5).target);
    const RunResult dot = run_cli("export -", c5);
    CHECK(dot.exit == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);

    const RunResult again = run_cli("export - --format graph6", c5);
    CHECK(lines_of(again.out) == std::vector<std::string>{c5});

    const RunResult json = run_cli("export - --format json", c5);
    CHECK(nlohmann::json::parse(json.out)["n"] == 5);
}

TEST_CASE("usage and input failures") {
    CHECK(run_cli("").exit == 2);
    CHECK(run_cli("frobnicate").exit == 2);
    CHECK(run_cli("--help").exit == 0);
    CHECK(run_cli("mixing -", "Bw").exit == 2);  // -k is required

    const RunResult missing = run_cli("check /nonexistent/graph.g6 --chromatic");
    CHECK(missing.exit == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const RunResult garbled = run_cli("check - --chromatic", "##\n");
    CHECK(garbled.exit == 3);
    CHECK(garbled.err.find("MalformedEncoding") != std::string::npos);
}
