// Drives the installed es-kit binary end to end.  The path to the binary
// comes in as the last command-line argument (ctest passes it from CMake).

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

namespace {

std::string g_eskit;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + g_eskit + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

TEST_CASE("chi reports index, class and decision path") {
    const RunResult r = run_cli("chi --graph6 Bw");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "chi_prime=3 class=2"));
    CHECK(contains(r.out, "decided_by=overfull"));

    const RunResult json_run = run_cli("chi --graph6 C~ --format json");
    CHECK(json_run.status == 0);
    const auto j = nlohmann::json::parse(json_run.out);
    CHECK(j["chi_prime"] == 3);
    CHECK(j["class"] == 1);
    CHECK(j["witness"]["k"] == 3);

    const RunResult slow = run_cli("chi --graph6 Bw --no-fast-paths");
    CHECK(slow.status == 0);
    CHECK(contains(slow.out, "chi_prime=3 class=2"));
    CHECK(contains(slow.out, "decided_by=exact_search"));
}

TEST_CASE("chi accepts edge lists from files and stdin") {
    const std::string path = "/tmp/eskit_cli_edges.txt";
    std::ofstream(path) << "4\n0 1\n1 2\n2 3\n";
    const RunResult file_run = run_cli("chi --edges " + path);
    CHECK(file_run.status == 0);
    CHECK(contains(file_run.out, "chi_prime=2 class=1"));
    std::remove(path.c_str());

    const RunResult stdin_run = run_cli("chi --edges -", "printf '3\\n0 1\\n1 2\\n' | ");
    CHECK(stdin_run.status == 0);
    CHECK(contains(stdin_run.out, "chi_prime=2 class=1"));
}

TEST_CASE("chi input failures") {
    CHECK(run_cli("chi").status == 2);                                // no input
    CHECK(run_cli("chi --graph6 Bw --family 'cycle(3)'").status == 2);  // two inputs
    CHECK(run_cli("chi --graph6 'B'").status == 2);                   // truncated graph6
    CHECK(run_cli("chi --edges /no/such/file").status == 2);
    CHECK(run_cli("chi --family 'cycle(2)'").status == 2);
    CHECK(run_cli("chi --graph6 'A?'").status == 3);                  // edgeless domain error
    CHECK(run_cli("chi --format yaml --graph6 Bw").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("").status == 2);
}

TEST_CASE("es reports the index with both witness kinds") {
    const RunResult r = run_cli("es --family 'complete(5)'");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "es=2\n"));
    CHECK(contains(r.out, "witness={0-1,0-2}\n"));
    CHECK(contains(r.out, "witness_is_matching=false\n"));
    CHECK(contains(r.out, "matching_witness={0-1,2-3}\n"));
    CHECK(contains(r.out, "mode=exact\n"));
    CHECK(contains(r.out, "subsets_tested="));

    const RunResult m = run_cli("es --family 'complete(5)' --mode matching-only");
    CHECK(m.status == 0);
    CHECK(contains(m.out, "witness={0-1,2-3}\n"));
    CHECK(contains(m.out, "witness_is_matching=true\n"));
    CHECK(contains(m.out, "mode=matching_only\n"));
}

TEST_CASE("es extras: all witnesses and the conjecture verdict") {
    const RunResult r = run_cli("es --family 'complete(4)' --all-witnesses --conjecture");
    CHECK(r.status == 0);
    int sets = 0;
    for (const std::string& line : lines_of(r.out))
        if (line.rfind("set=", 0) == 0) ++sets;
    CHECK(sets == 3);
    CHECK(contains(r.out, "conjecture_holds=true\n"));

    const RunResult j = run_cli("es --family 'cycle(6)' --format json --all-witnesses --conjecture");
    CHECK(j.status == 0);
    const auto out = nlohmann::json::parse(j.out);
    CHECK(out["es"] == 3);
    CHECK(out["minimum_sets"].size() >= 1);
    CHECK(out["conjecture"]["holds"] == true);
    CHECK(out["conjecture"]["matching_witness"].size() == 3);
}

TEST_CASE("es transform rewrites faults into matchings") {
    const RunResult r = run_cli("es --family 'path(5)' --transform '1-2,2-3'");
    CHECK(r.status == 0);
    CHECK(r.out == "transformed={0-1,2-3}\n");

    const RunResult j = run_cli("es --family 'path(5)' --transform '1-2,2-3' --format json");
    CHECK(j.status == 0);
    const auto out = nlohmann::json::parse(j.out);
    CHECK(out["transformed"] == nlohmann::json::parse("[[0,1],[2,3]]"));

    // pair surgery on a non-bipartite graph
    const RunResult pair = run_cli("es --family 'complete(5)' --transform '0-1,0-2'");
    CHECK(pair.status == 0);
    CHECK(contains(pair.out, "transformed={"));

    CHECK(run_cli("es --family 'path(5)' --transform '0-1'").status == 4);  // not mitigating
    CHECK(run_cli("es --family 'complete(5)' --transform '0-1,0-2,0-3'").status == 4);
    CHECK(run_cli("es --family 'path(5)' --transform '1+2'").status == 2);
    CHECK(run_cli("es --family 'path(5)' --transform '1-'").status == 2);
    CHECK(run_cli("es --family 'path(5)' --transform '0-9'").status == 4);
}

TEST_CASE("es rejects bad modes and edgeless graphs") {
    CHECK(run_cli("es --graph6 'A?'").status == 3);
    CHECK(run_cli("es --family 'cycle(5)' --mode greedy").status == 2);
}

TEST_CASE("gen emits graphs in every format") {
    const RunResult g6 = run_cli("gen 'complete(4)'");
    CHECK(g6.status == 0);
    CHECK(g6.out == "C~\n");

    const RunResult flagged = run_cli("gen --family 'complete(4)'");
    CHECK(flagged.status == 0);
    CHECK(flagged.out == "C~\n");

    const RunResult edges = run_cli("gen 'path(3)' --format edges");
    CHECK(edges.status == 0);
    CHECK(edges.out == "3\n0 1\n1 2\n");

    const RunResult j = run_cli("gen 'cycle(5)' --format json");
    CHECK(j.status == 0);
    const auto out = nlohmann::json::parse(j.out);
    CHECK(out["graph6"] == "Dhc");
    CHECK(out["vertices"] == 5);
    CHECK(out["edges"].size() == 5);

    CHECK(run_cli("gen").status == 2);
    CHECK(run_cli("gen 'cycle(5)' --family 'cycle(5)'").status == 2);
    CHECK(run_cli("gen 'pentagon(5)'").status == 2);
    CHECK(run_cli("gen 'cycle(2)'").status == 2);
}

TEST_CASE("sweep emits verdicts as json lines plus a summary") {
    const RunResult r = run_cli("sweep --nmax 3 --check all");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    for (const std::string& line : lines) CHECK(nlohmann::json::accept(line));

    const auto summary = nlohmann::json::parse(lines.back());
    CHECK(summary["summary"] == true);
    CHECK(summary["failures"] == 0);
    CHECK(summary["pass"] == true);
    CHECK(summary["graphs"] == 8);  // labeled graphs with an edge on 2..3 vertices
    CHECK(summary["checks"].get<long long>() > 0);
    CHECK(summary.contains("seconds"));

    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const auto v = nlohmann::json::parse(lines[i]);
        CHECK(v["pass"] == true);
        CHECK(v.contains("graph6"));
        CHECK(v.contains("check"));
    }
}

TEST_CASE("sweep respects check selection and parallel workers") {
    const RunResult r = run_cli("sweep --nmax 4 --check extreme --check bounds --jobs 2 --seed 7");
    CHECK(r.status == 0);
    const auto lines = lines_of(r.out);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const auto v = nlohmann::json::parse(lines[i]);
        const std::string name = v["check"];
        CHECK((name == "extreme" || name == "bounds"));
    }
}

TEST_CASE("sweep budget control") {
    CHECK(run_cli("sweep --nmax 0").status == 2);
    CHECK(run_cli("sweep --nmax 9").status == 2);  // default budget is 8
    CHECK(run_cli("sweep --nmax 4", "ES_KIT_BUDGET_NMAX=3 ").status == 2);
    CHECK(run_cli("sweep --nmax 3", "ES_KIT_BUDGET_NMAX=3 ").status == 0);
    CHECK(run_cli("sweep --nmax 2", "ES_KIT_BUDGET_NMAX=twelve ").status == 2);
    CHECK(run_cli("sweep --nmax 2 --check no_such_check").status == 2);
}

int main(int argc, char** argv) {
    std::vector<char*> args(argv, argv + argc);
    if (args.size() > 1 && args.back()[0] != '-') {
        g_eskit = args.back();
        args.pop_back();
    }
    if (g_eskit.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-es-kit>\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(args.size()), args.data());
    return context.run();
}
