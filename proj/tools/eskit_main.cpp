// es-kit: exact chromatic index and edge stability queries on small graphs.
//
// Subcommands: chi (chromatic index and class), es (stability index, witness
// sets, conjecture verdicts, witness transforms), sweep (brute-force theorem
// checks over all small graphs), gen (family generators).
//
// Exit codes: 0 success, 2 bad input, 3 domain precondition, 4 transform
// precondition, 5 sweep failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eskit/coloring.hpp"
#include "eskit/families.hpp"
#include "eskit/formats.hpp"
#include "eskit/graph.hpp"
#include "eskit/stability.hpp"
#include "eskit/theorems.hpp"
#include "json.hpp"

namespace {

using namespace eskit;

// Command-line usage problems that are not covered by a library exception.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph6;
    std::string edges_path;
    std::string family;
    std::string format = "text";
    std::string mode = "exact";
    bool no_fast_paths = false;
    bool all_witnesses = false;
    bool conjecture = false;
    std::string transform;
    int jobs = 1;
    int nmax = 4;
    std::vector<std::string> checks;
    std::uint64_t seed = 0;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw CliError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const Options& opt) {
    const int sources =
        !opt.graph6.empty() + !opt.edges_path.empty() + !opt.family.empty();
    if (sources != 1)
        throw CliError("choose exactly one input: --graph6 STRING, --edges FILE, --family SPEC");
    if (!opt.graph6.empty()) return parse_graph6(opt.graph6);
    if (!opt.family.empty()) return generate(parse_family(opt.family));
    return parse_edge_list(slurp(opt.edges_path));
}

// "1-2,2-3" -> {{1,2},{2,3}}
EdgeSet parse_pair_list(const std::string& text) {
    EdgeSet fault;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw CliError("bad edge '" + item + "' in --transform; expected u-v,u-w,...");
        try {
            std::size_t used = 0;
            const int u = std::stoi(item, &used);
            if (item[used] != '-') throw std::invalid_argument(item);
            std::size_t rest = 0;
            const int v = std::stoi(item.substr(used + 1), &rest);
            if (used + 1 + rest != item.size()) throw std::invalid_argument(item);
            fault.push_back(make_edge(u, v));
        } catch (const std::logic_error&) {
            throw CliError("bad edge '" + item + "' in --transform; expected u-v,u-w,...");
        }
    }
    if (fault.empty()) throw CliError("--transform needs at least one edge");
    return fault;
}

std::string brace_list(const EdgeSet& edges) {
    std::string out = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
    }
    return out + "}";
}

nlohmann::json edges_json(const EdgeSet& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (Edge e : edges) out.push_back({e.u, e.v});
    return out;
}

int cmd_chi(const Options& opt) {
    const Graph g = load_graph(opt);
    const ClassVerdict verdict = chi_prime(g, !opt.no_fast_paths);
    if (opt.format == "json") {
        const nlohmann::json out{{"chi_prime", verdict.chi_prime},
                                 {"class", static_cast<int>(verdict.class_tag)},
                                 {"decided_by", to_string(verdict.decided_by)},
                                 {"witness", to_json(verdict.witness)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "chi_prime=" << verdict.chi_prime
                  << " class=" << static_cast<int>(verdict.class_tag)
                  << " decided_by=" << to_string(verdict.decided_by) << "\n";
    }
    return 0;
}

int cmd_es(const Options& opt) {
    const Graph g = load_graph(opt);

    if (!opt.transform.empty()) {
        const EdgeSet fault = parse_pair_list(opt.transform);
        EdgeSet matching;
        if (is_bipartite(g))
            matching = bipartite_matching_transform(g, fault);
        else if (fault.size() == 2)
            matching = two_matching_transform(g, fault);
        else
            throw TransformError("faults larger than a pair need a bipartite graph");
        if (opt.format == "json")
            std::cout << nlohmann::json{{"transformed", edges_json(matching)}}.dump() << "\n";
        else
            std::cout << "transformed=" << brace_list(matching) << "\n";
        return 0;
    }

    const SearchMode mode =
        opt.mode == "matching-only" ? SearchMode::matching_only : SearchMode::exact;
    const MitigatingReport report = es_exact(g, mode, !opt.no_fast_paths);

    if (opt.format == "json") {
        nlohmann::json out = to_json(report);
        if (opt.all_witnesses) {
            nlohmann::json sets = nlohmann::json::array();
            for (const EdgeSet& s : all_min_mitigating_sets(g)) sets.push_back(edges_json(s));
            out["minimum_sets"] = sets;
        }
        if (opt.conjecture) {
            const ConjectureVerdict cv = verify_conjecture1(g);
            out["conjecture"] = {{"es", cv.es},
                                 {"holds", cv.holds},
                                 {"matching_witness", cv.matching_witness
                                                          ? edges_json(*cv.matching_witness)
                                                          : nlohmann::json()}};
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "es=" << report.es << "\n";
    std::cout << "witness=" << brace_list(report.witness) << "\n";
    std::cout << "witness_is_matching=" << (report.witness_is_matching ? "true" : "false")
              << "\n";
    std::cout << "matching_witness="
              << (report.matching_witness ? brace_list(*report.matching_witness) : "none")
              << "\n";
    std::cout << "mode=" << to_string(report.mode) << "\n";
    std::cout << "subsets_tested=" << report.subsets_tested << "\n";
    if (opt.all_witnesses)
        for (const EdgeSet& s : all_min_mitigating_sets(g))
            std::cout << "set=" << brace_list(s) << "\n";
    if (opt.conjecture) {
        const ConjectureVerdict cv = verify_conjecture1(g);
        std::cout << "conjecture_holds=" << (cv.holds ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    int budget = 8;
    if (const char* env = std::getenv("ES_KIT_BUDGET_NMAX")) {
        try {
            std::size_t used = 0;
            budget = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::logic_error&) {
            throw CliError(std::string("ES_KIT_BUDGET_NMAX is not a number: ") + env);
        }
    }
    if (opt.nmax < 1 || opt.nmax > budget)
        throw CliError("--nmax " + std::to_string(opt.nmax) + " is outside the budget 1.." +
                       std::to_string(budget));

    const std::vector<std::string> known = available_checks();
    for (const std::string& name : opt.checks)
        if (name != "all" &&
            std::find(known.begin(), known.end(), name) == known.end()) {
            std::string expected = "all";
            for (const std::string& k : known) expected += ", " + k;
            throw CliError("unknown check '" + name + "'; expected one of: " + expected);
        }

    SweepOptions sweep_options;
    sweep_options.n_max = opt.nmax;
    sweep_options.checks = opt.checks;
    sweep_options.jobs = opt.jobs;
    sweep_options.seed = opt.seed;

    const auto start = std::chrono::steady_clock::now();
    const SweepResult result = sweep(sweep_options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const Verdict& v : result.verdicts) std::cout << to_json(v).dump() << "\n";
    const nlohmann::json summary{{"summary", true},
                                 {"graphs", result.graphs_examined},
                                 {"checks", result.checks_run},
                                 {"failures", result.failures},
                                 {"pass", result.failures == 0},
                                 {"seconds", seconds}};
    std::cout << summary.dump() << "\n";
    return result.failures == 0 ? 0 : 5;
}

int cmd_gen(const Options& opt, const std::string& positional_spec) {
    std::string text = positional_spec.empty() ? opt.family : positional_spec;
    if (!positional_spec.empty() && !opt.family.empty())
        throw CliError("give the family spec once, either as an argument or via --family");
    if (text.empty()) throw CliError("gen needs a family spec, e.g. es-kit gen 'cycle(5)'");
    const Graph g = generate(parse_family(text));
    if (opt.format == "edges") {
        std::cout << encode_edge_list(g);
    } else if (opt.format == "json") {
        const nlohmann::json out{{"graph6", encode_graph6(g)},
                                 {"vertices", g.vertex_count()},
                                 {"edges", edges_json(g.edges())}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << encode_graph6(g) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge stability toolkit for small graphs"};
    app.require_subcommand(1);

    Options opt;
    std::string gen_spec;

    const auto add_input = [&opt](CLI::App* cmd) {
        cmd->add_option("--graph6", opt.graph6, "graph6 string input");
        cmd->add_option("--edges", opt.edges_path, "edge list file ('-' for stdin)");
        cmd->add_option("--family", opt.family, "family spec, e.g. complete(5)");
    };
    const auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "graph6", "edges"}));
    };

    CLI::App* chi = app.add_subcommand("chi", "chromatic index and class of one graph");
    add_input(chi);
    add_format(chi);
    chi->add_flag("--no-fast-paths", opt.no_fast_paths, "skip the decision shortcuts");

    CLI::App* es = app.add_subcommand("es", "edge stability index of one graph");
    add_input(es);
    add_format(es);
    es->add_option("--mode", opt.mode, "witness search mode")
        ->check(CLI::IsMember({"exact", "matching-only"}));
    es->add_flag("--no-fast-paths", opt.no_fast_paths, "skip the decision shortcuts");
    es->add_flag("--all-witnesses", opt.all_witnesses, "list every minimum mitigating set");
    es->add_flag("--conjecture", opt.conjecture, "append the matching-witness verdict");
    es->add_option("--transform", opt.transform,
                   "rewrite the given mitigating set into a matching, e.g. \"1-2,2-3\"");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run the theorem checks over all small graphs");
    sweep_cmd->add_option("--nmax", opt.nmax, "largest vertex count to enumerate");
    sweep_cmd->add_option("--check", opt.checks, "check name (repeatable) or 'all'");
    sweep_cmd->add_option("--jobs", opt.jobs, "worker threads");
    sweep_cmd->add_option("--seed", opt.seed, "shuffle the work order");

    CLI::App* gen = app.add_subcommand("gen", "emit a generated family member");
    gen->add_option("spec", gen_spec, "family spec, e.g. complete(4)");
    gen->add_option("--family", opt.family, "family spec (alternative to the argument)");
    add_format(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(chi)) return cmd_chi(opt);
        if (app.got_subcommand(es)) return cmd_es(opt);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(opt);
        return cmd_gen(opt, gen_spec);
    } catch (const TransformError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
