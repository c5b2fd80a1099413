#pragma once

// Closed-form oracles for the generated families, shape recognizers for the
// characterization results, and the sweep harness that cross-checks both
// against brute-force values over all small graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eskit/families.hpp"
#include "eskit/graph.hpp"
#include "json.hpp"

namespace eskit {

struct Verdict {
    std::string graph6;
    std::string check;
    nlohmann::json predicted;
    nlohmann::json computed;
    bool pass = false;
    nlohmann::json witness;  // optional serialized evidence
};
nlohmann::json to_json(const Verdict& verdict);

struct FamilyOracle {
    FamilySpec spec;
    int expected_chi_prime = 0;
    int expected_es = 0;
};

// Closed-form values; FamilyError when the family has no known formula.
int oracle_chi_prime(const FamilySpec& spec);
int oracle_es(const FamilySpec& spec);
FamilyOracle family_oracle(const FamilySpec& spec);

// n-1 vertices of the same degree.
bool is_almost_regular(const Graph& g);

// Shapes whose stability index is forced to the stated value.
bool predict_extreme(const Graph& g);                   // es = floor(n/2)
bool predict_regular_es1(const Graph& g);               // es = 1, connected regular
bool predict_even_class2_near_extreme(const Graph& g);  // es = n/2 - 1
bool predict_odd_class2_near_extreme(const Graph& g);   // es = (n-3)/2

// Adds the non-edge e to a non-complete regular graph and verifies that the
// chromatic index rises to Delta+1 and that es = 1 exactly for Class 1 input.
Verdict check_regular_plus_edge(const Graph& g, Edge e);

// Builds the three clique-union-plus-matching constructions on K_{2m+1}
// blocks and verifies their class and stability claims.
Verdict check_union_constructions(int m);

// Canonical adjacency encoding under isomorphism (vertex count in the high
// byte, minimized edge bitstring below); usable for dedup up to n = 11.
std::uint64_t canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// All graphs on n vertices up to isomorphism, canonical representatives in
// canonical-form order; cached per process.
const std::vector<Graph>& nonisomorphic_graphs(int n);

// Every labeled graph on n vertices, by edge-subset bitmask.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    if (n < 1 || n > 7)
        throw PreconditionError("labeled enumeration is limited to 7 vertices");
    EdgeSet all;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) all.push_back({u, v});
    const std::uint64_t subsets = std::uint64_t{1} << all.size();
    EdgeSet edges;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1u) edges.push_back(all[i]);
        fn(Graph(n, edges));
    }
}

std::vector<std::string> available_checks();

struct SweepOptions {
    int n_max = 4;
    std::vector<std::string> checks;  // empty or "all" selects every check
    int jobs = 1;
    std::uint64_t seed = 0;  // shuffles work distribution only
};

struct SweepResult {
    std::vector<Verdict> verdicts;  // failures first, then by (graph6, check)
    long long graphs_examined = 0;
    long long checks_run = 0;
    long long failures = 0;
};

// Runs the selected checks on every graph with at least one edge up to
// n_max vertices: labeled enumeration through n = 6, isomorphism-free
// representatives at n = 7 and 8.
SweepResult sweep(const SweepOptions& options);

}  // namespace eskit
