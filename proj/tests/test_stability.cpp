#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "eskit/families.hpp"
#include "eskit/formats.hpp"
#include "eskit/matching.hpp"
#include "eskit/stability.hpp"
#include "eskit/theorems.hpp"
#include "test_util.hpp"

using namespace eskit;

namespace {

Graph make(const std::string& spec) { return generate(parse_family(spec)); }

}  // namespace

TEST_CASE("stability index on fixed graphs") {
    struct Row {
        const char* spec;
        int es;
    };
    const Row rows[] = {
        {"path(2)", 1},       {"path(7)", 3},
        {"cycle(7)", 1},      {"cycle(6)", 3},
        {"complete(4)", 2},   {"complete(5)", 2},
        {"complete(6)", 3},   {"complete_bipartite(3,4)", 3},
        {"complete_bipartite(1,4)", 1},
        {"complete_minus_edge(5)", 1},
        {"comp_matchings_plus_claw(7)", 2},
        {"disjoint_union(7,1)", 3},
        {"two_hamiltonian(7)", 2},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec);
        CHECK(es_exact(make(row.spec)).es == row.es);
    }
    CHECK(es_exact(testutil::petersen()).es == 2);
    CHECK_THROWS_AS(es_exact(Graph(4, {})), PreconditionError);
}

TEST_CASE("minimum witnesses drop the chromatic index by exactly one") {
    std::mt19937_64 rng(13579);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = testutil::gnp_with_edges(n, 0.5, rng);
        const int chi = chi_prime(g).chi_prime;
        const MitigatingReport rep = es_exact(g);
        CAPTURE(encode_graph6(g));
        CHECK(rep.es >= 1);
        CHECK(rep.es <= g.vertex_count() / 2);
        CHECK(rep.es <= g.edge_count() / chi);
        CHECK(static_cast<int>(rep.witness.size()) == rep.es);

        const Graph stripped = remove_edges(g, rep.witness);
        if (stripped.edge_count() == 0)
            CHECK(chi == 1);
        else
            CHECK(chi_prime(stripped).chi_prime == chi - 1);

        // No smaller set mitigates; the witness is the lexicographic least.
        const auto mins = all_min_mitigating_sets(g);
        REQUIRE(!mins.empty());
        CHECK(mins.front() == rep.witness);
        for (const auto& s : mins) CHECK(mitigates(g, s));
    }
}

TEST_CASE("witness details on the smallest odd complete graph with a choice") {
    const MitigatingReport rep = es_exact(make("complete(5)"));
    CHECK(rep.es == 2);
    CHECK(rep.witness == EdgeSet{{0, 1}, {0, 2}});  // lexicographic least, not a matching
    CHECK_FALSE(rep.witness_is_matching);
    REQUIRE(rep.matching_witness.has_value());
    CHECK(*rep.matching_witness == EdgeSet{{0, 1}, {2, 3}});
    CHECK(rep.mode == SearchMode::exact);
    CHECK(rep.subsets_tested > 0);

    const MitigatingReport matched = es_exact(make("complete(5)"), SearchMode::matching_only);
    CHECK(matched.es == 2);
    CHECK(matched.witness == EdgeSet{{0, 1}, {2, 3}});
    CHECK(matched.witness_is_matching);
    CHECK(std::string(to_string(matched.mode)) == "matching_only");
}

TEST_CASE("search modes agree on every labeled graph up to five vertices") {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, [](const Graph& g) {
            if (g.edge_count() == 0) return;
            const MitigatingReport exact = es_exact(g);
            const MitigatingReport matching = es_exact(g, SearchMode::matching_only);
            CAPTURE(encode_graph6(g));
            CHECK(exact.es == matching.es);
            CHECK(is_matching(matching.witness));
            CHECK(mitigates(g, matching.witness));
        });
    }
}

TEST_CASE("mitigates checks its inputs") {
    const Graph c5 = make("cycle(5)");
    CHECK(mitigates(c5, {{0, 1}}));
    CHECK_FALSE(mitigates(c5, {}));
    CHECK_FALSE(mitigates(make("cycle(6)"), {{0, 1}}));
    CHECK_THROWS_AS(mitigates(c5, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(mitigates(Graph(3, {}), {}), PreconditionError);
}

TEST_CASE("all minimum mitigating sets") {
    // Any single edge of an odd cycle works.
    const auto c5 = all_min_mitigating_sets(make("cycle(5)"));
    REQUIRE(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.size() == 1);

    // K_4 has exactly its three perfect matchings.
    const auto k4 = all_min_mitigating_sets(make("complete(4)"));
    REQUIRE(k4.size() == 3);
    for (const auto& s : k4) {
        CHECK(s.size() == 2);
        CHECK(is_matching(s));
    }
}

TEST_CASE("matching conjecture holds on fixed graphs") {
    const ConjectureVerdict even_cycle = verify_conjecture1(make("cycle(6)"));
    CHECK(even_cycle.es == 3);
    CHECK(even_cycle.holds);
    REQUIRE(even_cycle.matching_witness.has_value());
    CHECK(even_cycle.matching_witness->size() == 3);
    CHECK(is_matching(*even_cycle.matching_witness));

    const ConjectureVerdict k5 = verify_conjecture1(make("complete(5)"));
    CHECK(k5.es == 2);
    CHECK(k5.holds);

    const ConjectureVerdict pete = verify_conjecture1(testutil::petersen());
    CHECK(pete.es == 2);
    CHECK(pete.holds);
}

TEST_CASE("bipartite transform turns faults into matchings") {
    // Frozen example: the middle pair of a path hands back its outer matching.
    const Graph p5 = make("path(5)");
    CHECK(bipartite_matching_transform(p5, {{1, 2}, {2, 3}}) == EdgeSet{{0, 1}, {2, 3}});

    std::mt19937_64 rng(86420);
    int exercised = 0;
    for (int trial = 0; trial < 400 && exercised < 60; ++trial) {
        Graph g = testutil::random_bipartite(1 + static_cast<int>(rng() % 5),
                                             1 + static_cast<int>(rng() % 5), 0.5, rng);
        if (g.edge_count() == 0) continue;
        // Any superset of a mitigating set still mitigates.
        EdgeSet fault = es_exact(g).witness;
        for (const Edge& e : g.edges())
            if (rng() % 3 == 0) fault.push_back(e);
        normalize_edge_set(fault);
        if (!mitigates(g, fault)) continue;

        const EdgeSet out = bipartite_matching_transform(g, fault);
        CAPTURE(encode_graph6(g));
        CHECK(is_matching(out));
        CHECK(out.size() <= fault.size());
        CHECK(mitigates(g, out));
        ++exercised;
    }
    CHECK(exercised >= 60);

    CHECK_THROWS_AS(bipartite_matching_transform(make("cycle(5)"), {{0, 1}}), TransformError);
    CHECK_THROWS_AS(bipartite_matching_transform(p5, {}), TransformError);
    CHECK_THROWS_AS(bipartite_matching_transform(p5, {{0, 2}}), TransformError);
    CHECK_THROWS_AS(bipartite_matching_transform(p5, {{0, 1}}), TransformError);  // not mitigating
}

TEST_CASE("pair transform turns adjacent mitigating pairs into matchings") {
    const Graph k5 = make("complete(5)");
    const EdgeSet out = two_matching_transform(k5, {{0, 1}, {0, 2}});
    CHECK(out.size() == 2);
    CHECK(is_matching(out));
    CHECK(mitigates(k5, out));

    // Matching input passes through untouched.
    CHECK(two_matching_transform(k5, {{0, 1}, {2, 3}}) == EdgeSet{{0, 1}, {2, 3}});

    CHECK_THROWS_AS(two_matching_transform(k5, {{0, 1}}), TransformError);
    CHECK_THROWS_AS(two_matching_transform(make("cycle(6)"), {{0, 1}, {1, 2}}), TransformError);

    // Every adjacent minimum pair of every small graph converts.
    std::mt19937_64 rng(24680);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const Graph g = testutil::gnp_with_edges(n, 0.55, rng);
        const MitigatingReport rep = es_exact(g);
        if (rep.es != 2) continue;
        for (const EdgeSet& s : all_min_mitigating_sets(g)) {
            const EdgeSet m = two_matching_transform(g, s);
            CAPTURE(encode_graph6(g));
            CHECK(is_matching(m));
            CHECK(m.size() == 2);
            CHECK(mitigates(g, m));
        }
    }
}

TEST_CASE("criticality and the adjacency condition") {
    CHECK(is_critical(make("cycle(5)")));
    CHECK(is_critical(make("cycle(3)")));
    CHECK_FALSE(is_critical(make("cycle(6)")));          // Class 1
    CHECK_FALSE(is_critical(testutil::petersen()));      // Class 2, edge loss can keep chi
    CHECK_FALSE(is_critical(make("disjoint_union(3,3)")));
    // One edge down K_5 is still overfull, so its index does not move.
    CHECK_FALSE(is_critical(make("complete(5)")));

    CHECK(vizing_adjacency_check(make("cycle(5)")));
    CHECK(vizing_adjacency_check(make("cycle(3)")));
    CHECK_THROWS_AS(vizing_adjacency_check(make("complete(5)")), PreconditionError);
    CHECK_THROWS_AS(vizing_adjacency_check(testutil::petersen()), PreconditionError);
    CHECK_THROWS_AS(vizing_adjacency_check(make("path(4)")), PreconditionError);
}

TEST_CASE("core matching bound") {
    CHECK(alpha_core_bound(make("cycle(7)")) == 3);
    CHECK(es_exact(make("cycle(7)")).es <= alpha_core_bound(make("cycle(7)")));
    CHECK(alpha_core_bound(make("complete(5)")) == 2);
    CHECK(alpha_core_bound(testutil::petersen()) == 5);
    CHECK_THROWS_AS(alpha_core_bound(make("cycle(6)")), PreconditionError);
}

TEST_CASE("report serialization") {
    const auto j = to_json(es_exact(make("complete(4)")));
    CHECK(j["es"] == 2);
    CHECK(j["witness_is_matching"] == true);
    CHECK(j["mode"] == "exact");
    CHECK(j.contains("witness"));
    CHECK(j.contains("subsets_tested"));
}
