#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "eskit/families.hpp"
#include "eskit/formats.hpp"
#include "eskit/graph.hpp"
#include "eskit/matching.hpp"
#include "test_util.hpp"

using namespace eskit;

TEST_CASE("edge normalization and construction") {
    Graph g(4, {{2, 0}, {0, 2}, {1, 3}});
    CHECK(g.edge_count() == 2);  // duplicates collapse
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_index(make_edge(2, 0)) >= 0);
    CHECK(g.edge_index(make_edge(0, 1)) == -1);

    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST_CASE("degrees and adjacency") {
    const Graph g = generate(parse_family("comp_matchings_plus_claw(5)"));
    const auto d = g.degrees();
    REQUIRE(d.size() == 5);
    std::multiset<int> profile(d.begin(), d.end());
    CHECK(profile == std::multiset<int>{2, 3, 3, 3, 3});
    CHECK(g.max_degree() == 3);

    const Graph k4 = generate(parse_family("complete(4)"));
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(k4.neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(k4.adjacency_mask(0) == 0b1110);
}

TEST_CASE("complement and disjoint union") {
    const Graph c5 = generate(parse_family("cycle(5)"));
    const Graph comp = complement(c5);
    CHECK(comp.edge_count() == 5);  // self-complementary
    for (const Edge& e : c5.edges()) CHECK_FALSE(comp.has_edge(e.u, e.v));

    const Graph u = disjoint_union(generate(parse_family("complete(3)")),
                                   generate(parse_family("path(3)")));
    CHECK(u.vertex_count() == 6);
    CHECK(u.edge_count() == 5);
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(2, 3));
}

TEST_CASE("edge removal and insertion") {
    const Graph k4 = generate(parse_family("complete(4)"));
    const Graph g = remove_edges(k4, {{0, 1}, {2, 3}});
    CHECK(g.edge_count() == 4);
    CHECK_THROWS_AS(remove_edges(g, {{0, 1}}), PreconditionError);

    const Graph back = add_edge(g, {0, 1});
    CHECK(back.edge_count() == 5);
    CHECK_THROWS_AS(add_edge(k4, {0, 1}), PreconditionError);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(testutil::petersen()));
    CHECK_FALSE(is_connected(Graph(2, {})));

    const Graph u = disjoint_union(generate(parse_family("complete(3)")),
                                   disjoint_union(Graph(1, {}), generate(parse_family("path(2)"))));
    const auto comps = components(u);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
}

TEST_CASE("bipartite detection") {
    CHECK(is_bipartite(generate(parse_family("cycle(6)"))));
    CHECK_FALSE(is_bipartite(generate(parse_family("cycle(7)"))));
    CHECK_FALSE(is_bipartite(testutil::petersen()));

    const Graph k34 = generate(parse_family("complete_bipartite(3,4)"));
    const auto side = bipartition(k34);
    REQUIRE(side.has_value());
    for (const Edge& e : k34.edges()) CHECK((*side)[e.u] != (*side)[e.v]);
    CHECK_FALSE(bipartition(generate(parse_family("complete(3)"))).has_value());
}

TEST_CASE("regular and complete predicates") {
    CHECK(is_regular(testutil::petersen()));
    CHECK(is_complete(generate(parse_family("complete(5)"))));
    CHECK_FALSE(is_complete(generate(parse_family("complete_minus_edge(5)"))));
    CHECK(is_regular(Graph(3, {})));
    CHECK_FALSE(is_regular(generate(parse_family("path(3)"))));
}

TEST_CASE("core extraction") {
    // In P4 only the two middle vertices reach the maximum degree.
    const CoreView cv = core(generate(parse_family("path(4)")));
    CHECK(cv.graph.vertex_count() == 2);
    CHECK(cv.graph.edge_count() == 1);
    CHECK(cv.vertex_map == std::vector<int>{1, 2});

    // Every vertex of a regular graph is in the core.
    const CoreView pv = core(testutil::petersen());
    CHECK(pv.graph == testutil::petersen());
}

TEST_CASE("induced subgraphs") {
    const Graph k5 = generate(parse_family("complete(5)"));
    const Graph sub = induced_subgraph(k5, {0, 2, 4});
    CHECK(sub == generate(parse_family("complete(3)")));
    const Graph c5 = generate(parse_family("cycle(5)"));
    CHECK(induced_subgraph(c5, {0, 1, 2}) == generate(parse_family("path(3)")));
}

TEST_CASE("graph6 round trips on fixed strings") {
    CHECK(encode_graph6(generate(parse_family("complete(2)"))) == "A_");
    CHECK(encode_graph6(Graph(2, {})) == "A?");
    CHECK(encode_graph6(generate(parse_family("complete(3)"))) == "Bw");
    CHECK(encode_graph6(generate(parse_family("complete(4)"))) == "C~");
    CHECK(encode_graph6(Graph(1, {})) == "@");

    CHECK(parse_graph6("C~") == generate(parse_family("complete(4)")));
    CHECK(parse_graph6("A?") == Graph(2, {}));
}

TEST_CASE("graph6 round trips on random graphs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = testutil::gnp(n, 0.4, rng);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // truncated payload
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
    try {
        parse_graph6("B\x7f");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.offset == 1);
    }
}

TEST_CASE("edge list format") {
    const Graph g = generate(parse_family("path(4)"));
    const std::string text = encode_edge_list(g);
    CHECK(parse_edge_list(text) == g);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 zero\n"), ParseError);
    CHECK(parse_edge_list("2\n") == Graph(2, {}));
}

TEST_CASE("matching recognition") {
    CHECK(is_matching({{0, 1}, {2, 3}}));
    CHECK_FALSE(is_matching({{0, 1}, {1, 2}}));
    CHECK(is_matching({}));
}

TEST_CASE("maximum matching sizes") {
    CHECK(matching_number(generate(parse_family("cycle(5)"))) == 2);
    CHECK(matching_number(generate(parse_family("complete(4)"))) == 2);
    CHECK(matching_number(generate(parse_family("complete_bipartite(1,4)"))) == 1);
    CHECK(matching_number(testutil::petersen()) == 5);  // needs blossoms past greedy
    CHECK(matching_number(Graph(3, {})) == 0);

    const EdgeSet m = max_matching(testutil::petersen());
    CHECK(is_matching(m));
    CHECK(m.size() == 5);
}

TEST_CASE("maximum matching agrees with exhaustive search on small graphs") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = testutil::gnp(n, 0.5, rng);
        int best = 0;
        for (int k = 1; 2 * k <= n; ++k)
            if (!all_matchings(g, k).empty()) best = k;
        CHECK(matching_number(g) == best);
    }
}

TEST_CASE("matching and subset enumeration counts") {
    CHECK(all_matchings(generate(parse_family("cycle(4)")), 2).size() == 2);
    CHECK(all_matchings(generate(parse_family("complete(4)")), 2).size() == 3);
    CHECK(all_matchings(generate(parse_family("complete(4)")), 0).size() == 1);
    CHECK(all_edge_subsets(generate(parse_family("cycle(6)")), 2).size() == 15);
    CHECK_THROWS_AS(all_matchings(generate(parse_family("cycle(4)")), -1), PreconditionError);
}

TEST_CASE("family parsing") {
    CHECK(to_string(parse_family("path(7)")) == "path(7)");
    CHECK(to_string(parse_family(" cycle( 5 ) ")) == "cycle(5)");
    CHECK(to_string(parse_family("complete_bipartite(3,4)")) == "complete_bipartite(3,4)");
    CHECK(to_string(parse_family("disjoint_union(3,4)")) == "disjoint_union(3,4)");
    CHECK(to_string(parse_family("regular_plus_edge(cycle(5),0,2)")) ==
          "regular_plus_edge(cycle(5),0,2)");

    // Structural errors surface while parsing, value errors while generating.
    CHECK_THROWS_AS(parse_family("pentagon(5)"), FamilyError);
    CHECK_THROWS_AS(parse_family("path"), FamilyError);
    CHECK_THROWS_AS(parse_family("path(2) trailing"), FamilyError);
    CHECK_THROWS_AS(parse_family("disjoint_union(complete(3))"), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("path()")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("path(2,3)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("cycle(2)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("path(99)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("complete_bipartite(0,4)")), FamilyError);
}

TEST_CASE("basic family shapes") {
    CHECK(generate(parse_family("path(5)")).edge_count() == 4);
    CHECK(generate(parse_family("cycle(6)")).edge_count() == 6);
    CHECK(generate(parse_family("complete(6)")).edge_count() == 15);
    CHECK(generate(parse_family("complete_bipartite(3,4)")).edge_count() == 12);
    CHECK(generate(parse_family("complete_minus_edge(5)")).edge_count() == 9);

    const Graph u = generate(parse_family("disjoint_union(3,4)"));
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 9);
    CHECK_FALSE(is_connected(u));

    // complement(p1,...) is the complete multipartite graph with those parts
    CHECK(generate(parse_family("complement(1,1,1,1,1)")) == generate(parse_family("complete(5)")));
    CHECK(generate(parse_family("complement(2,3)")) ==
          generate(parse_family("complete_bipartite(2,3)")));
}

TEST_CASE("union constructions built from odd cliques") {
    const Graph v1 = generate(parse_family("clique_union_plus_matching(1,1)"));
    CHECK(v1.vertex_count() == 6);
    CHECK(is_regular(v1));
    CHECK(v1.max_degree() == 3);

    const Graph v2 = generate(parse_family("clique_union_plus_matching(2,1)"));
    CHECK(v2.vertex_count() == 7);
    CHECK(v2.edge_count() == 9);

    const Graph v3 = generate(parse_family("clique_union_plus_matching(3,1)"));
    CHECK(v3.vertex_count() == 9);
    CHECK(v3.edge_count() == 13);  // three K_3 plus a 4-matching
    CHECK(v3.max_degree() == 3);

    CHECK_THROWS_AS(generate(parse_family("clique_union_plus_matching(4,1)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("clique_union_plus_matching(1,0)")), FamilyError);
}

TEST_CASE("two hamiltonian family") {
    CHECK(generate(parse_family("two_hamiltonian(5)")) == generate(parse_family("complete(5)")));
    const Graph g = generate(parse_family("two_hamiltonian(7)"));
    CHECK(is_regular(g));
    CHECK(g.max_degree() == 4);
    CHECK(is_connected(g));
    CHECK_THROWS_AS(generate(parse_family("two_hamiltonian(6)")), FamilyError);
}

TEST_CASE("hamiltonian cycle decomposition covers odd complete graphs") {
    for (int n : {5, 7, 9}) {
        const auto cycles = hamiltonian_cycle_decomposition(n);
        REQUIRE(static_cast<int>(cycles.size()) == (n - 1) / 2);
        EdgeSet all;
        for (const auto& cyc : cycles) {
            REQUIRE(static_cast<int>(cyc.size()) == n);
            EdgeSet edges;
            for (std::size_t i = 0; i < cyc.size(); ++i)
                edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            normalize_edge_set(edges);
            const Graph c(n, edges);
            CHECK(c.edge_count() == n);  // no repeated edge inside one cycle
            CHECK(is_regular(c));
            CHECK(is_connected(c));
            all.insert(all.end(), edges.begin(), edges.end());
        }
        normalize_edge_set(all);
        CHECK(static_cast<int>(all.size()) == n * (n - 1) / 2);  // edge disjoint, covering
    }
    CHECK_THROWS_AS(hamiltonian_cycle_decomposition(6), PreconditionError);
}

TEST_CASE("regular_plus_edge family validates its base") {
    const Graph g = generate(parse_family("regular_plus_edge(cycle(5),0,2)"));
    CHECK(g.edge_count() == 6);
    CHECK(g.max_degree() == 3);
    // without an explicit pair the first non-edge is used
    CHECK(generate(parse_family("regular_plus_edge(cycle(5))")) == g);
    CHECK_THROWS_AS(generate(parse_family("regular_plus_edge(path(4),0,2)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("regular_plus_edge(complete(4),0,1)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("regular_plus_edge(cycle(5),0,1)")), FamilyError);
    CHECK_THROWS_AS(generate(parse_family("regular_plus_edge(cycle(5),0,9)")), FamilyError);
}
