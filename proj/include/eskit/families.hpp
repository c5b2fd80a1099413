#pragma once

// Named graph families with a small textual spec grammar:
//   name(p1,p2,...)         integer parameters
//   regular_plus_edge(<spec>[,u,v])   wraps another spec
//
// Families:
//   path(n), cycle(n), complete(n)
//   complete_bipartite(m,n)
//   complete_minus_edge(n)            K_n minus one edge
//   comp_matchings_plus_claw(n)       complement of K_2 u ... u K_2 u K_{1,2}, odd n >= 5
//   clique_union_plus_matching(v,m)   v=1: K_{2m+1} u K_{2m+1} plus a perfect matching
//                                     v=2: K_{2m+1} u K_{2m+1} u K_1 plus a (2m+1)-matching
//                                     v=3: three copies of K_{2m+1} plus a (3m+1)-matching
//   two_hamiltonian(n)                union of the first two cycles of the round-robin
//                                     Hamiltonian decomposition of K_n, odd n >= 5
//   disjoint_union(a,b,...)           K_a u K_b u ...
//   complement(a,b,...)               complete multipartite with these part sizes
//   regular_plus_edge(spec[,u,v])     a regular base graph plus one non-edge

#include <memory>
#include <string>
#include <vector>

#include "eskit/graph.hpp"

namespace eskit {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    complete_minus_edge,
    comp_matchings_plus_claw,
    clique_union_plus_matching,
    two_hamiltonian,
    disjoint_union,
    complement,
    regular_plus_edge,
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
    std::shared_ptr<FamilySpec> base;  // only for regular_plus_edge
};

FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

// Round-robin decomposition of K_n (odd n >= 3) into (n-1)/2 Hamiltonian
// cycles: vertex n-1 stays fixed, vertices 0..n-2 rotate.  Cycle i is
// returned as its vertex sequence.
std::vector<std::vector<int>> hamiltonian_cycle_decomposition(int n);

}  // namespace eskit
