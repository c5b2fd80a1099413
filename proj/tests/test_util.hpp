#pragma once

// Random graph generators shared by the test binaries.  Everything takes an
// explicit engine so failures reproduce from the seed printed by the test.

#include <optional>
#include <random>
#include <vector>

#include "eskit/graph.hpp"

namespace testutil {

using eskit::Edge;
using eskit::EdgeSet;
using eskit::Graph;
using eskit::make_edge;

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(p);
    EdgeSet edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (flip(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph gnp_with_edges(int n, double p, std::mt19937_64& rng) {
    for (;;) {
        Graph g = gnp(n, p, rng);
        if (g.edge_count() > 0) return g;
    }
}

// Vertices 0..left-1 against left..left+right-1.
inline Graph random_bipartite(int left, int right, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(p);
    EdgeSet edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (flip(rng)) edges.push_back({u, left + v});
    return Graph(left + right, std::move(edges));
}

// One round of the pairing model; nullopt when it produces a loop or a
// repeated edge.
inline std::optional<Graph> try_random_regular(int n, int r, std::mt19937_64& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    EdgeSet edges;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        const int u = stubs[i], v = stubs[i + 1];
        if (u == v) return std::nullopt;
        edges.push_back(make_edge(u, v));
    }
    eskit::normalize_edge_set(edges);
    if (edges.size() != stubs.size() / 2) return std::nullopt;  // repeated pair
    return Graph(n, std::move(edges));
}

// Requires r < n and r*n even.  Dense degrees are sampled through the
// complement, where the pairing model's rejection rate stays tolerable.
inline Graph random_regular(int n, int r, std::mt19937_64& rng) {
    const int s = n - 1 - r;
    if (s < r) return eskit::complement(random_regular(n, s, rng));
    for (;;)
        if (auto g = try_random_regular(n, r, rng)) return *g;
}

inline Graph petersen() {
    EdgeSet edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
        edges.push_back(make_edge(i, i + 5));                // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner star
    }
    eskit::normalize_edge_set(edges);
    return Graph(10, std::move(edges));
}

}  // namespace testutil
