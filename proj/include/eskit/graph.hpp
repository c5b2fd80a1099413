#pragma once

// Simple undirected graphs on at most 62 vertices, plus the handful of
// structural helpers (complement, components, core, ...) everything else
// builds on.  Graphs are immutable once constructed; "mutations" return
// fresh graphs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eskit {

// graph6 short form covers n <= 62, which is far beyond anything the exact
// searches can chew on anyway, so a single 64-bit adjacency word per vertex
// is enough everywhere.
inline constexpr int kMaxVertices = 62;

struct Edge {
    int u = 0;
    int v = 0;
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonical orientation: endpoints sorted ascending.
constexpr Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// An EdgeSet is kept sorted in canonical (u, v) order with no duplicates.
using EdgeSet = std::vector<Edge>;

// Sorts, canonicalizes orientation, and drops duplicates in place.
void normalize_edge_set(EdgeSet& edges);

// Malformed textual input (graph6, edge lists, family specs with positions).
struct ParseError : std::runtime_error {
    std::size_t offset;  // byte offset (graph6) or line number (edge lists)
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what), offset(off) {}
};

// Family spec errors: unknown family name, bad parameters.
struct FamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented domain precondition does not hold (e.g. a stability query on
// an edgeless graph, or a parity/size constraint on a generator).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Preconditions specific to the witness transforms.
struct TransformError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Graph {
public:
    // Vertices are 0..n-1.  Edges are canonicalized and deduplicated; loops
    // and out-of-range endpoints are rejected.
    Graph(int n, EdgeSet edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::uint64_t adjacency_mask(int v) const { return mask_[v]; }

    bool has_edge(int u, int v) const {
        return u != v && (mask_[u] >> v & 1u) != 0;
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    std::vector<int> degrees() const;

    // Position of e in edges(), or -1 if absent.
    int edge_index(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    EdgeSet edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph remove_edges(const Graph& g, const EdgeSet& f);
Graph add_edge(const Graph& g, Edge e);

bool is_connected(const Graph& g);
// Vertex sets of the connected components, each sorted, ordered by smallest
// member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_bipartite(const Graph& g);
// Two-coloring per vertex (0/1), or nullopt when an odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

bool is_regular(const Graph& g);
bool is_complete(const Graph& g);

// Subgraph induced by the max-degree vertices, with the map from core
// vertex ids back to ids in the host graph.
struct CoreView {
    Graph graph;
    std::vector<int> vertex_map;
};
CoreView core(const Graph& g);

// Induced subgraph on the given (sorted, distinct) vertex set.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace eskit
