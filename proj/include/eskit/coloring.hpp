#pragma once

// Proper edge colorings: the exact chromatic-index pipeline, constructive
// Koenig / Vizing colorings, Kempe chains, balanced and singleton-class
// colorings.

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "eskit/graph.hpp"

namespace eskit {

// Immutable proper-coloring snapshot: host graph, one color per canonical
// edge index, colors drawn from [0, k).
class EdgeColoring {
public:
    EdgeColoring(Graph host, std::vector<int> colors, int k);

    const Graph& host() const { return host_; }
    int color_count() const { return k_; }
    const std::vector<int>& colors() const { return colors_; }
    int color_of_index(int edge_idx) const { return colors_[edge_idx]; }
    int color_of(Edge e) const;

    // Bitmask of colors on edges incident to v.
    std::uint64_t colors_at(int v) const { return at_mask_[v]; }
    bool has_color_at(int v, int c) const { return (at_mask_[v] >> c & 1u) != 0; }
    // Neighbor reached from v along its c-colored edge, or -1.
    int along(int v, int c) const { return along_[v * k_ + c]; }

    std::vector<EdgeSet> classes() const;

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
        return a.k_ == b.k_ && a.host_ == b.host_ && a.colors_ == b.colors_;
    }

private:
    Graph host_;
    std::vector<int> colors_;
    int k_;
    std::vector<std::uint64_t> at_mask_;
    std::vector<int> along_;
};

// Independent validity check: every edge colored in range, no two incident
// edges share a color, and every color below k appears.
bool is_proper(const EdgeColoring& col);

enum class GraphClass { class1 = 1, class2 = 2 };

enum class DecisionPath { bipartite, overfull, core_forest, core_unicyclic, exact_search };
const char* to_string(DecisionPath p);

struct ClassVerdict {
    int chi_prime;
    GraphClass class_tag;
    DecisionPath decided_by;
    EdgeColoring witness;
};

// Exact chromatic index with a proper chi_prime-coloring witness.  Fast
// paths (bipartite, odd-order overfull, forest / unicyclic core) run per
// component before the exact backtracking search.  Requires >= 1 edge.
ClassVerdict chi_prime(const Graph& g, bool fast_paths = true);

// Decision procedure: does g admit a proper edge coloring with at most
// `colors` colors?  Splits into components and applies degree and counting
// bounds before searching.
bool edge_colorable(const Graph& g, int colors);
// Allocation-light variant for search loops; edges must be a canonical set
// on vertices 0..n-1.
bool edge_colorable(int n, const EdgeSet& edges, int colors);

// Witness version of the decision; colors are compacted so color_count()
// is the number actually used.
std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int colors);

// Delta-coloring of a bipartite graph via the alternating-path insertion
// argument behind Koenig's theorem.
EdgeColoring konig_coloring(const Graph& g);

// Misra-Gries fan rotation; at most max_degree + 1 colors on any graph.
EdgeColoring vizing_coloring(const Graph& g);

// Maximal two-colored path from u: c1 must appear at u, c2 must not.
struct KempePath {
    int c1, c2;
    std::vector<int> vertices;  // starts at u, length >= 2
};
KempePath kempe_path(const EdgeColoring& col, int u, int c1, int c2);
// Exchanges c1/c2 along the path; rejects paths that do not match the
// coloring (stale) or are not maximal.  Applying twice restores the input.
EdgeColoring kempe_swap(const EdgeColoring& col, const KempePath& path);

// Optimal coloring whose class sizes differ by at most one, built by Kempe
// rebalancing with an exact cardinality-capped search as fallback.
EdgeColoring balanced_coloring(const Graph& g);

// Optimal coloring with a singleton color class when one exists.
std::optional<EdgeColoring> singleton_class_coloring(const Graph& g);

// The classic coloring of K_n for odd n in which color i is exactly the
// color missing at vertex i: edge {i,j} gets (i+j)/2 mod n, halving mod n.
EdgeColoring complete_odd_coloring(int n);

nlohmann::json to_json(const EdgeColoring& col);

}  // namespace eskit
