#pragma once

// Exact computation of the chromatic edge stability index: the smallest
// number of edges whose removal lowers the chromatic index.  Also the
// constructive conversions of mitigating sets into matchings and a few
// structural bounds used by the theorem checks.

#include <optional>

#include "eskit/coloring.hpp"
#include "eskit/graph.hpp"
#include "json.hpp"

namespace eskit {

enum class SearchMode { exact, matching_only };
const char* to_string(SearchMode mode);

struct MitigatingReport {
    int es = 0;
    // Lexicographically least mitigating set of minimum size (in exact
    // mode) or the least minimum matching witness (in matching_only mode).
    EdgeSet witness;
    bool witness_is_matching = false;
    // Least mitigating k-matching for k = es, when one exists.
    std::optional<EdgeSet> matching_witness;
    SearchMode mode = SearchMode::exact;
    long long subsets_tested = 0;
};

// Does removing `fault` lower the chromatic index?
bool mitigates(const Graph& g, const EdgeSet& fault);

MitigatingReport es_exact(const Graph& g, SearchMode mode = SearchMode::exact,
                          bool fast_paths = true);

// Every mitigating set of minimum size, in lexicographic order.
std::vector<EdgeSet> all_min_mitigating_sets(const Graph& g);

struct ConjectureVerdict {
    int es = 0;
    bool holds = false;  // some minimum mitigating set is a matching
    std::optional<EdgeSet> matching_witness;
};
ConjectureVerdict verify_conjecture1(const Graph& g);

// Turns a mitigating set of a bipartite graph into a mitigating matching of
// no larger size, following the alternating-path induction.
EdgeSet bipartite_matching_transform(const Graph& g, const EdgeSet& fault);

// Turns a mitigating pair of adjacent edges into a mitigating 2-matching by
// Kempe-chain surgery.  When a single edge of the pair already mitigates
// (so the recoloring argument degenerates), falls back to the first
// mitigating 2-matching in lexicographic order.
EdgeSet two_matching_transform(const Graph& g, const EdgeSet& fault);

// Class 2 and every single edge removal lowers the chromatic index.
bool is_critical(const Graph& g);

// Vizing's adjacency property on a critical graph: for every edge xy, x has
// at least Delta - d(y) + 1 neighbors of maximum degree besides y.
bool vizing_adjacency_check(const Graph& g);

// Matching number of the core; an upper bound for the stability index of a
// Class 2 graph.
int alpha_core_bound(const Graph& g);

nlohmann::json to_json(const MitigatingReport& report);

}  // namespace eskit
