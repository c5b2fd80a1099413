#pragma once

// Exact maximum matching (blossom contraction) and lexicographic
// enumeration of k-matchings / k-edge-subsets.

#include <cstdint>
#include <utility>

#include "eskit/graph.hpp"

namespace eskit {

bool is_matching(const EdgeSet& edges);

// Maximum matching via augmenting paths with blossom contraction; exact on
// every input.  Result is in canonical edge order.
EdgeSet max_matching(const Graph& g);
int matching_number(const Graph& g);

// Calls fn for every k-matching in lexicographic order of the sorted edge
// index tuples.  fn returns false to stop early; the function returns true
// if the enumeration was stopped.  k = 0 yields the empty set once.
template <typename Fn>
bool for_each_matching(const Graph& g, int k, Fn&& fn) {
    if (k < 0) throw PreconditionError("matching size must be non-negative");
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    EdgeSet chosen;
    chosen.reserve(k);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) return !fn(static_cast<const EdgeSet&>(chosen));
        // not enough edges left to finish the tuple
        if (m - from < k - static_cast<int>(chosen.size())) return false;
        for (int i = from; i < m; ++i) {
            const auto& e = edges[i];
            const std::uint64_t bits =
                (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
            if (used & bits) continue;
            used |= bits;
            chosen.push_back(e);
            bool stopped = self(self, i + 1);
            chosen.pop_back();
            used &= ~bits;
            if (stopped) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// Same contract as for_each_matching but over all k-subsets of the edges.
template <typename Fn>
bool for_each_edge_subset(const Graph& g, int k, Fn&& fn) {
    if (k < 0) throw PreconditionError("subset size must be non-negative");
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    EdgeSet chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) return !fn(static_cast<const EdgeSet&>(chosen));
        if (m - from < k - static_cast<int>(chosen.size())) return false;
        for (int i = from; i < m; ++i) {
            chosen.push_back(edges[i]);
            bool stopped = self(self, i + 1);
            chosen.pop_back();
            if (stopped) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<EdgeSet> all_matchings(const Graph& g, int k);
std::vector<EdgeSet> all_edge_subsets(const Graph& g, int k);

}  // namespace eskit
