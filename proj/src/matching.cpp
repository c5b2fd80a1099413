#include "eskit/matching.hpp"

#include <algorithm>

namespace eskit {

bool is_matching(const EdgeSet& edges) {
    std::uint64_t used = 0;
    for (const auto& [u, v] : edges) {
        const std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (used & bits) return false;
        used |= bits;
    }
    return true;
}

namespace {

// Edmonds' blossom algorithm, the classic O(V^3) formulation: grow an
// alternating forest from each free vertex, contract odd cycles on the fly
// by redirecting "base" pointers, and augment when another free vertex is
// reached.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), p_(n_), base_(n_), used_(n_),
          blossom_(n_) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) try_augment(v);
        return match_;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, blossom_;

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = p_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
                    // Found an odd cycle: contract it into its base.
                    int curbase = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (p_[to] < 0) {
                    p_[to] = v;
                    if (match_[to] < 0) return to;  // augmenting path found
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void try_augment(int root) {
        int v = find_path(root);
        while (v >= 0) {
            int pv = p_[v];
            int ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }
};

}  // namespace

EdgeSet max_matching(const Graph& g) {
    auto match = Blossom(g).run();
    EdgeSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (match[v] > v) out.push_back({v, match[v]});
    return out;
}

int matching_number(const Graph& g) { return static_cast<int>(max_matching(g).size()); }

std::vector<EdgeSet> all_matchings(const Graph& g, int k) {
    std::vector<EdgeSet> out;
    for_each_matching(g, k, [&](const EdgeSet& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<EdgeSet> all_edge_subsets(const Graph& g, int k) {
    std::vector<EdgeSet> out;
    for_each_edge_subset(g, k, [&](const EdgeSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace eskit
