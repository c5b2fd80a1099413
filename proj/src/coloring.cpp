#include "eskit/coloring.hpp"

#include <algorithm>
#include <bit>

namespace eskit {

EdgeColoring::EdgeColoring(Graph host, std::vector<int> colors, int k)
    : host_(std::move(host)), colors_(std::move(colors)), k_(k) {
    if (k_ < 0 || k_ > kMaxVertices + 1)
        throw std::invalid_argument("color count out of range");
    if (colors_.size() != host_.edges().size())
        throw std::invalid_argument("one color per edge required");
    const int n = host_.vertex_count();
    at_mask_.assign(n, 0);
    along_.assign(static_cast<std::size_t>(n) * std::max(k_, 1), -1);
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        const int c = colors_[i];
        if (c < 0 || c >= k_) throw std::invalid_argument("edge color out of range");
        const auto& [u, v] = host_.edges()[i];
        at_mask_[u] |= std::uint64_t{1} << c;
        at_mask_[v] |= std::uint64_t{1} << c;
        along_[u * k_ + c] = v;
        along_[v * k_ + c] = u;
    }
}

int EdgeColoring::color_of(Edge e) const {
    int idx = host_.edge_index(e);
    if (idx < 0) throw std::invalid_argument("edge not in host graph");
    return colors_[idx];
}

std::vector<EdgeSet> EdgeColoring::classes() const {
    std::vector<EdgeSet> out(k_);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out[colors_[i]].push_back(host_.edges()[i]);
    return out;
}

bool is_proper(const EdgeColoring& col) {
    const Graph& g = col.host();
    const int k = col.color_count();
    std::vector<char> used(k, 0);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        int c = col.color_of_index(static_cast<int>(i));
        if (c < 0 || c >= k) return false;
        used[c] = 1;
    }
    for (int c = 0; c < k; ++c)
        if (!used[c]) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> seen(k, 0);
        for (int w : g.neighbors(v)) {
            int c = col.color_of(make_edge(v, w));
            if (seen[c]) return false;
            seen[c] = 1;
        }
    }
    return true;
}

const char* to_string(DecisionPath p) {
    switch (p) {
        case DecisionPath::bipartite: return "bipartite";
        case DecisionPath::overfull: return "overfull";
        case DecisionPath::core_forest: return "core_forest";
        case DecisionPath::core_unicyclic: return "core_unicyclic";
        case DecisionPath::exact_search: return "exact_search";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------
// Exact backtracking search for a proper t-edge-coloring of one connected
// chunk of edges.  Edges are processed in descending order of endpoint
// degree sum; colors are tried lowest first and capped at one past the
// highest color used so far, which fixes the first edge to color 0 and
// kills the color-permutation symmetry.
struct ExactSearch {
    int t;
    std::uint64_t full;
    std::vector<Edge> order;
    std::vector<std::uint64_t> used;  // per-vertex incident color mask
    std::vector<int> uncolored;       // per-vertex count of uncolored incident edges
    std::vector<int> assigned;

    ExactSearch(int n, const EdgeSet& edges, int colors, const std::vector<int>& deg)
        : t(colors), full(t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1),
          order(edges), used(n, 0), uncolored(n, 0) {
        std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
            return deg[a.u] + deg[a.v] > deg[b.u] + deg[b.v];
        });
        for (const auto& [u, v] : order) {
            ++uncolored[u];
            ++uncolored[v];
        }
        assigned.assign(order.size(), -1);
    }

    bool feasible(int v) const {
        return std::popcount(~used[v] & full) >= uncolored[v];
    }

    bool dfs(std::size_t idx, int max_used) {
        if (idx == order.size()) return true;
        const auto& [u, v] = order[idx];
        std::uint64_t avail = ~(used[u] | used[v]) & full;
        const int cap = std::min(t - 1, max_used + 1);
        --uncolored[u];
        --uncolored[v];
        for (int c = 0; c <= cap; ++c) {
            if (!(avail >> c & 1u)) continue;
            const std::uint64_t bit = std::uint64_t{1} << c;
            used[u] |= bit;
            used[v] |= bit;
            if (feasible(u) && feasible(v)) {
                assigned[idx] = c;
                if (dfs(idx + 1, std::max(max_used, c))) return true;
                assigned[idx] = -1;
            }
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        ++uncolored[u];
        ++uncolored[v];
        return false;
    }

    bool run() { return dfs(0, -1); }
};

// Per-component split of an edge list (vertices without edges are ignored).
struct EdgeChunks {
    std::vector<EdgeSet> chunks;
    std::vector<int> deg;

    EdgeChunks(int n, const EdgeSet& edges) : deg(n, 0) {
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& [u, v] : edges) {
            ++deg[u];
            ++deg[v];
            parent[find(u)] = find(v);
        }
        std::vector<int> slot(n, -1);
        for (const auto& e : edges) {
            int root = find(e.u);
            if (slot[root] < 0) {
                slot[root] = static_cast<int>(chunks.size());
                chunks.emplace_back();
            }
            chunks[slot[root]].push_back(e);
        }
    }
};

int chunk_max_degree(const EdgeSet& chunk, const std::vector<int>& deg) {
    int d = 0;
    for (const auto& [u, v] : chunk) d = std::max({d, deg[u], deg[v]});
    return d;
}

int chunk_vertex_count(const EdgeSet& chunk) {
    std::uint64_t verts = 0;
    for (const auto& [u, v] : chunk)
        verts |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return std::popcount(verts);
}

// A t-coloring partitions each component's edges into matchings of size at
// most floor(nc/2), so a component with more than t*floor(nc/2) edges is a
// cheap refutation.
bool counting_bound_fails(const EdgeSet& chunk, int nc, int t) {
    return static_cast<long long>(chunk.size()) > static_cast<long long>(t) * (nc / 2);
}

}  // namespace

bool edge_colorable(int n, const EdgeSet& edges, int colors) {
    if (colors < 0) return false;
    if (edges.empty()) return true;
    if (colors == 0) return false;
    EdgeChunks split(n, edges);
    for (const auto& chunk : split.chunks) {
        const int dc = chunk_max_degree(chunk, split.deg);
        if (dc > colors) return false;
        if (dc + 1 <= colors) continue;  // Vizing upper bound settles it
        if (counting_bound_fails(chunk, chunk_vertex_count(chunk), colors)) return false;
        ExactSearch search(n, chunk, colors, split.deg);
        if (!search.run()) return false;
    }
    return true;
}

bool edge_colorable(const Graph& g, int colors) {
    return edge_colorable(g.vertex_count(), g.edges(), colors);
}

namespace {

// Fills `out` (indexed by position in `edges`) with a proper t-coloring of
// one chunk, or returns false.  Colors used within a chunk are contiguous
// from 0 because of the cap rule.
bool solve_chunk(int n, const EdgeSet& chunk, int t, const std::vector<int>& deg,
                 const EdgeSet& edges, std::vector<int>& out) {
    ExactSearch search(n, chunk, t, deg);
    if (!search.run()) return false;
    for (std::size_t i = 0; i < search.order.size(); ++i) {
        auto it = std::lower_bound(edges.begin(), edges.end(), search.order[i]);
        out[it - edges.begin()] = search.assigned[i];
    }
    return true;
}

}  // namespace

std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int colors) {
    const auto& edges = g.edges();
    if (edges.empty()) return EdgeColoring(g, {}, 0);
    if (colors <= 0) return std::nullopt;
    EdgeChunks split(g.vertex_count(), edges);
    std::vector<int> assign(edges.size(), -1);
    int k = 0;
    for (const auto& chunk : split.chunks) {
        const int dc = chunk_max_degree(chunk, split.deg);
        if (dc > colors) return std::nullopt;
        if (dc + 1 <= colors) {
            // Plenty of slack: the constructive Delta+1 coloring is cheap
            // and guaranteed.
            Graph sub(g.vertex_count(), chunk);
            EdgeColoring vc = vizing_coloring(sub);
            int top = 0;
            for (std::size_t i = 0; i < chunk.size(); ++i) {
                auto it = std::lower_bound(edges.begin(), edges.end(), sub.edges()[i]);
                assign[it - edges.begin()] = vc.color_of_index(static_cast<int>(i));
                top = std::max(top, vc.color_of_index(static_cast<int>(i)) + 1);
            }
            k = std::max(k, top);
            continue;
        }
        if (counting_bound_fails(chunk, chunk_vertex_count(chunk), colors))
            return std::nullopt;
        if (!solve_chunk(g.vertex_count(), chunk, colors, split.deg, edges, assign))
            return std::nullopt;
        for (const auto& e : chunk) k = std::max(k, assign[g.edge_index(e)] + 1);
    }
    return EdgeColoring(g, std::move(assign), k);
}

// ---------------------------------------------------------------------
// Koenig: insert edges one at a time keeping a Delta-coloring.  When no
// color is free at both ends, flip the two-colored path hanging off v;
// bipartiteness guarantees it misses u.

EdgeColoring konig_coloring(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("konig_coloring needs at least one edge");
    if (!is_bipartite(g)) throw PreconditionError("konig_coloring needs a bipartite graph");
    const int n = g.vertex_count();
    const int k = g.max_degree();
    std::vector<int> along(static_cast<std::size_t>(n) * k, -1);
    std::vector<std::uint64_t> used(n, 0);
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    std::vector<int> colors(g.edge_count(), -1);

    auto set_edge = [&](int x, int y, int c) {
        along[x * k + c] = y;
        along[y * k + c] = x;
        used[x] |= std::uint64_t{1} << c;
        used[y] |= std::uint64_t{1} << c;
    };
    auto clear_edge = [&](int x, int y, int c) {
        along[x * k + c] = -1;
        along[y * k + c] = -1;
        used[x] &= ~(std::uint64_t{1} << c);
        used[y] &= ~(std::uint64_t{1} << c);
    };

    for (int idx = 0; idx < g.edge_count(); ++idx) {
        const auto& [u, v] = g.edges()[idx];
        std::uint64_t common = ~used[u] & ~used[v] & full;
        if (common) {
            int c = std::countr_zero(common);
            set_edge(u, v, c);
            colors[idx] = c;
            continue;
        }
        const int a = std::countr_zero(~used[u] & full);  // free at u, used at v
        const int b = std::countr_zero(~used[v] & full);  // free at v, used at u
        // Walk the (a,b)-alternating path from v and swap it.
        std::vector<std::pair<Edge, int>> path;
        int cur = v, want = a;
        while (along[cur * k + want] >= 0) {
            int nxt = along[cur * k + want];
            path.emplace_back(make_edge(cur, nxt), want);
            cur = nxt;
            want = (want == a) ? b : a;
        }
        for (const auto& [e, c] : path) clear_edge(e.u, e.v, c);
        for (const auto& [e, c] : path) {
            int nc = (c == a) ? b : a;
            set_edge(e.u, e.v, nc);
            colors[g.edge_index(e)] = nc;
        }
        set_edge(u, v, a);
        colors[idx] = a;
    }
    return EdgeColoring(g, std::move(colors), k);
}

// ---------------------------------------------------------------------
// Misra-Gries implementation of Vizing's bound.

namespace {

struct MisraGries {
    const Graph& g;
    int k;  // Delta + 1
    std::vector<int> along;
    std::vector<std::uint64_t> used;
    std::uint64_t full;
    std::vector<int> colors;

    explicit MisraGries(const Graph& graph)
        : g(graph), k(graph.max_degree() + 1),
          along(static_cast<std::size_t>(graph.vertex_count()) * k, -1),
          used(graph.vertex_count(), 0), full((std::uint64_t{1} << k) - 1),
          colors(graph.edge_count(), -1) {}

    int color_between(int x, int y) const {
        for (int c = 0; c < k; ++c)
            if (along[x * k + c] == y) return c;
        return -1;
    }
    int lowest_free(int v) const { return std::countr_zero(~used[v] & full); }
    bool is_free(int v, int c) const { return !(used[v] >> c & 1u); }

    void set_edge(int x, int y, int c) {
        along[x * k + c] = y;
        along[y * k + c] = x;
        used[x] |= std::uint64_t{1} << c;
        used[y] |= std::uint64_t{1} << c;
    }
    void clear_edge(int x, int y, int c) {
        along[x * k + c] = -1;
        along[y * k + c] = -1;
        used[x] &= ~(std::uint64_t{1} << c);
        used[y] &= ~(std::uint64_t{1} << c);
    }

    // Swap colors c and d along the maximal path leaving u on its d-edge.
    void invert_path(int u, int c, int d) {
        std::vector<std::pair<Edge, int>> path;
        int cur = u, want = d;
        while (along[cur * k + want] >= 0) {
            int nxt = along[cur * k + want];
            path.emplace_back(make_edge(cur, nxt), want);
            cur = nxt;
            want = (want == d) ? c : d;
        }
        for (const auto& [e, col] : path) clear_edge(e.u, e.v, col);
        for (const auto& [e, col] : path) {
            const int swapped = col == d ? c : d;
            set_edge(e.u, e.v, swapped);
            colors[g.edge_index(e)] = swapped;
        }
    }

    void color_edge(int u, int v) {
        // Maximal fan of u starting at v: each successive edge (u,w) wears a
        // color free at the previous fan vertex.
        std::vector<int> fan{v};
        std::uint64_t in_fan = std::uint64_t{1} << v;
        for (;;) {
            bool grew = false;
            for (int w : g.neighbors(u)) {
                if (in_fan >> w & 1u) continue;
                int c = color_between(u, w);
                if (c >= 0 && is_free(fan.back(), c)) {
                    fan.push_back(w);
                    in_fan |= std::uint64_t{1} << w;
                    grew = true;
                    break;
                }
            }
            if (!grew) break;
        }
        const int c = lowest_free(u);
        const int d = lowest_free(fan.back());
        if (!is_free(u, d)) invert_path(u, c, d);

        // First fan prefix that is still a fan and ends where d is free.
        int w_idx = -1;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = color_between(u, fan[i]);
                if (ci < 0 || !is_free(fan[i - 1], ci)) break;  // prefix broke here
            }
            if (is_free(fan[i], d)) {
                w_idx = static_cast<int>(i);
                break;
            }
        }
        if (w_idx < 0) throw std::logic_error("fan rotation lost its target");

        // Rotate: shift every fan color one step toward v, then close with d.
        std::vector<int> shift(w_idx + 1, -1);
        for (int j = 0; j < w_idx; ++j) shift[j] = color_between(u, fan[j + 1]);
        shift[w_idx] = d;
        for (int j = 1; j <= w_idx; ++j) clear_edge(u, fan[j], color_between(u, fan[j]));
        for (int j = 0; j <= w_idx; ++j) {
            set_edge(u, fan[j], shift[j]);
            colors[g.edge_index(make_edge(u, fan[j]))] = shift[j];
        }
    }

    EdgeColoring run() {
        for (const auto& [u, v] : g.edges()) color_edge(u, v);
        // Compact the palette: some of the Delta+1 colors may be unused.
        std::vector<int> remap(k, -1);
        int next = 0;
        for (int c : colors)
            if (remap[c] < 0) remap[c] = next++;
        // Keep relative color order stable for reproducibility.
        std::vector<int> present;
        for (int c = 0; c < k; ++c)
            if (remap[c] >= 0) present.push_back(c);
        for (std::size_t i = 0; i < present.size(); ++i) remap[present[i]] = static_cast<int>(i);
        for (int& c : colors) c = remap[c];
        return EdgeColoring(g, colors, next);
    }
};

}  // namespace

EdgeColoring vizing_coloring(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("vizing_coloring needs at least one edge");
    return MisraGries(g).run();
}

// ---------------------------------------------------------------------
// Kempe chains.

KempePath kempe_path(const EdgeColoring& col, int u, int c1, int c2) {
    const int k = col.color_count();
    if (u < 0 || u >= col.host().vertex_count()) throw PreconditionError("vertex out of range");
    if (c1 < 0 || c1 >= k || c2 < 0 || c2 >= k || c1 == c2)
        throw PreconditionError("need two distinct colors below color_count()");
    if (!col.has_color_at(u, c1))
        throw PreconditionError("c1 must appear at the start vertex");
    if (col.has_color_at(u, c2))
        throw PreconditionError("c2 must be missing at the start vertex");
    KempePath path{c1, c2, {u}};
    int cur = u, want = c1;
    while (true) {
        int nxt = col.along(cur, want);
        if (nxt < 0) break;
        path.vertices.push_back(nxt);
        cur = nxt;
        want = (want == c1) ? c2 : c1;
    }
    return path;
}

EdgeColoring kempe_swap(const EdgeColoring& col, const KempePath& path) {
    const auto& verts = path.vertices;
    const int k = col.color_count();
    if (verts.size() < 2) throw std::invalid_argument("Kempe path needs at least one edge");
    if (path.c1 < 0 || path.c1 >= k || path.c2 < 0 || path.c2 >= k || path.c1 == path.c2)
        throw std::invalid_argument("Kempe path colors out of range");
    // The path must alternate c1/c2 starting with either color (so a swap
    // can be swapped back) and must be maximal at both ends.
    int first = col.color_of(make_edge(verts[0], verts[1]));
    if (first != path.c1 && first != path.c2)
        throw std::invalid_argument("stale Kempe path: first edge has neither color");
    int want = first;
    std::vector<int> idx;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        Edge e = make_edge(verts[i], verts[i + 1]);
        int ei = col.host().edge_index(e);
        if (ei < 0 || col.color_of_index(ei) != want)
            throw std::invalid_argument("stale Kempe path: colors do not alternate");
        idx.push_back(ei);
        want = (want == path.c1) ? path.c2 : path.c1;
    }
    int other_at_start = (first == path.c1) ? path.c2 : path.c1;
    if (col.has_color_at(verts.front(), other_at_start))
        throw std::invalid_argument("Kempe path is not maximal at its start");
    if (col.has_color_at(verts.back(), want))
        throw std::invalid_argument("Kempe path is not maximal at its end");

    std::vector<int> colors = col.colors();
    for (int ei : idx)
        colors[ei] = (colors[ei] == path.c1) ? path.c2 : path.c1;
    return EdgeColoring(col.host(), std::move(colors), k);
}

// ---------------------------------------------------------------------
// Chromatic index pipeline.

namespace {

struct ComponentVerdict {
    int chi;
    DecisionPath path;
};

bool core_is_forest(const Graph& core_graph) {
    return core_graph.edge_count() ==
           core_graph.vertex_count() - static_cast<int>(components(core_graph).size());
}

bool core_all_unicyclic(const Graph& core_graph) {
    for (const auto& comp : components(core_graph)) {
        Graph sub = induced_subgraph(core_graph, comp);
        if (sub.edge_count() > sub.vertex_count()) return false;
    }
    return true;
}

bool core_is_cycle_union(const Graph& core_graph) {
    for (int v = 0; v < core_graph.vertex_count(); ++v)
        if (core_graph.degree(v) != 2) return false;
    return true;
}

// chi' of one connected component with >= 1 edge, plus a coloring written
// into `out` at the host graph's edge indices.
ComponentVerdict component_chi(const Graph& host, const Graph& sub,
                               const std::vector<int>& verts, std::vector<int>& out,
                               bool fast_paths) {
    const int delta = sub.max_degree();
    auto write_back = [&](const EdgeColoring& col) {
        for (int i = 0; i < sub.edge_count(); ++i) {
            const auto& [a, b] = sub.edges()[i];
            out[host.edge_index(make_edge(verts[a], verts[b]))] = col.color_of_index(i);
        }
    };

    if (fast_paths) {
        if (is_bipartite(sub)) {
            write_back(konig_coloring(sub));
            return {delta, DecisionPath::bipartite};
        }
        const int nc = sub.vertex_count();
        if (nc % 2 == 1 &&
            2LL * sub.edge_count() > static_cast<long long>(nc - 1) * delta) {
            EdgeColoring vc = vizing_coloring(sub);
            if (vc.color_count() != delta + 1)
                throw std::logic_error("overfull component colored with Delta colors");
            write_back(vc);
            return {delta + 1, DecisionPath::overfull};
        }
        CoreView cv = core(sub);
        if (core_is_forest(cv.graph)) {
            auto col = find_edge_coloring(sub, delta);
            if (!col) throw std::logic_error("forest-core component is not Delta-colorable");
            write_back(*col);
            return {delta, DecisionPath::core_forest};
        }
        if (core_all_unicyclic(cv.graph) && !core_is_cycle_union(cv.graph)) {
            auto col = find_edge_coloring(sub, delta);
            if (!col) throw std::logic_error("unicyclic-core component is not Delta-colorable");
            write_back(*col);
            return {delta, DecisionPath::core_unicyclic};
        }
    }
    if (auto col = find_edge_coloring(sub, delta)) {
        write_back(*col);
        return {delta, DecisionPath::exact_search};
    }
    EdgeColoring vc = vizing_coloring(sub);
    if (vc.color_count() != delta + 1)
        throw std::logic_error("exact search and Vizing coloring disagree");
    write_back(vc);
    return {delta + 1, DecisionPath::exact_search};
}

}  // namespace

ClassVerdict chi_prime(const Graph& g, bool fast_paths) {
    if (g.edge_count() == 0)
        throw PreconditionError("chromatic index is undefined on edgeless graphs");
    std::vector<int> colors(g.edge_count(), -1);
    int chi = 0;
    DecisionPath decided = DecisionPath::exact_search;
    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        ComponentVerdict verdict = component_chi(g, sub, comp, colors, fast_paths);
        if (verdict.chi > chi) {
            chi = verdict.chi;
            decided = verdict.path;
        }
    }
    const int delta = g.max_degree();
    GraphClass tag = (chi == delta) ? GraphClass::class1 : GraphClass::class2;
    if (chi != delta && chi != delta + 1)
        throw std::logic_error("chromatic index outside the Vizing window");
    return ClassVerdict{chi, tag, decided, EdgeColoring(g, std::move(colors), chi)};
}

// ---------------------------------------------------------------------
// Balanced colorings.

namespace {

// Exact fallback: t-coloring with every class size between floor(m/t) and
// ceil(m/t).  Feasibility is guaranteed (equalized colorings always exist),
// so callers treat failure as a logic error.
struct BalancedSearch {
    int t;
    long long lo;
    std::uint64_t full;
    std::vector<Edge> order;
    std::vector<std::uint64_t> used;
    std::vector<int> sizes;
    std::vector<int> assigned;
    long long cap;

    BalancedSearch(const Graph& g, int colors)
        : t(colors), full((std::uint64_t{1} << t) - 1), order(g.edges()),
          used(g.vertex_count(), 0), sizes(t, 0), assigned(order.size(), -1) {
        std::vector<int> deg = g.degrees();
        std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
            return deg[a.u] + deg[a.v] > deg[b.u] + deg[b.v];
        });
        const long long m = static_cast<long long>(order.size());
        lo = m / t;
        cap = (m + t - 1) / t;
    }

    bool deficit_too_large(std::size_t idx) const {
        long long remaining = static_cast<long long>(order.size()) - static_cast<long long>(idx);
        long long need = 0;
        for (int c = 0; c < t; ++c) need += std::max(0LL, lo - sizes[c]);
        return need > remaining;
    }

    bool dfs(std::size_t idx) {
        if (idx == order.size()) return true;
        if (deficit_too_large(idx)) return false;
        const auto& [u, v] = order[idx];
        std::uint64_t avail = ~(used[u] | used[v]) & full;
        for (int c = 0; c < t; ++c) {
            if (!(avail >> c & 1u) || sizes[c] >= cap) continue;
            const std::uint64_t bit = std::uint64_t{1} << c;
            used[u] |= bit;
            used[v] |= bit;
            ++sizes[c];
            assigned[idx] = c;
            if (dfs(idx + 1)) return true;
            assigned[idx] = -1;
            --sizes[c];
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        return false;
    }
};

}  // namespace

EdgeColoring balanced_coloring(const Graph& g) {
    ClassVerdict cv = chi_prime(g);
    const int k = cv.chi_prime;
    std::vector<int> colors = cv.witness.colors();
    const int m = g.edge_count();

    for (;;) {
        std::vector<int> sizes(k, 0);
        for (int c : colors) ++sizes[c];
        int a = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
        int b = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
        if (sizes[a] - sizes[b] <= 1) break;

        EdgeColoring col(g, colors, k);
        // Look for an a/b component that is a path with one extra a-edge;
        // flipping it moves one edge from the big class to the small one.
        bool swapped = false;
        for (int idx = 0; idx < m && !swapped; ++idx) {
            if (colors[idx] != a) continue;
            const auto& [eu, ev] = g.edges()[idx];
            std::vector<int> chain{idx};
            int endpoints[2] = {eu, ev};
            int balance = 1;  // a-edges minus b-edges
            bool cycle = false;
            for (int side = 0; side < 2 && !cycle; ++side) {
                int prev = endpoints[side ^ 1], cur = endpoints[side], want = b;
                while (true) {
                    int nxt = col.along(cur, want);
                    if (nxt < 0) break;
                    int ei = g.edge_index(make_edge(cur, nxt));
                    if (ei == idx || std::find(chain.begin(), chain.end(), ei) != chain.end()) {
                        cycle = true;
                        break;
                    }
                    chain.push_back(ei);
                    balance += (want == a) ? 1 : -1;
                    prev = cur;
                    cur = nxt;
                    want = (want == a) ? b : a;
                }
                (void)prev;
                endpoints[side] = cur;
            }
            if (cycle || balance != 1) continue;
            for (int ei : chain) colors[ei] = (colors[ei] == a) ? b : a;
            swapped = true;
        }
        if (!swapped) {
            // No single chain helps; fall back to the exact cardinality-
            // bounded search.
            BalancedSearch search(g, k);
            if (!search.dfs(0)) throw std::logic_error("balanced coloring search failed");
            std::vector<int> out(m, -1);
            for (std::size_t i = 0; i < search.order.size(); ++i)
                out[g.edge_index(search.order[i])] = search.assigned[i];
            colors = std::move(out);
            break;
        }
    }
    return EdgeColoring(g, std::move(colors), k);
}

std::optional<EdgeColoring> singleton_class_coloring(const Graph& g) {
    ClassVerdict cv = chi_prime(g);
    const int chi = cv.chi_prime;
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        EdgeSet rest = g.edges();
        rest.erase(rest.begin() + idx);
        if (!edge_colorable(g.vertex_count(), rest, chi - 1)) continue;
        Graph sub(g.vertex_count(), rest);
        auto col = find_edge_coloring(sub, chi - 1);
        std::vector<int> colors(g.edge_count(), chi - 1);
        for (int i = 0; i < sub.edge_count(); ++i)
            colors[g.edge_index(sub.edges()[i])] = col->color_of_index(i);
        return EdgeColoring(g, std::move(colors), chi);
    }
    return std::nullopt;
}

EdgeColoring complete_odd_coloring(int n) {
    if (n < 3 || n % 2 == 0)
        throw PreconditionError("complete_odd_coloring needs odd n >= 3");
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    Graph g(n, std::move(edges));
    const int half = (n + 1) / 2;  // multiplicative inverse of 2 mod n
    std::vector<int> colors(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& [u, v] = g.edges()[i];
        colors[i] = static_cast<int>((static_cast<long long>(u + v) * half) % n);
    }
    return EdgeColoring(std::move(g), std::move(colors), n);
}

nlohmann::json to_json(const EdgeColoring& col) {
    nlohmann::json colors = nlohmann::json::array();
    for (int i = 0; i < col.host().edge_count(); ++i) {
        const auto& [u, v] = col.host().edges()[i];
        colors.push_back({u, v, col.color_of_index(i)});
    }
    return {{"k", col.color_count()}, {"colors", colors}};
}

}  // namespace eskit
