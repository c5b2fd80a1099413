#include "eskit/graph.hpp"

#include <algorithm>

namespace eskit {

void normalize_edge_set(EdgeSet& edges) {
    for (auto& e : edges) e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph::Graph(int n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 1 and 62, got " +
                                    std::to_string(n));
    normalize_edge_set(edges_);
    adj_.resize(n_);
    mask_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        mask_[u] |= std::uint64_t{1} << v;
        mask_[v] |= std::uint64_t{1} << u;
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

int Graph::edge_index(Edge e) const {
    e = make_edge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph complement(const Graph& g) {
    EdgeSet edges;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int off = a.vertex_count();
    EdgeSet edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.push_back({u + off, v + off});
    return Graph(off + b.vertex_count(), std::move(edges));
}

Graph remove_edges(const Graph& g, const EdgeSet& f) {
    EdgeSet keep;
    EdgeSet drop = f;
    normalize_edge_set(drop);
    for (const auto& e : drop)
        if (g.edge_index(e) < 0)
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " not present in host graph");
    std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                        std::back_inserter(keep));
    return Graph(g.vertex_count(), std::move(keep));
}

Graph add_edge(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (g.has_edge(e.u, e.v)) throw PreconditionError("edge already present");
    EdgeSet edges = g.edges();
    edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_regular(const Graph& g) {
    const int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    EdgeSet edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.push_back(make_edge(pos[u], pos[v]));
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

CoreView core(const Graph& g) {
    const int delta = g.max_degree();
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == delta) verts.push_back(v);
    return CoreView{induced_subgraph(g, verts), verts};
}

}  // namespace eskit
