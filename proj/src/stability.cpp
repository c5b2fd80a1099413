#include "eskit/stability.hpp"

#include <algorithm>
#include <bit>

#include "eskit/matching.hpp"

namespace eskit {

const char* to_string(SearchMode mode) {
    return mode == SearchMode::exact ? "exact" : "matching_only";
}

namespace {

// Edge list of g with a sorted fault set removed, written into `out`.
void edges_without(const EdgeSet& edges, const EdgeSet& fault, EdgeSet& out) {
    out.clear();
    std::size_t j = 0;
    for (const auto& e : edges) {
        if (j < fault.size() && fault[j] == e) {
            ++j;
            continue;
        }
        out.push_back(e);
    }
}

EdgeSet checked_fault(const Graph& g, const EdgeSet& fault, const char* what) {
    EdgeSet f = fault;
    normalize_edge_set(f);
    for (const auto& e : f)
        if (g.edge_index(e) < 0) throw PreconditionError(std::string(what) + " edge not in graph");
    return f;
}

int max_degree_without(const Graph& g, const EdgeSet& fault) {
    std::vector<int> deg = g.degrees();
    for (const auto& [u, v] : fault) {
        --deg[u];
        --deg[v];
    }
    return *std::max_element(deg.begin(), deg.end());
}

std::uint64_t vertex_bits(const Edge& e) {
    return (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
}

// Shared state for the subset search: answers "does removing this fault set
// leave a t-colorable graph" with the cheap degree filter in front.
struct DropTester {
    const Graph& g;
    int t;
    // Vertices of maximum degree when the graph is Class 1; every one of
    // them must lose an edge, which prunes most candidate sets.
    std::uint64_t must_cover = 0;
    EdgeSet rest;
    long long tested = 0;

    DropTester(const Graph& graph, const ClassVerdict& cv) : g(graph), t(cv.chi_prime - 1) {
        if (cv.class_tag == GraphClass::class1) {
            const int delta = g.max_degree();
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == delta) must_cover |= std::uint64_t{1} << v;
        }
        rest.reserve(g.edges().size());
    }

    bool operator()(const EdgeSet& fault) {
        ++tested;
        if (must_cover) {
            std::uint64_t covered = 0;
            for (const auto& e : fault) covered |= vertex_bits(e);
            if (must_cover & ~covered) return false;
        }
        edges_without(g.edges(), fault, rest);
        return edge_colorable(g.vertex_count(), rest, t);
    }
};

}  // namespace

bool mitigates(const Graph& g, const EdgeSet& fault) {
    if (g.edge_count() == 0)
        throw PreconditionError("edge stability needs at least one edge");
    EdgeSet f = checked_fault(g, fault, "fault");
    if (f.empty()) return false;
    ClassVerdict cv = chi_prime(g);
    EdgeSet rest;
    edges_without(g.edges(), f, rest);
    return edge_colorable(g.vertex_count(), rest, cv.chi_prime - 1);
}

MitigatingReport es_exact(const Graph& g, SearchMode mode, bool fast_paths) {
    if (g.edge_count() == 0)
        throw PreconditionError("edge stability needs at least one edge");
    ClassVerdict cv = chi_prime(g, fast_paths);
    // An equalized coloring has a class of exactly floor(m/chi) edges, and
    // removing one whole class always works, so the search is bounded and
    // always ends on a matching in the worst case.
    const int ub = g.edge_count() / cv.chi_prime;

    MitigatingReport report;
    report.mode = mode;
    DropTester drops(g, cv);

    for (int k = 1; k <= ub; ++k) {
        std::optional<EdgeSet> matching_hit;
        for_each_matching(g, k, [&](const EdgeSet& f) {
            if (drops(f)) {
                matching_hit = f;
                return false;
            }
            return true;
        });
        if (matching_hit) {
            report.es = k;
            report.matching_witness = matching_hit;
            if (mode == SearchMode::matching_only) {
                report.witness = *matching_hit;
                report.witness_is_matching = true;
            } else {
                // A non-matching subset may precede the matching hit in
                // lexicographic order; rescan up to the hit.
                EdgeSet least = *matching_hit;
                for_each_edge_subset(g, k, [&](const EdgeSet& f) {
                    if (drops(f)) {
                        least = f;
                        return false;
                    }
                    return true;
                });
                report.witness = least;
                report.witness_is_matching = is_matching(least);
            }
            report.subsets_tested = drops.tested;
            return report;
        }
        if (mode == SearchMode::exact) {
            std::optional<EdgeSet> subset_hit;
            for_each_edge_subset(g, k, [&](const EdgeSet& f) {
                if (is_matching(f)) return true;  // ruled out above
                if (drops(f)) {
                    subset_hit = f;
                    return false;
                }
                return true;
            });
            if (subset_hit) {
                report.es = k;
                report.witness = *subset_hit;
                report.witness_is_matching = false;
                report.matching_witness = std::nullopt;
                report.subsets_tested = drops.tested;
                return report;
            }
        }
    }
    throw std::logic_error("no mitigating set within the guaranteed bound");
}

std::vector<EdgeSet> all_min_mitigating_sets(const Graph& g) {
    if (g.edge_count() == 0)
        throw PreconditionError("edge stability needs at least one edge");
    ClassVerdict cv = chi_prime(g);
    const int ub = g.edge_count() / cv.chi_prime;
    DropTester drops(g, cv);
    for (int k = 1; k <= ub; ++k) {
        std::vector<EdgeSet> hits;
        for_each_edge_subset(g, k, [&](const EdgeSet& f) {
            if (drops(f)) hits.push_back(f);
            return true;
        });
        if (!hits.empty()) return hits;
    }
    throw std::logic_error("no mitigating set within the guaranteed bound");
}

ConjectureVerdict verify_conjecture1(const Graph& g) {
    MitigatingReport report = es_exact(g);
    return ConjectureVerdict{report.es, report.matching_witness.has_value(),
                             report.matching_witness};
}

// ---------------------------------------------------------------------
// Bipartite transform.  For bipartite graphs lowering the chromatic index
// is the same as lowering the maximum degree, so a mitigating set is one
// that takes an edge from every vertex of maximum degree.

namespace {

EdgeColoring palette_coloring(const Graph& g, int palette) {
    if (g.edge_count() == 0) return EdgeColoring(g, {}, palette);
    EdgeColoring col = konig_coloring(g);
    return EdgeColoring(g, col.colors(), palette);
}

EdgeSet bipartite_reduce(const Graph& g, const EdgeSet& fault) {
    if (is_matching(fault)) return fault;
    const Edge xy = fault.front();
    const int delta = g.max_degree();
    Graph g1 = remove_edges(g, {xy});
    if (g1.max_degree() < delta) return {xy};

    // fault minus xy still hits every maximum-degree vertex of g1
    EdgeSet m1 = bipartite_reduce(g1, EdgeSet(fault.begin() + 1, fault.end()));
    std::uint64_t covered = 0;
    for (const auto& e : m1) covered |= vertex_bits(e);
    const bool u_covered = covered >> xy.u & 1u;
    const bool v_covered = covered >> xy.v & 1u;
    if (!u_covered && !v_covered) {
        m1.push_back(xy);
        normalize_edge_set(m1);
        return m1;
    }
    // Both endpoints matched elsewhere: xy was never needed, because any
    // incident removed edge already lowers their degree.
    if (u_covered && v_covered) return m1;

    const int x = u_covered ? xy.u : xy.v;
    const int y = u_covered ? xy.v : xy.u;
    EdgeSet m2 = m1;
    m2.push_back(xy);
    normalize_edge_set(m2);

    // m2 mitigates but doubles up at x.  Walk the path that alternates
    // between m2 edges and one color class of the rest of the graph,
    // starting along xy; exchanging the two edge sets along that path
    // drops one of the edges at x and yields a matching again.
    Graph h = remove_edges(g, m2);
    EdgeColoring col = palette_coloring(h, delta - 1);
    const std::uint64_t palette_mask = (std::uint64_t{1} << (delta - 1)) - 1;
    const int c1 = std::countr_zero(~col.colors_at(x) & palette_mask);

    std::vector<int> partner(g.vertex_count(), -1);
    for (const auto& e : m2) {
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }
    EdgeSet path_m{xy}, path_c;
    int cur = y;
    for (;;) {
        const int via = col.along(cur, c1);
        if (via < 0) break;
        path_c.push_back(make_edge(cur, via));
        cur = via;
        if (cur == x) throw std::logic_error("alternating path re-entered its root");
        const int p = partner[cur];
        if (p < 0) break;
        path_m.push_back(make_edge(cur, p));
        cur = p;
        if (cur == x) throw std::logic_error("alternating path re-entered its root");
    }
    normalize_edge_set(path_m);
    EdgeSet out;
    for (const auto& e : m2)
        if (!std::binary_search(path_m.begin(), path_m.end(), e)) out.push_back(e);
    out.insert(out.end(), path_c.begin(), path_c.end());
    normalize_edge_set(out);
    return out;
}

}  // namespace

EdgeSet bipartite_matching_transform(const Graph& g, const EdgeSet& fault) {
    if (g.edge_count() == 0) throw TransformError("graph has no edges");
    if (!is_bipartite(g)) throw TransformError("graph is not bipartite");
    EdgeSet f = fault;
    normalize_edge_set(f);
    if (f.empty()) throw TransformError("fault set is empty");
    for (const auto& e : f)
        if (g.edge_index(e) < 0) throw TransformError("fault edge not in graph");
    if (max_degree_without(g, f) >= g.max_degree())
        throw TransformError("set does not lower the chromatic index");

    EdgeSet out = bipartite_reduce(g, f);
    if (!is_matching(out) || out.size() > f.size() ||
        max_degree_without(g, out) >= g.max_degree())
        throw std::logic_error("bipartite transform produced an invalid set");
    return out;
}

// ---------------------------------------------------------------------
// Two-edge transform.

namespace {

// `col` colors g minus {xy, xz} and chat is missing at x; when chat appears
// at y on some edge yy', recoloring xy with chat shows that {yy', xz} is a
// mitigating 2-matching.  When chat is missing at y the input pair was not
// minimum (xz alone mitigates) and there is nothing to exchange.
std::optional<EdgeSet> exchange_pair(int x, int y, int z, const EdgeColoring& col, int chat) {
    const int mate = col.along(y, chat);
    if (mate < 0) return std::nullopt;
    EdgeSet out{make_edge(y, mate), make_edge(x, z)};
    normalize_edge_set(out);
    return out;
}

}  // namespace

EdgeSet two_matching_transform(const Graph& g, const EdgeSet& fault) {
    EdgeSet s = fault;
    normalize_edge_set(s);
    if (s.size() != 2) throw TransformError("need exactly two distinct edges");
    for (const auto& e : s)
        if (g.edge_index(e) < 0) throw TransformError("fault edge not in graph");

    ClassVerdict cv = chi_prime(g);
    const int t = cv.chi_prime - 1;
    const int n = g.vertex_count();
    EdgeSet rest;
    edges_without(g.edges(), s, rest);
    if (!edge_colorable(n, rest, t))
        throw TransformError("set does not lower the chromatic index");
    if (is_matching(s)) return s;

    int x, y, z;
    if (s[0].u == s[1].u || s[0].u == s[1].v) {
        x = s[0].u;
        y = s[0].v;
    } else {
        x = s[0].v;
        y = s[0].u;
    }
    z = (s[1].u == x) ? s[1].v : s[1].u;

    auto finish = [&](std::optional<EdgeSet> result) -> EdgeSet {
        if (result) {
            EdgeSet left;
            edges_without(g.edges(), *result, left);
            if (!is_matching(*result) || result->size() != 2 || !edge_colorable(n, left, t))
                throw std::logic_error("pair exchange produced an invalid set");
            return *result;
        }
        // One of the two edges already mitigates on its own; the exchange
        // argument needs a genuine minimum pair, so search directly.
        std::optional<EdgeSet> fallback;
        for_each_matching(g, 2, [&](const EdgeSet& f) {
            EdgeSet left;
            edges_without(g.edges(), f, left);
            if (edge_colorable(n, left, t)) {
                fallback = f;
                return false;
            }
            return true;
        });
        if (!fallback) throw TransformError("graph has no mitigating 2-matching");
        return *fallback;
    };

    Graph h = remove_edges(g, s);
    auto found = find_edge_coloring(h, t);
    if (!found) throw std::logic_error("mitigated graph did not accept the smaller palette");
    EdgeColoring c(h, found->colors(), t);

    const std::uint64_t palette_mask = (std::uint64_t{1} << t) - 1;
    const std::uint64_t free_at_x = ~c.colors_at(x) & palette_mask;
    int yz_color = -1;
    if (h.edge_index(make_edge(y, z)) >= 0) yz_color = c.color_of(make_edge(y, z));

    for (int cand = 0; cand < t; ++cand)
        if ((free_at_x >> cand & 1u) && cand != yz_color)
            return finish(exchange_pair(x, y, z, c, cand));

    // The only color missing at x sits on yz, so xyz is a triangle.  Swap a
    // Kempe chain to free a different color at x, unless the chain runs
    // through y and z itself.
    const int c1 = std::countr_zero(free_at_x);
    if (!(c.colors_at(x) & palette_mask))
        throw std::logic_error("triangle case with an uncolored spoke vertex");
    const int c2 = std::countr_zero(c.colors_at(x) & palette_mask);

    KempePath chain = kempe_path(c, x, c2, c1);
    std::size_t first = 0;
    for (std::size_t i = 1; i < chain.vertices.size(); ++i)
        if (chain.vertices[i] == y || chain.vertices[i] == z) {
            first = i;
            break;
        }
    if (first == 0)
        return finish(exchange_pair(x, y, z, kempe_swap(c, chain), c2));

    // Relabel so the chain meets y first; it then crosses the triangle edge
    // straight away, splitting into an x..y part and a tail from z.
    if (chain.vertices[first] == z) std::swap(y, z);
    if (first + 1 >= chain.vertices.size() || chain.vertices[first + 1] != z)
        throw std::logic_error("chain does not cross the triangle edge");

    // Move the fault pair to {xz, yz}: color xy with c1 instead of yz.
    Graph h2 = remove_edges(g, {make_edge(x, z), make_edge(y, z)});
    std::vector<int> colors2(h2.edge_count(), -1);
    for (int i = 0; i < h2.edge_count(); ++i) {
        const Edge e = h2.edges()[i];
        colors2[i] = (e == make_edge(x, y)) ? c1 : c.color_of(e);
    }
    EdgeColoring moved(h2, std::move(colors2), t);

    if (!moved.has_color_at(z, c2))
        return finish(exchange_pair(z, x, y, moved, c2));

    KempePath tail = kempe_path(moved, z, c2, c1);
    for (int v : tail.vertices)
        if (v == x || v == y) throw std::logic_error("tail chain re-entered the triangle");
    return finish(exchange_pair(z, x, y, kempe_swap(moved, tail), c2));
}

// ---------------------------------------------------------------------
// Structural predicates.

bool is_critical(const Graph& g) {
    ClassVerdict cv = chi_prime(g);
    if (cv.class_tag == GraphClass::class1) return false;
    const int t = cv.chi_prime - 1;
    EdgeSet rest;
    for (const auto& e : g.edges()) {
        edges_without(g.edges(), {e}, rest);
        if (!edge_colorable(g.vertex_count(), rest, t)) return false;
    }
    return true;
}

bool vizing_adjacency_check(const Graph& g) {
    if (!is_critical(g)) throw PreconditionError("vizing_adjacency_check needs a critical graph");
    const int delta = g.max_degree();
    for (const auto& [u, v] : g.edges()) {
        for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            int max_deg_neighbors = 0;
            for (int w : g.neighbors(x))
                if (w != y && g.degree(w) == delta) ++max_deg_neighbors;
            if (max_deg_neighbors < delta - g.degree(y) + 1) return false;
        }
    }
    return true;
}

int alpha_core_bound(const Graph& g) {
    ClassVerdict cv = chi_prime(g);
    if (cv.class_tag == GraphClass::class1)
        throw PreconditionError("alpha_core_bound needs a Class 2 graph");
    return matching_number(core(g).graph);
}

nlohmann::json to_json(const MitigatingReport& report) {
    auto edges_json = [](const EdgeSet& edges) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [u, v] : edges) out.push_back({u, v});
        return out;
    };
    nlohmann::json j{{"es", report.es},
                     {"witness", edges_json(report.witness)},
                     {"witness_is_matching", report.witness_is_matching},
                     {"mode", to_string(report.mode)},
                     {"subsets_tested", report.subsets_tested}};
    j["matching_witness"] =
        report.matching_witness ? edges_json(*report.matching_witness) : nlohmann::json();
    return j;
}

}  // namespace eskit
