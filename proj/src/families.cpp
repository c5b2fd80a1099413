#include "eskit/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace eskit {

namespace {

const std::map<std::string, Family>& family_names() {
    static const std::map<std::string, Family> names = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"complete", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"complete_minus_edge", Family::complete_minus_edge},
        {"comp_matchings_plus_claw", Family::comp_matchings_plus_claw},
        {"clique_union_plus_matching", Family::clique_union_plus_matching},
        {"two_hamiltonian", Family::two_hamiltonian},
        {"disjoint_union", Family::disjoint_union},
        {"complement", Family::complement},
        {"regular_plus_edge", Family::regular_plus_edge},
    };
    return names;
}

std::string known_family_list() {
    std::string out;
    for (const auto& [name, fam] : family_names()) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw FamilyError(msg + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    FamilySpec parse_spec() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        auto it = family_names().find(name);
        if (it == family_names().end())
            throw FamilyError("unknown family '" + name + "'; known families: " +
                              known_family_list());
        FamilySpec spec{it->second, {}, nullptr};
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') break;
            if (!first) {
                if (pos >= text.size() || text[pos] != ',') fail("expected ','");
                ++pos;
                skip_ws();
            }
            first = false;
            if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
                if (spec.family != Family::regular_plus_edge || spec.base)
                    fail("nested spec only allowed as first argument of regular_plus_edge");
                spec.base = std::make_shared<FamilySpec>(parse_spec());
            } else {
                std::size_t istart = pos;
                if (pos < text.size() && text[pos] == '-') ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == istart) fail("expected integer parameter");
                spec.params.push_back(std::stoi(text.substr(istart, pos - istart)));
            }
        }
        ++pos;  // ')'
        return spec;
    }
};

void want_params(const FamilySpec& spec, std::size_t count, const std::string& what) {
    if (spec.params.size() != count)
        throw FamilyError(to_string(spec) + ": expected " + what);
}

Graph clique(int n) {
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cliques_union(const std::vector<int>& orders) {
    int n = 0;
    for (int a : orders) {
        if (a < 1) throw FamilyError("clique order must be positive");
        n += a;
    }
    if (n < 1 || n > kMaxVertices) throw FamilyError("union order out of range");
    EdgeSet edges;
    int off = 0;
    for (int a : orders) {
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) edges.push_back({off + u, off + v});
        off += a;
    }
    return Graph(n, std::move(edges));
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    Parser p{text};
    FamilySpec spec = p.parse_spec();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string name;
    for (const auto& [n, f] : family_names())
        if (f == spec.family) name = n;
    std::ostringstream out;
    out << name << '(';
    bool first = true;
    if (spec.base) {
        out << to_string(*spec.base);
        first = false;
    }
    for (int p : spec.params) {
        if (!first) out << ',';
        out << p;
        first = false;
    }
    out << ')';
    return out.str();
}

std::vector<std::vector<int>> hamiltonian_cycle_decomposition(int n) {
    if (n < 3 || n % 2 == 0)
        throw PreconditionError("Hamiltonian decomposition needs odd n >= 3");
    const int t = (n - 1) / 2;
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < t; ++i) {
        // Zigzag i, i+1, i-1, i+2, i-2, ... over the rotating vertices,
        // with the fixed vertex n-1 closing the cycle.
        std::vector<int> cyc{n - 1};
        cyc.push_back(i);
        for (int j = 1; j <= t; ++j) {
            cyc.push_back(((i + j) % (n - 1) + (n - 1)) % (n - 1));
            if (j < t) cyc.push_back(((i - j) % (n - 1) + (n - 1)) % (n - 1));
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

namespace {

EdgeSet cycle_edges(const std::vector<int>& cyc) {
    EdgeSet edges;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    return edges;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: {
            want_params(spec, 1, "path(n)");
            int n = spec.params[0];
            if (n < 1 || n > kMaxVertices) throw FamilyError("path(n) needs 1 <= n <= 62");
            EdgeSet edges;
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            want_params(spec, 1, "cycle(n)");
            int n = spec.params[0];
            if (n < 3 || n > kMaxVertices) throw FamilyError("cycle(n) needs 3 <= n <= 62");
            EdgeSet edges;
            for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
            return Graph(n, std::move(edges));
        }
        case Family::complete: {
            want_params(spec, 1, "complete(n)");
            int n = spec.params[0];
            if (n < 1 || n > kMaxVertices) throw FamilyError("complete(n) needs 1 <= n <= 62");
            return clique(n);
        }
        case Family::complete_bipartite: {
            want_params(spec, 2, "complete_bipartite(m,n)");
            int m = spec.params[0], n = spec.params[1];
            if (m < 1 || n < 1 || m + n > kMaxVertices)
                throw FamilyError("complete_bipartite(m,n) needs m,n >= 1 and m+n <= 62");
            EdgeSet edges;
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < n; ++v) edges.push_back({u, m + v});
            return Graph(m + n, std::move(edges));
        }
        case Family::complete_minus_edge: {
            want_params(spec, 1, "complete_minus_edge(n)");
            int n = spec.params[0];
            if (n < 3 || n > kMaxVertices)
                throw FamilyError("complete_minus_edge(n) needs 3 <= n <= 62");
            return remove_edges(clique(n), {{0, 1}});
        }
        case Family::comp_matchings_plus_claw: {
            want_params(spec, 1, "comp_matchings_plus_claw(n)");
            int n = spec.params[0];
            if (n < 5 || n % 2 == 0 || n > kMaxVertices)
                throw FamilyError("comp_matchings_plus_claw(n) needs odd n >= 5");
            // K_2 u ... u K_2 u K_{1,2}, complemented.  Vertices 2i,2i+1 form
            // the matchings; the last three form the claw centered at n-3.
            EdgeSet edges;
            for (int i = 0; i + 1 < n - 3; i += 2) edges.push_back({i, i + 1});
            edges.push_back({n - 3, n - 2});
            edges.push_back({n - 3, n - 1});
            return complement(Graph(n, std::move(edges)));
        }
        case Family::clique_union_plus_matching: {
            want_params(spec, 2, "clique_union_plus_matching(variant,m)");
            int variant = spec.params[0], m = spec.params[1];
            if (m < 1) throw FamilyError("clique_union_plus_matching needs m >= 1");
            const int a = 2 * m + 1;
            if (variant == 1) {
                if (2 * a > kMaxVertices) throw FamilyError("order out of range");
                Graph g = cliques_union({a, a});
                EdgeSet edges = g.edges();
                for (int i = 0; i < a; ++i) edges.push_back({i, a + i});
                return Graph(2 * a, std::move(edges));
            }
            if (variant == 2) {
                if (2 * a + 1 > kMaxVertices) throw FamilyError("order out of range");
                Graph g = cliques_union({a, a, 1});
                EdgeSet edges = g.edges();
                for (int i = 0; i + 1 < a; ++i) edges.push_back({i, a + i});
                edges.push_back({a - 1, 2 * a});  // last clique vertex pairs with the K_1
                return Graph(2 * a + 1, std::move(edges));
            }
            if (variant == 3) {
                if (3 * a > kMaxVertices) throw FamilyError("order out of range");
                Graph g = cliques_union({a, a, a});
                EdgeSet edges = g.edges();
                // m+1 edges X-Y, m edges X-Z, m edges Y-Z: a (3m+1)-matching.
                for (int i = 0; i <= m; ++i) edges.push_back({i, a + i});
                for (int i = 0; i < m; ++i) edges.push_back({m + 1 + i, 2 * a + i});
                for (int i = 0; i < m; ++i) edges.push_back({a + m + 1 + i, 2 * a + m + i});
                return Graph(3 * a, std::move(edges));
            }
            throw FamilyError("clique_union_plus_matching variant must be 1, 2 or 3");
        }
        case Family::two_hamiltonian: {
            want_params(spec, 1, "two_hamiltonian(n)");
            int n = spec.params[0];
            if (n < 5 || n % 2 == 0 || n > kMaxVertices)
                throw FamilyError("two_hamiltonian(n) needs odd n >= 5");
            auto cycles = hamiltonian_cycle_decomposition(n);
            EdgeSet edges = cycle_edges(cycles[0]);
            for (const auto& e : cycle_edges(cycles[1])) edges.push_back(e);
            return Graph(n, std::move(edges));
        }
        case Family::disjoint_union: {
            if (spec.params.empty())
                throw FamilyError("disjoint_union needs at least one clique order");
            return cliques_union(spec.params);
        }
        case Family::complement: {
            if (spec.params.empty())
                throw FamilyError("complement needs at least one part size");
            return complement(cliques_union(spec.params));
        }
        case Family::regular_plus_edge: {
            if (!spec.base)
                throw FamilyError("regular_plus_edge needs a base spec, e.g. "
                                  "regular_plus_edge(cycle(5))");
            if (!spec.params.empty() && spec.params.size() != 2)
                throw FamilyError("regular_plus_edge takes an optional vertex pair u,v");
            Graph base = generate(*spec.base);
            if (!is_regular(base)) throw FamilyError("regular_plus_edge base is not regular");
            if (is_complete(base))
                throw FamilyError("regular_plus_edge base must not be complete");
            Edge e{-1, -1};
            if (spec.params.size() == 2) {
                e = make_edge(spec.params[0], spec.params[1]);
                if (e.u < 0 || e.v >= base.vertex_count() || e.u == e.v)
                    throw FamilyError("regular_plus_edge vertex pair out of range");
                if (base.has_edge(e.u, e.v))
                    throw FamilyError("regular_plus_edge pair is already an edge");
            } else {
                // first non-edge in canonical order
                for (int u = 0; e.u < 0 && u < base.vertex_count(); ++u)
                    for (int v = u + 1; v < base.vertex_count(); ++v)
                        if (!base.has_edge(u, v)) {
                            e = {u, v};
                            break;
                        }
            }
            return add_edge(base, e);
        }
    }
    throw FamilyError("unhandled family");
}

}  // namespace eskit
