#ifndef TOPSNUT_GROUP_HPP
#define TOPSNUT_GROUP_HPP

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "labelling.hpp"
#include "matrix.hpp"
#include "util.hpp"

namespace topsnut {

inline constexpr long long kMaxAxiomCheck = 26; // exhaustive axiom checks up to this size
inline constexpr int kMaxChromaticVertices = 8;

// family {G_1..G_n} with f_i(w) = f_1(w) + (i-1) mod n and the shifted addition
struct GraphicGroup {
    Graph base_graph;
    Labelling base_labelling;
    long long modulus = 0;              // n, the element count
    std::string shift_domain = "vertices"; // vertices | vertices_and_edges

    // 1-based element; carries the modulus so it verifies under modular rules
    Labelling element(long long i) const {
        if (i < 1 || i > modulus) throw domain_error("element index out of range");
        Labelling el = base_labelling;
        el.modulus = modulus;
        for (auto& [v, val] : el.vertex_values) val = (val + i - 1) % modulus;
        if (shift_domain == "vertices_and_edges")
            for (auto& [ed, val] : el.edge_values) val = (val + i - 1) % modulus;
        return el;
    }
};

// indices are 1-based as written; arithmetic is 0-based internally
inline long long group_add(const GraphicGroup& grp, long long i, long long j, long long zero) {
    const long long n = grp.modulus;
    for (long long t : {i, j, zero})
        if (t < 1 || t > n) throw domain_error("group index out of range");
    return ((i + j - zero - 1) % n + n) % n + 1;
}

// the inverse of i under the zero k: i + inv - k = k
inline long long group_inverse(const GraphicGroup& grp, long long i, long long zero) {
    const long long n = grp.modulus;
    if (i < 1 || i > n || zero < 1 || zero > n) throw domain_error("group index out of range");
    return ((2 * zero - i - 1) % n + n) % n + 1;
}

inline GraphicGroup build_group(const Graph& g, const Labelling& lab,
                                std::optional<long long> modulus = std::nullopt,
                                const std::string& shift_domain = "vertices") {
    if (shift_domain != "vertices" && shift_domain != "vertices_and_edges")
        throw domain_error("unknown shift domain '" + shift_domain + "'");
    if (lab.kind != "raw") {
        Verdict vd = verify(g, lab);
        if (!vd.pass) throw domain_error("labelling fails verification: " + vd.text());
    }
    long long n;
    if (modulus)
        n = *modulus;
    else {
        n = 0;
        for (auto& [v, val] : lab.vertex_values) n = std::max(n, val);
        n += 1;
    }
    if (n < 2) throw domain_error("degenerate modulus");
    GraphicGroup grp{g, lab, n, shift_domain};

    // elements must be pairwise distinct as label vectors
    std::set<std::vector<long long>> seen;
    for (long long i = 1; i <= n; ++i) {
        std::vector<long long> vec;
        Labelling el = grp.element(i);
        for (auto& [v, val] : el.vertex_values) vec.push_back(val);
        for (auto& [e, val] : el.edge_values) vec.push_back(val);
        if (!seen.insert(vec).second) throw domain_error("group elements collide");
    }
    // constructive axiom check: pointwise label arithmetic must follow the index rule
    if (n <= kMaxAxiomCheck) {
        for (long long i = 1; i <= n; ++i)
            for (long long j = 1; j <= n; ++j)
                for (long long k = 1; k <= n; ++k) {
                    long long lam = group_add(grp, i, j, k);
                    Labelling fi = grp.element(i), fj = grp.element(j), fk = grp.element(k),
                              fl = grp.element(lam);
                    for (auto& [v, val] : fl.vertex_values) {
                        long long s = (fi.v(v) + fj.v(v) - fk.v(v)) % n;
                        if ((s + n) % n != val) throw domain_error("group addition law fails");
                    }
                }
    }
    return grp;
}

// ---- network encryption ----------------------------------------------------

struct EncryptedNetwork {
    Graph host;
    long long modulus = 0;
    std::map<Vertex, long long> vertex_assign;
    std::map<Edge, std::pair<long long, long long>> edge_assign; // (element, zero)
};

struct EncryptMode {
    std::string kind; // tree_distinct_adjacent | fixed_zero | community
    long long zero = 1;
    std::vector<std::set<Vertex>> parts;
    std::vector<long long> part_zeros;
    std::map<std::pair<std::size_t, std::size_t>, long long> bundle_zeros;
};

inline Verdict verify_encryption(const GraphicGroup& grp, const EncryptedNetwork& net) {
    Verdict vd;
    if (net.modulus != grp.modulus) vd.fail("modulus mismatch");
    for (const Edge& ed : net.host.edges()) {
        auto it = net.edge_assign.find(ed);
        if (it == net.edge_assign.end()) {
            vd.fail("edge (" + ed.a + "," + ed.b + ") unassigned");
            continue;
        }
        auto [lam, zero] = it->second;
        long long i = net.vertex_assign.at(ed.a), j = net.vertex_assign.at(ed.b);
        if (group_add(grp, i, j, zero) != lam)
            vd.fail("edge (" + ed.a + "," + ed.b + ") breaks the addition rule");
    }
    return vd;
}

namespace detail {

inline std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<Vertex> order;
    std::set<Vertex> seen;
    for (const Vertex& s : g.sorted_vertices()) {
        if (seen.count(s)) continue;
        std::queue<Vertex> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            order.push_back(v);
            for (const Vertex& w : g.neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
    }
    return order;
}

} // namespace detail

inline EncryptedNetwork encrypt_graph(const Graph& host, const GraphicGroup& grp,
                                      const EncryptMode& mode) {
    const long long n = grp.modulus;
    EncryptedNetwork net;
    net.host = host;
    net.modulus = n;
    auto zero_for_lambda = [&](long long i, long long j, long long lam) {
        return ((i + j - lam - 1) % n + n) % n + 1;
    };
    if (mode.kind == "tree_distinct_adjacent") {
        if (!is_connected(host) || !is_acyclic(host)) throw domain_error("host is not a tree");
        if (n < 1 + (long long)host.max_degree())
            throw domain_error("group too small: need at least 1 + max degree elements");
        std::vector<Vertex> order = detail::bfs_order(host);
        for (std::size_t i = 0; i < order.size(); ++i)
            net.vertex_assign[order[i]] = (long long)(i % (std::size_t)n) + 1;
        // proper edge colouring by element index, greedy along the BFS order
        std::map<Vertex, std::set<long long>> used;
        std::set<Vertex> placed;
        for (const Vertex& v : order) {
            placed.insert(v);
            for (const Vertex& w : host.neighbors(v)) {
                if (!placed.count(w)) continue;
                for (const Edge& ed : host.edges()) {
                    if (!ed.same(v, w) || net.edge_assign.count(ed)) continue;
                    long long lam = 1;
                    while (used[v].count(lam) || used[w].count(lam)) ++lam;
                    if (lam > n) throw domain_error("ran out of edge elements");
                    used[v].insert(lam);
                    used[w].insert(lam);
                    net.edge_assign[ed] = {lam, zero_for_lambda(net.vertex_assign[ed.a],
                                                                net.vertex_assign[ed.b], lam)};
                }
            }
        }
    } else if (mode.kind == "fixed_zero") {
        if (n < (long long)host.order())
            throw domain_error("group too small: need one element per vertex");
        if (mode.zero < 1 || mode.zero > n) throw domain_error("zero index out of range");
        long long idx = 1;
        for (const Vertex& v : host.sorted_vertices()) net.vertex_assign[v] = idx++;
        for (const Edge& ed : host.edges())
            net.edge_assign[ed] = {group_add(grp, net.vertex_assign[ed.a], net.vertex_assign[ed.b],
                                             mode.zero),
                                   mode.zero};
    } else if (mode.kind == "community") {
        if (mode.parts.size() != mode.part_zeros.size())
            throw domain_error("one zero per community required");
        std::set<Vertex> covered;
        std::map<Vertex, std::size_t> part_of;
        std::size_t maxpart = 0;
        for (std::size_t i = 0; i < mode.parts.size(); ++i) {
            maxpart = std::max(maxpart, mode.parts[i].size());
            for (const Vertex& v : mode.parts[i]) {
                if (!host.has_vertex(v) || !covered.insert(v).second)
                    throw domain_error("invalid partition");
                part_of[v] = i;
            }
        }
        if (covered.size() != host.order()) throw domain_error("partition must cover the host");
        if (std::set<long long>(mode.part_zeros.begin(), mode.part_zeros.end()).size() !=
            mode.part_zeros.size())
            throw domain_error("community zeros must be distinct");
        if (n < (long long)mode.parts.size() || n < (long long)maxpart)
            throw domain_error("group too small for the community layout");
        for (long long z : mode.part_zeros)
            if (z < 1 || z > n) throw domain_error("zero index out of range");
        for (const auto& part : mode.parts) {
            long long idx = 1;
            for (const Vertex& v : part) net.vertex_assign[v] = idx++;
        }
        for (const Edge& ed : host.edges()) {
            std::size_t a = part_of[ed.a], b = part_of[ed.b];
            long long zero;
            if (a == b)
                zero = mode.part_zeros[a];
            else {
                auto key = std::minmax(a, b);
                auto it = mode.bundle_zeros.find({key.first, key.second});
                if (it == mode.bundle_zeros.end())
                    throw domain_error("missing zero for a cross-community bundle");
                zero = it->second;
                if (zero == mode.part_zeros[a] || zero == mode.part_zeros[b])
                    throw domain_error("bundle zero collides with a community zero");
            }
            net.edge_assign[ed] = {group_add(grp, net.vertex_assign[ed.a], net.vertex_assign[ed.b],
                                             zero),
                                   zero};
        }
    } else {
        throw domain_error("unknown encryption mode '" + mode.kind + "'");
    }
    Verdict vd = verify_encryption(grp, net);
    if (!vd.pass) throw domain_error("encryption violates the addition rule");
    return net;
}

inline std::string serialize_encrypted(const EncryptedNetwork& net) {
    std::ostringstream os;
    os << "encrypt {\n";
    for (auto& [v, i] : net.vertex_assign) os << "  vertex " << v << " = G" << i << ";\n";
    for (auto& [ed, iz] : net.edge_assign)
        os << "  edge (" << ed.a << "," << ed.b << ") = G" << iz.first << " zero G" << iz.second
           << ";\n";
    os << "}\n";
    return os.str();
}

inline EncryptedNetwork parse_encrypted(const std::string& text, const Graph& host,
                                        long long modulus) {
    EncryptedNetwork net;
    net.host = host;
    net.modulus = modulus;
    std::istringstream in(text);
    std::string word;
    if (!(in >> word) || word != "encrypt") throw parse_error("expected 'encrypt'");
    if (!(in >> word) || word != "{") throw parse_error("expected '{'");
    auto index_of = [](const std::string& s) {
        if (s.size() < 2 || s[0] != 'G') throw parse_error("expected an element like G3");
        return std::stoll(s.substr(1));
    };
    auto strip = [](std::string s, char tail) {
        if (s.empty() || s.back() != tail) throw parse_error("malformed encrypt record");
        s.pop_back();
        return s;
    };
    while (in >> word && word != "}") {
        if (word == "vertex") {
            std::string v, eq, el;
            if (!(in >> v >> eq >> el) || eq != "=") throw parse_error("malformed vertex record");
            net.vertex_assign[v] = index_of(strip(el, ';'));
        } else if (word == "edge") {
            std::string pair, eq, el, zw, zv;
            if (!(in >> pair >> eq >> el >> zw >> zv) || eq != "=" || zw != "zero")
                throw parse_error("malformed edge record");
            std::size_t comma = pair.find(',');
            if (pair.size() < 5 || pair.front() != '(' || pair.back() != ')' ||
                comma == std::string::npos)
                throw parse_error("malformed edge endpoints");
            Edge ed(pair.substr(1, comma - 1), pair.substr(comma + 1, pair.size() - comma - 2));
            net.edge_assign[ed] = {index_of(el), index_of(strip(zv, ';'))};
        } else {
            throw parse_error("unexpected token '" + word + "'");
        }
    }
    return net;
}

// ---- gg-colorings ----------------------------------------------------------

struct GgAssignment {
    std::map<Vertex, long long> vertex;
    std::map<Edge, long long> edge;
    std::map<Edge, long long> zero; // per-edge zeros for the induced clauses
    long long induced_zero = 1;     // default zero for the vertex-set clause
};

namespace detail {

inline std::set<long long> gg_neighbor_set(const Graph& h, const GgAssignment& th, const Vertex& u) {
    std::set<long long> s;
    for (const Vertex& v : h.neighbors(u)) s.insert(th.vertex.at(v));
    return s;
}

inline std::set<long long> gg_incident_set(const Graph& h, const GgAssignment& th, const Vertex& u) {
    std::set<long long> s;
    for (const Edge& ed : h.edges())
        if (ed.touches(u)) s.insert(th.edge.at(ed));
    return s;
}

} // namespace detail

// the twelve kinds; each maps to its clause conjunction
inline Verdict verify_gg_coloring(const Graph& h, const GraphicGroup& grp, const GgAssignment& th,
                                  const std::string& kind) {
    static const std::map<std::string, std::vector<int>> kKinds = {
        {"proper_gg", {1, 4}},
        {"proper_edge_gg", {2, 5}},
        {"proper_total_gg", {3, 4, 5}},
        {"vertex_distinguishing", {1, 4, 6}},
        {"adjacent_vertex_distinguishing", {1, 4, 7}},
        {"edge_distinguishing", {2, 5, 8}},
        {"adjacent_edge_distinguishing", {2, 5, 9}},
        {"equitable_adjacent_v", {1, 4, 10}},
        {"equitable_adjacent_e", {2, 5, 11}},
        {"adjacent_total_distinguishing", {3, 4, 5, 12}},
        {"v_induced_total", {1, 4, 13}},
        {"induced_e_proper_v_set", {2, 5, 14}}, // experimental: the set clause only records sizes
    };
    auto it = kKinds.find(kind);
    if (it == kKinds.end()) throw domain_error("unknown gg-coloring kind '" + kind + "'");
    const std::vector<int>& clauses = it->second;
    auto needs = [&](int c) { return std::count(clauses.begin(), clauses.end(), c) != 0; };

    bool want_vertex = needs(1) || needs(3), want_edge = needs(2) || needs(3);
    if (want_vertex && th.vertex.size() != h.order())
        throw domain_error("assignment must cover every vertex");
    if (want_edge && th.edge.size() != h.size())
        throw domain_error("assignment must cover every edge");
    if (!want_vertex && needs(2) && !th.vertex.empty())
        throw domain_error("edge kinds take an edge-only assignment");
    for (auto& [v, i] : th.vertex)
        if (i < 1 || i > grp.modulus) throw domain_error("element index out of range");
    for (auto& [e, i] : th.edge)
        if (i < 1 || i > grp.modulus) throw domain_error("element index out of range");

    Verdict vd;
    if (needs(4)) {
        for (const Edge& ed : h.edges())
            if (th.vertex.at(ed.a) == th.vertex.at(ed.b))
                vd.fail("adjacent vertices share an element at (" + ed.a + "," + ed.b + ")");
    }
    if (needs(5)) {
        for (const Vertex& u : h.vertices()) {
            std::set<long long> seen;
            for (const Edge& ed : h.edges())
                if (ed.touches(u) && !seen.insert(th.edge.at(ed)).second)
                    vd.fail("edges at '" + u + "' share an element");
        }
    }
    auto pairwise_vertex_sets = [&](bool adjacent_only, bool incident) {
        std::vector<Vertex> vs = h.sorted_vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (adjacent_only && !h.has_edge(vs[i], vs[j])) continue;
                auto a = incident ? detail::gg_incident_set(h, th, vs[i])
                                  : detail::gg_neighbor_set(h, th, vs[i]);
                auto b = incident ? detail::gg_incident_set(h, th, vs[j])
                                  : detail::gg_neighbor_set(h, th, vs[j]);
                if (a == b)
                    vd.fail("vertices '" + vs[i] + "' and '" + vs[j] + "' have equal sets");
            }
    };
    if (needs(6)) pairwise_vertex_sets(false, false);
    if (needs(7)) pairwise_vertex_sets(true, false);
    if (needs(8)) pairwise_vertex_sets(false, true);
    if (needs(9)) pairwise_vertex_sets(true, true);
    if (needs(10) || needs(11)) {
        for (const Edge& ed : h.edges()) {
            auto a = needs(10) ? detail::gg_neighbor_set(h, th, ed.a)
                               : detail::gg_incident_set(h, th, ed.a);
            auto b = needs(10) ? detail::gg_neighbor_set(h, th, ed.b)
                               : detail::gg_incident_set(h, th, ed.b);
            if (std::llabs((long long)a.size() - (long long)b.size()) > 1)
                vd.fail("set sizes differ by more than one at (" + ed.a + "," + ed.b + ")");
        }
    }
    if (needs(12)) {
        for (const Edge& ed : h.edges()) {
            auto closed = [&](const Vertex& u) {
                std::set<long long> s = detail::gg_neighbor_set(h, th, u);
                auto inc = detail::gg_incident_set(h, th, u);
                s.insert(inc.begin(), inc.end());
                s.insert(th.vertex.at(u));
                return s;
            };
            if (closed(ed.a) == closed(ed.b))
                vd.fail("closed total sets agree at (" + ed.a + "," + ed.b + ")");
        }
    }
    if (needs(13)) {
        // induced edge elements, checked only where the assignment declares them
        for (auto& [ed, lam] : th.edge) {
            auto zit = th.zero.find(ed);
            if (zit == th.zero.end()) {
                vd.fail("edge (" + ed.a + "," + ed.b + ") lacks a declared zero");
                continue;
            }
            if (group_add(grp, th.vertex.at(ed.a), th.vertex.at(ed.b), zit->second) != lam)
                vd.fail("edge (" + ed.a + "," + ed.b + ") is not induced by its ends");
        }
    }
    if (needs(14)) {
        // experimental: record the induced vertex-set sizes under the default zero
        for (const Vertex& w : h.sorted_vertices()) {
            std::vector<long long> inc;
            for (const Edge& ed : h.edges())
                if (ed.touches(w)) inc.push_back(th.edge.at(ed));
            std::set<long long> s;
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j)
                    s.insert(group_add(grp, inc[i], inc[j], th.induced_zero));
            vd.constants["set_size_" + w] = (long long)s.size();
        }
    }
    return vd;
}

// proper total gg-coloring on a tree, with the two strengthened variants
inline GgAssignment greedy_total_gg_coloring(const Graph& host, const GraphicGroup& grp,
                                             const std::string& strengthen = "none") {
    if (!is_connected(host) || !is_acyclic(host)) throw domain_error("host is not a tree");
    const long long n = grp.modulus;
    const long long delta = (long long)host.max_degree();
    long long need = strengthen == "neighbor_sets" ? delta + 2 : delta + 1;
    if (strengthen != "none" && strengthen != "neighbor_sets" && strengthen != "index_sets")
        throw domain_error("unknown strengthening '" + strengthen + "'");
    if (n < need)
        throw domain_error("group too small: need " + std::to_string(need) + " elements");

    std::vector<Vertex> order = detail::bfs_order(host);
    std::map<Vertex, Vertex> parent;
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const Edge& ed : host.edges())
        parent[pos[ed.a] < pos[ed.b] ? ed.b : ed.a] = pos[ed.a] < pos[ed.b] ? ed.a : ed.b;

    GgAssignment th;
    // C'(x) = {theta(x)} + incident edge elements; I(x) = the per-edge zero indices
    auto cprime = [&](const Vertex& x) {
        std::set<long long> s{th.vertex.at(x)};
        for (const Edge& ed : host.edges())
            if (ed.touches(x)) s.insert(th.edge.at(ed));
        return s;
    };
    auto iset = [&](const Vertex& x) {
        std::set<long long> s;
        for (const Edge& ed : host.edges())
            if (ed.touches(x))
                s.insert(((th.vertex.at(ed.a) + th.vertex.at(ed.b) - th.edge.at(ed) - 1) % n + n) %
                             n +
                         1);
        return s;
    };
    auto strengthened_ok = [&]() {
        for (const Edge& ed : host.edges()) {
            if (strengthen == "neighbor_sets" && cprime(ed.a) == cprime(ed.b)) return false;
            if (strengthen == "index_sets" && iset(ed.a) == iset(ed.b)) return false;
        }
        return true;
    };
    // slots: vertex v, then (for non-roots) the edge to its parent
    std::function<bool(std::size_t)> place = [&](std::size_t s) -> bool {
        if (s == order.size()) return strengthened_ok();
        const Vertex& v = order[s];
        bool root = !parent.count(v);
        Edge up = root ? Edge() : Edge(parent[v], v);
        for (long long c = 1; c <= n; ++c) {
            if (!root && th.vertex.at(parent[v]) == c) continue;
            th.vertex[v] = c;
            if (root) {
                if (place(s + 1)) return true;
            } else {
                for (long long lam = 1; lam <= n; ++lam) {
                    bool clash = false;
                    for (const Edge& ed : host.edges())
                        if (th.edge.count(ed) && (ed.touches(up.a) || ed.touches(up.b)) &&
                            th.edge[ed] == lam)
                            clash = true;
                    if (clash) continue;
                    th.edge[up] = lam;
                    th.zero[up] = ((th.vertex[up.a] + th.vertex[up.b] - lam - 1) % n + n) % n + 1;
                    if (place(s + 1)) return true;
                    th.edge.erase(up);
                    th.zero.erase(up);
                }
            }
            th.vertex.erase(v);
        }
        return false;
    };
    if (!place(0)) throw domain_error("no coloring found within the group");
    return th;
}

// exhaustive minimizer over the number of group elements; small hosts only
inline long long gg_chromatic(const Graph& h, const std::string& kind, long long limit = 16) {
    if ((int)h.order() > kMaxChromaticVertices)
        throw domain_error("chromatic search capped at " + std::to_string(kMaxChromaticVertices) +
                           " vertices");
    Labelling base;
    base.kind = "raw";
    for (long long n = 1; n <= limit; ++n) {
        // any group of size n works: the clauses only compare element indices
        Graph k2;
        k2.add_vertex("a");
        k2.add_vertex("b");
        k2.add_edge("a", "b");
        Labelling lab;
        lab.kind = "raw";
        lab.vertex_values = {{"a", 0}, {"b", 1}};
        GraphicGroup grp = build_group(k2, lab, n >= 2 ? n : 2);
        grp.modulus = n; // index space of exactly n elements
        bool want_vertex = kind != "proper_edge_gg" && kind != "edge_distinguishing" &&
                           kind != "adjacent_edge_distinguishing" &&
                           kind != "equitable_adjacent_e" && kind != "induced_e_proper_v_set";
        bool want_edge = kind == "proper_edge_gg" || kind == "proper_total_gg" ||
                         kind == "edge_distinguishing" || kind == "adjacent_edge_distinguishing" ||
                         kind == "equitable_adjacent_e" ||
                         kind == "adjacent_total_distinguishing" ||
                         kind == "induced_e_proper_v_set";
        std::vector<Vertex> vs = h.sorted_vertices();
        std::vector<Edge> es = h.edges();
        std::size_t slots = (want_vertex ? vs.size() : 0) + (want_edge ? es.size() : 0);
        GgAssignment th;
        std::function<bool(std::size_t)> place = [&](std::size_t s) -> bool {
            if (s == slots) {
                try {
                    return verify_gg_coloring(h, grp, th, kind).pass;
                } catch (const domain_error&) {
                    return false;
                }
            }
            bool vertex_slot = want_vertex && s < vs.size();
            for (long long c = 1; c <= n; ++c) {
                if (vertex_slot) {
                    const Vertex& v = vs[s];
                    bool bad = false;
                    for (const Vertex& w : h.neighbors(v))
                        if (th.vertex.count(w) && th.vertex[w] == c) bad = true;
                    if (bad && kind != "proper_edge_gg") continue;
                    th.vertex[v] = c;
                    if (place(s + 1)) return true;
                    th.vertex.erase(v);
                } else {
                    const Edge& ed = es[s - (want_vertex ? vs.size() : 0)];
                    bool bad = false;
                    for (auto& [other, col] : th.edge)
                        if (col == c && (other.touches(ed.a) || other.touches(ed.b))) bad = true;
                    if (bad) continue;
                    th.edge[ed] = c;
                    if (place(s + 1)) return true;
                    th.edge.erase(ed);
                }
            }
            return false;
        };
        if (place(0)) return n;
    }
    throw domain_error("no coloring within the element limit");
}

// ---- bounds, equivalence, string views -------------------------------------

// m * C(n,k) * k! * sum(c)
inline mpz_class encryption_lower_bound(long long n, long long k, long long m,
                                        const std::vector<long long>& c) {
    if (k > n) throw domain_error("more communities than group elements");
    if (k < 1 || n < 1) throw domain_error("sizes must be positive");
    mpz_class binom, fact, total = 0;
    mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)k);
    for (long long v : c) total += (long)v;
    return mpz_class((long)m) * binom * fact * total;
}

// value bijection carrying grpB's base labelling onto grpA's, if one exists
inline std::optional<std::map<long long, long long>> equivalent_group_map(const GraphicGroup& a,
                                                                          const GraphicGroup& b) {
    if (a.base_graph.sorted_vertices() != b.base_graph.sorted_vertices()) return std::nullopt;
    std::map<long long, long long> theta;
    std::set<long long> image;
    for (const Vertex& v : a.base_graph.sorted_vertices()) {
        long long from = b.base_labelling.v(v), to = a.base_labelling.v(v);
        auto it = theta.find(from);
        if (it != theta.end()) {
            if (it->second != to) return std::nullopt;
        } else {
            if (!image.insert(to).second) return std::nullopt; // must stay one-one
            theta[from] = to;
        }
    }
    return theta;
}

// element strings; the index arithmetic is inherited from the group
inline std::vector<TBPaw> string_group_view(const GraphicGroup& grp, const std::string& algo = "O4",
                                            const std::string& variant = "plain") {
    std::vector<TBPaw> out;
    for (long long i = 1; i <= grp.modulus; ++i) {
        Labelling el = grp.element(i);
        out.push_back(serialize_o(build_avev(grp.base_graph, el), algo, variant));
    }
    return out;
}

} // namespace topsnut

#endif
