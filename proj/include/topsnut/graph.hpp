#ifndef TOPSNUT_GRAPH_HPP
#define TOPSNUT_GRAPH_HPP

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

#include "util.hpp"

namespace topsnut {

using Vertex = std::string;

// brute-force size caps; keep in sync with the documented limits
inline constexpr int kMaxDividedVertices = 12;
inline constexpr int kMaxIsoVertices = 12;
inline constexpr long long kMaxEDividedStates = 2'000'000;

struct Edge {
    Vertex a, b; // stored orientation: a was written first
    Edge() = default;
    Edge(Vertex u, Vertex v) : a(std::move(u)), b(std::move(v)) {}
    std::pair<Vertex, Vertex> key() const {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    bool same(const Vertex& u, const Vertex& v) const {
        return (a == u && b == v) || (a == v && b == u);
    }
    bool touches(const Vertex& u) const { return a == u || b == u; }
    Vertex other(const Vertex& u) const { return a == u ? b : a; }
    bool operator==(const Edge& o) const { return key() == o.key(); }
    bool operator<(const Edge& o) const { return key() < o.key(); }
};

struct Bipartition {
    std::set<Vertex> x, y;
};

class Graph {
public:
    std::string code;       // short identifier (the corpus key)
    std::string name;       // optional display name
    std::optional<Bipartition> bipartition;
    std::map<Vertex, std::pair<long long, long long>> coords;
    std::optional<std::vector<Edge>> edge_order;
    std::vector<Edge> arcs; // directed extension; empty for plain graphs

    void add_vertex(const Vertex& v) {
        if (v.empty()) throw domain_error("empty vertex id");
        if (adj_.count(v)) throw domain_error("duplicate vertex '" + v + "'");
        adj_[v];
        order_.push_back(v);
    }
    void add_edge(const Vertex& u, const Vertex& v) {
        if (u == v) throw domain_error("self-loop at '" + u + "'");
        if (!adj_.count(u)) throw domain_error("edge uses unknown vertex '" + u + "'");
        if (!adj_.count(v)) throw domain_error("edge uses unknown vertex '" + v + "'");
        if (adj_[u].count(v)) throw domain_error("duplicate edge (" + u + "," + v + ")");
        adj_[u].insert(v);
        adj_[v].insert(u);
        edges_.emplace_back(u, v);
    }
    void remove_edge(const Vertex& u, const Vertex& v) {
        if (!has_edge(u, v)) throw domain_error("no edge (" + u + "," + v + ")");
        adj_[u].erase(v);
        adj_[v].erase(u);
        for (size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].same(u, v)) { edges_.erase(edges_.begin() + i); break; }
    }
    void remove_vertex(const Vertex& v) {
        if (!adj_.count(v)) throw domain_error("no vertex '" + v + "'");
        for (const Vertex& w : std::set<Vertex>(adj_[v])) remove_edge(v, w);
        adj_.erase(v);
        order_.erase(std::find(order_.begin(), order_.end(), v));
    }

    bool has_vertex(const Vertex& v) const { return adj_.count(v) != 0; }
    bool has_edge(const Vertex& u, const Vertex& v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v);
    }
    size_t order() const { return adj_.size(); }
    size_t size() const { return edges_.size(); }
    size_t degree(const Vertex& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw domain_error("no vertex '" + v + "'");
        return it->second.size();
    }
    const std::set<Vertex>& neighbors(const Vertex& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw domain_error("no vertex '" + v + "'");
        return it->second;
    }
    const std::vector<Edge>& edges() const { return edges_; }
    // vertices in insertion order
    const std::vector<Vertex>& vertices() const { return order_; }
    // canonical (lexicographic) vertex order
    std::vector<Vertex> sorted_vertices() const {
        std::vector<Vertex> v(order_);
        std::sort(v.begin(), v.end());
        return v;
    }
    size_t max_degree() const {
        size_t d = 0;
        for (auto& [v, n] : adj_) d = std::max(d, n.size());
        return d;
    }

private:
    std::map<Vertex, std::set<Vertex>> adj_;
    std::vector<Vertex> order_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------- traversal

inline std::vector<std::set<Vertex>> component_sets(const Graph& g) {
    std::set<Vertex> seen;
    std::vector<std::set<Vertex>> comps;
    for (const Vertex& s : g.sorted_vertices()) {
        if (seen.count(s)) continue;
        std::set<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        comp.insert(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (const Vertex& w : g.neighbors(v))
                if (comp.insert(w).second) q.push(w);
        }
        seen.insert(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // order-stable: by smallest vertex id
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return comps;
}

inline Graph induced_subgraph(const Graph& g, const std::set<Vertex>& vs) {
    Graph h;
    h.code = g.code;
    for (const Vertex& v : g.vertices())
        if (vs.count(v)) h.add_vertex(v);
    for (const Edge& e : g.edges())
        if (vs.count(e.a) && vs.count(e.b)) h.add_edge(e.a, e.b);
    for (auto& [v, xy] : g.coords)
        if (vs.count(v)) h.coords[v] = xy;
    if (g.bipartition) {
        Bipartition bp;
        for (const Vertex& v : g.bipartition->x)
            if (vs.count(v)) bp.x.insert(v);
        for (const Vertex& v : g.bipartition->y)
            if (vs.count(v)) bp.y.insert(v);
        if (!bp.x.empty() || !bp.y.empty()) h.bipartition = bp;
    }
    return h;
}

inline std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& cs : component_sets(g)) out.push_back(induced_subgraph(g, cs));
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.order() == 0 || component_sets(g).size() == 1;
}

// 2-colouring; returns sides with the lexicographically-smallest vertex in x
inline std::optional<Bipartition> find_bipartition(const Graph& g) {
    std::map<Vertex, int> col;
    for (const Vertex& s : g.sorted_vertices()) {
        if (col.count(s)) continue;
        col[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (const Vertex& w : g.neighbors(v)) {
                if (!col.count(w)) {
                    col[w] = 1 - col[v];
                    q.push(w);
                } else if (col[w] == col[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (auto& [v, c] : col) (c == 0 ? bp.x : bp.y).insert(v);
    return bp;
}

inline bool is_acyclic(const Graph& g) {
    // a forest has |E| = |V| - (#components)
    return g.size() + component_sets(g).size() == g.order();
}

// ---------------------------------------------------------------- classify

inline bool is_caterpillar(const Graph& g) {
    if (!is_connected(g) || !is_acyclic(g)) return false;
    if (g.order() <= 2) return true;
    // spine = non-leaf vertices; must induce a path
    std::set<Vertex> spine;
    for (const Vertex& v : g.vertices())
        if (g.degree(v) >= 2) spine.insert(v);
    if (spine.empty()) return true; // K_2 / K_1
    Graph s = induced_subgraph(g, spine);
    if (!is_connected(s)) return false;
    int deg1 = 0;
    for (const Vertex& v : s.vertices()) {
        if (s.degree(v) > 2) return false;
        if (s.degree(v) <= 1) ++deg1;
    }
    return s.order() == 1 || deg1 == 2;
}

inline bool is_lobster(const Graph& g) {
    if (!is_connected(g) || !is_acyclic(g)) return false;
    if (g.order() <= 2) return true;
    std::set<Vertex> keep;
    for (const Vertex& v : g.vertices())
        if (g.degree(v) >= 2) keep.insert(v);
    if (keep.empty()) return true;
    return is_caterpillar(induced_subgraph(g, keep));
}

inline std::vector<std::string> classify(const Graph& g) {
    std::vector<std::string> tags;
    bool conn = is_connected(g);
    bool forest = is_acyclic(g);
    if (forest) tags.push_back("forest");
    if (conn && forest) tags.push_back("tree");
    if (is_caterpillar(g)) tags.push_back("caterpillar");
    if (is_lobster(g)) tags.push_back("lobster");
    if (find_bipartition(g)) tags.push_back("bipartite");
    if (conn && g.size() > 0) {
        bool even = true, deg2 = true;
        for (const Vertex& v : g.vertices()) {
            if (g.degree(v) % 2) even = false;
            if (g.degree(v) != 2) deg2 = false;
        }
        if (even) tags.push_back("euler");
        if (deg2) tags.push_back("cycle");
    }
    return tags;
}

// ---------------------------------------------------------------- graph ops

struct GraphOp {
    std::string name;           // half_edge_split, half_edge_coincide, vertex_split,
                                // vertex_coincide, edge_split, edge_coincide,
                                // edge_contract, edge_subdivide
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Vertex> part;   // neighbours kept by the first copy (split ops)
    std::vector<Vertex> part2;  // second endpoint's partition (edge_split)
};

struct GraphOpResult {
    Graph graph;
    // old vertex id -> resulting ids (two for splits, shared for coincides)
    std::map<Vertex, std::vector<Vertex>> vertex_map;
};

namespace detail {

inline Graph copy_plain(const Graph& g) {
    Graph h;
    h.code = g.code;
    h.name = g.name;
    for (const Vertex& v : g.vertices()) h.add_vertex(v);
    for (const Edge& e : g.edges()) h.add_edge(e.a, e.b);
    return h;
}

inline Vertex fresh(const Graph& g, Vertex base, const Vertex& avoid = "") {
    while (g.has_vertex(base) || base == avoid) base += "'";
    return base;
}

// split v's neighbourhood: `first` keeps part, the other copy keeps the rest
inline void split_vertex_into(Graph& h, const Vertex& v, const std::set<Vertex>& part,
                              const Vertex& v1, const Vertex& v2) {
    std::set<Vertex> nb = h.neighbors(v);
    for (const Vertex& w : part)
        if (!nb.count(w))
            throw domain_error("'" + w + "' is not a neighbour of '" + v + "'");
    h.remove_vertex(v);
    h.add_vertex(v1);
    h.add_vertex(v2);
    for (const Vertex& w : nb) h.add_edge(part.count(w) ? v1 : v2, w);
}

} // namespace detail

inline GraphOpResult apply_graph_op(const Graph& g, const GraphOp& op) {
    GraphOpResult res;
    Graph h = detail::copy_plain(g);
    auto& vm = res.vertex_map;
    for (const Vertex& v : g.vertices()) vm[v] = {v};

    auto need_vertices = [&](size_t n) {
        if (op.vertices.size() != n)
            throw domain_error(op.name + ": expected " + std::to_string(n) + " vertex operand(s)");
    };
    auto need_edges = [&](size_t n) {
        if (op.edges.size() != n)
            throw domain_error(op.name + ": expected " + std::to_string(n) + " edge operand(s)");
    };

    if (op.name == "vertex_split") {
        need_vertices(1);
        const Vertex& x = op.vertices[0];
        if (!h.has_vertex(x)) throw domain_error("no vertex '" + x + "'");
        std::set<Vertex> part(op.part.begin(), op.part.end());
        if (part.empty() || part.size() >= h.degree(x))
            throw domain_error("vertex_split: partition must be a proper nonempty subset of N(" + x + ")");
        Vertex x1 = detail::fresh(h, x + "'"), x2 = detail::fresh(h, x + "''", x1);
        detail::split_vertex_into(h, x, part, x1, x2);
        vm[x] = {x1, x2};
    } else if (op.name == "vertex_coincide") {
        need_vertices(2);
        Vertex a = op.vertices[0], b = op.vertices[1];
        if (!h.has_vertex(a) || !h.has_vertex(b)) throw domain_error("vertex_coincide: unknown vertex");
        if (h.has_edge(a, b)) throw domain_error("vertex_coincide: operands are adjacent");
        std::set<Vertex> na = h.neighbors(a), nb = h.neighbors(b);
        for (const Vertex& w : na)
            if (nb.count(w))
                throw domain_error("vertex_coincide: common neighbour '" + w + "' would double an edge");
        h.remove_vertex(b);
        for (const Vertex& w : nb) h.add_edge(a, w);
        vm[a] = {a};
        vm[b] = {a};
    } else if (op.name == "half_edge_split") {
        need_vertices(1);
        need_edges(1);
        Vertex x = op.vertices[0];
        Vertex w = op.edges[0].touches(x) ? op.edges[0].other(x)
                                          : throw domain_error("half_edge_split: edge must touch vertex");
        if (!h.has_edge(x, w)) throw domain_error("half_edge_split: no edge (" + x + "," + w + ")");
        std::set<Vertex> part(op.part.begin(), op.part.end());
        part.erase(w);
        std::set<Vertex> rest = h.neighbors(x);
        rest.erase(w);
        for (const Vertex& p : part) rest.erase(p);
        part.insert(w); // both copies stay joined to w
        Vertex x1 = detail::fresh(h, x + "'"), x2 = detail::fresh(h, x + "''", x1);
        std::set<Vertex> nb = h.neighbors(x);
        h.remove_vertex(x);
        h.add_vertex(x1);
        h.add_vertex(x2);
        for (const Vertex& u : nb) {
            if (u == w) continue;
            h.add_edge(part.count(u) ? x1 : x2, u);
        }
        h.add_edge(x1, w);
        h.add_edge(x2, w);
        vm[x] = {x1, x2};
    } else if (op.name == "half_edge_coincide") {
        need_vertices(2);
        Vertex a = op.vertices[0], b = op.vertices[1];
        if (!h.has_vertex(a) || !h.has_vertex(b)) throw domain_error("half_edge_coincide: unknown vertex");
        std::set<Vertex> na = h.neighbors(a), nb = h.neighbors(b), common;
        for (const Vertex& w : na)
            if (nb.count(w)) common.insert(w);
        if (common.size() != 1)
            throw domain_error("half_edge_coincide: operands must share exactly one neighbour");
        Vertex w = *common.begin();
        h.remove_vertex(b);
        for (const Vertex& u : nb)
            if (u != w) h.add_edge(a, u); // the duplicate a-w edge is dropped
        vm[a] = {a};
        vm[b] = {a};
    } else if (op.name == "edge_split") {
        need_edges(1);
        Vertex x = op.edges[0].a, w = op.edges[0].b;
        if (!h.has_edge(x, w)) throw domain_error("edge_split: no edge (" + x + "," + w + ")");
        std::set<Vertex> px(op.part.begin(), op.part.end());
        std::set<Vertex> pw(op.part2.begin(), op.part2.end());
        px.erase(w);
        pw.erase(x);
        h.remove_edge(x, w);
        Vertex x1 = detail::fresh(h, x + "'"), x2 = detail::fresh(h, x + "''", x1);
        Vertex w1 = detail::fresh(h, w + "'"), w2 = detail::fresh(h, w + "''", w1);
        {
            std::set<Vertex> nb = h.neighbors(x);
            h.remove_vertex(x);
            h.add_vertex(x1);
            h.add_vertex(x2);
            for (const Vertex& u : nb) h.add_edge(px.count(u) ? x1 : x2, u);
        }
        {
            std::set<Vertex> nb = h.neighbors(w);
            h.remove_vertex(w);
            h.add_vertex(w1);
            h.add_vertex(w2);
            for (const Vertex& u : nb) {
                Vertex uu = u;
                h.add_edge(pw.count(uu) ? w1 : w2, uu);
            }
        }
        h.add_edge(x1, w1);
        h.add_edge(x2, w2);
        vm[x] = {x1, x2};
        vm[w] = {w1, w2};
    } else if (op.name == "edge_coincide") {
        need_edges(2);
        Vertex x1 = op.edges[0].a, w1 = op.edges[0].b;
        Vertex x2 = op.edges[1].a, w2 = op.edges[1].b;
        if (!h.has_edge(x1, w1) || !h.has_edge(x2, w2)) throw domain_error("edge_coincide: unknown edge");
        std::set<Vertex> ops = {x1, w1, x2, w2};
        if (ops.size() != 4) throw domain_error("edge_coincide: edges must be disjoint");
        auto merge = [&](const Vertex& keep, const Vertex& drop) {
            if (h.has_edge(keep, drop)) throw domain_error("edge_coincide: operands adjacent");
            std::set<Vertex> nd = h.neighbors(drop);
            h.remove_vertex(drop);
            for (const Vertex& u : nd)
                if (!h.has_edge(keep, u)) h.add_edge(keep, u);
            vm[drop] = {keep};
        };
        merge(x1, x2);
        merge(w1, w2);
    } else if (op.name == "edge_contract") {
        need_edges(1);
        Vertex x = op.edges[0].a, y = op.edges[0].b;
        if (!h.has_edge(x, y)) throw domain_error("edge_contract: no edge (" + x + "," + y + ")");
        std::set<Vertex> ny = h.neighbors(y);
        h.remove_vertex(y);
        for (const Vertex& u : ny)
            if (u != x && !h.has_edge(x, u)) h.add_edge(x, u);
        vm[y] = {x};
    } else if (op.name == "edge_subdivide") {
        need_edges(1);
        Vertex x = op.edges[0].a, y = op.edges[0].b;
        if (!h.has_edge(x, y)) throw domain_error("edge_subdivide: no edge (" + x + "," + y + ")");
        Vertex w = detail::fresh(h, "w_" + x + "_" + y);
        h.remove_edge(x, y);
        h.add_vertex(w);
        h.add_edge(x, w);
        h.add_edge(w, y);
        vm[w] = {w};
    } else {
        throw domain_error("unknown graph op '" + op.name + "'");
    }
    res.graph = std::move(h);
    return res;
}

// ----------------------------------------------------- divided connectivity

namespace detail {

// smallest vertex set whose removal disconnects g (n-1 for complete graphs);
// valid because splitting a vertex set disconnects with an untouched vertex
// in every part exactly when deleting that set disconnects the graph
inline int min_vertex_cut(const Graph& g) {
    int n = static_cast<int>(g.order());
    std::vector<Vertex> vs = g.sorted_vertices();
    for (int k = 0; k < n - 1; ++k) {
        std::vector<int> idx(k);
        std::function<bool(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                std::set<Vertex> keep(vs.begin(), vs.end());
                for (int i : idx) keep.erase(vs[i]);
                Graph h = induced_subgraph(g, keep);
                return h.order() > 0 && !is_connected(h);
            }
            for (int i = start; i < n; ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n - 1;
}

// enumerate e-splits of the chosen edges, checking the untouched-vertex rule
inline bool e_divided_disconnects(const Graph& g, const std::vector<Edge>& chosen,
                                  long long& budget) {
    std::set<Vertex> touched;
    for (const Edge& e : chosen) {
        touched.insert(e.a);
        touched.insert(e.b);
    }
    std::function<bool(Graph, size_t)> rec = [&](Graph cur, size_t i) -> bool {
        if (--budget < 0) throw domain_error("e-divided search exceeded state budget");
        if (i == chosen.size()) {
            auto comps = component_sets(cur);
            if (comps.size() < 2) return false;
            for (const auto& c : comps) {
                bool ok = false;
                for (const Vertex& v : c) {
                    // split offspring carry primes appended to a touched base id
                    Vertex base = v;
                    while (!base.empty() && base.back() == '\'') base.pop_back();
                    if (!touched.count(base) && !touched.count(v)) { ok = true; break; }
                }
                if (!ok) return false;
            }
            return true;
        }
        // locate the surviving copy of edge i (endpoints may have been split)
        const Edge& e = chosen[i];
        std::vector<Edge> cands;
        for (const Edge& f : cur.edges()) {
            Vertex ba = f.a, bb = f.b;
            while (!ba.empty() && ba.back() == '\'') ba.pop_back();
            while (!bb.empty() && bb.back() == '\'') bb.pop_back();
            if ((ba == e.a && bb == e.b) || (ba == e.b && bb == e.a)) cands.push_back(f);
        }
        for (const Edge& f : cands) {
            std::set<Vertex> nx = cur.neighbors(f.a), nw = cur.neighbors(f.b);
            nx.erase(f.b);
            nw.erase(f.a);
            std::vector<Vertex> vx(nx.begin(), nx.end()), vw(nw.begin(), nw.end());
            for (unsigned long mx = 0; mx < (1ul << vx.size()); ++mx) {
                for (unsigned long mw = 0; mw < (1ul << vw.size()); ++mw) {
                    GraphOp op;
                    op.name = "edge_split";
                    op.edges = {f};
                    for (size_t t = 0; t < vx.size(); ++t)
                        if (mx >> t & 1) op.part.push_back(vx[t]);
                    for (size_t t = 0; t < vw.size(); ++t)
                        if (mw >> t & 1) op.part2.push_back(vw[t]);
                    if (rec(apply_graph_op(cur, op).graph, i + 1)) return true;
                }
            }
        }
        return false;
    };
    return rec(copy_plain(g), 0);
}

} // namespace detail

inline int divided_connectivity(const Graph& g, const std::string& mode) {
    if (g.order() > kMaxDividedVertices)
        throw domain_error("divided_connectivity: graph larger than " +
                           std::to_string(kMaxDividedVertices) + " vertices");
    if (!is_connected(g)) throw domain_error("divided_connectivity: graph is disconnected");
    if (mode == "v") return detail::min_vertex_cut(g);
    if (mode != "e") throw domain_error("divided_connectivity: mode must be 'v' or 'e'");
    int m = static_cast<int>(g.size());
    const std::vector<Edge>& es = g.edges();
    long long budget = kMaxEDividedStates;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        std::function<bool(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                std::vector<Edge> chosen;
                std::set<Vertex> touched;
                for (int i : idx) {
                    chosen.push_back(es[i]);
                    touched.insert(es[i].a);
                    touched.insert(es[i].b);
                }
                // each of the >=2 parts needs its own untouched vertex
                if (touched.size() + 2 > g.order()) return false;
                return detail::e_divided_disconnects(g, chosen, budget);
            }
            for (int i = start; i < m; ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    throw domain_error("divided_connectivity: no e-split disconnects the graph");
}

// ----------------------------------------------------- spanning tree count

inline mpz_class spanning_tree_count(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.order() == 1) return 1;
    if (!is_connected(g)) return 0;
    std::vector<Vertex> vs = g.sorted_vertices();
    size_t n = vs.size() - 1; // drop the last row/column of the Laplacian
    std::map<Vertex, size_t> id;
    for (size_t i = 0; i < vs.size(); ++i) id[vs[i]] = i;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) a[i][i] = static_cast<long>(g.degree(vs[i]));
    for (const Edge& e : g.edges()) {
        size_t i = id[e.a], j = id[e.b];
        if (i < n && j < n) {
            a[i][j] -= 1;
            a[j][i] -= 1;
        }
    }
    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1] * sign;
    return det < 0 ? mpz_class(-det) : det;
}

// ---------------------------------------------------------------- corpus IO

namespace detail {

inline std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& body,
                                                                    const std::string& ctx,
                                                                    const std::string& arrow = ",") {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& item : split_nested(body, ',')) {
        if (item.size() < 2 || item.front() != '(' || item.back() != ')')
            throw parse_error(ctx + ": expected (a" + arrow + "b), got '" + item + "'");
        std::string inner = item.substr(1, item.size() - 2);
        std::vector<std::string> parts;
        if (arrow == ",") {
            parts = split(inner, ',');
        } else {
            size_t p = inner.find(arrow);
            if (p == std::string::npos) throw parse_error(ctx + ": missing '" + arrow + "' in '" + item + "'");
            parts = {trim(inner.substr(0, p)), trim(inner.substr(p + arrow.size()))};
        }
        if (parts.size() != 2) throw parse_error(ctx + ": bad pair '" + item + "'");
        out.emplace_back(parts[0], parts[1]);
    }
    return out;
}

} // namespace detail

// parses the body between the braces of one `graph <code> [name] { ... }`
inline Graph parse_graph_body(const std::string& code, const std::string& name,
                              const std::string& body) {
    Graph g;
    g.code = code;
    g.name = name;
    bool saw_vertices = false;
    try {
    for (const std::string& stmt : split_nested(body, ';')) {
        size_t colon = stmt.find(':');
        if (colon == std::string::npos) throw parse_error("graph " + code + ": missing ':' in '" + stmt + "'");
        std::string key = trim(stmt.substr(0, colon));
        std::string val = trim(stmt.substr(colon + 1));
        if (key == "vertices") {
            for (const std::string& v : split(val, ',')) g.add_vertex(v);
            saw_vertices = true;
        } else if (key == "edges") {
            for (auto& [a, b] : detail::parse_pairs(val, "graph " + code + " edges")) g.add_edge(a, b);
        } else if (key == "arcs") {
            for (auto& [a, b] : detail::parse_pairs(val, "graph " + code + " arcs", "->")) {
                if (!g.has_edge(a, b)) g.add_edge(a, b);
                g.arcs.emplace_back(a, b);
            }
        } else if (key == "bipartition") {
            std::vector<std::string> sides = split_nested(val, '|');
            if (sides.size() != 2) throw parse_error("graph " + code + ": bipartition needs two sides");
            Bipartition bp;
            for (int s = 0; s < 2; ++s) {
                std::string side = trim(sides[s]);
                if (side.size() < 2 || side.front() != '{' || side.back() != '}')
                    throw parse_error("graph " + code + ": bipartition side must be {..}");
                for (const std::string& v : split(side.substr(1, side.size() - 2), ',')) {
                    if (!g.has_vertex(v)) throw parse_error("graph " + code + ": bipartition vertex '" + v + "' unknown");
                    (s == 0 ? bp.x : bp.y).insert(v);
                }
            }
            for (const Edge& e : g.edges()) {
                bool ax = bp.x.count(e.a), bx = bp.x.count(e.b);
                if (ax == bx) throw parse_error("graph " + code + ": edge (" + e.a + "," + e.b + ") not across the bipartition");
            }
            g.bipartition = bp;
        } else if (key == "coords") {
            // v:(x,y), v:(x,y), ...
            for (const std::string& item : split_nested(val, ',')) {
                size_t c2 = item.find(':');
                if (c2 == std::string::npos) throw parse_error("graph " + code + ": coords item '" + item + "'");
                std::string v = trim(item.substr(0, c2));
                std::string xy = trim(item.substr(c2 + 1));
                if (!g.has_vertex(v)) throw parse_error("graph " + code + ": coords vertex '" + v + "' unknown");
                if (xy.size() < 2 || xy.front() != '(' || xy.back() != ')')
                    throw parse_error("graph " + code + ": coords value '" + xy + "'");
                std::vector<std::string> nums = split(xy.substr(1, xy.size() - 2), ',');
                if (nums.size() != 2) throw parse_error("graph " + code + ": coords value '" + xy + "'");
                g.coords[v] = {to_ll(nums[0], "coords"), to_ll(nums[1], "coords")};
            }
        } else if (key == "edge_order") {
            std::vector<Edge> eo;
            for (auto& [a, b] : detail::parse_pairs(val, "graph " + code + " edge_order")) {
                if (!g.has_edge(a, b)) throw parse_error("graph " + code + ": edge_order edge (" + a + "," + b + ") unknown");
                eo.emplace_back(a, b);
            }
            if (eo.size() != g.size()) throw parse_error("graph " + code + ": edge_order must list every edge once");
            std::set<Edge> dedup(eo.begin(), eo.end());
            if (dedup.size() != eo.size()) throw parse_error("graph " + code + ": edge_order repeats an edge");
            g.edge_order = eo;
        } else {
            throw parse_error("graph " + code + ": unknown section '" + key + "'");
        }
    }
    } catch (const domain_error& e) {
        throw parse_error("graph " + code + ": " + e.what());
    }
    if (!saw_vertices) throw parse_error("graph " + code + ": missing vertices section");
    return g;
}

inline std::vector<Graph> load_corpus(std::istream& in) {
    // strip comments, then scan `graph <code> [name] { ... }` records
    std::ostringstream all;
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        all << line << '\n';
    }
    std::string text = all.str();
    std::vector<Graph> out;
    std::set<std::string> codes;
    size_t pos = 0;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        size_t brace = text.find('{', pos);
        if (brace == std::string::npos) throw parse_error("corpus: missing '{'");
        std::vector<std::string> head;
        {
            std::istringstream hs(text.substr(pos, brace - pos));
            std::string tok;
            while (hs >> tok) head.push_back(tok);
        }
        if (head.size() < 2 || head[0] != "graph")
            throw parse_error("corpus: expected 'graph <code> [name] {', got '" + text.substr(pos, brace - pos) + "'");
        std::string code = head[1];
        std::string gname;
        for (size_t i = 2; i < head.size(); ++i) gname += (i > 2 ? " " : "") + head[i];
        if (!gname.empty() && gname.front() == '"' && gname.back() == '"' && gname.size() >= 2)
            gname = gname.substr(1, gname.size() - 2);
        int depth = 0;
        size_t end = brace;
        for (; end < text.size(); ++end) {
            if (text[end] == '{') ++depth;
            if (text[end] == '}' && --depth == 0) break;
        }
        if (depth != 0) throw parse_error("corpus: unbalanced braces in graph " + code);
        if (!codes.insert(code).second) throw parse_error("corpus: duplicate code '" + code + "'");
        out.push_back(parse_graph_body(code, gname, text.substr(brace + 1, end - brace - 1)));
        pos = end + 1;
    }
    return out;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << (g.code.empty() ? "g" : g.code);
    if (!g.name.empty()) os << " \"" << g.name << "\"";
    os << " {\n  vertices: ";
    bool first = true;
    for (const Vertex& v : g.vertices()) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    os << ";\n";
    if (!g.edges().empty()) {
        os << "  edges: ";
        first = true;
        for (const Edge& e : g.edges()) {
            os << (first ? "" : ", ") << "(" << e.a << "," << e.b << ")";
            first = false;
        }
        os << ";\n";
    }
    if (!g.arcs.empty()) {
        os << "  arcs: ";
        first = true;
        for (const Edge& e : g.arcs) {
            os << (first ? "" : ", ") << "(" << e.a << "->" << e.b << ")";
            first = false;
        }
        os << ";\n";
    }
    if (g.bipartition) {
        os << "  bipartition: {";
        first = true;
        for (const Vertex& v : g.bipartition->x) {
            os << (first ? "" : ",") << v;
            first = false;
        }
        os << "} | {";
        first = true;
        for (const Vertex& v : g.bipartition->y) {
            os << (first ? "" : ",") << v;
            first = false;
        }
        os << "};\n";
    }
    if (!g.coords.empty()) {
        os << "  coords: ";
        first = true;
        for (auto& [v, xy] : g.coords) {
            os << (first ? "" : ", ") << v << ":(" << xy.first << "," << xy.second << ")";
            first = false;
        }
        os << ";\n";
    }
    if (g.edge_order) {
        os << "  edge_order: ";
        first = true;
        for (const Edge& e : *g.edge_order) {
            os << (first ? "" : ", ") << "(" << e.a << "," << e.b << ")";
            first = false;
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// disjoint union; vertex ids are prefixed with "<code>." when they collide
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g;
    g.code = a.code + "+" + b.code;
    bool clash = false;
    for (const Vertex& v : b.vertices())
        if (a.has_vertex(v)) clash = true;
    std::string pa = a.code.empty() ? "g1" : a.code;
    std::string pb = b.code.empty() ? "g2" : b.code;
    if (pa == pb) {
        pa += ".1";
        pb += ".2";
    }
    auto nameof = [&](const Graph& src, const Vertex& v) {
        return clash ? (&src == &a ? pa : pb) + "." + v : v;
    };
    for (const Vertex& v : a.vertices()) g.add_vertex(nameof(a, v));
    for (const Vertex& v : b.vertices()) g.add_vertex(nameof(b, v));
    for (const Edge& e : a.edges()) g.add_edge(nameof(a, e.a), nameof(a, e.b));
    for (const Edge& e : b.edges()) g.add_edge(nameof(b, e.a), nameof(b, e.b));
    if (a.edge_order || b.edge_order) {
        std::vector<Edge> eo;
        for (const Edge& e : a.edge_order ? *a.edge_order : a.edges())
            eo.emplace_back(nameof(a, e.a), nameof(a, e.b));
        for (const Edge& e : b.edge_order ? *b.edge_order : b.edges())
            eo.emplace_back(nameof(b, e.a), nameof(b, e.b));
        g.edge_order = eo;
    }
    if (a.bipartition && b.bipartition) {
        Bipartition bp;
        for (const Vertex& v : a.bipartition->x) bp.x.insert(nameof(a, v));
        for (const Vertex& v : b.bipartition->x) bp.x.insert(nameof(b, v));
        for (const Vertex& v : a.bipartition->y) bp.y.insert(nameof(a, v));
        for (const Vertex& v : b.bipartition->y) bp.y.insert(nameof(b, v));
        g.bipartition = bp;
    }
    return g;
}

// ------------------------------------------------------------- isomorphism

namespace detail {

inline std::string ahu_encode(const Graph& g, const Vertex& root) {
    std::function<std::string(const Vertex&, const Vertex&)> rec =
        [&](const Vertex& v, const Vertex& parent) -> std::string {
        std::vector<std::string> kids;
        for (const Vertex& w : g.neighbors(v))
            if (w != parent) kids.push_back(rec(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        return s + ")";
    };
    return rec(root, "");
}

inline std::vector<Vertex> tree_centers(const Graph& g) {
    std::map<Vertex, int> deg;
    std::set<Vertex> alive;
    std::queue<Vertex> leaves;
    for (const Vertex& v : g.vertices()) {
        deg[v] = static_cast<int>(g.degree(v));
        alive.insert(v);
        if (deg[v] <= 1) leaves.push(v);
    }
    size_t remaining = g.order();
    while (remaining > 2) {
        size_t cnt = leaves.size();
        for (size_t i = 0; i < cnt; ++i) {
            Vertex v = leaves.front();
            leaves.pop();
            if (!alive.count(v)) continue;
            alive.erase(v);
            --remaining;
            for (const Vertex& w : g.neighbors(v))
                if (alive.count(w) && --deg[w] == 1) leaves.push(w);
        }
    }
    return {alive.begin(), alive.end()};
}

} // namespace detail

// canonical string for forests of any size; usable as an isomorphism key
inline std::string forest_canonical(const Graph& g) {
    if (!is_acyclic(g)) throw domain_error("forest_canonical: graph has a cycle");
    std::vector<std::string> codes;
    for (const Graph& c : components(g)) {
        std::string best;
        for (const Vertex& r : detail::tree_centers(c)) {
            std::string e = detail::ahu_encode(c, r);
            if (best.empty() || e < best) best = e;
        }
        codes.push_back(best);
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (auto& c : codes) out += c + ";";
    return out;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    {
        std::multiset<size_t> da, db;
        for (const Vertex& v : a.vertices()) da.insert(a.degree(v));
        for (const Vertex& v : b.vertices()) db.insert(b.degree(v));
        if (da != db) return false;
    }
    if (is_acyclic(a) && is_acyclic(b)) return forest_canonical(a) == forest_canonical(b);
    if (a.order() > kMaxIsoVertices)
        throw domain_error("is_isomorphic: non-forest graphs limited to " +
                           std::to_string(kMaxIsoVertices) + " vertices");
    std::vector<Vertex> va = a.sorted_vertices(), vb = b.sorted_vertices();
    std::map<Vertex, Vertex> fwd;
    std::set<Vertex> used;
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == va.size()) return true;
        const Vertex& x = va[i];
        for (const Vertex& y : vb) {
            if (used.count(y) || a.degree(x) != b.degree(y)) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                if (a.has_edge(x, va[j]) != b.has_edge(y, fwd[va[j]])) ok = false;
            if (!ok) continue;
            fwd[x] = y;
            used.insert(y);
            if (rec(i + 1)) return true;
            fwd.erase(x);
            used.erase(y);
        }
        return false;
    };
    return rec(0);
}

// Hierholzer; requires a connected graph with all degrees even.
// Returns the circuit as a vertex sequence v0, v1, ..., v_m (= v0).
inline std::vector<Vertex> euler_circuit(const Graph& g) {
    if (!is_connected(g) || g.size() == 0) throw domain_error("euler_circuit: need a connected graph with edges");
    for (const Vertex& v : g.vertices())
        if (g.degree(v) % 2) throw domain_error("euler_circuit: odd degree at '" + v + "'");
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Vertex& v : g.vertices())
        adj[v] = std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::set<std::pair<Vertex, Vertex>> usedE;
    std::vector<Vertex> stack = {g.sorted_vertices().front()}, circuit;
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto& nb = adj[v];
        while (!nb.empty() && usedE.count(Edge(v, nb.back()).key())) nb.pop_back();
        if (nb.empty()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            Vertex w = nb.back();
            usedE.insert(Edge(v, w).key());
            stack.push_back(w);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

} // namespace topsnut

#endif
