#ifndef TOPSNUT_LABELLING_OPS_HPP
#define TOPSNUT_LABELLING_OPS_HPP

#include "labelling.hpp"

namespace topsnut {

namespace detail {

// low/high classes of a bipartite graph under a set-ordered labelling
inline std::pair<std::set<Vertex>, std::set<Vertex>> sogl_sides(const Graph& g,
                                                                const Labelling& lab) {
    std::optional<Bipartition> store;
    const Bipartition* bp = effective_bipartition(g, store);
    if (!bp) throw domain_error("graph is not bipartite");
    auto below = [&](const std::set<Vertex>& lo, const std::set<Vertex>& hi) {
        long long mx = std::numeric_limits<long long>::min();
        long long mn = std::numeric_limits<long long>::max();
        for (const Vertex& v : lo) mx = std::max(mx, lab.v(v));
        for (const Vertex& v : hi) mn = std::min(mn, lab.v(v));
        return mx < mn;
    };
    if (below(bp->x, bp->y)) return {bp->x, bp->y};
    if (below(bp->y, bp->x)) return {bp->y, bp->x};
    throw domain_error("labelling is not set-ordered");
}

} // namespace detail

// ------------------------------------------------ forest offset construction

// glue per-component set-ordered graceful labellings of a forest into one
// flawed set-ordered graceful labelling of the whole forest
inline Labelling construct_flawed_sogl_forest(const Graph& g,
                                              const std::vector<Labelling>& comp_labs) {
    if (!is_acyclic(g)) throw domain_error("construct_flawed_sogl_forest: graph is not a forest");
    auto comps = components(g);
    size_t m = comps.size();
    if (m < 2) throw domain_error("construct_flawed_sogl_forest: need at least two components");
    if (comp_labs.size() != m)
        throw domain_error("construct_flawed_sogl_forest: one labelling per component required");
    std::vector<std::set<Vertex>> xs(m), ys(m);
    std::vector<long long> s(m), t(m);
    for (size_t i = 0; i < m; ++i) {
        Labelling li = comp_labs[i];
        li.kind = "set_ordered_graceful";
        Verdict v = verify(comps[i], li);
        if (!v.pass)
            throw domain_error("construct_flawed_sogl_forest: component " + std::to_string(i) +
                               " labelling is not set-ordered graceful");
        std::tie(xs[i], ys[i]) = detail::sogl_sides(comps[i], li);
        s[i] = static_cast<long long>(xs[i].size());
        t[i] = static_cast<long long>(ys[i].size());
    }
    long long M = 0;
    for (size_t i = 0; i < m; ++i) M += s[i];
    Labelling out;
    out.kind = "flawed_set_ordered_graceful";
    out.flaw_budget = static_cast<long long>(m - 1);
    long long xoff = 0;
    long long tsuffix = 0; // sum of t over later components
    std::vector<long long> ysuf(m, 0);
    for (size_t i = m; i-- > 0;) {
        ysuf[i] = tsuffix;
        tsuffix += t[i];
    }
    for (size_t i = 0; i < m; ++i) {
        for (const Vertex& v : xs[i]) out.vertex_values[v] = comp_labs[i].v(v) + xoff;
        for (const Vertex& v : ys[i]) out.vertex_values[v] = comp_labs[i].v(v) + M + ysuf[i] - s[i];
        xoff += s[i];
    }
    Verdict v = verify(g, out);
    if (!v.pass) throw domain_error("construct_flawed_sogl_forest: result fails verification:\n" + v.text());
    return out;
}

// ------------------------------------------------- caterpillar constructions

namespace detail {

// spine-ordered traversal: each spine vertex followed by its leaves
inline std::vector<Vertex> caterpillar_order(const Graph& g) {
    if (!is_connected(g) || !is_caterpillar(g))
        throw domain_error("caterpillar operation on a non-caterpillar component");
    std::vector<Vertex> order;
    std::set<Vertex> spine;
    for (const Vertex& v : g.vertices())
        if (g.degree(v) >= 2) spine.insert(v);
    if (spine.empty()) { // K1 or K2
        for (const Vertex& v : g.sorted_vertices()) order.push_back(v);
        return order;
    }
    Graph sp = induced_subgraph(g, spine);
    Vertex start;
    for (const Vertex& v : sp.sorted_vertices())
        if (sp.degree(v) <= 1) { start = v; break; }
    Vertex cur = start, prev = "";
    while (true) {
        order.push_back(cur);
        for (const Vertex& w : g.neighbors(cur))
            if (g.degree(w) == 1) order.push_back(w);
        Vertex next = "";
        for (const Vertex& w : sp.neighbors(cur))
            if (w != prev) { next = w; break; }
        if (next.empty()) break;
        prev = cur;
        cur = next;
    }
    if (order.size() != g.order())
        throw domain_error("caterpillar traversal failed");
    return order;
}

} // namespace detail

// the classic two-counter sweep along the spine order
inline Labelling caterpillar_sogl(const Graph& g) {
    long long q = static_cast<long long>(g.size());
    Labelling out;
    out.kind = "set_ordered_graceful";
    if (g.order() == 1) {
        out.vertex_values[*g.vertices().begin()] = 0;
        return out;
    }
    std::vector<Vertex> order = detail::caterpillar_order(g);
    auto bp = find_bipartition(g);
    if (!bp) throw domain_error("caterpillar_sogl: graph is not bipartite");
    const std::set<Vertex>& xside = bp->x.count(order.front()) ? bp->x : bp->y;
    long long low = 0, high = q;
    for (const Vertex& v : order) {
        if (xside.count(v)) out.vertex_values[v] = low++;
        else out.vertex_values[v] = high--;
    }
    Verdict v = verify(g, out);
    if (!v.pass) throw domain_error("caterpillar_sogl: sweep failed verification:\n" + v.text());
    return out;
}

// chain the caterpillar components spine-end to spine-end, label the chained
// caterpillar, and restrict: a flawed set-ordered graceful labelling of g
inline Labelling construct_caterpillar_chain(const Graph& g, std::vector<size_t> order = {}) {
    auto comps = components(g);
    size_t m = comps.size();
    if (m < 2) throw domain_error("construct_caterpillar_chain: need at least two components");
    if (order.empty())
        for (size_t i = 0; i < m; ++i) order.push_back(i);
    if (order.size() != m)
        throw domain_error("construct_caterpillar_chain: order must permute the components");
    {
        std::set<size_t> seen(order.begin(), order.end());
        if (seen.size() != m || *seen.rbegin() != m - 1)
            throw domain_error("construct_caterpillar_chain: order must permute the components");
    }
    Graph chained = g;
    for (size_t i = 0; i + 1 < m; ++i) {
        auto tail_ord = detail::caterpillar_order(comps[order[i]]);
        auto head_ord = detail::caterpillar_order(comps[order[i + 1]]);
        chained.add_edge(tail_ord.back(), head_ord.front());
    }
    Labelling lab = caterpillar_sogl(chained);
    lab.kind = "flawed_set_ordered_graceful";
    lab.flaw_budget = static_cast<long long>(m - 1);
    Verdict v = verify(g, lab);
    if (!v.pass)
        throw domain_error("construct_caterpillar_chain: result fails verification:\n" + v.text());
    return lab;
}

// -------------------------------------------------------------- transform

// derive other labellings from a set-ordered graceful seed
inline Labelling transform(const Graph& g, const Labelling& src, const std::string& target,
                           std::optional<std::pair<long long, long long>> params = std::nullopt) {
    {
        Labelling chk = src;
        chk.kind = "set_ordered_graceful";
        Verdict v = verify(g, chk);
        if (!v.pass) throw domain_error("transform: source is not set-ordered graceful:\n" + v.text());
    }
    auto [X, Y] = detail::sogl_sides(g, src);
    long long s = static_cast<long long>(X.size());
    long long p = static_cast<long long>(g.order());
    long long q = static_cast<long long>(g.size());
    long long k = params ? params->first : 1;
    long long d = params ? params->second : 1;
    auto f = [&](const Vertex& v) { return src.v(v); };
    auto ell = [&](const Edge& e) {
        long long a = f(e.a), b = f(e.b);
        return a > b ? a - b : b - a;
    };
    Labelling out;
    out.kind = target;
    if (target == "odd_graceful" || target == "set_ordered_odd_graceful") {
        for (const Vertex& v : X) out.vertex_values[v] = 2 * f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = 2 * f(v) - 1;
    } else if (target == "felicitous" || target == "super_felicitous" ||
               target == "set_ordered_felicitous") {
        for (const Vertex& v : X) out.vertex_values[v] = f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = s + q - f(v);
    } else if (target == "kd_graceful") {
        out.k = k;
        out.d = d;
        for (const Vertex& v : X) out.vertex_values[v] = d * f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = d * f(v) + k - d;
    } else if (target == "edge_magic_total") {
        for (const Vertex& v : X) out.vertex_values[v] = f(v) + 1;
        for (const Vertex& v : Y) out.vertex_values[v] = p + s - f(v);
        for (const Edge& e : g.edges()) out.edge_values[e] = p + ell(e);
    } else if (target == "kd_edge_antimagic_total") {
        out.k = 2 * p + s - q + 2;
        out.d = 2;
        for (const Vertex& v : X) out.vertex_values[v] = f(v) + 1;
        for (const Vertex& v : Y) out.vertex_values[v] = p + s - f(v);
        for (const Edge& e : g.edges()) out.edge_values[e] = p + q + 1 - ell(e);
    } else if (target == "odd_elegant") {
        for (const Vertex& v : X) out.vertex_values[v] = 2 * f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = 2 * (s + q - f(v)) - 1;
    } else if (target == "kd_arithmetic") {
        long long keff = k;
        // when d | k and k <= (s-1)d the two classes would collide; lift k
        if (k % d == 0 && k <= (s - 1) * d) keff = s * d + (k % d);
        out.k = keff;
        out.d = d;
        for (const Vertex& v : X) out.vertex_values[v] = (s - 1) * d - d * f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = d * f(v) + keff - s * d;
    } else if (target == "harmonious") {
        for (const Vertex& v : X) out.vertex_values[v] = f(v);
        for (const Vertex& v : Y) out.vertex_values[v] = detail::pos_mod(s + q - f(v), q);
    } else if (target == "odd_even_separable_emt") {
        for (const Vertex& v : g.vertices()) out.vertex_values[v] = 2 * f(v) + 1;
        for (const Edge& e : g.edges()) out.edge_values[e] = 2 * ell(e);
    } else if (target == "edge_magic_total_graceful") {
        for (const Vertex& v : g.vertices()) out.vertex_values[v] = f(v) + 1;
        for (const Edge& e : g.edges()) out.edge_values[e] = 2 * q + 2 - ell(e);
    } else {
        throw domain_error("transform: unsupported target '" + target + "'");
    }
    Verdict v = verify(g, out);
    if (!v.pass)
        throw domain_error("transform: derived " + target + " labelling fails verification:\n" +
                           v.text());
    return out;
}

// ------------------------------------------------------------ 0-rotatable

struct ZeroRotatable {
    bool rotatable = true;
    std::map<Vertex, bool> per_vertex;
};

inline ZeroRotatable zero_rotatable_check(const Graph& g, const std::string& kind,
                                          long long budget = kDefaultSearchBudget) {
    ZeroRotatable out;
    for (const Vertex& v : g.sorted_vertices()) {
        SearchResult r = search_forced(g, kind, {{v, 0}}, budget);
        if (r.status == "budget_exceeded")
            throw domain_error("zero_rotatable_check: search budget exceeded");
        out.per_vertex[v] = r.status == "found";
        if (!out.per_vertex[v]) out.rotatable = false;
    }
    return out;
}

// --------------------------------------------------------- symmetric trees

struct SymmetricTree {
    Graph graph;
    std::map<Vertex, Vertex> mirror;
};

// edge-symmetric double: a primed copy joined to the original at the anchor
inline SymmetricTree symmetric_tree(const Graph& t, const Vertex& anchor) {
    if (!is_connected(t) || !is_acyclic(t)) throw domain_error("symmetric_tree: not a tree");
    if (!t.has_vertex(anchor)) throw domain_error("symmetric_tree: unknown anchor");
    SymmetricTree out;
    out.graph = t;
    for (const Vertex& v : t.vertices()) {
        Vertex w = v + "'";
        if (t.has_vertex(w)) throw domain_error("symmetric_tree: vertex name clash on '" + w + "'");
        out.mirror[v] = w;
        out.graph.add_vertex(w);
    }
    for (const Edge& e : t.edges()) out.graph.add_edge(out.mirror[e.a], out.mirror[e.b]);
    out.graph.add_edge(anchor, out.mirror[anchor]);
    return out;
}

// lift a graceful labelling with f(anchor)=0 to a set-ordered graceful
// labelling of the symmetric double
inline Labelling symmetric_tree_labelling(const Graph& t, const Labelling& f, const Vertex& anchor,
                                          const SymmetricTree& st) {
    {
        Labelling chk = f;
        chk.kind = "graceful";
        Verdict v = verify(t, chk);
        if (!v.pass) throw domain_error("symmetric_tree_labelling: seed is not graceful");
        if (f.v(anchor) != 0) throw domain_error("symmetric_tree_labelling: anchor must carry 0");
    }
    auto bp = find_bipartition(t);
    if (!bp) throw domain_error("symmetric_tree_labelling: not bipartite");
    const std::set<Vertex>& X = bp->x.count(anchor) ? bp->x : bp->y;
    const std::set<Vertex>& Y = bp->x.count(anchor) ? bp->y : bp->x;
    long long p = static_cast<long long>(t.order());
    Labelling out;
    out.kind = "set_ordered_graceful";
    for (const Vertex& v : X) {
        out.vertex_values[v] = f.v(v);
        out.vertex_values[st.mirror.at(v)] = f.v(v) + p;
    }
    for (const Vertex& v : Y) {
        out.vertex_values[st.mirror.at(v)] = f.v(v);
        out.vertex_values[v] = f.v(v) + p;
    }
    Verdict v = verify(st.graph, out);
    if (!v.pass)
        throw domain_error("symmetric_tree_labelling: lift fails verification:\n" + v.text());
    return out;
}

// ----------------------------------------------------------- extremum sums

struct ExtremumResult {
    long long value = 0;
    Labelling labelling;
};

inline ExtremumResult extremum_sum(const Graph& g, const std::string& functional,
                                   const std::string& mode) {
    if (mode != "max" && mode != "min") throw domain_error("extremum_sum: mode must be max or min");
    long long p = static_cast<long long>(g.order());
    long long q = static_cast<long long>(g.size());
    bool total = functional == "ve_sum_difference" || functional == "ve_difference" ||
                 functional == "k_edge_average";
    bool vertexfn = functional == "difference_sum" || functional == "felicitous_sum";
    if (!total && !vertexfn) throw domain_error("extremum_sum: unknown functional '" + functional + "'");
    if (vertexfn && p > 10) throw domain_error("extremum_sum: graph too large");
    if (total && p + q > 10) throw domain_error("extremum_sum: graph too large");

    std::vector<Vertex> vs = g.sorted_vertices();
    std::vector<Edge> es = g.edges();
    bool maximize = mode == "max";
    std::optional<long long> best;
    Labelling bestlab, cur;
    cur.kind = functional;
    auto consider = [&](long long val) {
        if (!best || (maximize ? val > *best : val < *best)) {
            best = val;
            bestlab = cur;
        }
    };
    if (vertexfn) {
        std::set<long long> used;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == vs.size()) {
                long long sum = 0;
                for (const Edge& e : es) {
                    long long a = cur.vertex_values[e.a], b = cur.vertex_values[e.b];
                    if (functional == "difference_sum") sum += std::llabs(a - b);
                    else sum += detail::pos_mod(a + b, q + 1);
                }
                consider(sum);
                return;
            }
            for (long long v = 0; v <= q; ++v) {
                if (used.count(v)) continue;
                used.insert(v);
                cur.vertex_values[vs[i]] = v;
                rec(i + 1);
                used.erase(v);
            }
        };
        rec(0);
    } else {
        size_t n = vs.size() + es.size();
        std::set<long long> used;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == n) {
                long long sum = 0;
                for (const Edge& e : es) {
                    long long a = cur.vertex_values[e.a], b = cur.vertex_values[e.b];
                    long long w = cur.edge_values[e];
                    if (functional == "ve_sum_difference") sum += w + std::llabs(a - b);
                    else if (functional == "ve_difference") sum += std::llabs(a + b - w);
                    else sum += a + w + b;
                }
                if (functional == "k_edge_average") {
                    if (q == 0 || sum % q) return;
                    consider(sum / q);
                } else {
                    consider(sum);
                }
                return;
            }
            for (long long v = 1; v <= p + q; ++v) {
                if (used.count(v)) continue;
                used.insert(v);
                if (i < vs.size()) cur.vertex_values[vs[i]] = v;
                else cur.edge_values[es[i - vs.size()]] = v;
                rec(i + 1);
                used.erase(v);
            }
        };
        rec(0);
    }
    if (!best) throw domain_error("extremum_sum: no admissible labelling");
    return {*best, bestlab};
}

// ------------------------------------------------------------ paired kinds

inline Verdict verify_pair(const Graph& g, const Labelling& a, const Labelling& b,
                           const std::string& pair_kind, const Graph* h = nullptr) {
    Verdict vd;
    auto adiff = [](const Labelling& L, const Edge& e) { return std::llabs(L.v(e.a) - L.v(e.b)); };
    if (pair_kind == "image") {
        for (const Labelling* L : {&a, &b}) {
            std::set<long long> vals;
            for (const Vertex& v : g.vertices()) vals.insert(L->v(v));
            if (vals.size() != g.order()) vd.fail("vertex values are not distinct");
        }
        std::optional<long long> k;
        for (const Edge& e : g.edges()) {
            long long s = adiff(a, e) + adiff(b, e);
            if (!k) k = s;
            else if (*k != s) vd.fail("edge value sums are not constant");
        }
        if (k) vd.constants["pair_constant"] = *k;
        return vd;
    }
    if (pair_kind == "kd_harmonious_image") {
        long long q = static_cast<long long>(g.size());
        for (const Labelling* L : {&a, &b}) {
            Labelling chk = *L;
            chk.kind = "kd_harmonious";
            Verdict v = verify(g, chk);
            if (!v.pass) vd.fail("component labelling is not (k,d)-harmonious");
        }
        if (a.k != b.k || a.d != b.d) vd.fail("pair uses mismatched (k,d)");
        long long want = 2 * a.k + (q - 1) * a.d;
        auto hval = [&](const Labelling& L, const Edge& e) {
            return L.k + detail::pos_mod(L.v(e.a) + L.v(e.b) - L.k, q * L.d);
        };
        for (const Edge& e : g.edges())
            if (hval(a, e) + hval(b, e) != want) vd.fail("edge value sums miss 2k+(q-1)d");
        vd.constants["pair_constant"] = want;
        return vd;
    }
    if (pair_kind == "twin_kd") {
        if (!h) throw domain_error("verify_pair: twin kinds need a second graph");
        long long q = static_cast<long long>(g.size());
        {
            Labelling chk = a;
            chk.kind = "kd_graceful";
            Verdict v = verify(g, chk);
            if (!v.pass) vd.fail("first labelling is not (k,d)-graceful");
        }
        std::set<long long> universe, fa, gb;
        for (long long i = 0; i < q; ++i) {
            universe.insert(i * a.d);            // X_0
            universe.insert(a.k + i * a.d);      // X_{k,d}
        }
        for (const Vertex& v : g.vertices()) fa.insert(a.v(v));
        for (const Edge& e : g.edges()) fa.insert(adiff(a, e));
        for (const Vertex& v : h->vertices()) gb.insert(b.v(v));
        for (const Edge& e : h->edges()) gb.insert(adiff(b, e));
        std::set<long long> rest;
        for (long long u : universe)
            if (!fa.count(u)) rest.insert(u);
        if (gb != rest) vd.fail("twin value sets do not partition X_0 union X_{k,d}");
        return vd;
    }
    if (pair_kind == "twin_odd_graceful") {
        if (!h) throw domain_error("verify_pair: twin kinds need a second graph");
        long long q = static_cast<long long>(g.size());
        {
            Labelling chk = a;
            chk.kind = "odd_graceful";
            Verdict v = verify(g, chk);
            if (!v.pass) vd.fail("first labelling is not odd-graceful");
        }
        std::set<long long> hv;
        for (const Vertex& v : h->vertices()) {
            long long x = b.v(v);
            if (x < 1 || x > 2 * q) vd.fail("twin vertex value escapes [1,2q]");
            if (!hv.insert(x).second) vd.fail("twin vertex values repeat");
        }
        std::set<long long> ev, want;
        for (const Edge& e : h->edges()) ev.insert(adiff(b, e));
        for (long long i = 1; i <= 2 * static_cast<long long>(h->size()) - 1; i += 2) want.insert(i);
        if (ev != want || ev.size() != h->size())
            vd.fail("twin edge values do not equal the odd interval");
        return vd;
    }
    throw domain_error("verify_pair: unknown pair kind '" + pair_kind + "'");
}

// ------------------------------------------------------ set-valued labellings

struct SetLabellingResult {
    Verdict verdict;
    std::map<Edge, long long> representatives;
};

// F assigns label sets to vertices; every edge takes its endpoints' common
// member, and a system of distinct representatives must cover the target set
inline SetLabellingResult verify_set_labelling(const Graph& g,
                                               const std::map<Vertex, std::set<long long>>& F,
                                               const std::string& kind) {
    SetLabellingResult out;
    Verdict& vd = out.verdict;
    long long q = static_cast<long long>(g.size());
    std::vector<long long> target;
    long long cap;
    if (kind == "graceful_intersection") {
        for (long long i = 1; i <= q; ++i) target.push_back(i);
        cap = q;
    } else if (kind == "odd_graceful_intersection") {
        for (long long i = 1; i <= 2 * q - 1; i += 2) target.push_back(i);
        cap = 2 * q - 1;
    } else {
        throw domain_error("verify_set_labelling: unknown kind '" + kind + "'");
    }
    std::set<std::set<long long>> distinct;
    for (const Vertex& v : g.vertices()) {
        auto it = F.find(v);
        if (it == F.end()) { vd.fail("vertex '" + v + "' has no label set"); return out; }
        for (long long x : it->second)
            if (x < 1 || x > cap) vd.fail("set member escapes the universe");
        if (!distinct.insert(it->second).second) vd.fail("vertex label sets are not distinct");
    }
    std::vector<Edge> es = g.edges();
    std::vector<std::vector<int>> adj(es.size());
    for (size_t i = 0; i < es.size(); ++i) {
        const std::set<long long>& A = F.at(es[i].a);
        const std::set<long long>& B = F.at(es[i].b);
        bool any = false;
        for (size_t j = 0; j < target.size(); ++j)
            if (A.count(target[j]) && B.count(target[j])) {
                adj[i].push_back(static_cast<int>(j));
                any = true;
            }
        if (!any) {
            vd.fail("edge (" + es[i].a + "," + es[i].b + ") has empty intersection with the target");
            return out;
        }
    }
    std::vector<int> match;
    if (es.size() != target.size() ||
        !detail::perfect_matching(es.size(), target.size(), adj, &match)) {
        vd.fail("no system of distinct representatives covers the target set");
        return out;
    }
    for (size_t i = 0; i < es.size(); ++i) out.representatives[es[i]] = target[match[i]];
    return out;
}

// --------------------------------------------- euler v-divided set labelling

struct EulerVSetResult {
    std::vector<Vertex> circuit;               // closed euler traversal of g
    Labelling cycle_labelling;                 // on the traversal cycle C_n
    std::map<Vertex, std::set<long long>> sets;
    std::map<Edge, long long> edge_values;     // proper edge labels on g
};

// v-divide an euler graph into the cycle C_n along its euler circuit, label
// the cycle, then pull the labels back: vertices collect sets, edges stay proper
inline EulerVSetResult euler_vset_labelling(const Graph& g, const std::string& kind,
                                            long long t = 1,
                                            long long budget = kDefaultSearchBudget) {
    EulerVSetResult out;
    out.circuit = euler_circuit(g);
    long long n = static_cast<long long>(g.size());
    Graph cyc;
    std::vector<Vertex> cv;
    for (long long i = 0; i < n; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "c%03lld", i);
        cv.push_back(buf);
        cyc.add_vertex(buf);
    }
    for (long long i = 0; i < n; ++i) cyc.add_edge(cv[i], cv[(i + 1) % n]);

    Labelling lab;
    if (kind == "graceful" || kind == "four_c") {
        SearchResult r = search(cyc, kind == "four_c" ? "set_ordered_graceful" : "graceful",
                                std::nullopt, budget);
        if (r.status == "budget_exceeded") throw domain_error("euler_vset_labelling: budget exceeded");
        if (r.status != "found")
            throw domain_error("euler_vset_labelling: the cycle C_" + std::to_string(n) +
                               " admits no graceful labelling");
        lab = *r.labelling;
        if (kind == "four_c") {
            Labelling fl = lab;
            fl.kind = "four_c";
            for (const Edge& e : cyc.edges())
                fl.edge_values[e] = 2 * n + t - std::llabs(lab.v(e.a) - lab.v(e.b));
            Verdict v = verify(cyc, fl);
            if (!v.pass)
                throw domain_error("euler_vset_labelling: derived four_c labelling fails:\n" + v.text());
            lab = fl;
        }
    } else if (kind == "odd_graceful" || kind == "edge_magic_total") {
        SearchResult r = search(cyc, kind, std::nullopt, budget);
        if (r.status == "budget_exceeded") throw domain_error("euler_vset_labelling: budget exceeded");
        if (r.status != "found")
            throw domain_error("euler_vset_labelling: the cycle C_" + std::to_string(n) +
                               " admits no " + kind + " labelling");
        lab = *r.labelling;
    } else {
        throw domain_error("euler_vset_labelling: unsupported kind '" + kind + "'");
    }
    out.cycle_labelling = lab;
    for (long long i = 0; i < n; ++i) out.sets[out.circuit[i]].insert(lab.v(cv[i]));
    for (long long i = 0; i < n; ++i) {
        Edge ge(out.circuit[i], out.circuit[i + 1]);
        Edge ce(cv[i], cv[(i + 1) % n]);
        long long val = lab.has_edge_values() ? lab.e(ce)
                                              : std::llabs(lab.v(ce.a) - lab.v(ce.b));
        out.edge_values[ge] = val;
    }
    return out;
}

} // namespace topsnut

#endif
