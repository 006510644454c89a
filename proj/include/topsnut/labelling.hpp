#ifndef TOPSNUT_LABELLING_HPP
#define TOPSNUT_LABELLING_HPP

#include <cmath>
#include <functional>
#include <optional>

#include "graph.hpp"

namespace topsnut {

inline constexpr int kMaxSearchVertices = 16;
inline constexpr long long kDefaultSearchBudget = 200'000'000;

struct Labelling {
    std::string kind;
    std::map<Vertex, long long> vertex_values;
    std::map<Edge, long long> edge_values; // only for total kinds
    long long k = 1, d = 1;
    std::optional<long long> flaw_budget;
    std::optional<long long> modulus; // verify differences mod n (graphic-group shifts)

    long long v(const Vertex& u) const {
        auto it = vertex_values.find(u);
        if (it == vertex_values.end()) throw domain_error("labelling misses vertex '" + u + "'");
        return it->second;
    }
    bool has_edge_values() const { return !edge_values.empty(); }
    long long e(const Edge& ed) const {
        auto it = edge_values.find(ed);
        if (it == edge_values.end())
            throw domain_error("labelling misses edge (" + ed.a + "," + ed.b + ")");
        return it->second;
    }
};

struct Verdict {
    bool pass = true;
    std::vector<std::string> reasons;
    std::map<std::string, long long> constants;
    std::vector<Edge> witness; // E* for flawed kinds

    void fail(const std::string& clause) {
        pass = false;
        reasons.push_back(clause);
    }
    std::string text() const {
        std::string s = pass ? "pass" : "fail";
        for (auto& r : reasons) s += "\n  clause: " + r;
        for (auto& [k2, v2] : constants) s += "\n  " + k2 + "=" + std::to_string(v2);
        for (auto& w : witness) s += "\n  phantom: (" + w.a + "," + w.b + ")";
        return s;
    }
};

namespace detail {

inline bool is_flawed_kind(const std::string& kind) { return starts_with(kind, "flawed_"); }
inline std::string base_kind(const std::string& kind) {
    return is_flawed_kind(kind) ? kind.substr(7) : kind;
}

// orientation of an edge across a bipartition: returns (x-side value, y-side value)
inline std::optional<std::pair<long long, long long>> oriented(const Bipartition& bp,
                                                               const Vertex& u, const Vertex& v,
                                                               long long fu, long long fv) {
    bool ux = bp.x.count(u), vx = bp.x.count(v);
    if (ux && !vx) return std::make_pair(fu, fv);
    if (!ux && vx) return std::make_pair(fv, fu);
    return std::nullopt;
}

inline long long pos_mod(long long a, long long n) { return ((a % n) + n) % n; }

// can the multiset of values be split into pairs of *distinct members* summing to k,
// where alt adds `alt` to a pair sum as an allowed alternative
inline bool pairable(std::vector<long long> s, long long k, long long alt) {
    if (s.size() % 2) return false;
    std::function<bool()> rec = [&]() {
        if (s.empty()) return true;
        long long a = s.back();
        s.pop_back();
        for (size_t i = 0; i < s.size(); ++i) {
            long long b = s[i];
            if (a + b == k || (alt != 0 && alt + a + b == k)) {
                std::swap(s[i], s.back());
                s.pop_back();
                if (rec()) return true;
                s.push_back(b);
                std::swap(s[i], s.back());
            }
        }
        s.push_back(a);
        return false;
    };
    return rec();
}

// Kuhn's bipartite matching: left items 0..L-1, adjacency to right items
inline bool perfect_matching(size_t L, size_t R,
                             const std::vector<std::vector<int>>& adj,
                             std::vector<int>* match_out = nullptr) {
    std::vector<int> mr(R, -1);
    std::vector<char> used;
    std::function<bool(int)> aug = [&](int u) -> bool {
        for (int w : adj[u]) {
            if (used[w]) continue;
            used[w] = 1;
            if (mr[w] < 0 || aug(mr[w])) {
                mr[w] = u;
                return true;
            }
        }
        return false;
    };
    size_t matched = 0;
    for (size_t u = 0; u < L; ++u) {
        used.assign(R, 0);
        if (aug(static_cast<int>(u))) ++matched;
    }
    if (matched != L) return false;
    if (match_out) {
        match_out->assign(L, -1);
        for (size_t w = 0; w < R; ++w)
            if (mr[w] >= 0) (*match_out)[mr[w]] = static_cast<int>(w);
    }
    return true;
}

} // namespace detail

// ----------------------------------------------------------------- verify

namespace detail {

struct VertexKindSpec {
    long long lo = 0, hi = 0;        // vertex value range
    bool min_zero = false;           // min f(V) must be 0
    bool set_ordered = false;
    int strongly = 0;                // 1: matching sum q, 2: matching sum 2q-1
    bool tree_one_repeat = false;    // harmonious exception
    std::function<long long(long long, long long)> ef; // induced edge value
    std::vector<long long> target;   // required edge label set
};

inline std::optional<VertexKindSpec> vertex_kind_spec(const std::string& kind, long long q,
                                                      long long k, long long d) {
    VertexKindSpec s;
    auto interval = [](long long a, long long b) {
        std::vector<long long> t;
        for (long long v = a; v <= b; ++v) t.push_back(v);
        return t;
    };
    auto odds = [](long long b) {
        std::vector<long long> t;
        for (long long v = 1; v <= b; v += 2) t.push_back(v);
        return t;
    };
    auto skd = [&]() {
        std::vector<long long> t;
        for (long long i = 0; i < q; ++i) t.push_back(k + i * d);
        return t;
    };
    auto diff = [](long long a, long long b) { return a > b ? a - b : b - a; };
    if (kind == "graceful" || kind == "set_ordered_graceful" || kind == "strongly_graceful" ||
        kind == "strongly_set_ordered_graceful") {
        s = {0, q, true, kind.find("set_ordered") != std::string::npos,
             kind.find("strongly") != std::string::npos ? 1 : 0, false, diff, interval(1, q)};
    } else if (kind == "odd_graceful" || kind == "set_ordered_odd_graceful" ||
               kind == "strongly_odd_graceful" || kind == "strongly_set_ordered_odd_graceful") {
        s = {0, 2 * q - 1, true, kind.find("set_ordered") != std::string::npos,
             kind.find("strongly") != std::string::npos ? 2 : 0, false, diff, odds(2 * q - 1)};
    } else if (kind == "elegant") {
        s = {0, q, false, false, 0, false,
             [q](long long a, long long b) { return pos_mod(a + b, q + 1); }, interval(1, q)};
    } else if (kind == "odd_elegant") {
        s = {0, 2 * q - 1, false, false, 0, false,
             [q](long long a, long long b) { return pos_mod(a + b, 2 * q); }, odds(2 * q - 1)};
    } else if (kind == "felicitous" || kind == "super_felicitous" ||
               kind == "set_ordered_felicitous") {
        s = {0, q, false, kind == "set_ordered_felicitous", 0, false,
             [q](long long a, long long b) { return pos_mod(a + b, q); }, interval(0, q - 1)};
    } else if (kind == "harmonious") {
        s = {0, q - 1, true, false, 0, true,
             [q](long long a, long long b) { return pos_mod(a + b, q); }, interval(0, q - 1)};
    } else if (kind == "kd_graceful") {
        s = {0, k + (q - 1) * d, false, false, 0, false, diff, skd()};
    } else if (kind == "kd_arithmetic") {
        s = {0, k + (q - 1) * d, false, false, 0, false,
             [](long long a, long long b) { return a + b; }, skd()};
    } else if (kind == "kd_harmonious") {
        s = {0, k + (q - 1) * d, false, false, 0, false,
             [q, k, d](long long a, long long b) { return k + pos_mod(a + b - k, q * d); }, skd()};
    } else if (kind == "perfect_odd_graceful") {
        s = {0, 2 * q - 1, true, false, 0, false, diff, odds(2 * q - 1)};
    } else {
        return std::nullopt;
    }
    return s;
}

// perfect matching on edges uv with value(u)+value(v)==target covering all vertices
inline bool has_perfect_label_matching(const Graph& g, const Labelling& lab, long long target) {
    if (g.order() % 2) return false;
    std::vector<Edge> cand;
    for (const Edge& e : g.edges())
        if (lab.v(e.a) + lab.v(e.b) == target) cand.push_back(e);
    std::set<Vertex> used;
    std::function<bool(size_t)> rec = [&](size_t covered) -> bool {
        if (covered == g.order()) return true;
        Vertex pick;
        for (const Vertex& v : g.sorted_vertices())
            if (!used.count(v)) { pick = v; break; }
        for (const Edge& e : cand) {
            if (!e.touches(pick)) continue;
            Vertex o = e.other(pick);
            if (used.count(o)) continue;
            used.insert(pick);
            used.insert(o);
            if (rec(covered + 2)) return true;
            used.erase(pick);
            used.erase(o);
        }
        return false;
    };
    return rec(0);
}

// find q' cross-component edges realizing the missing labels so that G+E* is connected
inline bool find_phantom_edges(const Graph& g, const Labelling& lab,
                               const std::vector<long long>& missing,
                               const std::function<std::optional<long long>(const Vertex&, const Vertex&)>& pair_value,
                               std::vector<Edge>& out) {
    auto comps = component_sets(g);
    std::map<Vertex, int> comp_of;
    for (size_t i = 0; i < comps.size(); ++i)
        for (const Vertex& v : comps[i]) comp_of[v] = static_cast<int>(i);
    std::vector<Vertex> vs = g.sorted_vertices();
    std::vector<std::vector<Edge>> cands(missing.size());
    for (size_t m = 0; m < missing.size(); ++m) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (comp_of[vs[i]] == comp_of[vs[j]]) continue;
                auto val = pair_value(vs[i], vs[j]);
                if (val && *val == missing[m]) cands[m].emplace_back(vs[i], vs[j]);
            }
        if (cands[m].empty()) return false;
    }
    std::vector<Edge> chosen;
    std::set<std::pair<Vertex, Vertex>> used;
    std::function<bool(size_t)> rec = [&](size_t m) -> bool {
        if (m == missing.size()) {
            // E* must reconnect the graph
            Graph h = copy_plain(g);
            for (const Edge& e : chosen)
                if (!h.has_edge(e.a, e.b)) h.add_edge(e.a, e.b);
            if (!is_connected(h)) return false;
            out = chosen;
            return true;
        }
        for (const Edge& e : cands[m]) {
            if (used.count(e.key())) continue;
            used.insert(e.key());
            chosen.push_back(e);
            if (rec(m + 1)) return true;
            chosen.pop_back();
            used.erase(e.key());
        }
        return false;
    };
    return rec(0);
}

inline void check_coverage(const Graph& g, const Labelling& lab, Verdict& vd,
                           const std::vector<long long>& computed,
                           const std::vector<long long>& target, long long flaw,
                           const std::function<std::optional<long long>(const Vertex&, const Vertex&)>& pair_value) {
    std::set<long long> tset(target.begin(), target.end()), seen;
    for (long long v : computed) {
        if (!tset.count(v)) {
            vd.fail("edge value " + std::to_string(v) + " outside the required set");
            return;
        }
        if (!seen.insert(v).second) {
            vd.fail("edge value " + std::to_string(v) + " repeated");
            return;
        }
    }
    std::vector<long long> missing;
    for (long long t : target)
        if (!seen.count(t)) missing.push_back(t);
    if (static_cast<long long>(missing.size()) != flaw) {
        vd.fail("edge values miss " + std::to_string(missing.size()) + " of the required set, expected " +
                std::to_string(flaw));
        return;
    }
    if (flaw > 0) {
        std::vector<Edge> estar;
        if (!find_phantom_edges(g, lab, missing, pair_value, estar)) {
            vd.fail("missing edge values are not realizable by cross-component phantom edges");
            return;
        }
        vd.witness = estar;
    }
}

inline const Bipartition* effective_bipartition(const Graph& g, std::optional<Bipartition>& store) {
    if (g.bipartition) return &*g.bipartition;
    store = find_bipartition(g);
    return store ? &*store : nullptr;
}

inline void verify_vertex_kind(const Graph& g, const Labelling& lab, const std::string& kind,
                               long long flaw, Verdict& vd) {
    long long qg = static_cast<long long>(g.size());
    long long q = qg + flaw;
    long long p = static_cast<long long>(g.order());
    auto spec = vertex_kind_spec(kind, q, lab.k, lab.d);
    if (!spec) throw domain_error("unsupported kind '" + kind + "'");
    for (const Vertex& v : g.vertices()) lab.v(v); // totality
    std::optional<Bipartition> bpstore;
    const Bipartition* bp = effective_bipartition(g, bpstore);
    if (spec->set_ordered && !bp) {
        vd.fail("set-ordered kind requires a bipartite graph");
        return;
    }

    bool modular = lab.modulus.has_value();
    long long n = modular ? *lab.modulus : 0;

    // vertex injectivity + range
    {
        std::set<long long> vals;
        long long mn = std::numeric_limits<long long>::max();
        long long dup = 0;
        for (const Vertex& v : g.vertices()) {
            long long f = modular ? pos_mod(lab.v(v), n) : lab.v(v);
            mn = std::min(mn, f);
            if (!vals.insert(f).second) ++dup;
            if (!modular && (f < spec->lo || f > spec->hi))
                vd.fail("vertex value " + std::to_string(f) + " outside [" + std::to_string(spec->lo) +
                        "," + std::to_string(spec->hi) + "] at '" + v + "'");
        }
        bool tree = is_connected(g) && is_acyclic(g) && flaw == 0;
        bool forest_flawed = is_acyclic(g); // flawed tree-kinds live on forests
        if (dup > 0) {
            bool ok = spec->tree_one_repeat && (tree || (flaw > 0 && forest_flawed)) && dup == 1;
            if (!ok) vd.fail("vertex values are not distinct");
        }
        if (!modular && spec->min_zero && mn != 0) vd.fail("minimum vertex value must be 0");
    }

    // set-ordered; with a computed (unstored) bipartition either class may sit low
    if (spec->set_ordered && bp && !modular) {
        auto below = [&](const std::set<Vertex>& lo2, const std::set<Vertex>& hi2) {
            long long mx = std::numeric_limits<long long>::min();
            long long mn = std::numeric_limits<long long>::max();
            for (const Vertex& v : lo2) mx = std::max(mx, lab.v(v));
            for (const Vertex& v : hi2) mn = std::min(mn, lab.v(v));
            return mx < mn;
        };
        bool ok = below(bp->x, bp->y) || (!g.bipartition && below(bp->y, bp->x));
        if (!ok) vd.fail("set-ordered clause max f(X) < min f(Y) fails");
    }

    // edge coverage
    bool diff_kind = kind.find("graceful") != std::string::npos;
    auto value_of = [&](long long fu, long long fv, const Vertex& u, const Vertex& v)
        -> std::optional<long long> {
        if (!modular) return spec->ef(fu, fv);
        if (diff_kind) {
            if (!bp) return std::nullopt;
            auto o = oriented(*bp, u, v, fu, fv);
            if (!o) return std::nullopt;
            return pos_mod(o->second - o->first, n);
        }
        return pos_mod(spec->ef(fu, fv), n);
    };
    std::vector<long long> computed;
    for (const Edge& e : g.edges()) {
        auto val = value_of(lab.v(e.a), lab.v(e.b), e.a, e.b);
        if (!val) {
            vd.fail("edge (" + e.a + "," + e.b + ") has no well-defined value");
            return;
        }
        computed.push_back(*val);
    }
    std::vector<long long> target = spec->target;
    if (modular)
        for (long long& t : target) t = pos_mod(t, n);
    auto pair_value = [&](const Vertex& u, const Vertex& v) -> std::optional<long long> {
        long long fu = modular ? pos_mod(lab.v(u), n) : lab.v(u);
        long long fv = modular ? pos_mod(lab.v(v), n) : lab.v(v);
        if (spec->set_ordered && bp) {
            bool ux = bp->x.count(u), vx = bp->x.count(v);
            if (ux == vx) return std::nullopt; // phantom edge must respect the bipartition
        }
        return value_of(fu, fv, u, v);
    };
    check_coverage(g, lab, vd, computed, target, flaw, pair_value);

    if (spec->strongly == 1 && !has_perfect_label_matching(g, lab, q))
        vd.fail("no perfect matching with f(x)+f(y)=q");
    if (spec->strongly == 2 && !has_perfect_label_matching(g, lab, 2 * q - 1))
        vd.fail("no perfect matching with f(x)+f(y)=2q-1");

    if (kind == "super_felicitous") {
        std::set<long long> vals;
        for (const Vertex& v : g.vertices()) vals.insert(lab.v(v));
        if (*vals.begin() != 0 || *vals.rbegin() != p - 1 ||
            static_cast<long long>(vals.size()) != p)
            vd.fail("super clause f(V)=[0,p-1] fails");
    }
    if (kind == "perfect_odd_graceful") {
        std::set<long long> vals, diffs;
        for (const Vertex& v : g.vertices()) vals.insert(lab.v(v));
        for (long long a : vals)
            for (long long b : vals)
                if (a < b) diffs.insert(b - a);
        std::set<long long> want;
        for (long long i = 1; i <= p; ++i) want.insert(i);
        if (diffs != want) vd.fail("pairwise vertex differences do not equal [1,p]");
    }
}

inline void verify_total_kind(const Graph& g, const Labelling& lab, const std::string& kind,
                              long long flaw, Verdict& vd) {
    long long qg = static_cast<long long>(g.size());
    long long q = qg + flaw;
    long long p = static_cast<long long>(g.order());
    for (const Vertex& v : g.vertices()) lab.v(v);
    for (const Edge& e : g.edges()) lab.e(e);
    auto all_values = [&]() {
        std::vector<long long> vals;
        for (const Vertex& v : g.vertices()) vals.push_back(lab.v(v));
        for (const Edge& e : g.edges()) vals.push_back(lab.e(e));
        return vals;
    };
    auto distinct = [&](const std::vector<long long>& vals) {
        return std::set<long long>(vals.begin(), vals.end()).size() == vals.size();
    };
    auto in_range = [&](const std::vector<long long>& vals, long long lo, long long hi) {
        for (long long v : vals)
            if (v < lo || v > hi) return false;
        return true;
    };
    auto record_super = [&]() {
        long long mxv = std::numeric_limits<long long>::min(), mne = std::numeric_limits<long long>::max();
        for (const Vertex& v : g.vertices()) mxv = std::max(mxv, lab.v(v));
        for (const Edge& e : g.edges()) mne = std::min(mne, lab.e(e));
        vd.constants["super"] = (qg == 0 || mxv < mne) ? 1 : 0;
    };
    auto adiff = [&](const Edge& e) { return std::llabs(lab.v(e.a) - lab.v(e.b)); };

    if (kind == "total_graceful" || kind == "odd_even_separable_emt") {
        auto vals = all_values();
        if (!distinct(vals)) vd.fail("values on V and E are not distinct");
        if (!in_range(vals, 1, p + q)) vd.fail("values escape [1,p+q]");
        for (const Edge& e : g.edges())
            if (lab.e(e) != adiff(e))
                vd.fail("edge (" + e.a + "," + e.b + ") value differs from |f(u)-f(v)|");
        if (kind == "odd_even_separable_emt") {
            for (const Vertex& v : g.vertices())
                if (lab.v(v) % 2 == 0) vd.fail("vertex value " + std::to_string(lab.v(v)) + " is even");
            for (const Edge& e : g.edges())
                if (lab.e(e) % 2) vd.fail("edge value " + std::to_string(lab.e(e)) + " is odd");
        }
        record_super();
        return;
    }
    if (kind == "edge_magic_total" || kind == "kd_edge_antimagic_total") {
        auto vals = all_values();
        if (!distinct(vals)) vd.fail("values on V and E are not distinct");
        if (!in_range(vals, 1, p + q)) vd.fail("values escape [1,p+q]");
        if (flaw == 0 && static_cast<long long>(vals.size()) != p + q)
            vd.fail("labelling is not onto [1,p+q]");
        if (flaw > 0) {
            std::set<long long> used(vals.begin(), vals.end());
            if (static_cast<long long>(used.size()) != p + qg)
                vd.fail("values on V and E are not distinct");
        }
        record_super();
        if (kind == "edge_magic_total") {
            std::optional<long long> c;
            for (const Edge& e : g.edges()) {
                long long s = lab.v(e.a) + lab.e(e) + lab.v(e.b);
                if (!c) c = s;
                else if (*c != s) vd.fail("edge sums are not constant");
            }
            if (c) vd.constants["magic"] = *c;
            if (flaw > 0 && c) {
                std::set<long long> used(vals.begin(), vals.end());
                std::vector<long long> missing;
                for (long long v = 1; v <= p + q; ++v)
                    if (!used.count(v)) missing.push_back(v);
                if (static_cast<long long>(missing.size()) != flaw) {
                    vd.fail("value set misses " + std::to_string(missing.size()) +
                            " labels, expected " + std::to_string(flaw));
                    return;
                }
                long long cc = *c;
                auto pv = [&](const Vertex& u, const Vertex& v2) -> std::optional<long long> {
                    long long val = cc - lab.v(u) - lab.v(v2);
                    if (val < 1 || val > p + q) return std::nullopt;
                    return val;
                };
                std::vector<Edge> estar;
                if (!find_phantom_edges(g, lab, missing, pv, estar))
                    vd.fail("missing labels are not realizable by cross-component phantom edges");
                else
                    vd.witness = estar;
            }
        } else {
            std::set<long long> sums;
            for (const Edge& e : g.edges()) sums.insert(lab.v(e.a) + lab.e(e) + lab.v(e.b));
            std::set<long long> want;
            for (long long i = 0; i < q; ++i) want.insert(lab.k + i * lab.d);
            if (flaw == 0 && sums != want) vd.fail("edge sums do not equal S_{k,d}");
            if (flaw > 0) {
                for (long long s : sums)
                    if (!want.count(s)) vd.fail("edge sum outside S_{k,d}");
                if (static_cast<long long>(sums.size()) != qg) vd.fail("edge sums repeat");
            }
        }
        return;
    }
    if (kind == "edge_magic_total_graceful") {
        auto vals = all_values();
        if (!distinct(vals)) vd.fail("values on V and E are not distinct");
        if (!in_range(vals, 1, p + q)) vd.fail("values escape [1,p+q]");
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.e(e) + adiff(e);
            if (!c) c = s;
            else if (*c != s) vd.fail("g(uv)+|g(u)-g(v)| is not constant");
        }
        if (c) vd.constants["magic"] = *c;
        record_super();
        return;
    }
    if (kind == "relaxed_emt") {
        auto vals = all_values();
        if (!in_range(vals, 1, p + q)) vd.fail("values escape [1,p+q]");
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.v(e.a) + lab.e(e) + lab.v(e.b);
            if (!c) c = s;
            else if (*c != s) vd.fail("edge sums are not constant");
        }
        if (c) vd.constants["magic"] = *c;
        for (const Edge& e : g.edges()) {
            bool hit = false;
            for (const Edge& f : g.edges())
                if (lab.e(e) == adiff(f)) { hit = true; break; }
            if (!hit)
                vd.fail("edge value " + std::to_string(lab.e(e)) + " matches no |f(x)-f(y)|");
        }
        return;
    }
    if (kind == "oemm") {
        for (const Vertex& v : g.vertices())
            if (lab.v(v) < 0 || lab.v(v) > 2 * q - 1) vd.fail("vertex value escapes [0,2q-1]");
        std::set<long long> evals;
        for (const Edge& e : g.edges()) {
            if (lab.e(e) % 2 == 0) vd.fail("edge value " + std::to_string(lab.e(e)) + " is even");
            evals.insert(lab.e(e));
        }
        std::set<long long> want;
        for (long long i = 1; i <= 2 * q - 1; i += 2) want.insert(i);
        if (flaw == 0 && evals != want) vd.fail("edge values do not equal [1,2q-1]^o");
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.v(e.a) + lab.e(e) + lab.v(e.b);
            if (!c) c = s;
            else if (*c != s) vd.fail("edge sums are not constant");
        }
        if (c) vd.constants["magic"] = *c;
        if (flaw > 0 && c) {
            if (static_cast<long long>(evals.size()) != qg) vd.fail("edge values repeat");
            std::vector<long long> missing;
            for (long long t : want)
                if (!evals.count(t)) missing.push_back(t);
            if (static_cast<long long>(missing.size()) != flaw) {
                vd.fail("edge values miss " + std::to_string(missing.size()) + " labels, expected " +
                        std::to_string(flaw));
                return;
            }
            long long cc = *c;
            auto pv = [&](const Vertex& u, const Vertex& v2) -> std::optional<long long> {
                long long val = cc - lab.v(u) - lab.v(v2);
                if (val < 1 || val > 2 * q - 1 || val % 2 == 0) return std::nullopt;
                return val;
            };
            std::vector<Edge> estar;
            if (!find_phantom_edges(g, lab, missing, pv, estar))
                vd.fail("missing labels are not realizable by cross-component phantom edges");
            else
                vd.witness = estar;
        }
        return;
    }
    if (kind == "eedoemm") {
        std::set<long long> want;
        for (long long i = 1; i <= 2 * q - 1; i += 2) want.insert(i);
        std::set<long long> evals;
        for (const Edge& e : g.edges()) evals.insert(lab.e(e));
        for (const Vertex& v : g.vertices())
            if (lab.v(v) < 0 || lab.v(v) > 2 * q - 1) vd.fail("vertex value escapes [0,2q-1]");
        for (const Edge& e : g.edges())
            if (!want.count(lab.e(e))) vd.fail("edge value outside [1,2q-1]^o");
        for (const Edge& e : g.edges()) {
            bool hit = false;
            for (const Edge& f : g.edges())
                if (lab.e(e) == adiff(f)) { hit = true; break; }
            if (!hit) vd.fail("ee-difference clause fails for an edge");
        }
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.e(e) + adiff(e);
            if (!c) c = s;
            else if (*c != s) vd.fail("f(uv)+|f(u)-f(v)| is not constant");
        }
        if (c) vd.constants["magic"] = *c;
        {
            std::vector<long long> svals;
            for (const Edge& e : g.edges()) svals.push_back(adiff(e) - lab.e(e));
            bool ok = false;
            std::set<long long> cands;
            for (long long a : svals)
                for (long long b : svals) cands.insert(a + b);
            for (long long kp : cands)
                if (pairable(svals, kp, 0)) {
                    ok = true;
                    vd.constants["balance"] = kp;
                    break;
                }
            if (!ok) vd.fail("ee-balanced pairing fails");
        }
        return;
    }
    if (kind == "six_c" || kind == "odd_six_c") {
        bool odd6 = kind == "odd_six_c";
        auto vals = all_values();
        if (!distinct(vals)) vd.fail("values on V and E are not distinct");
        if (!odd6) {
            if (!in_range(vals, 1, p + q)) vd.fail("values escape [1,p+q]");
            if (flaw == 0 && static_cast<long long>(vals.size()) != p + q)
                vd.fail("labelling is not onto [1,p+q]");
        } else {
            if (!in_range(vals, 1, 4 * q - 1)) vd.fail("values escape [1,4q-1]");
        }
        // (i) e-magic
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.e(e) + adiff(e);
            if (!c) c = s;
            else if (*c != s) vd.fail("e-magic clause fails");
            if (odd6 && lab.e(e) % 2 == 0) vd.fail("edge value must be odd");
        }
        if (c) vd.constants["magic"] = *c;
        // (ii) ee-difference
        for (const Edge& e : g.edges()) {
            bool hit = false;
            for (const Edge& f : g.edges()) {
                long long dd = adiff(f);
                if (!odd6 && (lab.e(e) == dd || lab.e(e) == 2 * (p + q) - dd)) hit = true;
                if (odd6 && (lab.e(e) == 2 * q + dd || lab.e(e) == 2 * q - dd)) hit = true;
                if (hit) break;
            }
            if (!hit) vd.fail("ee-difference clause fails for an edge");
        }
        // (iii) ee-balanced
        {
            std::vector<long long> svals;
            for (const Edge& e : g.edges()) svals.push_back(adiff(e) - lab.e(e));
            long long alt = odd6 ? (p + q + 1) : 2 * (p + q);
            bool ok = false;
            std::set<long long> cands;
            for (long long a : svals)
                for (long long b : svals) {
                    cands.insert(a + b);
                    cands.insert(a + b + alt);
                }
            for (long long kp : cands)
                if (pairable(svals, kp, 0) || pairable(svals, kp, alt)) {
                    ok = true;
                    vd.constants["balance"] = kp;
                    break;
                }
            if (!ok) vd.fail("ee-balanced pairing fails");
        }
        // (iv) EV-ordered
        {
            std::set<long long> vv, ee;
            for (const Vertex& v : g.vertices()) vv.insert(lab.v(v));
            for (const Edge& e : g.edges()) ee.insert(lab.e(e));
            bool ok;
            if (!odd6) {
                bool opt1 = !vv.empty() && !ee.empty() && *vv.begin() > *ee.rbegin();
                bool opt2 = !vv.empty() && !ee.empty() && *vv.rbegin() < *ee.begin();
                bool opt3 = std::includes(ee.begin(), ee.end(), vv.begin(), vv.end());
                bool opt4 = std::includes(vv.begin(), vv.end(), ee.begin(), ee.end());
                bool opt5 = true;
                for (long long v : vv)
                    if (v % 2 == 0) opt5 = false;
                for (long long e : ee)
                    if (e % 2) opt5 = false;
                ok = opt1 || opt2 || opt3 || opt4 || opt5;
            } else {
                ok = !vv.empty() && !ee.empty() && *vv.rbegin() < *ee.begin();
                std::set<long long> diffs;
                for (long long a : vv)
                    for (long long b : vv)
                        if (a < b) diffs.insert(b - a);
                for (long long i = 1; i <= 2 * q - 1; ++i)
                    if (!diffs.count(i)) ok = false;
                for (long long dfe : diffs)
                    if (dfe > 2 * q - 1) ok = false;
            }
            if (!ok) vd.fail("EV-ordered clause fails");
        }
        // (v) ve-matching
        {
            std::vector<Edge> es = g.edges();
            std::vector<Vertex> vs = g.sorted_vertices();
            if (!odd6) {
                long long sing = (p + q + 1) / 2;
                std::vector<int> singular;
                std::vector<Vertex> pool;
                for (const Vertex& v : vs)
                    if (lab.v(v) != sing) pool.push_back(v);
                bool ok = false;
                std::set<long long> cands;
                for (const Edge& e : es)
                    for (const Vertex& w : pool) cands.insert(lab.e(e) + lab.v(w));
                for (long long kpp : cands) {
                    std::vector<std::vector<int>> adj(es.size());
                    for (size_t i = 0; i < es.size(); ++i)
                        for (size_t j = 0; j < pool.size(); ++j)
                            if (lab.e(es[i]) + lab.v(pool[j]) == kpp)
                                adj[i].push_back(static_cast<int>(j));
                    if (es.size() == pool.size() && perfect_matching(es.size(), pool.size(), adj)) {
                        ok = true;
                        vd.constants["ve_matching"] = kpp;
                        break;
                    }
                }
                if (!ok) vd.fail("ve-matching clause fails");
            } else {
                bool ok = false;
                std::set<long long> cands;
                for (const Edge& e : es)
                    for (const Vertex& w : vs) cands.insert(lab.e(e) + lab.v(w));
                std::vector<long long> cl(cands.begin(), cands.end());
                for (size_t i = 0; i < cl.size() && !ok; ++i)
                    for (size_t j = i; j < cl.size() && !ok; ++j) {
                        bool all = true;
                        for (const Edge& e : es) {
                            bool hit = false;
                            for (const Vertex& w : vs)
                                if (lab.e(e) + lab.v(w) == cl[i] || lab.e(e) + lab.v(w) == cl[j]) {
                                    hit = true;
                                    break;
                                }
                            if (!hit) { all = false; break; }
                        }
                        if (all) {
                            ok = true;
                            vd.constants["ve_matching_k1"] = cl[i];
                            vd.constants["ve_matching_k2"] = cl[j];
                        }
                    }
                if (!ok) vd.fail("ve-matching clause fails");
            }
        }
        // (vi) set-ordered
        {
            std::optional<Bipartition> bpstore;
            const Bipartition* bp = effective_bipartition(g, bpstore);
            if (!bp) {
                vd.fail("set-ordered clause requires a bipartite graph");
            } else {
                long long mx = std::numeric_limits<long long>::min(),
                          mn = std::numeric_limits<long long>::max();
                long long mx2 = mn, mn2 = mx;
                for (const Vertex& v : bp->x) mx = std::max(mx, lab.v(v));
                for (const Vertex& v : bp->y) mn = std::min(mn, lab.v(v));
                for (const Vertex& v : bp->y) mx2 = std::max(mx2, lab.v(v));
                for (const Vertex& v : bp->x) mn2 = std::min(mn2, lab.v(v));
                bool ok = mx < mn || (!odd6 && mx2 < mn2);
                if (!ok) vd.fail("set-ordered clause fails");
            }
        }
        return;
    }
    if (kind == "dgemm") {
        for (const Vertex& v : g.vertices())
            if (lab.v(v) < 0 || lab.v(v) > p - 1) vd.fail("vertex value escapes [0,p-1]");
        for (const Edge& e : g.edges())
            if (lab.e(e) < 1 || lab.e(e) > q) vd.fail("edge value escapes [1,q]");
        for (const Edge& e : g.edges()) {
            bool hit = false;
            for (const Edge& f : g.edges()) {
                long long dd = adiff(f);
                if (lab.e(e) == dd || lab.e(e) == p - dd) { hit = true; break; }
            }
            if (!hit) vd.fail("ee-difference clause fails for an edge");
        }
        {
            std::vector<long long> svals;
            for (const Edge& e : g.edges()) svals.push_back(adiff(e) - lab.e(e));
            bool ok = false;
            std::set<long long> cands;
            for (long long a : svals)
                for (long long b : svals) cands.insert(a + b);
            for (long long kp : cands)
                if (pairable(svals, kp, 0)) {
                    ok = true;
                    vd.constants["balance"] = kp;
                    break;
                }
            if (!ok) vd.fail("ee-balanced pairing fails");
        }
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = adiff(e) + lab.e(e);
            if (!c) c = s;
            else if (*c != s) vd.fail("e-magic clause fails");
        }
        if (c) vd.constants["magic"] = *c;
        {
            std::vector<Edge> es = g.edges();
            std::vector<Vertex> pool;
            for (const Vertex& v : g.sorted_vertices())
                if (lab.v(v) != 0) pool.push_back(v);
            bool ok = false;
            std::set<long long> cands;
            for (const Edge& e : es)
                for (const Vertex& w : pool) cands.insert(lab.e(e) + lab.v(w));
            for (long long kpp : cands) {
                std::vector<std::vector<int>> adj(es.size());
                for (size_t i = 0; i < es.size(); ++i)
                    for (size_t j = 0; j < pool.size(); ++j)
                        if (lab.e(es[i]) + lab.v(pool[j]) == kpp) adj[i].push_back(static_cast<int>(j));
                if (es.size() == pool.size() && perfect_matching(es.size(), pool.size(), adj)) {
                    ok = true;
                    vd.constants["ve_matching"] = kpp;
                    break;
                }
            }
            if (!ok) vd.fail("ve-matching clause fails");
        }
        return;
    }
    if (kind == "edge_odd_graceful_total") {
        for (const Vertex& v : g.vertices())
            if (lab.v(v) < 0 || lab.v(v) > q - 1) vd.fail("vertex value escapes [0,q-1]");
        std::set<long long> evals, want;
        for (long long i = 1; i <= 2 * q - 1; i += 2) want.insert(i);
        for (const Edge& e : g.edges()) evals.insert(lab.e(e));
        if (flaw == 0 && evals != want) vd.fail("edge values do not equal [1,2q-1]^o");
        std::set<long long> sums;
        for (const Edge& e : g.edges()) sums.insert(lab.v(e.a) + lab.e(e) + lab.v(e.b));
        if (!sums.empty()) {
            long long a = *sums.begin(), b = *sums.rbegin();
            if (b - a + 1 != q || static_cast<long long>(sums.size()) != qg)
                vd.fail("edge sums do not form an interval of length q");
            else {
                vd.constants["interval_low"] = a;
                vd.constants["interval_high"] = b;
            }
        }
        return;
    }
    if (kind == "four_c") {
        for (const Vertex& v : g.vertices())
            if (lab.v(v) < 0 || lab.v(v) > q) vd.fail("vertex value escapes [0,q]");
        for (const Edge& e : g.edges())
            if (lab.e(e) < 1) vd.fail("edge value must be positive");
        std::optional<long long> c;
        for (const Edge& e : g.edges()) {
            long long s = lab.e(e) + adiff(e);
            if (!c) c = s;
            else if (*c != s) vd.fail("e-magic clause fails");
        }
        if (c) vd.constants["magic"] = *c;
        {
            std::vector<long long> svals;
            for (const Edge& e : g.edges()) svals.push_back(adiff(e) - lab.e(e));
            bool ok = false;
            std::set<long long> cands;
            for (long long a : svals)
                for (long long b : svals) cands.insert(a + b);
            for (long long kp : cands)
                if (pairable(svals, kp, 0)) {
                    ok = true;
                    vd.constants["balance"] = kp;
                    break;
                }
            if (!ok) vd.fail("ee-balanced pairing fails");
        }
        {
            long long mxv = std::numeric_limits<long long>::min(),
                      mnv = std::numeric_limits<long long>::max();
            long long mxe = mxv, mne = mnv;
            for (const Vertex& v : g.vertices()) {
                mxv = std::max(mxv, lab.v(v));
                mnv = std::min(mnv, lab.v(v));
            }
            for (const Edge& e : g.edges()) {
                mxe = std::max(mxe, lab.e(e));
                mne = std::min(mne, lab.e(e));
            }
            if (!(mxv < mne || mnv > mxe)) vd.fail("EV-ordered clause fails");
        }
        {
            std::optional<Bipartition> bpstore;
            const Bipartition* bp = effective_bipartition(g, bpstore);
            if (!bp) {
                vd.fail("set-ordered clause requires a bipartite graph");
            } else {
                long long mx = std::numeric_limits<long long>::min(),
                          mn = std::numeric_limits<long long>::max();
                for (const Vertex& v : bp->x) mx = std::max(mx, lab.v(v));
                for (const Vertex& v : bp->y) mn = std::min(mn, lab.v(v));
                if (!(mx < mn)) vd.fail("set-ordered clause fails");
            }
        }
        return;
    }
    throw domain_error("unsupported kind '" + kind + "'");
}

inline void verify_multiple_edge_meaning(const Graph& g, const Labelling& lab, Verdict& vd) {
    long long p = static_cast<long long>(g.order());
    long long q = static_cast<long long>(g.size());
    std::set<long long> vset;
    for (const Vertex& v : g.vertices()) {
        if (lab.v(v) < 0 || lab.v(v) > p - 1) vd.fail("vertex value escapes [0,p-1]");
        vset.insert(lab.v(v));
    }
    if (static_cast<long long>(vset.size()) != p) vd.fail("vertex values are not distinct");
    std::vector<long long> sums;
    for (const Edge& e : g.edges()) sums.push_back(lab.v(e.a) + lab.v(e.b));
    std::set<long long> sset(sums.begin(), sums.end());
    bool interval = static_cast<long long>(sset.size()) == q &&
                    (sset.empty() || *sset.rbegin() - *sset.begin() + 1 == q);
    // (1)+(2): both need the sums to form an interval of q distinct values
    if (!interval) {
        vd.fail("meaning (1): no constant k gives edge labels [1,q]");
        vd.fail("meaning (2): no constant k' gives edge labels [p,p+q-1]");
    } else {
        vd.constants["k1"] = *sset.begin() + q;       // k - s in [1,q]
        vd.constants["k2"] = *sset.begin() + p + q - 1; // k' - s in [p,p+q-1]
    }
    // (3)
    {
        std::set<long long> mods;
        for (long long s : sums) mods.insert(pos_mod(s, q));
        if (static_cast<long long>(mods.size()) != q)
            vd.fail("meaning (3): sums mod q do not cover [0,q-1]");
    }
    // (4): |f(u)+f(v)-f(uv)| = k'' with f(E)=[1,q]
    {
        bool ok = false;
        for (long long kpp = 0; kpp <= 2 * p + q && !ok; ++kpp) {
            std::vector<std::vector<int>> adj(sums.size());
            for (size_t i = 0; i < sums.size(); ++i)
                for (long long L = 1; L <= q; ++L)
                    if (std::llabs(sums[i] - L) == kpp) adj[i].push_back(static_cast<int>(L - 1));
            if (perfect_matching(sums.size(), static_cast<size_t>(q), adj)) {
                ok = true;
                vd.constants["k4"] = kpp;
            }
        }
        if (!ok) vd.fail("meaning (4): no constant k'' admits edge labels [1,q]");
    }
    // (5): odd edge labels [1,2q-1]^o with sums an interval of length q
    {
        std::vector<long long> odds;
        for (long long i = 1; i <= 2 * q - 1; i += 2) odds.push_back(i);
        std::vector<char> used(odds.size(), 0);
        long long lo = 0, hi = 0;
        bool any = false, ok = false;
        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
            if (i == sums.size()) return true;
            for (size_t j = 0; j < odds.size(); ++j) {
                if (used[j]) continue;
                long long t = sums[i] + odds[j];
                long long nlo = any ? std::min(lo, t) : t;
                long long nhi = any ? std::max(hi, t) : t;
                if (nhi - nlo + 1 > q) continue;
                long long plo = lo, phi = hi;
                bool pany = any;
                lo = nlo;
                hi = nhi;
                any = true;
                used[j] = 1;
                if (rec(i + 1)) return true;
                used[j] = 0;
                lo = plo;
                hi = phi;
                any = pany;
            }
            return false;
        };
        ok = rec(0);
        if (!ok) vd.fail("meaning (5): no odd edge labelling gives an interval of sums");
    }
}

} // namespace detail

inline Verdict verify(const Graph& g, const Labelling& lab) {
    Verdict vd;
    std::string kind = detail::base_kind(lab.kind);
    bool flawed = detail::is_flawed_kind(lab.kind);
    long long flaw = 0;
    if (flawed) {
        if (!lab.flaw_budget || *lab.flaw_budget < 1)
            throw domain_error("flawed kind requires a positive flaw_budget");
        flaw = *lab.flaw_budget;
        if (is_connected(g)) {
            vd.fail("flawed kind requires a disconnected graph");
            return vd;
        }
    }
    if (kind == "v_set_e_proper_graceful")
        throw domain_error("kind 'v_set_e_proper_graceful' is verified via euler_vset_labelling");
    if (kind == "multiple_edge_meaning") {
        if (flawed) throw domain_error("flawed variant unsupported for multiple_edge_meaning");
        detail::verify_multiple_edge_meaning(g, lab, vd);
        return vd;
    }
    if (kind == "perfect_epsilon") {
        long long p = static_cast<long long>(g.order());
        long long q = static_cast<long long>(g.size());
        std::set<long long> vals;
        for (const Vertex& v : g.vertices()) {
            if (lab.v(v) < 0 || lab.v(v) > p + q) vd.fail("vertex value escapes [0,p+q]");
            vals.insert(lab.v(v));
        }
        if (static_cast<long long>(vals.size()) != p) vd.fail("vertex values are not distinct");
        std::set<long long> diffs, want;
        for (long long a : vals)
            for (long long b : vals)
                if (a < b) diffs.insert(b - a);
        for (long long i = 1; i <= p; ++i) want.insert(i);
        if (diffs != want) vd.fail("pairwise vertex differences do not equal [1,p]");
        return vd;
    }
    if (detail::vertex_kind_spec(kind, std::max<long long>(1, g.size() + flaw), lab.k, lab.d)) {
        detail::verify_vertex_kind(g, lab, kind, flaw, vd);
        return vd;
    }
    detail::verify_total_kind(g, lab, kind, flaw, vd);
    return vd;
}

// ------------------------------------------------------------------ search

struct SearchResult {
    std::string status; // found | exhausted | budget_exceeded
    std::optional<Labelling> labelling;
    long long nodes = 0;
};

namespace detail {

struct Searcher {
    const Graph& g;
    std::string kind;
    long long k, d;
    long long budget;
    std::map<Vertex, long long> forced;
    long long nodes = 0;
    bool out_of_budget = false;

    Searcher(const Graph& gg, std::string kk, long long k_, long long d_, long long b)
        : g(gg), kind(std::move(kk)), k(k_), d(d_), budget(b) {}

    SearchResult run() {
        SearchResult res;
        if (kind == "edge_magic_total") return run_emt();
        long long q = static_cast<long long>(g.size());
        auto spec = vertex_kind_spec(kind, q, k, d);
        if (!spec) throw domain_error("search: unsupported kind '" + kind + "'");
        std::optional<Bipartition> bpstore;
        const Bipartition* bp = effective_bipartition(g, bpstore);
        if (spec->set_ordered && !bp)
            throw domain_error("search: set-ordered kind on a non-bipartite graph");
        std::vector<Vertex> vs = g.sorted_vertices();
        std::map<Vertex, long long> f;
        std::set<long long> vused, eused, target(spec->target.begin(), spec->target.end());
        bool tree = is_connected(g) && is_acyclic(g);
        int dups = 0;
        Labelling lab;
        lab.kind = kind;
        lab.k = k;
        lab.d = d;
        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (i == vs.size()) {
                lab.vertex_values = f;
                return verify(g, lab).pass;
            }
            const Vertex& v = vs[i];
            long long lo = spec->lo, hi = spec->hi;
            if (forced.count(v)) lo = hi = forced[v];
            for (long long val = lo; val <= hi; ++val) {
                bool dup = vused.count(val);
                if (dup && !(spec->tree_one_repeat && tree && dups == 0)) continue;
                std::vector<long long> evals;
                bool ok = true;
                for (const Vertex& w : g.neighbors(v)) {
                    if (!f.count(w)) continue;
                    long long ev = spec->ef(val, f[w]);
                    if (!target.count(ev) || eused.count(ev) ||
                        std::count(evals.begin(), evals.end(), ev)) {
                        ok = false;
                        break;
                    }
                    evals.push_back(ev);
                }
                if (!ok) continue;
                f[v] = val;
                if (!dup) vused.insert(val);
                else ++dups;
                for (long long ev : evals) eused.insert(ev);
                if (rec(i + 1)) return true;
                for (long long ev : evals) eused.erase(ev);
                if (!dup) vused.erase(val);
                else --dups;
                f.erase(v);
                if (out_of_budget) return false;
            }
            return false;
        };
        if (rec(0)) {
            res.status = "found";
            res.labelling = lab;
        } else {
            res.status = out_of_budget ? "budget_exceeded" : "exhausted";
        }
        res.nodes = nodes;
        return res;
    }

    SearchResult run_emt() {
        SearchResult res;
        long long p = static_cast<long long>(g.order());
        long long q = static_cast<long long>(g.size());
        long long top = p + q;
        std::vector<Vertex> vs = g.sorted_vertices();
        std::map<Vertex, long long> f;
        std::map<Edge, long long> fe;
        std::set<long long> used;
        Labelling lab;
        lab.kind = kind;
        for (long long c = 6; c <= 3 * top - 3; ++c) {
            f.clear();
            fe.clear();
            used.clear();
            std::function<bool(size_t)> rec = [&](size_t i) -> bool {
                if (++nodes > budget) {
                    out_of_budget = true;
                    return false;
                }
                if (i == vs.size()) {
                    lab.vertex_values = f;
                    lab.edge_values = fe;
                    return verify(g, lab).pass;
                }
                const Vertex& v = vs[i];
                long long lo = 1, hi = top;
                if (forced.count(v)) lo = hi = forced[v];
                for (long long val = lo; val <= hi; ++val) {
                    if (used.count(val)) continue;
                    std::vector<std::pair<Edge, long long>> newe;
                    bool ok = true;
                    for (const Vertex& w : g.neighbors(v)) {
                        if (!f.count(w)) continue;
                        long long ev = c - val - f[w];
                        if (ev < 1 || ev > top || used.count(ev) || ev == val) { ok = false; break; }
                        bool dup = false;
                        for (auto& [pe, pv] : newe)
                            if (pv == ev) dup = true;
                        if (dup) { ok = false; break; }
                        newe.emplace_back(Edge(v, w), ev);
                    }
                    if (!ok) continue;
                    f[v] = val;
                    used.insert(val);
                    for (auto& [pe, pv] : newe) {
                        fe[pe] = pv;
                        used.insert(pv);
                    }
                    if (rec(i + 1)) return true;
                    for (auto& [pe, pv] : newe) {
                        fe.erase(pe);
                        used.erase(pv);
                    }
                    used.erase(val);
                    f.erase(v);
                    if (out_of_budget) return false;
                }
                return false;
            };
            if (rec(0)) {
                res.status = "found";
                res.labelling = lab;
                res.nodes = nodes;
                return res;
            }
            if (out_of_budget) break;
        }
        res.status = out_of_budget ? "budget_exceeded" : "exhausted";
        res.nodes = nodes;
        return res;
    }
};

} // namespace detail

inline SearchResult search(const Graph& g, const std::string& kind,
                           std::optional<std::pair<long long, long long>> params = std::nullopt,
                           long long budget = kDefaultSearchBudget) {
    if (g.order() > kMaxSearchVertices && budget >= kDefaultSearchBudget)
        throw domain_error("search: graph larger than " + std::to_string(kMaxSearchVertices) +
                           " vertices; pass an explicit budget to override");
    detail::Searcher s(g, kind, params ? params->first : 1, params ? params->second : 1, budget);
    return s.run();
}

// search with some vertex values pinned (0-rotatable checks)
inline SearchResult search_forced(const Graph& g, const std::string& kind,
                                  const std::map<Vertex, long long>& forced,
                                  long long budget = kDefaultSearchBudget) {
    detail::Searcher s(g, kind, 1, 1, budget);
    s.forced = forced;
    return s.run();
}

// --------------------------------------------------------------------- dual

inline Labelling dual_labelling(const Labelling& lab) {
    Labelling out = lab;
    if (lab.vertex_values.empty()) return out;
    long long mx = std::numeric_limits<long long>::min(), mn = std::numeric_limits<long long>::max();
    for (auto& [v, val] : lab.vertex_values) {
        mx = std::max(mx, val);
        mn = std::min(mn, val);
    }
    for (auto& [v, val] : out.vertex_values) val = mx + mn - val;
    return out;
}

// ------------------------------------------------------- text serialization

inline std::string serialize_labelling(const Labelling& lab) {
    std::ostringstream os;
    os << "labelling " << lab.kind;
    std::vector<std::string> opts;
    if (lab.k != 1 || lab.d != 1) {
        opts.push_back("k=" + std::to_string(lab.k));
        opts.push_back("d=" + std::to_string(lab.d));
    }
    if (lab.flaw_budget) opts.push_back("flaw_budget=" + std::to_string(*lab.flaw_budget));
    if (lab.modulus) opts.push_back("modulus=" + std::to_string(*lab.modulus));
    if (!opts.empty()) {
        os << " [";
        for (size_t i = 0; i < opts.size(); ++i) os << (i ? "," : "") << opts[i];
        os << "]";
    }
    os << " {\n";
    for (auto& [v, val] : lab.vertex_values) os << "  " << v << "=" << val << ";\n";
    if (!lab.edge_values.empty()) {
        os << "  edges:";
        bool first = true;
        for (auto& [e, val] : lab.edge_values) {
            os << (first ? " " : ", ") << "(" << e.a << "," << e.b << ")=" << val;
            first = false;
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline Labelling parse_labelling(const std::string& text) {
    size_t brace = text.find('{');
    if (brace == std::string::npos) throw parse_error("labelling: missing '{'");
    std::string head = trim(text.substr(0, brace));
    size_t close = text.rfind('}');
    if (close == std::string::npos || close < brace) throw parse_error("labelling: missing '}'");
    std::string body = text.substr(brace + 1, close - brace - 1);

    Labelling lab;
    std::istringstream hs(head);
    std::string word;
    hs >> word;
    if (word != "labelling") throw parse_error("labelling: expected 'labelling <kind>'");
    if (!(hs >> lab.kind)) throw parse_error("labelling: missing kind");
    std::string rest;
    std::getline(hs, rest);
    rest = trim(rest);
    if (!rest.empty()) {
        if (rest.front() != '[' || rest.back() != ']')
            throw parse_error("labelling: options must be bracketed");
        for (const std::string& opt : split(rest.substr(1, rest.size() - 2), ',')) {
            size_t eq = opt.find('=');
            if (eq == std::string::npos) throw parse_error("labelling: bad option '" + opt + "'");
            std::string key = trim(opt.substr(0, eq));
            long long val = to_ll(trim(opt.substr(eq + 1)), "labelling option");
            if (key == "k") lab.k = val;
            else if (key == "d") lab.d = val;
            else if (key == "flaw_budget") lab.flaw_budget = val;
            else if (key == "modulus") lab.modulus = val;
            else throw parse_error("labelling: unknown option '" + key + "'");
        }
    }
    for (const std::string& stmt : split_nested(body, ';')) {
        if (starts_with(stmt, "edges:")) {
            for (const std::string& item : split_nested(stmt.substr(6), ',')) {
                size_t eq = item.rfind('=');
                if (eq == std::string::npos) throw parse_error("labelling: bad edge item '" + item + "'");
                std::string pr = trim(item.substr(0, eq));
                long long val = to_ll(trim(item.substr(eq + 1)), "edge value");
                if (pr.size() < 2 || pr.front() != '(' || pr.back() != ')')
                    throw parse_error("labelling: bad edge '" + pr + "'");
                auto parts = split(pr.substr(1, pr.size() - 2), ',');
                if (parts.size() != 2) throw parse_error("labelling: bad edge '" + pr + "'");
                lab.edge_values[Edge(parts[0], parts[1])] = val;
            }
        } else {
            size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw parse_error("labelling: bad item '" + stmt + "'");
            lab.vertex_values[trim(stmt.substr(0, eq))] =
                to_ll(trim(stmt.substr(eq + 1)), "vertex value");
        }
    }
    return lab;
}

} // namespace topsnut

#endif
