#ifndef TOPSNUT_DIRECTED_HPP
#define TOPSNUT_DIRECTED_HPP

#include <optional>

#include "graph.hpp"
#include "labelling.hpp"
#include "matrix.hpp"

namespace topsnut {

// ------------------------------------------------------------- half-directed

// A graph whose edges are partly (or fully) oriented.  The simple underlying
// graph carries the incidence structure; `arcs` records which members are
// one-way and in which direction (tail, head).  Matrix columns follow
// edge_order when present, else insertion order, keeping each member's stored
// orientation.
class DirectedGraph {
public:
    struct Item {
        Vertex a, b; // tail, head for arcs; written order for plain edges
        bool arc = false;
    };

    void add_vertex(const Vertex& v) { g_.add_vertex(v); }
    void add_edge(const Vertex& u, const Vertex& v) { g_.add_edge(u, v); }
    void add_arc(const Vertex& tail, const Vertex& head) {
        g_.add_edge(tail, head); // rejects duplicates in either orientation
        g_.arcs.emplace_back(tail, head);
    }

    std::size_t order() const { return g_.order(); }
    std::size_t size() const { return g_.size(); }
    std::size_t arc_count() const { return g_.arcs.size(); }
    bool all_arcs() const { return g_.arcs.size() == g_.size(); }
    bool has_vertex(const Vertex& v) const { return g_.has_vertex(v); }

    Graph& underlying() { return g_; }
    const Graph& underlying() const { return g_; }

    // members in column order, arcs oriented tail-to-head
    std::vector<Item> items() const {
        std::vector<Edge> es = g_.edge_order ? *g_.edge_order : g_.edges();
        std::vector<Item> out;
        for (const Edge& e : es) {
            const Edge* arc = nullptr;
            for (const Edge& a : g_.arcs)
                if (a.same(e.a, e.b)) { arc = &a; break; }
            if (arc)
                out.push_back({arc->a, arc->b, true});
            else
                out.push_back({e.a, e.b, false});
        }
        return out;
    }

    // wrap a corpus record that may carry an `arcs:` section
    static DirectedGraph from_graph(const Graph& g) {
        for (const Edge& a : g.arcs)
            if (!g.has_edge(a.a, a.b))
                throw domain_error("arc (" + a.a + "->" + a.b + ") has no underlying edge");
        DirectedGraph dg;
        dg.g_ = g;
        return dg;
    }

private:
    Graph g_;
};

struct DirectedLabelling {
    std::string kind; // directed_graceful | directed_odd_graceful |
                      // half_directed_graceful | half_directed_odd_graceful |
                      // flawed_<any of those> | directed_six_c
    std::map<Vertex, long long> vertex_values;
    std::map<Edge, long long> arc_values; // assigned arc labels (directed_six_c)
    std::optional<long long> flaw_budget;
    std::optional<char> uniform_flag; // '+' / '-': demand single-sign arc values

    long long v(const Vertex& u) const {
        auto it = vertex_values.find(u);
        if (it == vertex_values.end()) throw domain_error("labelling misses vertex '" + u + "'");
        return it->second;
    }
};

struct DirectedVerdict {
    Verdict verdict;
    std::vector<long long> f_plus, f_minus; // signed arc values, ascending

    bool uniform() const { return f_plus.empty() || f_minus.empty(); }
};

namespace detail {

inline bool directed_base_kind(const std::string& kind, bool& odd, bool& half) {
    std::string b = base_kind(kind);
    if (b == "directed_graceful") { odd = false; half = false; return true; }
    if (b == "directed_odd_graceful") { odd = true; half = false; return true; }
    if (b == "half_directed_graceful") { odd = false; half = true; return true; }
    if (b == "half_directed_odd_graceful") { odd = true; half = true; return true; }
    return false;
}

} // namespace detail

// ------------------------------------------------------------- verification

// Arc values are f(tail) - f(head) (sign retained for the partition and the
// matrix); plain edges contribute |f(x) - f(y)|.  Coverage of [1,q] (odd:
// the odd numbers below 2q) is checked on magnitudes; flawed kinds demand a
// disconnected underlying graph and realize the missing values by
// cross-component phantom members.
inline DirectedVerdict verify_directed(const DirectedGraph& dg, const DirectedLabelling& lab) {
    DirectedVerdict out;
    Verdict& vd = out.verdict;
    const Graph& g = dg.underlying();
    const std::string& kind = lab.kind;

    if (kind == "directed_six_c") {
        if (!dg.all_arcs()) throw domain_error("directed_six_c requires a digraph (arcs only)");
        Labelling six;
        six.kind = "six_c";
        six.vertex_values = lab.vertex_values;
        for (const DirectedGraph::Item& it : dg.items()) {
            auto f = lab.arc_values.find(Edge(it.a, it.b));
            if (f == lab.arc_values.end())
                throw domain_error("labelling misses arc (" + it.a + "->" + it.b + ")");
            six.edge_values[Edge(it.a, it.b)] = f->second;
        }
        vd = verify(g, six);
        for (auto& [e, val] : six.edge_values) (val > 0 ? out.f_plus : out.f_minus).push_back(val);
        std::sort(out.f_plus.begin(), out.f_plus.end());
        std::sort(out.f_minus.begin(), out.f_minus.end());
        return out;
    }

    bool odd = false, half = false;
    if (!detail::directed_base_kind(kind, odd, half))
        throw domain_error("verify_directed: unsupported kind '" + kind + "'");
    if (!half && !dg.all_arcs())
        throw domain_error("directed kind '" + kind + "' on a half-directed graph");

    const bool flawed = detail::is_flawed_kind(kind);
    const long long q = static_cast<long long>(dg.size());
    const long long flaw = flawed ? lab.flaw_budget.value_or(0) : 0;
    if (flawed && flaw < 1) {
        vd.fail("flawed kind needs a positive flaw budget");
        return out;
    }
    if (flawed && is_connected(g)) vd.fail("flawed kind requires a disconnected underlying graph");
    if (!flawed && !is_connected(g)) vd.fail("underlying graph must be connected");

    const long long qq = q + flaw;
    const long long vmax = odd ? 2 * qq - 1 : qq;
    std::set<long long> vseen;
    for (const Vertex& v : g.vertices()) {
        long long val = lab.v(v);
        if (val < 0 || val > vmax)
            vd.fail("vertex value " + std::to_string(val) + " escapes [0," + std::to_string(vmax) + "]");
        if (!vseen.insert(val).second) vd.fail("vertex value " + std::to_string(val) + " repeated");
    }
    if (!vd.pass) return out;

    std::vector<long long> mags;
    for (const DirectedGraph::Item& it : dg.items()) {
        long long val = lab.v(it.a) - lab.v(it.b);
        if (it.arc)
            (val > 0 ? out.f_plus : out.f_minus).push_back(val);
        else
            val = std::llabs(val);
        if (val == 0) {
            vd.fail("member (" + it.a + "," + it.b + ") has value 0");
            return out;
        }
        mags.push_back(std::llabs(val));
    }
    std::sort(out.f_plus.begin(), out.f_plus.end());
    std::sort(out.f_minus.begin(), out.f_minus.end());

    std::vector<long long> target;
    for (long long t = 1; t <= qq; ++t) target.push_back(odd ? 2 * t - 1 : t);
    Labelling ulab;
    ulab.kind = kind;
    ulab.vertex_values = lab.vertex_values;
    detail::check_coverage(g, ulab, vd, mags, target, flaw,
                           [&](const Vertex& u, const Vertex& w) -> std::optional<long long> {
                               return std::llabs(lab.v(u) - lab.v(w));
                           });

    if (lab.uniform_flag) {
        if (*lab.uniform_flag == '+' && !out.f_minus.empty())
            vd.fail("uniform + demanded but some arc values are negative");
        else if (*lab.uniform_flag == '-' && !out.f_plus.empty())
            vd.fail("uniform - demanded but some arc values are positive");
        else if (*lab.uniform_flag != '+' && *lab.uniform_flag != '-')
            throw domain_error("uniform flag must be '+' or '-'");
    }
    vd.constants["arcs"] = static_cast<long long>(dg.arc_count());
    vd.constants["edges"] = q - static_cast<long long>(dg.arc_count());
    return out;
}

// ------------------------------------------------------------- orientation

// Orient every edge of a set-ordered graceful graph from its larger-label
// endpoint towards its smaller one (Y to X).  Each arc value equals the
// original edge label, so the result is a uniformly (+) directed labelling
// with the same magnitude multiset.
inline std::pair<DirectedGraph, DirectedLabelling> orient_from_sogl(const Graph& g,
                                                                    const Labelling& lab) {
    bool odd;
    std::string b = detail::base_kind(lab.kind);
    if (b == "set_ordered_graceful")
        odd = false;
    else if (b == "set_ordered_odd_graceful")
        odd = true;
    else
        throw domain_error("orient_from_sogl: non-set-ordered input kind '" + lab.kind + "'");
    Verdict vd = verify(g, lab);
    if (!vd.pass) throw domain_error("orient_from_sogl: input labelling fails:\n" + vd.text());

    DirectedGraph dg;
    for (const Vertex& v : g.vertices()) dg.add_vertex(v);
    std::vector<Edge> es = g.edge_order ? *g.edge_order : g.edges();
    std::vector<Edge> order;
    for (const Edge& e : es) {
        Vertex tail = lab.v(e.a) > lab.v(e.b) ? e.a : e.b;
        dg.add_arc(tail, e.other(tail));
        order.emplace_back(tail, e.other(tail));
    }
    dg.underlying().edge_order = order;
    dg.underlying().bipartition = g.bipartition;
    dg.underlying().code = g.code;

    DirectedLabelling f;
    f.kind = std::string(detail::is_flawed_kind(lab.kind) ? "flawed_" : "") +
             (odd ? "directed_odd_graceful" : "directed_graceful");
    f.vertex_values = lab.vertex_values;
    f.flaw_budget = lab.flaw_budget;
    f.uniform_flag = '+';
    return {dg, f};
}

// ------------------------------------------------------------- matrices

// Column (f(tail), f(tail)-f(head), f(head)) for arcs and
// (f(x), |f(x)-f(y)|, f(y)) for plain edges, in the stored member order; the
// middle row keeps true signs (first row minus third row, exactly).
inline TopsnutMatrix directed_matrix(const DirectedGraph& dg, const DirectedLabelling& lab) {
    if (lab.kind != "raw") {
        DirectedVerdict dv = verify_directed(dg, lab);
        if (!dv.verdict.pass)
            throw domain_error("directed matrix needs a verified labelling:\n" + dv.verdict.text());
    }
    TopsnutMatrix m;
    for (const DirectedGraph::Item& it : dg.items()) {
        long long fa = lab.v(it.a), fb = lab.v(it.b);
        MatrixColumn c;
        c.x = fa;
        c.e = it.arc ? fa - fb : std::llabs(fa - fb);
        c.y = fb;
        m.columns.push_back(c);
        m.edge_binding.emplace_back(Edge(it.a, it.b));
    }
    return m;
}

// O-serialization with the minus sign rendered as the letter 'x'; the matrix
// itself keeps true signs.
inline TBPaw directed_serialize(const TopsnutMatrix& m, const std::string& algo,
                                const std::string& variant = "plain") {
    TBPaw t = serialize_o(m, algo, variant);
    t.trace = "directed_" + t.trace;
    for (TBPawToken& tok : t.tokens)
        for (char& ch : tok.text)
            if (ch == '-') ch = 'x';
    t.text.clear();
    for (const TBPawToken& tok : t.tokens) t.text += tok.text;
    return t;
}

} // namespace topsnut

#endif
