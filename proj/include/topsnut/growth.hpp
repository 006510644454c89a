#ifndef TOPSNUT_GROWTH_HPP
#define TOPSNUT_GROWTH_HPP

// Self-similar network generation: vertex/edge-coincided copy attachment,
// leaf-replacement tree growth, and Fibonacci vertex/edge planting, together
// with independently evaluated closed-form vertex/edge count predictions,
// degree statistics, a commutativity/associativity checker for the copy
// attachment operation, and a split-decomposition similarity search.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "topsnut/graph.hpp"

namespace topsnut {

inline constexpr long long kGrowthVertexBound = 1'000'000;
inline constexpr std::size_t kMaxSemigroupVertices = 6;
inline constexpr std::size_t kMaxSplitEdges = 24;

struct GrowthSpec {
    // leaf_A | leaf_B | leaf_C | vcoin_I..IV | ecoin_I..IV |
    // fib_vertex | fib_edge | mixed
    std::string algorithm;
    Graph seed;
    std::optional<Vertex> active_vertex;
    std::optional<Edge> active_edge;
    int steps = 0;
    std::optional<unsigned long long> rng_seed;  // probabilistic attachment
    std::vector<std::string> program;            // per-step ops for "mixed"
    std::string edge_convention = "lex";         // or "reversed"
};

struct GrowthStep {
    int t = 0;
    Graph graph;
    long long n_v = 0;
    long long n_e = 0;
    bool has_prediction = false;
    mpz_class pred_v;
    mpz_class pred_e;
};

struct GrowthTrace {
    std::vector<GrowthStep> steps;       // index == time step
    std::vector<long long> r_sequence;   // r(0)=1, r(1)=2, r(t+1)=r(t-1)+r(t)
};

struct DegreeStats {
    std::map<int, long long> histogram;
    std::map<int, double> p;      // empirical P(k)
    std::map<int, double> p_cum;  // P_cum(k) = sum_{k'>k} N(k')/n
    int fit_lo = 1;
    int fit_hi = 1;
    double alpha = 0.0;           // P(k) ~ k^-alpha
    double gamma = 0.0;           // P_cum(k) ~ k^(1-gamma)
    double alpha_residual = 0.0;
    double gamma_residual = 0.0;
};

namespace growth_detail {

struct Net {
    Graph g;
    std::optional<Vertex> av;
    std::optional<Edge> ae;
};

inline void check_bound(long long nv) {
    if (nv > kGrowthVertexBound) throw std::runtime_error("growth bound exceeded");
}

// copies of `cp`, one per host vertex; each copy's active vertex is merged
// with its host vertex (the host's own active vertex included, and it stays
// the active vertex of the result)
inline Net vertex_coincide(const Net& cp, const Net& host, int step, std::mt19937_64* rng) {
    if (!cp.av) throw std::invalid_argument("missing active vertex");
    check_bound(static_cast<long long>(host.g.order()) * static_cast<long long>(cp.g.order()));
    Net out;
    out.g = host.g;
    out.av = host.av;
    out.ae = host.ae;
    std::vector<Vertex> hv = host.g.sorted_vertices();
    std::vector<Vertex> cv = cp.g.sorted_vertices();
    for (std::size_t i = 0; i < hv.size(); ++i) {
        Vertex attach = *cp.av;
        if (rng) attach = cv[(*rng)() % cv.size()];
        std::string pre = "s" + std::to_string(step) + "." + std::to_string(i) + ".";
        auto mapv = [&](const Vertex& u) { return u == attach ? hv[i] : pre + u; };
        for (const Vertex& u : cv)
            if (u != attach) out.g.add_vertex(pre + u);
        for (const Edge& e : cp.g.edges()) out.g.add_edge(mapv(e.a), mapv(e.b));
    }
    return out;
}

// copies of `cp`, one per host edge; each copy's active edge is identified
// with its host edge; endpoint correspondence is lexicographic on both sides
// ("reversed" flips it); with rng the overlapped copy edge and orientation
// are drawn from the stream
inline Net edge_coincide(const Net& cp, const Net& host, int step, const std::string& convention,
                         std::mt19937_64* rng) {
    if (!cp.ae) throw std::invalid_argument("missing active edge");
    check_bound(static_cast<long long>(host.g.order()) +
                static_cast<long long>(host.g.size()) *
                    (static_cast<long long>(cp.g.order()) - 2));
    Net out;
    out.g = host.g;
    out.av = host.av;
    out.ae = host.ae;
    std::vector<Edge> he = host.g.edges();
    std::sort(he.begin(), he.end());
    std::vector<Vertex> cv = cp.g.sorted_vertices();
    for (std::size_t i = 0; i < he.size(); ++i) {
        auto [p, q] = he[i].key();
        Edge overlap = *cp.ae;
        bool flip = (convention == "reversed");
        if (rng) {
            overlap = cp.g.edges()[(*rng)() % cp.g.size()];
            flip = ((*rng)() & 1) != 0;
        }
        auto [a, b] = overlap.key();
        if (flip) std::swap(a, b);
        std::string pre = "s" + std::to_string(step) + "." + std::to_string(i) + ".";
        auto mapv = [&](const Vertex& u) {
            if (u == a) return p;
            if (u == b) return q;
            return pre + u;
        };
        for (const Vertex& u : cv)
            if (u != a && u != b) out.g.add_vertex(pre + u);
        for (const Edge& e : cp.g.edges())
            if (!(e == overlap)) out.g.add_edge(mapv(e.a), mapv(e.b));
    }
    return out;
}

inline bool is_vcoin(const std::string& s) { return s.rfind("vcoin", 0) == 0; }
inline bool is_ecoin(const std::string& s) { return s.rfind("ecoin", 0) == 0; }

inline std::vector<Vertex> leaves_of(const Graph& g) {
    std::vector<Vertex> out;
    for (const Vertex& v : g.sorted_vertices())
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// one leaf-replacement round: delete the listed host leaves, then attach one
// copy of `part` at each ex-neighbour by merging the copy's `hook` vertex
inline Graph leaf_round(const Graph& host, const std::vector<Vertex>& drop, const Graph& part,
                        const Vertex& hook, int step) {
    std::vector<Vertex> anchors;
    Graph out = host;
    for (const Vertex& u : drop) {
        if (out.degree(u) != 1) throw std::domain_error("leaf round: '" + u + "' is not a leaf");
        anchors.push_back(*out.neighbors(u).begin());
        out.remove_vertex(u);
    }
    check_bound(static_cast<long long>(out.order()) +
                static_cast<long long>(anchors.size()) *
                    (static_cast<long long>(part.order()) - 1));
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::string pre = "s" + std::to_string(step) + "." + std::to_string(i) + ".";
        auto mapv = [&](const Vertex& u) { return u == hook ? anchors[i] : pre + u; };
        for (const Vertex& u : part.sorted_vertices())
            if (u != hook) out.add_vertex(pre + u);
        for (const Edge& e : part.edges()) out.add_edge(mapv(e.a), mapv(e.b));
    }
    return out;
}

}  // namespace growth_detail

// r(0)=1, r(1)=2, r(t+1)=r(t-1)+r(t)
inline std::vector<long long> r_sequence(int upto) {
    std::vector<long long> r{1, 2};
    while (static_cast<int>(r.size()) <= upto) r.push_back(r[r.size() - 2] + r[r.size() - 1]);
    r.resize(static_cast<std::size_t>(upto) + 1);
    return r;
}

// Fibonacci numbers F_1=1, F_2=1, F_{k+1}=F_{k-1}+F_k
inline mpz_class fibonacci(int n) {
    mpz_class f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// level sizes |V_0..V_t| of the Fibonacci planting process on a seed with
// alpha0 vertices: |V_0|=alpha0, |V_t| = (alpha0-1) * sum F_{t-j}|V_j|
inline std::vector<mpz_class> fib_level_sizes(long long alpha0, int t) {
    std::vector<mpz_class> v{mpz_class(static_cast<long>(alpha0))};
    for (int s = 1; s <= t; ++s) {
        mpz_class total = 0;
        for (int j = 0; j < s; ++j) total += fibonacci(s - j) * v[static_cast<std::size_t>(j)];
        v.push_back((mpz_class(static_cast<long>(alpha0)) - 1) * total);
    }
    return v;
}

// number of copies planted at step t: sum_{j=0}^{t-1} F_{t-j} |V_j|
inline mpz_class fib_planting_total(long long alpha0, int t) {
    std::vector<mpz_class> v = fib_level_sizes(alpha0, t - 1);
    mpz_class total = 0;
    for (int j = 0; j < t; ++j) total += fibonacci(t - j) * v[static_cast<std::size_t>(j)];
    return total;
}

inline std::pair<mpz_class, mpz_class> predicted_counts(const GrowthSpec& spec, int t) {
    if (t < 0) throw std::invalid_argument("negative time step");
    const std::string& algo = spec.algorithm;
    mpz_class a0(static_cast<long>(spec.seed.order()));
    mpz_class b0(static_cast<long>(spec.seed.size()));
    if (t == 0 && algo != "mixed") return {a0, b0};
    if (algo == "vcoin_I" || algo == "vcoin_II") {
        std::vector<long long> r = r_sequence(t);
        mpz_class nv, ne = 0, pw = 1;
        mpz_pow_ui(nv.get_mpz_t(), a0.get_mpz_t(), static_cast<unsigned long>(r[t]));
        for (long long k = 0; k < r[t]; ++k) {
            ne += pw;
            pw *= a0;
        }
        return {nv, b0 * ne};
    }
    if (algo == "vcoin_III") {
        mpz_class v = a0, e = b0;
        for (int s = 0; s < t; ++s) {
            e = e * (v + 1);
            v = v * v;
        }
        return {v, e};
    }
    if (algo == "ecoin_I" || algo == "ecoin_II") {
        std::vector<long long> r = r_sequence(t);
        mpz_class me, sum = 0, pw = 1;
        mpz_pow_ui(me.get_mpz_t(), b0.get_mpz_t(), static_cast<unsigned long>(r[t]));
        for (long long k = 0; k < r[t]; ++k) {
            sum += pw;
            pw *= b0;
        }
        return {2 + (a0 - 2) * sum, me};
    }
    if (algo == "ecoin_III") {
        mpz_class v = a0, e = b0;
        for (int s = 0; s < t; ++s) {
            v = v + e * (v - 2);
            e = e * e;
        }
        return {v, e};
    }
    if (algo == "vcoin_IV" || algo == "ecoin_IV") {
        bool vc = (algo == "vcoin_IV");
        // copies of A attached over host B
        auto comp = [&](std::pair<mpz_class, mpz_class> A,
                        std::pair<mpz_class, mpz_class> B) -> std::pair<mpz_class, mpz_class> {
            if (vc) return {mpz_class(A.first * B.first), mpz_class(B.second + B.first * A.second)};
            return {mpz_class(B.first + B.second * (A.first - 2)), mpz_class(A.second * B.second)};
        };
        std::vector<std::pair<mpz_class, mpz_class>> h{{a0, b0}};
        for (int s = 1; s <= t; ++s) {
            if (s == 1)
                h.push_back(comp(h[0], h[0]));
            else if (s == 2)
                h.push_back(comp(h[0], h[1]));
            else
                h.push_back(comp(comp(h[s - 3], h[s - 2]), h[s - 1]));
        }
        return h[static_cast<std::size_t>(t)];
    }
    if (algo == "leaf_A" || algo == "leaf_B") {
        std::vector<Vertex> ls = growth_detail::leaves_of(spec.seed);
        long long m = static_cast<long long>(ls.size());
        if (algo == "leaf_A") {
            if (!spec.active_vertex) throw std::invalid_argument("missing active vertex");
            for (const Vertex& u : ls)
                if (u == *spec.active_vertex) --m;
        }
        mpz_class mm(static_cast<long>(m));
        mpz_class pw, sum = 0, p = 1;
        mpz_pow_ui(pw.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(t));
        for (int k = 0; k < t; ++k) {
            sum += p;
            p *= mm;
        }
        mpz_class v = a0 * pw + (a0 - 2 * mm) * sum;
        return {v, v - 1};
    }
    if (algo == "leaf_C") {
        mpz_class v = a0;
        mpz_class m(static_cast<long>(growth_detail::leaves_of(spec.seed).size()));
        for (int s = 0; s < t; ++s) {
            v = v * (1 + m) - 2 * m;
            m = m * m;
        }
        return {v, v - 1};
    }
    if (algo == "fib_vertex" || algo == "fib_edge") {
        long long alpha0 = static_cast<long long>(spec.seed.order());
        mpz_class beta0 = b0;
        mpz_class nv = a0, ne = beta0;
        for (int s = 1; s <= t; ++s) {
            mpz_class S = fib_planting_total(alpha0, s);
            if (algo == "fib_vertex") {
                nv += (mpz_class(static_cast<long>(alpha0)) - 1) * S;
                ne += beta0 * S;
            } else {
                nv += mpz_class(static_cast<long>(alpha0)) * S;
                ne += (beta0 + 1) * S;
            }
        }
        return {nv, ne};
    }
    throw std::domain_error("no closed form for algorithm '" + algo + "': unsupported");
}

inline GrowthTrace grow(const GrowthSpec& spec) {
    using growth_detail::Net;
    if (spec.steps < 0) throw std::invalid_argument("steps must be non-negative");
    const std::string& algo = spec.algorithm;
    static const std::set<std::string> kKnown{
        "leaf_A", "leaf_B", "leaf_C", "vcoin_I", "vcoin_II", "vcoin_III", "vcoin_IV",
        "ecoin_I", "ecoin_II", "ecoin_III", "ecoin_IV", "fib_vertex", "fib_edge", "mixed"};
    if (!kKnown.count(algo)) throw std::invalid_argument("unknown growth algorithm '" + algo + "'");
    std::optional<std::mt19937_64> rng;
    if (spec.rng_seed) rng.emplace(*spec.rng_seed);
    std::mt19937_64* rp = rng ? &*rng : nullptr;

    std::vector<std::string> ops;
    if (algo == "mixed") {
        ops = spec.program;
        if (static_cast<int>(ops.size()) < spec.steps)
            throw std::invalid_argument("mixed program shorter than step count");
    }

    bool needs_av = growth_detail::is_vcoin(algo) || algo == "fib_vertex" ||
                    algo == "fib_edge" || algo == "leaf_A";
    bool needs_ae = growth_detail::is_ecoin(algo);
    for (const std::string& op : ops) {
        needs_av = needs_av || growth_detail::is_vcoin(op);
        needs_ae = needs_ae || growth_detail::is_ecoin(op);
    }
    if (needs_av) {
        if (!spec.active_vertex || !spec.seed.has_vertex(*spec.active_vertex))
            throw std::invalid_argument("missing active vertex");
    }
    if (needs_ae) {
        if (!spec.active_edge || !spec.seed.has_edge(spec.active_edge->a, spec.active_edge->b))
            throw std::invalid_argument("missing active edge");
    }

    GrowthTrace tr;
    tr.r_sequence = r_sequence(std::max(spec.steps, 1));
    auto record = [&](int t, const Graph& g) {
        GrowthStep st;
        st.t = t;
        st.graph = g;
        st.n_v = static_cast<long long>(g.order());
        st.n_e = static_cast<long long>(g.size());
        try {
            auto [pv, pe] = predicted_counts(spec, t);
            st.pred_v = pv;
            st.pred_e = pe;
            st.has_prediction = true;
        } catch (const std::domain_error&) {
            st.has_prediction = false;
        }
        tr.steps.push_back(std::move(st));
    };
    record(0, spec.seed);

    if (growth_detail::is_vcoin(algo) || growth_detail::is_ecoin(algo) || algo == "mixed") {
        Net seed{spec.seed, spec.active_vertex, spec.active_edge};
        std::vector<Net> hist{seed};
        for (int t = 1; t <= spec.steps; ++t) {
            std::string op = (algo == "mixed") ? ops[static_cast<std::size_t>(t - 1)] : algo;
            bool vc = growth_detail::is_vcoin(op);
            auto apply = [&](const Net& cp, const Net& host) {
                return vc ? growth_detail::vertex_coincide(cp, host, t, rp)
                          : growth_detail::edge_coincide(cp, host, t, spec.edge_convention, rp);
            };
            const Net& cur = hist.back();
            const Net& prev = hist[hist.size() >= 2 ? hist.size() - 2 : 0];
            Net next;
            if (t == 1)
                next = apply(cur, cur);
            else if (op == "vcoin_I" || op == "ecoin_II")
                next = apply(cur, prev);  // copies of N(t) over host N(t-1)
            else if (op == "vcoin_II" || op == "ecoin_I")
                next = apply(prev, cur);  // copies of N(t-1) over host N(t)
            else if (op == "vcoin_III" || op == "ecoin_III")
                next = apply(cur, cur);
            else if (op == "vcoin_IV" || op == "ecoin_IV") {
                if (t == 2)
                    next = apply(hist[0], hist[1]);
                else
                    next = apply(apply(hist[static_cast<std::size_t>(t - 3)],
                                       hist[static_cast<std::size_t>(t - 2)]),
                                 hist.back());
            } else
                throw std::invalid_argument("unknown growth operation '" + op + "'");
            hist.push_back(next);
            record(t, next.g);
        }
        return tr;
    }

    if (algo == "fib_vertex" || algo == "fib_edge") {
        // rename seed vertices to (level, ordinal) tags "0.1".."0.n"
        Graph g;
        std::vector<std::vector<Vertex>> levels(1);
        Vertex active;
        {
            std::map<Vertex, Vertex> ren;
            std::vector<Vertex> sv = spec.seed.sorted_vertices();
            for (std::size_t i = 0; i < sv.size(); ++i) {
                Vertex nm = "0." + std::to_string(i + 1);
                ren[sv[i]] = nm;
                g.add_vertex(nm);
                levels[0].push_back(nm);
            }
            for (const Edge& e : spec.seed.edges()) g.add_edge(ren[e.a], ren[e.b]);
            active = ren[*spec.active_vertex];
        }
        std::vector<Vertex> sv0 = g.sorted_vertices();  // copy template
        std::vector<Edge> se0 = g.edges();
        long long alpha0 = static_cast<long long>(g.order());
        for (int t = 1; t <= spec.steps; ++t) {
            mpz_class plantings = fib_planting_total(alpha0, t);
            mpz_class newv =
                plantings * mpz_class(static_cast<long>(algo == "fib_vertex" ? alpha0 - 1 : alpha0));
            mpz_class bound = newv + static_cast<long>(g.order());
            if (bound > static_cast<long>(kGrowthVertexBound))
                throw std::runtime_error("growth bound exceeded");
            levels.emplace_back();
            long long ordinal = 0, connector = 0;
            // plant F_{t-i} seed copies on every level-i vertex, i in [0, t-1]
            for (int i = 0; i < t; ++i) {
                mpz_class fc = fibonacci(t - i);
                long long copies = fc.get_si();
                for (const Vertex& x : levels[static_cast<std::size_t>(i)]) {
                    for (long long c = 0; c < copies; ++c) {
                        std::map<Vertex, Vertex> mp;
                        for (const Vertex& u : sv0) {
                            if (u == active && algo == "fib_vertex") {
                                mp[u] = x;
                                continue;
                            }
                            Vertex nm;
                            if (u == active)  // fib_edge connector, not levelled
                                nm = std::to_string(t) + ".c" + std::to_string(++connector);
                            else {
                                nm = std::to_string(t) + "." + std::to_string(++ordinal);
                                levels.back().push_back(nm);
                            }
                            mp[u] = nm;
                            g.add_vertex(nm);
                        }
                        for (const Edge& e : se0) g.add_edge(mp[e.a], mp[e.b]);
                        if (algo == "fib_edge") g.add_edge(x, mp[active]);
                    }
                }
            }
            record(t, g);
        }
        return tr;
    }

    // leaf algorithms
    if (spec.seed.order() < 3) throw std::invalid_argument("leaf algorithms need >= 3 vertices");
    if (!is_connected(spec.seed) || !is_acyclic(spec.seed))
        throw std::invalid_argument("leaf algorithms need a tree seed");
    Graph cur = spec.seed;
    Vertex root0, part_root;
    if (algo == "leaf_A") root0 = part_root = *spec.active_vertex;
    for (int t = 1; t <= spec.steps; ++t) {
        Graph host;
        std::vector<Vertex> drop;
        if (algo == "leaf_C") {
            host = cur;
            drop = growth_detail::leaves_of(host);
        } else {
            // host is a fresh seed copy under a step namespace so names from
            // earlier rounds cannot collide
            std::string pre = "h" + std::to_string(t) + ".";
            for (const Vertex& u : spec.seed.sorted_vertices()) host.add_vertex(pre + u);
            for (const Edge& e : spec.seed.edges()) host.add_edge(pre + e.a, pre + e.b);
            for (const Vertex& u : growth_detail::leaves_of(spec.seed))
                if (!(algo == "leaf_A" && u == root0)) drop.push_back(pre + u);
        }
        Vertex hook;
        if (algo == "leaf_A")
            hook = part_root;  // the copy's root image merges with the anchor
        else {
            // any copy vertex works for the counts; prefer a non-leaf so the
            // leaf census of leaf_C squares each round
            std::vector<Vertex> pl = growth_detail::leaves_of(cur);
            std::set<Vertex> plset(pl.begin(), pl.end());
            for (const Vertex& u : cur.sorted_vertices())
                if (!plset.count(u)) {
                    hook = u;
                    break;
                }
            if (hook.empty()) hook = cur.sorted_vertices().front();
        }
        cur = growth_detail::leaf_round(host, drop, cur, hook, t);
        if (algo == "leaf_A") part_root = "h" + std::to_string(t) + "." + root0;
        record(t, cur);
    }
    return tr;
}

inline DegreeStats degree_stats(const Graph& g, int fit_lo = 1, int fit_hi = -1) {
    if (g.order() < 2) throw std::invalid_argument("degree_stats needs at least two vertices");
    DegreeStats s;
    int maxd = 0;
    for (const Vertex& v : g.vertices()) {
        int d = static_cast<int>(g.degree(v));
        ++s.histogram[d];
        maxd = std::max(maxd, d);
    }
    double n = static_cast<double>(g.order());
    for (int k = 0; k <= maxd; ++k) {
        long long c = s.histogram.count(k) ? s.histogram[k] : 0;
        s.p[k] = static_cast<double>(c) / n;
    }
    double tail = 0.0;
    for (int k = maxd; k >= 0; --k) {
        s.p_cum[k] = tail;  // strictly greater degrees only
        tail += s.p[k];
    }
    bool explicit_range = fit_hi >= 0;
    if (fit_hi < 0) fit_hi = maxd;
    s.fit_lo = fit_lo;
    s.fit_hi = fit_hi;
    auto fit = [&](const std::map<int, double>& ys, double& slope, double& resid) -> bool {
        std::vector<std::pair<double, double>> pts;
        for (int k = std::max(fit_lo, 1); k <= fit_hi; ++k) {
            auto it = ys.find(k);
            if (it != ys.end() && it->second > 0)
                pts.emplace_back(std::log(static_cast<double>(k)), std::log(it->second));
        }
        if (pts.size() < 2) return false;
        double sx = 0, sy = 0, sxx = 0, sxy = 0, m = static_cast<double>(pts.size());
        for (auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double den = m * sxx - sx * sx;
        if (den == 0) return false;
        slope = (m * sxy - sx * sy) / den;
        double icpt = (sy - slope * sx) / m;
        resid = 0;
        for (auto& [x, y] : pts) {
            double d = y - (slope * x + icpt);
            resid += d * d;
        }
        resid /= m;
        return true;
    };
    double sl = 0, rs = 0;
    bool ap = fit(s.p, sl, rs);
    if (ap) {
        s.alpha = -sl;
        s.alpha_residual = rs;
    }
    bool gp = fit(s.p_cum, sl, rs);
    if (gp) {
        s.gamma = 1 - sl;
        s.gamma_residual = rs;
    }
    if (explicit_range && !ap && !gp) throw std::domain_error("degenerate fit range");
    return s;
}

struct SemigroupReport {
    bool commutative = true;
    bool associative = true;
    std::vector<std::string> counterexamples;
    bool pass() const { return commutative && associative; }
};

namespace growth_detail {

inline bool same_shape(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (is_acyclic(a) && is_acyclic(b)) return forest_canonical(a) == forest_canonical(b);
    if (a.order() <= static_cast<std::size_t>(kMaxIsoVertices)) return is_isomorphic(a, b);
    throw std::domain_error("shape comparison beyond supported size");
}

}  // namespace growth_detail

// checks the copy-attachment operation for commutativity and associativity
// on a sample of rooted graphs (graph, active vertex)
inline SemigroupReport semigroup_check(const std::vector<std::pair<Graph, Vertex>>& gs) {
    using growth_detail::Net;
    if (gs.empty() || gs.size() > 3) throw std::invalid_argument("semigroup check takes 1..3 graphs");
    std::vector<Net> nets;
    for (const auto& [g, av] : gs) {
        if (g.order() > kMaxSemigroupVertices)
            throw std::invalid_argument("semigroup check graphs capped at 6 vertices");
        if (!g.has_vertex(av)) throw std::invalid_argument("missing active vertex");
        nets.push_back(Net{g, av, std::nullopt});
    }
    auto dot = [](const Net& a, const Net& b) {
        static int uniq = 0;
        return growth_detail::vertex_coincide(a, b, 1000 + (uniq++ % 1000), nullptr);
    };
    SemigroupReport rep;
    for (std::size_t i = 0; i < nets.size(); ++i)
        for (std::size_t j = i + 1; j < nets.size(); ++j) {
            Net ab = dot(nets[i], nets[j]);
            Net ba = dot(nets[j], nets[i]);
            if (!growth_detail::same_shape(ab.g, ba.g)) {
                rep.commutative = false;
                rep.counterexamples.push_back("commutativity fails for graphs " +
                                              std::to_string(i) + "," + std::to_string(j));
            }
        }
    if (nets.size() == 3) {
        Net l = dot(dot(nets[0], nets[1]), nets[2]);
        Net r = dot(nets[0], dot(nets[1], nets[2]));
        if (!growth_detail::same_shape(l.g, r.g)) {
            rep.associative = false;
            rep.counterexamples.push_back("associativity fails for graphs 0,1,2");
        }
    }
    return rep;
}

struct SplitWitness {
    std::vector<std::vector<Edge>> parts;  // each part is isomorphic to g0
};

namespace growth_detail {

// all distinct edge sets of subgraphs of g isomorphic to g0
inline std::vector<std::vector<Edge>> embeddings(const Graph& g, const Graph& g0) {
    std::vector<Vertex> pat = g0.sorted_vertices();
    // order pattern vertices so each (after the first in its component)
    // touches an earlier one, for edge-driven pruning
    std::vector<Vertex> order;
    std::set<Vertex> placed;
    while (order.size() < pat.size()) {
        bool grew = false;
        for (const Vertex& u : pat) {
            if (placed.count(u)) continue;
            bool anchored = order.empty();
            for (const Vertex& w : order)
                if (g0.has_edge(u, w)) anchored = true;
            if (anchored || order.empty()) {
                order.push_back(u);
                placed.insert(u);
                grew = true;
                break;
            }
        }
        if (!grew) {  // disconnected pattern: seed next component
            for (const Vertex& u : pat)
                if (!placed.count(u)) {
                    order.push_back(u);
                    placed.insert(u);
                    break;
                }
        }
    }
    std::vector<Vertex> hosts = g.sorted_vertices();
    std::set<std::set<std::pair<Vertex, Vertex>>> seen;
    std::vector<std::vector<Edge>> out;
    std::map<Vertex, Vertex> mp;
    std::set<Vertex> used;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (out.size() > 5000) return;
        if (idx == order.size()) {
            std::set<std::pair<Vertex, Vertex>> key;
            std::vector<Edge> es;
            for (const Edge& e : g0.edges()) {
                Edge img(mp[e.a], mp[e.b]);
                key.insert(img.key());
                es.push_back(img);
            }
            if (seen.insert(key).second) out.push_back(es);
            return;
        }
        const Vertex& u = order[idx];
        for (const Vertex& h : hosts) {
            if (used.count(h)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < idx && ok; ++k)
                if (g0.has_edge(u, order[k]) && !g.has_edge(h, mp[order[k]])) ok = false;
            if (!ok) continue;
            mp[u] = h;
            used.insert(h);
            rec(idx + 1);
            used.erase(h);
            mp.erase(u);
        }
    };
    rec(0);
    return out;
}

}  // namespace growth_detail

// searches for subgraphs H_j isomorphic to g0 whose edges cover E(g); in
// vertex mode the parts must be pairwise edge-disjoint (an exact partition),
// in edge/mixed modes overlapping parts are allowed
inline std::optional<SplitWitness> split_similarity_check(const Graph& g, const Graph& g0,
                                                          const std::string& mode) {
    if (mode != "vertex" && mode != "edge" && mode != "mixed")
        throw std::invalid_argument("unknown split mode '" + mode + "'");
    if (g.size() > kMaxSplitEdges) throw std::invalid_argument("split check capped at 24 edges");
    if (g0.size() == 0 || g.size() == 0) return std::nullopt;
    bool disjoint = (mode == "vertex");
    if (disjoint && g.size() % g0.size() != 0) return std::nullopt;
    std::vector<std::vector<Edge>> cand = growth_detail::embeddings(g, g0);
    std::vector<Edge> all = g.edges();
    std::map<std::pair<Vertex, Vertex>, int> eidx;
    for (std::size_t i = 0; i < all.size(); ++i) eidx[all[i].key()] = static_cast<int>(i);
    std::vector<std::vector<int>> csets;
    for (auto& es : cand) {
        std::vector<int> s;
        for (const Edge& e : es) s.push_back(eidx[e.key()]);
        std::sort(s.begin(), s.end());
        csets.push_back(s);
    }
    std::vector<bool> covered(all.size(), false);
    std::vector<int> chosen;
    std::function<bool()> rec = [&]() -> bool {
        int target = -1;
        for (std::size_t i = 0; i < covered.size(); ++i)
            if (!covered[i]) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) return true;
        for (std::size_t c = 0; c < csets.size(); ++c) {
            bool hits = false, clash = false;
            for (int e : csets[c]) {
                if (e == target) hits = true;
                if (covered[static_cast<std::size_t>(e)]) clash = true;
            }
            if (!hits || (disjoint && clash)) continue;
            std::vector<int> newly;
            for (int e : csets[c])
                if (!covered[static_cast<std::size_t>(e)]) {
                    covered[static_cast<std::size_t>(e)] = true;
                    newly.push_back(e);
                }
            chosen.push_back(static_cast<int>(c));
            if (rec()) return true;
            chosen.pop_back();
            for (int e : newly) covered[static_cast<std::size_t>(e)] = false;
        }
        return false;
    };
    if (!rec()) return std::nullopt;
    SplitWitness w;
    for (int c : chosen) w.parts.push_back(cand[static_cast<std::size_t>(c)]);
    return w;
}

inline std::string serialize_trace(const GrowthTrace& tr, bool with_graphs = false) {
    std::string out;
    for (const GrowthStep& st : tr.steps) {
        out += "step " + std::to_string(st.t) + ": n_v=" + std::to_string(st.n_v) +
               " n_e=" + std::to_string(st.n_e);
        if (st.has_prediction)
            out += " pred_v=" + st.pred_v.get_str() + " pred_e=" + st.pred_e.get_str();
        else
            out += " pred_v=? pred_e=?";
        out += "\n";
        if (with_graphs) out += serialize_graph(st.graph);
    }
    return out;
}

inline std::string serialize_degree_stats(const DegreeStats& s) {
    std::string out = "k count P Pcum\n";
    int maxd = s.histogram.empty() ? 0 : s.histogram.rbegin()->first;
    char buf[96];
    for (int k = 0; k <= maxd; ++k) {
        long long c = s.histogram.count(k) ? s.histogram.at(k) : 0;
        double p = s.p.count(k) ? s.p.at(k) : 0.0;
        double pc = s.p_cum.count(k) ? s.p_cum.at(k) : 0.0;
        std::snprintf(buf, sizeof buf, "%d %lld %.6g %.6g\n", k, c, p, pc);
        out += buf;
    }
    return out;
}

}  // namespace topsnut

#endif
