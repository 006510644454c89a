#ifndef TOPSNUT_TEST_UTIL_HPP
#define TOPSNUT_TEST_UTIL_HPP

#include <random>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

namespace tt {

using topsnut::Bipartition;
using topsnut::Edge;
using topsnut::Graph;
using topsnut::Labelling;
using topsnut::Vertex;

inline std::string vname(int i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "v%02d", i);
    return buf;
}

inline Graph path_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(vname(i), vname(i + 1));
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(vname(n - 1), vname(0));
    return g;
}

inline Graph complete_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(vname(i), vname(j));
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g;
    g.add_vertex("c");
    for (int i = 0; i < leaves; ++i) {
        g.add_vertex(vname(i));
        g.add_edge("c", vname(i));
    }
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g;
    for (int i = 0; i < a; ++i) g.add_vertex("a" + std::to_string(i));
    for (int j = 0; j < b; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
    return g;
}

// labelled tree from a Pruefer sequence over {0..n-1}
inline Graph tree_from_pruefer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<int> rest = seq;
    for (int s : rest) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1) {
                g.add_edge(vname(leaf), vname(s));
                --deg[leaf];
                --deg[s];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 1) last.push_back(i);
    g.add_edge(vname(last[0]), vname(last[1]));
    return g;
}

inline Graph random_tree(int n, std::mt19937& rng) {
    if (n == 1) {
        Graph g;
        g.add_vertex(vname(0));
        return g;
    }
    std::vector<int> seq(n - 2);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int& s : seq) s = d(rng);
    return tree_from_pruefer(seq);
}

// every non-isomorphic free tree on n vertices (n <= 9), via Pruefer + AHU dedupe
inline std::vector<Graph> all_trees(int n) {
    std::vector<Graph> out;
    if (n <= 2) {
        out.push_back(path_graph(n));
        return out;
    }
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Graph t = tree_from_pruefer(seq);
        std::string key = topsnut::forest_canonical(t);
        if (seen.insert(key).second) out.push_back(t);
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

// vertex connectivity by max-flow (vertex-capacity split), for oracle checks
inline int kappa_oracle(const Graph& g) {
    int n = static_cast<int>(g.order());
    if (n <= 1) return 0;
    std::vector<Vertex> vs = g.sorted_vertices();
    std::map<Vertex, int> id;
    for (int i = 0; i < n; ++i) id[vs[i]] = i;
    // node 2i = in, 2i+1 = out
    auto maxflow = [&](int s, int t) {
        int N = 2 * n;
        std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
        for (int i = 0; i < n; ++i) cap[2 * i][2 * i + 1] = (i == s || i == t) ? n : 1;
        for (const topsnut::Edge& e : g.edges()) {
            int u = id[e.a], v = id[e.b];
            cap[2 * u + 1][2 * v] = n;
            cap[2 * v + 1][2 * u] = n;
        }
        int flow = 0;
        while (true) {
            std::vector<int> par(N, -1);
            std::queue<int> q;
            q.push(2 * s + 1);
            par[2 * s + 1] = 2 * s + 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w = 0; w < N; ++w)
                    if (par[w] < 0 && cap[v][w] > 0) {
                        par[w] = v;
                        q.push(w);
                    }
            }
            if (par[2 * t] < 0) break;
            int v = 2 * t;
            while (v != 2 * s + 1) {
                cap[par[v]][v] -= 1;
                cap[v][par[v]] += 1;
                v = par[v];
            }
            ++flow;
        }
        return flow;
    };
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(vs[s], vs[t])) best = std::min(best, maxflow(s, t));
    return best;
}

// the 11-vertex two-piece character graph used across the group examples:
// X = {x1..x6}, Y = {y1..y5}, edges e1=x1y5 .. e9=y1x6
inline Graph tian_graph() {
    Graph g;
    g.code = "4476";
    for (int i = 1; i <= 6; ++i) g.add_vertex("x" + std::to_string(i));
    for (int j = 1; j <= 5; ++j) g.add_vertex("y" + std::to_string(j));
    std::vector<std::pair<std::string, std::string>> es = {
        {"x1", "y5"}, {"x1", "y4"}, {"x1", "y3"}, {"y3", "x2"}, {"y3", "x3"},
        {"y3", "x4"}, {"y2", "x4"}, {"y1", "x5"}, {"y1", "x6"}};
    std::vector<Edge> order;
    for (auto& [a, b] : es) {
        g.add_edge(a, b);
        order.emplace_back(a, b);
    }
    g.edge_order = order;
    Bipartition bp;
    for (int i = 1; i <= 6; ++i) bp.x.insert("x" + std::to_string(i));
    for (int j = 1; j <= 5; ++j) bp.y.insert("y" + std::to_string(j));
    g.bipartition = bp;
    return g;
}

// its one-flaw set-ordered graceful labelling: x_i = i-1, y_j = 5+j, label 3 missing
inline Labelling tian_labelling() {
    Labelling f;
    f.kind = "flawed_set_ordered_graceful";
    f.flaw_budget = 1;
    for (int i = 1; i <= 6; ++i) f.vertex_values["x" + std::to_string(i)] = i - 1;
    for (int j = 1; j <= 5; ++j) f.vertex_values["y" + std::to_string(j)] = 5 + j;
    return f;
}

} // namespace tt

#endif
