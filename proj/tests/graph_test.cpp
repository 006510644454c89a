#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "topsnut/graph.hpp"

using namespace topsnut;

static const char* kSmallCorpus = R"(
# two toy records
graph 4043 "small tree" {
  vertices: 3, 4, 5, 86, 87, 88;
  edges: (5,86), (4,86), (87,4), (88,4), (88,3);
  edge_order: (5,86), (4,86), (87,4), (88,4), (88,3);
}
graph c4 {
  vertices: a, b, c, d;
  edges: (a,b), (b,c), (c,d), (d,a);
  bipartition: {a,c} | {b,d};
  coords: a:(0,0), b:(1,0), c:(1,1), d:(0,1);
}
)";

TEST_CASE("corpus round trip") {
    std::istringstream in(kSmallCorpus);
    auto gs = load_corpus(in);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].code == "4043");
    CHECK(gs[0].name == "small tree");
    CHECK(gs[0].order() == 6);
    CHECK(gs[0].size() == 5);
    REQUIRE(gs[0].edge_order.has_value());
    CHECK(gs[0].edge_order->front().a == "5");
    CHECK(gs[1].bipartition.has_value());
    CHECK(gs[1].coords.at("c") == std::make_pair(1ll, 1ll));

    // serialize + reparse is stable
    std::string text = serialize_graph(gs[0]) + serialize_graph(gs[1]);
    std::istringstream in2(text);
    auto gs2 = load_corpus(in2);
    REQUIRE(gs2.size() == 2);
    CHECK(serialize_graph(gs2[0]) == serialize_graph(gs[0]));
    CHECK(serialize_graph(gs2[1]) == serialize_graph(gs[1]));
}

TEST_CASE("corpus rejects malformed input") {
    auto bad = [](const char* s) {
        std::istringstream in(s);
        CHECK_THROWS_AS(load_corpus(in), parse_error);
    };
    bad("graph g { vertices: a; edges: (a,a); }");          // self-loop -> parse failure
    bad("graph g { vertices: a,b; edges: (a,b),(b,a); }");  // duplicate edge
    bad("graph g { edges: (a,b); }");                       // no vertices
    bad("graph g { vertices: a,b; edges: (a,c); }");        // unknown endpoint
    bad("graph g { vertices: a,b,c; edges: (a,b),(b,c); bipartition: {a,b} | {c}; }");
    bad("graph g { vertices: a; } graph g { vertices: b; }"); // duplicate code
}

TEST_CASE("components are order-stable by smallest vertex id") {
    Graph g;
    for (auto v : {"m", "z", "a", "k"}) g.add_vertex(v);
    g.add_edge("z", "k");
    auto cs = components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].has_vertex("a"));
    CHECK(cs[1].has_vertex("k"));
    CHECK(cs[2].has_vertex("m"));
}

TEST_CASE("classify") {
    CHECK(classify(tt::path_graph(5)) ==
          std::vector<std::string>{"forest", "tree", "caterpillar", "lobster", "bipartite"});
    auto c4 = classify(tt::cycle_graph(4));
    CHECK(std::count(c4.begin(), c4.end(), "cycle") == 1);
    CHECK(std::count(c4.begin(), c4.end(), "euler") == 1);
    CHECK(std::count(c4.begin(), c4.end(), "bipartite") == 1);
    CHECK(std::count(c4.begin(), c4.end(), "tree") == 0);
    auto c5 = classify(tt::cycle_graph(5));
    CHECK(std::count(c5.begin(), c5.end(), "bipartite") == 0);
    CHECK(std::count(c5.begin(), c5.end(), "cycle") == 1);

    // star is a caterpillar; spider with three legs of length 2 is a lobster only
    Graph spider;
    spider.add_vertex("c");
    for (int i = 0; i < 3; ++i) {
        std::string m = "m" + std::to_string(i), l = "l" + std::to_string(i);
        spider.add_vertex(m);
        spider.add_vertex(l);
        spider.add_edge("c", m);
        spider.add_edge(m, l);
    }
    auto sp = classify(spider);
    CHECK(std::count(sp.begin(), sp.end(), "caterpillar") == 0);
    CHECK(std::count(sp.begin(), sp.end(), "lobster") == 1);
    auto st = classify(tt::star_graph(5));
    CHECK(std::count(st.begin(), st.end(), "caterpillar") == 1);
}

TEST_CASE("vertex split and coincide round trip") {
    Graph g = tt::cycle_graph(4);
    GraphOp sp{"vertex_split", {"v00"}, {}, {"v01"}, {}};
    auto r = apply_graph_op(g, sp);
    CHECK(r.graph.order() == 5);
    CHECK(r.graph.size() == 4);
    REQUIRE(r.vertex_map.at("v00").size() == 2);
    CHECK_FALSE(is_connected(r.graph) == false); // splitting one cycle vertex keeps it connected (a path)
    auto pieces = r.vertex_map.at("v00");
    GraphOp co{"vertex_coincide", {pieces[0], pieces[1]}, {}, {}, {}};
    auto back = apply_graph_op(r.graph, co);
    CHECK(is_isomorphic(back.graph, g));
}

TEST_CASE("half edge split and coincide round trip") {
    Graph g = tt::star_graph(4);
    GraphOp sp{"half_edge_split", {"c"}, {Edge("c", "v00")}, {"v01"}, {}};
    auto r = apply_graph_op(g, sp);
    CHECK(r.graph.order() == 6);
    CHECK(r.graph.size() == 5); // edge count grows by one: both copies join w
    auto pieces = r.vertex_map.at("c");
    // the two copies share exactly one neighbour (v00), so coincide applies
    GraphOp co{"half_edge_coincide", {pieces[0], pieces[1]}, {}, {}, {}};
    auto back = apply_graph_op(r.graph, co);
    CHECK(is_isomorphic(back.graph, g));
}

TEST_CASE("edge split and subdivide/contract") {
    Graph g = tt::cycle_graph(5);
    GraphOp es{"edge_split", {}, {Edge("v00", "v01")}, {"v04"}, {"v02"}};
    auto r = apply_graph_op(g, es);
    CHECK(r.graph.order() == 7);  // +2 vertices
    CHECK(r.graph.size() == 6);   // +1 edge
    GraphOp sub{"edge_subdivide", {}, {Edge("v00", "v01")}, {}, {}};
    auto rs = apply_graph_op(g, sub);
    CHECK(is_isomorphic(rs.graph, tt::cycle_graph(6)));
    GraphOp con{"edge_contract", {}, {Edge("v00", "v01")}, {}, {}};
    auto rc = apply_graph_op(g, con);
    CHECK(is_isomorphic(rc.graph, tt::cycle_graph(4)));
    // subdividing then contracting the new edge restores the graph
    Vertex w;
    for (const Vertex& v : rs.graph.vertices())
        if (!g.has_vertex(v)) w = v;
    GraphOp con2{"edge_contract", {}, {Edge(w, "v01")}, {}, {}};
    CHECK(is_isomorphic(apply_graph_op(rs.graph, con2).graph, g));
}

TEST_CASE("edge coincide merges two disjoint edges") {
    Graph g;
    for (auto v : {"a", "b", "c", "d"}) g.add_vertex(v);
    g.add_edge("a", "b");
    g.add_edge("c", "d");
    GraphOp co{"edge_coincide", {}, {Edge("a", "b"), Edge("c", "d")}, {}, {}};
    auto r = apply_graph_op(g, co);
    CHECK(r.graph.order() == 2);
    CHECK(r.graph.size() == 1);
    CHECK(r.vertex_map.at("c") == std::vector<Vertex>{"a"});
}

TEST_CASE("graph op rejects bad operands") {
    Graph g = tt::path_graph(4);
    CHECK_THROWS_AS(apply_graph_op(g, GraphOp{"vertex_split", {"v09"}, {}, {}, {}}), domain_error);
    CHECK_THROWS_AS(apply_graph_op(g, GraphOp{"vertex_coincide", {"v00", "v01"}, {}, {}, {}}),
                    domain_error); // adjacent
    CHECK_THROWS_AS(apply_graph_op(g, GraphOp{"edge_contract", {}, {Edge("v00", "v02")}, {}, {}}),
                    domain_error); // not an edge
    CHECK_THROWS_AS(apply_graph_op(g, GraphOp{"nonsense", {}, {}, {}, {}}), domain_error);
}

TEST_CASE("divided connectivity (vertex mode) matches the max-flow oracle") {
    std::vector<Graph> suite = {tt::path_graph(5),  tt::cycle_graph(6), tt::complete_graph(5),
                                tt::star_graph(6),  tt::complete_bipartite(2, 3),
                                tt::complete_bipartite(3, 3)};
    Graph wheel = tt::cycle_graph(5);
    wheel.add_vertex("hub");
    for (int i = 0; i < 5; ++i) wheel.add_edge("hub", tt::vname(i));
    suite.push_back(wheel);
    for (const Graph& g : suite)
        CHECK(divided_connectivity(g, "v") == tt::kappa_oracle(g));
}

TEST_CASE("divided connectivity (edge mode)") {
    // e-splitting rips both endpoints, so one edge can disconnect a path
    CHECK(divided_connectivity(tt::path_graph(4), "e") == 1);
    CHECK(divided_connectivity(tt::path_graph(6), "e") == 1);
    CHECK(divided_connectivity(tt::cycle_graph(6), "e") == 2);
    // too few untouched vertices remain on C_4/K_4: no valid e-division exists
    CHECK_THROWS_AS(divided_connectivity(tt::cycle_graph(4), "e"), domain_error);
    CHECK_THROWS_AS(divided_connectivity(tt::complete_graph(4), "e"), domain_error);
    int kd = divided_connectivity(tt::cycle_graph(6), "v");
    int ked = divided_connectivity(tt::cycle_graph(6), "e");
    CHECK(ked <= kd);
    CHECK(kd <= 2 * ked);
}

TEST_CASE("spanning tree counts") {
    CHECK(spanning_tree_count(tt::path_graph(6)) == 1);
    CHECK(spanning_tree_count(tt::cycle_graph(7)) == 7);
    CHECK(spanning_tree_count(tt::complete_graph(5)) == 125);
    CHECK(spanning_tree_count(tt::complete_bipartite(3, 3)) == mpz_class(81)); // 3^2*3^2
    Graph dis;
    dis.add_vertex("a");
    dis.add_vertex("b");
    CHECK(spanning_tree_count(dis) == 0);
}

TEST_CASE("disjoint union and euler circuit") {
    Graph u = disjoint_union(tt::cycle_graph(3), tt::path_graph(3));
    CHECK(u.order() == 6);
    CHECK(u.size() == 5);
    auto circ = euler_circuit(tt::cycle_graph(5));
    CHECK(circ.size() == 6);
    CHECK(circ.front() == circ.back());
    CHECK_THROWS_AS(euler_circuit(tt::path_graph(3)), domain_error);
}

TEST_CASE("isomorphism helpers") {
    CHECK(is_isomorphic(tt::path_graph(5), tt::path_graph(5)));
    CHECK_FALSE(is_isomorphic(tt::path_graph(5), tt::star_graph(4)));
    CHECK(forest_canonical(tt::path_graph(4)) == forest_canonical(tt::path_graph(4)));
    CHECK(tt::all_trees(7).size() == 11);
    CHECK(tt::all_trees(8).size() == 23);
}
