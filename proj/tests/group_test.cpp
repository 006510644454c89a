#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "topsnut/group.hpp"
#include "topsnut/labelling_ops.hpp"

using namespace topsnut;

namespace {

GraphicGroup small_group(long long n) {
    Graph k2;
    k2.add_vertex("a");
    k2.add_vertex("b");
    k2.add_edge("a", "b");
    Labelling lab;
    lab.kind = "raw";
    lab.vertex_values = {{"a", 0}, {"b", 1}};
    return build_group(k2, lab, n);
}

} // namespace

TEST_CASE("base labelling of the two-piece character graph") {
    Graph g = tt::tian_graph();
    Labelling f = tt::tian_labelling();
    Verdict vd = verify(g, f);
    REQUIRE(vd.pass);
    REQUIRE(vd.witness.size() == 1); // the missing label 3 needs one phantom edge
    CHECK(std::llabs(f.v(vd.witness[0].a) - f.v(vd.witness[0].b)) == 3);
}

TEST_CASE("group build and element shifts") {
    Graph g = tt::tian_graph();
    Labelling f = tt::tian_labelling();
    GraphicGroup grp = build_group(g, f); // modulus defaults to max label + 1
    CHECK(grp.modulus == 11);
    for (long long k = 1; k <= 11; ++k) {
        Labelling el = grp.element(k);
        for (auto& [v, val] : f.vertex_values) CHECK(el.v(v) == (val + k - 1) % 11);
        CHECK(verify(g, el).pass); // every shifted copy stays valid modulo 11
    }
    CHECK_THROWS_AS(grp.element(0), domain_error);
    CHECK_THROWS_AS(grp.element(12), domain_error);

    GraphicGroup k2 = small_group(2);
    CHECK(k2.modulus == 2);
    Labelling bad;
    bad.kind = "raw";
    bad.vertex_values = {{"a", 0}, {"b", 0}};
    Graph h;
    h.add_vertex("a");
    h.add_vertex("b");
    CHECK_THROWS_AS(build_group(h, bad), domain_error);    // modulus 1 is degenerate
    CHECK_THROWS_AS(build_group(h, bad, 1), domain_error); // explicit degenerate modulus
    Labelling ng;
    ng.kind = "graceful";
    ng.vertex_values = {{"v00", 0}, {"v01", 1}, {"v02", 0}};
    CHECK_THROWS_AS(build_group(tt::path_graph(3), ng), domain_error);
}

TEST_CASE("group laws, exhaustively for eleven elements") {
    GraphicGroup grp = build_group(tt::tian_graph(), tt::tian_labelling());
    const long long n = grp.modulus;
    for (long long i = 1; i <= n; ++i)
        for (long long k = 1; k <= n; ++k) {
            CHECK(group_add(grp, i, k, k) == i);                     // zero law
            CHECK(group_add(grp, i, group_inverse(grp, i, k), k) == k);
            CHECK(group_inverse(grp, i, k) == ((2 * k - i - 1) % n + n) % n + 1);
            CHECK(group_add(grp, i, i, i) == i); // idempotent under its own zero
        }
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= n; ++j)
            for (long long k = 1; k <= n; ++k) {
                CHECK(group_add(grp, i, j, k) == group_add(grp, j, i, k));
                for (long long s = 1; s <= n; s += 3) // associativity sample
                    CHECK(group_add(grp, group_add(grp, i, j, k), s, k) ==
                          group_add(grp, i, group_add(grp, j, s, k), k));
            }
    CHECK_THROWS_AS(group_add(grp, 0, 1, 1), domain_error);
    CHECK_THROWS_AS(group_add(grp, 1, 12, 1), domain_error);
}

TEST_CASE("the frozen index matrix admits one zero per column") {
    GraphicGroup grp = build_group(tt::tian_graph(), tt::tian_labelling());
    // rows: vertex-u index, edge index, vertex-v index for the nine host edges
    std::vector<long long> r1 = {1, 1, 1, 3, 9, 9, 4, 5, 7};
    std::vector<long long> r2 = {4, 3, 2, 2, 4, 5, 4, 4, 5};
    std::vector<long long> r3 = {11, 10, 9, 9, 3, 4, 8, 7, 6};
    std::vector<long long> zeros;
    for (std::size_t c = 0; c < 9; ++c) {
        long long k = ((r1[c] + r3[c] - r2[c] - 1) % 11 + 11) % 11 + 1;
        CHECK(group_add(grp, r1[c], r3[c], k) == r2[c]);
        zeros.push_back(k);
    }
    CHECK(zeros == std::vector<long long>{8, 8, 8, 10, 8, 8, 8, 8, 8});
}

TEST_CASE("tree encryption keeps adjacent edge elements distinct") {
    GraphicGroup grp = small_group(5);
    Graph star = tt::star_graph(3);
    EncryptedNetwork net = encrypt_graph(star, grp, {"tree_distinct_adjacent"});
    CHECK(verify_encryption(grp, net).pass);
    std::set<long long> elems;
    for (auto& [ed, iz] : net.edge_assign) elems.insert(iz.first);
    CHECK(elems.size() == 3); // all three edges at the hub differ

    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        Graph tr = tt::random_tree(3 + (int)(rng() % 8), rng);
        GraphicGroup big = small_group(1 + (long long)tr.max_degree());
        EncryptedNetwork enc = encrypt_graph(tr, big, {"tree_distinct_adjacent"});
        CHECK(verify_encryption(big, enc).pass);
        for (const Vertex& u : tr.vertices()) {
            std::set<long long> seen;
            for (const Edge& ed : tr.edges())
                if (ed.touches(u)) CHECK(seen.insert(enc.edge_assign.at(ed).first).second);
        }
    }
    CHECK_THROWS_AS(encrypt_graph(tt::star_graph(5), grp, {"tree_distinct_adjacent"}),
                    domain_error); // needs 6 elements
    CHECK_THROWS_AS(encrypt_graph(tt::cycle_graph(4), grp, {"tree_distinct_adjacent"}),
                    domain_error);
}

TEST_CASE("fixed zero and community encryption") {
    GraphicGroup grp = small_group(8);
    EncryptMode fz{"fixed_zero"};
    fz.zero = 2;
    EncryptedNetwork net = encrypt_graph(tt::path_graph(4), grp, fz);
    CHECK(verify_encryption(grp, net).pass);
    for (auto& [ed, iz] : net.edge_assign) CHECK(iz.second == 2);
    CHECK_THROWS_AS(encrypt_graph(tt::path_graph(4), small_group(3), fz), domain_error);

    // two triangles joined by a bridge
    Graph comm;
    for (auto v : {"a1", "a2", "a3", "b1", "b2", "b3"}) comm.add_vertex(v);
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"}, {"b1", "b2"}, {"b2", "b3"}, {"b1", "b3"}})
        comm.add_edge(u, v);
    comm.add_edge("a1", "b1");
    EncryptMode cm{"community"};
    cm.parts = {{"a1", "a2", "a3"}, {"b1", "b2", "b3"}};
    cm.part_zeros = {1, 2};
    cm.bundle_zeros[{0, 1}] = 3;
    EncryptedNetwork cnet = encrypt_graph(comm, grp, cm);
    CHECK(verify_encryption(grp, cnet).pass);
    CHECK(cnet.edge_assign.at(Edge("a1", "b1")).second == 3);
    CHECK(cnet.edge_assign.at(Edge("a1", "a2")).second == 1);

    EncryptMode badz = cm;
    badz.bundle_zeros[{0, 1}] = 2; // collides with a community zero
    CHECK_THROWS_AS(encrypt_graph(comm, grp, badz), domain_error);
    EncryptMode badp = cm;
    badp.parts[1].erase("b3");
    CHECK_THROWS_AS(encrypt_graph(comm, grp, badp), domain_error);
    CHECK_THROWS_AS(encrypt_graph(comm, grp, {"sideways"}), domain_error);
}

TEST_CASE("encrypted network text round trip") {
    GraphicGroup grp = small_group(6);
    EncryptedNetwork net = encrypt_graph(tt::path_graph(4), grp, {"tree_distinct_adjacent"});
    std::string text = serialize_encrypted(net);
    EncryptedNetwork back = parse_encrypted(text, net.host, net.modulus);
    CHECK(back.vertex_assign == net.vertex_assign);
    CHECK(back.edge_assign == net.edge_assign);
    CHECK(verify_encryption(grp, back).pass);
    CHECK_THROWS_AS(parse_encrypted("encrypt { vertex v 3; }", net.host, 6), parse_error);
    CHECK_THROWS_AS(parse_encrypted("nonsense", net.host, 6), parse_error);
}

TEST_CASE("gg coloring kinds") {
    GraphicGroup grp = small_group(6);
    Graph k2;
    k2.add_vertex("u");
    k2.add_vertex("v");
    k2.add_edge("u", "v");
    GgAssignment th;
    th.vertex = {{"u", 1}, {"v", 2}};
    CHECK(verify_gg_coloring(k2, grp, th, "proper_gg").pass);
    th.vertex["v"] = 1;
    CHECK_FALSE(verify_gg_coloring(k2, grp, th, "proper_gg").pass);

    Graph p3 = tt::path_graph(3);
    GgAssignment eq;
    eq.vertex = {{"v00", 1}, {"v01", 2}, {"v02", 1}};
    // the two ends always see the same neighbor set {2}
    CHECK_FALSE(verify_gg_coloring(p3, grp, eq, "vertex_distinguishing").pass);
    CHECK(verify_gg_coloring(p3, grp, eq, "adjacent_vertex_distinguishing").pass);
    CHECK(verify_gg_coloring(p3, grp, eq, "equitable_adjacent_v").pass);

    GgAssignment tot = eq;
    tot.edge = {{Edge("v00", "v01"), 3}, {Edge("v01", "v02"), 4}};
    CHECK(verify_gg_coloring(p3, grp, tot, "proper_total_gg").pass);
    CHECK(verify_gg_coloring(p3, grp, tot, "adjacent_total_distinguishing").pass);
    tot.edge[Edge("v01", "v02")] = 3;
    CHECK_FALSE(verify_gg_coloring(p3, grp, tot, "proper_total_gg").pass);

    GgAssignment eo;
    eo.edge = {{Edge("v00", "v01"), 1}, {Edge("v01", "v02"), 2}};
    CHECK(verify_gg_coloring(p3, grp, eo, "proper_edge_gg").pass);
    CHECK(verify_gg_coloring(p3, grp, eo, "adjacent_edge_distinguishing").pass);
    CHECK(verify_gg_coloring(p3, grp, eo, "equitable_adjacent_e").pass);
    Verdict vs = verify_gg_coloring(p3, grp, eo, "induced_e_proper_v_set");
    CHECK(vs.pass);
    CHECK(vs.constants.at("set_size_v01") == 1); // one induced pair at the middle vertex

    // v-induced: declared zeros must reproduce the edge elements
    GgAssignment ind = eq;
    ind.edge = {{Edge("v00", "v01"), group_add(grp, 1, 2, 5)}};
    ind.zero = {{Edge("v00", "v01"), 5}};
    CHECK(verify_gg_coloring(p3, grp, ind, "v_induced_total").pass);
    ind.zero[Edge("v00", "v01")] = 4;
    CHECK_FALSE(verify_gg_coloring(p3, grp, ind, "v_induced_total").pass);

    GgAssignment partial;
    partial.vertex = {{"v00", 1}};
    CHECK_THROWS_AS(verify_gg_coloring(p3, grp, partial, "proper_gg"), domain_error);
    CHECK_THROWS_AS(verify_gg_coloring(p3, grp, eq, "no_such_kind"), domain_error);
    GgAssignment oob = eq;
    oob.vertex["v00"] = 9;
    CHECK_THROWS_AS(verify_gg_coloring(p3, grp, oob, "proper_gg"), domain_error);
}

TEST_CASE("greedy total colorings on trees") {
    CHECK(verify_gg_coloring(tt::path_graph(5), small_group(3),
                             greedy_total_gg_coloring(tt::path_graph(5), small_group(3)),
                             "proper_total_gg")
              .pass);

    Graph star = tt::star_graph(4);
    GraphicGroup g6 = small_group(6);
    GgAssignment th = greedy_total_gg_coloring(star, g6, "neighbor_sets");
    CHECK(verify_gg_coloring(star, g6, th, "proper_total_gg").pass);
    for (const Edge& ed : star.edges()) { // the strengthened clause itself
        auto cp = [&](const Vertex& x) {
            std::set<long long> s{th.vertex.at(x)};
            for (const Edge& e2 : star.edges())
                if (e2.touches(x)) s.insert(th.edge.at(e2));
            return s;
        };
        CHECK(cp(ed.a) != cp(ed.b));
    }
    CHECK_THROWS_AS(greedy_total_gg_coloring(star, small_group(4)), domain_error); // needs 5
    CHECK_THROWS_AS(greedy_total_gg_coloring(tt::cycle_graph(4), g6), domain_error);
    CHECK_THROWS_AS(greedy_total_gg_coloring(star, g6, "sideways"), domain_error);

    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        Graph tr = tt::random_tree(3 + (int)(rng() % 8), rng);
        GraphicGroup g = small_group(1 + (long long)tr.max_degree());
        CHECK(verify_gg_coloring(tr, g, greedy_total_gg_coloring(tr, g), "proper_total_gg").pass);
    }
    for (int t = 0; t < 20; ++t) {
        Graph tr = tt::random_tree(3 + (int)(rng() % 6), rng);
        GraphicGroup g = small_group(1 + (long long)tr.max_degree());
        GgAssignment a = greedy_total_gg_coloring(tr, g, "index_sets");
        auto is = [&](const Vertex& x) {
            std::set<long long> s;
            for (const Edge& ed : tr.edges())
                if (ed.touches(x)) s.insert(a.zero.at(ed));
            return s;
        };
        for (const Edge& ed : tr.edges()) CHECK(is(ed.a) != is(ed.b));
    }
}

TEST_CASE("chromatic minimizers on tiny hosts") {
    CHECK(gg_chromatic(tt::cycle_graph(4), "proper_gg") == 2);
    CHECK(gg_chromatic(tt::cycle_graph(5), "proper_gg") == 3);
    CHECK(gg_chromatic(tt::star_graph(3), "proper_edge_gg") == 3);
    CHECK(gg_chromatic(tt::path_graph(3), "proper_total_gg") == 2);
    CHECK_THROWS_AS(gg_chromatic(tt::path_graph(9), "proper_gg"), domain_error);
}

TEST_CASE("encryption lower bound") {
    CHECK(encryption_lower_bound(11, 11, 1, std::vector<long long>(11, 1)) == 439084800);
    CHECK(encryption_lower_bound(5, 1, 2, {3}) == 30); // m * n * sum(c)
    CHECK(encryption_lower_bound(5, 2, 2, {1, 1}) == 80);
    CHECK_THROWS_AS(encryption_lower_bound(3, 4, 1, {1}), domain_error);
}

TEST_CASE("equivalent group maps") {
    Graph g = tt::tian_graph();
    Labelling f = tt::tian_labelling();
    GraphicGroup a = build_group(g, f);
    auto self = equivalent_group_map(a, a);
    REQUIRE(self.has_value());
    for (auto& [from, to] : *self) CHECK(from == to);

    // dual labelling: v -> max + min - v
    Graph p4 = tt::path_graph(4);
    Labelling gf;
    gf.kind = "graceful";
    gf.vertex_values = {{"v00", 0}, {"v01", 3}, {"v02", 1}, {"v03", 2}};
    GraphicGroup ga = build_group(p4, gf);
    GraphicGroup gd = build_group(p4, dual_labelling(gf));
    auto theta = equivalent_group_map(ga, gd);
    REQUIRE(theta.has_value());
    for (auto& [from, to] : *theta) CHECK(to == 3 - from);
    // the transport preserves the addition table (same modulus)
    CHECK(ga.modulus == gd.modulus);
    for (long long i = 1; i <= ga.modulus; ++i)
        for (long long j = 1; j <= ga.modulus; ++j)
            CHECK(group_add(ga, i, j, 2) == group_add(gd, i, j, 2));

    // doubling map onto the odd-graceful companion group
    Labelling odd;
    odd.kind = "flawed_set_ordered_odd_graceful";
    odd.flaw_budget = 1;
    for (auto& [v, val] : f.vertex_values)
        odd.vertex_values[v] = v[0] == 'x' ? 2 * val : 2 * val - 1;
    REQUIRE(verify(g, odd).pass);
    GraphicGroup o = build_group(g, odd, 21);
    auto dbl = equivalent_group_map(o, a);
    REQUIRE(dbl.has_value());
    for (auto& [from, to] : *dbl) CHECK(to == (from <= 5 ? 2 * from : 2 * from - 1));

    Graph other = tt::path_graph(4);
    CHECK_FALSE(equivalent_group_map(a, build_group(other, gf)).has_value());
}

TEST_CASE("string views of a group") {
    GraphicGroup k2 = small_group(2);
    auto strings = string_group_view(k2, "O4");
    REQUIRE(strings.size() == 2);
    CHECK(strings[0].text == "011");
    CHECK(strings[1].text == "110");

    GraphicGroup big = build_group(tt::tian_graph(), tt::tian_labelling());
    auto views = string_group_view(big);
    std::set<std::string> uniq;
    for (auto& t : views) uniq.insert(t.text);
    CHECK(uniq.size() == 11); // pairwise distinct
}
