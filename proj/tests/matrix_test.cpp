#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"

using namespace topsnut;

namespace {

// a graph whose vertex names double as its labels, plus explicit edge labels
struct RawPair {
    Graph g;
    Labelling lab;
};

RawPair make_raw(const std::vector<std::string>& vs,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<long long>& edge_vals) {
    RawPair r;
    r.lab.kind = "raw";
    for (auto& v : vs) {
        r.g.add_vertex(v);
        r.lab.vertex_values[v] = std::stoll(v);
    }
    std::vector<Edge> order;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        r.g.add_edge(edges[i].first, edges[i].second);
        order.emplace_back(edges[i].first, edges[i].second);
        r.lab.edge_values[order.back()] = edge_vals[i];
    }
    r.g.edge_order = order;
    return r;
}

// the 9-edge and 5-edge companion pieces used throughout the frozen examples
RawPair piece_a() {
    return make_raw({"26", "27", "28", "29", "30", "57", "58", "59", "60", "61", "62"},
                    {{"57", "30"},
                     {"58", "30"},
                     {"29", "59"},
                     {"29", "60"},
                     {"28", "60"},
                     {"60", "27"},
                     {"60", "26"},
                     {"61", "26"},
                     {"62", "26"}},
                    {27, 28, 30, 31, 32, 33, 34, 35, 36});
}

RawPair piece_b() {
    return make_raw({"3", "4", "5", "86", "87", "88"},
                    {{"5", "86"}, {"4", "86"}, {"87", "4"}, {"88", "4"}, {"88", "3"}},
                    {81, 82, 83, 84, 85});
}

std::string token_text(const TBPaw& t) {
    std::string s;
    for (auto& tok : t.tokens) s += tok.text + "|";
    return s;
}

} // namespace

TEST_CASE("matrix rows from raw pieces") {
    auto a = piece_a();
    TopsnutMatrix ma = build_avev(a.g, a.lab);
    CHECK(ma.row(0) == std::vector<long long>{57, 58, 29, 29, 28, 60, 60, 61, 62});
    CHECK(ma.row(1) == std::vector<long long>{27, 28, 30, 31, 32, 33, 34, 35, 36});
    CHECK(ma.row(2) == std::vector<long long>{30, 30, 59, 60, 60, 27, 26, 26, 26});

    auto b = piece_b();
    TopsnutMatrix mb = build_avev(b.g, b.lab);
    CHECK(mb.row(0) == std::vector<long long>{5, 4, 87, 88, 88});
    CHECK(mb.row(1) == std::vector<long long>{81, 82, 83, 84, 85});
    CHECK(mb.row(2) == std::vector<long long>{86, 86, 4, 4, 3});
    CHECK_FALSE(mb.set_ordered());
}

TEST_CASE("build rejects bad inputs") {
    Graph g = tt::path_graph(3);
    Labelling bad;
    bad.kind = "graceful";
    bad.vertex_values = {{"v00", 0}, {"v01", 1}, {"v02", 0}};
    CHECK_THROWS_AS(build_avev(g, bad), domain_error);

    auto b = piece_b();
    b.lab.edge_values.erase(Edge("88", "3")); // unlabelled edge
    CHECK_THROWS_AS(build_avev(b.g, b.lab), domain_error);
}

TEST_CASE("column and xy exchanges") {
    auto b = piece_b();
    TopsnutMatrix m = build_avev(b.g, b.lab);

    TopsnutMatrix c14 = matrix_op(m, {"column_exchange", 1, 4, nullptr});
    CHECK(c14.row(0) == std::vector<long long>{88, 4, 87, 5, 88});
    CHECK(c14.row(1) == std::vector<long long>{84, 82, 83, 81, 85});
    CHECK(c14.row(2) == std::vector<long long>{4, 86, 4, 86, 3});

    TopsnutMatrix l3 = matrix_op(m, {"xy_exchange", 3, 0, nullptr});
    CHECK(l3.row(0) == std::vector<long long>{5, 4, 4, 88, 88});
    CHECK(l3.row(1) == std::vector<long long>{81, 82, 83, 84, 85});
    CHECK(l3.row(2) == std::vector<long long>{86, 86, 87, 4, 3});

    TopsnutMatrix both = xy_exchange(c14, 3);
    CHECK(both.row(0) == std::vector<long long>{88, 4, 4, 5, 88});
    CHECK(both.row(1) == std::vector<long long>{84, 82, 83, 81, 85});
    CHECK(both.row(2) == std::vector<long long>{4, 86, 87, 86, 3});

    // both exchanges are involutions
    CHECK(column_exchange(c14, 1, 4) == m);
    CHECK(xy_exchange(l3, 3) == m);
    CHECK_THROWS_AS(column_exchange(m, 0, 2), domain_error);
    CHECK_THROWS_AS(xy_exchange(m, 6), domain_error);
    CHECK_THROWS_AS(matrix_op(m, {"nonsense", 1, 1, nullptr}), domain_error);
    CHECK_THROWS_AS(matrix_op(m, {"compound", 0, 0, nullptr}), domain_error);
}

TEST_CASE("compound and joining") {
    TopsnutMatrix a = build_avev(piece_a().g, piece_a().lab);
    TopsnutMatrix b = build_avev(piece_b().g, piece_b().lab);
    TopsnutMatrix ab = matrix_op(a, {"compound", 0, 0, &b});
    REQUIRE(ab.size() == 14);
    CHECK(ab.columns[9].x == 5);
    CHECK(ab.columns[13].y == 3);
    CHECK(ab.blocks == std::vector<std::size_t>{0});
    CHECK_FALSE(ab == compound(b, a)); // order matters

    TopsnutMatrix j = matrix_op(a, {"joining", 0, 0, &b});
    CHECK(j.columns == ab.columns);
    CHECK(j.blocks == std::vector<std::size_t>{0, 9});
}

TEST_CASE("one line serializations of the compound matrix") {
    TopsnutMatrix ab =
        compound(build_avev(piece_a().g, piece_a().lab), build_avev(piece_b().g, piece_b().lab));

    CHECK(serialize_o(ab, "O1").text ==
          "5758292928606061625487888885848382813635343332313028273030596060272626268686443");
    CHECK(serialize_o(ab, "O4").text ==
          "5727305828302930592931602832606033276034266135266236265818648286878348884488853");

    TBPaw rows = serialize_rows(ab);
    CHECK(rows.text == std::string("57582929286060616254878888") + "2728303132333435368182838485" +
                           "3030596060272626268686443");

    // 1-line strings hold together; the row dump needs three segments
    CHECK(kline_validate(serialize_o(ab, "O1"), ab, 1).pass);
    CHECK(kline_validate(serialize_o(ab, "O4"), ab, 1).pass);
    Verdict three = kline_validate(rows, ab, 3);
    CHECK(three.pass);
    CHECK(three.constants.at("segments") == 3);
    CHECK_FALSE(kline_validate(rows, ab, 1).pass);
}

TEST_CASE("O algorithm variants on the 5-column piece") {
    TopsnutMatrix m = build_avev(piece_b().g, piece_b().lab);

    CHECK(serialize_o(m, "O1").text == "5487888885848382818686443");
    CHECK(serialize_o(m, "O1", "reciprocal").text == "8686443858483828154878888");
    CHECK(serialize_o(m, "O1", "inverse").text == "8888874581828384853448686");
    CHECK(serialize_o(m, "O2").text == "5818686824878344848888853");
    CHECK(serialize_o(m, "O2", "reciprocal").text == "8681548286483878884438588");
    CHECK(serialize_o(m, "O2", "inverse").text == "8885348488878348682458186");
    CHECK(serialize_o(m, "O3").text == "8686815824483487843888885");
    CHECK(serialize_o(m, "O4").text == "5818648286878348884488853");
    CHECK(serialize_o(m, "O4", "reciprocal").text == "8681586824483874848838588");
    CHECK(serialize_o(m, "O4", "inverse").text == "8885388844878344828658186");

    // every variant stays a 1-line string
    for (const char* a : {"O1", "O2", "O3", "O4"})
        for (const char* v : {"plain", "reciprocal", "inverse"}) {
            TBPaw t = serialize_o(m, a, v);
            CHECK(t.tokens.size() == 15);
            CHECK(kline_validate(t, m, 1).pass);
        }

    // reversing the inverse gives the reciprocal reading
    TBPaw inv = serialize_o(m, "O1", "inverse");
    std::reverse(inv.tokens.begin(), inv.tokens.end());
    CHECK(token_text(inv) == token_text(serialize_o(m, "O1", "reciprocal")));

    CHECK_THROWS_AS(serialize_o(m, "O7"), domain_error);
    CHECK_THROWS_AS(serialize_o(m, "O1", "sideways"), domain_error);
}

TEST_CASE("small O3/O2 shapes") {
    // q = 3 and q = 4 exercise both tails of the weave
    auto p3 = make_raw({"1", "2", "5", "6", "7"}, {{"1", "5"}, {"2", "6"}, {"2", "7"}}, {4, 4, 5});
    TopsnutMatrix m3 = build_avev(p3.g, p3.lab);
    CHECK(token_text(serialize_o(m3, "O3")) == "6|5|4|1|4|7|2|2|5|");
    CHECK(token_text(serialize_o(m3, "O2")) == "1|4|5|6|4|2|2|5|7|");

    auto p4 = make_raw({"1", "2", "3", "5", "6", "7", "8"},
                       {{"1", "5"}, {"2", "6"}, {"2", "7"}, {"3", "8"}}, {4, 4, 5, 5});
    TopsnutMatrix m4 = build_avev(p4.g, p4.lab);
    CHECK(token_text(serialize_o(m4, "O3")) == "6|5|4|1|4|7|8|5|2|2|3|5|");
    CHECK(kline_validate(serialize_o(m4, "O3"), m4, 1).pass);

    // single column, trivial outputs
    auto k2 = make_raw({"0", "1"}, {{"0", "1"}}, {1});
    TopsnutMatrix m1 = build_avev(k2.g, k2.lab);
    CHECK(serialize_o(m1, "O4").text == "011");
    CHECK(serialize_o(m1, "O1").text == "011");
    CHECK(serialize_o(m1, "O3").text == "101");
}

TEST_CASE("kline rejects shuffles and missing traces") {
    TopsnutMatrix m = build_avev(piece_b().g, piece_b().lab);
    TBPaw t = serialize_o(m, "O1");
    std::swap(t.tokens[2], t.tokens[10]); // breaks adjacency in two spots
    CHECK_FALSE(kline_validate(t, m, 1).pass);
    CHECK(kline_validate(t, m, 1).constants.at("segments") > 1);

    TBPaw bare;
    bare.text = "123";
    CHECK_THROWS_AS(kline_validate(bare, m, 1), domain_error);

    TBPaw lies = serialize_o(m, "O1");
    lies.tokens[0].text = "99"; // token contradicts the matrix
    CHECK_FALSE(kline_validate(lies, m, 1).pass);
}

TEST_CASE("set ordered flag and graph round trip") {
    Graph p4 = tt::path_graph(4);
    Labelling f;
    f.kind = "graceful";
    f.vertex_values = {{"v00", 0}, {"v01", 3}, {"v02", 1}, {"v03", 2}};
    TopsnutMatrix plainm = build_avev(p4, f);
    CHECK_FALSE(plainm.set_ordered());

    Graph p4b = p4;
    p4b.bipartition = Bipartition{{"v00", "v02"}, {"v01", "v03"}};
    TopsnutMatrix ordered = build_avev(p4b, f);
    CHECK(ordered.row(0) == std::vector<long long>{0, 1, 1});
    CHECK(ordered.row(2) == std::vector<long long>{3, 3, 2});
    CHECK(ordered.set_ordered());

    CHECK(is_isomorphic(graph_of(plainm), p4));
    CHECK(is_isomorphic(graph_of(build_avev(piece_b().g, piece_b().lab)), piece_b().g));
}

TEST_CASE("value matrices") {
    Graph k2;
    k2.add_vertex("a");
    k2.add_vertex("b");
    k2.add_edge("a", "b");
    Labelling f;
    f.kind = "graceful";
    f.vertex_values = {{"a", 0}, {"b", 1}};
    ValueMatrix ev = build_value_matrix(k2, f, "evalue");
    CHECK(ev.grid == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    ValueMatrix vev = build_value_matrix(k2, f, "vevalue");
    CHECK(vev.grid == std::vector<std::vector<long long>>{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});

    Graph p3 = tt::path_graph(3);
    Labelling g3;
    g3.kind = "graceful";
    g3.vertex_values = {{"v00", 0}, {"v01", 2}, {"v02", 1}};
    ValueMatrix e3 = build_value_matrix(p3, g3, "evalue");
    CHECK(e3.grid == std::vector<std::vector<long long>>{{0, 2, 0}, {2, 0, 1}, {0, 1, 0}});
    for (std::size_t i = 0; i < 3; ++i) // symmetric, zero diagonal
        for (std::size_t j = 0; j < 3; ++j) CHECK(e3.grid[i][j] == e3.grid[j][i]);

    CHECK_THROWS_AS(build_value_matrix(p3, g3, "banana"), domain_error);
}

static const std::vector<std::string> kDigitCodes = {"4043", "4043", "2635", "2511", "5282",
                                                     "4476", "4734", "4411", "3829"};
static const std::vector<std::string> kHexCodes = {"4EBA", "4EBA", "597D", "516C", "5219",
                                                   "5929", "4E0B", "591A", "5E73"};

TEST_CASE("code matrices and Vo lines") {
    ValueMatrix d = build_code_matrix(kDigitCodes);
    REQUIRE(d.rows() == 4);
    REQUIRE(d.cols() == 9);
    CHECK(d.grid[0] == std::vector<long long>{4, 4, 2, 2, 5, 4, 4, 4, 3});
    CHECK(d.grid[1] == std::vector<long long>{0, 0, 6, 5, 2, 4, 7, 4, 8});
    CHECK(d.grid[2] == std::vector<long long>{4, 4, 3, 1, 8, 7, 3, 1, 2});
    CHECK(d.grid[3] == std::vector<long long>{3, 3, 5, 1, 2, 6, 4, 1, 9});

    CHECK(serialize_vo(d, "Vo1").text == "442254443847425600443187312914621533");
    CHECK(serialize_vo(d, "Vo2").text == "404334042635115252826744473411443829");
    CHECK(serialize_vo(d, "Vo3").text == "343540403121642586472254319174442843");
    CHECK(serialize_vo(d, "Vo4").text == "404340432635251152824476473444113829");

    ValueMatrix h = build_code_matrix(kHexCodes, "hex");
    CHECK(serialize_vo(h, "Vo1").text == "445555455E9E9219EEBB76120173AB99CDAA");
    CHECK(serialize_vo(h, "Vo2").text == "4EBAABE4597DC615521992954E0BA1955E73");
    CHECK(serialize_vo(h, "Vo3").text == "ABADBE4E7C96945119B225590A31E5497E55");
    CHECK(serialize_vo(h, "Vo4").text == "4EBA4EBA597D516C521959294E0B591A5E73");

    CHECK(serialize_vo(build_code_matrix({"0000"}), "Vo4").text == "0000");
    CHECK_THROWS_AS(build_code_matrix({"123"}), domain_error);
    CHECK_THROWS_AS(build_code_matrix({"12F4"}), domain_error); // hex digit, decimal alphabet
    CHECK_THROWS_AS(serialize_vo(d, "Vo5"), domain_error);
}

TEST_CASE("Vo1 and Vo4 emit the same multiset") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> codes;
        for (int i = 0, m = 1 + (int)(rng() % 7); i < m; ++i) {
            std::string c;
            for (int j = 0; j < 4; ++j) c += char('0' + rng() % 10);
            codes.push_back(c);
        }
        ValueMatrix m = build_code_matrix(codes);
        std::string a = serialize_vo(m, "Vo1").text, b = serialize_vo(m, "Vo4").text;
        CHECK(a.size() == 4 * codes.size());
        std::string c = serialize_vo(m, "Vo3").text;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("counting theorems") {
    auto [m1, p1] = tbpaw_count(1);
    CHECK(m1 == 3);
    CHECK(p1 == 6);
    auto [m9, p9] = tbpaw_count(9);
    CHECK(m9 == 362898);
    CHECK(p9.get_str() == "10888869450418352160768000000"); // 27!
    CHECK(zeros_times_permutations(11) == 439084800);
    CHECK_THROWS_AS(tbpaw_count(0), domain_error);
}

TEST_CASE("strong rank") {
    double r = strong_rank((std::size_t)500, 10);
    CHECK(r > 1660.9);
    CHECK(r < 1661.0);
    CHECK(strong_rank((std::size_t)0, 10) == 0.0);
    CHECK(strong_rank((std::size_t)1, 62) == doctest::Approx(5.9542).epsilon(0.001));
    TBPaw t;
    t.text = "0123456789";
    CHECK(strong_rank(t, 10) == doctest::Approx(10 * std::log2(10.0)));
    CHECK_THROWS_AS(strong_rank(t, 1), domain_error);
}

TEST_CASE("digit linear systems mod 10") {
    ValueMatrix id;
    id.role = "code";
    id.grid = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(apply_or_solve_linear(id, {1, 2, 3, 4}, "apply") == std::array<long long, 4>{1, 2, 3, 4});

    ValueMatrix d3 = id;
    for (int i = 0; i < 4; ++i) d3.grid[i][i] = 3;
    CHECK(apply_or_solve_linear(d3, {9, 3, 6, 0}, "solve") == std::array<long long, 4>{3, 1, 2, 0});

    ValueMatrix ones = id;
    ones.grid = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}};
    CHECK_THROWS_AS(apply_or_solve_linear(ones, {1, 2, 3, 4}, "solve"), domain_error);

    // apply-then-solve round trips on invertible matrices
    std::mt19937 rng(11);
    int solved = 0;
    while (solved < 25) {
        ValueMatrix m = id;
        for (auto& row : m.grid)
            for (auto& v : row) v = rng() % 10;
        std::array<long long, 4> x{(long long)(rng() % 10), (long long)(rng() % 10),
                                   (long long)(rng() % 10), (long long)(rng() % 10)};
        auto y = apply_or_solve_linear(m, x, "apply");
        std::array<long long, 4> back;
        try {
            back = apply_or_solve_linear(m, y, "solve");
        } catch (const domain_error&) {
            continue; // singular draw; try another
        }
        CHECK(back == x);
        ++solved;
    }
    CHECK_THROWS_AS(apply_or_solve_linear(id, {1, 2, 3, 4}, "banana"), domain_error);
}

TEST_CASE("coordinate encoding") {
    Graph g;
    for (auto v : {"u", "v", "s", "t"}) g.add_vertex(v);
    g.add_edge("u", "v");
    g.add_edge("s", "t");
    g.coords = {{"u", {1, 0}}, {"v", {2, 1}}, {"s", {3, 0}}, {"t", {3, 2}}};
    g.edge_order = std::vector<Edge>{Edge("u", "v"), Edge("s", "t")};
    CHECK(analytic_encode(g).text == "10213032");
    CHECK(analytic_encode(g, std::vector<Edge>{Edge("s", "t"), Edge("u", "v")}).text == "30321021");

    Graph empty;
    empty.add_vertex("x");
    CHECK(analytic_encode(empty).text.empty());

    g.coords.erase("t");
    CHECK_THROWS_AS(analytic_encode(g), domain_error);
}
