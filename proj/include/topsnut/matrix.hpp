#ifndef TOPSNUT_MATRIX_HPP
#define TOPSNUT_MATRIX_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "labelling.hpp"
#include "util.hpp"

namespace topsnut {

// one column (x_i, e_i, y_i) of a 3xq matrix
struct MatrixColumn {
    long long x = 0, e = 0, y = 0;
    bool operator==(const MatrixColumn& o) const { return x == o.x && e == o.e && y == o.y; }
};

struct TopsnutMatrix {
    std::vector<MatrixColumn> columns;
    std::vector<std::optional<Edge>> edge_binding; // column -> source edge (if built from a graph)
    std::vector<std::size_t> blocks{0};            // block start indices (grows under joining)

    std::size_t size() const { return columns.size(); }
    std::vector<long long> row(int r) const { // 0=x, 1=e, 2=y
        std::vector<long long> out;
        for (auto& c : columns) out.push_back(r == 0 ? c.x : r == 1 ? c.e : c.y);
        return out;
    }
    bool set_ordered() const {
        if (columns.empty()) return true;
        long long mx = columns[0].x, my = columns[0].y;
        for (auto& c : columns) {
            mx = std::max(mx, c.x);
            my = std::min(my, c.y);
        }
        return mx < my;
    }
    bool operator==(const TopsnutMatrix& o) const { return columns == o.columns; }
};

// plain numeric grid: adjacency e-value, bordered ve-value, or 4xm code matrix
struct ValueMatrix {
    std::string role; // evalue | vevalue | code
    bool hex = false;
    std::vector<std::vector<long long>> grid;

    std::size_t rows() const { return grid.size(); }
    std::size_t cols() const { return grid.empty() ? 0 : grid[0].size(); }
};

struct TBPawToken {
    std::string text;
    int row = -1;       // 0=x, 1=e, 2=y for 3xq matrices; grid row otherwise
    long long col = -1; // column in the serialized matrix
};

struct TBPaw {
    std::string text;
    std::string trace; // replay line: algorithm + options
    std::vector<TBPawToken> tokens;
};

namespace detail {

inline std::string cell_text(long long v, bool hex) {
    if (!hex) return std::to_string(v);
    if (v < 0 || v > 15) throw domain_error("hex cell out of range");
    return std::string(1, "0123456789ABCDEF"[v]);
}

inline void push_token(TBPaw& t, long long v, int row, long long col, bool hex = false) {
    TBPawToken tok{cell_text(v, hex), row, col};
    t.text += tok.text;
    t.tokens.push_back(std::move(tok));
}

inline std::vector<Edge> edge_sequence_of(const Graph& g, const std::optional<std::vector<Edge>>& seq) {
    std::vector<Edge> es;
    if (seq)
        es = *seq;
    else if (g.edge_order)
        es = *g.edge_order;
    else {
        es = g.edges();
        std::sort(es.begin(), es.end());
    }
    if (es.size() != g.size()) throw domain_error("edge sequence does not cover the graph");
    for (auto& ed : es)
        if (!g.has_edge(ed.a, ed.b)) throw domain_error("edge sequence uses unknown edge");
    return es;
}

inline long long column_edge_value(const Labelling& lab, const Edge& ed) {
    if (lab.has_edge_values()) return lab.e(ed); // throws on unlabelled edge
    return std::llabs(lab.v(ed.a) - lab.v(ed.b));
}

} // namespace detail

// columns follow the given sequence; each column keeps the stored edge orientation
// (the written order of the endpoints), except that a declared bipartition pins
// the X side to the top row.
inline TopsnutMatrix build_avev(const Graph& g, const Labelling& lab,
                                const std::optional<std::vector<Edge>>& edge_sequence = std::nullopt) {
    if (lab.kind != "raw") {
        Verdict vd = verify(g, lab);
        if (!vd.pass) throw domain_error("labelling fails verification: " + vd.text());
    }
    TopsnutMatrix m;
    for (const Edge& ed : detail::edge_sequence_of(g, edge_sequence)) {
        Vertex top = ed.a, bot = ed.b;
        if (g.bipartition && g.bipartition->y.count(top)) std::swap(top, bot);
        m.columns.push_back({lab.v(top), detail::column_edge_value(lab, ed), lab.v(bot)});
        m.edge_binding.emplace_back(Edge(top, bot));
    }
    return m;
}

// rebuild the underlying graph: one vertex per distinct end value, one edge per column
inline Graph graph_of(const TopsnutMatrix& m) {
    Graph g;
    std::vector<Edge> order;
    for (auto& c : m.columns) {
        for (long long v : {c.x, c.y})
            if (!g.has_vertex(std::to_string(v))) g.add_vertex(std::to_string(v));
        g.add_edge(std::to_string(c.x), std::to_string(c.y));
        order.emplace_back(std::to_string(c.x), std::to_string(c.y));
    }
    g.edge_order = order;
    return g;
}

// ---- matrix operations -----------------------------------------------------

struct MatrixOpSpec {
    std::string kind; // column_exchange | xy_exchange | compound | joining
    std::size_t i = 0, j = 0;
    const TopsnutMatrix* other = nullptr;
};

inline TopsnutMatrix column_exchange(const TopsnutMatrix& m, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > m.size() || j > m.size()) throw domain_error("column index out of range");
    TopsnutMatrix out = m;
    std::swap(out.columns[i - 1], out.columns[j - 1]);
    std::swap(out.edge_binding[i - 1], out.edge_binding[j - 1]);
    return out;
}

inline TopsnutMatrix xy_exchange(const TopsnutMatrix& m, std::size_t i) {
    if (i < 1 || i > m.size()) throw domain_error("column index out of range");
    TopsnutMatrix out = m;
    std::swap(out.columns[i - 1].x, out.columns[i - 1].y);
    return out;
}

// column-block concatenation; order matters
inline TopsnutMatrix compound(const TopsnutMatrix& a, const TopsnutMatrix& b) {
    TopsnutMatrix out = a;
    out.columns.insert(out.columns.end(), b.columns.begin(), b.columns.end());
    out.edge_binding.insert(out.edge_binding.end(), b.edge_binding.begin(), b.edge_binding.end());
    return out;
}

// like compound, but the seam stays visible as a block boundary
inline TopsnutMatrix joining(const TopsnutMatrix& a, const TopsnutMatrix& b) {
    TopsnutMatrix out = compound(a, b);
    out.blocks = a.blocks;
    for (std::size_t s : b.blocks) out.blocks.push_back(a.size() + s);
    return out;
}

inline TopsnutMatrix matrix_op(const TopsnutMatrix& m, const MatrixOpSpec& op) {
    if (op.kind == "column_exchange") return column_exchange(m, op.i, op.j);
    if (op.kind == "xy_exchange") return xy_exchange(m, op.i);
    if (op.kind == "compound" || op.kind == "joining") {
        if (!op.other) throw domain_error(op.kind + " needs a second matrix");
        return op.kind == "compound" ? compound(m, *op.other) : joining(m, *op.other);
    }
    throw domain_error("unknown matrix op '" + op.kind + "'");
}

// ---- 1-line O-k serializers ------------------------------------------------

namespace detail {

// token stream of the plain O-k traversal for a 3xq matrix
inline std::vector<std::pair<int, long long>> o_cells(long long q, int algo) {
    std::vector<std::pair<int, long long>> cells; // (row, col)
    auto X = [&](long long i) { cells.emplace_back(0, i - 1); };
    auto E = [&](long long i) { cells.emplace_back(1, i - 1); };
    auto Y = [&](long long i) { cells.emplace_back(2, i - 1); };
    if (q == 0) return cells;
    switch (algo) {
        case 1: // x_1..x_q, e_q..e_1, y_1..y_q
            for (long long i = 1; i <= q; ++i) X(i);
            for (long long i = q; i >= 1; --i) E(i);
            for (long long i = 1; i <= q; ++i) Y(i);
            break;
        case 2: // zigzag columns: odd ones top-down, even ones bottom-up
            for (long long i = 1; i <= q; ++i) {
                if (i % 2) { X(i); E(i); Y(i); }
                else       { Y(i); E(i); X(i); }
            }
            break;
        case 3: { // two-row weave in column pairs
            if (q == 1) { Y(1); X(1); E(1); break; }
            Y(2); Y(1); E(1); X(1); E(2);
            if (q == 2) { X(2); break; }
            // regular pairs, stopping short of the final group
            long long stop = (q % 2 == 0) ? q - 3 : q - 2;
            for (long long j = 3; j <= stop; j += 2) {
                Y(j); Y(j + 1); E(j); X(j - 1); X(j); E(j + 1);
            }
            if (q % 2 == 0) { Y(q - 1); Y(q); E(q - 1); X(q - 2); X(q - 1); X(q); E(q); }
            else            { Y(q); X(q - 1); X(q); E(q); }
            break;
        }
        case 4: // column-major x_i e_i y_i
            for (long long i = 1; i <= q; ++i) { X(i); E(i); Y(i); }
            break;
        default:
            throw domain_error("unknown O algorithm");
    }
    return cells;
}

} // namespace detail

inline TBPaw serialize_o(const TopsnutMatrix& m, const std::string& algo,
                         const std::string& variant = "plain") {
    if (algo.size() != 2 || algo[0] != 'O' || algo[1] < '1' || algo[1] > '4')
        throw domain_error("unknown O algorithm '" + algo + "'");
    if (variant != "plain" && variant != "reciprocal" && variant != "inverse")
        throw domain_error("unknown variant '" + variant + "'");
    const long long q = (long long)m.size();
    TBPaw t;
    t.trace = "serialize_o algo=" + algo + " variant=" + variant;
    for (auto [row, col] : detail::o_cells(q, algo[1] - '0')) {
        // reciprocal swaps the x and y rows; inverse reverses the columns
        if (variant == "reciprocal" && row != 1) row = 2 - row;
        if (variant == "inverse") col = q - 1 - col;
        const MatrixColumn& c = m.columns[(std::size_t)col];
        detail::push_token(t, row == 0 ? c.x : row == 1 ? c.e : c.y, row, col);
    }
    return t;
}

// rows emitted X then W then Y; the seams break 1-line adjacency into 3 segments
inline TBPaw serialize_rows(const TopsnutMatrix& m) {
    TBPaw t;
    t.trace = "serialize_rows";
    for (int r : {0, 1, 2})
        for (std::size_t i = 0; i < m.size(); ++i) {
            const MatrixColumn& c = m.columns[i];
            detail::push_token(t, r == 0 ? c.x : r == 1 ? c.e : c.y, r, (long long)i);
        }
    return t;
}

// ---- k-line validity against the adjacency patterns ------------------------

namespace detail {

inline bool kline_adjacent(const TBPawToken& u, const TBPawToken& v) {
    if (u.row < 0 || v.row < 0 || u.col < 0 || v.col < 0) return false;
    long long dc = std::llabs(u.col - v.col);
    if (u.row == v.row) return dc == 1;          // x_i x_{i+1} / e_i e_{i+1} / y_i y_{i+1}
    if (u.row == 1 || v.row == 1) return dc <= 1; // e with x or y: same or adjacent column
    return dc == 1;                               // x with y only across adjacent columns
}

} // namespace detail

inline Verdict kline_validate(const TBPaw& t, const TopsnutMatrix& m, long long k) {
    if (t.tokens.empty() && !t.text.empty()) throw domain_error("TB-paw trace missing");
    Verdict vd;
    long long segments = t.tokens.empty() ? 0 : 1;
    for (std::size_t i = 0; i < t.tokens.size(); ++i) {
        const TBPawToken& tok = t.tokens[i];
        if (tok.row < 0 || tok.col < 0 || (std::size_t)tok.col >= m.size()) {
            vd.fail("token " + std::to_string(i) + " does not address the matrix");
            continue;
        }
        const MatrixColumn& c = m.columns[(std::size_t)tok.col];
        long long want = tok.row == 0 ? c.x : tok.row == 1 ? c.e : c.y;
        if (tok.text != std::to_string(want)) {
            vd.fail("token " + std::to_string(i) + " disagrees with the matrix");
            continue;
        }
        if (i > 0 && !detail::kline_adjacent(t.tokens[i - 1], tok)) ++segments;
    }
    vd.constants["segments"] = segments;
    if (segments > k)
        vd.fail("needs " + std::to_string(segments) + " segments, limit " + std::to_string(k));
    return vd;
}

// ---- value and code matrices -----------------------------------------------

inline ValueMatrix build_value_matrix(const Graph& g, const Labelling& lab,
                                      const std::string& role,
                                      const std::optional<std::vector<Vertex>>& vertex_order =
                                          std::nullopt) {
    if (lab.kind != "raw") {
        Verdict vd = verify(g, lab);
        if (!vd.pass) throw domain_error("labelling fails verification: " + vd.text());
    }
    std::vector<Vertex> vs = vertex_order ? *vertex_order : g.sorted_vertices();
    if (vs.size() != g.order()) throw domain_error("vertex order does not cover the graph");
    const std::size_t p = vs.size();
    ValueMatrix m;
    m.role = role;
    auto entry = [&](const Vertex& u, const Vertex& v) -> long long {
        if (!g.has_edge(u, v)) return 0;
        for (const Edge& ed : g.edges())
            if (ed.same(u, v)) return detail::column_edge_value(lab, ed);
        return 0;
    };
    if (role == "evalue") {
        m.grid.assign(p, std::vector<long long>(p, 0));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                if (i != j) m.grid[i][j] = entry(vs[i], vs[j]);
    } else if (role == "vevalue") {
        m.grid.assign(p + 1, std::vector<long long>(p + 1, 0));
        for (std::size_t i = 0; i < p; ++i) {
            m.grid[0][i + 1] = lab.v(vs[i]);
            m.grid[i + 1][0] = lab.v(vs[i]);
        }
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                if (i != j) m.grid[i + 1][j + 1] = entry(vs[i], vs[j]);
    } else {
        throw domain_error("unknown value-matrix role '" + role + "'");
    }
    return m;
}

inline ValueMatrix build_code_matrix(const std::vector<std::string>& codes,
                                     const std::string& alphabet = "decimal") {
    bool hex = alphabet == "hex";
    if (!hex && alphabet != "decimal") throw domain_error("unknown alphabet '" + alphabet + "'");
    ValueMatrix m;
    m.role = "code";
    m.hex = hex;
    m.grid.assign(4, std::vector<long long>(codes.size(), 0));
    for (std::size_t j = 0; j < codes.size(); ++j) {
        const std::string& c = codes[j];
        if (c.size() != 4) throw domain_error("code '" + c + "' is not 4 symbols");
        for (std::size_t i = 0; i < 4; ++i) {
            char ch = c[i];
            long long v;
            if (ch >= '0' && ch <= '9') v = ch - '0';
            else if (hex && ch >= 'A' && ch <= 'F') v = 10 + ch - 'A';
            else if (hex && ch >= 'a' && ch <= 'f') v = 10 + ch - 'a';
            else throw domain_error("code '" + c + "' has a symbol outside the alphabet");
            m.grid[i][j] = v;
        }
    }
    return m;
}

// ---- 1-line Vo-t serializers -----------------------------------------------

inline TBPaw serialize_vo(const ValueMatrix& m, const std::string& line) {
    const long long R = (long long)m.rows(), C = (long long)m.cols();
    TBPaw t;
    t.trace = "serialize_vo line=" + line;
    auto emit = [&](long long r, long long c) { detail::push_token(t, m.grid[r][c], (int)r, c, m.hex); };
    if (line == "Vo1") { // row-serpentine from the top-left
        for (long long r = 0; r < R; ++r) {
            if (r % 2 == 0) for (long long c = 0; c < C; ++c) emit(r, c);
            else            for (long long c = C - 1; c >= 0; --c) emit(r, c);
        }
    } else if (line == "Vo2") { // column-serpentine from the top-left
        for (long long c = 0; c < C; ++c) {
            if (c % 2 == 0) for (long long r = 0; r < R; ++r) emit(r, c);
            else            for (long long r = R - 1; r >= 0; --r) emit(r, c);
        }
    } else if (line == "Vo3") { // anti-diagonal boustrophedon from the bottom-left
        long long t_idx = 0;
        for (long long d = R - 1; d >= -(C - 1); --d, ++t_idx) {
            std::vector<std::pair<long long, long long>> diag; // constant r - c = d
            for (long long r = std::max(0ll, d); r < R && r - d < C; ++r)
                if (r - d >= 0) diag.emplace_back(r, r - d);
            if (t_idx % 2 == 0) std::reverse(diag.begin(), diag.end());
            for (auto [r, c] : diag) emit(r, c);
        }
    } else if (line == "Vo4") { // plain column-major
        for (long long c = 0; c < C; ++c)
            for (long long r = 0; r < R; ++r) emit(r, c);
    } else {
        throw domain_error("unknown Vo line '" + line + "'");
    }
    return t;
}

// ---- counting and rank -----------------------------------------------------

// (number of matrices reachable by the exchanges, TB-paws per matrix)
inline std::pair<mpz_class, mpz_class> tbpaw_count(long long q) {
    if (q < 1) throw domain_error("q must be positive");
    mpz_class fact, big;
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)q);
    mpz_fac_ui(big.get_mpz_t(), (unsigned long)(3 * q));
    return {mpz_class((long)(2 * q)) + fact, big};
}

// n placements of the zero times n! value permutations
inline mpz_class zeros_times_permutations(long long n) {
    if (n < 1) throw domain_error("n must be positive");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)n);
    return mpz_class((long)n) * fact;
}

inline double strong_rank(std::size_t length, long long alphabet_size) {
    if (alphabet_size < 2) throw domain_error("alphabet must have at least 2 symbols");
    return (double)length * std::log2((double)alphabet_size);
}

inline double strong_rank(const TBPaw& t, long long alphabet_size) {
    return strong_rank(t.text.size(), alphabet_size);
}

// ---- linear system over digits mod 10 --------------------------------------

namespace detail {

// Gaussian elimination of A x = y over Z_p, p prime; empty result if singular
inline std::optional<std::array<long long, 4>> solve_mod_p(std::array<std::array<long long, 4>, 4> a,
                                                           std::array<long long, 4> y, long long p) {
    auto inv = [&](long long v) {
        for (long long t = 1; t < p; ++t)
            if (t * v % p == 1) return t;
        return 0ll;
    };
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] % p) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(y[col], y[piv]);
        long long f = inv(((a[col][col] % p) + p) % p);
        for (int c = 0; c < 4; ++c) a[col][c] = a[col][c] * f % p;
        y[col] = y[col] * f % p;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            long long m = ((a[r][col] % p) + p) % p;
            for (int c = 0; c < 4; ++c) a[r][c] = ((a[r][c] - m * a[col][c]) % p + p) % p;
            y[r] = ((y[r] - m * y[col]) % p + p) % p;
        }
    }
    return y;
}

} // namespace detail

inline std::array<long long, 4> apply_or_solve_linear(const ValueMatrix& mat,
                                                      const std::array<long long, 4>& known,
                                                      const std::string& direction) {
    if (mat.rows() != 4 || mat.cols() != 4) throw domain_error("matrix must be 4x4");
    std::array<std::array<long long, 4>, 4> a{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            long long v = mat.grid[r][c];
            if (v < 0 || v > 9) throw domain_error("matrix entries must be digits");
            a[r][c] = v;
        }
    for (long long v : known)
        if (v < 0 || v > 9) throw domain_error("vector entries must be digits");
    if (direction == "apply") {
        std::array<long long, 4> y{};
        for (int r = 0; r < 4; ++r) {
            long long s = 0;
            for (int c = 0; c < 4; ++c) s += a[r][c] * known[c];
            y[r] = s % 10;
        }
        return y;
    }
    if (direction != "solve") throw domain_error("direction must be apply or solve");
    auto x2 = detail::solve_mod_p(a, known, 2);
    auto x5 = detail::solve_mod_p(a, known, 5);
    if (!x2 || !x5) throw domain_error("matrix is singular modulo 10");
    std::array<long long, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = (5 * (*x2)[i] + 6 * (*x5)[i]) % 10;
    return x;
}

// ---- coordinate (analytic) encoding ----------------------------------------

inline TBPaw analytic_encode(const Graph& g,
                             const std::optional<std::vector<Edge>>& edge_sequence = std::nullopt) {
    TBPaw t;
    t.trace = "analytic_encode";
    for (const Edge& ed : detail::edge_sequence_of(g, edge_sequence)) {
        for (const Vertex& v : {ed.a, ed.b}) {
            auto it = g.coords.find(v);
            if (it == g.coords.end()) throw domain_error("missing coordinate for '" + v + "'");
            t.text += std::to_string(it->second.first) + std::to_string(it->second.second);
        }
    }
    return t;
}

} // namespace topsnut

#endif
