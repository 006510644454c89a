// Command-line surface for the graph-labelling toolkit: corpus inspection,
// labelling verification/search, matrix serialization, graphic groups,
// network growth, directed labellings, and counting helpers.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "topsnut/directed.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/group.hpp"
#include "topsnut/growth.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"

using namespace topsnut;

namespace {

std::string default_corpus_path() {
    if (const char* env = std::getenv("TOPSNUT_CORPUS")) return env;
    return "data/corpus.txt";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Graph> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open corpus '" + path + "'");
    return load_corpus(in);
}

const Graph& corpus_record(const std::vector<Graph>& corpus, const std::string& code) {
    for (const Graph& g : corpus)
        if (g.code == code) return g;
    throw domain_error("corpus has no record '" + code + "'");
}

std::string pad2(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%02d", i);
    return buf;
}

// builtin families C<n>, P<n>, K<n>, S<n> (star with n leaves)
Graph builtin_graph(const std::string& ref) {
    if (ref.size() < 2) throw domain_error("unknown graph reference '" + ref + "'");
    char kind = ref[0];
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(ref.substr(1), &used);
        if (used + 1 != ref.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw domain_error("unknown graph reference '" + ref + "'");
    }
    if (n < 1 || n > 99) throw domain_error("builtin graph size out of range in '" + ref + "'");
    Graph g;
    g.code = ref;
    auto path = [&](int m) {
        for (int i = 0; i < m; ++i) g.add_vertex(pad2(i));
        for (int i = 0; i + 1 < m; ++i) g.add_edge(pad2(i), pad2(i + 1));
    };
    switch (kind) {
        case 'P':
            path(n);
            break;
        case 'C':
            if (n < 3) throw domain_error("cycles need at least 3 vertices");
            path(n);
            g.add_edge(pad2(n - 1), pad2(0));
            break;
        case 'K':
            for (int i = 0; i < n; ++i) g.add_vertex(pad2(i));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(pad2(i), pad2(j));
            break;
        case 'S':
            g.add_vertex("c");
            for (int i = 0; i < n; ++i) {
                g.add_vertex(pad2(i));
                g.add_edge("c", pad2(i));
            }
            break;
        default:
            throw domain_error("unknown graph reference '" + ref + "'");
    }
    return g;
}

// corpus:codeA+codeB (disjoint union), file:path (first record), or a builtin
Graph resolve_graph(const std::string& ref, const std::string& corpus_path) {
    if (ref.rfind("corpus:", 0) == 0) {
        std::vector<Graph> corpus = load_corpus_file(corpus_path);
        std::vector<std::string> codes;
        std::string rest = ref.substr(7);
        size_t pos = 0;
        while (pos != std::string::npos) {
            size_t plus = rest.find('+', pos);
            codes.push_back(rest.substr(pos, plus == std::string::npos ? plus : plus - pos));
            pos = plus == std::string::npos ? plus : plus + 1;
        }
        if (codes.empty()) throw domain_error("empty corpus reference");
        Graph g = corpus_record(corpus, codes[0]);
        for (size_t i = 1; i < codes.size(); ++i)
            g = disjoint_union(g, corpus_record(corpus, codes[i]));
        return g;
    }
    if (ref.rfind("file:", 0) == 0) {
        std::vector<Graph> gs = load_corpus_file(ref.substr(5));
        if (gs.empty()) throw domain_error("no graph records in '" + ref.substr(5) + "'");
        return gs[0];
    }
    return builtin_graph(ref);
}

Labelling labelling_from_file(const std::string& path) { return parse_labelling(read_file(path)); }

Edge parse_edge_opt(const std::string& text) {
    std::string s = text;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    size_t comma = s.find(',');
    if (comma == std::string::npos) throw domain_error("edge option needs 'a,b'");
    return Edge(s.substr(0, comma), s.substr(comma + 1));
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

std::string join_ll(const std::vector<long long>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s.empty() ? "-" : s;
}

DirectedLabelling directed_labelling_of(const Labelling& lab, const std::string& uniform) {
    DirectedLabelling d;
    d.kind = lab.kind;
    d.vertex_values = lab.vertex_values;
    d.arc_values = lab.edge_values;
    d.flaw_budget = lab.flaw_budget;
    if (uniform == "+" || uniform == "-") d.uniform_flag = uniform[0];
    else if (!uniform.empty()) throw domain_error("uniform flag must be '+' or '-'");
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-labelling and topological-password toolkit"};
    app.require_subcommand(1);
    std::string corpus_path = default_corpus_path();
    app.add_option("--corpus", corpus_path, "corpus file (default: $TOPSNUT_CORPUS or data/corpus.txt)");

    // ---------------------------------------------------------------- corpus
    CLI::App* corpus = app.add_subcommand("corpus", "inspect the graph corpus");
    corpus->require_subcommand(1);
    std::string corpus_file;
    CLI::App* corpus_list = corpus->add_subcommand("list", "list records");
    corpus_list->add_option("--file", corpus_file, "corpus file");
    CLI::App* corpus_validate = corpus->add_subcommand("validate", "parse and check records");
    corpus_validate->add_option("--file", corpus_file, "corpus file");

    // ---------------------------------------------------------------- label
    CLI::App* label = app.add_subcommand("label", "verify, search, construct, transform labellings");
    label->require_subcommand(1);
    std::string l_graph, l_lab, l_kind, l_op = "dual";
    long long l_k = 1, l_d = 1, l_budget = kDefaultSearchBudget;
    CLI::App* lab_verify = label->add_subcommand("verify", "verify a labelling file");
    lab_verify->add_option("--graph", l_graph, "graph reference")->required();
    lab_verify->add_option("--labelling", l_lab, "labelling file")->required();
    CLI::App* lab_search = label->add_subcommand("search", "search for a labelling");
    lab_search->add_option("--graph", l_graph, "graph reference")->required();
    lab_search->add_option("--kind", l_kind, "labelling kind")->required();
    lab_search->add_option("--k", l_k, "parameter k");
    lab_search->add_option("--d", l_d, "parameter d");
    lab_search->add_option("--budget", l_budget, "search node budget");
    CLI::App* lab_construct = label->add_subcommand("construct", "search and print the labelling");
    lab_construct->add_option("--graph", l_graph, "graph reference")->required();
    lab_construct->add_option("--kind", l_kind, "labelling kind")->required();
    lab_construct->add_option("--k", l_k, "parameter k");
    lab_construct->add_option("--d", l_d, "parameter d");
    lab_construct->add_option("--budget", l_budget, "search node budget");
    CLI::App* lab_transform = label->add_subcommand("transform", "transform a labelling file");
    lab_transform->add_option("--labelling", l_lab, "labelling file")->required();
    lab_transform->add_option("--op", l_op, "transform: dual");

    // ---------------------------------------------------------------- tbpaw
    CLI::App* tbpaw = app.add_subcommand("tbpaw", "build a matrix and serialize it");
    std::string t_graph, t_lab, t_algo = "O1", t_variant = "plain", t_role = "vevalue";
    tbpaw->add_option("--graph", t_graph, "graph reference")->required();
    tbpaw->add_option("--labelling", t_lab, "labelling file")->required();
    tbpaw->add_option("--algo", t_algo, "O1..O4, rows, or Vo1..Vo4");
    tbpaw->add_option("--variant", t_variant, "plain | reciprocal | inverse (O algorithms)");
    tbpaw->add_option("--role", t_role, "evalue | vevalue (Vo algorithms)");

    // ---------------------------------------------------------------- group
    CLI::App* group = app.add_subcommand("group", "graphic groups and encryption");
    group->require_subcommand(1);
    std::string g_graph, g_lab, g_host, g_mode = "tree_distinct_adjacent", g_kind = "proper_total_gg";
    std::string g_strengthen = "none", g_shift = "vertices";
    long long g_modulus = 0, g_i = 1, g_j = 1, g_zero = 1;
    auto add_group_base = [&](CLI::App* c) {
        c->add_option("--graph", g_graph, "base graph reference")->required();
        c->add_option("--labelling", g_lab, "base labelling file")->required();
        c->add_option("--modulus", g_modulus, "group order (default: graph order)");
        c->add_option("--shift-domain", g_shift, "vertices | vertices_and_edges");
    };
    CLI::App* group_build = group->add_subcommand("build", "build a graphic group");
    add_group_base(group_build);
    CLI::App* group_add_cmd = group->add_subcommand("add", "add two elements under a zero");
    add_group_base(group_add_cmd);
    group_add_cmd->add_option("--i", g_i, "left element (1-based)")->required();
    group_add_cmd->add_option("--j", g_j, "right element (1-based)")->required();
    group_add_cmd->add_option("--zero", g_zero, "zero element (1-based)");
    CLI::App* group_encrypt = group->add_subcommand("encrypt", "encrypt a host network");
    add_group_base(group_encrypt);
    group_encrypt->add_option("--host", g_host, "host graph reference")->required();
    group_encrypt->add_option("--mode", g_mode, "tree_distinct_adjacent | fixed_zero");
    group_encrypt->add_option("--zero", g_zero, "zero element for fixed_zero");
    CLI::App* group_color = group->add_subcommand("verify-coloring", "greedy total coloring + verdict");
    add_group_base(group_color);
    group_color->add_option("--host", g_host, "host tree reference")->required();
    group_color->add_option("--kind", g_kind, "coloring kind");
    group_color->add_option("--strengthen", g_strengthen, "none | neighbor_sets | index_sets");

    // ---------------------------------------------------------------- grow
    CLI::App* grow_cmd = app.add_subcommand("grow", "run a growth trace");
    std::string w_algo, w_seed, w_active_v, w_active_e, w_convention = "lex", w_program;
    int w_steps = 1;
    long long w_rng = -1;
    bool w_stats = false, w_graphs = false;
    grow_cmd->add_option("--algo", w_algo, "growth algorithm")->required();
    grow_cmd->add_option("--seed", w_seed, "seed graph reference")->required();
    grow_cmd->add_option("--steps", w_steps, "time steps")->required();
    grow_cmd->add_option("--active-vertex", w_active_v, "active vertex");
    grow_cmd->add_option("--active-edge", w_active_e, "active edge 'a,b'");
    grow_cmd->add_option("--rng-seed", w_rng, "random attachment seed");
    grow_cmd->add_option("--convention", w_convention, "lex | reversed (edge coinciding)");
    grow_cmd->add_option("--program", w_program, "comma list of algorithms (mixed)");
    grow_cmd->add_flag("--stats", w_stats, "append degree statistics of the last step");
    grow_cmd->add_flag("--with-graphs", w_graphs, "emit corpus records per step");

    // ---------------------------------------------------------------- directed
    CLI::App* directed = app.add_subcommand("directed", "directed labellings");
    directed->require_subcommand(1);
    std::string d_graph, d_lab, d_algo = "O1", d_variant = "plain", d_uniform;
    CLI::App* dir_orient = directed->add_subcommand("orient", "orient a set-ordered graceful graph");
    dir_orient->add_option("--graph", d_graph, "graph reference")->required();
    dir_orient->add_option("--labelling", d_lab, "set-ordered graceful labelling file")->required();
    CLI::App* dir_verify = directed->add_subcommand("verify", "verify a directed labelling");
    dir_verify->add_option("--graph", d_graph, "graph reference (arcs: section)")->required();
    dir_verify->add_option("--labelling", d_lab, "labelling file")->required();
    dir_verify->add_option("--uniform", d_uniform, "demand uniform sign: + or -");
    CLI::App* dir_serialize = directed->add_subcommand("serialize", "signed matrix TB-paw");
    dir_serialize->add_option("--graph", d_graph, "graph reference (arcs: section)")->required();
    dir_serialize->add_option("--labelling", d_lab, "labelling file")->required();
    dir_serialize->add_option("--algo", d_algo, "O1..O4");
    dir_serialize->add_option("--variant", d_variant, "plain | reciprocal | inverse");

    // ---------------------------------------------------------------- count
    CLI::App* count = app.add_subcommand("count", "counting helpers");
    std::string c_tbpaw, c_rank, c_elb, c_trees;
    long long c_edges = -1, c_zeros = -1;
    count->add_option("--tbpaw", c_tbpaw, "matrix/TB-paw counts, e.g. q=9");
    count->add_option("--edges", c_edges, "same as --tbpaw q=<n>");
    count->add_option("--strong-rank", c_rank, "strong rank, e.g. 500,10");
    count->add_option("--encryption-lower-bound", c_elb, "n,k,m,c1:c2:...");
    count->add_option("--spanning-trees", c_trees, "graph reference");
    count->add_option("--zeros", c_zeros, "zero-choice times permutations for n elements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // corpus ------------------------------------------------------------
        if (corpus_list->parsed() || corpus_validate->parsed()) {
            std::string path = corpus_file.empty() ? corpus_path : corpus_file;
            std::vector<Graph> gs = load_corpus_file(path);
            if (corpus_validate->parsed()) {
                std::cout << "ok " << gs.size() << " graphs\n";
            } else {
                for (const Graph& g : gs) {
                    std::cout << g.code << " p=" << g.order() << " q=" << g.size();
                    if (!g.arcs.empty()) std::cout << " arcs=" << g.arcs.size();
                    if (!g.name.empty()) std::cout << " \"" << g.name << "\"";
                    std::cout << "\n";
                }
            }
            return 0;
        }

        // label -------------------------------------------------------------
        if (lab_verify->parsed()) {
            Graph g = resolve_graph(l_graph, corpus_path);
            Verdict vd = verify(g, labelling_from_file(l_lab));
            std::cout << vd.text() << "\n";
            return 0;
        }
        if (lab_search->parsed() || lab_construct->parsed()) {
            Graph g = resolve_graph(l_graph, corpus_path);
            SearchResult sr = search(g, l_kind, std::make_pair(l_k, l_d), l_budget);
            if (lab_construct->parsed()) {
                if (sr.status != "found") throw domain_error("no labelling found: " + sr.status);
                std::cout << serialize_labelling(*sr.labelling);
            } else {
                std::cout << sr.status << "\n";
                if (sr.status == "found") std::cout << serialize_labelling(*sr.labelling);
            }
            return 0;
        }
        if (lab_transform->parsed()) {
            if (l_op != "dual") throw domain_error("unknown transform '" + l_op + "'");
            std::cout << serialize_labelling(dual_labelling(labelling_from_file(l_lab)));
            return 0;
        }

        // tbpaw -------------------------------------------------------------
        if (tbpaw->parsed()) {
            Graph g = resolve_graph(t_graph, corpus_path);
            Labelling lab = labelling_from_file(t_lab);
            if (t_algo.rfind("Vo", 0) == 0) {
                ValueMatrix m = build_value_matrix(g, lab, t_role);
                std::cout << serialize_vo(m, t_algo).text << "\n";
            } else if (t_algo == "rows") {
                std::cout << serialize_rows(build_avev(g, lab)).text << "\n";
            } else {
                std::cout << serialize_o(build_avev(g, lab), t_algo, t_variant).text << "\n";
            }
            return 0;
        }

        // group -------------------------------------------------------------
        if (group_build->parsed() || group_add_cmd->parsed() || group_encrypt->parsed() ||
            group_color->parsed()) {
            Graph g = resolve_graph(g_graph, corpus_path);
            Labelling lab = labelling_from_file(g_lab);
            GraphicGroup grp = build_group(
                g, lab, g_modulus > 0 ? std::optional<long long>(g_modulus) : std::nullopt, g_shift);
            if (group_build->parsed()) {
                std::cout << "group modulus=" << grp.modulus << " shift_domain=" << grp.shift_domain
                          << "\n";
            } else if (group_add_cmd->parsed()) {
                std::cout << group_add(grp, g_i, g_j, g_zero) << "\n";
            } else if (group_encrypt->parsed()) {
                Graph host = resolve_graph(g_host, corpus_path);
                EncryptMode mode;
                mode.kind = g_mode;
                mode.zero = g_zero;
                std::cout << serialize_encrypted(encrypt_graph(host, grp, mode));
            } else {
                Graph host = resolve_graph(g_host, corpus_path);
                GgAssignment th = greedy_total_gg_coloring(host, grp, g_strengthen);
                Verdict vd = verify_gg_coloring(host, grp, th, g_kind);
                std::cout << vd.text() << "\n";
            }
            return 0;
        }

        // grow --------------------------------------------------------------
        if (grow_cmd->parsed()) {
            GrowthSpec spec;
            spec.algorithm = w_algo;
            spec.seed = resolve_graph(w_seed, corpus_path);
            spec.steps = w_steps;
            spec.edge_convention = w_convention;
            if (!w_active_v.empty()) spec.active_vertex = w_active_v;
            if (!w_active_e.empty()) spec.active_edge = parse_edge_opt(w_active_e);
            if (w_rng >= 0) spec.rng_seed = (unsigned long long)w_rng;
            if (!w_program.empty()) spec.program = split_list(w_program, ',');
            // default active elements: smallest vertex, smallest edge
            if (!spec.active_vertex && spec.seed.order() > 0)
                spec.active_vertex = spec.seed.sorted_vertices().front();
            if (!spec.active_edge && spec.seed.size() > 0) {
                std::vector<Edge> es = spec.seed.edges();
                std::sort(es.begin(), es.end());
                spec.active_edge = es.front();
            }
            GrowthTrace tr = grow(spec);
            std::cout << serialize_trace(tr, w_graphs);
            if (w_stats) {
                DegreeStats st = degree_stats(tr.steps.back().graph);
                std::cout << serialize_degree_stats(st);
            }
            return 0;
        }

        // directed ----------------------------------------------------------
        if (dir_orient->parsed()) {
            Graph g = resolve_graph(d_graph, corpus_path);
            auto [dg, f] = orient_from_sogl(g, labelling_from_file(d_lab));
            std::cout << serialize_graph(dg.underlying());
            Labelling echo;
            echo.kind = f.kind;
            echo.vertex_values = f.vertex_values;
            echo.flaw_budget = f.flaw_budget;
            std::cout << serialize_labelling(echo);
            std::cout << "uniform +\n";
            return 0;
        }
        if (dir_verify->parsed() || dir_serialize->parsed()) {
            DirectedGraph dg = DirectedGraph::from_graph(resolve_graph(d_graph, corpus_path));
            DirectedLabelling lab = directed_labelling_of(labelling_from_file(d_lab), d_uniform);
            if (dir_verify->parsed()) {
                DirectedVerdict dv = verify_directed(dg, lab);
                std::cout << dv.verdict.text() << "\n";
                std::cout << "f+ = " << join_ll(dv.f_plus) << "\n";
                std::cout << "f- = " << join_ll(dv.f_minus) << "\n";
                std::cout << "uniform = " << (dv.uniform() ? "yes" : "no") << "\n";
            } else {
                TopsnutMatrix m = directed_matrix(dg, lab);
                std::cout << directed_serialize(m, d_algo, d_variant).text << "\n";
            }
            return 0;
        }

        // count -------------------------------------------------------------
        if (count->parsed()) {
            if (!c_tbpaw.empty() || c_edges >= 0) {
                long long q = c_edges;
                if (!c_tbpaw.empty()) {
                    if (c_tbpaw.rfind("q=", 0) != 0) throw domain_error("expected --tbpaw q=<n>");
                    q = to_ll(c_tbpaw.substr(2), "tbpaw count");
                }
                auto [matrices, per_matrix] = tbpaw_count(q);
                std::cout << "matrices=" << matrices.get_str()
                          << " per_matrix=" << per_matrix.get_str() << "\n";
            } else if (!c_rank.empty()) {
                std::vector<std::string> parts = split_list(c_rank, ',');
                if (parts.size() != 2) throw domain_error("expected --strong-rank length,alphabet");
                double r = strong_rank((std::size_t)to_ll(parts[0], "length"),
                                       to_ll(parts[1], "alphabet"));
                char buf[64];
                std::snprintf(buf, sizeof buf, "rank=%.4f", r);
                std::cout << buf << "\n";
            } else if (!c_elb.empty()) {
                std::vector<std::string> parts = split_list(c_elb, ',');
                if (parts.size() != 4) throw domain_error("expected n,k,m,c1:c2:...");
                std::vector<long long> cs;
                for (const std::string& c : split_list(parts[3], ':')) cs.push_back(to_ll(c, "c"));
                mpz_class b = encryption_lower_bound(to_ll(parts[0], "n"), to_ll(parts[1], "k"),
                                                     to_ll(parts[2], "m"), cs);
                std::cout << "bound=" << b.get_str() << "\n";
            } else if (!c_trees.empty()) {
                std::cout << "trees=" << spanning_tree_count(resolve_graph(c_trees, corpus_path)).get_str()
                          << "\n";
            } else if (c_zeros >= 0) {
                std::cout << "strings=" << zeros_times_permutations(c_zeros).get_str() << "\n";
            } else {
                throw domain_error("count: pick one of --tbpaw/--edges/--strong-rank/"
                                   "--encryption-lower-bound/--spanning-trees/--zeros");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
