#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ebg/biclique.hpp"
#include "ebg/blg.hpp"
#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"
#include "ebg/oracle.hpp"
#include "ebg/recognition.hpp"

using json = nlohmann::json;
using namespace ebg;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Input {
    Graph graph;
    std::string source;
    std::string format;
};

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// heuristic used when --format is absent: edge-list bodies contain spaces,
// comments, or a header; a graph6 line does not
std::string sniff_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.find(' ') != std::string::npos || line[0] == '#' || line[0] == 'n')
            return "edgelist";
        return "graph6";
    }
    return "edgelist";
}

Input load_input(const std::string& spec, const std::string& format) {
    Input in;
    in.source = spec;
    if (spec.starts_with("catalog:")) {
        in.format = "catalog";
        in.graph = catalog(spec.substr(8));
        return in;
    }
    std::string text;
    if (spec == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream f(spec);
        if (!f) throw std::runtime_error("cannot open input file '" + spec + "'");
        text = read_stream(f);
    }
    in.format = format.empty() ? sniff_format(text) : format;
    if (in.format == "graph6") {
        std::string line;
        std::istringstream is(text);
        while (std::getline(is, line) && line.empty()) {
        }
        in.graph = parse_graph6(line);
    } else if (in.format == "edgelist") {
        in.graph = parse_edge_list(text);
    } else {
        throw std::runtime_error("unknown format '" + in.format + "'");
    }
    return in;
}

json biclique_json(const Biclique& b) {
    return json{{"side_a", b.side_a}, {"side_b", b.side_b}};
}

std::string edge_label(const Graph& g, EdgeId e) {
    auto [u, v] = g.edge(e);
    return std::to_string(u) + "-" + std::to_string(v);
}

json graph_summary(const Graph& g) {
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", to_graph6(g)}};
}

json conformal_json(const Verdict& v) {
    json out{{"answer", v.answer}};
    if (v.embedding) out["prism"] = *v.embedding;
    return out;
}

json helly_json(const CliqueHellyVerdict& v) {
    json out{{"answer", v.answer}};
    if (v.extended_triangle) out["extended_triangle"] = *v.extended_triangle;
    return out;
}

json hhelly_json(const HereditaryHellyVerdict& v) {
    json out{{"answer", v.answer}};
    if (v.prism) out["prism"] = *v.prism;
    if (v.b_template)
        out["b_template"] = json{{"kind", v.b_template->kind},
                                 {"base", v.b_template->base},
                                 {"x", v.b_template->x}};
    return out;
}

json hblg_json(const HereditaryBlgVerdict& v) {
    json out{{"answer", v.answer}};
    if (!v.answer) {
        out["pattern"] = v.pattern;
        out["embedding"] = *v.embedding;
    }
    return out;
}

json build_report(const Input& in, const std::string& which) {
    const Graph& g = in.graph;
    json report{{"schema_version", kSchemaVersion},
                {"tool_version", kVersion},
                {"input",
                 {{"source", in.source},
                  {"format", in.format},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()},
                  {"graph6", to_graph6(g)}}}};
    json timings;

    auto t0 = std::chrono::steady_clock::now();
    auto eb = eb_hypergraph(g);
    json bicliques = json::array();
    for (const auto& b : eb.bicliques) bicliques.push_back(biclique_json(b));
    report["bicliques"] = bicliques;
    json hyperedges = json::array();
    for (const auto& e : eb.hypergraph.edges) {
        json labels = json::array();
        for (EdgeId id : e) labels.push_back(edge_label(g, id));
        hyperedges.push_back(json{{"edge_ids", e}, {"labels", labels}});
    }
    report["eb"] = hyperedges;
    timings["construct"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto lg = biclique_line_graph(g);
    report["lg"] = graph_summary(lg.graph);
    timings["line_graph"] = ms_since(t0);

    json verdicts;
    t0 = std::chrono::steady_clock::now();
    if (which == "all" || which == "conformal") verdicts["conformal"] = conformal_json(is_eb_conformal(g));
    if (which == "all" || which == "helly") verdicts["helly"] = helly_json(is_eb_helly(g));
    if (which == "all" || which == "hhelly")
        verdicts["hereditary_helly"] = hhelly_json(is_eb_hereditary_helly(g));
    if (which == "all" || which == "hblg")
        verdicts["hereditary_blg"] = hblg_json(is_hereditary_blg(g));
    timings["verdicts"] = ms_since(t0);

    report["verdicts"] = verdicts;
    report["timings_ms"] = timings;
    return report;
}

bool all_answers_true(const json& verdicts) {
    for (const auto& [key, v] : verdicts.items())
        if (!v.at("answer").get<bool>()) return false;
    return true;
}

void print_check_text(const json& report) {
    const auto& verdicts = report.at("verdicts");
    for (const auto& [key, v] : verdicts.items()) {
        std::cout << key << ": " << (v.at("answer").get<bool>() ? "true" : "false") << "\n";
        if (v.contains("prism")) {
            std::cout << "  induced prism at vertices";
            for (int x : v.at("prism")) std::cout << " " << x;
            std::cout << "\n";
        }
        if (v.contains("extended_triangle")) {
            std::cout << "  violating extended triangle (L_G vertices)";
            for (int x : v.at("extended_triangle")) std::cout << " " << x;
            std::cout << "\n";
        }
        if (v.contains("b_template")) {
            const auto& bt = v.at("b_template");
            std::cout << "  b-template case " << bt.at("kind") << ", base";
            for (int x : bt.at("base")) std::cout << " " << x;
            std::cout << ", x";
            for (int x : bt.at("x")) std::cout << " " << x;
            std::cout << "\n";
        }
        if (v.contains("pattern")) {
            std::cout << "  induced " << v.at("pattern").get<std::string>() << " at vertices";
            for (int x : v.at("embedding")) std::cout << " " << x;
            std::cout << "\n";
        }
    }
}

int cmd_check(const std::string& input_spec, const std::string& format, std::string which,
              bool all, bool as_json) {
    if (all) which = "all";
    Input in = load_input(input_spec, format);
    json report = build_report(in, which);
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        print_check_text(report);
    return all_answers_true(report.at("verdicts")) ? 0 : 1;
}

int cmd_bicliques(const std::string& input_spec, const std::string& format) {
    Input in = load_input(input_spec, format);
    for (const auto& b : enumerate_bicliques(in.graph)) {
        bool first = true;
        for (Vertex v : b.side_a) {
            std::cout << (first ? "" : " ") << v;
            first = false;
        }
        std::cout << " |";
        for (Vertex v : b.side_b) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_lg(const std::string& input_spec, const std::string& format,
           const std::string& out_format) {
    Input in = load_input(input_spec, format);
    auto lg = biclique_line_graph(in.graph);
    if (out_format == "graph6")
        std::cout << to_graph6(lg.graph) << "\n";
    else if (out_format == "dot")
        std::cout << to_dot(lg.graph, lg.labels);
    else
        std::cout << to_edge_list(lg.graph);
    return 0;
}

int cmd_eb(const std::string& input_spec, const std::string& format) {
    Input in = load_input(input_spec, format);
    std::cout << to_hypergraph_text(eb_hypergraph(in.graph).hypergraph);
    return 0;
}

struct StageTimes {
    double construct = 0, fast = 0, brute = 0;
};

int cmd_ensemble(int n_min, int n_max, std::vector<double> ps, int count, std::uint64_t seed) {
    std::cout << "seed,n,p,m,bicliques,conformal,helly,hhelly,agree_flags,ms_per_stage\n";
    bool all_agree = true;
    std::uint64_t instance = 0;
    for (int n = n_min; n <= n_max; ++n)
        for (double p : ps)
            for (int i = 0; i < count; ++i, ++instance) {
                std::uint64_t inst_seed = seed + instance;
                oracle::Rng rng(inst_seed);
                Graph g = oracle::random_graph(n, p, rng);
                StageTimes t;
                auto t0 = std::chrono::steady_clock::now();
                auto eb = eb_hypergraph(g);
                t.construct = ms_since(t0);

                t0 = std::chrono::steady_clock::now();
                bool conformal = is_eb_conformal(g).answer;
                bool helly = is_eb_helly(g).answer;
                bool hhelly = is_eb_hereditary_helly(g).answer;
                t.fast = ms_since(t0);

                t0 = std::chrono::steady_clock::now();
                bool agree_c = conformal == oracle::brute_conformal(eb.hypergraph).conformal;
                bool agree_h = helly == oracle::brute_helly(eb.hypergraph).helly;
                bool agree_hh = hhelly == oracle::brute_hereditary_helly(g).holds;
                t.brute = ms_since(t0);

                bool agree = agree_c && agree_h && agree_hh;
                all_agree = all_agree && agree;
                char flags[4] = {agree_c ? '1' : '0', agree_h ? '1' : '0',
                                 agree_hh ? '1' : '0', 0};
                std::cout << inst_seed << "," << n << "," << p << "," << g.edge_count() << ","
                          << eb.bicliques.size() << "," << (conformal ? 1 : 0) << ","
                          << (helly ? 1 : 0) << "," << (hhelly ? 1 : 0) << "," << flags << ","
                          << t.construct << ";" << t.fast << ";" << t.brute << "\n";
            }
    return all_agree ? 0 : 1;
}

bool verify_extended_triangle(const Graph& lg, const VertexSet& ext) {
    // must be the closed neighborhood-of-a-triangle set, without a universal vertex
    Graph sub = induced(lg, ext);
    for (int u = 0; u < sub.vertex_count(); ++u)
        if (sub.degree(u) == sub.vertex_count() - 1) return false;
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = i + 1; j < ext.size(); ++j)
            for (std::size_t k = j + 1; k < ext.size(); ++k) {
                Vertex a = ext[i], b = ext[j], c = ext[k];
                if (!lg.adjacent(a, b) || !lg.adjacent(a, c) || !lg.adjacent(b, c)) continue;
                bool all_members = true;
                for (Vertex v : ext) {
                    int hits = (v == a || lg.adjacent(v, a)) + (v == b || lg.adjacent(v, b)) +
                               (v == c || lg.adjacent(v, c));
                    if (v == a || v == b || v == c) --hits;
                    if (hits < 2) all_members = false;
                }
                if (all_members) return true;
            }
    return false;
}

bool verify_induced_pattern(const Graph& g, const json& embedding, const std::string& pattern) {
    VertexSet verts;
    for (int v : embedding) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    return is_isomorphic(induced(g, verts), catalog(pattern)).has_value();
}

int cmd_verify_witness(const std::string& path) {
    std::string text;
    if (path == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open report '" + path + "'");
        text = read_stream(f);
    }
    json report = json::parse(text);
    Graph g = parse_graph6(report.at("input").at("graph6").get<std::string>());
    const auto& verdicts = report.at("verdicts");
    bool ok = true;
    // a witness that cannot even be evaluated against the embedded graph
    // (out-of-range ids and the like) counts as a mismatch, not a crash
    auto note = [&](const std::string& what, auto&& predicate) {
        bool good = false;
        try {
            good = predicate();
        } catch (const std::exception&) {
        }
        std::cout << what << ": " << (good ? "ok" : "MISMATCH") << "\n";
        ok = ok && good;
    };
    if (verdicts.contains("conformal")) {
        const auto& v = verdicts.at("conformal");
        note("conformal answer", [&] { return v.at("answer") == is_eb_conformal(g).answer; });
        if (v.contains("prism"))
            note("conformal witness",
                 [&] { return verify_induced_pattern(g, v.at("prism"), "prism"); });
    }
    if (verdicts.contains("helly")) {
        const auto& v = verdicts.at("helly");
        note("helly answer", [&] { return v.at("answer") == is_eb_helly(g).answer; });
        if (v.contains("extended_triangle"))
            note("helly witness", [&] {
                VertexSet ext;
                for (int x : v.at("extended_triangle")) ext.push_back(x);
                return verify_extended_triangle(biclique_line_graph(g).graph, ext);
            });
    }
    if (verdicts.contains("hereditary_helly")) {
        const auto& v = verdicts.at("hereditary_helly");
        note("hereditary_helly answer",
             [&] { return v.at("answer") == is_eb_hereditary_helly(g).answer; });
        if (v.contains("prism"))
            note("hereditary_helly prism witness",
                 [&] { return verify_induced_pattern(g, v.at("prism"), "prism"); });
        if (v.contains("b_template"))
            note("hereditary_helly b-template witness", [&] {
                const auto& bt = v.at("b_template");
                BTemplateWitness w;
                w.kind = bt.at("kind").get<int>();
                for (int x : bt.at("base")) w.base.push_back(x);
                auto xs = bt.at("x");
                w.x = {xs.at(0).get<int>(), xs.at(1).get<int>(), xs.at(2).get<int>()};
                return verify_b_template(g, w);
            });
    }
    if (verdicts.contains("hereditary_blg")) {
        const auto& v = verdicts.at("hereditary_blg");
        note("hereditary_blg answer",
             [&] { return v.at("answer") == is_hereditary_blg(g).answer; });
        if (v.contains("pattern"))
            note("hereditary_blg witness", [&] {
                return verify_induced_pattern(g, v.at("embedding"),
                                              v.at("pattern").get<std::string>());
            });
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-biclique hypergraph and biclique line graph toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string input_spec, format, which = "all", out_format = "edgelist", report_path;
    bool all = false, as_json = false;

    std::vector<std::string> check_args;
    auto* check = app.add_subcommand("check", "decide structural properties");
    check->add_option("args", check_args,
                      "[conformal|helly|hhelly|hblg|all] <input>; input is an edge list / "
                      "graph6 file, '-', or catalog:<name>")
        ->expected(1, 2);
    check->add_flag("--all", all, "check all properties");
    check->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    check->add_flag("--json", as_json, "emit the full JSON report");

    auto* bic = app.add_subcommand("bicliques", "list maximal bicliques");
    bic->add_option("input", input_spec)->required();
    bic->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* lg = app.add_subcommand("lg", "emit the biclique line graph");
    lg->add_option("input", input_spec)->required();
    lg->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
    lg->add_option("--out", out_format, "output format")
        ->check(CLI::IsMember({"edgelist", "graph6", "dot"}));

    auto* eb = app.add_subcommand("eb", "emit the edge-biclique hypergraph");
    eb->add_option("input", input_spec)->required();
    eb->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

    int n_min = 6, n_max = 6, count = 10;
    std::uint64_t seed = 1;
    std::vector<double> ps{0.5};
    auto* ens = app.add_subcommand("ensemble", "oracle-equivalence sweep over random graphs");
    ens->add_option("--n-min", n_min);
    ens->add_option("--n-max", n_max);
    ens->add_option("--p", ps, "edge probabilities");
    ens->add_option("--count", count, "instances per (n, p) cell");
    ens->add_option("--seed", seed);

    auto* vw = app.add_subcommand("verify-witness", "re-check witnesses in a JSON report");
    vw->add_option("report", report_path, "report file or '-'")->required();

    try {
        app.parse(argc, argv);
        if (check->parsed()) {
            if (check_args.empty()) throw std::runtime_error("check: missing input");
            if (check_args.size() == 2) {
                which = check_args[0];
                input_spec = check_args[1];
                static const std::vector<std::string> known{"conformal", "helly", "hhelly",
                                                            "hblg", "all"};
                if (std::find(known.begin(), known.end(), which) == known.end())
                    throw std::runtime_error("check: unknown property '" + which + "'");
            } else {
                input_spec = check_args[0];
            }
            return cmd_check(input_spec, format, which, all, as_json);
        }
        if (bic->parsed()) return cmd_bicliques(input_spec, format);
        if (lg->parsed()) return cmd_lg(input_spec, format, out_format);
        if (eb->parsed()) return cmd_eb(input_spec, format);
        if (ens->parsed()) return cmd_ensemble(n_min, n_max, ps, count, seed);
        if (vw->parsed()) return cmd_verify_witness(report_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
