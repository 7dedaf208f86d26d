// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier sweeps are memoized across graphs but always bottom out in
// the same oracle calls the unit tests validate.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ebg/biclique.hpp"
#include "ebg/blg.hpp"
#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"
#include "ebg/oracle.hpp"
#include "ebg/recognition.hpp"

using namespace ebg;
using Clock = std::chrono::steady_clock;

namespace {

bool all_pass = true;

void report(int num, const std::string& name, bool pass, double seconds) {
    std::printf("criterion %d: %s - %s (%.1fs)\n", num, pass ? "PASS" : "FAIL", name.c_str(),
                seconds);
    std::fflush(stdout);
    all_pass = all_pass && pass;
}

Graph mask_graph(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> es;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (mask & (1u << k)) es.emplace_back(u, v);
    return Graph::build(n, es);
}

int pair_count(int n) { return n * (n - 1) / 2; }

// bit index of pair (u, v), u < v, in the mask_graph convention
int pair_bit(int n, int u, int v) {
    int k = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++k)
            if (a == u && b == v) return k;
    return -1;
}

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
    Graph prism = catalog("prism");
    auto eb = eb_hypergraph(prism);
    if (eb.bicliques.size() != 3) return false;
    if (eb.bicliques[0].vertices() != VertexSet{0, 1, 3, 4}) return false;
    if (eb.bicliques[1].vertices() != VertexSet{0, 2, 3, 5}) return false;
    if (eb.bicliques[2].vertices() != VertexSet{1, 2, 4, 5}) return false;
    if (eb.hypergraph.edges !=
        std::vector<VertexSet>{{0, 2, 4, 6}, {1, 2, 5, 7}, {3, 4, 5, 8}})
        return false;
    if (!is_isomorphic(hyper_line_graph(eb.hypergraph), catalog("K3"))) return false;
    Graph lg = biclique_line_graph(prism).graph;
    if (lg.vertex_count() != 9 || lg.edge_count() != 18) return false;
    std::vector<VertexSet> adj{{2, 4, 6}, {2, 5, 7}, {0, 1, 4, 5, 6, 7},
                               {4, 5, 8}, {0, 2, 3, 5, 6, 8}, {1, 2, 3, 4, 7, 8},
                               {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
    for (int v = 0; v < 9; ++v)
        if (lg.neighbors(v) != adj[v]) return false;
    return maximal_cliques(lg) ==
           std::vector<VertexSet>{{0, 2, 4, 6}, {1, 2, 5, 7}, {2, 4, 5}, {3, 4, 5, 8}};
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    if (!is_isomorphic(biclique_line_graph(catalog("C4")).graph, catalog("K4"))) return false;
    if (!is_isomorphic(biclique_line_graph(catalog("C5")).graph, catalog("C5"))) return false;
    Graph lk3 = biclique_line_graph(catalog("K3")).graph;
    return lk3.vertex_count() == 3 && lk3.edge_count() == 0;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    std::vector<Graph> forbidden{catalog("claw"), catalog("diamond"), catalog("C4")};
    for (int n = 0; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask) {
            Graph g = mask_graph(n, mask);
            if (g.edge_count() != 4) continue;  // the three targets have 4 L_G vertices
            Graph lg = biclique_line_graph(g).graph;
            for (const Graph& f : forbidden)
                if (is_isomorphic(lg, f)) return false;
        }
    return true;
}

// ---------------------------------------------------------------- criterion 4

bool check_triangle_abc(const Graph& g) {
    auto eb = eb_hypergraph(g);
    Graph lg = biclique_line_graph(g).graph;
    // (a) pairwise construction equals the 2-section of EB
    if (!(lg == two_section(eb.hypergraph))) return false;
    // (b) hyperedges are maximal cliques of L_G; set equality iff prism-free
    auto cliques = maximal_cliques(lg);
    if (g.edge_count() > 0) {
        for (const auto& e : eb.hypergraph.edges)
            if (!std::binary_search(cliques.begin(), cliques.end(), e)) return false;
        bool equal = cliques == eb.hypergraph.edges;
        if (equal != is_eb_conformal(g).answer) return false;
    }
    // (c) Helly three ways
    bool fast = is_eb_helly(g).answer;
    if (fast != oracle::brute_helly(eb.hypergraph).helly) return false;
    if (fast != is_clique_helly(lg).answer) return false;
    return true;
}

bool criterion4_abc() {
    for (int n = 0; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask)
            if (!check_triangle_abc(mask_graph(n, mask))) return false;
    oracle::Rng rng(2024);
    std::uniform_int_distribution<int> pick_n(6, 8);
    const double ps[3] = {0.2, 0.4, 0.6};
    for (int i = 0; i < 510; ++i) {
        Graph g = oracle::random_graph(pick_n(rng.engine), ps[i % 3], rng);
        if (!check_triangle_abc(g)) return false;
    }
    return true;
}

// Exhaustive hereditary-Helly comparison through n = 7. The brute side is the
// oracle definition, memoized per isomorphic-labeled induced subgraph: a table
// per vertex count k maps the edge bitmask of a k-vertex graph to the brute
// EB-Helly answer, and hereditary status follows by deleting one vertex at a
// time. The memo is spot-checked against brute_hereditary_helly directly.
struct HereditaryMemo {
    // del_bits[k][v][j] = bit in the k-mask for bit j of the (k-1)-mask after
    // deleting vertex v
    std::vector<std::vector<std::vector<int>>> del_bits;
    std::vector<std::vector<std::uint8_t>> hereditary;  // [k][mask]

    explicit HereditaryMemo(int max_n) {
        del_bits.assign(max_n + 1, {});
        hereditary.assign(max_n + 1, {});
        for (int k = 1; k <= max_n; ++k) {
            del_bits[k].assign(k, {});
            for (int v = 0; v < k; ++v) {
                auto keep = [&](int x) { return x < v ? x : x + 1; };
                for (int a = 0; a < k - 1; ++a)
                    for (int b = a + 1; b < k - 1; ++b)
                        del_bits[k][v].push_back(pair_bit(k, keep(a), keep(b)));
            }
        }
        for (int k = 1; k <= max_n; ++k) {
            std::size_t total = 1ull << pair_count(k);
            hereditary[k].assign(total, 0);
            for (std::size_t mask = 0; mask < total; ++mask) {
                bool ok = true;
                for (int v = 0; v < k && ok; ++v) {
                    std::uint32_t sub = 0;
                    const auto& bits = del_bits[k][v];
                    for (std::size_t j = 0; j < bits.size(); ++j)
                        if (mask & (1u << bits[j])) sub |= (1u << j);
                    if (k >= 2 && !hereditary[k - 1][sub]) ok = false;
                }
                if (ok) {
                    Graph g = mask_graph(k, static_cast<std::uint32_t>(mask));
                    Hypergraph eb = [&] {
                        std::vector<VertexSet> hyperedges;
                        for (const auto& b : oracle::brute_bicliques(g)) {
                            EdgeSet ids;
                            for (Vertex a : b.side_a)
                                for (Vertex bb : b.side_b) ids.push_back(g.edge_id(a, bb));
                            hyperedges.push_back(ids);
                        }
                        return make_hypergraph(g.edge_count(), std::move(hyperedges));
                    }();
                    ok = oracle::brute_helly(eb).helly;
                }
                hereditary[k][mask] = ok ? 1 : 0;
            }
        }
    }
};

bool criterion4_d() {
    HereditaryMemo memo(7);
    // memo must equal the plain oracle: exhaustive through n = 4, sampled above
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask)
            if (memo.hereditary[n][mask] !=
                (oracle::brute_hereditary_helly(mask_graph(n, mask)).holds ? 1 : 0))
                return false;
    std::mt19937_64 sample_rng(99);
    for (int i = 0; i < 60; ++i) {
        int n = 6 + (i & 1);
        std::uint32_t mask =
            static_cast<std::uint32_t>(sample_rng() & ((1u << pair_count(n)) - 1));
        if (memo.hereditary[n][mask] !=
            (oracle::brute_hereditary_helly(mask_graph(n, mask)).holds ? 1 : 0))
            return false;
    }
    // recognizer vs oracle, exhaustive for every labeled graph with n <= 7
    for (int n = 1; n <= 7; ++n)
        for (std::size_t mask = 0; mask < (1ull << pair_count(n)); ++mask) {
            Graph g = mask_graph(n, static_cast<std::uint32_t>(mask));
            if (is_eb_hereditary_helly(g).answer != (memo.hereditary[n][mask] != 0))
                return false;
        }
    // random n = 8 spot checks against the direct oracle
    oracle::Rng rng(31337);
    for (int i = 0; i < 25; ++i) {
        Graph g = oracle::random_graph(8, 0.4, rng);
        if (is_eb_hereditary_helly(g).answer != oracle::brute_hereditary_helly(g).holds)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5

bool lemma_non_adjacency(int& qualifying) {
    oracle::Rng rng(401);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(7, 0.5, rng);
        int m = g.edge_count();
        for (EdgeId e = 0; e < m; ++e)
            for (EdgeId f = e + 1; f < m; ++f) {
                auto [a, b] = g.edge(e);
                auto [c, d] = g.edge(f);
                VertexSet s{a, b, c, d};
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                Graph sub = induced(g, s);
                bool bad = has_triangle(sub);
                if (!bad) {
                    // induced P3-complement: some vertex isolated within an
                    // edge-bearing triple
                    for (std::size_t i = 0; i < s.size() && !bad; ++i)
                        for (std::size_t j = i + 1; j < s.size() && !bad; ++j)
                            for (std::size_t k = j + 1; k < s.size() && !bad; ++k) {
                                int deg = sub.adjacent(i, j) + sub.adjacent(i, k) +
                                          sub.adjacent(j, k);
                                if (deg == 1) bad = true;
                            }
                }
                if (bad) {
                    ++qualifying;
                    if (edges_adjacent(g, e, f)) return false;
                }
            }
    }
    return qualifying >= 1000;
}

bool lemma_51(int& qualifying) {
    oracle::Rng rng(409);
    std::uniform_int_distribution<int> pick_n(5, 8);
    for (int trial = 0; trial < 30000 && qualifying < 1000; ++trial) {
        Graph g = oracle::random_graph(pick_n(rng.engine), 0.2, rng);
        if (has_triangle(g) || find_induced(g, catalog("C4"))) continue;
        ++qualifying;
        if (!(biclique_line_graph(g).graph == line_graph(g))) return false;
    }
    return qualifying >= 1000;
}

bool lemma_52(int& qualifying) {
    oracle::Rng rng(419);
    std::uniform_int_distribution<int> pick_n(3, 6);
    for (int trial = 0; trial < 200000 && qualifying < 1000; ++trial) {
        Graph g = oracle::random_graph(pick_n(rng.engine), 0.3, rng);
        Graph lg = biclique_line_graph(g).graph;
        if (has_triangle(complement(lg))) continue;  // independent triple in L_G
        bool k4 = false;
        for (const auto& c : maximal_cliques(lg))
            if (c.size() >= 4) k4 = true;
        if (k4) continue;
        ++qualifying;
        if (!(lg == line_graph(g))) return false;
    }
    return qualifying >= 1000;
}

bool lemma_merge(int& qualifying) {
    oracle::Rng rng(421);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick(0, 6);
    for (int trial = 0; trial < 400000 && qualifying < 1000; ++trial) {
        Graph g = oracle::random_graph(7, 0.5, rng);
        VertexSet b1, b2;
        for (int v = 0; v < 7; ++v) {
            if (coin(rng.engine)) b1.push_back(v);
            if (coin(rng.engine)) b2.push_back(v);
        }
        Vertex x = pick(rng.engine);
        VertexSet isect;
        std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                              std::back_inserter(isect));
        if (isect.empty()) continue;
        auto with_x = [&](VertexSet s) {
            if (!std::binary_search(s.begin(), s.end(), x))
                s.insert(std::lower_bound(s.begin(), s.end(), x), x);
            return s;
        };
        VertexSet uni;
        std::set_union(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(uni));
        if (!is_complete_bipartite(g, uni)) continue;
        if (!is_complete_bipartite(g, with_x(b1)) || !is_complete_bipartite(g, with_x(b2)))
            continue;
        ++qualifying;
        if (!is_complete_bipartite(g, with_x(uni))) return false;
    }
    return qualifying >= 1000;
}

// ---------------------------------------------------------------- criterion 6

bool embeddings_hold(const Graph& g) {
    for (auto emb : {embed_apex(g), embed_double(g)}) {
        Graph got = induced(biclique_line_graph(emb.host).graph,
                            VertexSet(emb.designated.begin(), emb.designated.end()));
        if (!is_isomorphic(got, g)) return false;
    }
    return true;
}

bool criterion6() {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask)
            if (!embeddings_hold(mask_graph(n, mask))) return false;
    oracle::Rng rng(601);
    std::uniform_int_distribution<int> pick_n(6, 7);
    std::uniform_real_distribution<double> pick_p(0.15, 0.85);
    for (int i = 0; i < 200; ++i)
        if (!embeddings_hold(
                oracle::random_graph(pick_n(rng.engine), pick_p(rng.engine), rng)))
            return false;
    return true;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    int qualifying = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << pair_count(n)); ++mask) {
            Graph h = mask_graph(n, mask);
            if (!is_hereditary_blg(h).answer) continue;
            ++qualifying;
            auto r = root_graph(h);
            if (!r) return false;
            if (has_triangle(r->root)) return false;
            if (!verify_f_decomposition(h, {}, r->root, r->edge_map)) return false;
        }
    if (qualifying < 100) return false;
    if (!oracle::search_f_decomposition(catalog("K4"))) return false;
    if (!oracle::search_f_decomposition(catalog("C5"))) return false;
    if (oracle::search_f_decomposition(catalog("claw"))) return false;
    if (oracle::search_f_decomposition(catalog("diamond"))) return false;
    if (oracle::search_f_decomposition(catalog("C4"))) return false;
    return true;
}

// ---------------------------------------------------------------- criterion 8

double time_lg_ms(const Graph& g) {
    double best = 1e18;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = Clock::now();
        auto lg = biclique_line_graph(g);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (lg.graph.vertex_count() != g.edge_count()) return 1e18;
        best = std::min(best, ms);
    }
    return best;
}

bool criterion8() {
    Graph k2020 = catalog("K20,20");
    auto t0 = Clock::now();
    Graph lg = biclique_line_graph(k2020).graph;
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    // L of a complete bipartite graph is complete on its edges
    if (lg.vertex_count() != 400 || lg.edge_count() != 400 * 399 / 2) return false;
    if (ms >= 2000) return false;
    // quadratic scaling with slack: doubling m must stay within ~5x
    double t100 = time_lg_ms(catalog("K10,10"));   // m = 100
    double t200 = time_lg_ms(catalog("K10,20"));   // m = 200
    double t400 = time_lg_ms(k2020);               // m = 400
    double floor_ms = 0.5;  // guard against timer noise on tiny inputs
    if (t200 / std::max(t100, floor_ms) > 6.0) return false;
    if (t400 / std::max(t200, floor_ms) > 6.0) return false;
    return true;
}

template <typename F>
void run(int num, const std::string& name, F&& f) {
    auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = f();
    } catch (const std::exception& e) {
        std::printf("criterion %d: exception: %s\n", num, e.what());
    }
    report(num, name, pass, std::chrono::duration<double>(Clock::now() - t0).count());
}

}  // namespace

int main() {
    run(1, "prism golden pipeline", criterion1);
    run(2, "named line graph identities", criterion2);
    run(3, "claw, diamond, C4 are not biclique line graphs (n <= 6)", criterion3);
    run(4, "oracle equivalence: construction, cliques, Helly", criterion4_abc);
    run(4, "oracle equivalence: hereditary Helly exhaustive n <= 7", criterion4_d);
    run(5, "lemma suites", [] {
        int q1 = 0, q2 = 0, q3 = 0, q4 = 0;
        bool ok = lemma_non_adjacency(q1) && lemma_51(q2) && lemma_52(q3) && lemma_merge(q4);
        std::printf("  qualifying samples: non-adjacency %d, no-triangle-no-C4 %d, "
                    "no-K3bar-no-K4 %d, merge %d\n",
                    q1, q2, q3, q4);
        return ok;
    });
    run(6, "embedding constructions", criterion6);
    run(7, "constructive hereditary biclique line graphs", criterion7);
    run(8, "performance smoke", criterion8);
    return all_pass ? 0 : 1;
}
