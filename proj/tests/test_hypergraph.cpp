#include "doctest.h"

#include <stdexcept>

#include "ebg/biclique.hpp"
#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"
#include "ebg/oracle.hpp"

using namespace ebg;

TEST_CASE("make_hypergraph canonicalizes and validates") {
    Hypergraph h = make_hypergraph(3, {{2, 1}, {0, 1}, {1, 2}});
    CHECK(h.edges == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(make_hypergraph(2, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(-1, {}), std::invalid_argument);
}

TEST_CASE("dual") {
    // vertices in no hyperedge are dropped, duplicate classes collapse
    CHECK(dual(make_hypergraph(2, {{0, 1}})) == make_hypergraph(1, {{0}}));
    CHECK(dual(make_hypergraph(2, {{0}, {1}})) == make_hypergraph(2, {{0}, {1}}));
    Hypergraph eb = eb_hypergraph(catalog("prism")).hypergraph;
    CHECK(dual(eb) ==
          make_hypergraph(3, {{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}}));
}

TEST_CASE("two_section") {
    CHECK(two_section(make_hypergraph(3, {{0, 1, 2}})) == catalog("K3"));
    Graph edgeless = two_section(make_hypergraph(3, {{0}, {1}, {2}}));
    CHECK(edgeless.edge_count() == 0);
    CHECK(edgeless.vertex_count() == 3);
}

TEST_CASE("hyper_line_graph") {
    CHECK(hyper_line_graph(make_hypergraph(2, {{0}, {1}})).edge_count() == 0);
    CHECK(hyper_line_graph(make_hypergraph(3, {{0, 1}, {0, 2}, {1, 2}})) == catalog("K3"));
    Hypergraph eb = eb_hypergraph(catalog("prism")).hypergraph;
    CHECK(hyper_line_graph(eb) == catalog("K3"));
}

TEST_CASE("two_section of dual equals hyper line graph when nothing collapses") {
    oracle::Rng rng(11);
    std::uniform_int_distribution<int> size(1, 4);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<VertexSet> edges;
        for (int e = 0; e < 5; ++e) {
            VertexSet s;
            for (int v = 0; v < 6; ++v)
                if (size(rng.engine) == 1) s.push_back(v);
            if (!s.empty()) edges.push_back(s);
        }
        if (edges.empty()) continue;
        Hypergraph h = make_hypergraph(6, edges);
        Hypergraph d = dual(h);
        bool collapsed = false;
        int present = 0;
        for (int v = 0; v < h.universe; ++v)
            for (const auto& e : h.edges)
                if (std::binary_search(e.begin(), e.end(), v)) {
                    ++present;
                    break;
                }
        if ((int)d.edges.size() != present) collapsed = true;
        if (collapsed) continue;
        ++checked;
        CHECK(two_section(d) == hyper_line_graph(h));
    }
    CHECK(checked > 20);
}

TEST_CASE("reduction") {
    CHECK(reduction(make_hypergraph(3, {{0, 1}, {0, 1, 2}})) == make_hypergraph(3, {{0, 1, 2}}));
    CHECK(reduction(make_hypergraph(2, {{0}, {1}, {0, 1}})) == make_hypergraph(2, {{0, 1}}));
    Hypergraph r = make_hypergraph(4, {{0, 1}, {2, 3}});
    CHECK(is_reduced(r));
    CHECK(reduction(r) == r);
    CHECK_FALSE(is_reduced(make_hypergraph(3, {{0}, {0, 1}})));
    CHECK(reduction(reduction(r)) == reduction(r));
}

TEST_CASE("is_helly") {
    auto bad = is_helly(make_hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK_FALSE(bad.helly);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->members == std::vector<int>{0, 1, 2});
    CHECK(is_helly(make_hypergraph(3, {{0, 1, 2}})).helly);
    CHECK(is_helly(make_hypergraph(4, {{0, 1, 2}, {1, 2, 3}, {1, 3}})).helly);
    Hypergraph eb_prism = eb_hypergraph(catalog("prism")).hypergraph;
    auto v = is_helly(eb_prism);
    CHECK_FALSE(v.helly);
    CHECK(v.witness->members == std::vector<int>{0, 1, 2});
    CHECK(is_helly(eb_hypergraph(catalog("P4")).hypergraph).helly);
}

TEST_CASE("helly witness re-verifies") {
    Hypergraph h = eb_hypergraph(catalog("prism")).hypergraph;
    auto v = is_helly(h);
    REQUIRE(v.witness.has_value());
    const auto& members = v.witness->members;
    VertexSet common = h.edges[members[0]];
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& a = h.edges[members[i]];
            const auto& b = h.edges[members[j]];
            VertexSet isect;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(isect));
            CHECK_FALSE(isect.empty());
        }
    for (std::size_t i = 1; i < members.size(); ++i) {
        VertexSet next;
        const auto& e = h.edges[members[i]];
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                              std::back_inserter(next));
        common = next;
    }
    CHECK(common.empty());
}

TEST_CASE("is_helly agrees with brute oracle on random hypergraphs") {
    oracle::Rng rng(23);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<VertexSet> edges;
        for (int e = 0; e < 6; ++e) {
            VertexSet s;
            for (int v = 0; v < 7; ++v)
                if (coin(rng.engine) == 0) s.push_back(v);
            if (!s.empty()) edges.push_back(s);
        }
        if (edges.empty()) continue;
        Hypergraph h = make_hypergraph(7, edges);
        CHECK(is_helly(h).helly == oracle::brute_helly(h).helly);
    }
}

TEST_CASE("is_conformal") {
    CHECK(is_conformal(make_hypergraph(3, {{0, 1, 2}})).conformal);
    auto bad = is_conformal(make_hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK_FALSE(bad.conformal);
    CHECK(bad.clique == VertexSet{0, 1, 2});
    // prism EB: the rung triangle {ad, be, cf} = EdgeIds {2, 4, 5} is uncovered
    auto v = is_conformal(eb_hypergraph(catalog("prism")).hypergraph);
    CHECK_FALSE(v.conformal);
    CHECK(v.clique == VertexSet{2, 4, 5});
    CHECK(is_conformal(eb_hypergraph(catalog("C4")).hypergraph).conformal);
}

TEST_CASE("conformal iff dual is Helly, on covering hypergraphs") {
    // the duality needs every universe vertex inside some hyperedge: an
    // uncovered vertex is a singleton clique of the 2-section that no
    // hyperedge contains, while the dual simply omits it
    oracle::Rng rng(37);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<VertexSet> edges;
        std::vector<bool> covered(6, false);
        for (int e = 0; e < 6; ++e) {
            VertexSet s;
            for (int v = 0; v < 6; ++v)
                if (coin(rng.engine) == 0) {
                    s.push_back(v);
                    covered[v] = true;
                }
            if (!s.empty()) edges.push_back(s);
        }
        for (int v = 0; v < 6; ++v)
            if (!covered[v]) edges.push_back({v});
        Hypergraph h = make_hypergraph(6, edges);
        CHECK(is_conformal(h).conformal == is_helly(dual(h)).helly);
        CHECK(is_conformal(h).conformal == oracle::brute_conformal(h).conformal);
    }
}

TEST_CASE("clique_hypergraph") {
    CHECK(clique_hypergraph(catalog("K3")) == make_hypergraph(3, {{0, 1, 2}}));
    CHECK(clique_hypergraph(catalog("C4")) ==
          make_hypergraph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    CHECK(is_reduced(clique_hypergraph(catalog("prism"))));
}

TEST_CASE("hypergraph text round trip") {
    Hypergraph h = eb_hypergraph(catalog("prism")).hypergraph;
    CHECK(parse_hypergraph(to_hypergraph_text(h)) == h);
    CHECK_THROWS_AS(parse_hypergraph("0 1"), std::runtime_error);
    CHECK_THROWS_AS(parse_hypergraph("N 2\n0 5"), std::runtime_error);
    Hypergraph parsed = parse_hypergraph("N 4\n0 1\n2 3\n");
    CHECK(parsed == make_hypergraph(4, {{0, 1}, {2, 3}}));
}
