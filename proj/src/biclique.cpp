#include "ebg/biclique.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebg {

VertexSet Biclique::vertices() const {
    VertexSet all;
    std::merge(side_a.begin(), side_a.end(), side_b.begin(), side_b.end(),
               std::back_inserter(all));
    return all;
}

std::vector<Biclique> enumerate_bicliques(const Graph& g) {
    // Pairs (A,B) inducing a complete bipartite subgraph are exactly the
    // cliques of the double graph on V x {0,1}: same-layer copies adjacent iff
    // non-adjacent in g, cross copies adjacent iff adjacent in g. Maximal
    // cliques with both layers nonempty are the maximal bicliques (twice,
    // once per orientation).
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) {
                pairs.emplace_back(u, n + v);
                pairs.emplace_back(v, n + u);
            } else {
                pairs.emplace_back(u, v);
                pairs.emplace_back(n + u, n + v);
            }
        }
    Graph doubled = Graph::build(2 * n, pairs);

    std::vector<Biclique> out;
    for (const auto& clique : maximal_cliques(doubled)) {
        Biclique b;
        for (int v : clique) (v < n ? b.side_a : b.side_b).push_back(v < n ? v : v - n);
        if (b.side_a.empty() || b.side_b.empty()) continue;
        if (b.side_b.front() < b.side_a.front()) std::swap(b.side_a, b.side_b);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Biclique& x, const Biclique& y) {
        return x.vertices() < y.vertices();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EBHypergraph eb_hypergraph(const Graph& g) {
    auto bicliques = enumerate_bicliques(g);
    std::vector<std::pair<VertexSet, Biclique>> entries;
    for (auto& b : bicliques) {
        EdgeSet ids;
        for (int a : b.side_a)
            for (int bb : b.side_b) ids.push_back(g.edge_id(a, bb));
        std::sort(ids.begin(), ids.end());
        entries.emplace_back(std::move(ids), std::move(b));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<VertexSet> hyperedges;
    std::vector<Biclique> back;
    for (auto& [ids, b] : entries) {
        hyperedges.push_back(std::move(ids));
        back.push_back(std::move(b));
    }
    return EBHypergraph{make_hypergraph(g.edge_count(), std::move(hyperedges)), std::move(back)};
}

}  // namespace ebg
