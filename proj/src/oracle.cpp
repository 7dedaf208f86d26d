#include "ebg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ebg::oracle {

std::vector<Biclique> brute_bicliques(const Graph& g) {
    int n = g.vertex_count();
    if (n > 14) throw std::invalid_argument("brute_bicliques: capped at 14 vertices");
    std::vector<std::pair<VertexSet, Bipartition>> found;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (auto bp = is_complete_bipartite(g, s)) found.emplace_back(std::move(s), std::move(*bp));
    }
    std::vector<Biclique> out;
    for (const auto& [s, bp] : found) {
        bool maximal = true;
        for (const auto& [t, tbp] : found)
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(Biclique{bp.side_a, bp.side_b});
    }
    std::sort(out.begin(), out.end(), [](const Biclique& x, const Biclique& y) {
        return x.vertices() < y.vertices();
    });
    return out;
}

namespace {

struct HellySearch {
    const Hypergraph& h;
    std::vector<int> chain;
    std::optional<std::vector<int>> best;

    bool better(const std::vector<int>& cand) const {
        if (!best) return true;
        if (cand.size() != best->size()) return cand.size() < best->size();
        return cand < *best;
    }

    // extends only pairwise-intersecting subfamilies; once a subfamily's
    // common intersection is empty its supersets cannot be minimal, so prune
    void visit(int from, const VertexSet& common) {
        if (best && chain.size() >= best->size()) return;
        for (std::size_t i = from; i < h.edges.size(); ++i) {
            const auto& e = h.edges[static_cast<int>(i)];
            bool meets_all = true;
            for (int j : chain) {
                const auto& other = h.edges[j];
                VertexSet isect;
                std::set_intersection(e.begin(), e.end(), other.begin(), other.end(),
                                      std::back_inserter(isect));
                if (isect.empty()) {
                    meets_all = false;
                    break;
                }
            }
            if (!meets_all) continue;
            VertexSet next;
            std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                                  std::back_inserter(next));
            chain.push_back(static_cast<int>(i));
            if (next.empty()) {
                if (better(chain)) best = chain;
            } else {
                visit(static_cast<int>(i) + 1, next);
            }
            chain.pop_back();
        }
    }
};

}  // namespace

HellyVerdict brute_helly(const Hypergraph& h) {
    if (h.edges.size() > 30) throw std::invalid_argument("brute_helly: capped at 30 hyperedges");
    HellySearch search{h};
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        search.chain = {static_cast<int>(i)};
        search.visit(static_cast<int>(i) + 1, h.edges[i]);
    }
    if (search.best) return {false, SubfamilyWitness{*search.best}};
    return {true, std::nullopt};
}

ConformalVerdict brute_conformal(const Hypergraph& h) {
    if (h.universe > 20) throw std::invalid_argument("brute_conformal: universe capped at 20");
    for (const auto& c : maximal_cliques(two_section(h))) {
        bool covered = false;
        for (const auto& e : h.edges)
            if (std::includes(e.begin(), e.end(), c.begin(), c.end())) {
                covered = true;
                break;
            }
        if (!covered) return {false, c};
    }
    return {true, std::nullopt};
}

namespace {

// EB built from brute_bicliques so the hereditary oracle stays independent of
// the enumeration fast path
Hypergraph brute_eb(const Graph& g) {
    std::vector<VertexSet> hyperedges;
    for (const auto& b : brute_bicliques(g)) {
        EdgeSet ids;
        for (int a : b.side_a)
            for (int bb : b.side_b) ids.push_back(g.edge_id(a, bb));
        hyperedges.push_back(std::move(ids));
    }
    return make_hypergraph(g.edge_count(), std::move(hyperedges));
}

}  // namespace

HereditaryHellyResult brute_hereditary_helly(const Graph& g) {
    int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("brute_hereditary_helly: capped at 10 vertices");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) >= 2) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint32_t mask : masks) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (!brute_helly(brute_eb(induced(g, s))).helly) return {false, s};
    }
    return {true, std::nullopt};
}

std::optional<FDecomposition> search_f_decomposition(const Graph& h) {
    int m = h.edge_count();
    if (m > 20) throw std::invalid_argument("search_f_decomposition: capped at 20 edges");
    std::vector<std::uint32_t> masks(1u << m);
    for (std::uint32_t i = 0; i < masks.size(); ++i) masks[i] = i;
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint32_t mask : masks) {
        std::vector<std::pair<int, int>> keep;
        for (int e = 0; e < m; ++e)
            if (!(mask & (1u << e))) keep.push_back(h.edge(e));
        Graph hf = Graph::build(h.vertex_count(), keep);
        // Whitney: the root is unique up to isomorphism except for triangle
        // components, which the largest-part-first search resolves to K_{1,3};
        // so one root per F decides triangle-freeness
        auto rooted = root_graph(hf);
        if (!rooted || has_triangle(rooted->root)) continue;
        EdgeSet f;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) f.push_back(e);
        if (verify_f_decomposition(h, f, rooted->root, rooted->edge_map))
            return FDecomposition{std::move(f), std::move(rooted->root),
                                  std::move(rooted->edge_map)};
    }
    return std::nullopt;
}

Graph random_graph(int n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng.engine) < p) pairs.emplace_back(u, v);
    return Graph::build(n, pairs);
}

}  // namespace ebg::oracle
