#include "ebg/blg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebg {

bool edges_adjacent(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) throw std::invalid_argument("edges_adjacent: e == f");
    auto [u, v] = g.edge(e);
    auto [x, y] = g.edge(f);
    if (u == x) return !g.adjacent(v, y);
    if (u == y) return !g.adjacent(v, x);
    if (v == x) return !g.adjacent(u, y);
    if (v == y) return !g.adjacent(u, x);
    // disjoint endpoints: adjacent iff {u,v,x,y} induces a four-cycle
    bool ux = g.adjacent(u, x), uy = g.adjacent(u, y);
    bool vx = g.adjacent(v, x), vy = g.adjacent(v, y);
    return (ux && vy && !uy && !vx) || (uy && vx && !ux && !vy);
}

LabeledLineGraph biclique_line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (edges_adjacent(g, e, f)) pairs.emplace_back(e, f);
    LabeledLineGraph out;
    out.graph = Graph::build(m, pairs);
    for (auto [u, v] : g.edges())
        out.labels.push_back(std::to_string(u) + "-" + std::to_string(v));
    return out;
}

namespace {

struct KrauszSearch {
    const Graph& h;
    std::vector<bool> covered;        // by EdgeId of h
    std::vector<std::vector<int>> parts;
    std::vector<int> part_count;      // parts containing each vertex

    explicit KrauszSearch(const Graph& g)
        : h(g), covered(g.edge_count(), false), part_count(g.vertex_count(), 0) {}

    bool cover_edge_ok(int u, int v) const { return !covered[h.edge_id(u, v)]; }

    void apply(const std::vector<int>& s) {
        parts.push_back(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            ++part_count[s[i]];
            for (std::size_t j = i + 1; j < s.size(); ++j)
                covered[h.edge_id(s[i], s[j])] = true;
        }
    }

    void undo(const std::vector<int>& s) {
        parts.pop_back();
        for (std::size_t i = 0; i < s.size(); ++i) {
            --part_count[s[i]];
            for (std::size_t j = i + 1; j < s.size(); ++j)
                covered[h.edge_id(s[i], s[j])] = false;
        }
    }

    void grow(std::vector<int>& clique, const std::vector<int>& pool, std::size_t from,
              std::vector<std::vector<int>>& out) {
        out.push_back(clique);
        for (std::size_t i = from; i < pool.size(); ++i) {
            int w = pool[i];
            bool ok = true;
            for (int c : clique)
                if (!h.adjacent(c, w) || !cover_edge_ok(c, w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(w);
            grow(clique, pool, i + 1, out);
            clique.pop_back();
        }
    }

    bool solve(std::optional<RootGraph>& result) {
        int first = -1;
        for (int e = 0; e < h.edge_count(); ++e)
            if (!covered[e]) {
                first = e;
                break;
            }
        if (first == -1) return finalize(result);

        auto [u, v] = h.edge(first);
        if (part_count[u] >= 2 || part_count[v] >= 2) return false;

        std::vector<int> pool;
        for (int w : h.neighbors(u))
            if (w != v && h.adjacent(v, w) && part_count[w] < 2 && cover_edge_ok(u, w) &&
                cover_edge_ok(v, w))
                pool.push_back(w);

        std::vector<std::vector<int>> exts;
        std::vector<int> clique;
        grow(clique, pool, 0, exts);
        std::stable_sort(exts.begin(), exts.end(), [](const auto& a, const auto& b) {
            return a.size() > b.size();
        });
        for (const auto& ext : exts) {
            std::vector<int> s{u, v};
            s.insert(s.end(), ext.begin(), ext.end());
            std::sort(s.begin(), s.end());
            apply(s);
            if (solve(result)) return true;
            undo(s);
        }
        return false;
    }

    bool finalize(std::optional<RootGraph>& result) {
        int n = h.vertex_count();
        std::vector<std::pair<int, int>> incident(n, {-1, -1});
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (int v : parts[p])
                (incident[v].first == -1 ? incident[v].first : incident[v].second) =
                    static_cast<int>(p);
        int extra = static_cast<int>(parts.size());
        for (int v = 0; v < n; ++v) {
            if (incident[v].first == -1) incident[v].first = extra++;
            if (incident[v].second == -1) incident[v].second = extra++;
        }
        // distinct vertices must not map to the same root edge
        std::vector<std::pair<int, int>> root_edges;
        for (int v = 0; v < n; ++v) {
            auto [p, q] = incident[v];
            root_edges.emplace_back(std::min(p, q), std::max(p, q));
        }
        auto sorted = root_edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

        Graph root = Graph::build(extra, root_edges);
        std::vector<EdgeId> edge_map(n);
        for (int v = 0; v < n; ++v)
            edge_map[v] = root.edge_id(root_edges[v].first, root_edges[v].second);
        result = RootGraph{std::move(root), std::move(edge_map)};
        return true;
    }
};

}  // namespace

std::optional<RootGraph> root_graph(const Graph& h) {
    if (h.vertex_count() > 20)
        throw std::invalid_argument("root_graph: capped at 20 vertices");
    KrauszSearch search(h);
    std::optional<RootGraph> result;
    search.solve(result);
    return result;
}

bool verify_f_decomposition(const Graph& h, const EdgeSet& f, const Graph& g,
                            const std::vector<EdgeId>& edge_map) {
    int n = h.vertex_count();
    if (static_cast<int>(edge_map.size()) != n || n != g.edge_count())
        throw std::invalid_argument("verify_f_decomposition: edge_map is not a bijection");
    std::vector<bool> seen(g.edge_count(), false);
    for (EdgeId e : edge_map) {
        if (e < 0 || e >= g.edge_count() || seen[e])
            throw std::invalid_argument("verify_f_decomposition: edge_map is not a bijection");
        seen[e] = true;
    }
    std::vector<bool> in_f(h.edge_count(), false);
    for (EdgeId e : f) {
        if (e < 0 || e >= h.edge_count())
            throw std::invalid_argument("verify_f_decomposition: F is not a subset of E(H)");
        in_f[e] = true;
    }

    if (has_triangle(g)) return false;

    auto hf_adjacent = [&](int a, int b) {
        EdgeId e = h.edge_id(a, b);
        return e >= 0 && !in_f[e];
    };

    // H - F must be L(G) under edge_map
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto [u, v] = g.edge(edge_map[a]);
            auto [x, y] = g.edge(edge_map[b]);
            bool share = (u == x || u == y || v == x || v == y);
            if (hf_adjacent(a, b) != share) return false;
        }

    // (i) both diagonals of every induced four-cycle of H - F lie in F
    // (ii) every F edge closes such a four-cycle
    auto diagonal_in_f = [&](int a, int c) {
        EdgeId e = h.edge_id(a, c);
        return e >= 0 && in_f[e];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = a + 1; c < n; ++c)
                for (int d = b + 1; d < n; ++d) {
                    if (a == b || a == d || c == b || c == d) continue;
                    if (hf_adjacent(a, b) && hf_adjacent(b, c) && hf_adjacent(c, d) &&
                        hf_adjacent(d, a) && !hf_adjacent(a, c) && !hf_adjacent(b, d)) {
                        if (!diagonal_in_f(a, c) || !diagonal_in_f(b, d)) return false;
                    }
                }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (!in_f[e]) continue;
        auto [a, c] = h.edge(e);
        bool closed = false;
        for (int b = 0; b < n && !closed; ++b) {
            if (b == a || b == c || !hf_adjacent(a, b) || !hf_adjacent(b, c)) continue;
            for (int d = 0; d < n && !closed; ++d) {
                if (d == a || d == b || d == c) continue;
                if (hf_adjacent(c, d) && hf_adjacent(d, a) && diagonal_in_f(b, d) &&
                    !hf_adjacent(b, d))
                    closed = true;
            }
        }
        if (!closed) return false;
    }

    // the theorem then gives H = L_G; check it rather than trust it
    auto lg = biclique_line_graph(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((h.edge_id(a, b) >= 0) != lg.graph.adjacent(edge_map[a], edge_map[b]))
                throw std::logic_error("verify_f_decomposition: conditions hold but H != L_G");
    return true;
}

EmbeddedHost embed_apex(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    for (int u = 0; u < n; ++u) pairs.emplace_back(u, n);
    Graph host = Graph::build(n + 1, pairs);
    EdgeSet designated;
    for (int u = 0; u < n; ++u) designated.push_back(host.edge_id(u, n));
    std::sort(designated.begin(), designated.end());
    return {std::move(host), std::move(designated)};
}

EmbeddedHost embed_double(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges()) {
        pairs.emplace_back(u, v);
        pairs.emplace_back(n + u, n + v);
    }
    for (int u = 0; u < n; ++u) pairs.emplace_back(u, n + u);
    Graph host = Graph::build(2 * n, pairs);
    EdgeSet designated;
    for (int u = 0; u < n; ++u) designated.push_back(host.edge_id(u, n + u));
    std::sort(designated.begin(), designated.end());
    return {std::move(host), std::move(designated)};
}

}  // namespace ebg
