#include "ebg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ebg {

Graph Graph::build(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::pair<int, int>> es;
    es.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge " + std::to_string(i) + ": vertex out of range");
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(i) + ": loop at vertex " +
                                        std::to_string(u));
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(es);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": malformed token '" +
                                 std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> pairs;
    std::optional<int> header_n;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "n" && !header_n && pairs.empty()) {
            if (toks.size() != 2)
                throw std::runtime_error("line " + std::to_string(line_no) + ": bad header");
            header_n = parse_int(toks[1], line_no);
            continue;
        }
        if (toks.size() != 2)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'u v', got " + std::to_string(toks.size()) +
                                     " tokens");
        int u = parse_int(toks[0], line_no);
        int v = parse_int(toks[1], line_no);
        if (u == v)
            throw std::runtime_error("line " + std::to_string(line_no) + ": loop at vertex " +
                                     std::to_string(u));
        if (u < 0 || v < 0)
            throw std::runtime_error("line " + std::to_string(line_no) + ": negative vertex id");
        pairs.emplace_back(u, v);
    }
    int n;
    if (header_n) {
        n = *header_n;
    } else {
        n = 0;
        for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
    }
    try {
        return Graph::build(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::runtime_error("graph6: truncated payload");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: invalid byte at position " + std::to_string(pos - 1));
        return c - 63;
    };
    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // '~' escape: 18-bit count (the 36-bit form is out of scope here)
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    std::vector<std::pair<int, int>> pairs;
    int buf = 0, bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                buf = next();
                bits = 6;
            }
            --bits;
            if (buf & (1 << bits)) pairs.emplace_back(row, col);
        }
    }
    while (pos < line.size() && (line[pos] == '\n' || line[pos] == '\r')) ++pos;
    if (pos != line.size()) throw std::runtime_error("graph6: trailing bytes");
    return Graph::build(static_cast<int>(n), pairs);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long n = g.vertex_count();
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        throw std::invalid_argument("graph6: graph too large");
    }
    int buf = 0, bits = 6;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            --bits;
            if (g.adjacent(row, col)) buf |= (1 << bits);
            if (bits == 0) {
                out += static_cast<char>(buf + 63);
                buf = 0;
                bits = 6;
            }
        }
    }
    if (bits != 6) out += static_cast<char>(buf + 63);
    return out;
}

Graph induced(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw std::invalid_argument("induced: vertex out of range");
        to_sub[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges())
        if (to_sub[u] >= 0 && to_sub[v] >= 0) pairs.emplace_back(to_sub[u], to_sub[v]);
    return Graph::build(static_cast<int>(sorted.size()), pairs);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    return Graph::build(g.vertex_count(), pairs);
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_complete_bipartite: vertex out of range");
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 2) return std::nullopt;

    // 2-color by BFS from min(S); a complete bipartite graph with both sides
    // nonempty is connected, so disconnection alone disqualifies.
    std::vector<int> color(g.vertex_count(), -1);
    std::vector<Vertex> queue{sorted[0]};
    color[sorted[0]] = 0;
    auto in_s = [&](Vertex v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex u = queue[qi];
        for (Vertex w : g.neighbors(u)) {
            if (!in_s(w)) continue;
            if (color[w] == -1) {
                color[w] = 1 - color[u];
                queue.push_back(w);
            }
        }
    }
    Bipartition bp;
    for (Vertex v : sorted) {
        if (color[v] == -1) return std::nullopt;  // disconnected
        (color[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
    }
    if (bp.side_a.empty() || bp.side_b.empty()) return std::nullopt;
    for (Vertex a : bp.side_a)
        for (Vertex a2 : bp.side_a)
            if (a < a2 && g.adjacent(a, a2)) return std::nullopt;
    for (Vertex b : bp.side_b)
        for (Vertex b2 : bp.side_b)
            if (b < b2 && g.adjacent(b, b2)) return std::nullopt;
    for (Vertex a : bp.side_a)
        for (Vertex b : bp.side_b)
            if (!g.adjacent(a, b)) return std::nullopt;
    return bp;
}

Graph line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        for (int f = e + 1; f < m; ++f) {
            auto [x, y] = g.edge(f);
            if (u == x || u == y || v == x || v == y) pairs.emplace_back(e, f);
        }
    }
    return Graph::build(m, pairs);
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P∪X with most neighbors in P
    Vertex pivot = -1;
    int best = -1;
    for (const auto* set : {&p, &x})
        for (Vertex u : *set) {
            int cnt = 0;
            for (Vertex v : p)
                if (g.adjacent(u, v)) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
    VertexSet cands;
    for (Vertex v : p)
        if (!g.adjacent(pivot, v)) cands.push_back(v);
    for (Vertex v : cands) {
        VertexSet p2, x2;
        for (Vertex w : p)
            if (g.adjacent(v, w)) p2.push_back(w);
        for (Vertex w : x)
            if (g.adjacent(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet r, p(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) p[v] = v;
    bron_kerbosch(g, r, std::move(p), {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
    int n = g.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || h.degree(cand) != g.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (g.adjacent(next, prev) != h.adjacent(cand, map[prev])) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_isomorphism(g, h, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() > 12 || h.vertex_count() > 12)
        throw std::invalid_argument("is_isomorphic: graphs capped at 12 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return std::nullopt;
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    if (extend_isomorphism(g, h, map, used, 0)) return map;
    return std::nullopt;
}

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return Graph::build(n, std::vector<std::pair<int, int>>(pairs));
}

std::optional<int> suffix_int(std::string_view name, std::size_t from) {
    int value = 0;
    auto sv = name.substr(from);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size()) return std::nullopt;
    return value;
}

}  // namespace

Graph catalog(std::string_view name) {
    // prism: a..f = 0..5, triangles {a,b,c},{d,e,f}, rungs ad,be,cf
    if (name == "prism")
        return from_pairs(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "claw") return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "diamond") return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    if (name == "paw") return from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    if (name.starts_with("btemplate-")) {
        if (auto i = suffix_int(name, 10)) {
            // Case-1 bases: z=0, leaves 1,2,3, then x1=4, x2=5, x3=6.
            switch (*i) {
                case 1:
                    return from_pairs(7, {{0, 1}, {0, 2}, {0, 3}, {4, 2}, {4, 3}, {5, 1}, {5, 3},
                                          {6, 1}, {6, 2}});
                case 2:
                    return from_pairs(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 1}, {5, 1}, {5, 3},
                                          {6, 1}, {6, 2}});
                case 3:
                    return from_pairs(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 1}, {0, 5}, {5, 2},
                                          {6, 1}, {6, 2}});
                case 4:
                    return from_pairs(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 1}, {0, 5}, {5, 2},
                                          {0, 6}, {6, 3}});
                // Case-2 bases: 1,1',2,2',3,3' = 0..5, then x1=6, x2=7, x3=8.
                case 5:
                    return from_pairs(9, {{0, 1}, {0, 3}, {0, 5}, {2, 1}, {2, 3}, {2, 5}, {4, 1},
                                          {4, 3}, {4, 5}, {6, 1}, {6, 2}, {6, 4}, {7, 3}, {7, 0},
                                          {7, 4}, {8, 5}, {8, 0}, {8, 2}});
                case 6:
                    return from_pairs(9, {{0, 1}, {0, 3}, {0, 5}, {2, 1}, {2, 3}, {2, 5}, {4, 1},
                                          {4, 3}, {4, 5}, {6, 1}, {6, 2}, {6, 4}, {7, 3}, {7, 0},
                                          {7, 4}, {8, 4}, {8, 1}, {8, 3}});
                default:;
            }
        }
    } else if (!name.empty() && name[0] == 'C') {
        if (auto k = suffix_int(name, 1); k && *k >= 3) {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v < *k; ++v) pairs.emplace_back(v, (v + 1) % *k);
            return Graph::build(*k, pairs);
        }
    } else if (!name.empty() && name[0] == 'P') {
        if (auto k = suffix_int(name, 1); k && *k >= 1) {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v + 1 < *k; ++v) pairs.emplace_back(v, v + 1);
            return Graph::build(*k, pairs);
        }
    } else if (!name.empty() && name[0] == 'K') {
        auto comma = name.find(',');
        if (comma != std::string_view::npos) {
            int a = 0, b = 0;
            auto sa = name.substr(1, comma - 1);
            auto sb = name.substr(comma + 1);
            auto ra = std::from_chars(sa.data(), sa.data() + sa.size(), a);
            auto rb = std::from_chars(sb.data(), sb.data() + sb.size(), b);
            if (ra.ec == std::errc{} && ra.ptr == sa.data() + sa.size() &&
                rb.ec == std::errc{} && rb.ptr == sb.data() + sb.size() && a >= 1 && b >= 1) {
                std::vector<std::pair<int, int>> pairs;
                for (int u = 0; u < a; ++u)
                    for (int v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
                return Graph::build(a + b, pairs);
            }
        } else if (auto k = suffix_int(name, 1); k && *k >= 1) {
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < *k; ++u)
                for (int v = u + 1; v < *k; ++v) pairs.emplace_back(u, v);
            return Graph::build(*k, pairs);
        }
    }
    throw std::invalid_argument(
        "unknown catalog name '" + std::string(name) +
        "'; valid: prism, claw, diamond, paw, C<k>, K<k>, K<m>,<n>, P<k>, btemplate-<1..6>");
}

std::string to_dot(const Graph& g, std::span<const std::string> labels) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (static_cast<std::size_t>(v) < labels.size())
            out += " [label=\"" + labels[v] + "\"]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w > v && g.adjacent(v, w)) return true;
    return false;
}

}  // namespace ebg
