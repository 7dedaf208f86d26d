#include "ebg/recognition.hpp"

#include <algorithm>
#include <stdexcept>

#include "ebg/blg.hpp"

namespace ebg {

namespace {

bool extend_induced(const Graph& host, const Graph& pattern, Embedding& map,
                    std::vector<bool>& used, int next) {
    if (next == pattern.vertex_count()) return true;
    for (int cand = 0; cand < host.vertex_count(); ++cand) {
        if (used[cand] || host.degree(cand) < pattern.degree(next)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (pattern.adjacent(next, prev) != host.adjacent(cand, map[prev])) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_induced(host, pattern, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > 10)
        throw std::invalid_argument("find_induced: pattern capped at 10 vertices");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    Embedding map(pattern.vertex_count(), -1);
    std::vector<bool> used(host.vertex_count(), false);
    if (extend_induced(host, pattern, map, used, 0)) return map;
    return std::nullopt;
}

Verdict is_eb_conformal(const Graph& g) {
    if (auto prism = find_induced(g, catalog("prism"))) return {false, prism};
    return {true, std::nullopt};
}

CliqueHellyVerdict is_clique_helly(const Graph& h, bool use_brute) {
    if (use_brute) {
        auto verdict = is_helly(clique_hypergraph(h));
        return {verdict.helly, std::nullopt, verdict.witness};
    }
    int n = h.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!h.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!h.adjacent(a, c) || !h.adjacent(b, c)) continue;
                VertexSet ext;
                for (int v = 0; v < n; ++v) {
                    int hits = (v == a || h.adjacent(v, a)) + (v == b || h.adjacent(v, b)) +
                               (v == c || h.adjacent(v, c));
                    if (v == a || v == b || v == c) hits -= 1;  // self counted above
                    if (hits >= 2) ext.push_back(v);
                }
                bool universal = false;
                for (int u : ext) {
                    bool all = true;
                    for (int v : ext)
                        if (v != u && !h.adjacent(u, v)) {
                            all = false;
                            break;
                        }
                    if (all) {
                        universal = true;
                        break;
                    }
                }
                if (!universal) return {false, ext, std::nullopt};
            }
        }
    return {true, std::nullopt, std::nullopt};
}

CliqueHellyVerdict is_eb_helly(const Graph& g) {
    return is_clique_helly(biclique_line_graph(g).graph);
}

namespace {

bool complete_bipartite_set(const Graph& g, VertexSet s) {
    return is_complete_bipartite(g, s).has_value();
}

VertexSet without(const VertexSet& s, std::initializer_list<Vertex> drop) {
    VertexSet out;
    for (Vertex v : s)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
    return out;
}

VertexSet with(VertexSet s, Vertex x) {
    s.insert(std::lower_bound(s.begin(), s.end(), x), x);
    return s;
}

std::optional<std::array<Vertex, 3>> distinct_representatives(
    const std::array<VertexSet, 3>& candidates) {
    for (Vertex x1 : candidates[0])
        for (Vertex x2 : candidates[1]) {
            if (x2 == x1) continue;
            for (Vertex x3 : candidates[2])
                if (x3 != x1 && x3 != x2) return std::array<Vertex, 3>{x1, x2, x3};
        }
    return std::nullopt;
}

}  // namespace

bool verify_b_template(const Graph& g, const BTemplateWitness& w) {
    VertexSet base = w.base;  // role order, not necessarily sorted
    VertexSet members = base;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
    for (Vertex x : w.x)
        if (std::binary_search(members.begin(), members.end(), x)) return false;
    if (w.x[0] == w.x[1] || w.x[0] == w.x[2] || w.x[1] == w.x[2]) return false;

    if (w.kind == 1) {
        if (base.size() != 4) return false;
        // base holds z,1,2,3 in that role order
        Vertex z = w.base[0];
        std::array<Vertex, 3> leaves{w.base[1], w.base[2], w.base[3]};
        for (int i = 0; i < 3; ++i) {
            if (!g.adjacent(z, leaves[i])) return false;
            for (int j = i + 1; j < 3; ++j)
                if (g.adjacent(leaves[i], leaves[j])) return false;
        }
        VertexSet bset{z, leaves[0], leaves[1], leaves[2]};
        std::sort(bset.begin(), bset.end());
        for (int i = 0; i < 3; ++i) {
            if (!complete_bipartite_set(g, with(without(bset, {leaves[i]}), w.x[i]))) return false;
            if (complete_bipartite_set(g, with(bset, w.x[i]))) return false;
        }
        return true;
    }
    if (w.kind == 2) {
        if (base.size() != 6) return false;
        // base holds 1,1',2,2',3,3' in that role order
        std::array<Vertex, 3> un{w.base[0], w.base[2], w.base[4]};
        std::array<Vertex, 3> pr{w.base[1], w.base[3], w.base[5]};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (!g.adjacent(un[i], pr[j])) return false;
                if (i < j && (g.adjacent(un[i], un[j]) || g.adjacent(pr[i], pr[j]))) return false;
            }
        VertexSet bset(w.base);
        std::sort(bset.begin(), bset.end());
        for (int i = 0; i < 3; ++i) {
            if (!complete_bipartite_set(g, with(without(bset, {un[i], pr[i]}), w.x[i])))
                return false;
            if (complete_bipartite_set(g, with(without(bset, {un[i]}), w.x[i]))) return false;
            if (complete_bipartite_set(g, with(without(bset, {pr[i]}), w.x[i]))) return false;
        }
        return true;
    }
    return false;
}

std::optional<BTemplateWitness> find_b_template(const Graph& g) {
    int n = g.vertex_count();

    if (n >= 7) {
        // case 1: induced K_{1,3} base
        for (Vertex z = 0; z < n; ++z) {
            const auto& nb = g.neighbors(z);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    for (std::size_t k = j + 1; k < nb.size(); ++k) {
                        std::array<Vertex, 3> leaves{nb[i], nb[j], nb[k]};
                        if (g.adjacent(leaves[0], leaves[1]) || g.adjacent(leaves[0], leaves[2]) ||
                            g.adjacent(leaves[1], leaves[2]))
                            continue;
                        VertexSet bset{z, leaves[0], leaves[1], leaves[2]};
                        std::sort(bset.begin(), bset.end());
                        std::array<VertexSet, 3> cands;
                        for (int li = 0; li < 3; ++li)
                            for (Vertex x = 0; x < n; ++x) {
                                if (std::binary_search(bset.begin(), bset.end(), x)) continue;
                                if (complete_bipartite_set(g,
                                                           with(without(bset, {leaves[li]}), x)) &&
                                    !complete_bipartite_set(g, with(bset, x)))
                                    cands[li].push_back(x);
                            }
                        if (auto xs = distinct_representatives(cands))
                            return BTemplateWitness{1,
                                                    {z, leaves[0], leaves[1], leaves[2]},
                                                    *xs};
                    }
        }
    }
    if (n >= 9) {
        // case 2: induced K_{3,3} base; the i <-> i' pairing is a perfect
        // matching between the sides
        VertexSet subset;
        auto visit = [&](auto&& self, int from) -> std::optional<BTemplateWitness> {
            if (subset.size() == 6) {
                auto bp = is_complete_bipartite(g, subset);
                if (!bp || bp->side_a.size() != 3) return std::nullopt;
                std::array<Vertex, 3> un{bp->side_a[0], bp->side_a[1], bp->side_a[2]};
                std::array<Vertex, 3> prim{bp->side_b[0], bp->side_b[1], bp->side_b[2]};
                std::array<int, 3> perm{0, 1, 2};
                do {
                    std::array<VertexSet, 3> cands;
                    for (int i = 0; i < 3; ++i) {
                        Vertex p = un[i], pp = prim[perm[i]];
                        for (Vertex x = 0; x < g.vertex_count(); ++x) {
                            if (std::binary_search(subset.begin(), subset.end(), x)) continue;
                            if (complete_bipartite_set(g, with(without(subset, {p, pp}), x)) &&
                                !complete_bipartite_set(g, with(without(subset, {p}), x)) &&
                                !complete_bipartite_set(g, with(without(subset, {pp}), x)))
                                cands[i].push_back(x);
                        }
                    }
                    if (auto xs = distinct_representatives(cands))
                        return BTemplateWitness{
                            2,
                            {un[0], prim[perm[0]], un[1], prim[perm[1]], un[2], prim[perm[2]]},
                            *xs};
                } while (std::next_permutation(perm.begin(), perm.end()));
                return std::nullopt;
            }
            for (int v = from; v < g.vertex_count(); ++v) {
                subset.push_back(v);
                if (auto w = self(self, v + 1)) return w;
                subset.pop_back();
            }
            return std::nullopt;
        };
        if (auto w = visit(visit, 0)) return w;
    }
    return std::nullopt;
}

HereditaryHellyVerdict is_eb_hereditary_helly(const Graph& g) {
    if (auto prism = find_induced(g, catalog("prism"))) return {false, prism, std::nullopt};
    if (auto bt = find_b_template(g)) return {false, std::nullopt, bt};
    return {true, std::nullopt, std::nullopt};
}

HereditaryBlgVerdict is_hereditary_blg(const Graph& h) {
    for (const char* name : {"claw", "diamond", "C4"})
        if (auto emb = find_induced(h, catalog(name))) return {false, name, emb};
    return {true, "", std::nullopt};
}

}  // namespace ebg
