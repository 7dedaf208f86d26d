#include "ebg/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ebg {

Hypergraph make_hypergraph(int universe, std::vector<VertexSet> edges) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) throw std::invalid_argument("empty hyperedge");
        if (e.front() < 0 || e.back() >= universe)
            throw std::invalid_argument("hyperedge member out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{universe, std::move(edges)};
}

Hypergraph dual(const Hypergraph& h) {
    std::vector<VertexSet> xs;
    for (int v = 0; v < h.universe; ++v) {
        VertexSet xv;
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), v))
                xv.push_back(static_cast<int>(i));
        if (!xv.empty()) xs.push_back(std::move(xv));
    }
    return make_hypergraph(static_cast<int>(h.edges.size()), std::move(xs));
}

Graph two_section(const Hypergraph& h) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace_back(e[i], e[j]);
    return Graph::build(h.universe, pairs);
}

namespace {

bool intersects(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return false;
}

}  // namespace

Graph hyper_line_graph(const Hypergraph& h) {
    int k = static_cast<int>(h.edges.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (intersects(h.edges[i], h.edges[j])) pairs.emplace_back(i, j);
    return Graph::build(k, pairs);
}

Hypergraph reduction(const Hypergraph& h) {
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < h.edges.size() && maximal; ++j)
            if (i != j && h.edges[i] != h.edges[j] &&
                std::includes(h.edges[j].begin(), h.edges[j].end(), h.edges[i].begin(),
                              h.edges[i].end()))
                maximal = false;
        if (maximal) keep.push_back(h.edges[i]);
    }
    return make_hypergraph(h.universe, std::move(keep));
}

bool is_reduced(const Hypergraph& h) {
    return reduction(h).edges == h.edges;
}

HellyVerdict is_helly(const Hypergraph& h) {
    // For every vertex triple, the hyperedges containing at least two of the
    // three must share a common vertex.
    std::vector<VertexSet> occ(h.universe);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) occ[v].push_back(static_cast<int>(i));

    for (int a = 0; a < h.universe; ++a)
        for (int b = a + 1; b < h.universe; ++b)
            for (int c = b + 1; c < h.universe; ++c) {
                std::vector<int> family;
                for (std::size_t i = 0; i < h.edges.size(); ++i) {
                    const auto& e = h.edges[i];
                    int hits = std::binary_search(e.begin(), e.end(), a) +
                               std::binary_search(e.begin(), e.end(), b) +
                               std::binary_search(e.begin(), e.end(), c);
                    if (hits >= 2) family.push_back(static_cast<int>(i));
                }
                if (family.size() < 2) continue;
                VertexSet common = h.edges[family[0]];
                for (std::size_t fi = 1; fi < family.size() && !common.empty(); ++fi) {
                    VertexSet next;
                    std::set_intersection(common.begin(), common.end(),
                                          h.edges[family[fi]].begin(), h.edges[family[fi]].end(),
                                          std::back_inserter(next));
                    common = std::move(next);
                }
                if (common.empty())
                    return {false, SubfamilyWitness{std::move(family)}};
            }
    return {true, std::nullopt};
}

ConformalVerdict is_conformal(const Hypergraph& h) {
    auto cliques = maximal_cliques(two_section(h));
    for (const auto& c : cliques) {
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

Hypergraph clique_hypergraph(const Graph& g) {
    return make_hypergraph(g.vertex_count(), maximal_cliques(g));
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<int> universe;
    std::vector<VertexSet> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (!universe) {
            if (toks.size() != 2 || toks[0] != "N")
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected header 'N <universe>'");
            universe = std::stoi(toks[1]);
            continue;
        }
        VertexSet e;
        for (const auto& tok : toks) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": malformed token '" + tok + "'");
            e.push_back(v);
        }
        edges.push_back(std::move(e));
    }
    if (!universe) throw std::runtime_error("missing 'N <universe>' header");
    try {
        return make_hypergraph(*universe, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string to_hypergraph_text(const Hypergraph& h) {
    std::string out = "N " + std::to_string(h.universe) + "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace ebg
