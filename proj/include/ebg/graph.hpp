#ifndef EBG_GRAPH_HPP
#define EBG_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ebg {

using Vertex = int;
using EdgeId = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using EdgeSet = std::vector<EdgeId>;    // sorted, duplicate-free

/// Simple undirected graph with dense vertex ids 0..n-1 and a canonical
/// edge indexing: edge list sorted lexicographically, EdgeId i is the i-th pair.
class Graph {
public:
    Graph() = default;

    /// Canonicalizes: collapses duplicates, identifies (u,v) with (v,u).
    /// Throws on loops or out-of-range endpoints.
    static Graph build(int n, std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    std::pair<Vertex, Vertex> edge(EdgeId id) const { return edges_[id]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    /// -1 when uv is not an edge.
    EdgeId edge_id(Vertex u, Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Edge-list text: optional "n <count>" header, body lines "u v",
/// '#' starts a comment, blank lines ignored. Without a header
/// n = 1 + max id (0 for an empty body).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 (offset-63 bytes, 6-bit big-endian chunks of the
/// upper triangle read column by column).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Subgraph induced by S, vertices renumbered 0..|S|-1 in ascending order of S.
/// The new id of old vertex S[i] is i.
Graph induced(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

struct Bipartition {
    VertexSet side_a;  // contains min(S)
    VertexSet side_b;
};

/// Bipartition of G[S] if it is complete bipartite with both sides nonempty;
/// nullopt otherwise. Singletons are rejected.
std::optional<Bipartition> is_complete_bipartite(const Graph& g, const VertexSet& s);

/// Vertex i of the result is EdgeId i of g; adjacency iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// All maximal cliques (isolated vertices count), each sorted, list sorted
/// lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// First adjacency-and-non-adjacency-preserving bijection g -> h in
/// lexicographic search order, or nullopt. Both graphs capped at 12 vertices.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

/// Named graphs with fixed labeling: "prism", "claw", "diamond", "paw",
/// "C<k>", "K<k>", "K<m>,<n>", "P<k>", "btemplate-<i>" (i = 1..6).
Graph catalog(std::string_view name);

std::string to_dot(const Graph& g, std::span<const std::string> labels = {});

bool has_triangle(const Graph& g);

}  // namespace ebg

#endif
