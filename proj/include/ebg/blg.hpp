#ifndef EBG_BLG_HPP
#define EBG_BLG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ebg/graph.hpp"

namespace ebg {

/// Two edges are adjacent in the biclique line graph iff they share an
/// endpoint whose other ends are non-adjacent, or their four endpoints are
/// distinct and induce a four-cycle.
bool edges_adjacent(const Graph& g, EdgeId e, EdgeId f);

/// Biclique line graph with its vertex labels: vertex i is EdgeId i of the
/// source, labelled "uv".
struct LabeledLineGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// O(m^2) pairwise construction; equals the 2-section of the edge-biclique
/// hypergraph.
LabeledLineGraph biclique_line_graph(const Graph& g);

/// Root graph of a line graph plus the vertex -> EdgeId correspondence.
struct RootGraph {
    Graph root;
    std::vector<EdgeId> edge_map;  // H-vertex -> EdgeId of root
};

/// Krausz-partition backtracking, first solution in canonical order
/// (larger clique parts tried first). Capped at 20 vertices.
std::optional<RootGraph> root_graph(const Graph& h);

/// Checks that g is triangle-free, h - f equals line_graph(g) under edge_map,
/// every induced four-cycle of h - f has both diagonals in f, and every f edge
/// closes such a four-cycle. When true, h is the biclique line graph of g.
bool verify_f_decomposition(const Graph& h, const EdgeSet& f, const Graph& g,
                            const std::vector<EdgeId>& edge_map);

struct EmbeddedHost {
    Graph host;
    EdgeSet designated;  // EdgeIds of host whose induced image in L_host is g
};

/// Complement of g plus a universal apex vertex; designated edges are the
/// apex edges.
EmbeddedHost embed_apex(const Graph& g);

/// Two disjoint copies of g joined by a perfect matching of rungs; designated
/// edges are the rungs.
EmbeddedHost embed_double(const Graph& g);

}  // namespace ebg

#endif
