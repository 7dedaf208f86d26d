#ifndef EBG_BICLIQUE_HPP
#define EBG_BICLIQUE_HPP

#include <vector>

#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"

namespace ebg {

/// Maximal induced complete bipartite vertex set with its bipartition.
/// Canonical: sides sorted, min vertex in side_a.
struct Biclique {
    VertexSet side_a;
    VertexSet side_b;

    VertexSet vertices() const;
    bool operator==(const Biclique&) const = default;
};

/// All maximal bicliques (both sides nonempty), sorted by vertex set.
/// Isolated vertices belong to no biclique; edgeless graphs yield none.
std::vector<Biclique> enumerate_bicliques(const Graph& g);

/// Hypergraph on the EdgeIds of the source graph; hyperedge k is the edge set
/// of bicliques[k].
struct EBHypergraph {
    Hypergraph hypergraph;
    std::vector<Biclique> bicliques;
};

EBHypergraph eb_hypergraph(const Graph& g);

}  // namespace ebg

#endif
